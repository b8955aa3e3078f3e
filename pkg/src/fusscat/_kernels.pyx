# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled dissection search; same algorithm and API as ``_kernels_py``."""

cdef enum:
    MAX_M = 60
    MAX_STACK = 128


cdef class _Search:
    cdef int m
    cdef int top
    cdef bint flags[MAX_M + 1]
    cdef int hist[MAX_M + 1]
    cdef int pend_i[MAX_STACK]
    cdef int pend_j[MAX_STACK]
    cdef int npend
    cdef int diag_i[MAX_STACK]
    cdef int diag_j[MAX_STACK]
    cdef int ndiag
    cdef bint listing
    cdef dict counts
    cdef list found

    def __cinit__(self, int m, allowed, bint listing):
        cdef int s
        if m < 2 or m > MAX_M:
            raise ValueError(f"polygon size must be in 2..{MAX_M}, got {m}")
        self.m = m
        self.top = 0
        self.npend = 0
        self.ndiag = 0
        self.listing = listing
        self.counts = {}
        self.found = []
        for s in range(MAX_M + 1):
            self.flags[s] = False
            self.hist[s] = 0
        for a in allowed:
            s = a
            if s < 3:
                raise ValueError(f"face sizes must be >= 3, got {s}")
            if s <= m:
                self.flags[s] = True
                if s > self.top:
                    self.top = s

    cdef void _leaf(self):
        cdef int a, b, t
        cdef int si[MAX_STACK]
        cdef int sj[MAX_STACK]
        if self.listing:
            # insertion sort of the (small) diagonal stack
            for a in range(self.ndiag):
                si[a] = self.diag_i[a]
                sj[a] = self.diag_j[a]
                b = a
                while b > 0 and (si[b - 1] > si[b] or (si[b - 1] == si[b] and sj[b - 1] > sj[b])):
                    t = si[b]; si[b] = si[b - 1]; si[b - 1] = t
                    t = sj[b]; sj[b] = sj[b - 1]; sj[b - 1] = t
                    b -= 1
            self.found.append(tuple([(si[a], sj[a]) for a in range(self.ndiag)]))
        else:
            key = tuple([self.hist[a] for a in range(3, self.m + 1)])
            self.counts[key] = self.counts.get(key, 0) + 1

    cdef inline void _push(self, int a, int b):
        self.pend_i[self.npend] = a
        self.pend_j[self.npend] = b
        self.npend += 1
        self.diag_i[self.ndiag] = a
        self.diag_j[self.ndiag] = b
        self.ndiag += 1

    cdef inline void _pop(self):
        self.npend -= 1
        self.ndiag -= 1

    cdef void _go(self):
        cdef int i, j
        if self.npend == 0:
            self._leaf()
            return
        self.npend -= 1
        i = self.pend_i[self.npend]
        j = self.pend_j[self.npend]
        self._face(j, i, 1)
        self.pend_i[self.npend] = i
        self.pend_j[self.npend] = j
        self.npend += 1

    cdef void _face(self, int j, int last, int cnt):
        cdef int size = cnt + 1
        cdef int v
        cdef bint gap
        if size >= 3 and self.flags[size]:
            gap = j - last >= 2
            if gap:
                self._push(last, j)
            self.hist[size] += 1
            self._go()
            self.hist[size] -= 1
            if gap:
                self._pop()
        if cnt + 2 > self.top:
            return
        for v in range(last + 1, j):
            gap = v - last >= 2
            if gap:
                self._push(last, v)
            self._face(j, v, cnt + 1)
            if gap:
                self._pop()

    def run(self):
        if self.m == 2:
            self._leaf()
            return
        self.pend_i[0] = 0
        self.pend_j[0] = self.m - 1
        self.npend = 1
        self._go()


def face_histograms(int m, allowed):
    """Count dissections of a convex m-gon by face-size histogram (sizes 3..m)."""
    cdef _Search s = _Search(m, list(allowed), False)
    s.run()
    return s.counts


def diagonal_sets(int m, allowed):
    """Every dissection with faces of allowed sizes, as sorted diagonal tuples, sorted."""
    cdef _Search s = _Search(m, list(allowed), True)
    s.run()
    s.found.sort()
    return s.found

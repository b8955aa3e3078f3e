"""Pure-Python dissection search; mirrors ``_kernels.pyx`` line for line.

The search dissects a chord ``(i, j)`` by picking the face that sits on it:
vertices ``i = u_0 < u_1 < ... < u_k = j`` of an allowed size.  Every gap
``u_{t+1} - u_t >= 2`` becomes a diagonal and a pending chord.  Starting from
the boundary edge ``(m-1, 0)`` this visits each dissection exactly once.
"""

from __future__ import annotations

from typing import Callable, Iterable

MAX_M = 60


def _prepare(m: int, allowed: Iterable[int]) -> tuple[list[bool], int]:
    if m < 2 or m > MAX_M:
        raise ValueError(f"polygon size must be in 2..{MAX_M}, got {m}")
    flags = [False] * (m + 1)
    top = 0
    for s in allowed:
        if s < 3:
            raise ValueError(f"face sizes must be >= 3, got {s}")
        if s <= m:
            flags[s] = True
            top = max(top, s)
    return flags, top


def _search(m: int, flags: list[bool], top: int, on_leaf: Callable[[list[int], list], None]) -> None:
    hist = [0] * (m + 1)
    diags: list[tuple[int, int]] = []
    if m == 2:
        on_leaf(hist, diags)
        return
    pending = [(0, m - 1)]

    def go() -> None:
        if not pending:
            on_leaf(hist, diags)
            return
        i, j = pending.pop()
        face(j, i, 1)
        pending.append((i, j))

    def face(j: int, last: int, cnt: int) -> None:
        # cnt face vertices chosen so far, the highest being ``last``
        size = cnt + 1
        if size >= 3 and flags[size]:
            gap = j - last >= 2
            if gap:
                pending.append((last, j))
                diags.append((last, j))
            hist[size] += 1
            go()
            hist[size] -= 1
            if gap:
                pending.pop()
                diags.pop()
        if cnt + 2 > top:
            return
        for v in range(last + 1, j):
            gap = v - last >= 2
            if gap:
                pending.append((last, v))
                diags.append((last, v))
            face(j, v, cnt + 1)
            if gap:
                pending.pop()
                diags.pop()

    go()


def face_histograms(m: int, allowed: Iterable[int]) -> dict[tuple[int, ...], int]:
    """Count dissections of a convex m-gon by face-size histogram.

    Keys are ``(#faces of size 3, #size 4, ..., #size m)``.
    """
    flags, top = _prepare(m, allowed)
    out: dict[tuple[int, ...], int] = {}

    def leaf(hist: list[int], _diags: list) -> None:
        key = tuple(hist[3:])
        out[key] = out.get(key, 0) + 1

    _search(m, flags, top, leaf)
    return out


def diagonal_sets(m: int, allowed: Iterable[int]) -> list[tuple[tuple[int, int], ...]]:
    """Every dissection with faces of allowed sizes, as sorted diagonal tuples, sorted."""
    flags, top = _prepare(m, allowed)
    out: list[tuple[tuple[int, int], ...]] = []
    _search(m, flags, top, lambda _hist, diags: out.append(tuple(sorted(diags))))
    out.sort()
    return out

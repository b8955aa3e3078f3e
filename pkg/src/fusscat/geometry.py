"""Dissections of a convex polygon by noncrossing diagonals.

Vertices are labeled ``0..m-1`` counterclockwise.  A dissection is identified
by its sorted diagonal list and serializes as ``m=<m>;diags=(i,j),(k,l)``.
The degenerate ``m = 2`` "polygon" (a single edge) has exactly one, empty,
dissection with no faces.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple

from fusscat import kernels
from fusscat.core_math import PartitionType
from fusscat.series import SeedPolynomial

Face = tuple[int, ...]


class Diagonal(NamedTuple):
    i: int
    j: int

    @classmethod
    def checked(cls, a: int, b: int, m: int) -> Diagonal:
        i, j = min(a, b), max(a, b)
        if i < 0 or j >= m:
            raise ValueError(f"diagonal ({a},{b}) has an endpoint outside 0..{m - 1}")
        if j - i < 2 or (i == 0 and j == m - 1):
            raise ValueError(f"({a},{b}) is a boundary edge or a point of the {m}-gon, not a diagonal")
        return cls(i, j)


@dataclass(frozen=True)
class Polygon:
    m: int

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError(f"a polygon needs at least 2 vertices, got {self.m}")

    def edges(self) -> list[tuple[int, int]]:
        if self.m == 2:
            return [(0, 1)]
        return [(v, (v + 1) % self.m) for v in range(self.m)]

    def diagonals(self) -> list[Diagonal]:
        return [
            Diagonal(i, j)
            for i in range(self.m)
            for j in range(i + 2, self.m)
            if not (i == 0 and j == self.m - 1)
        ]


def crosses(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """True when the chords strictly interleave; shared endpoints never cross."""
    (p, q), (r, s) = sorted(a), sorted(b)
    return p < r < q < s or r < p < s < q


def _split_faces(cycle: list[int], diags: list[tuple[int, int]]) -> list[Face]:
    if not diags:
        return [tuple(sorted(cycle))]
    a, b = min(diags)
    p, q = sorted((cycle.index(a), cycle.index(b)))
    left = cycle[p : q + 1]
    right = cycle[q:] + cycle[: p + 1]
    left_set, right_set = set(left), set(right)
    rest = [d for d in diags if d != (a, b)]
    return _split_faces(left, [d for d in rest if d[0] in left_set and d[1] in left_set]) + _split_faces(
        right, [d for d in rest if d[0] in right_set and d[1] in right_set]
    )


@dataclass(frozen=True)
class Dissection:
    m: int
    diagonals: tuple[Diagonal, ...] = ()

    def __post_init__(self) -> None:
        Polygon(self.m)
        diags = sorted({Diagonal.checked(i, j, self.m) for i, j in self.diagonals})
        for a, b in itertools.combinations(diags, 2):
            if crosses(a, b):
                raise ValueError(f"diagonals {tuple(a)} and {tuple(b)} cross")
        object.__setattr__(self, "diagonals", tuple(diags))

    @property
    def polygon(self) -> Polygon:
        return Polygon(self.m)

    @cached_property
    def faces(self) -> list[Face]:
        """Faces as ascending vertex tuples (that is, counterclockwise cycles), sorted."""
        if self.m == 2:
            return []
        return sorted(_split_faces(list(range(self.m)), list(self.diagonals)))

    def serialize(self) -> str:
        return f"m={self.m};diags=" + ",".join(f"({i},{j})" for i, j in self.diagonals)

    __str__ = serialize

    @classmethod
    def parse(cls, text: str) -> Dissection:
        match = _SERIAL.fullmatch(text.strip())
        if not match:
            raise ValueError(f"not a dissection serialization: {text!r}")
        pairs = _PAIR.findall(match.group("diags"))
        if _PAIR.sub("", match.group("diags")).replace(",", "").strip():
            raise ValueError(f"malformed diagonal list in {text!r}")
        return cls(int(match.group("m")), tuple(Diagonal(int(a), int(b)) for a, b in pairs))


_SERIAL = re.compile(r"m=(?P<m>\d+);diags=(?P<diags>.*)")
_PAIR = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def faces(d: Dissection) -> list[Face]:
    return d.faces


def type_of(d: Dissection) -> PartitionType:
    """Partition of ``m - 2`` with one part ``s - 2`` per face of size ``s``."""
    return PartitionType.from_parts(len(f) - 2 for f in d.faces)


def _allowed_sizes(m: int, allowed_piece_sizes: Iterable[int] | None) -> list[int]:
    if allowed_piece_sizes is None:
        return list(range(3, m + 1))
    sizes = sorted(set(allowed_piece_sizes))
    if any(s < 3 for s in sizes):
        raise ValueError(f"piece sizes must be >= 3, got {sizes}")
    return sizes


def enumerate_dissections(m: int, allowed_piece_sizes: Iterable[int] | None = None) -> list[Dissection]:
    """All dissections of the m-gon whose faces have allowed sizes (default: any)."""
    sizes = _allowed_sizes(m, allowed_piece_sizes)
    return [Dissection(m, diags) for diags in kernels.diagonal_sets(m, sizes)]


def count_dissections(m: int, allowed_piece_sizes: Iterable[int] | None = None) -> int:
    sizes = _allowed_sizes(m, allowed_piece_sizes)
    return sum(kernels.face_histograms(m, sizes).values())


def noncrossing_diagonal_sets(m: int) -> Iterator[tuple[Diagonal, ...]]:
    """Every noncrossing subset of the m-gon's diagonals, by include/exclude DFS."""
    diags = Polygon(m).diagonals()
    chosen: list[Diagonal] = []

    def walk(idx: int) -> Iterator[tuple[Diagonal, ...]]:
        if idx == len(diags):
            yield tuple(chosen)
            return
        yield from walk(idx + 1)
        d = diags[idx]
        if not any(crosses(d, c) for c in chosen):
            chosen.append(d)
            yield from walk(idx + 1)
            chosen.pop()

    yield from walk(0)


def enumerate_dissections_unpruned(
    m: int, allowed_piece_sizes: Iterable[int] | None = None
) -> list[Dissection]:
    """Slow reference: filter every noncrossing diagonal set by its face sizes."""
    sizes = set(_allowed_sizes(m, allowed_piece_sizes))
    out = []
    for diags in noncrossing_diagonal_sets(m):
        d = Dissection(m, diags)
        if all(len(f) in sizes for f in d.faces):
            out.append(d)
    out.sort(key=lambda d: d.diagonals)
    return out


def _histogram_to_type(hist: tuple[int, ...]) -> PartitionType:
    # hist[t] counts faces of size t + 3, i.e. parts of size t + 1
    return PartitionType.from_multiplicities({t + 1: c for t, c in enumerate(hist) if c})


def count_by_type(m: int) -> dict[PartitionType, int]:
    if m < 2:
        raise ValueError("m must be at least 2")
    hist = kernels.face_histograms(m, range(3, m + 1))
    table = {_histogram_to_type(h): c for h, c in hist.items()}
    return {lam: table[lam] for lam in sorted(table, key=lambda l: l.multiplicity_vector(m), reverse=True)}


@dataclass(frozen=True)
class ColoredDissection:
    base: Dissection
    coloring: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coloring) != len(self.base.faces):
            raise ValueError("need exactly one color per face")
        if any(c < 1 for c in self.coloring):
            raise ValueError("colors are numbered from 1")

    def valid_for(self, g: SeedPolynomial) -> bool:
        colors = g.colors
        return all(c <= colors.get(len(f) - 1, 0) for f, c in zip(self.base.faces, self.coloring))


def enumerate_colored_dissections(m: int, g: SeedPolynomial) -> Iterator[ColoredDissection]:
    colors = g.colors
    for d in enumerate_dissections(m, g.piece_sizes()):
        choices = [range(1, colors[len(f) - 1] + 1) for f in d.faces]
        for coloring in itertools.product(*choices):
            yield ColoredDissection(d, coloring)


def colored_count(m: int, g: SeedPolynomial) -> int:
    """Colored dissections of the m-gon: each ``(d+1)``-gon face takes one of ``c_d`` colors."""
    colors = g.colors
    total = 0
    for hist, count in kernels.face_histograms(m, sorted(g.piece_sizes())).items():
        weight = count
        for t, k in enumerate(hist):
            if k:
                weight *= colors[t + 2] ** k
        total += weight
    return total

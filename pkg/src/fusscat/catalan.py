"""Catalan-family counts, each paired with a recursion that does not use the closed form."""

from __future__ import annotations

import math
from functools import lru_cache
from dataclasses import dataclass
from typing import Sequence

from fusscat.core_math import (
    binomial,
    exact_div,
    falling_factorial,
    multinomial,
    partitions_with_parts,
)


@dataclass(frozen=True)
class DowndegreeSequence:
    """``counts[i]`` is the number of tree vertices with exactly ``i`` children."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        counts = tuple(self.counts)
        while len(counts) > 1 and counts[-1] == 0:
            counts = counts[:-1]
        object.__setattr__(self, "counts", counts)
        if not counts or any(c < 0 for c in counts):
            raise ValueError(f"invalid downdegree counts {counts}")
        if sum(counts) != self.edges + 1:
            raise ValueError(
                f"infeasible downdegree sequence {counts}: "
                f"{sum(counts)} vertices but {self.edges} edges"
            )

    @property
    def vertices(self) -> int:
        return sum(self.counts)

    @property
    def edges(self) -> int:
        return sum(i * c for i, c in enumerate(self.counts))

    def __getitem__(self, i: int) -> int:
        return self.counts[i] if i < len(self.counts) else 0

    def __str__(self) -> str:
        return ",".join(map(str, self.counts))


def catalan(k: int) -> int:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return exact_div(binomial(2 * k, k), k + 1)


@lru_cache(maxsize=None)
def catalan_by_recursion(k: int) -> int:
    """C_0 = 1, C_{k+1} = sum_i C_i C_{k-i}."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return 1
    return sum(catalan_by_recursion(i) * catalan_by_recursion(k - 1 - i) for i in range(k))


def _check_arity(d: int) -> None:
    if d < 2:
        raise ValueError(f"Fuss-Catalan arity must be >= 2, got {d}")


def fuss_catalan(d: int, k: int) -> int:
    _check_arity(d)
    if k < 0:
        raise ValueError("k must be nonnegative")
    return exact_div(binomial(d * k, k), k * (d - 1) + 1)


@lru_cache(maxsize=None)
def _compositions_product(d: int, parts: int, total: int) -> int:
    # sum over k_1+...+k_parts = total of prod C^{(d)}_{k_i}
    if parts == 0:
        return 1 if total == 0 else 0
    return sum(
        fuss_catalan_by_recursion(d, first) * _compositions_product(d, parts - 1, total - first)
        for first in range(total + 1)
    )


@lru_cache(maxsize=None)
def fuss_catalan_by_recursion(d: int, k: int) -> int:
    """C^{(d)}_0 = 1, C^{(d)}_{k+1} = sum over k_1+...+k_d = k of the d-fold product."""
    _check_arity(d)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return 1
    return _compositions_product(d, d, k - 1)


def super_catalan(n: int) -> int:
    """Number of dissections of a convex (n+2)-gon, as a sum over partitions of n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = 0
    for lam in partitions_with_parts(n, range(1, n + 1)):
        k = lam.k
        total += binomial(n + k, k) * multinomial(k, [kj for _, kj in lam.parts])
    return exact_div(total, n + 1)


def tree_count(r: Sequence[int], n: int) -> int:
    """Plane trees on n+1 vertices with r[j-1] vertices of downdegree j.

    ``r`` is ``(r_1, ..., r_n)``; the leaf count is implied. Trailing zeros may
    be omitted, but ``sum(j * r_j)`` must equal ``n``.
    """
    if n < 0 or any(x < 0 for x in r):
        raise ValueError("downdegree counts must be nonnegative")
    weight = sum(j * rj for j, rj in enumerate(r, start=1))
    if weight != n:
        raise ValueError(f"sum j*r_j = {weight} does not equal n = {n}")
    size = sum(r)
    denominator = n + 1
    for rj in r:
        denominator *= math.factorial(rj)
    return exact_div(falling_factorial(n + 1, size), denominator)


def tree_count_for_sequence(r: DowndegreeSequence | Sequence[int]) -> int:
    """Same count, taking a full downdegree sequence ``(r_0, r_1, ...)``."""
    if not isinstance(r, DowndegreeSequence):
        r = DowndegreeSequence(tuple(r))
    return tree_count(list(r.counts[1:]), r.edges)

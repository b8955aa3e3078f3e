"""Series reversion of ``x = z - sum_d c_d z^d`` by Lagrange inversion.

Index convention: a seed term ``c_d z^d`` corresponds to partition part
``j = d - 1`` and to ``(d+1)``-gon faces.  The reversion is
``z = sum_n a_n x^(n+1)`` with ``a_n`` a sum of per-type counts over
partitions of ``n`` into allowed parts.
"""

from __future__ import annotations

from dataclasses import dataclass

from fusscat.core_math import (
    PartitionType,
    binomial,
    exact_div,
    multinomial,
    partitions_with_parts,
)
from fusscat.series import SeedPolynomial, TruncatedSeries


@dataclass(frozen=True)
class TypeCountTerm:
    lam: PartitionType
    count: int


def type_count(lam: PartitionType) -> int:
    """Dissections of an (n+2)-gon with ``k_j`` faces of size ``j+2``."""
    n, k = lam.n, lam.k
    numerator = binomial(n + k, k) * multinomial(k, [kj for _, kj in lam.parts])
    return exact_div(numerator, n + 1)


def colored_type_count(lam: PartitionType, g: SeedPolynomial) -> int:
    colors = g.colors
    weight = 1
    for j, kj in lam.parts:
        c = colors.get(j + 1, 0)
        if c < 1:
            raise ValueError(f"part size {j} needs a z^{j + 1} term in the seed, which {g} lacks")
        weight *= c**kj
    return type_count(lam) * weight


def colored_terms(g: SeedPolynomial, n: int) -> list[TypeCountTerm]:
    return [
        TypeCountTerm(lam, colored_type_count(lam, g))
        for lam in partitions_with_parts(n, g.part_sizes())
    ]


def reversion_coefficient(g: SeedPolynomial, n: int) -> int:
    """Coefficient ``a_n`` of ``x^(n+1)`` in the reversion of the seed."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(t.count for t in colored_terms(g, n))


def reversion_series(g: SeedPolynomial, order: int) -> TruncatedSeries:
    """``sum_{n<order} a_n x^(n+1)`` as a series of the given order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    return TruncatedSeries.from_coeffs(
        [0] + [reversion_coefficient(g, n) for n in range(order)], order
    )


def decompose_super_catalan(n: int) -> list[TypeCountTerm]:
    """Per-type dissection counts of an (n+2)-gon, over every partition of ``n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [TypeCountTerm(lam, type_count(lam)) for lam in partitions_with_parts(n, range(1, n + 1))]

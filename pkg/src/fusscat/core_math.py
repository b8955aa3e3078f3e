"""Exact integer combinatorics and restricted partition generation."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping


def exact_div(numerator: int, denominator: int) -> int:
    """Integer division that refuses to round."""
    q, r = divmod(numerator, denominator)
    if r:
        raise ArithmeticError(f"{numerator} is not divisible by {denominator}")
    return q


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be nonnegative")
    return math.comb(n, k)


def multinomial(k: int, parts: Iterable[int]) -> int:
    """k! / prod(p! for p in parts); the parts must sum to k."""
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError("multinomial parts must be nonnegative")
    if sum(parts) != k:
        raise ValueError(f"parts {parts} do not sum to {k}")
    result = 1
    remaining = k
    for p in parts:
        result *= math.comb(remaining, p)
        remaining -= p
    return result


def falling_factorial(y: int, k: int) -> int:
    if k < 0 or y < 0:
        raise ValueError("falling_factorial arguments must be nonnegative")
    if k > y:
        raise ValueError(f"falling factorial ({y})_{k} needs k <= y")
    return math.perm(y, k)


@dataclass(frozen=True)
class PartitionType:
    """A partition of ``n`` stored as its multiplicities.

    ``parts`` holds ``(part_size, multiplicity)`` pairs with positive
    multiplicities, largest part first.  Build from a mapping with
    :meth:`from_multiplicities` or from a list of parts with :meth:`from_parts`.
    """

    parts: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        seen = set()
        for j, kj in self.parts:
            if j < 1 or kj < 1:
                raise ValueError(f"invalid part {j} with multiplicity {kj}")
            if j in seen:
                raise ValueError(f"part size {j} listed twice")
            seen.add(j)
        canonical = tuple(sorted(self.parts, reverse=True))
        if canonical != self.parts:
            object.__setattr__(self, "parts", canonical)

    @classmethod
    def from_multiplicities(cls, mult: Mapping[int, int]) -> PartitionType:
        return cls(tuple((j, kj) for j, kj in mult.items() if kj))

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> PartitionType:
        mult: dict[int, int] = {}
        for p in parts:
            mult[p] = mult.get(p, 0) + 1
        return cls.from_multiplicities(mult)

    @classmethod
    def parse(cls, text: str) -> PartitionType:
        """Parse ``"j^k,j^k,..."`` (``"1^2,2^2"`` is 1+1+2+2); bare ``j`` means ``j^1``."""
        text = text.strip()
        mult: dict[int, int] = {}
        if not text:
            return cls(())
        for token in text.split(","):
            token = token.strip()
            base, _, exp = token.partition("^")
            try:
                j = int(base)
                kj = int(exp) if exp else 1
            except ValueError:
                raise ValueError(f"malformed partition token {token!r}") from None
            if j < 1 or kj < 0:
                raise ValueError(f"partition token {token!r}: part sizes must be >= 1 and multiplicities >= 0")
            mult[j] = mult.get(j, 0) + kj
        return cls.from_multiplicities(mult)

    @cached_property
    def multiplicities(self) -> dict[int, int]:
        return dict(self.parts)

    @property
    def n(self) -> int:
        return sum(j * kj for j, kj in self.parts)

    @property
    def k(self) -> int:
        return sum(kj for _, kj in self.parts)

    def as_list(self) -> list[int]:
        """Parts in descending order."""
        return [j for j, kj in self.parts for _ in range(kj)]

    def multiplicity_vector(self, length: int | None = None) -> tuple[int, ...]:
        """``(k_1, k_2, ..., k_length)``; length defaults to ``n``."""
        length = self.n if length is None else length
        m = self.multiplicities
        return tuple(m.get(j, 0) for j in range(1, length + 1))

    def spec_string(self) -> str:
        return ",".join(f"{j}^{kj}" for j, kj in sorted(self.parts))

    def __str__(self) -> str:
        return "+".join(map(str, self.as_list())) or "0"


def _partitions(n: int, sizes: list[int]) -> Iterator[dict[int, int]]:
    # sizes ascending; largest multiplicity of the smallest size first
    if n == 0:
        yield {}
        return
    if not sizes:
        return
    j, rest = sizes[0], sizes[1:]
    for kj in range(n // j, -1, -1):
        for tail in _partitions(n - kj * j, rest):
            if kj:
                tail = {j: kj, **tail}
            yield tail


def partitions_with_parts(n: int, allowed: Iterable[int]) -> list[PartitionType]:
    """Every partition of ``n`` whose part sizes lie in ``allowed``.

    Ordered by the multiplicity vector ``(k_1, k_2, ...)``, lexicographically
    descending, so ``1+1+1`` precedes ``2+1`` precedes ``3``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    allowed = set(allowed)
    if any(a < 1 for a in allowed):
        raise ValueError("part sizes must be positive")
    sizes = sorted(a for a in allowed if a <= n)
    return [PartitionType.from_multiplicities(m) for m in _partitions(n, sizes)]

"""Truncated power series over the integers and seed-polynomial iteration.

A :class:`TruncatedSeries` of order ``N`` holds the coefficients of
``x^0 .. x^N``; anything above ``x^N`` is unknown and discarded.  Binary
operations truncate to the smaller order of the two operands.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a truncated series needs at least the constant term")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], order: int | None = None) -> TruncatedSeries:
        coeffs = list(coeffs)
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            coeffs = (coeffs + [0] * (order + 1))[: order + 1]
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls.from_coeffs([], order)

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls.from_coeffs([1], order)

    @classmethod
    def monomial(cls, degree: int, order: int, coeff: int = 1) -> TruncatedSeries:
        if degree > order:
            return cls.zero(order)
        return cls.from_coeffs([0] * degree + [coeff], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_add(self, other)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_add(self, -other)

    def __mul__(self, other: TruncatedSeries | int) -> TruncatedSeries:
        if isinstance(other, int):
            return TruncatedSeries(tuple(other * c for c in self.coeffs))
        return series_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, d: int) -> TruncatedSeries:
        return series_pow(self, d)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{mono}")
        body = " + ".join(terms).replace("+ -", "- ") or "0"
        return f"{body} + O(x^{self.order + 1})"


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries(tuple(a.coeffs[i] + b.coeffs[i] for i in range(n + 1)))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    out = [0] * (n + 1)
    for i, ai in enumerate(a.coeffs[: n + 1]):
        if not ai:
            continue
        for j in range(n + 1 - i):
            out[i + j] += ai * b.coeffs[j]
    return TruncatedSeries(tuple(out))


def series_pow(a: TruncatedSeries, d: int) -> TruncatedSeries:
    if d < 0:
        raise ValueError("negative powers are not supported")
    result = TruncatedSeries.one(a.order)
    base = a
    while d:
        if d & 1:
            result = series_mul(result, base)
        d >>= 1
        if d:
            base = series_mul(base, base)
    return result


@dataclass(frozen=True)
class SeedPolynomial:
    """The polynomial ``x = z - sum_d c_d z^d``, stored as ``(d, c_d)`` pairs.

    ``c_d`` is the number of colors available for a ``(d+1)``-gon face.
    """

    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        seen = set()
        for d, c in self.terms:
            if d < 2:
                raise ValueError(f"seed degree must be >= 2, got {d}")
            if c < 1:
                raise ValueError(f"color multiplicity must be >= 1, got {c} for degree {d}")
            if d in seen:
                raise ValueError(f"degree {d} listed twice")
            seen.add(d)
        object.__setattr__(self, "terms", tuple(sorted(self.terms)))

    @classmethod
    def from_mapping(cls, colors: Mapping[int, int]) -> SeedPolynomial:
        return cls(tuple((d, c) for d, c in colors.items() if c))

    @classmethod
    def parse(cls, text: str) -> SeedPolynomial:
        """Parse ``"d:c[,d:c...]"``, e.g. ``"2:1,3:1"`` for ``x = z - z^2 - z^3``."""
        text = text.strip()
        if not text:
            return cls(())
        colors: dict[int, int] = {}
        for token in text.split(","):
            d_str, sep, c_str = token.strip().partition(":")
            try:
                d, c = int(d_str), int(c_str) if sep else 1
            except ValueError:
                raise ValueError(f"malformed seed term {token!r}; expected d:c") from None
            if d in colors:
                raise ValueError(f"degree {d} listed twice in seed {text!r}")
            colors[d] = c
        return cls(tuple(colors.items()))

    @cached_property
    def colors(self) -> dict[int, int]:
        return dict(self.terms)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.terms)

    def piece_sizes(self) -> set[int]:
        """Face sizes (number of polygon vertices) this seed allows."""
        return {d + 1 for d in self.support}

    def part_sizes(self) -> set[int]:
        """Partition part sizes this seed allows; a ``(j+2)``-gon face is part ``j``."""
        return {d - 1 for d in self.support}

    def spec_string(self) -> str:
        return ",".join(f"{d}:{c}" for d, c in self.terms)

    def __str__(self) -> str:
        body = "".join(
            f" - {'' if c == 1 else c}z^{d}" for d, c in self.terms
        )
        return f"x = z{body}"


def apply_seed(g: SeedPolynomial, z: TruncatedSeries) -> TruncatedSeries:
    """``sum_d c_d z^d + x``, truncated at the order of ``z``."""
    if z.coeffs[0]:
        raise ValueError("seed composition needs a series with zero constant term")
    order = z.order
    out = TruncatedSeries.monomial(1, order)
    for d, c in g.terms:
        out = out + c * series_pow(z, d)
    return out


def iterate_to_fixpoint(g: SeedPolynomial, order: int) -> tuple[TruncatedSeries, int]:
    """Iterate ``z <- apply_seed(g, z)`` from ``z = 0`` until it stops changing.

    Returns the stable series and the number of applications performed,
    including the final one that confirmed stability.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    z = TruncatedSeries.zero(order)
    iterations = 0
    while True:
        nxt = apply_seed(g, z)
        iterations += 1
        if nxt == z:
            return z, iterations
        z = nxt


def verify_functional_equation(z: TruncatedSeries, g: SeedPolynomial) -> bool:
    """True when ``z == sum_d c_d z^d + x`` through the order of ``z``."""
    return (apply_seed(g, z) - z).is_zero()

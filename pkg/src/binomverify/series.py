"""Truncated formal power series in ``x`` with rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from binomverify.exact import (
    PreconditionError,
    _as_fraction,
    _as_int,
    binom_integer,
    binom_rational,
    format_rational,
)


class OrderMismatchError(ValueError):
    """Two series of different orders were combined."""


@dataclass(frozen=True, init=False)
class TruncatedSeries:
    """Coefficients ``c_0 .. c_{N-1}``; ``N`` is the order and is at least 1."""

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable):
        coeffs = tuple(_as_fraction(c) for c in coefficients)
        if not coeffs:
            raise PreconditionError("a truncated series needs order >= 1")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_mul(self, other)

    def __getitem__(self, n: int) -> Fraction:
        return series_coefficient(self, n)

    def truncate(self, order: int) -> TruncatedSeries:
        if not 1 <= order <= self.order:
            raise PreconditionError(f"cannot truncate order {self.order} series to {order}")
        return TruncatedSeries(self.coefficients[:order])

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "coefficients": [format_rational(c) for c in self.coefficients],
        }


def _check_order(order) -> int:
    order = _as_int(order, "order")
    if order < 1:
        raise PreconditionError(f"order must be >= 1, got {order}")
    return order


def newton_binomial_series(alpha, a, order: int) -> TruncatedSeries:
    """First ``order`` coefficients of ``(1 + a x)^alpha``: ``C(alpha, n) a^n``."""
    order = _check_order(order)
    alpha = _as_fraction(alpha)
    a = _as_fraction(a)
    return TruncatedSeries(binom_rational(alpha, n) * a**n for n in range(order))


def series_mul(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product. Orders must match; use :meth:`TruncatedSeries.truncate` first otherwise."""
    if s.order != t.order:
        raise OrderMismatchError(f"series orders differ: {s.order} vs {t.order}")
    sc, tc = s.coefficients, t.coefficients
    return TruncatedSeries(
        sum((sc[i] * tc[n - i] for i in range(n + 1)), Fraction(0)) for n in range(s.order)
    )


def central_binomial_series(order: int) -> TruncatedSeries:
    order = _check_order(order)
    return TruncatedSeries(binom_integer(2 * n, n) for n in range(order))


def series_coefficient(s: TruncatedSeries, n: int) -> Fraction:
    n = _as_int(n, "n")
    if not 0 <= n < s.order:
        raise IndexError(f"coefficient index {n} outside 0..{s.order - 1}")
    return s.coefficients[n]

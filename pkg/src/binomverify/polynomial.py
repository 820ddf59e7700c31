"""Dense univariate polynomials over the rationals.

There is a single indeterminate (written ``l`` in identities). Coefficients are
stored constant term first and trailing zeros are always stripped, so the zero
polynomial has an empty coefficient tuple and degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from binomverify.exact import PreconditionError, _as_fraction, _as_int, format_rational


def _canonical(coefficients: Iterable) -> tuple[Fraction, ...]:
    coeffs = [_as_fraction(c) for c in coefficients]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True, init=False)
class RationalPolynomial:
    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable = ()):
        object.__setattr__(self, "coefficients", _canonical(coefficients))

    @classmethod
    def constant(cls, value) -> RationalPolynomial:
        return cls([value])

    @classmethod
    def indeterminate(cls) -> RationalPolynomial:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_constant(self) -> bool:
        return len(self.coefficients) <= 1

    def __add__(self, other):
        if not isinstance(other, RationalPolynomial):
            other = RationalPolynomial.constant(other)
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(-c for c in self.coefficients)

    def __sub__(self, other):
        if not isinstance(other, RationalPolynomial):
            other = RationalPolynomial.constant(other)
        return poly_add(self, -other)

    def __rsub__(self, other):
        return RationalPolynomial.constant(other) - self

    def __mul__(self, other):
        if not isinstance(other, RationalPolynomial):
            other = RationalPolynomial.constant(other)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        exponent = _as_int(exponent, "exponent")
        if exponent < 0:
            raise PreconditionError("negative polynomial power")
        result = RationalPolynomial.constant(1)
        for _ in range(exponent):
            result = poly_mul(result, self)
        return result

    def __call__(self, point) -> Fraction:
        return poly_eval(self, point)

    def __str__(self) -> str:
        return render_polynomial(self)

    def __repr__(self) -> str:
        return f"RationalPolynomial({render_polynomial(self)})"


def poly_add(a: RationalPolynomial, b: RationalPolynomial) -> RationalPolynomial:
    longer, shorter = (a, b) if len(a.coefficients) >= len(b.coefficients) else (b, a)
    out = list(longer.coefficients)
    for idx, c in enumerate(shorter.coefficients):
        out[idx] += c
    return RationalPolynomial(out)


def poly_mul(a: RationalPolynomial, b: RationalPolynomial) -> RationalPolynomial:
    if a.is_zero() or b.is_zero():
        return RationalPolynomial()
    out = [Fraction(0)] * (len(a.coefficients) + len(b.coefficients) - 1)
    for i, ca in enumerate(a.coefficients):
        if ca == 0:
            continue
        for j, cb in enumerate(b.coefficients):
            out[i + j] += ca * cb
    return RationalPolynomial(out)


def poly_eval(p: RationalPolynomial, point) -> Fraction:
    point = _as_fraction(point)
    acc = Fraction(0)
    for c in reversed(p.coefficients):
        acc = acc * point + c
    return acc


def poly_degree(p: RationalPolynomial) -> int:
    return p.degree


def binom_poly(upper: RationalPolynomial, k: int) -> RationalPolynomial:
    """``C(u, k)`` where the upper argument ``u`` is itself a polynomial."""
    k = _as_int(k, "k")
    if k < 0:
        raise PreconditionError(f"binomial polynomial needs k >= 0, got {k}")
    result = RationalPolynomial.constant(1)
    k_factorial = 1
    for m in range(k):
        result = poly_mul(result, upper - m)
        k_factorial *= m + 1
    return RationalPolynomial(c / k_factorial for c in result.coefficients)


def binom_affine_poly(a, b, k: int) -> RationalPolynomial:
    """Expand ``C(a*l + b, k)`` as a polynomial in ``l``.

    The result has degree exactly ``k`` when ``a != 0`` and is constant otherwise.
    """
    return binom_poly(RationalPolynomial([b, a]), k)


def render_polynomial(p: RationalPolynomial) -> str:
    return "[" + ", ".join(format_rational(c) for c in p.coefficients) + "]"

"""Integer and rational scalars, falling factorials and binomial coefficients."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Union

RationalLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class PreconditionError(ValueError):
    """An argument violates an operation's documented precondition."""


def _as_int(value, name: str) -> int:
    if isinstance(value, bool):
        raise PreconditionError(f"{name} must be an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, Rational) and value.denominator == 1:
        return int(value.numerator)
    raise PreconditionError(f"{name} must be an integer, got {value!r}")


def _as_fraction(value) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, Rational)):
        raise PreconditionError(f"expected an exact rational, got {value!r}")
    return Fraction(value)


def falling_factorial(x: RationalLike, k: int) -> Fraction:
    """Return ``x (x-1) ... (x-k+1)``; the empty product for ``k == 0``."""
    k = _as_int(k, "k")
    if k < 0:
        raise PreconditionError(f"falling factorial needs k >= 0, got {k}")
    x = _as_fraction(x)
    result = Fraction(1)
    for m in range(k):
        result *= x - m
    return result


def binom_rational(x: RationalLike, k: int) -> Fraction:
    """Generalized binomial coefficient ``C(x, k)`` for rational ``x``.

    Zero for negative ``k``.
    """
    k = _as_int(k, "k")
    if k < 0:
        return Fraction(0)
    x = _as_fraction(x)
    num = Fraction(1)
    den = 1
    for m in range(k):
        num *= x - m
        den *= m + 1
    return num / den


def binom_integer(n: int, k: int) -> int:
    """``C(n, k)`` for any integer ``n`` (negative allowed); zero for ``k < 0``."""
    n = _as_int(n, "n")
    k = _as_int(k, "k")
    if k < 0:
        return 0
    num = 1
    den = 1
    for m in range(k):
        num *= n - m
        den *= m + 1
    # den divides num: the product of k consecutive integers is divisible by k!
    return num // den


def pow4(n: int) -> int:
    n = _as_int(n, "n")
    if n < 0:
        raise PreconditionError(f"pow4 needs n >= 0, got {n}")
    return 1 << (2 * n)


def format_rational(value: RationalLike) -> str:
    """Canonical text form: ``"p/q"`` in lowest terms, or ``"p"`` when q == 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (optional sign on p). No decimals, no exponents."""
    match = _RATIONAL_RE.match(text.replace("−", "-"))
    if not match:
        raise ValueError(f"not a rational number: {text!r}")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)

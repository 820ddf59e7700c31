"""Central-binomial convolution identities and every step of their derivation.

Each identity comes in a numeric form (rational ``ell``) and, where it is meant
to hold for every real ``ell``, a polynomial form whose output must collapse to
a constant. The inclusion-exclusion count has a brute-force enumerator and a
closed alternating-sum form so each can check the other.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction

from binomverify.exact import (
    PreconditionError,
    _as_fraction,
    _as_int,
    binom_integer,
    binom_rational,
    format_rational,
    pow4,
)
from binomverify.polynomial import RationalPolynomial, binom_affine_poly, poly_add, poly_mul

DEFAULT_ENUM_CAP = 10**6
ENUM_CAP_ENV = "BINOMVERIFY_ENUM_CAP"


class EnumerationCapError(RuntimeError):
    """The brute-force enumeration would exceed the configured subset cap."""


def _nonneg(value, name: str) -> int:
    value = _as_int(value, name)
    if value < 0:
        raise PreconditionError(f"{name} must be >= 0, got {value}")
    return value


def enumeration_cap() -> int:
    raw = os.environ.get(ENUM_CAP_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_ENUM_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise PreconditionError(f"{ENUM_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 0:
        raise PreconditionError(f"{ENUM_CAP_ENV} must be >= 0, got {cap}")
    return cap


# -- convolutions -----------------------------------------------------------


def central_convolution(n: int) -> int:
    """``sum_{i+j=n} C(2i, i) C(2j, j)``."""
    n = _nonneg(n, "n")
    return sum(binom_integer(2 * i, i) * binom_integer(2 * (n - i), n - i) for i in range(n + 1))


def generalized_convolution_at(n: int, ell) -> Fraction:
    """``sum_{i+j=n} C(2i - ell, i) C(2j + ell, j)`` at a rational ``ell``."""
    n = _nonneg(n, "n")
    ell = _as_fraction(ell)
    total = Fraction(0)
    for i in range(n + 1):
        j = n - i
        total += binom_rational(2 * i - ell, i) * binom_rational(2 * j + ell, j)
    return total


def generalized_convolution_poly(n: int) -> RationalPolynomial:
    """The same sum built symbolically in ``ell``."""
    n = _nonneg(n, "n")
    total = RationalPolynomial()
    for i in range(n + 1):
        j = n - i
        term = poly_mul(binom_affine_poly(-1, 2 * i, i), binom_affine_poly(1, 2 * j, j))
        total = poly_add(total, term)
    return total


def aux_sum_at(p: int, ell) -> Fraction:
    """``sum_{i=0}^{p} (-1)^i C(ell - i, p) C(p, i)``, which is identically 1."""
    p = _nonneg(p, "p")
    ell = _as_fraction(ell)
    return sum(
        ((-1) ** i * binom_rational(ell - i, p) * binom_integer(p, i) for i in range(p + 1)),
        Fraction(0),
    )


def aux_sum_poly(p: int) -> RationalPolynomial:
    p = _nonneg(p, "p")
    total = RationalPolynomial()
    for i in range(p + 1):
        coeff = (-1) ** i * binom_integer(p, i)
        total = poly_add(total, binom_affine_poly(1, -i, p) * coeff)
    return total


# -- inclusion-exclusion ------------------------------------------------------


@dataclass(frozen=True)
class IexInstance:
    """Family of ``(ell - p)``-subsets of ``{1..ell}`` with ``A_j`` = members containing ``j``."""

    ell: int
    p: int

    def __post_init__(self):
        ell = _as_int(self.ell, "ell")
        p = _as_int(self.p, "p")
        if ell < 1:
            raise PreconditionError(f"ell must be a positive integer, got {ell}")
        if not 0 <= p <= ell:
            raise PreconditionError(f"p must satisfy 0 <= p <= ell, got p={p}, ell={ell}")
        object.__setattr__(self, "ell", ell)
        object.__setattr__(self, "p", p)

    @property
    def family_size(self) -> int:
        return binom_integer(self.ell, self.ell - self.p)


def iex_union_count_enum(inst: IexInstance, cap: int | None = None) -> int:
    """Count ``|A_1 u ... u A_p|`` by listing every subset in the family.

    Raises :class:`EnumerationCapError` when the family has more than ``cap``
    members (default: ``$BINOMVERIFY_ENUM_CAP`` or 10**6).
    """
    if cap is None:
        cap = enumeration_cap()
    if inst.family_size > cap:
        raise EnumerationCapError(
            f"C({inst.ell}, {inst.ell - inst.p}) = {inst.family_size} subsets exceeds cap {cap}"
        )
    marked = frozenset(range(1, inst.p + 1))
    ground = range(1, inst.ell + 1)
    return sum(
        1
        for subset in itertools.combinations(ground, inst.ell - inst.p)
        if not marked.isdisjoint(subset)
    )


def iex_union_count_formula(inst: IexInstance) -> int:
    """Alternating sum over ``i``-fold intersections, each of size ``C(ell - i, p)``."""
    return sum(
        (-1) ** (i + 1) * binom_integer(inst.p, i) * binom_integer(inst.ell - i, inst.p)
        for i in range(1, inst.p + 1)
    )


# -- derivation lemmas ------------------------------------------------------


def upper_negation_check(k: int) -> bool:
    """``C(2k - l, k) == (-1)^k C(l - 1 - k, k)`` as polynomials in ``l``."""
    k = _nonneg(k, "k")
    b = 2 * k
    lhs = binom_affine_poly(-1, b, k)
    rhs = binom_affine_poly(1, k - b - 1, k) * (-1) ** k
    return lhs == rhs


def vandermonde_check(r: int, x, y) -> bool:
    r = _nonneg(r, "r")
    x = _as_fraction(x)
    y = _as_fraction(y)
    rhs = sum((binom_rational(x, k) * binom_rational(y, r - k) for k in range(r + 1)), Fraction(0))
    return binom_rational(x + y, r) == rhs


def trinomial_revision_check(i: int, p: int) -> bool:
    """``C(l-1-i, i) C(l-1-2i, p-i) == C(l-1-i, p) C(p, i)`` as polynomials in ``l``."""
    i = _nonneg(i, "i")
    p = _as_int(p, "p")
    if i > p:
        raise PreconditionError(f"trinomial revision needs i <= p, got i={i}, p={p}")
    lhs = poly_mul(binom_affine_poly(1, -1 - i, i), binom_affine_poly(1, -1 - 2 * i, p - i))
    rhs = poly_mul(binom_affine_poly(1, -1 - i, p), RationalPolynomial.constant(binom_integer(p, i)))
    return lhs == rhs


def half_sum(n: int) -> int:
    """``sum_{k=0}^{n} C(2n+1, k)``: the lower half of row ``2n+1``."""
    n = _nonneg(n, "n")
    return sum(binom_integer(2 * n + 1, k) for k in range(n + 1))


# -- the full chain -----------------------------------------------------------

TRACE_LABELS = (
    "convolution",
    "upper negation",
    "Vandermonde expansion",
    "inner alternating sum = 1",
    "half of row 2n+1",
    "power of four",
)


@dataclass(frozen=True)
class ProofTrace:
    n: int
    ell: Fraction
    lines: tuple[tuple[str, Fraction], ...]
    strict: bool = True
    # literal values of the inner alternating sums, one per k = 0..n (strict mode only)
    inner_sums: tuple[Fraction, ...] = ()

    @property
    def valid(self) -> bool:
        values = [value for _, value in self.lines]
        if len(values) != 6 or values[-1] != pow4(self.n):
            return False
        if any(v != values[0] for v in values):
            return False
        return not self.strict or all(s == 1 for s in self.inner_sums)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "ell": format_rational(self.ell),
            "strict": self.strict,
            "lines": [{"label": label, "value": format_rational(v)} for label, v in self.lines],
            "inner_sums": [format_rational(s) for s in self.inner_sums],
            "valid": self.valid,
        }


def _inner_alternating_sum(q: int, ell: Fraction) -> Fraction:
    # sum_{i=0}^{q} (-1)^i C(ell-1-i, i) C(ell-1-2i, q-i)
    return sum(
        (
            (-1) ** i * binom_rational(ell - 1 - i, i) * binom_rational(ell - 1 - 2 * i, q - i)
            for i in range(q + 1)
        ),
        Fraction(0),
    )


def proof_chain_trace(n: int, ell, strict: bool = True) -> ProofTrace:
    """Evaluate each displayed line of the derivation exactly at ``(n, ell)``.

    The fourth line replaces each inner alternating sum by 1. With ``strict``
    the inner sums are also computed literally and the trace is only valid if
    every one of them is 1.
    """
    n = _nonneg(n, "n")
    ell = _as_fraction(ell)
    m = 2 * n + 1

    line1 = generalized_convolution_at(n, ell)

    line2 = Fraction(0)
    line3 = Fraction(0)
    for i in range(n + 1):
        j = n - i
        sign_term = (-1) ** i * binom_rational(ell - 1 - i, i)
        line2 += sign_term * binom_rational(2 * n + ell - 2 * i, j)
        vandermonde = sum(
            (binom_integer(m, k) * binom_rational(ell - 1 - 2 * i, j - k) for k in range(j + 1)),
            Fraction(0),
        )
        line3 += sign_term * vandermonde

    inner = tuple(_inner_alternating_sum(n - k, ell) for k in range(n + 1)) if strict else ()
    line4 = Fraction(sum(binom_integer(m, k) for k in range(n + 1)))
    line5 = Fraction(sum(binom_integer(m, k) for k in range(m + 1)), 2)
    line6 = Fraction(pow4(n))

    values = (line1, line2, line3, line4, line5, line6)
    return ProofTrace(
        n=n,
        ell=ell,
        lines=tuple(zip(TRACE_LABELS, values)),
        strict=strict,
        inner_sums=inner,
    )

"""Exact verification of central-binomial convolution identities.

The scalar type throughout is :class:`fractions.Fraction`; integers are plain
Python ``int``.
"""

from binomverify.exact import (
    PreconditionError,
    binom_integer,
    binom_rational,
    falling_factorial,
    format_rational,
    parse_rational,
    pow4,
)
from binomverify.polynomial import RationalPolynomial
from binomverify.series import TruncatedSeries

__all__ = [
    "PreconditionError",
    "RationalPolynomial",
    "TruncatedSeries",
    "binom_integer",
    "binom_rational",
    "falling_factorial",
    "format_rational",
    "parse_rational",
    "pow4",
]

__version__ = "0.1.0"

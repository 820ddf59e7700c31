"""Build an expression explicitly as a polynomial in one symbol.

This is the slow, direct route; the verifier in :mod:`binomverify.dsl.verify`
only evaluates at points, and the two are cross-checked in the tests.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from binomverify.dsl.ast import (
    Add,
    Binomial,
    Expr,
    IntegerLiteral,
    Multiply,
    Negate,
    Power,
    Subtract,
    SumPair,
    SumRange,
    Variable,
)
from binomverify.dsl.errors import DslEvalError
from binomverify.dsl.evaluate import (
    _exponent,
    _pair_total,
    _range_bounds,
    _reject_binder,
    _reject_symbol,
    _to_int,
    eval_expr,
)
from binomverify.polynomial import RationalPolynomial, binom_poly


def to_polynomial(expr: Expr, symbol: str, env: Mapping[str, Fraction]) -> RationalPolynomial:
    if isinstance(expr, IntegerLiteral):
        return RationalPolynomial.constant(expr.value)
    if isinstance(expr, Variable):
        if expr.name == symbol:
            return RationalPolynomial.indeterminate()
        if expr.name not in env:
            raise DslEvalError(f"unbound variable {expr.name!r}")
        return RationalPolynomial.constant(env[expr.name])
    if isinstance(expr, Negate):
        return -to_polynomial(expr.operand, symbol, env)
    if isinstance(expr, Add):
        return to_polynomial(expr.left, symbol, env) + to_polynomial(expr.right, symbol, env)
    if isinstance(expr, Subtract):
        return to_polynomial(expr.left, symbol, env) - to_polynomial(expr.right, symbol, env)
    if isinstance(expr, Multiply):
        return to_polynomial(expr.left, symbol, env) * to_polynomial(expr.right, symbol, env)
    if isinstance(expr, Power):
        _reject_symbol(expr.exponent, symbol, "power exponent")
        return to_polynomial(expr.base, symbol, env) ** _exponent(expr, env)
    if isinstance(expr, Binomial):
        _reject_symbol(expr.lower, symbol, "binomial lower argument")
        k = _to_int(eval_expr(expr.lower, env), "binomial lower argument")
        if k < 0:
            return RationalPolynomial()
        return binom_poly(to_polynomial(expr.upper, symbol, env), k)
    if isinstance(expr, SumRange):
        _reject_binder(expr.var, symbol)
        _reject_symbol(expr.lower, symbol, "summation bound")
        _reject_symbol(expr.upper, symbol, "summation bound")
        total = RationalPolynomial()
        for v in _range_bounds(expr, env):
            total = total + to_polynomial(expr.body, symbol, {**env, expr.var: Fraction(v)})
        return total
    if isinstance(expr, SumPair):
        _reject_binder(expr.var1, symbol)
        _reject_binder(expr.var2, symbol)
        _reject_symbol(expr.total, symbol, "summation bound")
        n = _pair_total(expr, env)
        total = RationalPolynomial()
        for v in range(n + 1):
            inner = {**env, expr.var1: Fraction(v), expr.var2: Fraction(n - v)}
            total = total + to_polynomial(expr.body, symbol, inner)
        return total
    raise TypeError(f"not an expression node: {expr!r}")

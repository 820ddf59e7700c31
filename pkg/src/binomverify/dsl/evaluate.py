"""Exact evaluation and degree analysis of identity expressions."""

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
    free_variables,
)
from binomverify.dsl.errors import DegreeBoundError, DslEvalError
from binomverify.exact import binom_rational


def _to_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise DslEvalError(f"{what} must be an integer, got {value}")
    return value.numerator


def _range_bounds(expr: SumRange, env) -> range:
    lo = _to_int(eval_expr(expr.lower, env), f"lower bound of sum over {expr.var}")
    hi = _to_int(eval_expr(expr.upper, env), f"upper bound of sum over {expr.var}")
    return range(lo, hi + 1)


def _pair_total(expr: SumPair, env) -> int:
    total = _to_int(eval_expr(expr.total, env), f"total of sum over {expr.var1}+{expr.var2}")
    if total < 0:
        raise DslEvalError(f"total of sum over {expr.var1}+{expr.var2} must be >= 0, got {total}")
    return total


def _exponent(expr: Power, env) -> int:
    e = _to_int(eval_expr(expr.exponent, env), "power exponent")
    if e < 0:
        raise DslEvalError(f"power exponent must be >= 0, got {e}")
    return e


def eval_expr(expr: Expr, env: Mapping[str, Fraction]) -> Fraction:
    """Evaluate ``expr`` with every free variable taken from ``env``."""
    if isinstance(expr, IntegerLiteral):
        return Fraction(expr.value)
    if isinstance(expr, Variable):
        try:
            return Fraction(env[expr.name])
        except KeyError:
            raise DslEvalError(f"unbound variable {expr.name!r}") from None
    if isinstance(expr, Negate):
        return -eval_expr(expr.operand, env)
    if isinstance(expr, Add):
        return eval_expr(expr.left, env) + eval_expr(expr.right, env)
    if isinstance(expr, Subtract):
        return eval_expr(expr.left, env) - eval_expr(expr.right, env)
    if isinstance(expr, Multiply):
        return eval_expr(expr.left, env) * eval_expr(expr.right, env)
    if isinstance(expr, Power):
        return eval_expr(expr.base, env) ** _exponent(expr, env)
    if isinstance(expr, Binomial):
        k = _to_int(eval_expr(expr.lower, env), "binomial lower argument")
        if k < 0:
            return Fraction(0)
        return binom_rational(eval_expr(expr.upper, env), k)
    if isinstance(expr, SumRange):
        total = Fraction(0)
        for v in _range_bounds(expr, env):
            total += eval_expr(expr.body, {**env, expr.var: Fraction(v)})
        return total
    if isinstance(expr, SumPair):
        n = _pair_total(expr, env)
        total = Fraction(0)
        for v in range(n + 1):
            inner = {**env, expr.var1: Fraction(v), expr.var2: Fraction(n - v)}
            total += eval_expr(expr.body, inner)
        return total
    raise TypeError(f"not an expression node: {expr!r}")


def _reject_symbol(expr: Expr, symbol: str, what: str) -> None:
    if symbol in free_variables(expr):
        raise DegreeBoundError(f"{what} depends on {symbol!r}")


def _reject_binder(name: str, symbol: str) -> None:
    if name == symbol:
        raise DegreeBoundError(f"binder variable shadows free symbol {symbol!r}")


def degree_bound(expr: Expr, symbol: str, env: Mapping[str, Fraction]) -> int:
    """Upper bound on the degree of ``expr`` as a polynomial in ``symbol``.

    Binders are unrolled with the concrete parameter values in ``env``; their
    bounds, binomial lower arguments and exponents must not involve ``symbol``.
    """
    if symbol in env:
        raise DegreeBoundError(f"free symbol {symbol!r} must not be assigned")
    return _bound(expr, symbol, env)


def _bound(expr: Expr, symbol: str, env) -> int:
    if isinstance(expr, IntegerLiteral):
        return 0
    if isinstance(expr, Variable):
        if expr.name == symbol:
            return 1
        if expr.name not in env:
            raise DslEvalError(f"unbound variable {expr.name!r}")
        return 0
    if isinstance(expr, Negate):
        return _bound(expr.operand, symbol, env)
    if isinstance(expr, (Add, Subtract)):
        return max(_bound(expr.left, symbol, env), _bound(expr.right, symbol, env))
    if isinstance(expr, Multiply):
        return _bound(expr.left, symbol, env) + _bound(expr.right, symbol, env)
    if isinstance(expr, Power):
        _reject_symbol(expr.exponent, symbol, "power exponent")
        return _exponent(expr, env) * _bound(expr.base, symbol, env)
    if isinstance(expr, Binomial):
        _reject_symbol(expr.lower, symbol, "binomial lower argument")
        k = _to_int(eval_expr(expr.lower, env), "binomial lower argument")
        if k < 0:
            return 0
        return k * _bound(expr.upper, symbol, env)
    if isinstance(expr, SumRange):
        _reject_binder(expr.var, symbol)
        _reject_symbol(expr.lower, symbol, "summation bound")
        _reject_symbol(expr.upper, symbol, "summation bound")
        return max(
            (_bound(expr.body, symbol, {**env, expr.var: Fraction(v)}) for v in _range_bounds(expr, env)),
            default=0,
        )
    if isinstance(expr, SumPair):
        _reject_binder(expr.var1, symbol)
        _reject_binder(expr.var2, symbol)
        _reject_symbol(expr.total, symbol, "summation bound")
        n = _pair_total(expr, env)
        return max(
            _bound(expr.body, symbol, {**env, expr.var1: Fraction(v), expr.var2: Fraction(n - v)})
            for v in range(n + 1)
        )
    raise TypeError(f"not an expression node: {expr!r}")

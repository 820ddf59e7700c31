"""Canonical pretty-printer; ``parse(render(ast)) == ast`` for parser-producible trees."""

from __future__ import annotations

from binomverify.dsl.ast import (
    Add,
    Binomial,
    Expr,
    Identity,
    IntegerLiteral,
    Multiply,
    Negate,
    Power,
    Subtract,
    SumPair,
    SumRange,
    Variable,
)

_SUMS = (SumRange, SumPair)


def _is_atom(expr: Expr) -> bool:
    return isinstance(expr, (IntegerLiteral, Variable, Binomial))


def _paren(text: str) -> str:
    return f"({text})"


def _as_atom(expr: Expr) -> str:
    # sums are atoms in the grammar but their body would swallow what follows
    return render(expr) if _is_atom(expr) else _paren(render(expr))


def _as_factor(expr: Expr) -> str:
    if _is_atom(expr) or isinstance(expr, (Negate, Power)):
        return render(expr)
    return _paren(render(expr))


def _as_term(expr: Expr) -> str:
    if isinstance(expr, (Add, Subtract)):
        return _paren(render(expr))
    return render(expr)


def render(expr: Expr) -> str:
    if isinstance(expr, IntegerLiteral):
        if expr.value < 0:
            raise ValueError("integer literals are nonnegative; use Negate")
        return str(expr.value)
    if isinstance(expr, Variable):
        return expr.name
    if isinstance(expr, Add):
        return f"{render(expr.left)} + {_as_term(expr.right)}"
    if isinstance(expr, Subtract):
        return f"{render(expr.left)} - {_as_term(expr.right)}"
    if isinstance(expr, Multiply):
        left = _as_factor(expr.left) if not isinstance(expr.left, Multiply) else render(expr.left)
        return f"{left} * {_as_factor(expr.right)}"
    if isinstance(expr, Negate):
        operand = expr.operand
        if isinstance(operand, Power):
            return f"-{render(operand)}"
        return f"-{_as_atom(operand)}"
    if isinstance(expr, Power):
        return f"{_as_atom(expr.base)}^{_as_atom(expr.exponent)}"
    if isinstance(expr, Binomial):
        return f"C({render(expr.upper)}, {render(expr.lower)})"
    if isinstance(expr, SumRange):
        return f"sum({expr.var}={render(expr.lower)}..{render(expr.upper)}) {_as_term(expr.body)}"
    if isinstance(expr, SumPair):
        return f"sum({expr.var1}+{expr.var2}={render(expr.total)}) {_as_term(expr.body)}"
    raise TypeError(f"not an expression node: {expr!r}")


def render_identity(identity: Identity) -> str:
    return f"{render(identity.lhs)} == {render(identity.rhs)}"

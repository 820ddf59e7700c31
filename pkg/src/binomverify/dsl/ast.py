"""Expression tree for binomial-sum identities."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union


@dataclass(frozen=True)
class IntegerLiteral:
    value: int


@dataclass(frozen=True)
class Variable:
    name: str


@dataclass(frozen=True)
class Negate:
    operand: Expr


@dataclass(frozen=True)
class Add:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Subtract:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Multiply:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Power:
    base: Expr
    exponent: Expr


@dataclass(frozen=True)
class Binomial:
    upper: Expr
    lower: Expr


@dataclass(frozen=True)
class SumRange:
    """``sum(var=lower..upper) body``, both bounds inclusive."""

    var: str
    lower: Expr
    upper: Expr
    body: Expr


@dataclass(frozen=True)
class SumPair:
    """``sum(var1+var2=total) body``: var1 runs 0..total and var2 = total - var1."""

    var1: str
    var2: str
    total: Expr
    body: Expr


Expr = Union[
    IntegerLiteral, Variable, Negate, Add, Subtract, Multiply, Power, Binomial, SumRange, SumPair
]


@dataclass(frozen=True)
class Identity:
    lhs: Expr
    rhs: Expr
    source: str = field(default="", compare=False)


def children(expr: Expr) -> tuple[Expr, ...]:
    if isinstance(expr, (IntegerLiteral, Variable)):
        return ()
    if isinstance(expr, Negate):
        return (expr.operand,)
    if isinstance(expr, (Add, Subtract, Multiply)):
        return (expr.left, expr.right)
    if isinstance(expr, Power):
        return (expr.base, expr.exponent)
    if isinstance(expr, Binomial):
        return (expr.upper, expr.lower)
    if isinstance(expr, SumRange):
        return (expr.lower, expr.upper, expr.body)
    if isinstance(expr, SumPair):
        return (expr.total, expr.body)
    raise TypeError(f"not an expression node: {expr!r}")


def free_variables(expr: Expr) -> frozenset[str]:
    """Names used in ``expr`` that no enclosing binder of ``expr`` binds."""
    if isinstance(expr, Variable):
        return frozenset([expr.name])
    if isinstance(expr, SumRange):
        return free_variables(expr.lower) | free_variables(expr.upper) | (
            free_variables(expr.body) - {expr.var}
        )
    if isinstance(expr, SumPair):
        return free_variables(expr.total) | (free_variables(expr.body) - {expr.var1, expr.var2})
    out: frozenset[str] = frozenset()
    for child in children(expr):
        out |= free_variables(child)
    return out


def identity_free_variables(identity: Identity) -> frozenset[str]:
    return free_variables(identity.lhs) | free_variables(identity.rhs)

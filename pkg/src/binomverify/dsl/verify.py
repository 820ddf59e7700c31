"""Numeric and polynomial-mode verification of parsed identities.

Polynomial mode proves an identity for every value of one free symbol: if both
sides are polynomials of degree at most ``d`` in that symbol and they agree at
``d + 1`` distinct points, their difference has more roots than its degree
allows and is therefore zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Union

from binomverify.dsl.ast import Identity
from binomverify.dsl.errors import DslError
from binomverify.dsl.evaluate import degree_bound, eval_expr
from binomverify.dsl.render import render_identity
from binomverify.exact import format_rational

VERIFIED = "verified"
FAILED = "failed"
ERROR = "error"


@dataclass(frozen=True)
class Counterexample:
    lhs: Fraction
    rhs: Fraction
    point: Optional[Fraction] = None
    assignment: Optional[dict] = None

    def to_dict(self) -> dict:
        out = {}
        if self.point is not None:
            out["point"] = format_rational(self.point)
        if self.assignment is not None:
            out["assignment"] = _format_env(self.assignment)
        out["lhs"] = format_rational(self.lhs)
        out["rhs"] = format_rational(self.rhs)
        return out


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    mode: str
    assignments: dict
    status: str
    free_symbol: Optional[str] = None
    degree_bound: Optional[int] = None
    points: Optional[tuple] = None
    lhs_value: Union[Fraction, tuple, None] = None
    rhs_value: Union[Fraction, tuple, None] = None
    counterexample: Optional[Counterexample] = None
    message: Optional[str] = None

    @property
    def verified(self) -> bool:
        return self.status == VERIFIED

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "mode": self.mode,
            "assignments": _format_env(self.assignments),
            "free_symbol": self.free_symbol,
            "degree_bound": self.degree_bound,
            "points": _format_values(self.points),
            "lhs_value": _format_values(self.lhs_value),
            "rhs_value": _format_values(self.rhs_value),
            "status": self.status,
            "counterexample": self.counterexample.to_dict() if self.counterexample else None,
            "message": self.message,
        }


def _format_env(env: Mapping) -> dict:
    return {name: format_rational(env[name]) for name in sorted(env)}


def _format_values(values):
    if values is None:
        return None
    if isinstance(values, tuple):
        return [format_rational(v) for v in values]
    return format_rational(values)


def _source(identity: Identity) -> str:
    return identity.source or render_identity(identity)


def _normalize(env: Mapping) -> dict:
    return {name: Fraction(value) for name, value in env.items()}


def verify_numeric(identity: Identity, env: Mapping) -> VerificationReport:
    env = _normalize(env)
    base = dict(identity=_source(identity), mode="numeric", assignments=env)
    try:
        lhs = eval_expr(identity.lhs, env)
        rhs = eval_expr(identity.rhs, env)
    except DslError as exc:
        return VerificationReport(status=ERROR, message=str(exc), **base)
    if lhs == rhs:
        return VerificationReport(status=VERIFIED, lhs_value=lhs, rhs_value=rhs, **base)
    return VerificationReport(
        status=FAILED,
        lhs_value=lhs,
        rhs_value=rhs,
        counterexample=Counterexample(lhs=lhs, rhs=rhs, assignment=env),
        **base,
    )


def verify_poly(identity: Identity, free_symbol: str, env: Mapping) -> VerificationReport:
    """Prove ``identity`` for all values of ``free_symbol`` by evaluation at 0..d."""
    env = _normalize(env)
    base = dict(
        identity=_source(identity), mode="poly", assignments=env, free_symbol=free_symbol
    )
    try:
        d = max(
            degree_bound(identity.lhs, free_symbol, env),
            degree_bound(identity.rhs, free_symbol, env),
        )
    except DslError as exc:
        return VerificationReport(status=ERROR, message=str(exc), **base)
    points = tuple(Fraction(t) for t in range(d + 1))
    lhs_values = []
    rhs_values = []
    try:
        for t in points:
            point_env = {**env, free_symbol: t}
            lhs_values.append(eval_expr(identity.lhs, point_env))
            rhs_values.append(eval_expr(identity.rhs, point_env))
    except DslError as exc:
        return VerificationReport(
            status=ERROR, degree_bound=d, points=points, message=str(exc), **base
        )
    counterexample = None
    for t, lhs, rhs in zip(points, lhs_values, rhs_values):
        if lhs != rhs:
            counterexample = Counterexample(lhs=lhs, rhs=rhs, point=t)
            break
    return VerificationReport(
        status=FAILED if counterexample else VERIFIED,
        degree_bound=d,
        points=points,
        lhs_value=tuple(lhs_values),
        rhs_value=tuple(rhs_values),
        counterexample=counterexample,
        **base,
    )

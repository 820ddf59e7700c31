"""A small language for binomial-sum identities: parse, evaluate, verify."""

from binomverify.dsl.ast import Identity, free_variables, identity_free_variables
from binomverify.dsl.errors import DegreeBoundError, DslError, DslEvalError, DslSyntaxError
from binomverify.dsl.evaluate import degree_bound, eval_expr
from binomverify.dsl.parser import parse_expression, parse_identity, parse_identity_file
from binomverify.dsl.render import render, render_identity
from binomverify.dsl.symbolic import to_polynomial
from binomverify.dsl.verify import VerificationReport, verify_numeric, verify_poly

__all__ = [
    "DegreeBoundError",
    "DslError",
    "DslEvalError",
    "DslSyntaxError",
    "Identity",
    "VerificationReport",
    "degree_bound",
    "eval_expr",
    "free_variables",
    "identity_free_variables",
    "parse_expression",
    "parse_identity",
    "parse_identity_file",
    "render",
    "render_identity",
    "to_polynomial",
    "verify_numeric",
    "verify_poly",
]

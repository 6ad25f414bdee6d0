"""lucaskit: exact bivariate Fibonacci/Lucas polynomial toolkit.

Constructs the polynomials F_n(x, y) and L_n(x, y), verifies a family of
binomial-sum identities about them as exact polynomial equalities, and
exposes the same checks through an identity DSL, an HTTP service and a
CLI.
"""
from .extring import DISC, ExtElem, S, TWO_ALPHA, TWO_BETA
from .identities import (
    ALL_CHECK_NAMES,
    GouldSum,
    check_ex1,
    check_ex2,
    check_ex3,
    check_ex4,
    check_ex5a,
    check_ex5b,
    check_ex6a,
    check_ex6b,
    verify_many,
    verify_range,
)
from .idexpr import (
    IdentityDecl,
    IdentityEvalError,
    IdentityParseError,
    eval_expr,
    parse_identity,
    parse_identity_file,
    render_decl,
    verify_identity,
)
from .lucascore import (
    SequenceKind,
    binet_check,
    compose_fib,
    compose_luc,
    fib,
    fib_fast,
    fib_value,
    luc,
    luc_fast,
    luc_value,
)
from .ratpoly import ONE, RatPoly, X, Y, ZERO, binomial
from .report import IdentityReport
from .series import TruncSeries, gf_fib, gf_luc

__version__ = "0.1.0"

__all__ = [
    "RatPoly",
    "X",
    "Y",
    "ONE",
    "ZERO",
    "binomial",
    "ExtElem",
    "DISC",
    "S",
    "TWO_ALPHA",
    "TWO_BETA",
    "SequenceKind",
    "fib",
    "luc",
    "fib_fast",
    "luc_fast",
    "fib_value",
    "luc_value",
    "binet_check",
    "compose_fib",
    "compose_luc",
    "TruncSeries",
    "gf_fib",
    "gf_luc",
    "IdentityReport",
    "GouldSum",
    "ALL_CHECK_NAMES",
    "check_ex1",
    "check_ex2",
    "check_ex3",
    "check_ex4",
    "check_ex5a",
    "check_ex5b",
    "check_ex6a",
    "check_ex6b",
    "verify_range",
    "verify_many",
    "IdentityDecl",
    "IdentityParseError",
    "IdentityEvalError",
    "parse_identity",
    "parse_identity_file",
    "eval_expr",
    "verify_identity",
    "render_decl",
]

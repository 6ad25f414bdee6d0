"""Identity-expression language: parse, evaluate, verify.

Declarations state one polynomial identity with a free index n and are
checked exactly against the same polynomial core as the built-in
identity suite.

Grammar (whitespace-insensitive; '#' starts a comment):

    decl    := name ":" "n" ">=" int ":" expr "==" expr
    expr    := term (("+"|"-") term)*
    term    := factor (("*"|"/") factor)*
    factor  := ("-")? atom ("^" atom)?
    atom    := int | "x" | "y" | "n" | "k" | "(" expr ")"
             | "C" "(" expr "," expr ")" | "floor" "(" expr "/" expr ")"
             | "sum" "(" ident "," expr "," expr "," expr ")"
             | ("F"|"L") "(" expr (";" expr "," expr)? ")"

Unary minus binds looser than "^", so -y^2 means -(y^2).  F and L take
an optional substitution list: F(n; 3*x, y-2*x^2) is the n-th Fibonacci
polynomial with x := 3*x, y := y-2*x^2; without it the arguments default
to (x, y).  Sum bounds, exponents and binomial arguments must evaluate
to integers; an upper bound below the lower bound gives the empty sum 0.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .lucascore import fib, luc
from .ratpoly import RatPoly, X, Y, ZERO, binomial
from .report import IdentityReport


class IdentityParseError(ValueError):
    """Syntax or scope error, with 1-based source position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.reason = message
        self.line = line
        self.col = col


class IdentityEvalError(ValueError):
    """Evaluation error, optionally annotated with the offending n."""

    def __init__(
        self,
        message: str,
        line: int | None = None,
        col: int | None = None,
        n: int | None = None,
    ):
        where = f"line {line}, col {col}: " if line is not None else ""
        at = f"at n={n}: " if n is not None else ""
        super().__init__(f"{at}{where}{message}")
        self.reason = message
        self.line = line
        self.col = col
        self.n = n

    def with_n(self, n: int) -> "IdentityEvalError":
        return IdentityEvalError(self.reason, self.line, self.col, n)


# -- AST ----------------------------------------------------------------------

@dataclass(frozen=True)
class Span:
    line: int
    col: int


def _span_field() -> Span:
    return Span(0, 0)


@dataclass(frozen=True)
class Node:
    span: Span = field(compare=False, repr=False, kw_only=True, default_factory=_span_field)


@dataclass(frozen=True)
class IntLit(Node):
    value: int


@dataclass(frozen=True)
class VarRef(Node):
    name: str


@dataclass(frozen=True)
class Neg(Node):
    operand: "Expr"


@dataclass(frozen=True)
class Add(Node):
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub(Node):
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul(Node):
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Div(Node):
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow(Node):
    base: "Expr"
    exponent: "Expr"


@dataclass(frozen=True)
class Binom(Node):
    top: "Expr"
    bottom: "Expr"


@dataclass(frozen=True)
class FloorDiv(Node):
    num: "Expr"
    den: "Expr"


@dataclass(frozen=True)
class Sum(Node):
    index: str
    lower: "Expr"
    upper: "Expr"
    body: "Expr"


@dataclass(frozen=True)
class FibSym(Node):
    index: "Expr"
    subs: Optional[tuple["Expr", "Expr"]]


@dataclass(frozen=True)
class LucSym(Node):
    index: "Expr"
    subs: Optional[tuple["Expr", "Expr"]]


Expr = Union[
    IntLit, VarRef, Neg, Add, Sub, Mul, Div, Pow, Binom, FloorDiv, Sum, FibSym, LucSym
]


@dataclass(frozen=True)
class IdentityDecl:
    name: str
    min_n: int
    lhs: Expr
    rhs: Expr


# -- tokenizer ----------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t]+)
  | (?P<comment>\#.*)
  | (?P<int>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>>=|==|[-+*/^(),;:<>=])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # "int" | "ident" | "op" | "end"
    text: str
    line: int
    col: int


def _tokenize(text: str, start_line: int = 1) -> list[Token]:
    tokens: list[Token] = []
    for offset, raw in enumerate(text.split("\n")):
        line = start_line + offset
        pos = 0
        while pos < len(raw):
            m = _TOKEN_RE.match(raw, pos)
            if m is None:
                raise IdentityParseError(
                    f"illegal character {raw[pos]!r}", line, pos + 1
                )
            kind = m.lastgroup
            if kind == "comment":
                break
            if kind != "ws":
                tokens.append(Token(kind, m.group(), line, pos + 1))
            pos = m.end()
    end_line = start_line + text.count("\n")
    tokens.append(Token("end", "", end_line, len(text.split("\n")[-1]) + 1))
    return tokens


# -- parser -------------------------------------------------------------------

_RESERVED = {"x", "y", "n", "k", "C", "floor", "sum", "F", "L"}


class _Parser:
    def __init__(self, tokens: list[Token]):
        self._tokens = tokens
        self._pos = 0

    def _peek(self) -> Token:
        return self._tokens[self._pos]

    def _next(self) -> Token:
        tok = self._tokens[self._pos]
        if tok.kind != "end":
            self._pos += 1
        return tok

    def _error(self, message: str, tok: Token | None = None) -> IdentityParseError:
        tok = tok or self._peek()
        return IdentityParseError(message, tok.line, tok.col)

    def _describe(self, tok: Token) -> str:
        return "end of input" if tok.kind == "end" else repr(tok.text)

    def _expect_op(self, op: str, context: str) -> Token:
        tok = self._peek()
        if tok.kind == "op" and tok.text == op:
            return self._next()
        raise self._error(f"expected {op!r} {context}, found {self._describe(tok)}")

    def _expect_int(self, context: str) -> tuple[int, Token]:
        neg = False
        tok = self._peek()
        if tok.kind == "op" and tok.text == "-":
            self._next()
            neg = True
        tok = self._peek()
        if tok.kind != "int":
            raise self._error(f"expected an integer {context}, found {self._describe(tok)}")
        self._next()
        value = int(tok.text)
        return (-value if neg else value), tok

    # decl := name ":" "n" ">=" int ":" expr "==" expr
    def decl(self) -> IdentityDecl:
        tok = self._peek()
        if tok.kind != "ident":
            raise self._error(f"expected an identity name, found {self._describe(tok)}")
        if tok.text in _RESERVED:
            raise self._error(f"{tok.text!r} is reserved and cannot name an identity")
        name = self._next().text
        self._expect_op(":", "after the identity name")
        tok = self._peek()
        if not (tok.kind == "ident" and tok.text == "n"):
            raise self._error(f"expected 'n' in the constraint, found {self._describe(tok)}")
        self._next()
        self._expect_op(">=", "in the constraint")
        min_n, _ = self._expect_int("as the constraint bound")
        self._expect_op(":", "after the constraint")
        lhs = self.expr()
        self._expect_op("==", "between the two sides")
        rhs = self.expr()
        tok = self._peek()
        if tok.kind != "end":
            raise self._error(f"unexpected trailing input {self._describe(tok)}")
        return IdentityDecl(name, min_n, lhs, rhs)

    def expr(self) -> Expr:
        node = self.term()
        while True:
            tok = self._peek()
            if tok.kind == "op" and tok.text in "+-":
                self._next()
                rhs = self.term()
                cls = Add if tok.text == "+" else Sub
                node = cls(node, rhs, span=Span(tok.line, tok.col))
            else:
                return node

    def term(self) -> Expr:
        node = self.factor()
        while True:
            tok = self._peek()
            if tok.kind == "op" and tok.text in "*/":
                self._next()
                rhs = self.factor()
                cls = Mul if tok.text == "*" else Div
                node = cls(node, rhs, span=Span(tok.line, tok.col))
            else:
                return node

    def factor(self) -> Expr:
        tok = self._peek()
        negated = tok.kind == "op" and tok.text == "-"
        if negated:
            self._next()
        node = self.atom()
        nxt = self._peek()
        if nxt.kind == "op" and nxt.text == "^":
            self._next()
            exponent = self.atom()
            node = Pow(node, exponent, span=Span(nxt.line, nxt.col))
        if negated:
            node = Neg(node, span=Span(tok.line, tok.col))
        return node

    def atom(self) -> Expr:
        tok = self._peek()
        span = Span(tok.line, tok.col)
        if tok.kind == "int":
            self._next()
            return IntLit(int(tok.text), span=span)
        if tok.kind == "op" and tok.text == "(":
            self._next()
            node = self.expr()
            self._expect_op(")", "to close the parenthesis")
            return node
        if tok.kind == "ident":
            name = tok.text
            if name in ("x", "y", "n", "k"):
                self._next()
                return VarRef(name, span=span)
            if name == "C":
                return self._binom(span)
            if name == "floor":
                return self._floor(span)
            if name == "sum":
                return self._sum(span)
            if name in ("F", "L"):
                return self._seq(span)
            raise self._error(f"unknown name {name!r}", tok)
        raise self._error(f"expected an expression, found {self._describe(tok)}")

    def _binom(self, span: Span) -> Expr:
        self._next()  # C
        self._expect_op("(", "after 'C'")
        top = self.expr()
        tok = self._peek()
        if tok.kind == "op" and tok.text == ")":
            raise self._error("'C' takes two arguments: C(a, b)", tok)
        self._expect_op(",", "between the two arguments of 'C'")
        bottom = self.expr()
        self._expect_op(")", "to close 'C(...)'")
        return Binom(top, bottom, span=span)

    def _floor(self, span: Span) -> Expr:
        self._next()  # floor
        self._expect_op("(", "after 'floor'")
        inner = self.expr()
        self._expect_op(")", "to close 'floor(...)'")
        if not isinstance(inner, Div):
            raise IdentityParseError(
                "'floor' takes a quotient: floor(a / b)", span.line, span.col
            )
        return FloorDiv(inner.left, inner.right, span=span)

    def _sum(self, span: Span) -> Expr:
        self._next()  # sum
        self._expect_op("(", "after 'sum'")
        tok = self._peek()
        if tok.kind != "ident":
            raise self._error(
                f"expected the summation index, found {self._describe(tok)}"
            )
        if tok.text in ("x", "y", "n"):
            raise self._error(f"summation index cannot shadow {tok.text!r}", tok)
        index = self._next().text
        self._expect_op(",", "after the summation index")
        lower = self.expr()
        self._expect_op(",", "after the lower bound")
        upper = self.expr()
        tok = self._peek()
        if tok.kind == "op" and tok.text == ")":
            raise self._error(
                "'sum' takes four arguments: sum(k, lower, upper, body)", tok
            )
        self._expect_op(",", "after the upper bound")
        body = self.expr()
        self._expect_op(")", "to close 'sum(...)'")
        return Sum(index, lower, upper, body, span=span)

    def _seq(self, span: Span) -> Expr:
        kind = self._next().text  # F | L
        self._expect_op("(", f"after {kind!r}")
        index = self.expr()
        tok = self._peek()
        subs: Optional[tuple[Expr, Expr]] = None
        if tok.kind == "op" and tok.text == ",":
            raise self._error(
                f"substitution arguments use ';': {kind}(e; px, py)", tok
            )
        if tok.kind == "op" and tok.text == ";":
            self._next()
            px = self.expr()
            tok = self._peek()
            if tok.kind == "op" and tok.text == ")":
                raise self._error(
                    f"substitution needs two arguments: {kind}(e; px, py)", tok
                )
            self._expect_op(",", "between the substitution arguments")
            py = self.expr()
            subs = (px, py)
        self._expect_op(")", f"to close {kind!r}(...)")
        cls = FibSym if kind == "F" else LucSym
        return cls(index, subs, span=span)


def _check_scope(node: Expr, bound: frozenset[str]) -> None:
    if isinstance(node, VarRef):
        if node.name not in ("x", "y", "n") and node.name not in bound:
            raise IdentityParseError(
                f"unbound variable {node.name!r} (only valid inside a sum binding it)",
                node.span.line,
                node.span.col,
            )
        return
    if isinstance(node, Sum):
        _check_scope(node.lower, bound)
        _check_scope(node.upper, bound)
        _check_scope(node.body, bound | {node.index})
        return
    if isinstance(node, (IntLit,)):
        return
    if isinstance(node, Neg):
        _check_scope(node.operand, bound)
    elif isinstance(node, (Add, Sub, Mul, Div)):
        _check_scope(node.left, bound)
        _check_scope(node.right, bound)
    elif isinstance(node, Pow):
        _check_scope(node.base, bound)
        _check_scope(node.exponent, bound)
    elif isinstance(node, Binom):
        _check_scope(node.top, bound)
        _check_scope(node.bottom, bound)
    elif isinstance(node, FloorDiv):
        _check_scope(node.num, bound)
        _check_scope(node.den, bound)
    elif isinstance(node, (FibSym, LucSym)):
        _check_scope(node.index, bound)
        if node.subs is not None:
            _check_scope(node.subs[0], bound)
            _check_scope(node.subs[1], bound)


def parse_identity(text: str, start_line: int = 1) -> IdentityDecl:
    """Parse a single declaration; raises IdentityParseError with position."""
    decl = _Parser(_tokenize(text, start_line)).decl()
    _check_scope(decl.lhs, frozenset())
    _check_scope(decl.rhs, frozenset())
    return decl


def parse_identity_file(text: str) -> list[IdentityDecl]:
    """Parse a declaration file: one declaration per line, '#' comments."""
    decls = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        decls.append(parse_identity(raw, start_line=lineno))
    return decls


# -- evaluator ------------------------------------------------------------------

def _require_int(node: Expr, env: dict[str, int], what: str) -> int:
    value = _eval(node, env)
    c = value.constant_value()
    if c is None:
        raise IdentityEvalError(
            f"{what} must be an integer, got the polynomial {value}",
            node.span.line,
            node.span.col,
        )
    if isinstance(c, Fraction):
        raise IdentityEvalError(
            f"{what} must be an integer, got {c}", node.span.line, node.span.col
        )
    return c


def _eval(node: Expr, env: dict[str, int]) -> RatPoly:
    if isinstance(node, IntLit):
        return RatPoly.constant(node.value)
    if isinstance(node, VarRef):
        if node.name == "x":
            return X
        if node.name == "y":
            return Y
        return RatPoly.constant(env[node.name])
    if isinstance(node, Neg):
        return -_eval(node.operand, env)
    if isinstance(node, Add):
        return _eval(node.left, env) + _eval(node.right, env)
    if isinstance(node, Sub):
        return _eval(node.left, env) - _eval(node.right, env)
    if isinstance(node, Mul):
        return _eval(node.left, env) * _eval(node.right, env)
    if isinstance(node, Div):
        num = _eval(node.left, env)
        den = _eval(node.right, env).constant_value()
        if den is None:
            raise IdentityEvalError(
                "division by a non-constant polynomial",
                node.span.line,
                node.span.col,
            )
        if den == 0:
            raise IdentityEvalError(
                "division by zero", node.span.line, node.span.col
            )
        return num.scale(Fraction(1) / den)
    if isinstance(node, Pow):
        e = _require_int(node.exponent, env, "exponent")
        if e >= 0:
            return _eval(node.base, env) ** e
        base = _eval(node.base, env).constant_value()
        if base is None:
            raise IdentityEvalError(
                "negative exponent on a non-constant base",
                node.span.line,
                node.span.col,
            )
        if base == 0:
            raise IdentityEvalError(
                "zero raised to a negative exponent", node.span.line, node.span.col
            )
        return RatPoly.constant(Fraction(base) ** e)
    if isinstance(node, Binom):
        a = _require_int(node.top, env, "binomial argument")
        b = _require_int(node.bottom, env, "binomial argument")
        return RatPoly.constant(binomial(a, b))
    if isinstance(node, FloorDiv):
        a = _require_int(node.num, env, "floor numerator")
        b = _require_int(node.den, env, "floor denominator")
        if b == 0:
            raise IdentityEvalError(
                "floor division by zero", node.span.line, node.span.col
            )
        return RatPoly.constant(a // b)  # int // floors toward -inf
    if isinstance(node, Sum):
        lo = _require_int(node.lower, env, "sum lower bound")
        hi = _require_int(node.upper, env, "sum upper bound")
        acc = ZERO
        for value in range(lo, hi + 1):
            acc = acc + _eval(node.body, {**env, node.index: value})
        return acc
    if isinstance(node, (FibSym, LucSym)):
        i = _require_int(node.index, env, "sequence index")
        if i < 0:
            raise IdentityEvalError(
                f"negative sequence index {i}", node.span.line, node.span.col
            )
        base = fib(i) if isinstance(node, FibSym) else luc(i)
        if node.subs is None:
            return base
        px = _eval(node.subs[0], env)
        py = _eval(node.subs[1], env)
        return base.subst(px, py)
    raise TypeError(f"unknown node {node!r}")


def eval_expr(node: Expr, n_value: int) -> RatPoly:
    """Evaluate one side of an identity at a concrete integer n."""
    return _eval(node, {"n": n_value})


def verify_identity(
    decl: IdentityDecl, n_from: int, n_to: int
) -> list[IdentityReport]:
    """One exact report per n in [max(n_from, constraint), n_to]."""
    if n_from > n_to:
        raise ValueError("empty range: n_from exceeds n_to")
    reports = []
    for n in range(max(n_from, decl.min_n), n_to + 1):
        try:
            lhs = eval_expr(decl.lhs, n)
            rhs = eval_expr(decl.rhs, n)
        except IdentityEvalError as err:
            raise err.with_n(n) from None
        reports.append(IdentityReport.from_sides(decl.name, n, lhs, rhs))
    return reports


# -- renderer -------------------------------------------------------------------

_LEVEL_EXPR, _LEVEL_TERM, _LEVEL_FACTOR, _LEVEL_ATOM = 1, 2, 3, 4


def _level(node: Expr) -> int:
    if isinstance(node, (Add, Sub)):
        return _LEVEL_EXPR
    if isinstance(node, (Mul, Div)):
        return _LEVEL_TERM
    if isinstance(node, (Neg, Pow)):
        return _LEVEL_FACTOR
    return _LEVEL_ATOM


def _wrap(node: Expr, minimum: int) -> str:
    text = render_expr(node)
    return f"({text})" if _level(node) < minimum else text


def render_expr(node: Expr) -> str:
    """Canonical text that reparses to a structurally identical tree."""
    if isinstance(node, IntLit):
        return str(node.value)
    if isinstance(node, VarRef):
        return node.name
    if isinstance(node, Neg):
        return f"-{_wrap(node.operand, _LEVEL_FACTOR)}"
    if isinstance(node, Add):
        return f"{_wrap(node.left, _LEVEL_EXPR)} + {_wrap(node.right, _LEVEL_TERM)}"
    if isinstance(node, Sub):
        return f"{_wrap(node.left, _LEVEL_EXPR)} - {_wrap(node.right, _LEVEL_TERM)}"
    if isinstance(node, Mul):
        return f"{_wrap(node.left, _LEVEL_TERM)} * {_wrap(node.right, _LEVEL_FACTOR)}"
    if isinstance(node, Div):
        return f"{_wrap(node.left, _LEVEL_TERM)} / {_wrap(node.right, _LEVEL_FACTOR)}"
    if isinstance(node, Pow):
        return f"{_wrap(node.base, _LEVEL_ATOM)}^{_wrap(node.exponent, _LEVEL_ATOM)}"
    if isinstance(node, Binom):
        return f"C({render_expr(node.top)}, {render_expr(node.bottom)})"
    if isinstance(node, FloorDiv):
        return f"floor({_wrap(node.num, _LEVEL_TERM)} / {_wrap(node.den, _LEVEL_FACTOR)})"
    if isinstance(node, Sum):
        parts = ", ".join(
            [node.index]
            + [render_expr(e) for e in (node.lower, node.upper, node.body)]
        )
        return f"sum({parts})"
    if isinstance(node, (FibSym, LucSym)):
        letter = "F" if isinstance(node, FibSym) else "L"
        if node.subs is None:
            return f"{letter}({render_expr(node.index)})"
        px, py = node.subs
        return f"{letter}({render_expr(node.index)}; {render_expr(px)}, {render_expr(py)})"
    raise TypeError(f"unknown node {node!r}")


def render_decl(decl: IdentityDecl) -> str:
    return (
        f"{decl.name} : n>={decl.min_n} : "
        f"{render_expr(decl.lhs)} == {render_expr(decl.rhs)}"
    )

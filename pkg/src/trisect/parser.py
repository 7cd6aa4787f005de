"""Text syntax for polynomials and rational functions in t and x.

Grammar (ASCII only, whitespace ignored, no implicit multiplication)::

    expr     := ['-'] term (('+' | '-') term)*
    term     := factor (('*' | '/') factor)*
    factor   := atom ('^' natural)?
    atom     := rational | 'sqrt' '(' natural ')' | 't' | 'x' | '(' expr ')'
    rational := integer ('/' natural)?

A minus sign may open an expression but never follows another operator, so
``x + + 1`` and ``x * -1`` are rejected.  Division by anything other than a
rational literal must have a divisor free of x.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import FieldMismatch, PolySyntaxError, UnknownSymbol
from .polyring import RFunc, UPoly, XPoly
from .scalars import QQ, QuadField, QuadScalar, _split_square

MAX_EXPONENT = 256


@dataclass(frozen=True)
class Num:
    value: Fraction
    offset: int


@dataclass(frozen=True)
class Sqrt:
    n: int
    offset: int


@dataclass(frozen=True)
class Var:
    name: str
    offset: int


@dataclass(frozen=True)
class Neg:
    operand: Expr
    offset: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: Expr
    right: Expr
    offset: int


@dataclass(frozen=True)
class Pow:
    base: Expr
    exponent: int
    offset: int


Expr = Union[Num, Sqrt, Var, Neg, BinOp, Pow]
PolyExpr = Expr


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    offset: int


_TOKEN = re.compile(r"(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*/^()]))")


def _byte_offset(src: str, i: int) -> int:
    return len(src[:i].encode("utf-8"))


def tokenize(src: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    n = len(src)
    while True:
        while pos < n and src[pos] in " \t\r\n":
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(src, pos)
        if m is None:
            ch = src[pos]
            what = "non-ASCII character" if ord(ch) > 127 else "unexpected character"
            raise PolySyntaxError(f"{what} {ch!r}", _byte_offset(src, pos))
        start = m.start(m.lastindex)
        kind = ("int", "name", "op")[m.lastindex - 1]
        tokens.append(Token(kind, m.group(m.lastindex), _byte_offset(src, start)))
        pos = m.end()
    tokens.append(Token("end", "", _byte_offset(src, n)))
    return tokens


class _Parser:
    def __init__(self, src: str) -> None:
        self.tokens = tokenize(src)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def _peek(self, k: int = 1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def _next(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def _is(self, text: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == text

    def _expect(self, text: str) -> Token:
        if not self._is(text):
            raise PolySyntaxError(f"expected {text!r}, found {self._describe()}", self.tok.offset)
        return self._next()

    def _describe(self) -> str:
        return "end of input" if self.tok.kind == "end" else repr(self.tok.text)

    def parse(self) -> Expr:
        e = self.expr()
        if self.tok.kind != "end":
            raise PolySyntaxError(f"unexpected {self._describe()}", self.tok.offset)
        return e

    def expr(self) -> Expr:
        if self._is("-"):
            op = self._next()
            e: Expr = Neg(self.term(), op.offset)
        else:
            e = self.term()
        while self._is("+") or self._is("-"):
            op = self._next()
            e = BinOp(op.text, e, self.term(), op.offset)
        return e

    def term(self) -> Expr:
        e = self.factor()
        while self._is("*") or self._is("/"):
            op = self._next()
            e = BinOp(op.text, e, self.factor(), op.offset)
        return e

    def factor(self) -> Expr:
        base = self.atom()
        if self._is("^"):
            op = self._next()
            exp = self._natural()
            if exp > MAX_EXPONENT:
                raise PolySyntaxError(f"exponent {exp} exceeds {MAX_EXPONENT}", op.offset)
            return Pow(base, exp, op.offset)
        return base

    def _natural(self) -> int:
        if self.tok.kind != "int":
            raise PolySyntaxError(f"expected a natural number, found {self._describe()}", self.tok.offset)
        return int(self._next().text)

    def atom(self) -> Expr:
        tok = self.tok
        if tok.kind == "int":
            self._next()
            value = Fraction(int(tok.text))
            if self._is("/") and self._peek().kind == "int":
                self._next()
                den_tok = self.tok
                den = self._natural()
                if den == 0:
                    raise PolySyntaxError("zero denominator", den_tok.offset)
                value /= den
            return Num(value, tok.offset)
        if tok.kind == "name":
            self._next()
            if tok.text in ("t", "x"):
                return Var(tok.text, tok.offset)
            if tok.text == "sqrt":
                self._expect("(")
                n = self._natural()
                self._expect(")")
                return Sqrt(n, tok.offset)
            raise UnknownSymbol(f"unknown symbol {tok.text!r}", tok.offset)
        if self._is("("):
            self._next()
            e = self.expr()
            self._expect(")")
            return e
        raise PolySyntaxError(f"expected an operand, found {self._describe()}", tok.offset)


def parse_poly(src: str) -> PolyExpr:
    """Parse ``src`` into an AST; errors carry the byte offset of the offending token."""
    return _Parser(src).parse()


def _sqrt_args(e: Expr) -> set[int]:
    if isinstance(e, Sqrt):
        return {e.n}
    if isinstance(e, Neg):
        return _sqrt_args(e.operand)
    if isinstance(e, BinOp):
        return _sqrt_args(e.left) | _sqrt_args(e.right)
    if isinstance(e, Pow):
        return _sqrt_args(e.base)
    return set()


def infer_field(e: Expr) -> QuadField:
    """The smallest Q(sqrt d) containing every ``sqrt(n)`` leaf."""
    ds = {k for k in (_split_square(n)[1] for n in _sqrt_args(e)) if k not in (0, 1)}
    if len(ds) > 1:
        raise FieldMismatch(f"square roots from several fields: {sorted(ds)}")
    return QuadField(ds.pop()) if ds else QQ


def lower(e: Expr, field: QuadField | str = "auto") -> XPoly:
    """Evaluate the AST as an element of K(t)[x]."""
    if field == "auto":
        field = infer_field(e)
    return _lower(e, field)


def _lower(e: Expr, field: QuadField) -> XPoly:
    if isinstance(e, Num):
        return XPoly((e.value,), field)
    if isinstance(e, Sqrt):
        return XPoly((field.sqrt(e.n),), field)
    if isinstance(e, Var):
        if e.name == "x":
            return XPoly.var(field)
        return XPoly((RFunc.var(field),), field)
    if isinstance(e, Neg):
        return -_lower(e.operand, field)
    if isinstance(e, Pow):
        return _lower(e.base, field) ** e.exponent
    a, b = _lower(e.left, field), _lower(e.right, field)
    if e.op == "+":
        return a + b
    if e.op == "-":
        return a - b
    if e.op == "*":
        return a * b
    if b.degree() > 0:
        raise PolySyntaxError("division by a polynomial in x", e.offset)
    if not b:
        raise PolySyntaxError("division by zero", e.offset)
    return a * XPoly((b[0].inverse(),), field)


def parse_value(src: str, field: QuadField | str = "auto") -> XPoly:
    return lower(parse_poly(src), field)


def parse_rfunc(src: str, field: QuadField | str = "auto") -> RFunc:
    """Parse an element of K(t); x must not occur."""
    p = parse_value(src, field)
    if p.degree() > 0:
        raise PolySyntaxError("x is not allowed here", 0)
    return p[0]


# rendering


def _scalar_text(c: QuadScalar) -> str:
    """A coefficient as an operand: ``a/b`` or ``(a + b*sqrt(d))``."""
    if not c.b:
        return str(c.a)
    parts = []
    if c.a:
        parts.append(str(c.a))
    mag = abs(c.b)
    surd = f"sqrt({c.d})" if mag == 1 else f"{mag}*sqrt({c.d})"
    if parts:
        parts.append(("+ " if c.b > 0 else "- ") + surd)
    else:
        parts.append(surd if c.b > 0 else "-" + surd)
    return "(" + " ".join(parts) + ")"


def _monomials(terms: dict[tuple[int, int], QuadScalar]) -> str:
    """Sum of ``c t^i x^j``, ordered by x-degree then t-degree, both descending."""
    if not terms:
        return "0"
    out: list[str] = []
    for (i, j) in sorted(terms, key=lambda k: (k[1], k[0]), reverse=True):
        c = terms[(i, j)]
        powers = [v if e == 1 else f"{v}^{e}" for v, e in (("t", i), ("x", j)) if e]
        negative = not c.b and c.a < 0
        mag = -c if negative else c
        if powers and mag == 1:
            body = "*".join(powers)
        else:
            body = "*".join([_scalar_text(mag)] + powers)
        if not out:
            out.append(("-" if negative else "") + body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out)


def _wrap(text: str, n_terms: int) -> str:
    return f"({text})" if n_terms > 1 else text


def render_poly(p: XPoly | UPoly | RFunc) -> str:
    """Canonical text; ``parse_value(render_poly(p), p.field)`` gives ``p`` back."""
    if isinstance(p, UPoly):
        return _monomials({(i, 0): c for i, c in enumerate(p.coeffs) if c})
    if isinstance(p, RFunc):
        p = XPoly((p,), p.field)
    num, den = p.clear_denominators()
    terms = num.terms()
    text = _monomials(terms)
    if den.degree() == 0:
        return text
    den_terms = {(i, 0): c for i, c in enumerate(den.coeffs) if c}
    return f"{_wrap(text, len(terms))}/{_wrap(_monomials(den_terms), len(den_terms))}"


def render_ast(e: Expr) -> str:
    """Fully parenthesized echo of the AST (before lowering)."""
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Sqrt):
        return f"sqrt({e.n})"
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Neg):
        return f"(-{render_ast(e.operand)})"
    if isinstance(e, Pow):
        return f"{render_ast(e.base)}^{e.exponent}"
    return f"({render_ast(e.left)} {e.op} {render_ast(e.right)})"

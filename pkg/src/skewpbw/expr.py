"""Text form of coefficients and polynomials.

Grammar (``^`` binds tighter than ``*`` and ``/``, which bind tighter than
``+`` and ``-``)::

    sum    := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | power
    power  := atom ('^' '-'? INT)?
    atom   := NUMBER | NAME | '(' sum ')'

Names are parameters of the coefficient ring or variables of the
presentation.  Division is only by units of the coefficient ring; negative
exponents need a unit base (a Laurent variable, a parameter, a scalar).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotAUnit, ParseError, SchemaError
from .ring import SkewPoly, multiply

__all__ = [
    "Node",
    "parse_expression",
    "parse_coefficient",
    "parse_polynomial",
    "format_coefficient",
    "format_polynomial",
    "format_monomial",
]

_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


@dataclass(frozen=True)
class Node:
    """AST node; ``pos`` is the 0-based column of its first token."""

    op: str
    args: tuple
    pos: int


def _tokenize(text):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, name, sym = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            out.append(("num", num, start))
        elif name is not None:
            out.append(("name", name, start))
        else:
            if sym not in "+-*/^()":
                raise ParseError(f"unexpected character {sym!r}", 1, start + 1)
            out.append((sym, sym, start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.toks[self.k]

    def take(self, kind=None):
        tok = self.toks[self.k]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {what}", 1, tok[2] + 1)
        self.k += 1
        return tok

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 1, 1)
        node = self.sum()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", 1, tok[2] + 1)
        return node

    def sum(self):
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()
            rhs = self.term()
            node = Node("add" if op[0] == "+" else "sub", (node, rhs), node.pos)
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0] in ("*", "/"):
            op = self.take()
            rhs = self.factor()
            node = Node("mul" if op[0] == "*" else "div", (node, rhs), node.pos)
        return node

    def factor(self):
        if self.peek()[0] == "-":
            tok = self.take()
            return Node("neg", (self.factor(),), tok[2])
        return self.power()

    def power(self):
        node = self.atom()
        if self.peek()[0] == "^":
            self.take()
            sign = 1
            if self.peek()[0] == "-":
                self.take()
                sign = -1
            tok = self.take("num")
            if not tok[1].isdigit():
                raise ParseError("exponents must be integers", 1, tok[2] + 1)
            node = Node("pow", (node, sign * int(tok[1])), node.pos)
        return node

    def atom(self):
        tok = self.peek()
        if tok[0] == "num":
            self.take()
            return Node("num", (Fraction(tok[1]),), tok[2])
        if tok[0] == "name":
            self.take()
            return Node("name", (tok[1],), tok[2])
        if tok[0] == "(":
            self.take()
            node = self.sum()
            self.take(")")
            return node
        what = "end of input" if tok[0] == "end" else repr(tok[1])
        raise ParseError(f"unexpected {what}", 1, tok[2] + 1)


def parse_expression(text):
    """Parse ``text`` into a :class:`Node` tree."""
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}", 1, 1)
    return _Parser(text).parse()


def _err(node, message):
    return ParseError(message, 1, node.pos + 1)


# ---------------------------------------------------------------------------
# evaluation


def _coeff_eval(node, dom):
    op, args = node.op, node.args
    if op == "num":
        return dom.coerce(args[0])
    if op == "name":
        if args[0] not in dom.params:
            raise _err(node, f"unknown parameter {args[0]!r}")
        return dom.param(args[0])
    if op == "neg":
        return -_coeff_eval(args[0], dom)
    a = _coeff_eval(args[0], dom)
    if op == "pow":
        k = args[1]
        if k < 0:
            a = _coeff_inv(args[0], dom, a)
        out = dom.one
        for _ in range(abs(k)):
            out = out * a
        return out
    b = _coeff_eval(args[1], dom)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    return a * _coeff_inv(args[1], dom, b)


def _coeff_inv(node, dom, a):
    try:
        if not dom.is_unit(a):
            raise NotAUnit("not a unit")
        return dom.inv(a)
    except NotAUnit:
        raise _err(node, f"{dom.format(a)} is not a unit of the coefficient ring") from None


def parse_coefficient(text, domain):
    """Evaluate ``text`` in a coefficient domain."""
    return _coeff_eval(parse_expression(text), domain)


def _poly_eval(node, p):
    op, args = node.op, node.args
    be = p.backend
    if op == "num":
        return p.const(args[0])
    if op == "name":
        name = args[0]
        if name in p.names:
            return p.var(p.names.index(name))
        if name in be.domain.params:
            return p.const(be.domain.param(name))
        raise _err(node, f"unknown name {name!r}")
    if op == "neg":
        return -_poly_eval(args[0], p)
    a = _poly_eval(args[0], p)
    if op == "pow":
        k = args[1]
        if k < 0:
            a = _poly_inv(args[0], p, a)
        out = p.one()
        for _ in range(abs(k)):
            out = multiply(p, out, a)
        return out
    b = _poly_eval(args[1], p)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return multiply(p, a, b)
    zero = (0,) * p.n
    if set(b) != {zero}:
        raise _err(args[1], "can only divide by a coefficient")
    return multiply(p, a, p.const(_coeff_inv(args[1], be.domain, b[zero])))


def _poly_inv(node, p, f):
    """Inverse of a unit monomial ``a x^e`` (``e`` supported on Laurent variables)."""
    if len(f) != 1:
        raise _err(node, "negative exponent on a non-monomial")
    (e, a), = f.items()
    for k, x in enumerate(e):
        if x and k >= p.r:
            raise SchemaError(f"negative exponent on non-Laurent variable {p.names[k]}")
    a_inv = _coeff_inv(node, p.backend.domain, a)
    mono = p.monomial(tuple(-x for x in e))
    g = multiply(p, mono, p.const(a_inv))
    # x^{-e} x^{e} = u x^0 with u a unit; rescale on the left
    prod = multiply(p, g, f)
    u = prod[(0,) * p.n]
    return multiply(p, p.const(p.backend.inv(u)), g)


def parse_polynomial(text, presentation):
    """Evaluate ``text`` as an element of the presentation."""
    return _poly_eval(parse_expression(text), presentation)


# ---------------------------------------------------------------------------
# printing


def format_coefficient(domain, a):
    return domain.format(a)


def format_monomial(p, e):
    return "*".join(name if k == 1 else f"{name}^{k}" for name, k in zip(p.names, e) if k)


def format_polynomial(p, f):
    """Terms in decreasing lex order, e.g. ``q^2*x1^2*d1 + (q+1)*x1``."""
    if not f:
        return "0"
    dom = p.backend.domain
    one = p.backend.one
    parts = []
    for e in sorted(f, reverse=True):
        a = f[e]
        mono = format_monomial(p, e)
        text = dom.format(a)
        if not dom.is_atomic(a):
            text = f"({text})"
        if not mono:
            term = text
        elif a == one:
            term = mono
        elif a == -one:
            term = "-" + mono
        else:
            term = f"{text}*{mono}"
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        out += " - " + term[1:] if term.startswith("-") else " + " + term
    return out

"""Recursive-descent parser for algebra expressions.

Grammar (whitespace insignificant):

    expr   := ('+'|'-')? term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ('^' '-'? integer)?
    atom   := integer | ident | '(' expr ')'

Identifiers are the X/Y generators of the presentation, the base-ring
generators, and the field's distinguished symbol (q or zeta_n).  Division is
only defined by elements that reduce to a nonzero scalar; negative exponents
are allowed on scalars and on Laurent ring generators exclusively.
"""

from __future__ import annotations

from .core import GwaElement, GwaPresentation
from .errors import ExprSyntaxError, UnknownSymbol
from .field import FieldElement, FieldSpec
from .ring import BaseRing, RingElement


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind, text, pos):
        self.kind = kind
        self.text = text
        self.pos = pos


def _tokenize(text: str):
    out = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(_Token("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            out.append(_Token("ident", text[i:j], i))
            i = j
            continue
        if ch in "+-*/^()":
            out.append(_Token(ch, ch, i))
            i += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", i)
    out.append(_Token("end", "", n))
    return out


class _Parser:
    """Parses onto an arbitrary value algebra supplied by hooks."""

    def __init__(self, tokens, hooks):
        self.tokens = tokens
        self.k = 0
        self.hooks = hooks

    def peek(self):
        return self.tokens[self.k]

    def advance(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect(self, kind):
        tok = self.peek()
        if tok.kind != kind:
            raise ExprSyntaxError(f"expected {kind!r}, found {tok.text or 'end of input'!r}", tok.pos)
        return self.advance()

    def parse(self):
        tok = self.peek()
        if tok.kind == "end":
            raise ExprSyntaxError("empty expression", tok.pos)
        value = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ExprSyntaxError(f"unexpected trailing input {tok.text!r}", tok.pos)
        return value

    def expr(self):
        negate = False
        if self.peek().kind in ("+", "-"):
            negate = self.advance().kind == "-"
        value = self.term()
        if negate:
            value = self.hooks["neg"](value)
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            rhs = self.term()
            value = self.hooks["sub"](value, rhs) if op == "-" else self.hooks["add"](value, rhs)
        return value

    def term(self):
        value = self.factor()
        while self.peek().kind in ("*", "/"):
            op = self.advance()
            rhs = self.factor()
            if op.kind == "*":
                value = self.hooks["mul"](value, rhs)
            else:
                value = self.hooks["div"](value, rhs, op.pos)
        return value

    def factor(self):
        value = self.atom()
        if self.peek().kind == "^":
            self.advance()
            sign = 1
            if self.peek().kind == "-":
                self.advance()
                sign = -1
            tok = self.expect("int")
            value = self.hooks["pow"](value, sign * int(tok.text), tok.pos)
        return value

    def atom(self):
        tok = self.peek()
        if tok.kind == "int":
            self.advance()
            return self.hooks["int"](int(tok.text))
        if tok.kind == "ident":
            self.advance()
            return self.hooks["ident"](tok.text, tok.pos)
        if tok.kind == "(":
            self.advance()
            value = self.expr()
            self.expect(")")
            return value
        raise ExprSyntaxError(f"expected a value, found {tok.text or 'end of input'!r}", tok.pos)


def _scalar_symbols(spec: FieldSpec):
    sym = spec.gen_symbol()
    return {sym: spec.generator()} if sym else {}


def parse_scalar(spec: FieldSpec, text: str) -> FieldElement:
    """Parse field-element text such as "3/7", "zeta3^2+1" or "q^2/(q-1)"."""
    symbols = _scalar_symbols(spec)

    def ident(name, pos):
        if name in symbols:
            return symbols[name]
        raise UnknownSymbol(f"unknown symbol {name!r}", pos)

    def div(a, b, pos):
        if b.is_zero():
            raise ExprSyntaxError("division by zero", pos)
        return a / b

    def power(a, k, pos):
        if k < 0 and a.is_zero():
            raise ExprSyntaxError("negative power of zero", pos)
        return a ** k

    hooks = {
        "int": spec.from_int,
        "ident": ident,
        "add": lambda a, b: a + b,
        "sub": lambda a, b: a - b,
        "mul": lambda a, b: a * b,
        "neg": lambda a: -a,
        "div": div,
        "pow": power,
    }
    return _Parser(_tokenize(text), hooks).parse()


def parse_ring_element(ring: BaseRing, text: str) -> RingElement:
    """Parse text over the base ring only (no X/Y generators)."""
    symbols = _scalar_symbols(ring.field)

    def ident(name, pos):
        if name in ring.gens:
            return ring.gen(name)
        if name in symbols:
            return ring.scalar(symbols[name])
        raise UnknownSymbol(f"unknown symbol {name!r}", pos)

    def div(a, b, pos):
        c = b.as_scalar()
        if c is None:
            raise ExprSyntaxError("division is only defined by scalars", pos)
        if c.is_zero():
            raise ExprSyntaxError("division by zero", pos)
        return a * c.inv()

    def power(a, k, pos):
        if k >= 0:
            return a ** k
        c = a.as_scalar()
        if c is not None:
            if c.is_zero():
                raise ExprSyntaxError("negative power of zero", pos)
            return ring.scalar(c.inv() ** (-k))
        if a.unit_inverse() is None:
            raise ExprSyntaxError("negative exponents need a Laurent generator or scalar", pos)
        return a ** k

    hooks = {
        "int": ring.from_int,
        "ident": ident,
        "add": lambda a, b: a + b,
        "sub": lambda a, b: a - b,
        "mul": lambda a, b: a * b,
        "neg": lambda a: -a,
        "div": div,
        "pow": power,
    }
    return _Parser(_tokenize(text), hooks).parse()


def parse_element(pres: GwaPresentation, text: str) -> GwaElement:
    """Parse and normalize an expression in the generalized Weyl algebra."""
    ring = pres.ring
    symbols = _scalar_symbols(ring.field)
    x_index = {name: i for i, name in enumerate(pres.x_names)}
    y_index = {name: i for i, name in enumerate(pres.y_names)}

    def ident(name, pos):
        if name in x_index:
            return pres.X(x_index[name])
        if name in y_index:
            return pres.Y(y_index[name])
        if name in ring.gens:
            return pres.embed_ring(ring.gen(name))
        if name in symbols:
            return pres.scalar(symbols[name])
        raise UnknownSymbol(f"unknown symbol {name!r}", pos)

    def div(a, b, pos):
        r = b.as_ring_element()
        c = r.as_scalar() if r is not None else None
        if c is None:
            raise ExprSyntaxError("division is only defined by scalars", pos)
        if c.is_zero():
            raise ExprSyntaxError("division by zero", pos)
        return a.scale(c.inv())

    def power(a, k, pos):
        if k >= 0:
            return a ** k
        r = a.as_ring_element()
        if r is None:
            raise ExprSyntaxError("negative exponents need a Laurent generator or scalar", pos)
        inv = r.unit_inverse()
        if inv is None:
            raise ExprSyntaxError("negative exponents need a Laurent generator or scalar", pos)
        return pres.embed_ring(inv ** (-k))

    hooks = {
        "int": lambda v: pres.scalar(ring.field.from_int(v)),
        "ident": ident,
        "add": lambda a, b: a + b,
        "sub": lambda a, b: a - b,
        "mul": lambda a, b: a * b,
        "neg": lambda a: -a,
        "div": div,
        "pow": power,
    }
    return _Parser(_tokenize(text), hooks).parse()

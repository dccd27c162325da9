"""Parsers for class expressions ("2*u1 + 3*h", "u1*u2", "h^2") and for
equation scripts fed to the unknown solver."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .ring import GradedClass, RingPresentation

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_']*)|(.))")


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str):
        self.message = message
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}\n  {text}\n  {' ' * pos}^")

    def to_json(self) -> dict:
        return {"type": "parse_error", "message": self.message, "position": self.pos, "text": self.text}


@dataclass(frozen=True)
class Token:
    kind: str  # int | id | op | end
    value: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        num, ident, op = m.groups()
        start = m.start(m.lastindex) if m.lastindex else pos
        if num is not None:
            out.append(Token("int", num, start))
        elif ident is not None:
            out.append(Token("id", ident, start))
        elif op is not None:
            if op.isspace():
                pos = m.end()
                continue
            if op not in "+-*^()=/,;":
                raise ParseError(f"unexpected character {op!r}", start, text)
            out.append(Token("op", op, start))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def accept(self, op: str) -> bool:
        if self.tok.kind == "op" and self.tok.value == op:
            self.i += 1
            return True
        return False

    def expect(self, op: str) -> Token:
        if not (self.tok.kind == "op" and self.tok.value == op):
            self.fail(f"expected {op!r}")
        return self.advance()

    def fail(self, message: str):
        found = self.tok.value or "end of input"
        raise ParseError(f"{message}, found {found!r}", self.tok.pos, self.text)

    def expect_end(self):
        if self.tok.kind != "end":
            self.fail("unexpected trailing input")


class _ClassParser(_Parser):
    def __init__(self, text: str, ring: RingPresentation):
        super().__init__(text)
        self.ring = ring

    def expr(self) -> GradedClass:
        if self.accept("-"):
            total = -self.term()
        else:
            self.accept("+")
            total = self.term()
        while self.tok.kind == "op" and self.tok.value in "+-":
            op = self.advance().value
            t = self.term()
            total = total + t if op == "+" else total - t
        return total

    def term(self) -> GradedClass:
        out = self.power()
        while self.accept("*"):
            out = out * self.power()
        if isinstance(out, int):
            # bare integers are multiples of the unit
            return self.ring.one() * out if out else self.ring.zero()
        return out

    def power(self):
        base = self.atom()
        if self.accept("^"):
            t = self.tok
            if t.kind != "int":
                self.fail("expected an integer exponent")
            self.advance()
            return base ** int(t.value)
        return base

    def atom(self):
        t = self.tok
        if t.kind == "int":
            self.advance()
            return int(t.value)
        if t.kind == "id":
            self.advance()
            if t.value not in self.ring.degrees:
                raise ParseError(f"unknown class {t.value!r} in {self.ring.name}", t.pos, self.text)
            return self.ring.element(t.value)
        if self.accept("("):
            inner = self.expr()
            self.expect(")")
            return inner
        if self.accept("-"):
            return -1 * self.atom()
        self.fail("expected a number, a class name or '('")


def parse_class_expr(text: str, ring: RingPresentation) -> GradedClass:
    """Integer combination of products of basis classes of ``ring``."""
    p = _ClassParser(text, ring)
    if p.tok.kind == "end":
        p.fail("empty expression")
    out = p.expr()
    p.expect_end()
    return out


# ------------------------------------------------------------ equation scripts

class _ExprParser(_Parser):
    """Linear combinations of monomials in named integer unknowns and
    evaluable sphere invariants GW(g, d; ins, ...)."""

    def expr(self):
        from .gw import GWExpression

        if self.accept("-"):
            total = -self.term()
        else:
            self.accept("+")
            total = self.term()
        while self.tok.kind == "op" and self.tok.value in "+-":
            op = self.advance().value
            t = self.term()
            total = total + t if op == "+" else total - t
        return GWExpression.coerce(total)

    def term(self):
        out = self.factor()
        while self.tok.kind == "op" and self.tok.value in "*/":
            op = self.advance().value
            if op == "*":
                out = out * self.factor()
            else:
                t = self.tok
                if t.kind != "int" or int(t.value) == 0:
                    self.fail("expected a nonzero integer divisor")
                self.advance()
                out = out * Fraction(1, int(t.value))
        return out

    def factor(self):
        from .gw import GWExpression, sphere_symbol

        t = self.tok
        if t.kind == "int":
            self.advance()
            return GWExpression.constant(int(t.value))
        if t.kind == "id" and t.value == "GW" and self.tokens[self.i + 1].value == "(":
            self.advance()
            self.expect("(")
            g = self._int()
            self.expect(",")
            d = self._int()
            ins = []
            if self.accept(";"):
                ins.append(self._insertion())
                while self.accept(","):
                    ins.append(self._insertion())
            self.expect(")")
            return sphere_symbol(g, d, ins)
        if t.kind == "id":
            self.advance()
            return GWExpression.unknown(t.value)
        if self.accept("("):
            inner = self.expr()
            self.expect(")")
            return inner
        if self.accept("-"):
            return -self.factor()
        self.fail("expected a number, an unknown, GW(...) or '('")

    def _int(self) -> int:
        neg = self.accept("-")
        t = self.tok
        if t.kind != "int":
            self.fail("expected an integer")
        self.advance()
        return -int(t.value) if neg else int(t.value)

    def _insertion(self) -> str:
        t = self.tok
        if t.kind == "int" and t.value == "1" or t.kind == "id" and t.value == "h":
            self.advance()
            return t.value
        self.fail("sphere insertions are '1' or 'h'")


def parse_equation(text: str):
    """'lhs = rhs' -> Equation."""
    from .gw import Equation

    p = _ExprParser(text)
    lhs = p.expr()
    p.expect("=")
    rhs = p.expr()
    p.expect_end()
    return Equation(lhs, rhs)


def parse_equation_script(text: str) -> list:
    """One equation per line; '#' starts a comment."""
    eqs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        try:
            eqs.append(parse_equation(body))
        except ParseError as exc:
            exc.args = (f"line {lineno}: {exc.args[0]}",)
            exc.message = f"line {lineno}: {exc.message}"
            raise
    return eqs

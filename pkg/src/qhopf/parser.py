"""Expression parser for elements of a presented algebra.

Grammar (whitespace ignored, no implicit multiplication)::

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := atom ('^' int)?
    atom     := rational | scalar | generator | '(' expr ')'
    rational := int ('/' uint)?

A leading '-' is accepted on a term.  Negative exponents are allowed only
on q and on invertible generators.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .ncalg import NcPoly, Presentation
from .scalar import _BITS, _MASK, VARS, FieldElement, rational, symbol

SCALARS = VARS + ("t",)
GENERATOR_NAMES = ("alpha", "beta", "gamma", "delta", "c", "cinv", "x", "y", "z",
                   "a", "b", "ainv")

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class ParseError(ValueError):
    """Syntax or semantic error at a character offset of the input."""

    def __init__(self, message: str, pos: int, text: str):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}\n  {text}\n  {' ' * pos}^")


def _tokenize(text: str) -> list:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            toks.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2), start))
        else:
            toks.append(("op", m.group(3), start))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, pres: Presentation):
        self.text = text
        self.pres = pres
        self.toks = _tokenize(text)
        self.i = 0

    def error(self, msg, pos=None):
        raise ParseError(msg, self.toks[self.i][2] if pos is None else pos, self.text)

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def accept(self, op):
        kind, val, _ = self.peek()
        if kind == "op" and val == op:
            self.i += 1
            return True
        return False

    def parse(self) -> NcPoly:
        out = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            self.error(f"unexpected {val!r}")
        return out

    def expr(self) -> NcPoly:
        neg = self.accept("-")
        out = self.term()
        if neg:
            out = -out
        while True:
            if self.accept("+"):
                out = out + self.term()
            elif self.accept("-"):
                out = out - self.term()
            else:
                return out

    def term(self) -> NcPoly:
        out = self.factor()
        while self.accept("*"):
            out = out * self.factor()
        return out

    def factor(self) -> NcPoly:
        start = self.peek()[2]
        value, kind = self.atom()
        if not self.accept("^"):
            return value
        neg = self.accept("-")
        tok = self.take()
        if tok[0] != "int":
            self.error("expected an integer exponent", tok[2])
        k = -tok[1] if neg else tok[1]
        if k >= 0:
            return value ** k
        if kind == "q":
            return self.pres.scalar(symbol("q", k))
        if isinstance(kind, tuple) and kind[0] == "gen":
            g = self.pres.generators[kind[1]]
            if g.invertible and g.inverse is not None:
                return self.pres.gen(g.inverse) ** (-k)
        self.error("negative exponent on a non-invertible factor", start)

    def atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            num = val
            if self.accept("/"):
                tok = self.take()
                if tok[0] != "int":
                    self.error("expected an unsigned integer denominator", tok[2])
                if tok[1] == 0:
                    self.error("zero denominator", tok[2])
                return self.pres.scalar(rational(Fraction(num, tok[1]))), "rational"
            return self.pres.scalar(rational(num)), "rational"
        if kind == "name":
            if val in SCALARS:
                return self.pres.scalar(symbol(val)), val
            if val in GENERATOR_NAMES or val in self.pres._index:
                try:
                    idx = self.pres.index(val)
                except KeyError:
                    self.error(f"generator {val!r} does not belong to {self.pres.name}", pos)
                return self.pres.gen(val), ("gen", idx)
            self.error(f"unknown symbol {val!r}", pos)
        if kind == "op" and val == "(":
            inner = self.expr()
            if not self.accept(")"):
                self.error("expected ')'")
            return inner, "group"
        if kind == "end":
            self.error("unexpected end of input", pos)
        self.error(f"unexpected {val!r}", pos)


def parse_expression(text: str, pres: Presentation) -> NcPoly:
    """Parse `text` into a normalized element of `pres`."""
    return _Parser(text, pres).parse()


def _mono_exps(m: int) -> list:
    return [(m >> (_BITS * i)) & _MASK for i in range(len(VARS))]


def _poly_over_q_power(n: dict, d: dict):
    """Terms (coef, exps) of n/d when d is c*q^k; None otherwise."""
    if len(d) != 1:
        return None
    (dm, dc), = d.items()
    dexp = _mono_exps(dm)
    if any(dexp[1:]):
        return None
    out = []
    for m, c in sorted(n.items()):
        e = _mono_exps(m)
        e[0] -= dexp[0]
        out.append((Fraction(c, dc), e))
    return out


def scalar_expression(x: FieldElement) -> str:
    """Grammar-conformant text for a scalar whose denominators are q-powers.

    Raises ValueError for coefficients outside that range.
    """
    parts = []
    pieces = [(x.n, x.d, None)]
    if x.tn is not None:
        pieces.append((x.tn, x.td, "t"))
    for n, d, extra in pieces:
        terms = _poly_over_q_power(n, d)
        if terms is None:
            raise ValueError(f"{x} has a denominator that is not a power of q")
        for c, e in terms:
            factors = [f"{v}^{k}" if k != 1 else v for v, k in zip(VARS, e) if k]
            if extra:
                factors.append(extra)
            body = "*".join(factors)
            num = str(abs(c))
            if body:
                text = body if abs(c) == 1 else f"{num}*{body}"
            else:
                text = num
            parts.append(("-" if c < 0 else "+", text))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, text in parts[1:]:
        out += f" {sign} {text}"
    return out


def expression_text(x: NcPoly) -> str:
    """Text that `parse_expression` maps back to `x` (see scalar_expression)."""
    if not x.terms:
        return "0"
    pres = x.pres
    chunks = []
    for w in sorted(x.terms, key=pres.word_key):
        coef = scalar_expression(x.terms[w])
        word = "*".join(pres.generators[g].name for g in w)
        if not word:
            chunks.append(f"({coef})")
        elif coef == "1":
            chunks.append(word)
        else:
            chunks.append(f"({coef})*{word}")
    return " + ".join(chunks)

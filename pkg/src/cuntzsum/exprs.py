"""Expression grammar, pretty-printer, and the line-oriented wire format.

Grammar (whitespace insensitive)::

    element  := '0' | term ('+' term)*
    term     := scalar ['*'] factor ('*' factor)*
              | factor ('*' factor)*
    factor   := 's(' int ',' int ')' ['^*']
              | 'I(' int ')'
              | '(' element ')' ['^*']
    scalar   := '[' rational [('+'|'-') rational 'i'] ']'
    rational := ['-'] int ['/' int]

Printing canonicalizes first, then emits terms in the global monomial
order (component, gauge degree, nu-length, nu, mu), so parsing a printed
element reproduces its equality class byte-for-byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    AlgebraElement,
    CuntzMonomial,
    ZERO_ELEMENT,
    canonical_form,
    monomial,
    raw_word,
    reduce_word,
    unit,
)
from .errors import InputError, ParseError
from .scalars import ONE, Scalar
from .tensors import TensorElement, canonical_tensor_form


# ---------------------------------------------------------------------------
# AST

@dataclass(frozen=True)
class ScalarLit:
    value: Scalar


@dataclass(frozen=True)
class GeneratorNode:
    n: int
    index: int
    starred: bool


@dataclass(frozen=True)
class UnitNode:
    n: int


@dataclass(frozen=True)
class ProductNode:
    coeff: ScalarLit | None
    factors: tuple


@dataclass(frozen=True)
class SumNode:
    terms: tuple


@dataclass(frozen=True)
class AdjointNode:
    inner: object


# ---------------------------------------------------------------------------
# Tokenizer

_SYMBOLS = {
    "+": "PLUS",
    "-": "MINUS",
    "*": "STAR",
    "(": "LPAREN",
    ")": "RPAREN",
    "[": "LBRACK",
    "]": "RBRACK",
    ",": "COMMA",
    "/": "SLASH",
}


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch == "^":
            if text[pos : pos + 2] == "^*":
                tokens.append(("DAGGER", "^*", pos))
                pos += 2
                continue
            raise ParseError("expected '^*'", pos)
        if ch in _SYMBOLS:
            tokens.append((_SYMBOLS[ch], ch, pos))
            pos += 1
            continue
        if ch.isdigit():
            start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            tokens.append(("INT", text[start:pos], start))
            continue
        if ch in "sIi":
            tokens.append(("NAME", ch, pos))
            pos += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", pos)
    tokens.append(("EOF", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind, what=None):
        tok = self.advance()
        if tok[0] != kind:
            raise ParseError(f"expected {what or kind}, found {tok[1]!r}", tok[2])
        return tok

    def parse(self) -> SumNode:
        node = self.element()
        tok = self.peek()
        if tok[0] != "EOF":
            raise ParseError(f"unexpected trailing input {tok[1]!r}", tok[2])
        return node

    def element(self):
        if self.peek()[0] == "INT" and self.peek()[1] == "0":
            save = self.pos
            self.advance()
            if self.peek()[0] in ("EOF", "RPAREN"):
                return SumNode(())
            self.pos = save
        terms = [self.term()]
        while self.peek()[0] == "PLUS":
            self.advance()
            terms.append(self.term())
        return SumNode(tuple(terms))

    def term(self):
        coeff = None
        if self.peek()[0] == "LBRACK":
            coeff = self.scalar()
            if self.peek()[0] == "STAR":
                self.advance()
        factors = [self.factor()]
        while self.peek()[0] == "STAR":
            self.advance()
            factors.append(self.factor())
        return ProductNode(coeff, tuple(factors))

    def factor(self):
        tok = self.peek()
        if tok[0] == "NAME" and tok[1] == "s":
            self.advance()
            self.expect("LPAREN", "'(' after s")
            n = int(self.expect("INT", "component index")[1])
            self.expect("COMMA", "','")
            i = int(self.expect("INT", "generator index")[1])
            self.expect("RPAREN", "')'")
            starred = False
            if self.peek()[0] == "DAGGER":
                self.advance()
                starred = True
            return GeneratorNode(n, i, starred)
        if tok[0] == "NAME" and tok[1] == "I":
            self.advance()
            self.expect("LPAREN", "'(' after I")
            n = int(self.expect("INT", "component index")[1])
            self.expect("RPAREN", "')'")
            return UnitNode(n)
        if tok[0] == "LPAREN":
            self.advance()
            inner = self.element()
            self.expect("RPAREN", "')'")
            if self.peek()[0] == "DAGGER":
                self.advance()
                return AdjointNode(inner)
            return inner
        raise ParseError(f"expected a factor, found {tok[1]!r}", tok[2])

    def scalar(self) -> ScalarLit:
        self.expect("LBRACK", "'['")
        re = self.rational()
        im = Fraction(0)
        tok = self.peek()
        if tok[0] in ("PLUS", "MINUS"):
            sign = 1 if tok[0] == "PLUS" else -1
            self.advance()
            im = sign * self.rational()
            name = self.expect("NAME", "'i'")
            if name[1] != "i":
                raise ParseError("expected 'i' after imaginary part", name[2])
        self.expect("RBRACK", "']'")
        return ScalarLit(Scalar(re, im))

    def rational(self) -> Fraction:
        sign = 1
        if self.peek()[0] == "MINUS":
            self.advance()
            sign = -1
        num = int(self.expect("INT", "integer")[1])
        den = 1
        if self.peek()[0] == "SLASH":
            self.advance()
            den = int(self.expect("INT", "denominator")[1])
            if den == 0:
                raise ParseError("zero denominator", self.tokens[self.pos - 1][2])
        return Fraction(sign * num, den)


def parse_ast(text: str) -> SumNode:
    return _Parser(text).parse()


def eval_ast(node) -> AlgebraElement:
    if isinstance(node, SumNode):
        out = ZERO_ELEMENT
        for term in node.terms:
            out = out + eval_ast(term)
        return out
    if isinstance(node, ProductNode):
        out = None
        for factor in node.factors:
            value = eval_ast(factor)
            out = value if out is None else out * value
        if out is None:
            out = ZERO_ELEMENT
        if node.coeff is not None:
            out = out.scale(node.coeff.value)
        return out
    if isinstance(node, GeneratorNode):
        if node.n < 1:
            raise InputError(f"generator s({node.n},{node.index}): component must be >= 1")
        if not 1 <= node.index <= node.n:
            raise InputError(
                f"generator s({node.n},{node.index}): index {node.index} out of range 1..{node.n}"
            )
        return reduce_word(raw_word(node.n, ((node.index, node.starred),)))
    if isinstance(node, UnitNode):
        if node.n < 1:
            raise InputError(f"unit I({node.n}): component must be >= 1")
        return unit(node.n)
    if isinstance(node, AdjointNode):
        return eval_ast(node.inner).adjoint()
    raise TypeError(f"unknown AST node {node!r}")


def parse_element(text: str) -> AlgebraElement:
    return eval_ast(parse_ast(text))


# ---------------------------------------------------------------------------
# Pretty-printer

def render_monomial(mono: CuntzMonomial) -> str:
    if mono.is_unit():
        return f"I({mono.n})"
    parts = [f"s({mono.n},{i})" for i in mono.mu]
    parts += [f"s({mono.n},{i})^*" for i in reversed(mono.nu)]
    return "*".join(parts)


def _coeff_prefix(coeff: Scalar) -> str:
    return "" if coeff == ONE else f"[{coeff.literal()}] * "


def render_element(x: AlgebraElement) -> str:
    terms = canonical_form(x).terms()
    if not terms:
        return "0"
    return " + ".join(f"{_coeff_prefix(c)}{render_monomial(m)}" for m, c in terms)


def render_tensor(t: TensorElement) -> str:
    terms = canonical_tensor_form(t).terms()
    if not terms:
        return "0"
    return " + ".join(
        f"{_coeff_prefix(c)}({render_monomial(l)}) ⊗ ({render_monomial(r)})"
        for (l, r), c in terms
    )


# ---------------------------------------------------------------------------
# Line-oriented wire format

def _word_field(word: tuple[int, ...]) -> str:
    return ",".join(str(i) for i in word) if word else "-"


def _parse_word_field(field: str) -> tuple[int, ...]:
    field = field.strip()
    if field == "-":
        return ()
    return tuple(int(part) for part in field.split(","))


def _coeff_fields(c: Scalar) -> str:
    return f"{c.re_num}/{c.re_den} | {c.im_num}/{c.im_den}"


def serialize_element(x: AlgebraElement) -> str:
    lines = []
    for mono, coeff in canonical_form(x).terms():
        lines.append(
            f"{mono.n} | {_word_field(mono.mu)} | {_word_field(mono.nu)} | {_coeff_fields(coeff)}"
        )
    return "\n".join(lines)


def deserialize_element(text: str) -> AlgebraElement:
    terms = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        fields = [f.strip() for f in line.split("|")]
        if len(fields) != 5:
            raise InputError(f"line {lineno}: expected 5 fields, found {len(fields)}")
        n = int(fields[0])
        mu = _parse_word_field(fields[1])
        nu = _parse_word_field(fields[2])
        re = Fraction(fields[3])
        im = Fraction(fields[4])
        terms.append((monomial(n, mu, nu), Scalar(re, im)))
    return AlgebraElement(terms)


def serialize_tensor(t: TensorElement) -> str:
    lines = []
    for (l, r), coeff in canonical_tensor_form(t).terms():
        left = f"{l.n} | {_word_field(l.mu)} | {_word_field(l.nu)}"
        right = f"{r.n} | {_word_field(r.mu)} | {_word_field(r.nu)}"
        lines.append(f"{left} ⊗ {right} | {_coeff_fields(coeff)}")
    return "\n".join(lines)


def render_scalar(c: Scalar) -> str:
    return c.literal()

"""
Recursive-descent parser for algebra elements.

Grammar (multiplication is noncommutative and left-associative):

    Expr   := ('+'|'-')? Term (('+'|'-') Term)*
    Term   := Factor ('*'? Factor)*
    Factor := Atom ('^' SignedInt)?
    Atom   := 'x' | 'y' | 'i' | Rational | 'z{N}' | '(' Expr ')'

'i' is zeta_4 and 'z{N}' (also written zN) is zeta_N.
"""
import re
from fractions import Fraction
from typing import List, NamedTuple

from src.exact_arith import Cyclotomic
from src.utils.errors import AlgebraError, ParseError
from .algebra import AlgebraElement

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<number>\d+(?:/\d+)?)|(?P<root>z(?:\{\d+\}|\d+))|(?P<name>[xyi])|(?P<op>[-+*^()]))"
)


class Token(NamedTuple):
    kind: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN_RE.match(text, position)
        if not match:
            stripped = len(text[position:]) - len(text[position:].lstrip())
            raise ParseError(f"unexpected character {text[position + stripped]!r}", position + stripped)
        kind = match.lastgroup
        start = match.start(kind)
        tokens.append(Token(kind, match.group(kind), start))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def expect(self, text: str) -> Token:
        if self.current.text != text:
            found = self.current.text or "end of input"
            raise ParseError(f"expected {text!r}, found {found!r}", self.current.position)
        return self.advance()

    def parse(self) -> AlgebraElement:
        value = self.expr()
        if self.current.kind != "end":
            raise ParseError(f"unexpected {self.current.text!r}", self.current.position)
        return value

    def expr(self) -> AlgebraElement:
        negate = False
        if self.current.text in ("+", "-"):
            negate = self.advance().text == "-"
        value = self.term()
        if negate:
            value = -value
        while self.current.text in ("+", "-"):
            op = self.advance().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _starts_atom(self) -> bool:
        token = self.current
        return token.kind in ("number", "root", "name") or token.text == "("

    def term(self) -> AlgebraElement:
        value = self.factor()
        while True:
            if self.current.text == "*":
                self.advance()
                value = value * self.factor()
            elif self._starts_atom():
                value = value * self.factor()
            else:
                return value

    def factor(self) -> AlgebraElement:
        start = self.current
        if start.text == "x" and self.tokens[self.index + 1].text == "^":
            self.advance()
            self.advance()
            exponent = self.signed_int()
            if exponent < 0:
                raise ParseError("x is not invertible", start.position)
            return AlgebraElement.monomial(exponent, 0)
        if start.text == "y" and self.tokens[self.index + 1].text == "^":
            self.advance()
            self.advance()
            return AlgebraElement.monomial(0, self.signed_int())
        base = self.atom()
        if self.current.text != "^":
            return base
        self.advance()
        exponent = self.signed_int()
        try:
            return base ** exponent
        except AlgebraError as e:
            raise ParseError(f"cannot raise to power {exponent}: {e}", start.position) from e

    def signed_int(self) -> int:
        sign = 1
        if self.current.text in ("+", "-"):
            sign = -1 if self.advance().text == "-" else 1
        token = self.current
        if token.kind != "number" or "/" in token.text:
            raise ParseError("expected an integer exponent", token.position)
        self.advance()
        return sign * int(token.text)

    def atom(self) -> AlgebraElement:
        token = self.advance()
        if token.kind == "name":
            if token.text == "x":
                return AlgebraElement.x()
            if token.text == "y":
                return AlgebraElement.y()
            return AlgebraElement.scalar(Cyclotomic.root_of_unity(4, 1))
        if token.kind == "number":
            try:
                return AlgebraElement.scalar(Fraction(token.text))
            except ZeroDivisionError:
                raise ParseError("zero denominator", token.position) from None
        if token.kind == "root":
            order = int(re.sub(r"\D", "", token.text))
            if order < 1:
                raise ParseError("root of unity order must be positive", token.position)
            return AlgebraElement.scalar(Cyclotomic.root_of_unity(order, 1))
        if token.text == "(":
            value = self.expr()
            self.expect(")")
            return value
        found = token.text or "end of input"
        raise ParseError(f"unexpected {found!r}", token.position)


def parse_element(text: str) -> AlgebraElement:
    """
    Parse an element of CS from text.

    Raises:
        ParseError: Grammar violation, with the character position
    """
    return _Parser(text).parse()


def parse_scalar(text: str) -> Cyclotomic:
    """Parse text that must denote a scalar (no x or y left after normalizing)."""
    value = parse_element(text)
    if not value.is_scalar():
        raise ParseError(f"{text!r} is not a scalar", 0)
    return value.scalar_value()


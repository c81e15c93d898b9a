"""Parser for bundle expressions.

Grammar (whitespace-insensitive, ASCII):

    expr    := term   ( "(+)" term )*
    term    := factor ( "(x)" factor )*
    factor  := atom "*"*
    atom    := "O" "(" INT ")"
             | "S" | "T"
             | "F" "(" RAT { "," RAT } ")"
             | ("Sym" | "Alt") "^" INT "(" expr ")"
             | "(" expr ")"
    RAT     := INT [ "/" INT ]        denominator 1 or 2

"(x)" is tensor product, "(+)" direct sum, postfix "*" the dual.  "S" is
the spinor bundle, so "S*" parses to its dual (all coordinates 1/2) and
"T" to the tangent bundle.  "F(...)" names an irreducible by its weight;
the coordinates must be all-integer or all-half-integer.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .bundles import LeviBundle
from .roots import RootSystemB, WeightError

_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<tensor>\(\s*x\s*\))
      | (?P<oplus>\(\s*\+\s*\))
      | (?P<name>Sym|Alt|[OSTF])
      | (?P<int>-?\d+)
      | (?P<punct>[(),*^/])
    """,
    re.VERBOSE,
)


class BundleParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise BundleParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        assert kind is not None
        if kind != "ws":
            tokens.append(_Token(kind, m.group().strip(), pos))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, rs: RootSystemB):
        self.text = text
        self.rs = rs
        self.tokens = _tokenize(text)
        self.index = 0

    # -- token utilities -------------------------------------------------

    def _peek(self) -> _Token | None:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _next(self, expect: str | None = None, text: str | None = None) -> _Token:
        tok = self._peek()
        if tok is None:
            raise BundleParseError(
                f"unexpected end of input (expected {text or expect})", len(self.text)
            )
        if expect and tok.kind != expect or text and tok.text != text:
            raise BundleParseError(
                f"expected {text or expect}, found {tok.text!r}", tok.pos
            )
        self.index += 1
        return tok

    def _integer(self) -> int:
        return int(self._next("int").text)

    def _rational(self) -> Fraction:
        tok = self._next("int")
        value = Fraction(int(tok.text))
        nxt = self._peek()
        if nxt is not None and nxt.kind == "punct" and nxt.text == "/":
            self._next()
            den_tok = self._next("int")
            den = int(den_tok.text)
            if den <= 0:
                raise BundleParseError("denominator must be positive", den_tok.pos)
            value = Fraction(int(tok.text), den)
        if value.denominator > 2:
            raise BundleParseError(
                f"coordinate {value} has denominator > 2", tok.pos
            )
        return value

    # -- grammar ----------------------------------------------------------

    def parse(self) -> LeviBundle:
        out = self._expr()
        tok = self._peek()
        if tok is not None:
            raise BundleParseError(f"trailing input {tok.text!r}", tok.pos)
        return out

    def _expr(self) -> LeviBundle:
        out = self._term()
        while (tok := self._peek()) is not None and tok.kind == "oplus":
            self._next()
            out = out + self._term()
        return out

    def _term(self) -> LeviBundle:
        out = self._factor()
        while (tok := self._peek()) is not None and tok.kind == "tensor":
            self._next()
            out = out.tensor(self._factor())
        return out

    def _factor(self) -> LeviBundle:
        out = self._atom()
        while (tok := self._peek()) is not None and tok.text == "*":
            self._next()
            out = out.dual()
        return out

    def _atom(self) -> LeviBundle:
        tok = self._peek()
        if tok is None:
            raise BundleParseError("unexpected end of input", len(self.text))
        if tok.kind == "punct" and tok.text == "(":
            self._next()
            out = self._expr()
            self._next("punct", ")")
            return out
        if tok.kind != "name":
            raise BundleParseError(f"expected a bundle atom, found {tok.text!r}", tok.pos)
        self._next()
        if tok.text == "O":
            self._next("punct", "(")
            a = self._integer()
            self._next("punct", ")")
            return LeviBundle.line(self.rs, a)
        if tok.text == "S":
            return LeviBundle.spinor(self.rs)
        if tok.text == "T":
            return LeviBundle.tangent(self.rs)
        if tok.text == "F":
            self._next("punct", "(")
            coords = [self._rational()]
            while (nxt := self._peek()) is not None and nxt.text == ",":
                self._next()
                coords.append(self._rational())
            self._next("punct", ")")
            if len(coords) != self.rs.rank:
                raise BundleParseError(
                    f"F needs {self.rs.rank} coordinates, got {len(coords)}", tok.pos
                )
            doubled = tuple(int(2 * q) for q in coords)
            try:
                return LeviBundle.irreducible(self.rs, doubled)
            except WeightError as exc:
                raise BundleParseError(str(exc), tok.pos) from exc
        # Sym or Alt
        self._next("punct", "^")
        k_tok = self._peek()
        k = self._integer()
        if k < 0:
            assert k_tok is not None
            raise BundleParseError("power degree must be >= 0", k_tok.pos)
        self._next("punct", "(")
        inner = self._expr()
        self._next("punct", ")")
        return inner.sym(k) if tok.text == "Sym" else inner.alt(k)


def parse_bundle(text: str, rs: RootSystemB) -> LeviBundle:
    """Parse a bundle expression into its irreducible components."""
    return _Parser(text, rs).parse()

"""Parser for the specification language.

Grammar (lowest precedence first)::

    expr   := conj ('until' '[' NUMBER ',' NUMBER ']' conj)?
    conj   := term ('and' term)*
    term   := '(' expr ')' | atom | NAME
    atom   := signal ('<' | '>') NUMBER
    signal := 'x' | 'y' | '||' 'v' '||' | '|' 'phi' '|'

``NAME`` references a previously defined formula (see ``parse_spec_source``).
Nesting a second ``until`` inside an operand requires parentheses and is
rejected: the fragment allows one temporal operator at the top level.
"""

from __future__ import annotations

import re
from collections.abc import Mapping
from pathlib import Path

from quadland.stl.formula import (
    Atomic,
    Comparator,
    Conjunction,
    Dimension,
    Formula,
    UntilBounded,
)


class SpecError(Exception):
    """Base class for specification-language errors."""


class SpecSyntaxError(SpecError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownSignalError(SpecError):
    def __init__(self, name: str, position: int):
        super().__init__(f"unknown signal dimension {name!r} (at position {position})")
        self.position = position


_TOKEN_RE = re.compile(
    r"""
    (?P<WS>\s+)
  | (?P<NUMBER>-?\d+(\.\d+)?([eE][-+]?\d+)?)
  | (?P<IDENT>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<PIPE2>\|\|)
  | (?P<PIPE>\|)
  | (?P<LT><)
  | (?P<GT>>)
  | (?P<LPAREN>\()
  | (?P<RPAREN>\))
  | (?P<LBRACKET>\[)
  | (?P<RBRACKET>\])
  | (?P<COMMA>,)
    """,
    re.VERBOSE,
)

_KEYWORDS = {"and", "until"}


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind: str, text: str, pos: int):
        self.kind = kind
        self.text = text
        self.pos = pos

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"_Token({self.kind}, {self.text!r}, {self.pos})"


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise SpecSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        assert kind is not None
        if kind != "WS":
            value = m.group()
            if kind == "IDENT" and value in _KEYWORDS:
                kind = value.upper()
            tokens.append(_Token(kind, value, pos))
        pos = m.end()
    tokens.append(_Token("EOF", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], env: Mapping[str, Formula]):
        self.tokens = tokens
        self.i = 0
        self.env = env

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise SpecSyntaxError(f"expected {what}, found {tok.text or 'end of input'!r}", tok.pos)
        return self.advance()

    def parse_expr(self) -> Formula:
        left = self.parse_conj()
        if self.peek().kind == "UNTIL":
            until_tok = self.advance()
            self.expect("LBRACKET", "'[' after 'until'")
            lower = self._number("lower time bound")
            self.expect("COMMA", "',' between time bounds")
            upper = self._number("upper time bound")
            self.expect("RBRACKET", "']' after time bounds")
            right = self.parse_conj()
            if self.peek().kind == "UNTIL":
                raise SpecSyntaxError("only one 'until' per formula", self.peek().pos)
            if not 0 <= lower <= upper:
                raise SpecSyntaxError(
                    f"time bounds must satisfy 0 <= lower <= upper, got [{lower}, {upper}]",
                    until_tok.pos,
                )
            return UntilBounded(left, lower, upper, right)
        return left

    def parse_conj(self) -> Formula:
        terms = [self.parse_term()]
        while self.peek().kind == "AND":
            self.advance()
            terms.append(self.parse_term())
        if len(terms) == 1:
            return terms[0]
        return Conjunction(tuple(terms))

    def parse_term(self) -> Formula:
        tok = self.peek()
        if tok.kind == "LPAREN":
            self.advance()
            inner = self.parse_expr()
            self.expect("RPAREN", "')'")
            return inner
        if tok.kind in ("PIPE", "PIPE2"):
            return self._atom()
        if tok.kind == "IDENT":
            # A comparator after the identifier makes this an atom; otherwise it
            # must name an already-defined formula.
            nxt = self.tokens[self.i + 1]
            if nxt.kind in ("LT", "GT"):
                return self._atom()
            self.advance()
            if tok.text in self.env:
                return self.env[tok.text]
            raise SpecSyntaxError(f"unknown formula name {tok.text!r}", tok.pos)
        raise SpecSyntaxError(f"expected a predicate, found {tok.text or 'end of input'!r}", tok.pos)

    def _atom(self) -> Formula:
        dimension = self._signal()
        op_tok = self.peek()
        if op_tok.kind == "LT":
            comparator = Comparator.LT
        elif op_tok.kind == "GT":
            comparator = Comparator.GT
        else:
            raise SpecSyntaxError(
                f"expected '<' or '>', found {op_tok.text or 'end of input'!r}", op_tok.pos
            )
        self.advance()
        constant = self._number("comparison constant")
        return Atomic(dimension, comparator, constant)

    def _signal(self) -> Dimension:
        tok = self.advance()
        if tok.kind == "PIPE2":
            name_tok = self.expect("IDENT", "a signal name inside '||...||'")
            self.expect("PIPE2", "closing '||'")
            if name_tok.text == "v":
                return Dimension.SPEED
            raise UnknownSignalError(f"||{name_tok.text}||", name_tok.pos)
        if tok.kind == "PIPE":
            name_tok = self.expect("IDENT", "a signal name inside '|...|'")
            self.expect("PIPE", "closing '|'")
            if name_tok.text == "phi":
                return Dimension.ABS_ANGLE
            raise UnknownSignalError(f"|{name_tok.text}|", name_tok.pos)
        if tok.kind == "IDENT":
            if tok.text == "x":
                return Dimension.X
            if tok.text == "y":
                return Dimension.Y
            raise UnknownSignalError(tok.text, tok.pos)
        raise SpecSyntaxError(f"expected a signal, found {tok.text or 'end of input'!r}", tok.pos)

    def _number(self, what: str) -> float:
        tok = self.expect("NUMBER", what)
        return float(tok.text)


def parse_formula(text: str, env: Mapping[str, Formula] | None = None) -> Formula:
    """Parse a single expression.

    ``env`` maps names (e.g. ``S``, ``L``) to previously parsed formulas;
    references are inlined into the returned AST.
    """
    parser = _Parser(_tokenize(text), env or {})
    formula = parser.parse_expr()
    trailing = parser.peek()
    if trailing.kind != "EOF":
        raise SpecSyntaxError(f"unexpected trailing input {trailing.text!r}", trailing.pos)
    return formula


def parse_spec_source(source: str) -> dict[str, Formula]:
    """Parse a specification file body: ``name := expr`` per line.

    Later definitions may reference earlier names. Blank lines and ``#``
    comments are skipped.
    """
    env: dict[str, Formula] = {}
    for lineno, raw in enumerate(source.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":=" not in line:
            raise SpecError(f"line {lineno}: expected 'name := expr', got {raw!r}")
        name, _, expr = line.partition(":=")
        name = name.strip()
        if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name):
            raise SpecError(f"line {lineno}: invalid formula name {name!r}")
        if name in env:
            raise SpecError(f"line {lineno}: duplicate formula name {name!r}")
        try:
            env[name] = parse_formula(expr.strip(), env)
        except SpecError as exc:
            raise SpecError(f"line {lineno}: {exc}") from exc
    return env


def load_spec_file(path: str | Path) -> dict[str, Formula]:
    return parse_spec_source(Path(path).read_text(encoding="utf-8"))

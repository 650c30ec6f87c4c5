"""Formulas, schemas and sequents, with a signature-driven parser and printer.

Grammar, loosest to tightest::

    formula  := disj (COND disj)?          conditionals never chain
    disj     := conj (OR conj)*            left associative
    conj     := unary (AND unary)*         left associative
    unary    := PREFIX unary | ATOM | "(" formula ")"

The levels are not hard-wired: every infix connective carries its own
precedence and associativity, so a loaded logic can add new levels.
Atoms are identifiers ``[A-Za-z_][A-Za-z0-9_]*``.  A connective whose
symbol is itself identifier-like (``o`` for consistency) is recognised when
it appears as a whole word, so ``o A`` is an application while ``oA`` is an
atom.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Mapping, Union

from .kernel import Connective, Logic, LogicError, ArityError


class ParseError(LogicError, ValueError):
    def __init__(self, message: str, position: int | None = None, text: str | None = None):
        self.message = message
        self.position = position
        self.text = text
        super().__init__(self._render())

    def _render(self):
        if self.position is None:
            return self.message
        out = f"{self.message} (at position {self.position})"
        if self.text is not None:
            out += f"\n  {self.text}\n  {' ' * self.position}^"
        return out


class UnboundVariableError(LogicError, KeyError):
    def __str__(self):
        return self.args[0]


@dataclass(frozen=True)
class Atom:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Apply:
    connective: Connective
    args: tuple

    def __post_init__(self):
        args = tuple(self.args)
        if len(args) != self.connective.arity:
            raise ArityError(
                f"{self.connective.name} takes {self.connective.arity} argument(s), got {len(args)}"
            )
        object.__setattr__(self, "args", args)

    def __str__(self):
        return format_formula(self)


Formula = Union[Atom, Apply]
# Schemas are formulas whose atoms are read as metavariables.
Schema = Formula


@dataclass(frozen=True)
class Sequent:
    premises: tuple
    conclusion: Formula

    def __post_init__(self):
        object.__setattr__(self, "premises", tuple(self.premises))

    def __str__(self):
        lhs = ", ".join(format_formula(p) for p in self.premises)
        return f"{lhs} => {format_formula(self.conclusion)}".lstrip()


def atoms(formula: Formula) -> frozenset:
    found = set()
    stack = [formula]
    while stack:
        f = stack.pop()
        if isinstance(f, Atom):
            found.add(f.name)
        else:
            stack.extend(f.args)
    return frozenset(found)


def subformulas(formula: Formula) -> Iterator[Formula]:
    yield formula
    if isinstance(formula, Apply):
        for arg in formula.args:
            yield from subformulas(arg)


def size(formula: Formula) -> int:
    return sum(1 for _ in subformulas(formula))


def connectives_of(formula: Formula) -> frozenset:
    return frozenset(f.connective for f in subformulas(formula) if isinstance(f, Apply))


def instantiate(schema: Schema, mapping: Mapping[str, Formula]) -> Formula:
    """Substitute formulas for the metavariables of ``schema``."""
    if isinstance(schema, Atom):
        try:
            return mapping[schema.name]
        except KeyError:
            raise UnboundVariableError(f"no binding for metavariable {schema.name!r}") from None
    return Apply(schema.connective, tuple(instantiate(a, mapping) for a in schema.args))


# -- printing ------------------------------------------------------------------

def format_formula(formula: Formula, unicode: bool = False) -> str:
    """Render with the fewest parentheses that still parse back to ``formula``."""
    if isinstance(formula, Atom):
        return formula.name
    conn = formula.connective
    sym = (conn.glyph or conn.symbol) if unicode else conn.symbol
    if conn.arity == 1:
        (arg,) = formula.args
        inner = format_formula(arg, unicode)
        if _is_infix(arg):
            inner = f"({inner})"
        elif sym[-1].isalnum() and inner[0].isalnum():
            inner = " " + inner
        return sym + inner
    left, right = formula.args
    lhs = format_formula(left, unicode)
    rhs = format_formula(right, unicode)
    if _is_infix(left):
        lp = left.connective.precedence
        if lp < conn.precedence or (lp == conn.precedence and conn.assoc == "none"):
            lhs = f"({lhs})"
    if _is_infix(right) and right.connective.precedence <= conn.precedence:
        rhs = f"({rhs})"
    return f"{lhs} {sym} {rhs}"


def _is_infix(f: Formula) -> bool:
    return isinstance(f, Apply) and f.connective.arity == 2


# -- lexing ------------------------------------------------------------------

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_OPERATOR_CHARS = set("~-!&|^>=<+*/\\?:;.@#$%")


@dataclass(frozen=True)
class _Token:
    kind: str  # "atom", "conn", "(", ")", "end"
    text: str
    pos: int
    connective: Connective | None = None


def _tokenize(logic: Logic, text: str) -> list:
    words = {c.symbol: c for c in logic.connectives if _IDENT.fullmatch(c.symbol)}
    operators = sorted(
        (c for c in logic.connectives if c.symbol not in words), key=lambda c: -len(c.symbol)
    )
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "()":
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        m = _IDENT.match(text, i)
        if m:
            word = m.group()
            if word in words:
                tokens.append(_Token("conn", word, i, words[word]))
            else:
                tokens.append(_Token("atom", word, i))
            i = m.end()
            continue
        for c in operators:
            if text.startswith(c.symbol, i):
                tokens.append(_Token("conn", c.symbol, i, c))
                i += len(c.symbol)
                break
        else:
            if ch in _OPERATOR_CHARS:
                j = i
                while j < len(text) and text[j] in _OPERATOR_CHARS:
                    j += 1
                raise ParseError(f"unknown symbol `{text[i:j]}` in {logic.name}", i, text)
            raise ParseError(f"unexpected character {ch!r}", i, text)
    tokens.append(_Token("end", "", len(text)))
    return tokens


# -- parsing -----------------------------------------------------------------

class _Parser:
    def __init__(self, logic: Logic, text: str):
        self.logic = logic
        self.text = text
        self.tokens = _tokenize(logic, text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return ParseError(message, tok.pos, self.text)

    def formula(self, min_prec: int = 0) -> Formula:
        lhs = self.unary()
        while True:
            tok = self.peek()
            if tok.kind != "conn" or tok.connective.arity != 2:
                break
            conn = tok.connective
            if conn.precedence < min_prec:
                break
            self.advance()
            rhs = self.formula(conn.precedence + 1)
            lhs = Apply(conn, (lhs, rhs))
            if conn.assoc == "none":
                nxt = self.peek()
                if nxt.kind == "conn" and nxt.connective.arity == 2 and nxt.connective.precedence == conn.precedence:
                    raise self.error(
                        f"`{conn.symbol}` and `{nxt.text}` are non-associative; add parentheses", nxt
                    )
        return lhs

    def unary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "conn":
            if tok.connective.arity != 1:
                raise self.error(f"infix connective `{tok.text}` is missing its left operand")
            self.advance()
            return Apply(tok.connective, (self.unary(),))
        if tok.kind == "atom":
            self.advance()
            return Atom(tok.text)
        if tok.kind == "(":
            self.advance()
            inner = self.formula()
            close = self.peek()
            if close.kind != ")":
                if close.kind == "end":
                    raise self.error("unbalanced parentheses: `(` is never closed", tok)
                raise self.error(f"expected `)` but found `{close.text}`")
            self.advance()
            return inner
        if tok.kind == ")":
            raise self.error("unbalanced parentheses: unexpected `)`")
        raise self.error("unexpected end of input; expected a formula")

    def parse(self) -> Formula:
        if self.peek().kind == "end":
            raise ParseError("empty formula", 0, self.text)
        result = self.formula()
        tok = self.peek()
        if tok.kind == ")":
            raise self.error("unbalanced parentheses: unexpected `)`")
        if tok.kind != "end":
            raise self.error(f"unexpected `{tok.text}` after a complete formula")
        return result


def parse(logic: Logic, text: str) -> Formula:
    return _Parser(logic, text).parse()


def _split_top_level(text: str, sep: str) -> list:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append((start, text[start:i]))
            start = i + 1
    parts.append((start, text[start:]))
    return parts


def parse_sequent(logic: Logic, text: str) -> Sequent:
    """Parse ``A, A > B => B``; the premise list may be empty."""
    if text.count("=>") != 1:
        raise ParseError("a sequent needs exactly one `=>`", None, text)
    cut = text.index("=>")
    lhs, rhs = text[:cut], text[cut + 2:]
    premises = []
    if lhs.strip():
        for offset, chunk in _split_top_level(lhs, ","):
            try:
                premises.append(parse(logic, chunk))
            except ParseError as exc:
                pos = None if exc.position is None else exc.position + offset
                raise ParseError(exc.message, pos, text) from None
    try:
        conclusion = parse(logic, rhs)
    except ParseError as exc:
        pos = None if exc.position is None else exc.position + cut + 2
        raise ParseError(exc.message, pos, text) from None
    return Sequent(tuple(premises), conclusion)

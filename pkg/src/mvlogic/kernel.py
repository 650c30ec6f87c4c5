"""Truth values, truth-functional connectives and logic matrices.

Values are the four subsets of ``{0, 1}`` (Dunn semantics): ``T = {1}``,
``B = {1, 0}``, ``N = {}`` and ``F = {0}``.  A :class:`Logic` is a matrix
``<values, designated, connectives>``; the built-in fixtures reproduce the
printed tables for LP, M3V, CSL3, cCSL3, C0.2, P1, P2 and cP2.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence


class LogicError(Exception):
    """Base class for every error raised by this package."""


class UnknownConnectiveError(LogicError, KeyError):
    def __str__(self):
        return self.args[0] if self.args else "unknown connective"


class ArityError(LogicError, ValueError):
    pass


class ValueNotAdmissibleError(LogicError, ValueError):
    pass


class MatrixError(LogicError, ValueError):
    """A connective table or logic violates a structural invariant."""


class TruthValue(Enum):
    T = (True, False)
    B = (True, True)
    N = (False, False)
    F = (False, True)

    @property
    def true(self) -> bool:
        """Whether 1 is a member."""
        return self.value[0]

    @property
    def false(self) -> bool:
        """Whether 0 is a member."""
        return self.value[1]

    def as_set(self) -> frozenset:
        return frozenset(x for x, present in ((1, self.true), (0, self.false)) if present)

    @classmethod
    def from_set(cls, members: Iterable[int]) -> "TruthValue":
        members = set(members)
        if not members <= {0, 1}:
            raise ValueError(f"not a subset of {{0, 1}}: {members!r}")
        return cls((1 in members, 0 in members))

    @classmethod
    def parse(cls, name: str) -> "TruthValue":
        try:
            return cls[name.strip().upper()]
        except KeyError:
            raise ValueError(f"unknown truth value {name!r}; expected one of T, B, N, F") from None

    def __str__(self):
        return self.name

    def __repr__(self):
        return self.name


T, B, N, F = TruthValue.T, TruthValue.B, TruthValue.N, TruthValue.F

# Canonical serialization order.
VALUE_ORDER = (T, B, N, F)

PREC_CONDITIONAL = 1
PREC_DISJUNCTION = 2
PREC_CONJUNCTION = 3


@dataclass(frozen=True, eq=False)
class Connective:
    """A named truth function of arity 1 (prefix) or 2 (infix).

    ``precedence`` and ``assoc`` only matter for infix connectives; a higher
    precedence binds tighter and ``assoc="none"`` forbids chaining.
    """

    name: str
    symbol: str
    arity: int
    table: Mapping[tuple, TruthValue]
    glyph: str | None = None
    precedence: int = 0
    assoc: str = "left"
    _key: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.arity not in (1, 2):
            raise ArityError(f"{self.name}: arity must be 1 or 2, got {self.arity}")
        if self.assoc not in ("left", "none"):
            raise MatrixError(f"{self.name}: assoc must be 'left' or 'none'")
        if not self.symbol or any(c.isspace() or c in "()," for c in self.symbol):
            raise MatrixError(f"{self.name}: bad symbol {self.symbol!r}")
        table = {}
        for args, out in self.table.items():
            args = tuple(args)
            if len(args) != self.arity:
                raise ArityError(f"{self.name}: table row {args} has wrong arity")
            table[args] = out
        object.__setattr__(self, "table", MappingProxyType(table))
        key = (self.name, self.symbol, self.arity, frozenset(table.items()), self.precedence, self.assoc)
        object.__setattr__(self, "_key", key)

    @property
    def fixity(self) -> str:
        return "prefix" if self.arity == 1 else "infix"

    @property
    def domain(self) -> frozenset:
        return frozenset(v for args in self.table for v in args)

    def compute(self, *args: TruthValue) -> TruthValue:
        if len(args) != self.arity:
            raise ArityError(f"{self.name} takes {self.arity} argument(s), got {len(args)}")
        try:
            return self.table[args]
        except KeyError:
            raise ValueNotAdmissibleError(f"{self.name} is undefined at {args}") from None

    def __call__(self, *args):
        """Build the formula applying this connective to ``args``."""
        from .syntax import Apply

        return Apply(self, args)

    def renamed(self, name=None, symbol=None, glyph=None) -> "Connective":
        return Connective(
            name or self.name,
            symbol or self.symbol,
            self.arity,
            self.table,
            glyph if glyph is not None else self.glyph,
            self.precedence,
            self.assoc,
        )

    def with_table(self, table: Mapping[tuple, TruthValue]) -> "Connective":
        return Connective(self.name, self.symbol, self.arity, table, self.glyph, self.precedence, self.assoc)

    def __eq__(self, other):
        if not isinstance(other, Connective):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"Connective({self.name!r}, {self.symbol!r}, arity={self.arity})"


@dataclass(frozen=True)
class Logic:
    name: str
    values: tuple
    designated: frozenset
    connectives: tuple

    def __post_init__(self):
        values = tuple(self.values)
        if not values:
            raise MatrixError(f"{self.name}: no admissible values")
        if len(set(values)) != len(values):
            raise MatrixError(f"{self.name}: duplicate values")
        designated = frozenset(self.designated)
        if not designated <= set(values):
            raise MatrixError(f"{self.name}: designated values must be admissible")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "designated", designated)
        object.__setattr__(self, "connectives", tuple(self.connectives))

        symbols, names = set(), set()
        for c in self.connectives:
            if c.symbol in symbols:
                raise MatrixError(f"{self.name}: symbol {c.symbol!r} used twice")
            if c.name in names:
                raise MatrixError(f"{self.name}: connective name {c.name!r} used twice")
            symbols.add(c.symbol)
            names.add(c.name)
            for args in product(values, repeat=c.arity):
                if args not in c.table:
                    raise MatrixError(f"{self.name}: {c.name} undefined at {args}")
                if c.table[args] not in values:
                    raise MatrixError(f"{self.name}: {c.name}{args} = {c.table[args]} is not admissible")

    def connective(self, key: str) -> Connective:
        """Resolve a connective by name, ASCII symbol or glyph."""
        for attr in ("name", "symbol", "glyph"):
            for c in self.connectives:
                if getattr(c, attr) == key:
                    return c
        raise UnknownConnectiveError(f"unknown connective {key!r} in {self.name}")

    def has(self, key: str) -> bool:
        try:
            self.connective(key)
        except UnknownConnectiveError:
            return False
        return True

    def is_designated(self, value: TruthValue) -> bool:
        return value in self.designated

    def extend(self, *connectives: Connective, name: str | None = None) -> "Logic":
        return Logic(name or self.name, self.values, self.designated, self.connectives + connectives)

    def replace(self, connective: Connective, name: str | None = None) -> "Logic":
        """Swap the connective of the same name for ``connective``."""
        if not any(c.name == connective.name for c in self.connectives):
            raise UnknownConnectiveError(f"unknown connective {connective.name!r} in {self.name}")
        conns = tuple(connective if c.name == connective.name else c for c in self.connectives)
        return Logic(name or self.name, self.values, self.designated, conns)

    def restrict(self, keys: Sequence[str], name: str | None = None) -> "Logic":
        """The reduct of this logic to the listed connectives."""
        conns = tuple(self.connective(k) for k in keys)
        return Logic(name or f"{self.name}|{','.join(c.symbol for c in conns)}", self.values, self.designated, conns)

    def lookup(self, key: str, args: Sequence[TruthValue]) -> TruthValue:
        conn = self.connective(key)
        args = tuple(args)
        if len(args) != conn.arity:
            raise ArityError(f"{conn.name} takes {conn.arity} argument(s), got {len(args)}")
        for a in args:
            if a not in self.values:
                raise ValueNotAdmissibleError(f"{a} is not an admissible value of {self.name}")
        return conn.table[args]

    def __str__(self):
        return self.name


def lookup(logic: Logic, key: str, args: Sequence[TruthValue]) -> TruthValue:
    return logic.lookup(key, args)


def dunn_conditional(a: TruthValue, b: TruthValue) -> TruthValue:
    """The E-conditional computed from its positive and negative clauses."""
    if a is N or b is N:
        raise ValueNotAdmissibleError("the E-conditional clauses are stated for T, B and F only")
    has_one = (not a.true) or (not b.false) or (a.false and b.true)
    has_zero = (a.true or a.false) and (b.true or b.false)
    return TruthValue((has_one, has_zero))


# -- table helpers -----------------------------------------------------------

def unary_table(values: Sequence[TruthValue], outputs: str) -> dict:
    outs = [TruthValue.parse(x) for x in outputs.split()]
    if len(outs) != len(values):
        raise MatrixError(f"expected {len(values)} entries, got {outs}")
    return {(v,): o for v, o in zip(values, outs)}


def binary_table(values: Sequence[TruthValue], rows: str) -> dict:
    """Rows separated by ``/``, row index = left argument."""
    grid = [[TruthValue.parse(x) for x in row.split()] for row in rows.split("/")]
    if len(grid) != len(values) or any(len(r) != len(values) for r in grid):
        raise MatrixError(f"expected a {len(values)}x{len(values)} table")
    return {(a, b): grid[i][j] for i, a in enumerate(values) for j, b in enumerate(values)}


def derived_binary(name, symbol, values, fn, *, glyph=None, precedence=PREC_CONDITIONAL, assoc="none"):
    """Materialize a defined binary connective from a Python function on values."""
    table = {(a, b): fn(a, b) for a in values for b in values}
    return Connective(name, symbol, 2, table, glyph, precedence, assoc)


# -- fixtures ------------------------------------------------------------------

TBF = (T, B, F)
TNF = (T, N, F)

DM_NEG = Connective("dm_neg", "~", 1, unary_table(TBF, "F B T"), "∼")
SETTE_NEG = Connective("sette_neg", "-", 1, unary_table(TBF, "F T T"), "¬")
CONSISTENCY = Connective("circ", "o", 1, unary_table(TBF, "T F T"), "∘")

LP_AND = Connective("and", "&", 2, binary_table(TBF, "T B F / B B F / F F F"), "∧", PREC_CONJUNCTION)
LP_OR = Connective("or", "|", 2, binary_table(TBF, "T T T / T B B / T B F"), "∨", PREC_DISJUNCTION)

IMP_E = Connective("imp_E", ">", 2, binary_table(TBF, "B F F / B B F / B B B"), "→E", PREC_CONDITIONAL, "none")
IMP_W = Connective("imp_W", ">w", 2, binary_table(TBF, "T B F / T B F / B B B"), "→W", PREC_CONDITIONAL, "none")
IMP_BL = Connective("imp_BL", ">bl", 2, binary_table(TBF, "T F F / T B F / B B B"), "→BL", PREC_CONDITIONAL, "none")
IMP_F = Connective("imp_F", ">f", 2, binary_table(TBF, "B B F / B B F / B B B"), "→F", PREC_CONDITIONAL, "none")

# Sette-style lattice connectives and conditional, over {T, B, F}.
P_AND = Connective("and", "&", 2, binary_table(TBF, "T T F / T T F / F F F"), "∧P", PREC_CONJUNCTION)
P_OR = Connective("or", "|", 2, binary_table(TBF, "T T T / T T T / T T F"), "∨P", PREC_DISJUNCTION)
IMP_P = Connective("imp_P", ">", 2, binary_table(TBF, "T T F / T T F / T T T"), "→P", PREC_CONDITIONAL, "none")

# C0.2 lives on {T, N, F}.
C02_NEG = Connective("dm_neg", "~", 1, unary_table(TNF, "F N T"), "∼")
C02_AND = Connective("and", "&", 2, binary_table(TNF, "T T F / T T F / F F F"), "∧P", PREC_CONJUNCTION)
C02_OR = Connective("or", "|", 2, binary_table(TNF, "T T T / T T T / T T F"), "∨P", PREC_DISJUNCTION)
C02_IMP = Connective("imp_P", ">", 2, binary_table(TNF, "T T F / T T F / T T T"), "→P", PREC_CONDITIONAL, "none")


def biconditional(conditional: Connective, conjunction: Connective, values, name="iff_E", symbol="<>", glyph="↔E"):
    """``(A > B) & (B > A)`` materialized as a table."""
    return derived_binary(
        name,
        symbol,
        values,
        lambda a, b: conjunction.table[(conditional.table[(a, b)], conditional.table[(b, a)])],
        glyph=glyph,
    )


def material_conditional(negation: Connective, disjunction: Connective, values):
    """``~A | B`` materialized as a table."""
    return derived_binary(
        "imp_mat", ">", values, lambda a, b: disjunction.table[(negation.table[(a,)], b)], glyph="⊃"
    )


def paraconsistent_designation(values) -> frozenset:
    return frozenset(v for v in values if v.true)


def _logic(name, values, conns, designated=None):
    if designated is None:
        designated = paraconsistent_designation(values)
    return Logic(name, values, designated, conns)


def builtin_logics() -> dict:
    """Every fixture logic keyed by name, in a fixed order."""
    m3v_iff = biconditional(IMP_E, LP_AND, TBF)
    cp2_iff = biconditional(IMP_E, P_AND, TBF)
    logics = [
        _logic("LP", TBF, (DM_NEG, LP_AND, LP_OR, material_conditional(DM_NEG, LP_OR, TBF))),
        _logic("M3V", TBF, (DM_NEG, LP_AND, LP_OR, IMP_E, m3v_iff)),
        _logic("CSL3", TBF, (SETTE_NEG, LP_AND, LP_OR)),
        _logic("cCSL3", TBF, (SETTE_NEG, LP_AND, LP_OR, IMP_E, m3v_iff)),
        _logic("C0.2", TNF, (C02_NEG, C02_AND, C02_OR, C02_IMP), designated={T}),
        _logic("P1", TBF, (SETTE_NEG, P_AND, P_OR, IMP_P)),
        _logic("P2", TBF, (DM_NEG, P_AND, P_OR, IMP_P)),
        _logic("cP2", TBF, (DM_NEG, P_AND, P_OR, IMP_E, cp2_iff)),
        _logic(
            "toolbox",
            TBF,
            (DM_NEG, SETTE_NEG, CONSISTENCY, LP_AND, LP_OR, IMP_E, IMP_W, IMP_BL, IMP_F, m3v_iff),
        ),
    ]
    return {lg.name: lg for lg in logics}


def get_logic(name: str) -> Logic:
    logics = builtin_logics()
    if name in logics:
        return logics[name]
    folded = {k.lower(): v for k, v in logics.items()}
    try:
        return folded[name.lower()]
    except KeyError:
        raise LogicError(f"no built-in logic named {name!r}; choose from {', '.join(logics)}") from None

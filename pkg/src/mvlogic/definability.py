"""Term-definability by clone closure, and brute-force connective enumeration.

A term function of arity ``n`` is stored as its output column over all
``n``-tuples of values in product order.  The closure grows by term size:
every function first found at size ``s`` comes from a connective applied to
functions whose sizes add up to ``s - 1``, so each function keeps a witness
of minimal size (ties go to the first candidate in signature order, then by
operand sizes, then by discovery order of the operands).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Mapping

import numpy as np

from .engine import Flavor, check_consequence, check_validity
from .kernel import (
    CONSISTENCY,
    DM_NEG,
    F,
    PREC_CONDITIONAL,
    SETTE_NEG,
    T,
    Connective,
    Logic,
    LogicError,
    TruthValue,
)
from .syntax import Apply, Atom, Formula, Sequent, atoms, parse, parse_sequent

MAX_ARITY = 2

# Targets addressable by name from the CLI and claim manifests.
NAMED_TARGETS = {
    "consistency": CONSISTENCY,
    "sette-negation": SETTE_NEG,
    "lp-negation": DM_NEG,
}


def variables(arity: int) -> tuple:
    return tuple(Atom(f"x{i + 1}") for i in range(arity))


@dataclass(frozen=True)
class TermFunction:
    arity: int
    domain: tuple
    outputs: tuple
    witness: Formula

    @property
    def table(self) -> dict:
        return dict(zip(product(self.domain, repeat=self.arity), self.outputs))

    def __call__(self, *args: TruthValue) -> TruthValue:
        return self.table[args]


class Clone:
    """The ``arity``-ary term functions of a logic, keyed by output column."""

    def __init__(self, logic: Logic, arity: int, functions: dict):
        self.logic = logic
        self.arity = arity
        self._functions = functions

    def __contains__(self, outputs) -> bool:
        return tuple(outputs) in self._functions

    def __getitem__(self, outputs) -> TermFunction:
        return self._functions[tuple(outputs)]

    def get(self, outputs):
        return self._functions.get(tuple(outputs))

    def __iter__(self):
        return iter(self._functions.values())

    def __len__(self):
        return len(self._functions)


def column(logic: Logic, table: Mapping[tuple, TruthValue], arity: int) -> tuple:
    """Output column of a table in product order of ``logic.values``."""
    try:
        return tuple(table[args] for args in product(logic.values, repeat=arity))
    except KeyError as exc:
        raise LogicError(f"target table is undefined at {exc.args[0]} over {logic.name}") from None


def clone_closure(logic: Logic, arity: int, target: tuple | None = None) -> Clone:
    """Every term function of ``arity`` variables over ``logic``'s signature.

    With ``target`` set, the search stops as soon as that column appears
    (its witness is still minimal); the returned clone is then partial.
    """
    if arity < 1 or arity > MAX_ARITY:
        raise LogicError(f"arity must be between 1 and {MAX_ARITY}, got {arity}")
    if len(logic.values) > 4:
        raise LogicError("clone closure supports at most four values")
    for c in logic.connectives:
        if c.arity > MAX_ARITY:
            raise LogicError(f"{c.name}: only unary and binary connectives are supported")

    values = logic.values
    n = len(values)
    index = {v: i for i, v in enumerate(values)}
    rows = list(product(range(n), repeat=arity))
    m = len(rows)
    powers = np.array([n ** i for i in range(m)], dtype=np.int64)

    tables = []
    for c in logic.connectives:
        t = np.zeros((n,) * c.arity, dtype=np.int8)
        for args in product(range(n), repeat=c.arity):
            t[args] = index[c.table[tuple(values[i] for i in args)]]
        tables.append((c, t))

    seen = set()
    witnesses = {}
    by_size = {}  # size -> (int8 array of columns, list of witnesses)

    def admit(cols, build):
        """Record the new columns of ``cols`` in order; ``build(k)`` gives the k-th witness."""
        codes = cols.astype(np.int64) @ powers
        _, first = np.unique(codes, return_index=True)
        fresh_rows, fresh_wit = [], []
        for k in np.sort(first):
            code = int(codes[k])
            if code in seen:
                continue
            seen.add(code)
            w = build(int(k))
            witnesses[code] = (cols[k], w)
            fresh_rows.append(cols[k])
            fresh_wit.append(w)
        return fresh_rows, fresh_wit

    target_code = None
    if target is not None:
        target_code = int(np.array([index[v] for v in target], dtype=np.int64) @ powers)

    proj = np.array([[r[j] for r in rows] for j in range(arity)], dtype=np.int8)
    xs = variables(arity)
    fresh, wits = admit(proj, lambda k: xs[k])
    by_size[1] = (np.array(fresh, dtype=np.int8), wits)

    total = n ** m
    size = 1
    while target_code not in seen and len(seen) < total:
        size += 1
        max_known = max(s for s, (cols, _) in by_size.items() if len(cols))
        if size > MAX_ARITY * max_known + 1 or not tables:
            break
        level_rows, level_wits = [], []
        for conn, t in tables:
            if conn.arity == 1:
                src = by_size.get(size - 1)
                if src is None or not len(src[0]):
                    continue
                cols, ws = src
                r, w = admit(t[cols], lambda k, ws=ws, conn=conn: Apply(conn, (ws[k],)))
                level_rows += r
                level_wits += w
                continue
            for left in range(1, size - 1):
                right = size - 1 - left
                if left not in by_size or right not in by_size:
                    continue
                lcols, lws = by_size[left]
                rcols, rws = by_size[right]
                if not len(lcols) or not len(rcols):
                    continue
                step = max(1, 200_000 // len(rcols))
                for start in range(0, len(lcols), step):
                    block = lcols[start:start + step]
                    combined = t[block[:, None, :], rcols[None, :, :]].reshape(-1, m)
                    nr = len(rcols)

                    def build(k, start=start, nr=nr, lws=lws, rws=rws, conn=conn):
                        i, j = divmod(k, nr)
                        return Apply(conn, (lws[start + i], rws[j]))

                    r, w = admit(combined, build)
                    level_rows += r
                    level_wits += w
            if target_code in seen or len(seen) == total:
                break
        by_size[size] = (
            np.array(level_rows, dtype=np.int8).reshape(-1, m),
            level_wits,
        )

    functions = {}
    for cols, w in witnesses.values():
        outs = tuple(values[int(i)] for i in cols)
        functions[outs] = TermFunction(arity, values, outs, w)
    return Clone(logic, arity, functions)


def closure_violations(clone: Clone) -> list:
    """Unsound witnesses and missing compositions; empty for a correct closure."""
    logic, arity = clone.logic, clone.arity
    names = [f"x{i + 1}" for i in range(arity)]
    problems = []
    for fn in clone:
        if term_table(logic, fn.witness, names) != fn.table:
            problems.append(f"witness {fn.witness} does not compute its table")
    if not len(clone):
        return problems + ["empty clone"]
    index = {v: i for i, v in enumerate(logic.values)}
    cols = np.array([[index[v] for v in fn.outputs] for fn in clone], dtype=np.int8)
    n = len(logic.values)
    powers = np.array([n ** i for i in range(cols.shape[1])], dtype=np.int64)
    if len(clone) == n ** cols.shape[1]:
        return problems  # every function is present, so closure is automatic
    known = np.sort(cols.astype(np.int64) @ powers)
    for c in logic.connectives:
        t = np.zeros((n,) * c.arity, dtype=np.int8)
        for args in product(range(n), repeat=c.arity):
            t[args] = index[c.table[tuple(logic.values[i] for i in args)]]
        missing = 0
        if c.arity == 1:
            missing = _count_missing(t[cols], powers, known)
        else:
            step = max(1, 500_000 // len(cols))
            for start in range(0, len(cols), step):
                block = t[cols[start:start + step, None, :], cols[None, :, :]].reshape(-1, cols.shape[1])
                missing += _count_missing(block, powers, known)
        if missing:
            problems.append(f"not closed under {c.symbol}: {missing} compositions leave the clone")
    return problems


def _count_missing(produced, powers, known) -> int:
    codes = produced.astype(np.int64) @ powers
    return int((~np.isin(codes, known, assume_unique=False)).sum())


@dataclass(frozen=True)
class Definability:
    definable: bool
    witness: Formula | None = None

    def __bool__(self):
        return self.definable


def as_connective(target, arity: int | None = None) -> Connective:
    if isinstance(target, Connective):
        return target
    if isinstance(target, str):
        try:
            return NAMED_TARGETS[target]
        except KeyError:
            raise LogicError(f"unknown target {target!r}; choose from {', '.join(NAMED_TARGETS)}") from None
    table = dict(target)
    arities = {len(k) for k in table}
    if len(arities) != 1:
        raise LogicError("target table mixes arities")
    return Connective("target", "?", arities.pop(), table)


def is_definable(logic: Logic, target) -> Definability:
    """Decide whether ``target`` is a term function of ``logic``.

    ``target`` may be a :class:`Connective`, a table mapping or a name from
    :data:`NAMED_TARGETS`.
    """
    conn = as_connective(target)
    if conn.arity > MAX_ARITY:
        raise LogicError(f"target arity must be at most {MAX_ARITY}")
    col = column(logic, conn.table, conn.arity)
    clone = clone_closure(logic, conn.arity, target=col)
    found = clone.get(col)
    if found is None:
        return Definability(False)
    return Definability(True, found.witness)


def term_table(logic: Logic, formula: Formula, variables_order=None) -> dict:
    """The truth function computed by ``formula``, variables sorted by name."""
    from .engine import compile_formula

    names = sorted(atoms(formula)) if variables_order is None else list(variables_order)
    fn = compile_formula(logic, formula)
    return {args: fn(dict(zip(names, args))) for args in product(logic.values, repeat=len(names))}


# -- enumeration ---------------------------------------------------------------

CANDIDATE_NAME = "candidate"
CANDIDATE_SYMBOL = ">c"

# A constraint sees the logic extended with the candidate connective.
Constraint = Callable[[Logic, Connective], bool]


def detachment_valid(logic: Logic, cand: Connective) -> bool:
    a, b = Atom("A"), Atom("B")
    return check_consequence(logic, Sequent((a, cand(a, b)), b)).valid


def designated_preserving(logic: Logic, cand: Connective) -> bool:
    """Designated inputs give a designated output."""
    d = logic.designated
    return all(out in d for (x, y), out in cand.table.items() if x in d and y in d)


def classical_on_tf(logic: Logic, cand: Connective) -> bool:
    """Agrees with the material conditional on ``{T, F}``."""
    t = cand.table
    return t[(T, T)] is T and t[(T, F)] is F and t[(F, T)] is T and t[(F, F)] is T


def sequent_constraint(text: str, flavor: Flavor = Flavor.TRUTH, valid: bool = True) -> Constraint:
    """Require ``text`` (using ``>c`` for the candidate) to be valid or invalid."""

    def check(logic, cand):
        return check_consequence(logic, parse_sequent(logic, text), flavor).valid is valid

    check.__name__ = f"sequent[{text}]"
    return check


def validity_constraint(text: str, valid: bool = True) -> Constraint:
    def check(logic, cand):
        return check_validity(logic, parse(logic, text)).valid is valid

    check.__name__ = f"valid[{text}]"
    return check


CONSTRAINTS = {
    "detachment": detachment_valid,
    "designated-preserving": designated_preserving,
    "classical-on-TF": classical_on_tf,
}


@dataclass(frozen=True)
class Enumeration:
    count: int
    tables: tuple

    def __len__(self):
        return self.count


def enumerate_connectives(
    logic: Logic, constraints: Iterable = (), arity: int = 2, keep_tables: bool = True
) -> Enumeration:
    """Brute force over every ``arity``-ary table; keep those meeting all constraints."""
    if arity != 2:
        raise LogicError("only binary candidates are enumerated")
    checks = [CONSTRAINTS[c] if isinstance(c, str) else c for c in constraints]
    args = list(product(logic.values, repeat=arity))
    survivors = []
    count = 0
    for outs in product(logic.values, repeat=len(args)):
        cand = Connective(
            CANDIDATE_NAME, CANDIDATE_SYMBOL, 2, dict(zip(args, outs)), None, PREC_CONDITIONAL, "none"
        )
        if checks:
            extended = logic.extend(cand)
            if not all(check(extended, cand) for check in checks):
                continue
        count += 1
        if keep_tables:
            survivors.append(cand.table)
    return Enumeration(count, tuple(survivors))

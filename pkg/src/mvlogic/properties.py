"""Connexive thesis catalog, logic classification, TSPN and stability.

Every thesis is a schema in the metavariables ``A`` and ``B`` built from a
negation role ``N``, a conditional role ``>`` and, where needed, the
logic's conjunction.  Schemas are checked through their atomic instance,
which is sound for truth-functional matrices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .engine import check_consequence, check_validity
from .kernel import DM_NEG, SETTE_NEG, F, T, Connective, Logic, LogicError, UnknownConnectiveError
from .syntax import Atom, Formula, Sequent, format_formula


__all__ = [
    "CATALOG", "CONNEXIVE_CORE", "NEXIVE_CORE", "ClassificationReport", "RoleError", "Roles",
    "StabilityReport", "centering_suite", "check_stability", "classify", "enumerate_tspn",
    "generalized_centering", "is_explosive", "is_standard", "second_theses", "thesis",
]


class RoleError(LogicError):
    pass


A, B = Atom("A"), Atom("B")


@dataclass(frozen=True)
class Roles:
    neg: Connective
    cond: Connective
    conj: Connective | None = None

    @classmethod
    def resolve(cls, logic: Logic, negation: str, conditional: str) -> "Roles":
        try:
            neg = logic.connective(negation)
            cond = logic.connective(conditional)
        except UnknownConnectiveError as exc:
            raise RoleError(str(exc)) from None
        if neg.arity != 1:
            raise RoleError(f"{negation!r} is not unary in {logic.name}")
        if cond.arity != 2:
            raise RoleError(f"{conditional!r} is not binary in {logic.name}")
        conj = None
        for key in ("and", "&"):
            if logic.has(key):
                conj = logic.connective(key)
                break
        return cls(neg, cond, conj)


def _cent2(r: Roles) -> Formula:
    left, right = r.neg(r.cond(A, A)), r.cond(A, A)
    return r.conj(r.cond(left, right), r.cond(right, left))


# name -> (description, builder, needs conjunction)
CATALOG: dict = {
    "AT": ("Aristotle's Thesis", lambda r: r.neg(r.cond(A, r.neg(A))), False),
    "ATv": ("Variant of Aristotle's Thesis", lambda r: r.neg(r.cond(r.neg(A), A)), False),
    "BT": ("Boethius' Thesis", lambda r: r.cond(r.cond(A, B), r.neg(r.cond(A, r.neg(B)))), False),
    "BTv": ("Variant of Boethius' Thesis", lambda r: r.cond(r.cond(A, r.neg(B)), r.neg(r.cond(A, B))), False),
    "CBT": ("Converse of Boethius' Thesis", lambda r: r.cond(r.neg(r.cond(A, r.neg(B))), r.cond(A, B)), False),
    "CBTv": ("Converse of Variant of Boethius' Thesis",
             lambda r: r.cond(r.neg(r.cond(A, B)), r.cond(A, r.neg(B))), False),
    "FT": ("Francez's Thesis", lambda r: r.cond(r.cond(r.neg(A), B), r.neg(r.cond(A, B))), False),
    "FTv": ("Variant of Francez's Thesis", lambda r: r.cond(r.cond(A, B), r.neg(r.cond(r.neg(A), B))), False),
    "CFT": ("Converse of Francez's Thesis", lambda r: r.cond(r.neg(r.cond(A, B)), r.cond(r.neg(A), B)), False),
    # Listed as a second converse for hyper-nexivity; kept exactly as printed.
    "CFTv": ("N(NA > B) > (A > B)", lambda r: r.cond(r.neg(r.cond(r.neg(A), B)), r.cond(A, B)), False),
    "NSym": ("Symmetry of implication", lambda r: r.cond(r.cond(A, B), r.cond(B, A)), False),
    "UA": ("Ultra-Abelardian schema", lambda r: r.neg(r.cond(A, r.neg(B))), False),
    "AST": ("Aristotle's Second Thesis", lambda r: r.neg(r.conj(r.cond(A, B), r.cond(r.neg(A), B))), True),
    "AbP": ("Abelard's Principle", lambda r: r.neg(r.conj(r.cond(A, B), r.cond(A, r.neg(B)))), True),
    "Cent1": ("Centering, N(A > A)", lambda r: r.neg(r.cond(A, A)), False),
    "Cent2": ("Centering, N(A > A) <-> (A > A)", _cent2, True),
    "Cent2->": ("N(A > A) > (A > A)", lambda r: r.cond(r.neg(r.cond(A, A)), r.cond(A, A)), False),
    "Cent2<-": ("(A > A) > N(A > A)", lambda r: r.cond(r.cond(A, A), r.neg(r.cond(A, A))), False),
    "MS": ("Meyer-Slaney relativity", lambda r: r.cond(r.cond(r.cond(A, B), B), A), False),
}

CONNEXIVE_CORE = ("AT", "ATv", "BT", "BTv")
NEXIVE_CORE = ("AT", "ATv", "FT", "FTv")


def thesis(name: str, roles: Roles) -> Formula:
    _, build, needs_conj = CATALOG[name]
    if needs_conj and roles.conj is None:
        raise RoleError(f"{name} needs a conjunction")
    return build(roles)


@dataclass
class ClassificationReport:
    logic: str
    negation: str
    conditional: str
    verdicts: dict
    connexive: bool
    hyper_connexive: bool
    nexive: bool
    hyper_nexive: bool
    contradictory: bool
    contradiction_witness: tuple | None
    ultra_abelardian: bool

    def flags(self) -> dict:
        return {
            "connexive": self.connexive,
            "hyper-connexive": self.hyper_connexive,
            "nexive": self.nexive,
            "hyper-nexive": self.hyper_nexive,
            "contradictory": self.contradictory,
            "ultra-Abelardian": self.ultra_abelardian,
        }

    def failures(self, names=CONNEXIVE_CORE) -> list:
        """``(thesis, verdict)`` for core theses that are invalid (plus a valid NSym)."""
        out = [(n, self.verdicts[n]) for n in names if not self.verdicts[n].valid]
        if self.verdicts["NSym"].valid:
            out.append(("NSym", self.verdicts["NSym"]))
        return out

    def to_dict(self) -> dict:
        return {
            "logic": self.logic,
            "negation": self.negation,
            "conditional": self.conditional,
            "flags": self.flags(),
            "contradiction_witness": None
            if self.contradiction_witness is None
            else [format_formula(f) for f in self.contradiction_witness],
            "verdicts": {k: (None if v is None else v.to_dict()) for k, v in self.verdicts.items()},
        }


def _valid(verdicts, names):
    return all(verdicts[n] is not None and verdicts[n].valid for n in names)


def classify(logic: Logic, negation: str, conditional: str) -> ClassificationReport:
    roles = Roles.resolve(logic, negation, conditional)
    formulas = {}
    verdicts = {}
    for name, (_, _, needs_conj) in CATALOG.items():
        if needs_conj and roles.conj is None:
            verdicts[name] = None
            continue
        formulas[name] = thesis(name, roles)
        verdicts[name] = check_validity(logic, formulas[name])

    non_symmetric = not verdicts["NSym"].valid
    connexive = _valid(verdicts, CONNEXIVE_CORE) and non_symmetric
    nexive = _valid(verdicts, NEXIVE_CORE) and non_symmetric

    witness = _contradiction_witness(logic, roles, formulas, verdicts)
    return ClassificationReport(
        logic=logic.name,
        negation=roles.neg.symbol,
        conditional=roles.cond.symbol,
        verdicts=verdicts,
        connexive=connexive,
        hyper_connexive=connexive and (verdicts["CBT"].valid or verdicts["CBTv"].valid),
        nexive=nexive,
        hyper_nexive=nexive and (verdicts["CFT"].valid or verdicts["CFTv"].valid),
        contradictory=witness is not None,
        contradiction_witness=witness,
        ultra_abelardian=verdicts["UA"].valid,
    )


def contradiction_candidates(roles: Roles) -> list:
    n, c = roles.neg, roles.cond
    out = [c(A, A)]
    if roles.conj is not None:
        out.append(c(roles.conj(A, n(A)), A))
    return out


def _contradiction_witness(logic, roles, formulas, verdicts):
    candidates = [(f, None) for f in contradiction_candidates(roles)]
    candidates += [(formulas[k], verdicts[k]) for k in formulas]
    for formula, verdict in candidates:
        if verdict is None:
            verdict = check_validity(logic, formula)
        if verdict.valid and check_validity(logic, roles.neg(formula)).valid:
            return formula, roles.neg(formula)
    return None


# -- standard paraconsistent negations ----------------------------------------

def _name_negation(values, table: dict, index: int) -> Connective:
    for known in (DM_NEG, SETTE_NEG):
        if dict(known.table) == table:
            return known
    tag = "".join(table[(v,)].name for v in values)
    return Connective(f"neg_{tag}", f"~{index}", 1, table)


def is_standard(table: dict) -> bool:
    return table.get((T,)) is F and table.get((F,)) is T


def is_explosive(values, designated, negation: Connective) -> bool:
    probe = Logic("probe", tuple(values), frozenset(designated), (negation,))
    return check_consequence(probe, Sequent((A, negation(A)), B)).valid


def enumerate_tspn(values, designated) -> dict:
    """All standard, non-explosive unary tables over ``values``, by name."""
    values = tuple(values)
    if T not in values or F not in values:
        raise LogicError("standard negations need both T and F")
    free = [v for v in values if v not in (T, F)]
    found = {}
    for index, outs in enumerate(product(values, repeat=len(free))):
        table = {(T,): F, (F,): T}
        table.update({(v,): o for v, o in zip(free, outs)})
        candidate = _name_negation(values, table, index)
        if not is_explosive(values, designated, candidate):
            found[candidate.name] = candidate
    return found


@dataclass
class StabilityReport:
    logic: str
    conditional: str
    reports: dict = field(default_factory=dict)

    @property
    def stable(self) -> bool:
        return bool(self.reports) and all(r.connexive for r in self.reports.values())

    def failures(self) -> list:
        """``(negation, thesis, verdict)`` for every connexive principle that fails."""
        return [(neg, name, v) for neg, rep in self.reports.items() for name, v in rep.failures()]

    def to_dict(self) -> dict:
        return {
            "logic": self.logic,
            "conditional": self.conditional,
            "stable": self.stable,
            "failures": [
                {"negation": n, "thesis": t, **v.to_dict()} for n, t, v in self.failures()
            ],
            "reports": {k: r.to_dict() for k, r in self.reports.items()},
        }


def _with_negation(logic: Logic, negation: Connective) -> tuple:
    for c in logic.connectives:
        if c.arity == 1 and dict(c.table) == dict(negation.table):
            return logic, c
    taken = {c.symbol for c in logic.connectives}
    names = {c.name for c in logic.connectives}
    symbol, i = negation.symbol, 0
    while symbol in taken:
        i += 1
        symbol = f"{negation.symbol}{i}"
    name = negation.name if negation.name not in names else f"{negation.name}_{i}"
    added = negation.renamed(name=name, symbol=symbol)
    return logic.extend(added), added


def check_stability(logic: Logic, conditional: str) -> StabilityReport:
    cond = logic.connective(conditional)
    report = StabilityReport(logic.name, cond.symbol)
    for negation in enumerate_tspn(logic.values, logic.designated).values():
        extended, neg = _with_negation(logic, negation)
        report.reports[neg.glyph or neg.name] = classify(extended, neg.name, cond.name)
    return report


def second_theses(logic: Logic, negation: str, conditional: str) -> tuple:
    roles = Roles.resolve(logic, negation, conditional)
    return check_validity(logic, thesis("AST", roles)), check_validity(logic, thesis("AbP", roles))


def centering_suite(logic: Logic, negation: str, conditional: str) -> dict:
    roles = Roles.resolve(logic, negation, conditional)
    out = {}
    for name in ("Cent1", "Cent2", "Cent2->", "Cent2<-", "MS"):
        needs_conj = CATALOG[name][2]
        out[name] = None if needs_conj and roles.conj is None else check_validity(logic, thesis(name, roles))
    return out


def generalized_centering(logic: Logic, negation: str, conditional: str) -> tuple:
    """Verdicts for ``(X>Y) > N(W>Z)`` and ``N(W>Z) > (X>Y)`` over distinct atoms."""
    roles = Roles.resolve(logic, negation, conditional)
    n, c = roles.neg, roles.cond
    x, y, w, z = (Atom(s) for s in "XYWZ")
    return (
        check_validity(logic, c(c(x, y), n(c(w, z)))),
        check_validity(logic, c(n(c(w, z)), c(x, y))),
    )

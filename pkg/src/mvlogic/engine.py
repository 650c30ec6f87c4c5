"""Evaluation, validity and consequence by exhaustive valuation search.

Valuations are enumerated over the alphabetically sorted atoms, each ranging
over the logic's values in declared order (``T, B, F`` for the three-valued
fixtures), so the first refuting valuation is a deterministic witness.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Callable, Iterator, Mapping

from .kernel import Logic, LogicError, T, TruthValue, UnknownConnectiveError
from .syntax import Apply, Atom, Formula, Sequent, atoms, format_formula


class UnboundAtomError(LogicError, KeyError):
    def __str__(self):
        return self.args[0]


class Status(str, Enum):
    VALID_JUST_TRUE = "valid-just-true"
    VALID_SOMETIMES_FALSE = "valid-sometimes-false"
    INVALID = "invalid"

    def __str__(self):
        return self.value


class Flavor(str, Enum):
    TRUTH = "truth-preservation"
    EXACT_TRUTH = "exact-truth-preservation"
    NON_FALSITY = "non-falsity-preservation"

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, text: str) -> "Flavor":
        aliases = {"truth": cls.TRUTH, "exact": cls.EXACT_TRUTH, "exact-truth": cls.EXACT_TRUTH,
                   "non-falsity": cls.NON_FALSITY, "nonfalsity": cls.NON_FALSITY}
        text = text.strip().lower()
        if text in aliases:
            return aliases[text]
        return cls(text)

    def holds(self, logic: Logic, value: TruthValue) -> bool:
        """Whether ``value`` counts as holding under this consequence relation."""
        if self is Flavor.TRUTH:
            return value in logic.designated
        if self is Flavor.EXACT_TRUTH:
            return value is T
        return not value.false


def format_valuation(valuation: Mapping[str, TruthValue]) -> str:
    return " ".join(f"{k}={v.name}" for k, v in sorted(valuation.items()))


@dataclass(frozen=True)
class Verdict:
    """Outcome of a validity or consequence check.

    ``witness`` is the refuting valuation for ``INVALID`` and the first
    valuation giving a value other than ``T`` for ``VALID_SOMETIMES_FALSE``.
    """

    status: Status
    witness: Mapping[str, TruthValue] | None = None
    value: TruthValue | None = None

    @property
    def valid(self) -> bool:
        return self.status is not Status.INVALID

    def matches(self, expected: str) -> bool:
        """Compare with ``"valid"``, ``"invalid"`` or an exact status string."""
        if expected == "valid":
            return self.valid
        return self.status == Status(expected)

    def to_dict(self) -> dict:
        out = {"status": self.status.value}
        if self.witness is not None:
            out["witness"] = {k: v.name for k, v in sorted(self.witness.items())}
        if self.value is not None:
            out["value"] = self.value.name
        return out

    def __str__(self):
        if self.witness is None:
            return self.status.value
        return f"{self.status.value} [{format_valuation(self.witness)}]"


def compile_formula(logic: Logic, formula: Formula) -> Callable[[Mapping[str, TruthValue]], TruthValue]:
    """Turn ``formula`` into a function of valuations using ``logic``'s tables."""
    if isinstance(formula, Atom):
        name = formula.name

        def atom(valuation):
            try:
                return valuation[name]
            except KeyError:
                raise UnboundAtomError(f"atom {name!r} has no value") from None

        return atom
    try:
        table = logic.connective(formula.connective.name).table
    except UnknownConnectiveError:
        raise UnknownConnectiveError(
            f"connective {formula.connective.name!r} ({formula.connective.symbol}) is not in {logic.name}"
        ) from None
    subs = [compile_formula(logic, a) for a in formula.args]
    if len(subs) == 1:
        (f,) = subs
        return lambda valuation: table[(f(valuation),)]
    f, g = subs
    return lambda valuation: table[(f(valuation), g(valuation))]


def evaluate(logic: Logic, valuation: Mapping[str, TruthValue], formula: Formula) -> TruthValue:
    for name in atoms(formula):
        if name in valuation and valuation[name] not in logic.values:
            raise LogicError(f"{name}={valuation[name]} is not admissible in {logic.name}")
    return compile_formula(logic, formula)(valuation)


def valuations(logic: Logic, names) -> Iterator[dict]:
    names = sorted(names)
    for combo in product(logic.values, repeat=len(names)):
        yield dict(zip(names, combo))


def countermodels(logic: Logic, formula: Formula) -> Iterator[dict]:
    """Every valuation (in enumeration order) where ``formula`` is undesignated."""
    fn = compile_formula(logic, formula)
    for v in valuations(logic, atoms(formula)):
        if fn(v) not in logic.designated:
            yield v


def check_validity(logic: Logic, formula: Formula) -> Verdict:
    fn = compile_formula(logic, formula)
    sometimes_false = None
    for v in valuations(logic, atoms(formula)):
        value = fn(v)
        if value not in logic.designated:
            _confirm_refutation(logic, formula, v)
            return Verdict(Status.INVALID, v, value)
        if value is not T and sometimes_false is None:
            sometimes_false = (v, value)
    if sometimes_false is None:
        return Verdict(Status.VALID_JUST_TRUE)
    return Verdict(Status.VALID_SOMETIMES_FALSE, *sometimes_false)


def check_consequence(logic: Logic, sequent: Sequent, flavor: Flavor = Flavor.TRUTH) -> Verdict:
    premises = [compile_formula(logic, p) for p in sequent.premises]
    conclusion = compile_formula(logic, sequent.conclusion)
    names = set(atoms(sequent.conclusion))
    for p in sequent.premises:
        names |= atoms(p)
    for v in valuations(logic, names):
        if all(flavor.holds(logic, p(v)) for p in premises):
            value = conclusion(v)
            if not flavor.holds(logic, value):
                return Verdict(Status.INVALID, v, value)
    return Verdict(Status.VALID_JUST_TRUE)


def check_deduction(logic: Logic, premise: Formula, conclusion: Formula, conditional: str) -> tuple:
    """``(premise |= conclusion, |= premise > conclusion)`` as a pair of verdicts."""
    cond = logic.connective(conditional)
    if cond.arity != 2:
        raise UnknownConnectiveError(f"{conditional!r} is not a binary connective in {logic.name}")
    return (
        check_consequence(logic, Sequent((premise,), conclusion)),
        check_validity(logic, Apply(cond, (premise, conclusion))),
    )


def _confirm_refutation(logic, formula, valuation):
    # Re-evaluate through the uncompiled path as an independent self-check.
    value = _evaluate_slow(logic, valuation, formula)
    if value in logic.designated:
        raise AssertionError(
            f"witness {format_valuation(valuation)} does not refute {format_formula(formula)}"
        )


def _evaluate_slow(logic, valuation, formula):
    if isinstance(formula, Atom):
        return valuation[formula.name]
    args = tuple(_evaluate_slow(logic, valuation, a) for a in formula.args)
    return logic.lookup(formula.connective.name, args)

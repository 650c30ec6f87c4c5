"""Executable claim manifests.

A manifest is a JSON object ``{"version": 1, "claims": [...]}``.  Every claim
has an ``id``, a ``kind``, a ``logic`` (name in the registry), an
``expected`` result and a ``locus`` label; the remaining fields depend on the
kind (see ``_RUNNERS``).  A claim passes when the observed result equals
``expected``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from itertools import product
from pathlib import Path

from .definability import NAMED_TARGETS, as_connective, clone_closure, closure_violations, is_definable, term_table
from .engine import Flavor, check_consequence, check_validity, evaluate, format_valuation
from .kernel import Logic, LogicError, TruthValue, builtin_logics, dunn_conditional
from .properties import check_stability, classify, enumerate_tspn
from .syntax import Apply, Atom, format_formula, parse, parse_sequent

VERSION = 1


class ManifestError(LogicError, ValueError):
    pass


@dataclass(frozen=True)
class ClaimResult:
    id: str
    kind: str
    logic: str
    passed: bool
    expected: object
    observed: object
    locus: str = ""
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "logic": self.logic,
            "passed": self.passed,
            "expected": self.expected,
            "observed": self.observed,
            "locus": self.locus,
            "detail": self.detail,
        }


def _values(names):
    return tuple(TruthValue.parse(n) for n in names)


def _valuation(raw: dict) -> dict:
    return {k: TruthValue.parse(v) for k, v in raw.items()}


def _names(valuation) -> dict:
    return {k: v.name for k, v in sorted(valuation.items())}


def _table_json(logic: Logic, conn) -> list:
    if conn.arity == 1:
        return [conn.table[(a,)].name for a in logic.values]
    return [[conn.table[(a, b)].name for b in logic.values] for a in logic.values]


# -- runners: each returns (observed, detail) ------------------------------------

def _run_table(logic, claim, registry):
    conn = logic.connective(claim["connective"])
    return _table_json(logic, conn), ""


def _run_derived(logic, claim, registry):
    conn = logic.connective(claim["connective"])
    defined = term_table(logic, parse(logic, claim["definition"]), ("A", "B"))
    mismatches = [args for args in defined if defined[args] != conn.table[args]]
    detail = "" if not mismatches else "differs at " + ", ".join("".join(v.name for v in a) for a in mismatches)
    return not mismatches, detail


def _run_dunn(logic, claim, registry):
    conn = logic.connective(claim["connective"])
    bad = [
        (a, b)
        for a, b in product(logic.values, repeat=2)
        if dunn_conditional(a, b) != conn.table[(a, b)]
    ]
    return not bad, "" if not bad else f"clauses disagree at {bad}"


def _run_eval(logic, claim, registry):
    value = evaluate(logic, _valuation(claim["valuation"]), parse(logic, claim["formula"]))
    return value.name, ""


def _check_extras(verdict, claim, logic, refutes):
    """Shared witness/countermodel checks; returns a failure note or ''."""
    notes = []
    if "witness" in claim:
        want = _valuation(claim["witness"])
        if verdict.witness != want:
            got = "none" if verdict.witness is None else format_valuation(verdict.witness)
            notes.append(f"first witness is {got}, expected {format_valuation(want)}")
    if "countermodel" in claim:
        cm = _valuation(claim["countermodel"])
        if not refutes(cm):
            notes.append(f"{format_valuation(cm)} is not a countermodel")
    return "; ".join(notes)


def _status_matches(verdict, expected):
    return verdict.matches(expected)


def _run_valid(logic, claim, registry):
    formula = parse(logic, claim["formula"])
    verdict = check_validity(logic, formula)

    def refutes(valuation):
        return evaluate(logic, valuation, formula) not in logic.designated

    note = _check_extras(verdict, claim, logic, refutes)
    observed = claim["expected"] if _status_matches(verdict, claim["expected"]) else verdict.status.value
    if note:
        observed = f"{observed} ({note})"
    return observed, str(verdict)


def _run_consequence(logic, claim, registry):
    sequent = parse_sequent(logic, claim["sequent"])
    flavor = Flavor.parse(claim.get("flavor", "truth"))
    verdict = check_consequence(logic, sequent, flavor)

    def refutes(valuation):
        ok = all(flavor.holds(logic, evaluate(logic, valuation, p)) for p in sequent.premises)
        return ok and not flavor.holds(logic, evaluate(logic, valuation, sequent.conclusion))

    note = _check_extras(verdict, claim, logic, refutes)
    observed = claim["expected"] if _status_matches(verdict, claim["expected"]) else verdict.status.value
    if note:
        observed = f"{observed} ({note})"
    return observed, str(verdict)


def _run_classify(logic, claim, registry):
    report = classify(logic, claim["negation"], claim["conditional"])
    flags = report.flags()
    return {k: flags[k] for k in claim["expected"]}, ", ".join(f"{k}={v}" for k, v in flags.items())


def _run_tspn(logic, claim, registry):
    values = _values(claim["values"])
    found = enumerate_tspn(values, _values(claim["designated"]))
    tables = sorted([c.table[(v,)].name for v in values] for c in found.values())
    return tables, ", ".join(found)


def _run_stability(logic, claim, registry):
    report = check_stability(logic, claim["conditional"])
    observed = {"stable": report.stable}
    failures = [
        {"negation": n, "thesis": t, "witness": _names(v.witness)} for n, t, v in report.failures()
    ]
    if "failure" in claim["expected"]:
        want = claim["expected"]["failure"]
        observed["failure"] = want if want in failures else (failures[0] if failures else None)
    return observed, "; ".join(f"{f['negation']} {f['thesis']} {f['witness']}" for f in failures)


def _extended(logic, claim, registry):
    extra = claim.get("extend", [])
    if not extra:
        return logic
    toolbox = registry["toolbox"]
    return logic.extend(*(toolbox.connective(s) for s in extra), name=f"{logic.name}+{'+'.join(extra)}")


def _target(claim, registry):
    target = claim["target"]
    if isinstance(target, str) and target in NAMED_TARGETS:
        # Named targets resolve through the registry so fixture mutations propagate.
        return registry["toolbox"].connective(NAMED_TARGETS[target].name)
    return as_connective(target)


def _run_definable(logic, claim, registry):
    lg = _extended(logic, claim, registry)
    result = is_definable(lg, _target(claim, registry))
    detail = "" if result.witness is None else f"witness {format_formula(result.witness)}"
    if result.witness is not None:
        target = _target(claim, registry)
        table = term_table(lg, result.witness, [f"x{i + 1}" for i in range(target.arity)])
        if table != dict(target.table):
            return "unsound witness", detail
    return result.definable, detail


def _run_term(logic, claim, registry):
    lg = _extended(logic, claim, registry)
    table = term_table(lg, parse(lg, claim["formula"]))
    observed = [table[(v,)].name for v in lg.values]
    return observed, claim.get("note", "")


def _fragment_formulas(conns, atom_names, depth):
    level = [Atom(a) for a in atom_names]
    everything = list(level)
    for _ in range(depth):
        new = []
        for c in conns:
            if c.arity == 1:
                new += [Apply(c, (f,)) for f in everything]
            else:
                new += [Apply(c, (f, g)) for f in everything for g in everything]
        everything += new
    return everything


def fragment_agreement(left: Logic, right: Logic, keys, atom_names=("A", "B"), depth=2):
    """First formula (over ``keys``) where the two logics disagree, or None."""
    conns = [left.connective(k) for k in keys]
    right = right.restrict(keys)
    for formula in _fragment_formulas(conns, atom_names, depth):
        for vals in product(left.values, repeat=len(atom_names)):
            valuation = dict(zip(atom_names, vals))
            if evaluate(left, valuation, formula) != evaluate(right, valuation, formula):
                return formula, valuation
    return None


def _run_fragment(logic, claim, registry):
    other = registry[claim["other"]]
    keys = claim["connectives"]
    if set(logic.values) != set(other.values):
        return False, "value sets differ"
    for k in keys:
        if logic.connective(k).table != other.connective(k).table:
            return False, f"{k} tables differ"
    bad = fragment_agreement(logic, other, keys, depth=claim.get("depth", 2))
    if bad is not None:
        return False, f"disagree on {format_formula(bad[0])} at {format_valuation(bad[1])}"
    c1 = clone_closure(logic.restrict(keys), 2)
    c2 = clone_closure(other.restrict(keys), 2)
    same = {f.outputs for f in c1} == {f.outputs for f in c2}
    return same, f"{len(c1)} binary term functions"


def _run_clone(logic, claim, registry):
    lg = _extended(logic, claim, registry)
    clone = clone_closure(lg, claim["arity"])
    problems = closure_violations(clone)
    bound = len(lg.values) ** (len(lg.values) ** claim["arity"])
    detail = f"{len(clone)} term functions (bound {bound})"
    if problems:
        return False, detail + "; " + "; ".join(problems)
    return len(clone) <= bound, detail


_RUNNERS = {
    "table": (_run_table, ("connective",)),
    "derived": (_run_derived, ("connective", "definition")),
    "dunn": (_run_dunn, ("connective",)),
    "eval": (_run_eval, ("formula", "valuation")),
    "valid": (_run_valid, ("formula",)),
    "consequence": (_run_consequence, ("sequent",)),
    "classify": (_run_classify, ("negation", "conditional")),
    "tspn": (_run_tspn, ("values", "designated")),
    "stability": (_run_stability, ("conditional",)),
    "definable": (_run_definable, ("target",)),
    "term": (_run_term, ("formula",)),
    "fragment": (_run_fragment, ("other", "connectives")),
    "clone": (_run_clone, ("arity",)),
}


def validate_manifest(data) -> list:
    if not isinstance(data, dict) or not isinstance(data.get("claims"), list):
        raise ManifestError("a manifest must be an object with a 'claims' list")
    if data.get("version", VERSION) != VERSION:
        raise ManifestError(f"unsupported manifest version {data.get('version')!r}")
    claims = data["claims"]
    if not claims:
        raise ManifestError("manifest has no claims")
    ids = set()
    for i, claim in enumerate(claims):
        where = f"claim #{i}"
        if not isinstance(claim, dict):
            raise ManifestError(f"{where}: not an object")
        for key in ("id", "kind", "logic", "expected"):
            if key not in claim:
                raise ManifestError(f"{where}: missing {key!r}")
        if claim["id"] in ids:
            raise ManifestError(f"{where}: duplicate id {claim['id']!r}")
        ids.add(claim["id"])
        if claim["kind"] not in _RUNNERS:
            raise ManifestError(f"{where}: unknown kind {claim['kind']!r}")
        for key in _RUNNERS[claim["kind"]][1]:
            if key not in claim:
                raise ManifestError(f"{where} ({claim['id']}): missing {key!r}")
    return claims


def load_manifest(path=None) -> list:
    """Claims from ``path``, or the built-in manifest when ``path`` is None."""
    try:
        if path is None:
            text = resources.files("mvlogic").joinpath("data/claims.json").read_text(encoding="utf-8")
        else:
            text = Path(path).read_text(encoding="utf-8")
        data = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise ManifestError(f"cannot read manifest: {exc}") from None
    return validate_manifest(data)


def run_claim(claim: dict, registry: dict) -> ClaimResult:
    runner, _ = _RUNNERS[claim["kind"]]
    try:
        logic = registry[claim["logic"]]
    except KeyError:
        raise ManifestError(f"{claim['id']}: unknown logic {claim['logic']!r}") from None
    try:
        observed, detail = runner(logic, claim, registry)
    except LogicError as exc:
        observed, detail = "error", str(exc)
    return ClaimResult(
        id=claim["id"],
        kind=claim["kind"],
        logic=claim["logic"],
        passed=observed == claim["expected"],
        expected=claim["expected"],
        observed=observed,
        locus=claim.get("locus", ""),
        detail=detail,
    )


def run_manifest(claims, registry=None, fail_fast=False) -> list:
    registry = builtin_logics() if registry is None else registry
    results = []
    for claim in claims:
        result = run_claim(claim, registry)
        results.append(result)
        if fail_fast and not result.passed:
            break
    return results


def summarize(results) -> dict:
    failed = [r.id for r in results if not r.passed]
    return {
        "version": VERSION,
        "total": len(results),
        "passed": len(results) - len(failed),
        "failed": len(failed),
        "failed_ids": failed,
        "all_passed": not failed,
        "note": "valid-just-true / valid-sometimes-false refine plain validity; "
        "this distinction is this tool's own labelling",
        "claims": [r.to_dict() for r in results],
    }

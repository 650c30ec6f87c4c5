"""Command-line front end.

Exit codes: 0 success, 1 an expectation or claim failed, 2 bad usage or input.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .config import dump_logic, resolve_logic
from .definability import CONSTRAINTS, NAMED_TARGETS, as_connective, enumerate_connectives, is_definable
from .engine import Flavor, check_consequence, check_validity, evaluate, format_valuation
from .kernel import LogicError, TruthValue, get_logic
from .manifest import load_manifest, run_manifest, summarize
from .properties import CATALOG, check_stability, classify
from .syntax import format_formula, parse, parse_sequent

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, text: str, data) -> None:
    if args.format == "machine":
        print(json.dumps(data, ensure_ascii=False, sort_keys=True))
    else:
        print(text)


def _split_logic(args, positionals, minimum):
    """Take the logic from ``--logic`` or the first positional."""
    positionals = list(positionals)
    if args.logic is None:
        if not positionals:
            raise UsageError("no logic given (positional or --logic)")
        ref = positionals.pop(0)
    else:
        ref = args.logic
    if len(positionals) < minimum:
        raise UsageError(f"{args.command}: expected at least {minimum} more argument(s)")
    return resolve_logic(ref), positionals


def _expectation(args, ok: bool) -> int:
    return EXIT_OK if ok else EXIT_FAILED


def _read_inputs(items):
    """Positional inputs, or stdin lines for ``-`` / nothing."""
    if not items or items == ["-"]:
        return [line.strip() for line in sys.stdin if line.strip() and not line.lstrip().startswith("#")]
    return items


def cmd_eval(args) -> int:
    logic, rest = _split_logic(args, args.args, 1)
    formula = parse(logic, rest[0])
    valuation = {}
    for item in rest[1:]:
        if "=" not in item:
            raise UsageError(f"assignment {item!r} must look like A=T")
        name, value = item.split("=", 1)
        valuation[name.strip()] = TruthValue.parse(value)
    value = evaluate(logic, valuation, formula)
    _emit(args, value.name, {"logic": logic.name, "formula": format_formula(formula), "value": value.name})
    if args.expect is not None:
        return _expectation(args, value is TruthValue.parse(args.expect))
    return EXIT_OK


def cmd_check(args) -> int:
    logic, rest = _split_logic(args, args.args, 1)
    mode, inputs = rest[0], _read_inputs(rest[1:])
    if mode not in ("valid", "consequence"):
        raise UsageError(f"check mode must be 'valid' or 'consequence', got {mode!r}")
    flavor = Flavor.parse(args.flavor)
    if not inputs:
        raise UsageError("nothing to check")
    results, lines, ok = [], [], True
    for text in inputs:
        if mode == "valid":
            item = parse(logic, text)
            verdict = check_validity(logic, item)
            shown = format_formula(item)
        else:
            item = parse_sequent(logic, text)
            verdict = check_consequence(logic, item, flavor)
            shown = str(item)
        line = f"{shown}: {verdict.status.value}"
        if verdict.witness is not None:
            line += f"  witness {format_valuation(verdict.witness)}"
        lines.append(line)
        results.append({"input": shown, **verdict.to_dict()})
        if args.expect is not None and not verdict.matches(args.expect):
            ok = False
    _emit(args, "\n".join(lines), {"logic": logic.name, "mode": mode, "flavor": flavor.value, "results": results})
    return _expectation(args, ok)


def _classification_text(report) -> str:
    out = [f"{report.logic} with negation {report.negation} and conditional {report.conditional}"]
    for flag, value in report.flags().items():
        out.append(f"  {flag:17} {'yes' if value else 'no'}")
    if report.contradiction_witness:
        x, nx = report.contradiction_witness
        out.append(f"  contradiction witness: {format_formula(x)} and {format_formula(nx)}")
    out.append("  theses:")
    for name, verdict in report.verdicts.items():
        out.append(f"    {name:8} {CATALOG[name][0]:42} {'n/a' if verdict is None else verdict}")
    return "\n".join(out)


def cmd_classify(args) -> int:
    logic, _ = _split_logic(args, [args.logic_ref] if args.logic_ref else [], 0)
    report = classify(logic, args.neg, args.cond)
    _emit(args, _classification_text(report), report.to_dict())
    return EXIT_OK


def cmd_stability(args) -> int:
    logic, _ = _split_logic(args, [args.logic_ref] if args.logic_ref else [], 0)
    report = check_stability(logic, args.cond)
    lines = [f"{args.cond} in {logic.name}: {'stable' if report.stable else 'unstable'}"]
    for neg, rep in report.reports.items():
        lines.append(f"  with {neg}: {'connexive' if rep.connexive else 'not connexive'}")
    for neg, thesis, verdict in report.failures():
        lines.append(f"  fails {thesis} with {neg}: {verdict}")
    _emit(args, "\n".join(lines), report.to_dict())
    if args.expect is not None:
        return _expectation(args, args.expect == ("stable" if report.stable else "unstable"))
    return EXIT_OK


def _target(text):
    if text in NAMED_TARGETS:
        return NAMED_TARGETS[text]
    raise UsageError(f"unknown target {text!r}; choose from {', '.join(NAMED_TARGETS)} or give --table")


def cmd_definable(args) -> int:
    logic, _ = _split_logic(args, [args.logic_ref] if args.logic_ref else [], 0)
    for sym in args.extend or ():
        logic = logic.extend(get_logic("toolbox").connective(sym), name=f"{logic.name}+{sym}")
    if args.table:
        outs = [TruthValue.parse(x) for x in args.table.split(",")]
        if len(outs) == len(logic.values):
            target = as_connective({(v,): o for v, o in zip(logic.values, outs)})
        elif len(outs) == len(logic.values) ** 2:
            pairs = [(a, b) for a in logic.values for b in logic.values]
            target = as_connective(dict(zip(pairs, outs)))
        else:
            raise UsageError("--table needs |values| or |values|^2 entries")
    elif args.target:
        target = _target(args.target)
    else:
        raise UsageError("give --target or --table")
    result = is_definable(logic, target)
    if result.definable:
        text = f"yes: {format_formula(result.witness)}"
    else:
        text = "no"
    data = {"logic": logic.name, "definable": result.definable,
            "witness": None if result.witness is None else format_formula(result.witness)}
    _emit(args, text, data)
    if args.expect is not None:
        return _expectation(args, args.expect == ("yes" if result.definable else "no"))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    logic, _ = _split_logic(args, [args.logic_ref] if args.logic_ref else [], 0)
    names = args.constraint or []
    for name in names:
        if name not in CONSTRAINTS:
            raise UsageError(f"unknown constraint {name!r}; choose from {', '.join(CONSTRAINTS)}")
    result = enumerate_connectives(logic, names, keep_tables=args.show)
    lines = [f"{result.count} binary tables over {logic.name} satisfy: {', '.join(names) or '(none)'}"]
    tables = []
    if args.show:
        for table in result.tables:
            grid = [[table[(a, b)].name for b in logic.values] for a in logic.values]
            tables.append(grid)
            lines.append("  " + " / ".join(" ".join(row) for row in grid))
    _emit(args, "\n".join(lines), {"logic": logic.name, "constraints": names, "count": result.count, "tables": tables})
    return EXIT_OK


def cmd_report(args) -> int:
    claims = load_manifest(args.manifest)
    results = run_manifest(claims)
    summary = summarize(results)
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"{status}  {r.id:34} {r.locus}"
        if not r.passed:
            line += f"\n      expected {r.expected!r}, observed {r.observed!r}"
            if r.detail:
                line += f" ({r.detail})"
        lines.append(line)
    lines.append(f"{summary['passed']}/{summary['total']} claims pass")
    lines.append("note: " + summary["note"])
    _emit(args, "\n".join(lines), summary)
    return EXIT_OK if summary["all_passed"] else EXIT_FAILED


def cmd_export(args) -> int:
    logic, _ = _split_logic(args, [args.logic_ref] if args.logic_ref else [], 0)
    text = dump_logic(logic)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--logic", help="built-in logic name or path to a logic JSON file")
    common.add_argument("--format", choices=("text", "machine"), default="text")
    common.add_argument("--expect", help="expected result; exit 1 when it does not match")

    parser = argparse.ArgumentParser(prog="mvlogic", description="Finite-valued logic laboratory.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a formula under an assignment")
    p.add_argument("args", nargs="+", metavar="[LOGIC] FORMULA [ATOM=VALUE ...]")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check", parents=[common], help="check validity or consequence")
    p.add_argument("args", nargs="+", metavar="[LOGIC] {valid,consequence} [INPUT ...|-]")
    p.add_argument("--flavor", default="truth", help="truth, exact-truth or non-falsity")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify", parents=[common], help="connexivity classification")
    p.add_argument("logic_ref", nargs="?", metavar="LOGIC")
    p.add_argument("--neg", required=True)
    p.add_argument("--cond", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("stability", parents=[common], help="connexive stability under every TSPN member")
    p.add_argument("logic_ref", nargs="?", metavar="LOGIC")
    p.add_argument("--cond", required=True)
    p.set_defaults(func=cmd_stability)

    p = sub.add_parser("definable", parents=[common], help="decide term-definability of a connective")
    p.add_argument("logic_ref", nargs="?", metavar="LOGIC")
    p.add_argument("--target", help=f"one of {', '.join(NAMED_TARGETS)}")
    p.add_argument("--table", help="comma-separated outputs in value order")
    p.add_argument("--extend", action="append", help="add a toolbox connective by symbol (repeatable)")
    p.set_defaults(func=cmd_definable)

    p = sub.add_parser("enumerate", parents=[common], help="count binary tables meeting constraints")
    p.add_argument("logic_ref", nargs="?", metavar="LOGIC")
    p.add_argument("--constraint", action="append", help=f"one of {', '.join(CONSTRAINTS)} (repeatable)")
    p.add_argument("--show", action="store_true", help="list the surviving tables")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("report", parents=[common], help="run a claims manifest")
    p.add_argument("manifest", nargs="?", help="manifest path (default: built-in)")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("export-logic", parents=[common], help="write a logic as JSON")
    p.add_argument("logic_ref", nargs="?", metavar="LOGIC")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, LogicError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

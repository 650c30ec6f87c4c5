"""JSON logic definitions.

A logic file looks like::

    {
      "format": "mvlogic-logic",
      "version": 1,
      "name": "M3V",
      "values": ["T", "B", "F"],
      "designated": ["T", "B"],
      "connectives": [
        {"name": "dm_neg", "symbol": "~", "glyph": "∼", "arity": 1,
         "fixity": "prefix", "table": ["F", "B", "T"]},
        {"name": "imp_E", "symbol": ">", "arity": 2, "fixity": "infix",
         "precedence": 1, "assoc": "none",
         "table": [["B", "F", "F"], ["B", "B", "F"], ["B", "B", "B"]]}
      ]
    }

Tables are nested arrays indexed in the declared value order; for binary
connectives the row is the left argument.
"""
from __future__ import annotations

import json
from itertools import product
from pathlib import Path

from .kernel import PREC_CONDITIONAL, Connective, Logic, LogicError, MatrixError, TruthValue, get_logic

FORMAT = "mvlogic-logic"
VERSION = 1


class ConfigError(LogicError, ValueError):
    pass


def logic_to_dict(logic: Logic) -> dict:
    conns = []
    for c in logic.connectives:
        entry = {"name": c.name, "symbol": c.symbol}
        if c.glyph:
            entry["glyph"] = c.glyph
        entry["arity"] = c.arity
        entry["fixity"] = c.fixity
        if c.arity == 2:
            entry["precedence"] = c.precedence
            entry["assoc"] = c.assoc
            entry["table"] = [[c.table[(a, b)].name for b in logic.values] for a in logic.values]
        else:
            entry["table"] = [c.table[(a,)].name for a in logic.values]
        conns.append(entry)
    return {
        "format": FORMAT,
        "version": VERSION,
        "name": logic.name,
        "values": [v.name for v in logic.values],
        "designated": [v.name for v in logic.values if v in logic.designated],
        "connectives": conns,
    }


def _value(name, where):
    if not isinstance(name, str):
        raise ConfigError(f"{where}: expected a value name, got {name!r}")
    try:
        return TruthValue.parse(name)
    except ValueError as exc:
        raise ConfigError(f"{where}: {exc}") from None


def _connective(raw: dict, values: tuple, where: str) -> Connective:
    for key in ("name", "symbol", "arity", "table"):
        if key not in raw:
            raise ConfigError(f"{where}: missing field {key!r}")
    arity = raw["arity"]
    if arity not in (1, 2):
        raise ConfigError(f"{where}: arity must be 1 or 2")
    fixity = raw.get("fixity", "prefix" if arity == 1 else "infix")
    if fixity != ("prefix" if arity == 1 else "infix"):
        raise ConfigError(f"{where}: arity {arity} connectives must be {'prefix' if arity == 1 else 'infix'}")
    table = {}
    grid = raw["table"]
    if arity == 1:
        if not isinstance(grid, list) or len(grid) != len(values):
            raise ConfigError(f"{where}: table needs {len(values)} entries")
        for a, out in zip(values, grid):
            table[(a,)] = _value(out, f"{where} table[{a.name}]")
    else:
        if not isinstance(grid, list) or len(grid) != len(values) or any(
            not isinstance(row, list) or len(row) != len(values) for row in grid
        ):
            raise ConfigError(f"{where}: table must be {len(values)}x{len(values)}")
        for (i, a), (j, b) in product(enumerate(values), repeat=2):
            table[(a, b)] = _value(grid[i][j], f"{where} table[{a.name}][{b.name}]")
    if arity == 1:
        precedence, assoc = 0, "left"
    else:
        precedence = raw.get("precedence", PREC_CONDITIONAL)
        # Conditional-level operators do not chain unless told otherwise.
        assoc = raw.get("assoc", "none" if precedence == PREC_CONDITIONAL else "left")
    try:
        return Connective(raw["name"], raw["symbol"], arity, table, raw.get("glyph"), precedence, assoc)
    except LogicError as exc:
        raise ConfigError(f"{where}: {exc}") from None


def logic_from_dict(data: dict) -> Logic:
    if not isinstance(data, dict):
        raise ConfigError("a logic definition must be a JSON object")
    if data.get("format", FORMAT) != FORMAT:
        raise ConfigError(f"unsupported format {data.get('format')!r}")
    if data.get("version", VERSION) != VERSION:
        raise ConfigError(f"unsupported version {data.get('version')!r}")
    for key in ("name", "values", "designated", "connectives"):
        if key not in data:
            raise ConfigError(f"missing field {key!r}")
    values = tuple(_value(v, "values") for v in data["values"])
    designated = frozenset(_value(v, "designated") for v in data["designated"])
    conns = tuple(
        _connective(raw, values, f"connective #{i} ({raw.get('name', '?') if isinstance(raw, dict) else '?'})")
        for i, raw in enumerate(data["connectives"])
    )
    try:
        return Logic(data["name"], values, designated, conns)
    except MatrixError as exc:
        raise ConfigError(str(exc)) from None


def load_logic(path) -> Logic:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON: {exc}") from None
    return logic_from_dict(data)


def dump_logic(logic: Logic) -> str:
    return json.dumps(logic_to_dict(logic), indent=2, ensure_ascii=False) + "\n"


def resolve_logic(ref: str) -> Logic:
    """A built-in name, or a path to a logic file."""
    path = Path(ref)
    if path.suffix == ".json" or path.is_file():
        if not path.is_file():
            raise ConfigError(f"no such logic file: {ref}")
        return load_logic(path)
    return get_logic(ref)

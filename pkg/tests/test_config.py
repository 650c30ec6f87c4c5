import json

import pytest

from mvlogic.config import ConfigError, dump_logic, load_logic, logic_from_dict, logic_to_dict, resolve_logic
from mvlogic.engine import check_validity
from mvlogic.kernel import builtin_logics
from mvlogic.syntax import parse

PROBES = ["~(A > ~A)", "(A > B) > ~(A > ~B)", "A & ~A > B", "A | ~A", "-(A > -A)", "o A > A"]


@pytest.mark.parametrize("name", sorted(builtin_logics()))
def test_round_trip(name, tmp_path):
    logic = builtin_logics()[name]
    path = tmp_path / f"{name}.json"
    path.write_text(dump_logic(logic), encoding="utf-8")
    again = load_logic(path)
    assert again == logic
    for text in PROBES:
        try:
            f = parse(logic, text)
        except Exception:
            continue
        assert check_validity(again, parse(again, text)) == check_validity(logic, f)


def test_resolve_logic(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(dump_logic(builtin_logics()["M3V"]), encoding="utf-8")
    assert resolve_logic(str(path)).name == "M3V"
    assert resolve_logic("cp2").name == "cP2"
    with pytest.raises(ConfigError):
        resolve_logic(str(tmp_path / "missing.json"))


def _m3v_dict():
    return logic_to_dict(builtin_logics()["M3V"])


@pytest.mark.parametrize(
    "mutate,message",
    [
        (lambda d: d["connectives"][0].__setitem__("table", ["F", "B"]), "needs 3 entries"),
        (lambda d: d["connectives"][3]["table"][0].__setitem__(0, "Q"), "table[T][T]"),
        (lambda d: d.__setitem__("designated", ["N"]), "designated"),
        (lambda d: d.__setitem__("format", "other"), "unsupported format"),
        (lambda d: d["connectives"][0].pop("symbol"), "missing field 'symbol'"),
        (lambda d: d["connectives"][0].__setitem__("arity", 3), "arity"),
    ],
)
def test_diagnostics(mutate, message):
    data = _m3v_dict()
    mutate(data)
    with pytest.raises(ConfigError) as err:
        logic_from_dict(data)
    assert message in str(err.value)


def test_bad_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_logic(path)


def test_shipped_examples_load():
    from pathlib import Path

    folder = Path(__file__).resolve().parent.parent / "logics"
    files = sorted(folder.glob("*.json"))
    assert {load_logic(p).name for p in files} == set(builtin_logics())
    for p in files:
        assert json.loads(p.read_text(encoding="utf-8"))["format"] == "mvlogic-logic"

import io
import json

import pytest

from mvlogic.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval(capsys):
    assert run(capsys, "eval", "M3V", "A > B", "A=T", "B=B") == (0, "F\n", "")
    assert run(capsys, "eval", "--logic", "cP2", "A & B", "A=B", "B=B")[1] == "T\n"


def test_check_valid(capsys):
    code, out, _ = run(capsys, "check", "M3V", "valid", "~(A > ~A)")
    assert code == 0 and "valid-sometimes-false" in out


def test_unknown_symbol_exit_2(capsys):
    code, _, err = run(capsys, "check", "cCSL3", "valid", "-(A > ~A)")
    assert code == 2 and "unknown symbol" in err


def test_consequence_machine(capsys):
    code, out, _ = run(capsys, "check", "CSL3", "consequence", "A, -A | B => B", "--format", "machine")
    data = json.loads(out)
    assert code == 0
    assert data["results"][0]["status"] == "invalid"
    assert data["results"][0]["witness"] == {"A": "B", "B": "F"}


def test_expect(capsys):
    assert run(capsys, "check", "M3V", "valid", "A > A", "--expect", "valid")[0] == 0
    assert run(capsys, "check", "M3V", "valid", "A > A", "--expect", "invalid")[0] == 1


def test_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("# comment\n~(A > ~A)\nA > B\n"))
    code, out, _ = run(capsys, "check", "M3V", "valid", "-")
    assert code == 0 and len(out.strip().splitlines()) == 2


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "M3V", "--neg", "~", "--cond", ">", "--format", "machine")
    flags = json.loads(out)["flags"]
    assert code == 0 and flags["connexive"] and not flags["hyper-connexive"]


def test_stability(capsys):
    code, out, _ = run(capsys, "stability", "toolbox", "--cond", ">w")
    assert code == 0 and "unstable" in out and "fails BT" in out
    assert run(capsys, "stability", "toolbox", "--cond", ">w", "--expect", "stable")[0] == 1


def test_definable(capsys):
    assert run(capsys, "definable", "M3V", "--target", "consistency")[1] == "no\n"
    code, out, _ = run(capsys, "definable", "M3V", "--extend", "o", "--target", "sette-negation")
    assert code == 0 and out.startswith("yes: ")
    assert run(capsys, "definable", "M3V", "--table", "F,T,T")[1] == "no\n"


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "CSL3", "--constraint", "detachment", "--constraint",
                       "classical-on-TF", "--format", "machine")
    assert code == 0 and json.loads(out)["count"] == 81


def test_report_builtin(capsys):
    code, out, _ = run(capsys, "report", "--format", "machine")
    data = json.loads(out)
    assert code == 0 and data["all_passed"] and data["total"] == len(data["claims"])


def test_report_wrong_expectation(capsys, tmp_path):
    path = tmp_path / "m.json"
    claim = {"id": "wrong", "kind": "valid", "logic": "M3V", "formula": "A > B", "expected": "valid"}
    path.write_text(json.dumps({"version": 1, "claims": [claim]}))
    code, out, _ = run(capsys, "report", str(path))
    assert code == 1 and "FAIL  wrong" in out


def test_report_empty(capsys, tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"version": 1, "claims": []}))
    assert run(capsys, "report", str(path))[0] == 2


def test_export_round_trip(capsys, tmp_path):
    target = tmp_path / "x.json"
    assert run(capsys, "export-logic", "cCSL3", "-o", str(target))[0] == 0
    code, out, _ = run(capsys, "eval", "--logic", str(target), "-(A > B)", "A=T", "B=T")
    assert code == 0 and out == "T\n"


@pytest.mark.parametrize("argv", [[], ["eval"], ["bogus"], ["check", "M3V", "maybe", "A"], ["eval", "M3V", "A", "A"]])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_version(capsys):
    assert run(capsys, "--version")[0] == 0

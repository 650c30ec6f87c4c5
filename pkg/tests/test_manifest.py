import pytest

from mvlogic.kernel import builtin_logics
from mvlogic.manifest import ManifestError, load_manifest, run_manifest, summarize, validate_manifest


@pytest.fixture(scope="module")
def claims():
    return load_manifest()


def test_builtin_manifest_passes(claims):
    results = run_manifest(claims)
    assert [r.id for r in results if not r.passed] == []


def test_every_connective_is_pinned(claims):
    covered = {(c["logic"], c.get("connective")) for c in claims if c["kind"] in ("table", "derived")}
    for name, logic in builtin_logics().items():
        for conn in logic.connectives:
            assert (name, conn.symbol) in covered, (name, conn.symbol)


def _mutations():
    for name, logic in builtin_logics().items():
        for conn in logic.connectives:
            for args, out in conn.table.items():
                for other in logic.values:
                    if other is not out:
                        yield name, conn.symbol, args, other


def test_every_single_entry_mutation_is_caught(claims):
    survivors = []
    for name, symbol, args, other in _mutations():
        registry = builtin_logics()
        logic = registry[name]
        conn = logic.connective(symbol)
        table = dict(conn.table)
        table[args] = other
        registry[name] = logic.replace(conn.with_table(table))
        results = run_manifest(claims, registry, fail_fast=True)
        if all(r.passed for r in results):
            survivors.append((name, symbol, args, other))
    assert survivors == []


@pytest.mark.parametrize(
    "data",
    [
        {"version": 1, "claims": []},
        {"version": 2, "claims": [{"id": "x"}]},
        {"claims": [{"id": "x", "kind": "nope", "logic": "M3V", "expected": 1}]},
        {"claims": [{"id": "x", "kind": "valid", "logic": "M3V", "expected": "valid"}]},
        [],
    ],
)
def test_malformed_manifests(data):
    with pytest.raises(ManifestError):
        validate_manifest(data)


def test_summary_shape():
    claim = {"id": "c", "kind": "valid", "logic": "M3V", "formula": "A > B", "expected": "valid"}
    summary = summarize(run_manifest([claim]))
    assert summary["failed_ids"] == ["c"] and not summary["all_passed"]
    assert summary["claims"][0]["observed"] == "invalid"

import pytest

from mvlogic.engine import Status, check_validity
from mvlogic.kernel import DM_NEG, SETTE_NEG, B, F, T
from mvlogic.properties import (
    CATALOG,
    RoleError,
    Roles,
    centering_suite,
    check_stability,
    classify,
    enumerate_tspn,
    generalized_centering,
    is_explosive,
    second_theses,
    thesis,
)
from mvlogic.syntax import format_formula, instantiate, parse

FLAGS = {
    "connexive": True,
    "hyper-connexive": False,
    "nexive": True,
    "hyper-nexive": False,
    "contradictory": True,
    "ultra-Abelardian": True,
}


@pytest.mark.parametrize("name,neg", [("M3V", "~"), ("cCSL3", "-"), ("cP2", "~")])
def test_connexive_flags(logics, name, neg):
    assert classify(logics[name], neg, ">").flags() == FLAGS


def test_lp_not_connexive(logics):
    report = classify(logics["LP"], "~", ">")
    assert not report.connexive
    assert report.verdicts["AT"].witness == {"A": F}


def test_m3v_contradiction_witness(m3v):
    report = classify(m3v, "~", ">")
    x, nx = report.contradiction_witness
    assert check_validity(m3v, x).valid and check_validity(m3v, nx).valid


def test_thesis_shapes(m3v):
    roles = Roles.resolve(m3v, "~", ">")
    assert format_formula(thesis("AT", roles)) == "~(A > ~A)"
    assert format_formula(thesis("BT", roles)) == "(A > B) > ~(A > ~B)"
    assert format_formula(thesis("UA", roles)) == "~(A > ~B)"
    assert set(CATALOG) >= {"AT", "ATv", "BT", "BTv", "CBT", "CBTv", "FT", "FTv", "CFT", "CFTv", "NSym"}


def test_role_errors(m3v):
    with pytest.raises(RoleError):
        classify(m3v, ">", ">")
    with pytest.raises(RoleError):
        classify(m3v, "-", ">")


def test_m3v_centering(m3v):
    suite = centering_suite(m3v, "~", ">")
    assert suite["Cent1"].valid and suite["Cent2"].valid
    assert not suite["MS"].valid and suite["MS"].witness == {"A": F, "B": T}


def test_ccsl3_just_true_transfer(ccsl3):
    report = classify(ccsl3, "-", ">")
    for name in ("AT", "ATv"):
        assert report.verdicts[name].status is Status.VALID_JUST_TRUE
    for name in ("BT", "BTv"):
        # Negated instances of Boethius are just true.
        f = thesis(name, Roles.resolve(ccsl3, "-", ">"))
        assert check_validity(ccsl3, ccsl3.connective("-")(f)).status is Status.VALID_JUST_TRUE


def test_ccsl3_generalized_centering(ccsl3):
    forward, backward = generalized_centering(ccsl3, "-", ">")
    assert forward.valid and not backward.valid


def test_second_theses(m3v, logics):
    assert all(v.valid for v in second_theses(m3v, "~", ">"))
    ast, abp = second_theses(logics["cP2"], "~", ">")
    assert not ast.valid and not abp.valid
    assert abp.witness == {"A": B, "B": B}


def test_ccsl3_second_theses_hold(ccsl3):
    ast, abp = second_theses(ccsl3, "-", ">")
    assert ast.valid and abp.valid


def test_tspn_three_values():
    found = enumerate_tspn((T, B, F), {T, B})
    tables = {tuple(c.table[(v,)] for v in (T, B, F)) for c in found.values()}
    assert tables == {(F, B, T), (F, T, T)}
    assert set(found) == {DM_NEG.name, SETTE_NEG.name}


def test_tspn_classical_and_explosion():
    assert enumerate_tspn((T, F), {T}) == {}
    assert not is_explosive((T, B, F), {T, B}, DM_NEG)


def test_tspn_four_values_is_computed():
    from mvlogic.kernel import N

    found = enumerate_tspn((T, B, N, F), {T, B})
    assert found
    for c in found.values():
        assert c.table[(T,)] is F and c.table[(F,)] is T


@pytest.mark.parametrize("cond,stable", [(">", True), (">f", True), (">w", False), (">bl", False)])
def test_stability(toolbox, cond, stable):
    assert check_stability(toolbox, cond).stable is stable


def test_unstable_witnesses(toolbox):
    w = {(n, t): v.witness for n, t, v in check_stability(toolbox, ">w").failures()}
    assert w[("¬", "BT")] == {"A": T, "B": B}
    bl = {(n, t): v.witness for n, t, v in check_stability(toolbox, ">bl").failures()}
    assert bl[("¬", "AT")] == {"A": B}


def test_schema_atom_instance_sufficient(m3v):
    roles = Roles.resolve(m3v, "~", ">")
    schema = thesis("AT", roles)
    inst = instantiate(schema, {"A": parse(m3v, "B & ~C")})
    assert check_validity(m3v, inst).valid == check_validity(m3v, schema).valid

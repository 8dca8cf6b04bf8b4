"""Oracles for the crossed category: structure scalars and coherence."""

from __future__ import annotations

from fractions import Fraction

import pytest

from z2crossed.category import Defect, Point, make_category
from z2crossed.cocycle import build
from z2crossed.discform import parse_jordan
from z2crossed.scalars import ONE, integer, root_of_unity, sqrt_int


def e(num: int, den: int):
    return root_of_unity(Fraction(num, den))


def cat_for(label: str, **kw):
    return make_category(build(parse_jordan(label)), **kw)


@pytest.fixture(scope="module")
def c41():
    return cat_for("4_1^+1")


def test_alpha_beta_default(c41):
    assert c41.epsilon == 1
    assert c41.alpha == e(7, 16)
    assert c41.beta == e(9, 16)


def test_alpha_negative_branch():
    cat = cat_for("4_1^+1", alpha_branch="negative")
    assert cat.alpha == e(15, 16)
    assert cat.beta == e(1, 16)


def test_beta_negative_sign():
    cat = cat_for("4_1^+1", beta_sign="negative")
    assert cat.alpha == e(7, 16)
    assert cat.beta == e(1, 16)


def test_epsilon_negative():
    cat = cat_for("4_1^+1", epsilon=-1)
    assert cat.alpha == e(3, 16)
    assert cat.beta == e(5, 16)
    x = cat.simples[-1]
    assert cat.quantum_dimension(x) == sqrt_int(2)
    neg = cat_for("4_1^+1", epsilon=-1, beta_sign="negative")
    assert neg.quantum_dimension(x) == integer(-1) * sqrt_int(2)


def test_make_category_validation():
    data = build(parse_jordan("4_1^+1"))
    with pytest.raises(ValueError):
        make_category(data, epsilon=0)
    with pytest.raises(ValueError):
        make_category(data, alpha_branch="upper")
    with pytest.raises(ValueError):
        make_category(data, beta_sign="unitary")


def test_simples_order(c41):
    assert [repr(s) for s in c41.simples] == [
        "C(0)",
        "C(1)",
        "C(2)",
        "C(3)",
        "X^(0)",
        "X^(1)",
    ]
    assert all(s.grade == 0 for s in c41.simples[:4])
    assert all(s.grade == 1 for s in c41.simples[4:])


def test_fuse(c41):
    g = c41.group
    c1, c3 = Point(g.elements[1]), Point(g.elements[3])
    x0, x1 = c41.simples[4], c41.simples[5]
    assert c41.fuse(c1, c3) == ((None, Point(g.zero())),)
    assert c41.fuse(c1, x0) == ((None, x1),)
    assert c41.fuse(x0, c3) == ((None, x1),)
    channels = c41.fuse(x0, x1)
    assert [repr(s) for _t, s in channels] == ["C(1)", "C(3)"]
    assert [t for t, _s in channels] == [g.elements[1], g.elements[3]]


def test_g_act(c41):
    g = c41.group
    assert c41.g_act(Point(g.elements[1])) == Point(g.elements[3])
    assert c41.g_act(c41.simples[4]) == c41.simples[4]


def test_twist(c41):
    g = c41.group
    assert c41.twist(Point(g.elements[1])) == e(1, 8)
    assert c41.twist(Point(g.elements[2])) == e(1, 2)
    assert c41.twist(c41.simples[4]) == c41.beta


def test_braiding_defect_defect(c41):
    g = c41.group
    x0 = c41.simples[4]
    block = c41.braiding(x0, x0)
    z, two = g.zero(), g.elements[2]
    assert block[(z, z)] == e(7, 16)
    assert block[(two, two)] == e(11, 16)
    assert len(block) == 2


def test_braiding_point_defect(c41):
    g = c41.group
    block = c41.braiding(Point(g.elements[1]), c41.simples[4])
    assert block[(None, None)] == e(15, 16)


def test_associator_point_defect_point(c41):
    g = c41.group
    c1 = Point(g.elements[1])
    block = c41.associator(c1, c41.simples[4], c1)
    assert block[(None, None)] == e(1, 8)


def test_associator_defect_point_defect(c41):
    g = c41.group
    c1 = Point(g.elements[1])
    block = c41.associator(c41.simples[4], c1, c41.simples[5])
    z, two = g.zero(), g.elements[2]
    assert block[(z, z)] == ONE
    assert block[(two, two)] == e(1, 4)


def test_associator_defect_cube(c41):
    g = c41.group
    x0 = c41.simples[4]
    block = c41.associator(x0, x0, x0)
    half_sqrt2 = sqrt_int(2) * Fraction(1, 2)
    z, two = g.zero(), g.elements[2]
    assert block[(z, z)] == half_sqrt2
    assert block[(z, two)] == half_sqrt2
    assert block[(two, z)] == half_sqrt2
    assert block[(two, two)] == half_sqrt2 * Fraction(-1)
    inv = c41.associator_inv(x0, x0, x0)
    assert inv[(two, two)] == half_sqrt2 * Fraction(-1)


def test_tau_defect_defect(c41):
    g = c41.group
    x0 = c41.simples[4]
    block = c41.tau(x0, x0)
    keys = set(block.entries)
    assert keys == {(g.zero(), g.zero()), (g.elements[2], g.elements[2])}
    for v in block.entries.values():
        assert v * v == ONE


def test_dual_data(c41):
    g = c41.group
    c1 = Point(g.elements[1])
    dual, ev, coev = c41.dual_data(c1)
    assert dual == Point(g.elements[3])
    assert ev * ev == ONE
    assert coev == ONE
    x1 = c41.simples[5]
    dual_x, ev_x, coev_x = c41.dual_data(x1)
    assert dual_x == x1
    assert ev_x == sqrt_int(2)
    assert coev_x == ONE


def test_dual_defect_shift_by_delta():
    cat = cat_for("2_1^+1")
    x0, x1 = cat.simples[2], cat.simples[3]
    assert cat.dual_data(x0)[0] == x1
    assert cat.dual_data(x1)[0] == x0


def test_quantum_dimensions(c41):
    for s in c41.simples[:4]:
        assert c41.quantum_dimension(s) == ONE
    for s in c41.simples[4:]:
        assert c41.quantum_dimension(s) == sqrt_int(2)
    assert c41.global_dim() == integer(8)


@pytest.mark.parametrize("label", ["2_1^+1", "4_1^+1", "3^-1", "2_II^+2"])
def test_verify_all_green(label):
    rep = cat_for(label).verify_all()
    assert rep.ok
    names = {f.family for f in rep.families}
    assert {"pentagon", "hexagon", "hexagon_inverse", "zigzag"} <= names
    for f in rep.families:
        assert f.instances_checked > 0
        assert f.failures == []


def test_verify_all_green_other_parameters():
    for kw in (
        {"epsilon": -1},
        {"alpha_branch": "negative"},
        {"beta_sign": "negative"},
        {"epsilon": -1, "beta_sign": "negative"},
    ):
        assert cat_for("4_1^+1", **kw).verify_all().ok


def test_odd_reduction_family_presence():
    odd = cat_for("3^-1").verify_all()
    assert any(f.family == "odd_reduction" for f in odd.families)
    even = cat_for("2_1^+1").verify_all()
    assert not any(f.family == "odd_reduction" for f in even.families)


@pytest.mark.parametrize(
    "kind,expected",
    [
        ("sigma", "pentagon"),
        ("q", "hexagon"),
        ("alpha", "hexagon"),
        ("beta", "twist_balancing"),
        ("associator", "pentagon"),
    ],
)
def test_injected_defects_are_detected(kind, expected):
    cat = cat_for("4_1^+1")
    cat._inject_defect(kind)
    rep = cat.verify_all()
    assert not rep.ok
    failing = {f.family for f in rep.families if not f.ok}
    assert expected in failing
    if kind == "associator":
        assert "associator_invertible" in failing


def test_report_serialisation(c41):
    rep = c41.verify_all()
    data = rep.to_json()
    assert isinstance(data, list)
    for entry in data:
        assert set(entry) == {"family", "instances_checked", "failures"}
    summary = rep.summary()
    assert all(v == "pass" for v in summary.values())


def test_failure_record_shape():
    cat = cat_for("2_1^+1")
    cat._inject_defect("beta")
    rep = cat.verify_all()
    bad = [f for f in rep.families if not f.ok]
    assert bad
    record = bad[0].failures[0]
    assert set(record) == {"objects", "basis", "lhs", "rhs"}

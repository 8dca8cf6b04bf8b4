import pytest
from hypothesis import given, settings, strategies as st

from z2crossed.abgroup import FinAbGroup


def test_order_and_enumeration():
    g = FinAbGroup((2, 4))
    assert g.order == 8
    assert [e.residues for e in g.elements] == [
        (0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (1, 2), (1, 3),
    ]


def test_trivial_group():
    g = FinAbGroup(())
    assert g.order == 1
    assert g.elements == (g.zero(),)
    assert g.two_gamma == (g.zero(),)
    assert len(g.cosets_mod2) == 1
    assert g.pair_orbits == ()


def test_element_arithmetic():
    g = FinAbGroup((2, 4))
    a = g.element((1, 3))
    b = g.element((1, 2))
    assert (a + b).residues == (0, 1)
    assert (-a).residues == (1, 1)
    assert (a - a) == g.zero()
    assert (3 * a).residues == (1, 1)
    assert repr(a) == "(1,3)"
    with pytest.raises(ValueError):
        g.element((1,))


def test_rejects_order_one_factor():
    with pytest.raises(ValueError):
        FinAbGroup((1, 4))


def test_two_gamma_and_torsion():
    g = FinAbGroup((2, 4))
    assert [e.residues for e in g.two_gamma] == [(0, 0), (0, 2)]
    assert [e.residues for e in g.torsion2] == [(0, 0), (0, 2), (1, 0), (1, 2)]
    g8 = FinAbGroup((8,))
    assert [e.residues for e in g8.two_gamma] == [(0,), (2,), (4,), (6,)]
    assert [e.residues for e in g8.torsion2] == [(0,), (4,)]


def test_cosets_mod2():
    g = FinAbGroup((4,))
    cosets = g.cosets_mod2
    assert [c.rep.residues for c in cosets] == [(0,), (1,)]
    assert [m.residues for m in cosets[0].members] == [(0,), (2,)]
    assert g.coset_of(g.element((3,))) == cosets[1]
    assert g.coset_of(g.element((2,))) == cosets[0]
    # coset arithmetic
    assert (cosets[1] + cosets[1]) == cosets[0]
    assert (cosets[1] + g.element((2,))) == cosets[1]
    assert -cosets[1] == cosets[1]


def test_pair_orbits():
    g = FinAbGroup((5,))
    assert [e.residues for e in g.pair_orbits] == [(1,), (2,)]
    g2 = FinAbGroup((2, 4))
    # pairs {a,-a} with 2a != 0: (0,1)/(0,3) and (1,1)/(1,3)
    assert [e.residues for e in g2.pair_orbits] == [(0, 1), (1, 1)]


def test_counting_identity():
    # |G| = |2G| * |torsion2| for finite abelian groups
    for orders in [(2,), (3,), (4,), (2, 2), (2, 4), (8,), (2, 3), (4, 4), (2, 2, 3)]:
        g = FinAbGroup(orders)
        assert len(g.two_gamma) * len(g.torsion2) == g.order
        assert len(g.cosets_mod2) == len(g.torsion2)
        assert 2 * len(g.pair_orbits) + len(g.torsion2) == g.order


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(min_value=2, max_value=6), min_size=1, max_size=3))
def test_coset_partition(orders):
    g = FinAbGroup(tuple(orders))
    seen = []
    for c in g.cosets_mod2:
        assert c.rep == min(c.members)
        assert all(g.coset_of(m) == c for m in c.members)
        seen.extend(c.members)
    assert sorted(seen) == sorted(g.elements)

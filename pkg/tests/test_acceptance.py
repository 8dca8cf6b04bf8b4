"""Acceptance battery: the eight headline guarantees, one test each.

Every comparison is exact (no tolerances); the stated runtime budgets
are asserted with wall-clock checks.
"""

from __future__ import annotations

import time
from fractions import Fraction

from z2crossed.category import Defect, Point, make_category
from z2crossed.cocycle import build
from z2crossed.discform import kronecker, parse_jordan
from z2crossed.equivariant import (
    EqX,
    EqY,
    EqZ,
    eq_dim,
    modular_data,
    simple_objects,
    verify_modular,
)
from z2crossed.lattice import (
    Lattice,
    build_cocycle_from_lattice,
    verify_milgram,
)
from z2crossed.scalars import ONE, ZERO, integer, root_of_unity, sqrt_int

BATTERY = [
    "2_1^+1",
    "2_7^+1",
    "4_1^+1",
    "4_3^-1",
    "8_1^+1",
    "2_II^+2",
    "2_II^-2",
    "4_II^+2",
    "3^+1",
    "3^-1",
    "5^+1",
    "5^-1",
    "9^+1",
    "2_1^+1+3^-1",
    "4_1^+1+4_1^+1",
]


def e(num: int, den: int):
    return root_of_unity(Fraction(num, den))


def cat_for(label: str, **kw):
    return make_category(build(parse_jordan(label)), **kw)


def test_ac1_paper_fixture_exact():
    # 4_1^+1 with epsilon=1 reproduces the published 9x9 modular data
    # entrywise as exact cyclotomics, in under a second.
    start = time.perf_counter()
    cat = cat_for("4_1^+1")
    assert cat.epsilon == 1
    assert cat.alpha == e(7, 16)
    assert cat.beta == e(9, 16)
    md = modular_data(cat)
    perm = (0, 1, 3, 2, 6, 8, 5, 7, 4)
    r2 = sqrt_int(2)
    one, two = integer(1), integer(2)
    expected_t = [one, one, -one, -one, e(15, 16), e(15, 16), e(7, 16), e(7, 16), e(7, 8)]
    expected_s = [
        [one, one, one, one, r2, r2, r2, r2, two],
        [one, one, one, one, -r2, -r2, -r2, -r2, two],
        [one, one, one, one, r2, -r2, r2, -r2, -two],
        [one, one, one, one, -r2, r2, -r2, r2, -two],
        [r2, -r2, r2, -r2, ZERO, two, ZERO, -two, ZERO],
        [r2, -r2, -r2, r2, two, ZERO, -two, ZERO, ZERO],
        [r2, -r2, r2, -r2, ZERO, -two, ZERO, two, ZERO],
        [r2, -r2, -r2, r2, -two, ZERO, two, ZERO, ZERO],
        [two, two, -two, -two, ZERO, ZERO, ZERO, ZERO, ZERO],
    ]
    for i, pi in enumerate(perm):
        assert md.T[pi] == expected_t[i]
        for j, pj in enumerate(perm):
            assert md.S[pi][pj] == expected_s[i][j]
    assert time.perf_counter() - start < 1.0


def test_ac2_coherence_battery():
    # Every axiom family passes for all battery forms at every
    # (epsilon, beta sign) choice, in under five minutes single-threaded.
    start = time.perf_counter()
    for label in BATTERY:
        data = build(parse_jordan(label))
        for epsilon in (1, -1):
            for beta_sign in ("pseudo-unitary", "negative"):
                cat = make_category(data, epsilon=epsilon, beta_sign=beta_sign)
                report = cat.verify_all()
                assert report.ok, (label, epsilon, beta_sign, report.summary())
                for family in report.families:
                    assert family.instances_checked > 0, family.family
    assert time.perf_counter() - start < 300.0


def test_ac3_odd_reduction():
    # Odd prime forms collapse to Tambara-Yamagami data with
    # sigma = B^(1/2), q = Q^(1/2), omega = 1, and the odd-group
    # closed forms for the equivariantisation, all exactly.
    for label in ["3^+1", "3^-1", "5^+1", "5^-1", "7^+1", "7^-1"]:
        cat = cat_for(label)
        d = cat.data
        g = cat.group
        n = g.order
        inv2 = (n + 1) // 2
        form = d.form

        def sigma_ty(a, b):
            return root_of_unity((form.B_exponent(a, b) * inv2) % 1)

        def q_ty(a):
            return root_of_unity((form.Q_exponent(a) * inv2) % 1)

        assert d.delta == g.zero()
        for a in g.elements:
            assert d.q_of(a) == q_ty(a)
            for b in g.elements:
                assert d.sigma(a, b) == sigma_ty(a, b)
                for c in g.elements:
                    assert d.omega_sign(a, b, c) == 1

        defect = Defect(g.cosets_mod2[0])
        root_n_inv = sqrt_int(n).inv()
        for a in g.elements:
            pa = Point(a)
            assert cat.twist(pa) == form.Q_of(a)
            for b in g.elements:
                pb = Point(b)
                assert cat.braiding(pa, pb)[(None, None)] == sigma_ty(a, b)
                for c in g.elements:
                    assert cat.associator(pa, pb, Point(c))[(None, None)] == ONE
                assert cat.associator(pa, defect, pb)[(None, None)] == sigma_ty(a, b)
                dpd = cat.associator(defect, pa, defect)
                assert dpd[(b, b)] == sigma_ty(a, b)
            assert cat.braiding(pa, defect)[(None, None)] == q_ty(a).inv()
            assert cat.braiding(defect, pa)[(None, None)] == q_ty(a).inv()
        assert cat.twist(defect) == cat.beta
        dd_braid = cat.braiding(defect, defect)
        assert len(dd_braid) == n
        for (t, _), v in dd_braid.items():
            assert v == cat.alpha * q_ty(t)
        ddd = cat.associator(defect, defect, defect)
        assert len(ddd) == n * n
        for (t, r), v in ddd.items():
            assert v == root_n_inv * cat.epsilon * sigma_ty(t, r).inv()

        md = modular_data(cat)
        objs = md.objects
        jac = 1 if n % 8 in (1, 7) else -1
        for i, A in enumerate(objs):
            if isinstance(A, EqY):
                assert md.T[i] == form.Q_of(A.a).inv()
            for j, B in enumerate(objs):
                if isinstance(A, EqZ) and isinstance(B, EqZ):
                    assert md.S[i][j] == sqrt_int(n) * (A.s * B.s * jac)
        assert verify_modular(md).ok


def test_ac4_gauss_closed_forms():
    # The partial Gauss sum of q^-1, computed by direct summation,
    # matches the closed forms: the generic product formula whenever no
    # modulus-2 cyclic component is present, and e(-t/8)(t/2)^(k+1) for
    # a single (2^k)_t component with k >= 2.
    for label in BATTERY:
        form = parse_jordan(label)
        if any(c.kind == "two_cyclic" and c.q == 2 for c in form.components):
            continue
        expected = (
            e(-form.signature % 8, 8)
            * form.sign_s_even()
            * kronecker(2, form.odd_order)
        )
        assert build(form).gauss_partial_q() == expected, label
    for label, t, k in [("4_1^+1", 1, 2), ("4_3^-1", 3, 2), ("8_1^+1", 1, 3)]:
        expected = e(-t % 8, 8) * kronecker(2, t) ** (k + 1)
        assert build(parse_jordan(label)).gauss_partial_q() == expected, label


def test_ac5_lattice_pipeline():
    # Rank-1 lattices [[n]] all give partial Gauss sum e(7/8); [[4]]
    # reproduces the Jordan-path 4_1^+1 data pointwise and the same
    # modular data; the Milgram identities hold for a lattice battery.
    start = time.perf_counter()
    for n in (2, 4, 6, 8):
        data = build_cocycle_from_lattice(Lattice([[n]]))
        assert data.gauss_partial_q() == e(7, 8), n

    lat_data = build_cocycle_from_lattice(Lattice([[4]]))
    jor_data = build(parse_jordan("4_1^+1"))
    gl, gj = lat_data.group, jor_data.group
    assert gl.orders == gj.orders
    assert lat_data.delta.residues == jor_data.delta.residues
    for al, aj in zip(gl.elements, gj.elements):
        assert lat_data.form.Q_exponent(al) == jor_data.form.Q_exponent(aj)
        assert lat_data.q_of(al) == jor_data.q_of(aj)
        for bl, bj in zip(gl.elements, gj.elements):
            assert lat_data.form.B_exponent(al, bl) == jor_data.form.B_exponent(aj, bj)
            assert lat_data.sigma(al, bl) == jor_data.sigma(aj, bj)
    md_lat = modular_data(make_category(lat_data))
    md_jor = modular_data(make_category(jor_data))
    assert [repr(o) for o in md_lat.objects] == [repr(o) for o in md_jor.objects]
    assert md_lat.T == md_jor.T
    assert md_lat.S == md_jor.S
    assert md_lat.dims == md_jor.dims

    for gram in ([[2]], [[4]], [[0, 2], [2, 0]], [[2, 0], [0, 2]], [[4, 0], [0, 6]]):
        checks = verify_milgram(Lattice(gram))
        assert all(c.ok for c in checks), gram
    assert time.perf_counter() - start < 10.0


def test_ac6_modularity_properties():
    # For every battery form the equivariantisation is modular: S is
    # symmetric and unitary, S^2 is a permutation times the global
    # dimension, Verlinde multiplicities equal the fusion rules, the
    # dimensions are the positive closed-form values summing to 4|G|.
    for label in BATTERY:
        cat = cat_for(label)
        md = modular_data(cat)
        report = verify_modular(md)
        assert report.ok, (label, report.to_dict())
        m = len(cat.group.two_gamma)
        total = ZERO
        for obj, dim in zip(md.objects, md.dims):
            if isinstance(obj, EqX):
                assert dim == ONE
            elif isinstance(obj, EqY):
                assert dim == integer(2)
            else:
                assert dim == sqrt_int(m)
            total = total + dim * dim
        assert total == integer(md.global_dim)


def test_ac7_character_sum_lemma():
    # |2G|^-1 sum over a 2G-coset of sigma(r,s)/sigma(r,l) is the
    # Kronecker delta of s and l for all admissible arguments.
    for label in BATTERY:
        d = build(parse_jordan(label))
        g = d.group
        assert g.order <= 32
        for rbar in g.cosets_mod2:
            for sbar in g.cosets_mod2:
                for s in sbar.members:
                    for l in sbar.members:
                        got = d.character_sum(rbar, s, l)
                        assert got == (ONE if s == l else ZERO), (label, s, l)


def test_ac8_mutation_sensitivity():
    # Each single-scalar defect makes at least one named axiom family
    # fail, so the coherence suite is non-vacuous.
    expected = {
        "sigma": "pentagon",
        "q": "hexagon",
        "alpha": "hexagon",
        "beta": "twist_balancing",
        "associator": "pentagon",
    }
    for kind, family in expected.items():
        cat = cat_for("4_1^+1")
        cat._inject_defect(kind)
        report = cat.verify_all()
        failed = {f.family for f in report.families if not f.ok}
        assert failed, kind
        assert family in failed, (kind, failed)
    cat = cat_for("4_1^+1")
    cat._inject_defect("associator")
    failed = {f.family for f in cat.verify_all().families if not f.ok}
    assert "associator_invertible" in failed

"""Z2-equivariantisation: simple objects, fusion ring, and exact modular data.

Equivariant simples come in three families: invertibles X_{a,s} for a in
the 2-torsion and a sign s, dimension-2 objects Y indexed by pair orbits
{a,-a} with 2a != 0, and defect-sector objects Z_{xbar,s} of dimension
epsilon(alpha beta)|2G|^(1/2).  Fusion rules, twists and both modular
matrices have closed forms in the cocycle data; the S-matrix is computed
twice, from the closed forms and from the balancing formula
S_{A,B} = theta_A^-1 theta_B^-1 sum_C N_{AB}^C theta_C dim C,
and any disagreement raises (it would signal an implementation defect).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .abgroup import CosetMod2, Element
from .category import CrossedCategory, Defect
from .scalars import ONE, ZERO, Cyclotomic, integer, sqrt_int


class EqX:
    """Invertible equivariant simple X_{a,s} with a in the 2-torsion."""

    __slots__ = ("a", "s")

    def __init__(self, a: Element, s: int):
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "s", s)

    def __setattr__(self, name, value):
        raise AttributeError("EqX is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, EqX) and (self.a, self.s) == (other.a, other.s)

    def __hash__(self) -> int:
        return hash(("EqX", self.a.residues, self.s))

    def __repr__(self) -> str:
        return f"X({self.a!r},{self.s:+d})"


class EqY:
    """Dimension-2 equivariant simple from a pair orbit {a, -a}, 2a != 0."""

    __slots__ = ("a",)

    def __init__(self, a: Element):
        object.__setattr__(self, "a", a)

    def __setattr__(self, name, value):
        raise AttributeError("EqY is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, EqY) and self.a == other.a

    def __hash__(self) -> int:
        return hash(("EqY", self.a.residues))

    def __repr__(self) -> str:
        return f"Y({self.a!r})"


class EqZ:
    """Defect-sector equivariant simple Z_{xbar,s}."""

    __slots__ = ("xbar", "s")

    def __init__(self, xbar: CosetMod2, s: int):
        object.__setattr__(self, "xbar", xbar)
        object.__setattr__(self, "s", s)

    def __setattr__(self, name, value):
        raise AttributeError("EqZ is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, EqZ) and (self.xbar, self.s) == (other.xbar, other.s)

    def __hash__(self) -> int:
        return hash(("EqZ", self.xbar.rep.residues, self.s))

    def __repr__(self) -> str:
        return f"Z({self.xbar.rep!r},{self.s:+d})"


EqSimple = EqX | EqY | EqZ


def _bsign(cat: CrossedCategory, a: Element, b: Element) -> int:
    """B_Q(a,b) as a sign; defined whenever a or b is 2-torsion."""
    r = cat.data.form.B_exponent(a, b) % 1
    if r == 0:
        return 1
    if r == Fraction(1, 2):
        return -1
    raise ValueError(f"B_Q({a!r},{b!r}) = e({r}) is not a sign")


def _orbit_rep(a: Element) -> Element:
    neg = -a
    return a if a <= neg else neg


def simple_objects(cat: CrossedCategory) -> tuple[EqSimple, ...]:
    """All equivariant simples: X's, then Y's, then Z's, each lexicographic."""
    g = cat.group
    xs = [EqX(a, s) for a in g.torsion2 for s in (1, -1)]
    ys = [EqY(a) for a in g.pair_orbits]
    zs = [EqZ(c, s) for c in g.cosets_mod2 for s in (1, -1)]
    return tuple(xs + ys + zs)


def eq_fusion(cat: CrossedCategory, A: EqSimple, B: EqSimple):
    """Ordered tuple of fusion summands of A (x) B (all multiplicity one)."""
    if isinstance(B, EqX) and not isinstance(A, EqX):
        A, B = B, A
    if isinstance(B, EqY) and isinstance(A, EqZ):
        A, B = B, A
    g = cat.group
    if isinstance(A, EqX):
        if isinstance(B, EqX):
            return (EqX(A.a + B.a, A.s * B.s * _bsign(cat, A.a, B.a)),)
        if isinstance(B, EqY):
            return (EqY(_orbit_rep(A.a + B.a)),)
        xbar = B.xbar + A.a
        return (EqZ(xbar, A.s * B.s * _bsign(cat, xbar.rep, A.a)),)
    if isinstance(A, EqY):
        if isinstance(B, EqY):
            torsion = set(g.torsion2)
            out = []
            for d in (A.a + B.a, A.a - B.a):
                if d in torsion:
                    out.append(EqX(d, 1))
                    out.append(EqX(d, -1))
                else:
                    out.append(EqY(_orbit_rep(d)))
            return tuple(out)
        xbar = B.xbar + A.a
        return (EqZ(xbar, 1), EqZ(xbar, -1))
    # Z (x) Z
    coset = A.xbar + B.xbar + cat.data.delta
    torsion = set(g.torsion2)
    xs = []
    ys = []
    for t in coset.members:
        if t in torsion:
            xs.append(EqX(t, A.s * B.s * _bsign(cat, A.xbar.rep, t)))
        elif t == _orbit_rep(t):
            ys.append(EqY(t))
    return tuple(xs + ys)


def eq_twist(cat: CrossedCategory, obj: EqSimple) -> Cyclotomic:
    if isinstance(obj, EqZ):
        return integer(obj.s) * cat.beta
    return cat.data.form.Q_of(obj.a)


def eq_dim(cat: CrossedCategory, obj: EqSimple) -> Cyclotomic:
    if isinstance(obj, EqX):
        return ONE
    if isinstance(obj, EqY):
        return integer(2)
    return cat.quantum_dimension(Defect(obj.xbar))


def eq_dual(cat: CrossedCategory, obj: EqSimple) -> EqSimple:
    """The dual, found from fusion with the unit."""
    unit = EqX(cat.group.zero(), 1)
    for cand in simple_objects(cat):
        if unit in eq_fusion(cat, obj, cand):
            return cand
    raise ValueError(f"no dual found for {obj!r}")


def t_matrix(cat: CrossedCategory) -> list[Cyclotomic]:
    """Diagonal of T: inverse twists over the canonical object order."""
    return [eq_twist(cat, obj).inv() for obj in simple_objects(cat)]


def _s_closed(cat: CrossedCategory, A: EqSimple, B: EqSimple) -> Cyclotomic:
    order = {EqX: 0, EqY: 1, EqZ: 2}
    if order[type(A)] > order[type(B)]:
        A, B = B, A
    d = cat.data
    if isinstance(A, EqX):
        if isinstance(B, EqX):
            return integer(_bsign(cat, A.a, B.a))
        if isinstance(B, EqY):
            return integer(2 * _bsign(cat, A.a, B.a))
        sign = A.s * _bsign(cat, B.xbar.rep, A.a)
        return integer(sign) * d.form.Q_of(A.a) * eq_dim(cat, B)
    if isinstance(A, EqY):
        if isinstance(B, EqY):
            v = d.form.B_of(A.a, B.a)
            return (v + v.inv()) * 2
        return ZERO
    m = len(cat.group.two_gamma)
    pref = integer(cat.epsilon * A.s * B.s) * sqrt_int(m)
    return pref * d.gauss_partial_q() * d.gauss_partial_Q(A.xbar + B.xbar)


def _s_balance(cat: CrossedCategory, A: EqSimple, B: EqSimple) -> Cyclotomic:
    acc = ZERO
    for C in eq_fusion(cat, A, B):
        acc = acc + eq_twist(cat, C) * eq_dim(cat, C)
    return eq_twist(cat, A).inv() * eq_twist(cat, B).inv() * acc


def s_matrix(cat: CrossedCategory, cross_check: bool = True) -> list[list[Cyclotomic]]:
    """Exact S-matrix; optionally re-derived via balancing and compared."""
    objects = simple_objects(cat)
    rows = []
    for A in objects:
        row = []
        for B in objects:
            entry = _s_closed(cat, A, B)
            if cross_check:
                balanced = _s_balance(cat, A, B)
                if not entry == balanced:
                    raise RuntimeError(
                        f"S-matrix disagreement at ({A!r}, {B!r}): "
                        f"closed {entry!r} vs balancing {balanced!r}"
                    )
            row.append(entry)
        rows.append(row)
    return rows


class ModularData:
    """Ordered simples with exact S, T, dims of the equivariantisation."""

    def __init__(self, cat: CrossedCategory, cross_check: bool = True):
        self.category = cat
        self.objects = simple_objects(cat)
        self.S = s_matrix(cat, cross_check=cross_check)
        self.T = t_matrix(cat)
        self.dims = [eq_dim(cat, obj) for obj in self.objects]
        self.global_dim = 4 * cat.group.order

    @cached_property
    def _inv_unit_row(self) -> list[Cyclotomic]:
        return [v.inv() for v in self.S[0]]

    def to_json(self) -> dict:
        return {
            "objects": [repr(obj) for obj in self.objects],
            "T": [v.to_terms() for v in self.T],
            "S": [[v.to_terms() for v in row] for row in self.S],
            "dims": [v.to_terms() for v in self.dims],
            "global_dim": self.global_dim,
        }


def modular_data(cat: CrossedCategory, cross_check: bool = True) -> ModularData:
    return ModularData(cat, cross_check=cross_check)


def _verlinde(md: ModularData, i: int, j: int, k: int) -> Fraction | None:
    acc = ZERO
    inv0 = md._inv_unit_row
    S = md.S
    for m in range(len(S)):
        acc = acc + S[i][m] * S[j][m] * S[k][m].conj() * inv0[m]
    return (acc * Fraction(1, md.global_dim)).is_rational()


def verlinde(md: ModularData, i: int, j: int, k: int) -> Fraction:
    """Fusion multiplicity N_{ij}^k from the S-matrix."""
    val = _verlinde(md, i, j, k)
    if val is None:
        raise ArithmeticError(f"Verlinde sum at ({i},{j},{k}) is not rational")
    return val


@dataclass
class ModularCheck:
    name: str
    ok: bool
    counterexample: str | None = None


@dataclass
class ModularReport:
    checks: list[ModularCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_dict(self) -> dict:
        return {
            c.name: ("pass" if c.ok else f"fail: {c.counterexample}")
            for c in self.checks
        }


def verify_modular(md: ModularData) -> ModularReport:
    """Check the modular axioms for the equivariantisation's (S, T)."""
    report = ModularReport()
    S = md.S
    n = len(S)
    d2 = integer(md.global_dim)

    bad = next(
        ((i, j) for i in range(n) for j in range(n) if not S[i][j] == S[j][i]), None
    )
    report.checks.append(
        ModularCheck("s_symmetric", bad is None, bad and f"entry {bad}")
    )

    conj_rows = [[v.conj() for v in row] for row in S]
    bad = None
    for i in range(n):
        for j in range(n):
            acc = ZERO
            for m in range(n):
                acc = acc + S[i][m] * conj_rows[j][m]
            expected = d2 if i == j else ZERO
            if not acc == expected:
                bad = (i, j)
                break
        if bad:
            break
    report.checks.append(
        ModularCheck("s_unitary", bad is None, bad and f"entry {bad}")
    )

    perm_ok = True
    detail = None
    seen = set()
    for i in range(n):
        hits = []
        for j in range(n):
            acc = ZERO
            for m in range(n):
                acc = acc + S[i][m] * S[m][j]
            if acc == d2:
                hits.append(j)
            elif not acc.is_zero:
                perm_ok = False
                detail = f"entry ({i},{j}) not 0 or {md.global_dim}"
                break
        if not perm_ok:
            break
        if len(hits) != 1 or hits[0] in seen:
            perm_ok = False
            detail = f"row {i} image {hits}"
            break
        seen.add(hits[0])
    report.checks.append(ModularCheck("s_squared_permutation", perm_ok, detail))

    bad_t = next((i for i in range(n) if md.T[i].as_root() is None), None)
    report.checks.append(
        ModularCheck(
            "t_roots_of_unity",
            bad_t is None,
            None if bad_t is None else f"index {bad_t}",
        )
    )

    cat = md.category
    objects = md.objects
    index = {obj: k for k, obj in enumerate(objects)}
    bad_v = None
    for i in range(n):
        for j in range(n):
            counts = [0] * n
            for c in eq_fusion(cat, objects[i], objects[j]):
                counts[index[c]] += 1
            for k in range(n):
                if _verlinde(md, i, j, k) != counts[k]:
                    bad_v = (i, j, k)
                    break
            if bad_v:
                break
        if bad_v:
            break
    report.checks.append(
        ModularCheck(
            "verlinde_matches_fusion", bad_v is None, bad_v and f"triple {bad_v}"
        )
    )
    return report

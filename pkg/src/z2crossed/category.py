"""Braided Z2-crossed tensor category attached to cocycle data.

The category has two sectors: points C_a for a in G (the neutral sector,
a pointed braided category with associator omega and braiding sigma) and
defects X^xbar for xbar in G/2G.  Tensor products, the eight associator
families, the Z2-action with its tensor structure, the crossed braiding,
the ribbon twist and the duality data are all given by closed scalar
formulas in (sigma, omega, q, delta, epsilon, alpha, beta).

verify_all checks every defining axiom (pentagons, both crossed hexagons,
action coherence, twist balancing, invariance and self-duality, zigzags,
associator invertibility, quantum dimensions) by composing the structural
morphisms on explicit fusion bases and comparing exactly.  Morphisms are
sparse matrices indexed by fusion paths: a path is () at a leaf and
(left, right, key) at a tensor node, where key is the summand label t for
a defect-defect product and None otherwise.  Blockwise evaluation on
simple summands is justified by naturality of all structure maps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .abgroup import CosetMod2, Element
from .cocycle import CocycleData
from .scalars import (
    MINUS_ONE,
    ONE,
    Cyclotomic,
    integer,
    root_of_unity,
    sqrt_int,
    sqrt_of_root,
)


class Point:
    """Invertible simple object C_a in the neutral sector."""

    __slots__ = ("a",)
    grade = 0

    def __init__(self, a: Element):
        object.__setattr__(self, "a", a)

    def __setattr__(self, name, value):
        raise AttributeError("Point is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Point) and self.a == other.a

    def __hash__(self) -> int:
        return hash(("C", self.a.residues))

    def __repr__(self) -> str:
        return f"C{self.a!r}"


class Defect:
    """Simple object X^xbar in the nontrivially graded sector."""

    __slots__ = ("xbar",)
    grade = 1

    def __init__(self, xbar: CosetMod2):
        object.__setattr__(self, "xbar", xbar)

    def __setattr__(self, name, value):
        raise AttributeError("Defect is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Defect) and self.xbar == other.xbar

    def __hash__(self) -> int:
        return hash(("X", self.xbar.rep.residues))

    def __repr__(self) -> str:
        return f"X^{self.xbar.rep!r}"


SimpleObj = Point | Defect


class ScalarBlock:
    """Sparse matrix of a structural morphism between fusion decompositions.

    Entries are keyed by (source label, target label); the label is the
    summand index t of a defect-defect product and None for the unique
    summand of any other product.
    """

    def __init__(self, entries: dict):
        self.entries = dict(entries)

    def __getitem__(self, key) -> Cyclotomic:
        return self.entries[key]

    def items(self):
        return self.entries.items()

    def __len__(self) -> int:
        return len(self.entries)

    def __repr__(self) -> str:
        return f"ScalarBlock({self.entries!r})"


@dataclass
class CoherenceFamily:
    family: str
    instances_checked: int
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class CoherenceReport:
    families: list[CoherenceFamily] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(f.ok for f in self.families)

    def to_json(self) -> list[dict]:
        return [
            {
                "family": f.family,
                "instances_checked": f.instances_checked,
                "failures": f.failures,
            }
            for f in self.families
        ]

    def summary(self) -> dict[str, str]:
        return {f.family: ("pass" if f.ok else "fail") for f in self.families}


class CrossedCategory:
    """The braided Z2-crossed category of a cocycle datum with (epsilon, alpha, beta)."""

    def __init__(
        self,
        data: CocycleData,
        epsilon: int,
        alpha: Cyclotomic,
        beta: Cyclotomic,
    ):
        self.data = data
        self.group = data.group
        self.epsilon = epsilon
        self.alpha = alpha
        self.beta = beta
        self._tampered_sigma = None
        self._tampered_q = None
        self._tampered_assoc = None
        self._assoc_cache: dict = {}
        self._assoc_inv_cache: dict = {}
        self._braid_cache: dict = {}
        self._tau_cache: dict = {}

    # -- objects -----------------------------------------------------------

    @cached_property
    def simples(self) -> tuple[SimpleObj, ...]:
        g = self.group
        points = tuple(Point(a) for a in g.elements)
        defects = tuple(Defect(c) for c in g.cosets_mod2)
        return points + defects

    def g_act(self, x: SimpleObj) -> SimpleObj:
        return Point(-x.a) if isinstance(x, Point) else x

    def fuse(self, x: SimpleObj, y: SimpleObj):
        """Ordered decomposition of x (x) y as ((summand label, simple), ...)."""
        if isinstance(x, Point) and isinstance(y, Point):
            return ((None, Point(x.a + y.a)),)
        if isinstance(x, Point):
            return ((None, Defect(y.xbar + x.a)),)
        if isinstance(y, Point):
            return ((None, Defect(x.xbar + y.a)),)
        coset = x.xbar + y.xbar + self.data.delta
        return tuple((t, Point(t)) for t in coset.members)

    def twist(self, x: SimpleObj) -> Cyclotomic:
        if isinstance(x, Point):
            return self.data.form.Q_of(x.a)
        return self.beta

    def dual_data(self, x: SimpleObj):
        """Dual object with the evaluation and coevaluation normalisations."""
        if isinstance(x, Point):
            a = x.a
            return Point(-a), self._omega(a, a, -a), ONE
        m = len(self.group.two_gamma)
        ev = integer(self.epsilon) * sqrt_int(m)
        return Defect(x.xbar + self.data.delta), ev, ONE

    def quantum_dimension(self, x: SimpleObj) -> Cyclotomic:
        if isinstance(x, Point):
            return ONE
        m = len(self.group.two_gamma)
        return integer(self.epsilon) * self.alpha * self.beta * sqrt_int(m)

    def global_dim(self) -> Cyclotomic:
        return integer(2 * self.group.order)

    # -- scalar access (routed through the defect-injection hooks) ----------

    def _sigma(self, a: Element, b: Element) -> Cyclotomic:
        v = self.data.sigma(a, b)
        return v * MINUS_ONE if (a, b) == self._tampered_sigma else v

    def _q(self, a: Element) -> Cyclotomic:
        v = self.data.q_of(a)
        return v * MINUS_ONE if a == self._tampered_q else v

    def _q_inv(self, a: Element) -> Cyclotomic:
        v = self.data.q_inv(a)
        return v * MINUS_ONE if a == self._tampered_q else v

    def _omega(self, a: Element, b: Element, c: Element) -> Cyclotomic:
        return self.data.omega(a, b, c)

    def _omega_bar(self, xbar: CosetMod2, b: Element, c: Element) -> Cyclotomic:
        return self.data.omega_bar(xbar, b, c)

    def _inject_defect(self, kind: str) -> None:
        """Corrupt a single scalar; shows the coherence checks are not vacuous."""
        g = self.group
        nz = next((a for a in g.elements if any(a.residues)), g.zero())
        if kind == "sigma":
            self._tampered_sigma = (nz, nz)
        elif kind == "q":
            self._tampered_q = nz
        elif kind == "alpha":
            self.alpha = self.alpha * root_of_unity(Fraction(1, 8))
        elif kind == "beta":
            self.beta = self.beta * root_of_unity(Fraction(1, 8))
        elif kind == "associator":
            x = Defect(g.cosets_mod2[0])
            self._tampered_assoc = (x, x, x)
        else:
            raise ValueError(f"unknown defect kind {kind!r}")
        self._assoc_cache.clear()
        self._assoc_inv_cache.clear()
        self._braid_cache.clear()
        self._tau_cache.clear()

    # -- structural scalar blocks on fusion-channel keys --------------------

    @cached_property
    def _ddd_norm(self) -> Cyclotomic:
        m = len(self.group.two_gamma)
        return integer(self.epsilon) * sqrt_int(m) * Fraction(1, m)

    def _assoc_block(self, A: SimpleObj, B: SimpleObj, C: SimpleObj):
        """Associator (A(x)B)(x)C -> A(x)(B(x)C) on (pair key, outer key) labels."""
        key = (A, B, C)
        cached = self._assoc_cache.get(key)
        if cached is not None:
            return cached
        d = self.data
        pattern = (A.grade, B.grade, C.grade)
        if pattern == (0, 0, 0):
            coeff = self._omega(A.a, B.a, C.a)
            out = {(None, None): (((None, None), coeff),)}
        elif pattern == (1, 0, 0):
            coeff = self._omega_bar(A.xbar + d.delta, B.a, C.a)
            out = {(None, None): (((None, None), coeff),)}
        elif pattern == (0, 1, 0):
            coeff = self._sigma(A.a, C.a)
            out = {(None, None): (((None, None), coeff),)}
        elif pattern == (0, 0, 1):
            coeff = self._omega_bar(C.xbar + (A.a + B.a), A.a, B.a)
            out = {(None, None): (((None, None), coeff),)}
        elif pattern == (0, 1, 1):
            a = A.a
            out = {}
            for t in (B.xbar + C.xbar + d.delta).members:
                coeff = self._omega_bar(B.xbar + a, a, t)
                out[(None, a + t)] = (((t, None), coeff),)
        elif pattern == (1, 1, 0):
            c = C.a
            out = {}
            for t in (A.xbar + B.xbar + d.delta).members:
                coeff = self._omega_bar(A.xbar, t, c)
                out[(t, None)] = (((None, t + c), coeff),)
        elif pattern == (1, 0, 1):
            a = B.a
            out = {}
            for t in (A.xbar + a + C.xbar + d.delta).members:
                out[(None, t)] = (((None, t), self._sigma(a, t)),)
        else:
            out = {}
            dst = (B.xbar + C.xbar + d.delta).members
            for t in (A.xbar + B.xbar + d.delta).members:
                out[(t, None)] = tuple(
                    ((r, None), self._ddd_norm * self._sigma(t, r).inv()) for r in dst
                )
        if self._tampered_assoc == key and out:
            src = next(iter(out))
            (dst0, v), *rest = out[src]
            out[src] = ((dst0, v * MINUS_ONE), *rest)
        self._assoc_cache[key] = out
        return out

    def _assoc_inv_block(self, A: SimpleObj, B: SimpleObj, C: SimpleObj):
        """Inverse associator A(x)(B(x)C) -> (A(x)B)(x)C on key labels."""
        key = (A, B, C)
        cached = self._assoc_inv_cache.get(key)
        if cached is not None:
            return cached
        if (A.grade, B.grade, C.grade) == (1, 1, 1):
            d = self.data
            src = (B.xbar + C.xbar + d.delta).members
            dst = (A.xbar + B.xbar + d.delta).members
            out = {}
            for r in src:
                out[(r, None)] = tuple(
                    ((t, None), self._ddd_norm * self._sigma(r, t)) for t in dst
                )
        else:
            out = {}
            for src_key, targets in self._assoc_block(A, B, C).items():
                for dst_key, v in targets:
                    out[dst_key] = ((src_key, v.inv()),)
        self._assoc_inv_cache[key] = out
        return out

    def _braid_block(self, X: SimpleObj, Y: SimpleObj):
        """Crossed braiding X(x)Y -> g_*(Y)(x)X on channel keys, g the grade of X."""
        key = (X, Y)
        cached = self._braid_cache.get(key)
        if cached is not None:
            return cached
        if isinstance(X, Point) and isinstance(Y, Point):
            out = {None: ((None, self._sigma(X.a, Y.a)),)}
        elif isinstance(X, Point):
            out = {None: ((None, self._q_inv(X.a)),)}
        elif isinstance(Y, Point):
            a = Y.a
            coeff = self._q_inv(a) * self._omega_bar(X.xbar + a, a, -a)
            out = {None: ((None, coeff),)}
        else:
            coset = X.xbar + Y.xbar + self.data.delta
            out = {t: ((t, self.alpha * self._q(t)),) for t in coset.members}
        self._braid_cache[key] = out
        return out

    def _tau_block(self, X: SimpleObj, Y: SimpleObj):
        """Tensor structure g_*(X(x)Y) -> g_*X(x)g_*Y of the nontrivial action."""
        key = (X, Y)
        cached = self._tau_cache.get(key)
        if cached is not None:
            return cached
        d = self.data
        if isinstance(X, Point) and isinstance(Y, Point):
            out = {None: ((None, self._omega(X.a, Y.a, -Y.a)),)}
        elif isinstance(X, Point):
            a = X.a
            out = {None: ((None, self._omega_bar(Y.xbar + a, a, -a)),)}
        elif isinstance(Y, Point):
            a = Y.a
            out = {None: ((None, self._omega_bar(X.xbar + d.delta, a, -a)),)}
        else:
            coset = X.xbar + Y.xbar + d.delta
            out = {
                t: ((-t, self._omega_bar(X.xbar, t, -t)),) for t in coset.members
            }
        self._tau_cache[key] = out
        return out

    # -- public blocks -------------------------------------------------------

    @staticmethod
    def _flatten(block) -> ScalarBlock:
        entries = {}
        for (k1, k2), targets in block.items():
            src = k1 if k1 is not None else k2
            for (j1, j2), v in targets:
                entries[(src, j1 if j1 is not None else j2)] = v
        return ScalarBlock(entries)

    def associator(self, X: SimpleObj, Y: SimpleObj, Z: SimpleObj) -> ScalarBlock:
        return self._flatten(self._assoc_block(X, Y, Z))

    def associator_inv(self, X: SimpleObj, Y: SimpleObj, Z: SimpleObj) -> ScalarBlock:
        return self._flatten(self._assoc_inv_block(X, Y, Z))

    def braiding(self, X: SimpleObj, Y: SimpleObj) -> ScalarBlock:
        entries = {}
        for k, targets in self._braid_block(X, Y).items():
            for j, v in targets:
                entries[(k, j)] = v
        return ScalarBlock(entries)

    def tau(self, X: SimpleObj, Y: SimpleObj) -> ScalarBlock:
        entries = {}
        for k, targets in self._tau_block(X, Y).items():
            for j, v in targets:
                entries[(k, j)] = v
        return ScalarBlock(entries)

    # -- fusion-path spaces and sparse morphisms -----------------------------

    def _leaf(self, s: SimpleObj) -> dict:
        return {(): s}

    def _tensor_space(self, sp1: dict, sp2: dict) -> dict:
        out = {}
        for p1, s1 in sp1.items():
            for p2, s2 in sp2.items():
                for k, s in self.fuse(s1, s2):
                    out[(p1, p2, k)] = s
        return out

    def _gpow_space(self, sp: dict, g: int) -> dict:
        if g % 2 == 0:
            return sp
        return {p: self.g_act(s) for p, s in sp.items()}

    def _id_mor(self, sp: dict) -> dict:
        return {p: ((p, ONE),) for p in sp}

    @staticmethod
    def _compose(after: dict, before: dict) -> dict:
        out = {}
        for src, pairs in before.items():
            acc: dict = {}
            for mid, c in pairs:
                for dst, v in after.get(mid, ()):
                    w = c * v
                    acc[dst] = acc[dst] + w if dst in acc else w
            out[src] = tuple(acc.items())
        return out

    def _assoc_mor(self, spA: dict, spB: dict, spC: dict, inv: bool = False) -> dict:
        block_of = self._assoc_inv_block if inv else self._assoc_block
        out = {}
        for pa, sa in spA.items():
            for pb, sb in spB.items():
                for pc, sc in spC.items():
                    for (k1, k2), targets in block_of(sa, sb, sc).items():
                        if inv:
                            src = (pa, (pb, pc, k1), k2)
                            out[src] = tuple(
                                (((pa, pb, j1), pc, j2), v) for (j1, j2), v in targets
                            )
                        else:
                            src = ((pa, pb, k1), pc, k2)
                            out[src] = tuple(
                                ((pa, (pb, pc, j1), j2), v) for (j1, j2), v in targets
                            )
        return out

    def _tau_mor(self, sp1: dict, sp2: dict) -> dict:
        out = {}
        for p1, s1 in sp1.items():
            for p2, s2 in sp2.items():
                for k, targets in self._tau_block(s1, s2).items():
                    out[(p1, p2, k)] = tuple(((p1, p2, j), v) for j, v in targets)
        return out

    def _tau_pow_mor(self, sp1: dict, sp2: dict, g: int) -> dict:
        if g % 2 == 0:
            return self._id_mor(self._tensor_space(sp1, sp2))
        return self._tau_mor(sp1, sp2)

    def _braid_mor(self, sp1: dict, sp2: dict) -> dict:
        out = {}
        for p1, s1 in sp1.items():
            for p2, s2 in sp2.items():
                for k, targets in self._braid_block(s1, s2).items():
                    out[(p1, p2, k)] = tuple(((p2, p1, j), v) for j, v in targets)
        return out

    def _tensor_id_right(self, f: dict, sp_src: dict, sp_right: dict) -> dict:
        out = {}
        for p1, pairs in f.items():
            s1 = sp_src[p1]
            for pr, sr in sp_right.items():
                for k, _ in self.fuse(s1, sr):
                    out[(p1, pr, k)] = tuple(((p2, pr, k), v) for p2, v in pairs)
        return out

    def _tensor_id_left(self, sp_left: dict, f: dict, sp_src: dict) -> dict:
        out = {}
        for pl, sl in sp_left.items():
            for p1, pairs in f.items():
                s1 = sp_src[p1]
                for k, _ in self.fuse(sl, s1):
                    out[(pl, p1, k)] = tuple(((pl, p2, k), v) for p2, v in pairs)
        return out

    def _twist_mor(self, sp: dict) -> dict:
        return {p: ((p, self.twist(s)),) for p, s in sp.items()}

    @staticmethod
    def _mismatch(lhs: dict, rhs: dict):
        """First (basis path, lhs, rhs) where the two morphisms differ, else None."""
        for src in lhs.keys() | rhs.keys():
            left: dict = {}
            for dst, v in lhs.get(src, ()):
                left[dst] = left[dst] + v if dst in left else v
            right: dict = {}
            for dst, v in rhs.get(src, ()):
                right[dst] = right[dst] + v if dst in right else v
            for dst in left.keys() | right.keys():
                lv = left.get(dst)
                rv = right.get(dst)
                if lv is None:
                    if not rv.is_zero:
                        return src, "0", repr(rv)
                elif rv is None:
                    if not lv.is_zero:
                        return src, repr(lv), "0"
                elif not lv == rv:
                    return src, repr(lv), repr(rv)
        return None

    # -- coherence families --------------------------------------------------

    def _run_family(self, name: str, instances) -> CoherenceFamily:
        fam = CoherenceFamily(name, 0)
        for objs, lhs, rhs in instances:
            fam.instances_checked += 1
            diff = self._mismatch(lhs, rhs)
            if diff is not None:
                fam.failures.append(
                    {
                        "objects": [repr(o) for o in objs],
                        "basis": repr(diff[0]),
                        "lhs": diff[1],
                        "rhs": diff[2],
                    }
                )
                break
        return fam

    def _pentagon_instances(self):
        for w in self.simples:
            spW = self._leaf(w)
            for x in self.simples:
                spX = self._leaf(x)
                wx = self._tensor_space(spW, spX)
                for y in self.simples:
                    spY = self._leaf(y)
                    xy = self._tensor_space(spX, spY)
                    wx_y = self._tensor_space(wx, spY)
                    a_wxy = self._assoc_mor(spW, spX, spY)
                    for z in self.simples:
                        spZ = self._leaf(z)
                        yz = self._tensor_space(spY, spZ)
                        xy_z = self._tensor_space(xy, spZ)
                        lhs = self._compose(
                            self._assoc_mor(spW, spX, yz),
                            self._assoc_mor(wx, spY, spZ),
                        )
                        rhs = self._compose(
                            self._tensor_id_left(spW, self._assoc_mor(spX, spY, spZ), xy_z),
                            self._compose(
                                self._assoc_mor(spW, xy, spZ),
                                self._tensor_id_right(a_wxy, wx_y, spZ),
                            ),
                        )
                        yield (w, x, y, z), lhs, rhs

    def _action_coherence_instances(self):
        for a in self.simples:
            spA = self._leaf(a)
            gA = self._gpow_space(spA, 1)
            for b in self.simples:
                spB = self._leaf(b)
                ab = self._tensor_space(spA, spB)
                tau_ab = self._tau_mor(spA, spB)
                gab = self._gpow_space(ab, 1)
                for c in self.simples:
                    spC = self._leaf(c)
                    gC = self._gpow_space(spC, 1)
                    bc = self._tensor_space(spB, spC)
                    lhs = self._compose(
                        self._tensor_id_left(
                            gA, self._tau_mor(spB, spC), self._gpow_space(bc, 1)
                        ),
                        self._compose(
                            self._tau_mor(spA, bc),
                            self._assoc_mor(spA, spB, spC),
                        ),
                    )
                    rhs = self._compose(
                        self._assoc_mor(gA, self._gpow_space(spB, 1), gC),
                        self._compose(
                            self._tensor_id_right(tau_ab, gab, gC),
                            self._tau_mor(ab, spC),
                        ),
                    )
                    yield (a, b, c), lhs, rhs

    def _action_involution_instances(self):
        for a in self.simples:
            spA = self._leaf(a)
            gA = self._leaf(self.g_act(a))
            for b in self.simples:
                spB = self._leaf(b)
                comp = self._compose(
                    self._tau_mor(gA, self._leaf(self.g_act(b))),
                    self._tau_mor(spA, spB),
                )
                ident = self._id_mor(self._tensor_space(spA, spB))
                yield (a, b), comp, ident

    def _hexagon_instances(self):
        for x in self.simples:
            spX = self._leaf(x)
            g = x.grade
            for y in self.simples:
                spY = self._leaf(y)
                gY = self._gpow_space(spY, g)
                xy = self._tensor_space(spX, spY)
                braid_xy = self._braid_mor(spX, spY)
                for z in self.simples:
                    spZ = self._leaf(z)
                    gZ = self._gpow_space(spZ, g)
                    yz = self._tensor_space(spY, spZ)
                    gyz = self._gpow_space(yz, g)
                    lhs = self._compose(
                        self._assoc_mor(gY, gZ, spX),
                        self._compose(
                            self._tensor_id_right(
                                self._tau_pow_mor(spY, spZ, g), gyz, spX
                            ),
                            self._compose(
                                self._braid_mor(spX, yz),
                                self._assoc_mor(spX, spY, spZ),
                            ),
                        ),
                    )
                    rhs = self._compose(
                        self._tensor_id_left(
                            gY, self._braid_mor(spX, spZ), self._tensor_space(spX, spZ)
                        ),
                        self._compose(
                            self._assoc_mor(gY, spX, spZ),
                            self._tensor_id_right(braid_xy, xy, spZ),
                        ),
                    )
                    yield (x, y, z), lhs, rhs

    def _hexagon_inverse_instances(self):
        for x in self.simples:
            spX = self._leaf(x)
            g = x.grade
            for y in self.simples:
                spY = self._leaf(y)
                h = y.grade
                xy = self._tensor_space(spX, spY)
                for z in self.simples:
                    spZ = self._leaf(z)
                    hZ = self._gpow_space(spZ, h)
                    ghZ = self._gpow_space(spZ, g + h)
                    yz = self._tensor_space(spY, spZ)
                    lhs = self._braid_mor(xy, spZ)
                    rhs = self._compose(
                        self._assoc_mor(ghZ, spX, spY),
                        self._compose(
                            self._tensor_id_right(
                                self._braid_mor(spX, hZ),
                                self._tensor_space(spX, hZ),
                                spY,
                            ),
                            self._compose(
                                self._assoc_mor(spX, hZ, spY, inv=True),
                                self._compose(
                                    self._tensor_id_left(
                                        spX, self._braid_mor(spY, spZ), yz
                                    ),
                                    self._assoc_mor(spX, spY, spZ),
                                ),
                            ),
                        ),
                    )
                    yield (x, y, z), lhs, rhs

    def _action_braiding_instances(self):
        for x in self.simples:
            spX = self._leaf(x)
            h = x.grade
            gX = self._gpow_space(spX, 1)
            for y in self.simples:
                spY = self._leaf(y)
                hY = self._gpow_space(spY, h)
                lhs = self._compose(
                    self._tau_mor(hY, spX),
                    self._braid_mor(spX, spY),
                )
                rhs = self._compose(
                    self._braid_mor(gX, self._gpow_space(spY, 1)),
                    self._tau_mor(spX, spY),
                )
                yield (x, y), lhs, rhs

    def _twist_balancing_instances(self):
        for x in self.simples:
            spX = self._leaf(x)
            g = x.grade
            tx = self.twist(x)
            for y in self.simples:
                spY = self._leaf(y)
                h = y.grade
                xy = self._tensor_space(spX, spY)
                lhs = self._compose(
                    self._tau_pow_mor(spX, spY, g + h), self._twist_mor(xy)
                )
                gY = self._gpow_space(spY, g)
                double = self._compose(
                    self._braid_mor(gY, spX), self._braid_mor(spX, spY)
                )
                scale = tx * self.twist(y)
                rhs = {
                    src: tuple((dst, v * scale) for dst, v in pairs)
                    for src, pairs in double.items()
                }
                yield (x, y), lhs, rhs

    def _twist_invariance_instances(self):
        for x in self.simples:
            lhs = self._twist_mor(self._leaf(x))
            rhs = self._twist_mor(self._leaf(self.g_act(x)))
            yield (x,), lhs, rhs

    def _coev_mor(self, x: SimpleObj, coev: Cyclotomic) -> dict:
        k0 = self.group.zero() if isinstance(x, Defect) else None
        return {(): ((((), (), k0), coev),)}

    def _self_duality_instances(self):
        for x in self.simples:
            g = x.grade
            spX = self._leaf(x)
            dual, _ev, coev = self.dual_data(x)
            spD = self._leaf(dual)
            cm = self._coev_mor(x, coev)
            theta_x = {(): (((), self.twist(x)),)}
            lhs = self._compose(
                self._tau_pow_mor(self._gpow_space(spX, g), spD, g),
                self._compose(
                    self._tensor_id_right(theta_x, spX, spD),
                    cm,
                ),
            )
            theta_d = {(): (((), self.twist(dual)),)}
            rhs = self._compose(
                self._tensor_id_left(spX, theta_d, spD),
                cm,
            )
            yield (x,), lhs, rhs

    def _zigzag_instances(self):
        for x in self.simples:
            spX = self._leaf(x)
            dual, ev, coev = self.dual_data(x)
            spD = self._leaf(dual)
            k0 = self.group.zero() if isinstance(x, Defect) else None
            ident_x = self._id_mor(spX)
            ident_d = self._id_mor(spD)
            # (id (x) ev) o assoc o (coev (x) id) == id on x
            first = {(): ((((((), (), k0), (), None)), coev),)}
            mid = self._assoc_mor(spX, spD, spX)
            last = {}
            for p in self._tensor_space(spX, self._tensor_space(spD, spX)):
                _px, inner, _k2 = p
                if inner[2] == k0:
                    last[p] = (((), ev),)
            lhs = self._compose(last, self._compose(mid, first))
            yield (x, "left"), lhs, ident_x
            # (ev (x) id) o assoc_inv o (id (x) coev) == id on the dual
            first2 = {(): (((((), ((), (), k0), None)), coev),)}
            mid2 = self._assoc_mor(spD, spX, spD, inv=True)
            last2 = {}
            for p in self._tensor_space(self._tensor_space(spD, spX), spD):
                inner, _pd, _k2 = p
                if inner[2] == k0:
                    last2[p] = (((), ev),)
            rhs2 = self._compose(last2, self._compose(mid2, first2))
            yield (x, "right"), rhs2, ident_d

    def _invertibility_instances(self):
        for a in self.simples:
            spA = self._leaf(a)
            for b in self.simples:
                spB = self._leaf(b)
                ab = self._tensor_space(spA, spB)
                for c in self.simples:
                    spC = self._leaf(c)
                    fwd = self._assoc_mor(spA, spB, spC)
                    bwd = self._assoc_mor(spA, spB, spC, inv=True)
                    src = self._tensor_space(ab, spC)
                    dst = self._tensor_space(spA, self._tensor_space(spB, spC))
                    yield (a, b, c, "left"), self._compose(bwd, fwd), self._id_mor(src)
                    yield (a, b, c, "right"), self._compose(fwd, bwd), self._id_mor(dst)

    def _dimension_instances(self):
        for x in self.simples:
            g = x.grade
            spX = self._leaf(x)
            dual, ev, coev = self.dual_data(x)
            spD = self._leaf(dual)
            k0 = self.group.zero() if isinstance(x, Defect) else None
            cm = {(): ((((), (), k0), coev),)}
            theta_x = {(): (((), self.twist(x)),)}
            tm = self._tensor_id_right(theta_x, spX, spD)
            gX = self._gpow_space(spX, g)
            bm = self._braid_mor(gX, spD)
            em = {((), (), k0): (((), ev),)}
            composite = self._compose(em, self._compose(bm, self._compose(tm, cm)))
            expected = {(): (((), self.quantum_dimension(x)),)}
            yield (x,), composite, expected

    def _odd_reduction_instances(self):
        d = self.data
        g = self.group
        n = g.order
        half = (n + 1) // 2
        ok_omega = all(
            d.omega_sign(a, b, c) == 1
            for a in g.elements
            for b in g.elements
            for c in g.elements
        )
        ok_sigma = all(
            d.sigma_exp(a, b) == (half * d.form.B_exponent(a, b)) % 1
            for a in g.elements
            for b in g.elements
        )
        ok_q = all(
            d.q_exp(a) == (half * d.form.Q_exponent(a)) % 1 for a in g.elements
        )
        ok_delta = d.delta == g.zero()
        one = self._id_mor({(): Point(g.zero())})
        for name, ok in (
            ("omega_trivial", ok_omega),
            ("sigma_is_B_half", ok_sigma),
            ("q_is_Q_half", ok_q),
            ("delta_zero", ok_delta),
        ):
            yield (name,), one, (one if ok else {})

    def _scalar_identity_instances(self):
        d = self.data
        g = self.group
        se = d.sigma_exp
        om = d.omega_sign
        half = Fraction(1, 2)
        for a in g.elements:
            for b in g.elements:
                lhs = se(a, -b)
                rhs = (-se(a, b) + (0 if om(a, b, -b) == 1 else half)) % 1
                gap = ONE if lhs == rhs else MINUS_ONE
                yield ("sigma(a,-b)", a, b), {0: ((0, gap),)}, {0: ((0, ONE),)}
                lhs2 = se(-a, b)
                rhs2 = (-se(a, b) + (0 if om(b, a, -a) == 1 else half)) % 1
                gap2 = ONE if lhs2 == rhs2 else MINUS_ONE
                yield ("sigma(-a,b)", a, b), {0: ((0, gap2),)}, {0: ((0, ONE),)}
        for a in g.elements:
            for b in g.elements:
                for c in g.elements:
                    lhs = om(a, -b, b + c)
                    rhs = om(a, b, c) * om(a, b, -b)
                    gap = ONE if lhs == rhs else MINUS_ONE
                    yield ("omega(a,-b,b+c)", a, b, c), {0: ((0, gap),)}, {
                        0: ((0, ONE),)
                    }

    def verify_all(self) -> CoherenceReport:
        report = CoherenceReport()
        report.families.append(self._run_family("pentagon", self._pentagon_instances()))
        report.families.append(
            self._run_family("action_coherence", self._action_coherence_instances())
        )
        report.families.append(
            self._run_family("action_involution", self._action_involution_instances())
        )
        report.families.append(self._run_family("hexagon", self._hexagon_instances()))
        report.families.append(
            self._run_family("hexagon_inverse", self._hexagon_inverse_instances())
        )
        report.families.append(
            self._run_family("action_braiding", self._action_braiding_instances())
        )
        report.families.append(
            self._run_family("twist_balancing", self._twist_balancing_instances())
        )
        report.families.append(
            self._run_family("twist_invariance", self._twist_invariance_instances())
        )
        report.families.append(
            self._run_family("twist_self_duality", self._self_duality_instances())
        )
        report.families.append(self._run_family("zigzag", self._zigzag_instances()))
        report.families.append(
            self._run_family(
                "associator_invertible", self._invertibility_instances()
            )
        )
        report.families.append(
            self._run_family("quantum_dimensions", self._dimension_instances())
        )
        if self.group.order % 2 == 1:
            report.families.append(
                self._run_family("odd_reduction", self._odd_reduction_instances())
            )
        report.families.append(
            self._run_family("scalar_identities", self._scalar_identity_instances())
        )
        return report


def make_category(
    data: CocycleData,
    epsilon: int = 1,
    alpha_branch: str = "principal",
    beta_sign: str = "pseudo-unitary",
) -> CrossedCategory:
    """Build the crossed category, fixing alpha and beta from the Gauss sum."""
    if epsilon not in (1, -1):
        raise ValueError("epsilon must be +1 or -1")
    if alpha_branch not in ("principal", "negative"):
        raise ValueError("alpha_branch must be 'principal' or 'negative'")
    if beta_sign not in ("pseudo-unitary", "negative"):
        raise ValueError("beta_sign must be 'pseudo-unitary' or 'negative'")
    gauss = data.gauss_partial_q()
    target = gauss if epsilon == 1 else gauss * MINUS_ONE
    if target.as_root() is None:
        raise ValueError(
            "partial Gauss sum times epsilon is not a root of unity; "
            "signals invalid cocycle data"
        )
    alpha = sqrt_of_root(target, alpha_branch)
    beta = alpha.inv() if epsilon == 1 else alpha.inv() * MINUS_ONE
    if beta_sign == "negative":
        beta = beta * MINUS_ONE
    return CrossedCategory(data, epsilon, alpha, beta)

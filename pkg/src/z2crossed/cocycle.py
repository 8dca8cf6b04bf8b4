"""Square roots of the bilinear and quadratic form data on a discriminant form.

For a discriminant form (G, Q) this module builds, componentwise on the
Jordan blocks:

* a normalised symmetric 2-cochain sigma with sigma(a,a) = Q(a) and
  sigma^2 = B_Q, evaluated on canonical representatives,
* the 3-cocycle omega = d(sigma), which is {+-1}-valued, a homomorphism
  G/2G -> {+-1} in its first argument and symmetric in the last two,
* a square root q of Q with the twisted additivity law
  q(a+b) q(a)^-1 q(b)^-1 = sigma(a,b) omega(a+b,a,b) omega(delta,a,b)
  for a distinguished 2-torsion element delta (one summand 1 in Z_2 for
  every cyclic component of modulus 2, zero elsewhere),

together with the partial Gauss sums and the orthogonality character sum
that drive the categorical constructions downstream.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .abgroup import CosetMod2, Element
from .discform import DiscriminantForm
from .scalars import MINUS_ONE, ONE, Cyclotomic, root_of_unity, sqrt_int

_HALF = Fraction(1, 2)


def _component_sigma_exp(comp, xs, ys) -> Fraction:
    """Exponent of sigma on one Jordan block, on canonical representatives."""
    if comp.kind == "odd":
        return Fraction(comp.u * xs[0] * ys[0], comp.q)
    if comp.kind == "two_cyclic":
        return Fraction(comp.u * xs[0] * ys[0], 2 * comp.q)
    x1, x2 = xs
    y1, y2 = ys
    if comp.even_sign > 0:
        return Fraction(x1 * y2 + x2 * y1, 2 * comp.q)
    return Fraction(2 * x1 * y1 + x1 * y2 + x2 * y1 + 2 * x2 * y2, 2 * comp.q)


def _component_q_exp(comp, xs) -> Fraction:
    """Exponent of the square root q on one Jordan block."""
    if comp.kind == "odd":
        return Fraction(comp.u * xs[0] * xs[0] * ((comp.q + 1) // 2), comp.q)
    if comp.kind == "two_cyclic":
        return Fraction(comp.u * xs[0] * xs[0], 4 * comp.q)
    x1, x2 = xs
    if comp.even_sign > 0:
        return Fraction(x1 * x2, 2 * comp.q)
    return Fraction(x1 * x1 + x1 * x2 + x2 * x2, 2 * comp.q)


@dataclass
class CocycleCheck:
    name: str
    ok: bool
    counterexample: str | None = None


@dataclass
class CocycleReport:
    checks: list[CocycleCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_dict(self) -> dict:
        return {
            c.name: ("pass" if c.ok else f"fail: {c.counterexample}")
            for c in self.checks
        }


class CocycleData:
    """sigma, omega, q and delta on a finite quadratic form.

    ``sigma_exp`` and ``q_exp`` are exponent tables (fractions mod 1)
    indexed by element pairs and elements respectively.
    """

    def __init__(
        self,
        form,
        sigma_exp: dict[tuple[Element, Element], Fraction],
        q_exp: dict[Element, Fraction],
        delta: Element,
    ):
        self.form = form
        self.group = form.group
        self._sigma_exp = sigma_exp
        self._q_exp = q_exp
        self.delta = delta
        self._sigma = {k: root_of_unity(v) for k, v in self._sigma_exp.items()}
        self._q = {k: root_of_unity(v) for k, v in self._q_exp.items()}
        self._q_inv = {k: root_of_unity(-v) for k, v in self._q_exp.items()}

    # -- scalar accessors ------------------------------------------------

    def sigma(self, a: Element, b: Element) -> Cyclotomic:
        return self._sigma[(a, b)]

    def sigma_exp(self, a: Element, b: Element) -> Fraction:
        return self._sigma_exp[(a, b)]

    def q_of(self, a: Element) -> Cyclotomic:
        return self._q[a]

    def q_inv(self, a: Element) -> Cyclotomic:
        return self._q_inv[a]

    def q_exp(self, a: Element) -> Fraction:
        return self._q_exp[a]

    @cached_property
    def _omega_sign(self) -> dict[tuple[Element, Element, Element], int]:
        table = {}
        se = self._sigma_exp
        for a in self.group.elements:
            for b in self.group.elements:
                for c in self.group.elements:
                    r = (se[(a, b + c)] - se[(a, b)] - se[(a, c)]) % 1
                    table[(a, b, c)] = 1 if r == 0 else (-1 if r == _HALF else 0)
        return table

    def omega_sign(self, a: Element, b: Element, c: Element) -> int:
        """omega(a,b,c) = d(sigma) as an integer sign."""
        return self._omega_sign[(a, b, c)]

    def omega(self, a: Element, b: Element, c: Element) -> Cyclotomic:
        return ONE if self.omega_sign(a, b, c) == 1 else MINUS_ONE

    def omega_bar_sign(self, xbar: CosetMod2, b: Element, c: Element) -> int:
        """omega evaluated on a coset of 2G in its first argument."""
        return self.omega_sign(xbar.rep, b, c)

    def omega_bar(self, xbar: CosetMod2, b: Element, c: Element) -> Cyclotomic:
        return ONE if self.omega_bar_sign(xbar, b, c) == 1 else MINUS_ONE

    # -- Gauss sums and orthogonality -------------------------------------

    def gauss_partial_q(self) -> Cyclotomic:
        """|2G|^(-1/2) * sum of q(a)^-1 over the coset delta + 2G."""
        acc: dict[Fraction, Fraction] = {}
        for t in self.group.two_gamma:
            r = (-self._q_exp[self.delta + t]) % 1
            acc[r] = acc.get(r, Fraction(0)) + 1
        m = len(self.group.two_gamma)
        return Cyclotomic(acc) * sqrt_int(m) * Fraction(1, m)

    def gauss_partial_Q(self, zbar: CosetMod2) -> Cyclotomic:
        """|2G|^(-1/2) * sum of Q(a) over the coset delta + zbar."""
        acc: dict[Fraction, Fraction] = {}
        for a in self.group.coset_of(self.delta + zbar.rep).members:
            r = self.form.Q_exponent(a)
            acc[r] = acc.get(r, Fraction(0)) + 1
        m = len(self.group.two_gamma)
        return Cyclotomic(acc) * sqrt_int(m) * Fraction(1, m)

    def character_sum(self, rbar: CosetMod2, s: Element, l: Element) -> Cyclotomic:
        """|2G|^-1 * sum of sigma(r,s) sigma(r,l)^-1 over r in rbar.

        Defined when s and l lie in a common coset of 2G; equals 1 if
        s = l and 0 otherwise.
        """
        if self.group.coset_of(s) != self.group.coset_of(l):
            raise ValueError("character_sum needs s and l in the same coset of 2G")
        acc: dict[Fraction, Fraction] = {}
        for r in rbar.members:
            x = (self._sigma_exp[(r, s)] - self._sigma_exp[(r, l)]) % 1
            acc[x] = acc.get(x, Fraction(0)) + 1
        return Cyclotomic(acc) * Fraction(1, len(self.group.two_gamma))

    # -- verification ------------------------------------------------------

    def verify_cocycle(self) -> CocycleReport:
        g = self.group
        se = self._sigma_exp
        qe = self._q_exp
        Qe = self.form.Q_exponent
        report = CocycleReport()

        def run(name: str, gen) -> None:
            for failure in gen:
                report.checks.append(CocycleCheck(name, False, failure))
                return
            report.checks.append(CocycleCheck(name, True))

        def normalised():
            z = g.zero()
            for a in g.elements:
                if se[(a, z)] != 0 or se[(z, a)] != 0:
                    yield f"sigma not normalised at a={a}"

        def symmetric():
            for a in g.elements:
                for b in g.elements:
                    if se[(a, b)] != se[(b, a)]:
                        yield f"sigma({a},{b}) != sigma({b},{a})"

        def square_is_bilinear():
            for a in g.elements:
                for b in g.elements:
                    if (2 * se[(a, b)]) % 1 != self.form.B_exponent(a, b):
                        yield f"sigma({a},{b})^2 != B({a},{b})"

        def diagonal_is_Q():
            for a in g.elements:
                if (se[(a, a)]) % 1 != Qe(a):
                    yield f"sigma({a},{a}) != Q({a})"

        def omega_values():
            for key, s in self._omega_sign.items():
                if s == 0:
                    yield f"omega{key} is not +-1"

        def omega_first_argument():
            om = self._omega_sign
            reps = [c.rep for c in g.cosets_mod2]
            for a in g.elements:
                r = g.coset_of(a).rep
                for b in g.elements:
                    for c in g.elements:
                        if om[(a, b, c)] != om[(r, b, c)]:
                            yield f"omega({a},{b},{c}) not constant on cosets of 2G"
                            return
            for r1 in reps:
                for r2 in reps:
                    s = r1 + r2
                    for b in g.elements:
                        for c in g.elements:
                            if om[(s, b, c)] != om[(r1, b, c)] * om[(r2, b, c)]:
                                yield f"omega not multiplicative at ({r1},{r2},{b},{c})"
                                return

        def omega_last_two():
            om = self._omega_sign
            for a in g.elements:
                for b in g.elements:
                    for c in g.elements:
                        if om[(a, b, c)] != om[(a, c, b)]:
                            yield f"omega({a},{b},{c}) != omega({a},{c},{b})"
                            return

        def q_squares():
            for a in g.elements:
                if (2 * qe[a]) % 1 != Qe(a):
                    yield f"q({a})^2 != Q({a})"

        def q_additive():
            om = self._omega_sign
            d = self.delta
            for a in g.elements:
                for b in g.elements:
                    lhs = (qe[a + b] - qe[a] - qe[b]) % 1
                    sign = om[(a + b, a, b)] * om[(d, a, b)]
                    rhs = (se[(a, b)] + (0 if sign == 1 else _HALF)) % 1
                    if lhs != rhs:
                        yield f"q-additivity fails at ({a},{b})"
                        return

        def delta_is_torsion():
            if any((2 * self.delta).residues):
                yield f"2*delta != 0 for delta={self.delta}"

        def q_negation():
            om = self._omega_sign
            d = self.delta
            for a in g.elements:
                lhs = qe[-a]
                sign = om[(a + d, a, -a)]
                rhs = (qe[a] + (0 if sign == 1 else _HALF)) % 1
                if lhs != rhs:
                    yield f"q(-a) != q(a) omega(a+delta,a,-a) at a={a}"

        run("sigma_normalised", normalised())
        run("sigma_symmetric", symmetric())
        run("sigma_square_is_bilinear", square_is_bilinear())
        run("sigma_diagonal_is_Q", diagonal_is_Q())
        run("omega_is_sign_valued", omega_values())
        run("omega_homomorphism_first_argument", omega_first_argument())
        run("omega_symmetric_last_two", omega_last_two())
        run("q_square_is_Q", q_squares())
        run("q_twisted_additivity", q_additive())
        run("delta_is_2_torsion", delta_is_torsion())
        run("q_negation_rule", q_negation())
        return report


def build(form: DiscriminantForm) -> CocycleData:
    """Construct (sigma, omega, q, delta) componentwise on Jordan blocks."""
    g = form.group
    offsets = form._offsets
    comps = form.components
    sigma_exp: dict[tuple[Element, Element], Fraction] = {}
    for a in g.elements:
        for b in g.elements:
            total = Fraction(0)
            for c, off in zip(comps, offsets):
                total += _component_sigma_exp(
                    c, a.residues[off : off + c.rank], b.residues[off : off + c.rank]
                )
            sigma_exp[(a, b)] = total % 1
    q_exp: dict[Element, Fraction] = {}
    for a in g.elements:
        total = Fraction(0)
        for c, off in zip(comps, offsets):
            total += _component_q_exp(c, a.residues[off : off + c.rank])
        q_exp[a] = total % 1
    delta_res: list[int] = []
    for c in comps:
        if c.kind == "two_cyclic" and c.q == 2:
            delta_res.append(1)
        else:
            delta_res.extend((0,) * c.rank)
    return CocycleData(form, sigma_exp, q_exp, g.element(delta_res))

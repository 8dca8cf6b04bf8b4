"""Discriminant data of strongly even integer lattices.

A lattice is given by an integer Gram matrix G with all entries even
(so the pairing takes values in 2Z).  The dual quotient L*/L is a
finite abelian group computed from the Smith normal form of G, and the
choice of coset representatives a -> a_hat in L* induces

    sigma(a, b) = e(<a_hat, b_hat> / 2),
    q(a)        = e(<a_hat, a_hat> / 4),
    omega(a,b,c) = e(<a_hat, u(b,c)> / 2),   u(b,c) = b_hat + c_hat - (b+c)_hat,

together with a distinguished 2-torsion element delta characterised by
the pairing condition  p(delta_bar, v) = e(<v,v>/4)  for all v in L.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .abgroup import CosetMod2, Element, FinAbGroup
from .cocycle import CocycleData
from .discform import QuadraticForm
from .scalars import Cyclotomic, root_of_unity

_HALF = Fraction(1, 2)


class GramParseError(ValueError):
    pass


def parse_gram(text: str) -> list[list[int]]:
    """Parse a Gram matrix file: first line the rank, then the rows.

    ``#`` starts a comment; blank lines are skipped.
    """
    rows: list[tuple[int, list[int]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values = [int(tok) for tok in line.split()]
        except ValueError:
            raise GramParseError(f"line {lineno}: expected integers") from None
        rows.append((lineno, values))
    if not rows:
        raise GramParseError("empty gram matrix input")
    lineno, header = rows[0]
    if len(header) != 1 or header[0] < 1:
        raise GramParseError(f"line {lineno}: first line must be the positive rank")
    n = header[0]
    body = rows[1:]
    if len(body) != n:
        raise GramParseError(f"expected {n} matrix rows, got {len(body)}")
    gram = []
    for lineno, values in body:
        if len(values) != n:
            raise GramParseError(f"line {lineno}: expected {n} entries")
        gram.append(values)
    return gram


def strong_even(gram) -> bool:
    """True when every pairing value is even, i.e. all entries are even."""
    return all(x % 2 == 0 for row in gram for x in row)


def smith_normal_form(a: list[list[int]]):
    """U A V = D with U, V unimodular and D = diag(d_1 | d_2 | ...)."""
    n = len(a)
    m = len(a[0]) if n else 0
    d = [row[:] for row in a]
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    v = [[int(i == j) for j in range(m)] for i in range(m)]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(i, j, c):
        # row_i += c * row_j
        d[i] = [x + c * y for x, y in zip(d[i], d[j])]
        u[i] = [x + c * y for x, y in zip(u[i], u[j])]

    def add_col(i, j, c):
        # col_i += c * col_j
        for row in d:
            row[i] += c * row[j]
        for row in v:
            row[i] += c * row[j]

    def negate_row(i):
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]

    for t in range(min(n, m)):
        while True:
            # choose the smallest nonzero entry in the remaining block as pivot
            pivot = None
            for i in range(t, n):
                for j in range(t, m):
                    if d[i][j] and (pivot is None or abs(d[i][j]) < abs(d[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            if pivot != (t, t):
                if pivot[0] != t:
                    swap_rows(t, pivot[0])
                if pivot[1] != t:
                    swap_cols(t, pivot[1])
            if d[t][t] < 0:
                negate_row(t)
            dirty = False
            for i in range(t + 1, n):
                q, r = divmod(d[i][t], d[t][t])
                if q:
                    add_row(i, t, -q)
                if r:
                    dirty = True
            for j in range(t + 1, m):
                q, r = divmod(d[t][j], d[t][t])
                if q:
                    add_col(j, t, -q)
                if r:
                    dirty = True
            if dirty:
                continue
            # divisibility: d_t must divide the remaining block
            culprit = None
            for i in range(t + 1, n):
                for j in range(t + 1, m):
                    if d[i][j] % d[t][t]:
                        culprit = i
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            add_row(t, culprit, 1)
        if all(d[i][j] == 0 for i in range(t, n) for j in range(t, m)):
            break
    return u, d, v


def _invert_unimodular(u: list[list[int]]) -> list[list[int]]:
    n = len(u)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(u)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if a[r][col])
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    out = [[x for x in row[n:]] for row in a]
    assert all(x.denominator == 1 for row in out for x in row)
    return [[int(x) for x in row] for row in out]


def signature_lattice(gram) -> tuple[int, int]:
    """Exact Sylvester signature (p_plus, p_minus) of a symmetric matrix."""
    n = len(gram)
    m = [[Fraction(x) for x in row] for row in gram]
    plus = minus = 0
    for i in range(n):
        if m[i][i] == 0:
            for j in range(i + 1, n):
                if m[j][j] != 0:
                    m[i], m[j] = m[j], m[i]
                    for row in m:
                        row[i], row[j] = row[j], row[i]
                    break
            else:
                for j in range(i + 1, n):
                    if m[i][j] != 0:
                        m[i] = [x + y for x, y in zip(m[i], m[j])]
                        for row in m:
                            row[i] += row[j]
                        break
                else:
                    raise ValueError("gram matrix is singular")
        d = m[i][i]
        if d > 0:
            plus += 1
        else:
            minus += 1
        for j in range(i + 1, n):
            if m[j][i]:
                f = m[j][i] / d
                m[j] = [x - f * y for x, y in zip(m[j], m[i])]
                for row in m:
                    row[j] -= f * row[i]
    return plus, minus


class Lattice:
    """Integer lattice with a strongly even, nondegenerate Gram matrix."""

    def __init__(self, gram):
        gram = [[int(x) for x in row] for row in gram]
        n = len(gram)
        if n == 0 or any(len(row) != n for row in gram):
            raise ValueError("gram matrix must be square and nonempty")
        if any(gram[i][j] != gram[j][i] for i in range(n) for j in range(n)):
            raise ValueError("gram matrix must be symmetric")
        if not strong_even(gram):
            raise ValueError(
                "gram matrix must have all entries even (pairing in 2Z)"
            )
        self.gram = tuple(tuple(row) for row in gram)
        self.rank = n
        self.signature_pair = signature_lattice(gram)  # raises when singular

    @property
    def signature(self) -> int:
        p, m = self.signature_pair
        return (p - m) % 8

    def inner(self, x, y) -> Fraction:
        """<x, y> for coordinate vectors with respect to the lattice basis."""
        return sum(
            Fraction(xi) * self.gram[i][j] * Fraction(yj)
            for i, xi in enumerate(x)
            for j, yj in enumerate(y)
            if xi and yj
        )


class LatticeForm(QuadraticForm):
    """The quadratic form Q(a) = e(<a_hat, a_hat>/2) on L*/L."""

    def __init__(self, data: LatticeDiscData):
        self.data = data
        self.group = data.group

    @property
    def label(self) -> str:
        return f"lattice rank {self.data.lattice.rank}"

    def Q_exponent(self, a: Element) -> Fraction:
        ah = self.data.coset_rep(a)
        return (self.data.lattice.inner(ah, ah) * _HALF) % 1


class LatticeDiscData:
    """Discriminant group of a lattice with its coset-representative data."""

    def __init__(self, lattice: Lattice):
        self.lattice = lattice
        u, d, _v = smith_normal_form([list(row) for row in lattice.gram])
        n = lattice.rank
        diag = [d[i][i] for i in range(n)]
        if any(x == 0 for x in diag):
            raise ValueError("gram matrix is singular")
        self._diag = diag
        self._keep = [i for i in range(n) if diag[i] > 1]
        self.group = FinAbGroup(tuple(diag[i] for i in self._keep))
        self._u_inv = _invert_unimodular(u)
        gram_inv = _invert_unimodular_rational(lattice.gram)
        self._gram_inv = gram_inv
        self._rep_cache: dict[Element, tuple[Fraction, ...]] = {}

    def coset_rep(self, a: Element) -> tuple[Fraction, ...]:
        """The representative a_hat in L*, in lattice-basis coordinates."""
        cached = self._rep_cache.get(a)
        if cached is not None:
            return cached
        n = self.lattice.rank
        full = [0] * n
        for i, res in zip(self._keep, a.residues):
            full[i] = res
        m = [sum(self._u_inv[i][j] * full[j] for j in range(n)) for i in range(n)]
        rep = tuple(
            sum(self._gram_inv[i][j] * m[j] for j in range(n)) for i in range(n)
        )
        self._rep_cache[a] = rep
        return rep

    def u_cocycle(self, a: Element, b: Element) -> tuple[int, ...]:
        """u(a, b) = a_hat + b_hat - (a+b)_hat, a vector in L."""
        ah, bh, sh = self.coset_rep(a), self.coset_rep(b), self.coset_rep(a + b)
        out = []
        for x, y, z in zip(ah, bh, sh):
            w = x + y - z
            if w.denominator != 1:
                raise ArithmeticError("coset representatives are inconsistent")
            out.append(int(w))
        return tuple(out)

    def pairing(self, abar, v) -> Cyclotomic:
        """p(a_bar, v) = e(<a_hat, v>/2) for v in L, well defined on G/2G."""
        a = abar.rep if isinstance(abar, CosetMod2) else abar
        return root_of_unity((self.lattice.inner(self.coset_rep(a), v) * _HALF) % 1)

    @cached_property
    def delta(self) -> Element:
        """The 2-torsion element pairing like v -> e(<v,v>/4) on L/2L."""
        g = self.group
        n = self.lattice.rank
        basis = [[int(i == j) for j in range(n)] for i in range(n)]
        targets = [
            (Fraction(self.lattice.gram[i][i], 4)) % 1 for i in range(n)
        ]
        matches = []
        for coset in g.cosets_mod2:
            rep = self.coset_rep(coset.rep)
            if all(
                (self.lattice.inner(rep, basis[i]) * _HALF) % 1 == targets[i]
                for i in range(n)
            ):
                matches.append(coset)
        if len(matches) != 1:
            raise ArithmeticError(
                f"delta coset is not unique ({len(matches)} candidates)"
            )
        torsion = [x for x in matches[0].members if not any((2 * x).residues)]
        if not torsion:
            raise ArithmeticError("delta coset contains no 2-torsion element")
        return min(torsion)


def _invert_unimodular_rational(m) -> list[list[Fraction]]:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            raise ValueError("gram matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def discriminant_group(lattice: Lattice) -> FinAbGroup:
    return LatticeDiscData(lattice).group


def build_cocycle_from_lattice(lattice: Lattice) -> CocycleData:
    """sigma, q and delta from lattice coset representatives."""
    data = LatticeDiscData(lattice)
    form = LatticeForm(data)
    g = data.group
    reps = {a: data.coset_rep(a) for a in g.elements}
    sigma_exp = {
        (a, b): (lattice.inner(reps[a], reps[b]) * _HALF) % 1
        for a in g.elements
        for b in g.elements
    }
    q_exp = {
        a: (lattice.inner(reps[a], reps[a]) * Fraction(1, 4)) % 1 for a in g.elements
    }
    return CocycleData(form, sigma_exp, q_exp, data.delta)


@dataclass
class MilgramCheck:
    name: str
    ok: bool
    detail: str


def verify_milgram(lattice: Lattice, data: CocycleData | None = None) -> list[MilgramCheck]:
    """Check the two Gauss-sum identities tying L to its discriminant form.

    The full Milgram sum must equal sqrt(|G|) e(sign(L)/8) and the
    partial Gauss sum of q^-1 over delta + 2G must equal e(-sign(L)/8).
    """
    from .scalars import sqrt_int

    if data is None:
        data = build_cocycle_from_lattice(lattice)
    sign = lattice.signature
    checks = []
    full = data.form.gauss_full()
    expected_full = sqrt_int(data.group.order) * root_of_unity(Fraction(sign, 8))
    checks.append(
        MilgramCheck(
            "milgram_full",
            full.eq(expected_full),
            f"sum Q(a) vs sqrt(|G|) e({sign}/8)",
        )
    )
    partial = data.gauss_partial_q()
    expected_partial = root_of_unity(Fraction(-sign, 8) % 1)
    checks.append(
        MilgramCheck(
            "milgram_partial",
            partial.eq(expected_partial),
            f"gauss_partial_q vs e(-{sign}/8)",
        )
    )
    return checks

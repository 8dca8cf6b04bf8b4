"""Exact arithmetic in cyclotomic fields.

A value is a finite sum  sum_r c_r * e(r)  with  e(r) = exp(2*pi*i*r),
stored as a sparse map from reduced exponents r in [0, 1) to nonzero
rational coefficients.  Equality is decided exactly by rewriting into
the tensor basis  prod_p { zeta_{p^v}^j : 0 <= j < phi(p^v) }  of the
ambient cyclotomic field, in which representations are unique and
independent of the ambient field.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd

_HALF = Fraction(1, 2)


def _prime_powers(n: int) -> list[tuple[int, int]]:
    """Factor n > 1 into [(p, p**v), ...] by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            pp = 1
            while n % d == 0:
                n //= d
                pp *= d
            out.append((d, pp))
        d += 1
    if n > 1:
        out.append((n, n))
    return out


def _canonical_terms(terms: dict[Fraction, Fraction]) -> dict[Fraction, Fraction]:
    """Rewrite a sparse sum of roots into the canonical tensor basis."""
    if not terms:
        return {}
    N = 1
    for r in terms:
        N = N * r.denominator // gcd(N, r.denominator)
    if N == 1:
        c = sum(terms.values())
        return {Fraction(0): c} if c else {}
    comps = []
    for p, P in _prime_powers(N):
        phi = P - P // p
        y = pow(N // P, -1, P)
        comps.append((p, P, phi, y))
    out: dict[Fraction, Fraction] = {}
    for r, coeff in terms.items():
        k = r.numerator * (N // r.denominator) % N
        partial = [(Fraction(0), coeff)]
        for p, P, phi, y in comps:
            j = k * y % P
            if j < phi:
                choices = ((j, 1),)
            else:
                step = P // p
                m = j - phi
                choices = tuple((m + i * step, -1) for i in range(p - 1))
            partial = [
                (acc + Fraction(jj, P), c if s > 0 else -c)
                for acc, c in partial
                for jj, s in choices
            ]
        for acc, c in partial:
            acc %= 1
            nc = out.get(acc, 0) + c
            if nc:
                out[acc] = nc
            else:
                out.pop(acc, None)
    return out


class Cyclotomic:
    """An element of the union of all cyclotomic fields."""

    __slots__ = ("_terms", "_canon")

    def __init__(self, terms: dict | None = None, _normalized: bool = False):
        if _normalized:
            self._terms = terms if terms is not None else {}
        else:
            acc: dict[Fraction, Fraction] = {}
            for r, c in (terms or {}).items():
                r = Fraction(r) % 1
                c = Fraction(c)
                acc[r] = acc.get(r, Fraction(0)) + c
            self._terms = {r: c for r, c in acc.items() if c}
        self._canon: dict | None = None

    @property
    def terms(self) -> dict[Fraction, Fraction]:
        return dict(self._terms)

    def canonical(self) -> dict[Fraction, Fraction]:
        if self._canon is None:
            self._canon = _canonical_terms(self._terms)
        return self._canon

    def is_zero(self) -> bool:
        if not self._terms:
            return True
        if len(self._terms) == 1:
            return False
        return not self.canonical()

    def eq(self, other: Cyclotomic) -> bool:
        if self._terms == other._terms:
            return True
        return (self - other).is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic({Fraction(0): Fraction(other)})
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.eq(other)

    __hash__ = None

    def __add__(self, other) -> Cyclotomic:
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic({Fraction(0): Fraction(other)})
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        out = dict(self._terms)
        for r, c in other._terms.items():
            nc = out.get(r, 0) + c
            if nc:
                out[r] = nc
            else:
                out.pop(r, None)
        return Cyclotomic(out, _normalized=True)

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic({r: -c for r, c in self._terms.items()}, _normalized=True)

    def __sub__(self, other) -> Cyclotomic:
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic({Fraction(0): Fraction(other)})
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Cyclotomic:
        return (-self) + other

    def __mul__(self, other) -> Cyclotomic:
        if isinstance(other, (int, Fraction)):
            if not other:
                return Cyclotomic({}, _normalized=True)
            other = Fraction(other)
            return Cyclotomic(
                {r: c * other for r, c in self._terms.items()}, _normalized=True
            )
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) == 1 and len(b) == 1:
            ((r1, c1),) = a.items()
            ((r2, c2),) = b.items()
            return Cyclotomic({(r1 + r2) % 1: c1 * c2}, _normalized=True)
        out: dict[Fraction, Fraction] = {}
        for r1, c1 in a.items():
            for r2, c2 in b.items():
                r = (r1 + r2) % 1
                nc = out.get(r, 0) + c1 * c2
                if nc:
                    out[r] = nc
                else:
                    out.pop(r, None)
        return Cyclotomic(out, _normalized=True)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Cyclotomic:
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self * other.inv()

    def __pow__(self, k: int) -> Cyclotomic:
        if k < 0:
            return self.inv() ** (-k)
        if len(self._terms) == 1:
            ((r, c),) = self._terms.items()
            return Cyclotomic({(r * k) % 1: c**k}, _normalized=True)
        result = Cyclotomic({Fraction(0): Fraction(1)}, _normalized=True)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inv(self) -> Cyclotomic:
        can = self.canonical()
        if not can:
            raise ZeroDivisionError("inverse of zero cyclotomic")
        if len(can) == 1:
            ((r, c),) = can.items()
            return Cyclotomic({(-r) % 1: 1 / c}, _normalized=True)
        N = 1
        for r in can:
            N = N * r.denominator // gcd(N, r.denominator)
        x = Cyclotomic(can, _normalized=True)
        y = Cyclotomic({Fraction(0): Fraction(1)}, _normalized=True)
        for j in range(2, N):
            if gcd(j, N) == 1:
                conj_j = Cyclotomic(
                    {(r * j) % 1: c for r, c in can.items()}, _normalized=True
                )
                y = y * conj_j
        norm = (x * y).canonical()
        if len(norm) != 1 or Fraction(0) not in norm:
            raise ArithmeticError("norm of cyclotomic is not rational")
        return y * (1 / norm[Fraction(0)])

    def conj(self) -> Cyclotomic:
        return Cyclotomic({(-r) % 1: c for r, c in self._terms.items()}, _normalized=True)

    def approx(self) -> complex:
        return sum(
            (complex(c) * cmath.exp(2j * cmath.pi * float(r)) for r, c in self._terms.items()),
            complex(0),
        )

    def as_root(self) -> Fraction | None:
        """Exponent r with self == e(r), or None if not a root of unity."""
        for t in (self._terms, self.canonical()):
            if len(t) == 1:
                ((r, c),) = t.items()
                if c == 1:
                    return r
                if c == -1:
                    return (r + _HALF) % 1
                return None
        can = self.canonical()
        if not can:
            return None
        M = 1
        for r in can:
            M = M * r.denominator // gcd(M, r.denominator)
        for M2 in (M, 2 * M):
            for j in range(M2):
                r = Fraction(j, M2)
                if _canonical_terms({r: Fraction(1)}) == can:
                    return r
        return None

    def is_rational(self) -> Fraction | None:
        can = self.canonical()
        if not can:
            return Fraction(0)
        if len(can) == 1 and Fraction(0) in can:
            return can[Fraction(0)]
        return None

    def to_terms(self) -> list[list[int]]:
        """Canonical terms as sorted [exp_num, exp_den, coeff_num, coeff_den]."""
        return [
            [r.numerator, r.denominator, c.numerator, c.denominator]
            for r, c in sorted(self.canonical().items())
        ]

    @staticmethod
    def from_terms(quads) -> Cyclotomic:
        return Cyclotomic(
            {Fraction(en, ed): Fraction(cn, cd) for en, ed, cn, cd in quads}
        )

    def __repr__(self) -> str:
        if not self._terms:
            return "Cyc(0)"
        parts = []
        for r, c in sorted(self._terms.items()):
            if r == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"e({r})")
            else:
                parts.append(f"{c}*e({r})")
        return "Cyc(" + " + ".join(parts) + ")"


ZERO = Cyclotomic({}, _normalized=True)
ONE = Cyclotomic({Fraction(0): Fraction(1)}, _normalized=True)
MINUS_ONE = Cyclotomic({Fraction(0): Fraction(-1)}, _normalized=True)


def root_of_unity(r) -> Cyclotomic:
    """e(r) = exp(2*pi*i*r) for rational r."""
    return Cyclotomic({Fraction(r) % 1: Fraction(1)}, _normalized=True)


def integer(n) -> Cyclotomic:
    n = Fraction(n)
    if not n:
        return ZERO
    return Cyclotomic({Fraction(0): n}, _normalized=True)


@lru_cache(maxsize=None)
def _sqrt_prime(p: int) -> Cyclotomic:
    """Exact square root of a prime via quadratic Gauss sums."""
    if p == 2:
        return Cyclotomic({Fraction(1, 8): Fraction(1), Fraction(7, 8): Fraction(1)})
    g: dict[Fraction, Fraction] = {}
    for x in range(p):
        r = Fraction(x * x, p) % 1
        g[r] = g.get(r, Fraction(0)) + 1
    gauss = Cyclotomic(g)
    if p % 4 == 1:
        return gauss
    return root_of_unity(Fraction(3, 4)) * gauss


@lru_cache(maxsize=None)
def sqrt_int(n: int) -> Cyclotomic:
    """Exact square root of a nonnegative integer."""
    if n < 0:
        raise ValueError("sqrt_int needs a nonnegative integer")
    if n == 0:
        return ZERO
    rational = 1
    result = ONE
    for p, P in _prime_powers(n):
        e = 0
        while P > 1:
            P //= p
            e += 1
        rational *= p ** (e // 2)
        if e % 2:
            result = result * _sqrt_prime(p)
    return result * rational


def sqrt_of_root(x: Cyclotomic, branch: str = "principal") -> Cyclotomic:
    """Square root of a root of unity e(r), r in [0, 1).

    The principal branch is e(r/2); the negative branch is -e(r/2).
    """
    r = x.as_root()
    if r is None:
        raise ValueError("sqrt_of_root needs a root of unity")
    if branch == "principal":
        return root_of_unity(r / 2)
    if branch == "negative":
        return root_of_unity(r / 2 + _HALF)
    raise ValueError(f"unknown branch {branch!r}")


def add(x: Cyclotomic, y: Cyclotomic) -> Cyclotomic:
    return x + y


def sub(x: Cyclotomic, y: Cyclotomic) -> Cyclotomic:
    return x - y


def mul(x: Cyclotomic, y: Cyclotomic) -> Cyclotomic:
    return x * y


def inv(x: Cyclotomic) -> Cyclotomic:
    return x.inv()


def conj(x: Cyclotomic) -> Cyclotomic:
    return x.conj()


def is_zero(x: Cyclotomic) -> bool:
    return x.is_zero()


def eq(x: Cyclotomic, y: Cyclotomic) -> bool:
    return x.eq(y)


def approx(x: Cyclotomic) -> complex:
    return x.approx()

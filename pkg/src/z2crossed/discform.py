"""Finite quadratic forms (discriminant forms) given by Jordan components.

A discriminant form is an orthogonal sum of indecomposable pieces:

* odd prime power ``p^k`` with unit ``u``: the group Z_{p^k} with
  quadratic form ``Q(x) = e(u x^2 / p^k)`` and sign ``(2u/p)``,
* 2-adic cyclic ``(2^k)_t`` with odd ``t``: Z_{2^k} with
  ``Q(x) = e(t x^2 / 2^(k+1))`` and sign ``(t/2)``,
* 2-adic even ``(2^k)_II^(+-2)``: Z_{2^k} x Z_{2^k} with
  ``Q(x) = e(x1 x2 / 2^k)`` resp. ``e((x1^2 + x1 x2 + x2^2) / 2^k)``.

Values of Q live in the unit circle as exact roots of unity; the sign
convention follows the genus-symbol tradition, so the Milgram formula
``sum_a Q(a) = sqrt(|G|) e(signature/8)`` holds componentwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import prod

from .abgroup import Element, FinAbGroup
from .scalars import Cyclotomic, root_of_unity, sqrt_int


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n) for positive odd n, or n = 2.

    (a/2) is 0 for even a and (-1)^((a^2-1)/8) otherwise.
    """
    if n == 2:
        return 0 if a % 2 == 0 else (-1) ** (((a * a - 1) // 8) % 2)
    if n <= 0 or n % 2 == 0:
        raise ValueError("kronecker symbol implemented for positive odd n or n = 2")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _prime_power_split(m: int) -> tuple[int, int] | None:
    """(p, k) with m = p**k, or None."""
    if m < 2:
        return None
    p = 2
    while p * p <= m:
        if m % p == 0:
            k = 0
            mm = m
            while mm % p == 0:
                mm //= p
                k += 1
            return (p, k) if mm == 1 else None
        p += 1
    return (m, 1)


def _smallest_unit(p: int, sign: int) -> int:
    for u in range(1, p):
        if kronecker(2 * u, p) == sign:
            return u
    raise ValueError(f"no unit mod {p} with sign {sign}")


@dataclass(frozen=True)
class JordanComponent:
    """One indecomposable Jordan block."""

    kind: str  # "odd" | "two_cyclic" | "two_even"
    q: int  # the modulus p^k
    u: int = 0  # odd: the unit; two_cyclic: t; two_even: unused
    even_sign: int = 0  # two_even only

    @classmethod
    def odd_prime_power(cls, q: int, sign: int, u: int | None = None) -> JordanComponent:
        pk = _prime_power_split(q)
        if pk is None or pk[0] == 2:
            raise ValueError(f"modulus {q} is not an odd prime power")
        p = pk[0]
        if u is None:
            u = _smallest_unit(p, sign)
        if u % p == 0 or kronecker(2 * u, p) != sign:
            raise ValueError(f"unit {u} does not realise sign {sign} mod {p}")
        return cls("odd", q, u=u)

    @classmethod
    def two_adic_cyclic(cls, q: int, t: int) -> JordanComponent:
        pk = _prime_power_split(q)
        if pk is None or pk[0] != 2:
            raise ValueError(f"modulus {q} is not a power of 2")
        if t not in (1, 3, 5, 7):
            raise ValueError(f"t must be an odd residue mod 8, got {t}")
        return cls("two_cyclic", q, u=t)

    @classmethod
    def two_adic_even(cls, q: int, sign: int) -> JordanComponent:
        pk = _prime_power_split(q)
        if pk is None or pk[0] != 2:
            raise ValueError(f"modulus {q} is not a power of 2")
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        return cls("two_even", q, even_sign=sign)

    @property
    def p(self) -> int:
        return _prime_power_split(self.q)[0]

    @property
    def k(self) -> int:
        return _prime_power_split(self.q)[1]

    @property
    def t(self) -> int:
        if self.kind != "two_cyclic":
            raise AttributeError("t is defined for 2-adic cyclic components only")
        return self.u

    @property
    def sign(self) -> int:
        if self.kind == "odd":
            return kronecker(2 * self.u, self.p)
        if self.kind == "two_cyclic":
            return kronecker(self.u, 2)
        return self.even_sign

    @property
    def rank(self) -> int:
        return 2 if self.kind == "two_even" else 1

    @property
    def orders(self) -> tuple[int, ...]:
        return (self.q, self.q) if self.kind == "two_even" else (self.q,)

    def q_exponent(self, xs: tuple[int, ...]) -> Fraction:
        """Exponent of Q on this component's residues."""
        if self.kind == "odd":
            return Fraction(self.u * xs[0] * xs[0], self.q)
        if self.kind == "two_cyclic":
            return Fraction(self.u * xs[0] * xs[0], 2 * self.q)
        x1, x2 = xs
        if self.even_sign > 0:
            return Fraction(x1 * x2, self.q)
        return Fraction(x1 * x1 + x1 * x2 + x2 * x2, self.q)

    @property
    def label(self) -> str:
        s = "+" if self.sign > 0 else "-"
        if self.kind == "odd":
            return f"{self.q}^{s}1"
        if self.kind == "two_cyclic":
            return f"{self.q}_{self.u}^{s}1"
        return f"{self.q}_II^{s}2"


class QuadraticForm:
    """A finite quadratic form: a group with a Q/Z-valued quadratic map.

    Subclasses provide ``group`` and ``Q_exponent``; the bilinear form,
    the Milgram sum and the signature are derived.
    """

    group: FinAbGroup

    def Q_exponent(self, a: Element) -> Fraction:
        raise NotImplementedError

    def Q_of(self, a: Element) -> Cyclotomic:
        """Quadratic form value Q(a) as a root of unity."""
        return root_of_unity(self.Q_exponent(a))

    def B_exponent(self, a: Element, b: Element) -> Fraction:
        return (self.Q_exponent(a + b) - self.Q_exponent(a) - self.Q_exponent(b)) % 1

    def B_of(self, a: Element, b: Element) -> Cyclotomic:
        """Associated bilinear form B(a, b) = Q(a+b)/Q(a)/Q(b)."""
        return root_of_unity(self.B_exponent(a, b))

    def gauss_full(self) -> Cyclotomic:
        """Milgram sum: sum of Q(a) over the whole group."""
        acc: dict[Fraction, Fraction] = {}
        for a in self.group.elements:
            r = self.Q_exponent(a)
            acc[r] = acc.get(r, Fraction(0)) + 1
        return Cyclotomic(acc)

    @cached_property
    def signature(self) -> int:
        """Signature mod 8 via the Milgram formula."""
        g = self.gauss_full()
        root_order = sqrt_int(self.group.order)
        for s in range(8):
            if g.eq(root_order * root_of_unity(Fraction(s, 8))):
                return s
        raise ArithmeticError("Milgram sum matches no eighth root: degenerate form")


class DiscriminantForm(QuadraticForm):
    """Orthogonal sum of Jordan components on the product group."""

    def __init__(self, components):
        self.components = tuple(components)
        orders: list[int] = []
        offsets: list[int] = []
        for c in self.components:
            offsets.append(len(orders))
            orders.extend(c.orders)
        self._offsets = tuple(offsets)
        self.group = FinAbGroup(orders)

    @property
    def label(self) -> str:
        if not self.components:
            return "(trivial)"
        return "+".join(c.label for c in self.components)

    def Q_exponent(self, a: Element) -> Fraction:
        x = a.residues
        total = Fraction(0)
        for c, off in zip(self.components, self._offsets):
            total += c.q_exponent(x[off : off + c.rank])
        return total % 1

    def sign_s_even(self) -> int:
        """Product of the signs of the 2-adic components.

        Undefined when a cyclic component of modulus 2 is present,
        because of the exceptional isomorphisms (e.g. 2_1^+1 ~ 2_5^-1)
        the sign of such a component is not an invariant.
        """
        s = 1
        for c in self.components:
            if c.kind == "two_cyclic" and c.q == 2:
                raise ValueError(
                    "sign of the even part is undefined with a modulus-2 cyclic "
                    "component (exceptional isomorphisms such as 2_1^+1 ~ 2_5^-1)"
                )
            if c.p == 2:
                s *= c.sign
        return s

    @property
    def odd_order(self) -> int:
        """Order of the odd part."""
        return prod((c.q for c in self.components if c.p != 2), start=1)

    @property
    def has_two_adic(self) -> bool:
        return any(c.p == 2 for c in self.components)

    def direct_sum(self, other: DiscriminantForm) -> DiscriminantForm:
        return DiscriminantForm(self.components + other.components)


class JordanParseError(ValueError):
    pass


def parse_jordan(text: str) -> DiscriminantForm:
    """Parse a Jordan symbol such as ``2_1^+1+3^-1`` or ``4_II^+2``.

    Whitespace is ignored.  Errors carry the 1-based column of the
    offending token.
    """
    i = 0
    n = len(text)

    def skip_ws():
        nonlocal i
        while i < n and text[i].isspace():
            i += 1

    def fail(msg: str, pos: int) -> None:
        raise JordanParseError(f"column {pos + 1}: {msg}")

    def read_digits(what: str) -> tuple[int, int]:
        nonlocal i
        start = i
        while i < n and text[i].isdigit():
            i += 1
        if i == start:
            fail(f"expected {what}", start)
        return int(text[start:i]), start

    components: list[JordanComponent] = []

    def expand(modulus: int, sub, sign: int, rank: int, pos: int) -> None:
        pk = _prime_power_split(modulus)
        if pk is None:
            fail(f"modulus {modulus} is not a prime power greater than 1", pos)
        p, _ = pk
        if rank == 0:
            fail("rank must be positive", pos)
        if p != 2:
            if sub is not None:
                fail("subscript is only valid for 2-adic components", pos)
            for j in range(rank):
                s = 1 if j < rank - 1 else sign
                components.append(JordanComponent.odd_prime_power(modulus, s))
            return
        if sub is None:
            fail("2-adic component needs a subscript (_t or _II)", pos)
        if sub == "II":
            if rank % 2:
                fail("rank of a II-type component must be even", pos)
            for j in range(rank // 2):
                s = 1 if j < rank // 2 - 1 else sign
                components.append(JordanComponent.two_adic_even(modulus, s))
            return
        t = sub
        if t not in (1, 3, 5, 7):
            fail(f"t must be an odd residue mod 8, got {t}", pos)
        if rank != 1:
            fail("a 2-adic cyclic component fixes one cyclic factor, rank must be 1", pos)
        if kronecker(t, 2) != sign:
            fail(f"sign must equal (t/2) = {kronecker(t, 2):+d} for t = {t}", pos)
        components.append(JordanComponent.two_adic_cyclic(modulus, t))

    skip_ws()
    if i == n:
        raise JordanParseError("column 1: empty symbol")
    while True:
        skip_ws()
        modulus, pos = read_digits("a modulus")
        skip_ws()
        sub = None
        if i < n and text[i] == "_":
            i += 1
            skip_ws()
            if text[i : i + 2] == "II":
                sub = "II"
                i += 2
            else:
                sub, _ = read_digits("a subscript (t or II)")
        skip_ws()
        if i >= n or text[i] != "^":
            fail("expected '^'", i)
        i += 1
        skip_ws()
        if i >= n or text[i] not in "+-":
            fail("expected '+' or '-'", i)
        sign = 1 if text[i] == "+" else -1
        i += 1
        skip_ws()
        rank, _ = read_digits("a rank")
        expand(modulus, sub, sign, rank, pos)
        skip_ws()
        if i == n:
            break
        if text[i] != "+":
            fail(f"expected '+' between components, got {text[i]!r}", i)
        i += 1
    return DiscriminantForm(components)

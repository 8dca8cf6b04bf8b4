"""Compact exact rendering of cyclotomic scalars for table output.

A value is printed as the shortest matching shape: a rational, a root
e(k/n), a rational multiple m*e(k/n), a surd m*sqrt(n)*e(k/n), and
otherwise the raw term list.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import Cyclotomic, sqrt_int


def _fmt_fraction(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _fmt_product(coeff: Fraction, radical: int, root: Fraction) -> str:
    parts = []
    if radical != 1:
        parts.append(f"sqrt({radical})")
    if root != 0:
        parts.append(f"e({_fmt_fraction(root)})")
    if not parts:
        return _fmt_fraction(coeff)
    body = "*".join(parts)
    if coeff == 1:
        return body
    if coeff == -1:
        return "-" + body
    return f"{_fmt_fraction(coeff)}*{body}"


def _squarefree_split(n: int) -> tuple[int, int]:
    """n = m^2 * k with k squarefree; returns (m, k)."""
    m, k, d = 1, 1, 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        m *= d ** (e // 2)
        if e % 2:
            k *= d
        d += 1
    return m, k * n


def render_scalar(value: Cyclotomic) -> str:
    q = value.is_rational()
    if q is not None:
        return _fmt_fraction(q)
    r = value.as_root()
    if r is not None:
        return _fmt_product(Fraction(1), 1, r)
    # m*sqrt(n)*e(r) has squared modulus m^2 n; peel that off and see
    # whether a single root remains.
    norm2 = (value * value.conj()).is_rational()
    if norm2 is not None and norm2 > 0:
        m1, k1 = _squarefree_split(norm2.numerator)
        m2, k2 = _squarefree_split(norm2.denominator)
        coeff = Fraction(m1, m2 * k2)
        radical = k1 * k2
        rest = value * (1 / coeff)
        if radical != 1:
            rest = rest * sqrt_int(radical).inv()
        r = rest.as_root()
        if r is not None:
            if r == Fraction(1, 2):
                return _fmt_product(-coeff, radical, Fraction(0))
            return _fmt_product(coeff, radical, r)
    parts = []
    for en, ed, cn, cd in value.to_terms():
        parts.append(_fmt_product(Fraction(cn, cd), 1, Fraction(en, ed)))
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def render_approx(value: Cyclotomic) -> str:
    z = value.approx()
    re = 0.0 if abs(z.real) < 1e-9 else z.real
    im = 0.0 if abs(z.imag) < 1e-9 else z.imag
    if im == 0.0:
        return f"{re:.6g}"
    return f"{re:.6g}{im:+.6g}i"

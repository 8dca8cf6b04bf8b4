"""Finite abelian groups presented as products of cyclic groups.

Elements are residue tuples with respect to the fixed list of moduli.
The 2-divisible subgroup 2G, the 2-torsion subgroup, the cosets of
G/2G and the {a, -a} pair orbits drive the category construction, so
they are exposed directly with a deterministic (lexicographic) order.
"""

from __future__ import annotations

from functools import cached_property
from itertools import product
from math import prod


class Element:
    __slots__ = ("group", "residues")

    def __init__(self, group: FinAbGroup, residues):
        object.__setattr__(self, "group", group)
        object.__setattr__(
            self,
            "residues",
            tuple(r % n for r, n in zip(residues, group.orders, strict=True)),
        )

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    def __add__(self, other: Element) -> Element:
        return Element(
            self.group, tuple(x + y for x, y in zip(self.residues, other.residues))
        )

    def __neg__(self) -> Element:
        return Element(self.group, tuple(-x for x in self.residues))

    def __sub__(self, other: Element) -> Element:
        return self + (-other)

    def __mul__(self, n: int) -> Element:
        return Element(self.group, tuple(n * x for x in self.residues))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Element)
            and self.residues == other.residues
            and self.group.orders == other.group.orders
        )

    def __lt__(self, other: Element) -> bool:
        return self.residues < other.residues

    def __le__(self, other: Element) -> bool:
        return self.residues <= other.residues

    def __hash__(self) -> int:
        return hash(self.residues)

    def __repr__(self) -> str:
        return "(" + ",".join(str(r) for r in self.residues) + ")"


class CosetMod2:
    """A coset of 2G in G, represented by its lex-least member."""

    __slots__ = ("rep", "members")

    def __init__(self, rep: Element, members: tuple[Element, ...]):
        object.__setattr__(self, "rep", rep)
        object.__setattr__(self, "members", members)

    def __setattr__(self, name, value):
        raise AttributeError("CosetMod2 is immutable")

    def __add__(self, other) -> CosetMod2:
        if isinstance(other, CosetMod2):
            other = other.rep
        return self.rep.group.coset_of(self.rep + other)

    __radd__ = __add__

    def __neg__(self) -> CosetMod2:
        return self.rep.group.coset_of(-self.rep)

    def __eq__(self, other) -> bool:
        return isinstance(other, CosetMod2) and self.rep == other.rep

    def __lt__(self, other: CosetMod2) -> bool:
        return self.rep < other.rep

    def __hash__(self) -> int:
        return hash(("coset", self.rep.residues))

    def __repr__(self) -> str:
        return f"{self.rep!r}+2G"


class FinAbGroup:
    """Product of cyclic groups Z_{n1} x ... x Z_{nk}, all n > 1."""

    def __init__(self, orders):
        orders = tuple(int(n) for n in orders)
        if any(n < 2 for n in orders):
            raise ValueError("cyclic factors must have order at least 2")
        self.orders = orders

    @cached_property
    def order(self) -> int:
        return prod(self.orders)

    def zero(self) -> Element:
        return Element(self, (0,) * len(self.orders))

    def element(self, residues) -> Element:
        residues = tuple(residues)
        if len(residues) != len(self.orders):
            raise ValueError(
                f"expected {len(self.orders)} residues, got {len(residues)}"
            )
        return Element(self, residues)

    def add(self, a: Element, b: Element) -> Element:
        return a + b

    def neg(self, a: Element) -> Element:
        return -a

    @cached_property
    def elements(self) -> tuple[Element, ...]:
        return tuple(
            Element(self, res) for res in product(*(range(n) for n in self.orders))
        )

    @cached_property
    def two_gamma(self) -> tuple[Element, ...]:
        """The subgroup 2G = {2a : a in G}, lexicographically sorted."""
        return tuple(sorted({2 * a for a in self.elements}))

    @cached_property
    def torsion2(self) -> tuple[Element, ...]:
        """The 2-torsion subgroup {a : 2a = 0}, lexicographically sorted."""
        return tuple(a for a in self.elements if not any((2 * a).residues))

    @cached_property
    def cosets_mod2(self) -> tuple[CosetMod2, ...]:
        cosets = []
        seen = set()
        for a in self.elements:
            if a in seen:
                continue
            members = tuple(sorted(a + t for t in self.two_gamma))
            seen.update(members)
            cosets.append(CosetMod2(members[0], members))
        return tuple(cosets)

    @cached_property
    def _coset_index(self) -> dict[Element, CosetMod2]:
        return {a: c for c in self.cosets_mod2 for a in c.members}

    def coset_of(self, a: Element) -> CosetMod2:
        return self._coset_index[a]

    @cached_property
    def pair_orbits(self) -> tuple[Element, ...]:
        """Lex-least representatives of the pairs {a, -a} with 2a != 0."""
        return tuple(a for a in self.elements if any((2 * a).residues) and a < -a)

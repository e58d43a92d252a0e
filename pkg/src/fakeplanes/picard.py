"""Picard group of a fake projective plane: ``Z * L1`` plus a finite torsion part.

A line-bundle class is a pair ``(degree, torsion)`` where ``degree`` is the
coefficient of the ample generator and ``torsion`` lives in ``H_1(X; Z)``.
All values here are immutable.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import reduce


class StructuralError(ValueError):
    """Raised when classes from different torsion groups are combined."""


@dataclass(frozen=True, order=True)
class TorsionGroup:
    """Finite abelian group given as a product of cyclic factors."""

    cyclic_orders: tuple[int, ...] = ()

    def __post_init__(self):
        orders = tuple(int(n) for n in self.cyclic_orders)
        if any(n < 2 for n in orders):
            raise ValueError(f"cyclic orders must be >= 2, got {orders}")
        object.__setattr__(self, "cyclic_orders", orders)

    @property
    def rank(self) -> int:
        return len(self.cyclic_orders)

    @property
    def size(self) -> int:
        return math.prod(self.cyclic_orders)

    @property
    def exponent(self) -> int:
        return reduce(math.lcm, self.cyclic_orders, 1)

    def zero(self) -> TorsionElement:
        return TorsionElement((0,) * self.rank, self)

    def element(self, coords) -> TorsionElement:
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.rank:
            raise StructuralError(
                f"expected {self.rank} torsion coordinates, got {len(coords)}"
            )
        return TorsionElement(coords, self)

    def elements(self) -> list[TorsionElement]:
        """All elements in lexicographic order; the identity comes first."""
        return [
            TorsionElement(c, self)
            for c in itertools.product(*(range(n) for n in self.cyclic_orders))
        ]

    def is_elementary_two(self) -> bool:
        return all(n == 2 for n in self.cyclic_orders)

    def __str__(self) -> str:
        if not self.cyclic_orders:
            return "0"
        parts = []
        for n, grp in itertools.groupby(self.cyclic_orders):
            r = len(list(grp))
            parts.append(f"(Z/{n})^{r}" if r > 1 else f"Z/{n}")
        return " x ".join(parts)


@dataclass(frozen=True, order=True)
class TorsionElement:
    coords: tuple[int, ...]
    group: TorsionGroup = field(repr=False)

    def __post_init__(self):
        orders = self.group.cyclic_orders
        if len(self.coords) != len(orders):
            raise StructuralError("coordinate count does not match the group rank")
        object.__setattr__(
            self, "coords", tuple(int(c) % n for c, n in zip(self.coords, orders))
        )

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def _check(self, other: TorsionElement) -> None:
        if self.group != other.group:
            raise StructuralError(
                f"torsion groups differ: {self.group} vs {other.group}"
            )

    def __add__(self, other: TorsionElement) -> TorsionElement:
        self._check(other)
        return TorsionElement(
            tuple(a + b for a, b in zip(self.coords, other.coords)), self.group
        )

    def __neg__(self) -> TorsionElement:
        return TorsionElement(tuple(-a for a in self.coords), self.group)

    def __sub__(self, other: TorsionElement) -> TorsionElement:
        return self + (-other)

    def times(self, n: int) -> TorsionElement:
        return TorsionElement(tuple(n * a for a in self.coords), self.group)

    def order(self) -> int:
        return reduce(
            math.lcm,
            (n // math.gcd(n, a) for a, n in zip(self.coords, self.group.cyclic_orders)),
            1,
        )

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.coords)) + ")"


@dataclass(frozen=True, order=True)
class LineBundleClass:
    """``degree * L1 + torsion``; equality is linear equivalence."""

    degree: int
    torsion: TorsionElement

    @property
    def group(self) -> TorsionGroup:
        return self.torsion.group

    def __add__(self, other: LineBundleClass) -> LineBundleClass:
        return add(self, other)

    def __sub__(self, other: LineBundleClass) -> LineBundleClass:
        return add(self, scale(-1, other))

    def __neg__(self) -> LineBundleClass:
        return scale(-1, self)

    def __str__(self) -> str:
        return f"({self.degree};{','.join(map(str, self.torsion.coords))})"

    def to_json(self) -> dict:
        return {"degree": self.degree, "torsion": list(self.torsion.coords)}


def line_bundle(group: TorsionGroup, degree: int, coords=None) -> LineBundleClass:
    torsion = group.zero() if coords is None else group.element(coords)
    return LineBundleClass(int(degree), torsion)


def add(L: LineBundleClass, M: LineBundleClass) -> LineBundleClass:
    return LineBundleClass(L.degree + M.degree, L.torsion + M.torsion)


def scale(n: int, L: LineBundleClass) -> LineBundleClass:
    return LineBundleClass(n * L.degree, L.torsion.times(n))


def numerically_equivalent(L: LineBundleClass, M: LineBundleClass) -> bool:
    return L.degree == M.degree


def intersection(L: LineBundleClass, M: LineBundleClass) -> int:
    """Intersection number on the rank-one lattice where ``L1 . L1 = 1``."""
    return L.degree * M.degree


AUT_LABELS = ("G21", "other", "trivial")


@dataclass(frozen=True)
class FakePlane:
    """A fake projective plane described by its numerical data.

    ``canonical`` is fixed by convention: for planes with ``Aut = G21`` the
    basis is chosen so that the equivariant cubic root of ``K`` is ``(1, 0)``,
    which forces ``K = (3, 0)``. Other planes carry ``K``'s torsion part in
    their configuration.
    """

    id: str
    torsion: TorsionGroup
    aut_label: str = "other"
    canonical: LineBundleClass | None = None
    K2: int = 9
    c2: int = 3
    pg: int = 0
    q: int = 0

    def __post_init__(self):
        if self.aut_label not in AUT_LABELS:
            raise ValueError(f"aut label must be one of {AUT_LABELS}")
        if (self.K2, self.c2, self.pg, self.q) != (9, 3, 0, 0):
            raise ValueError("a fake projective plane has K^2=9, c2=3, pg=q=0")
        K = self.canonical
        if K is None:
            K = LineBundleClass(3, self.torsion.zero())
            object.__setattr__(self, "canonical", K)
        if K.group != self.torsion:
            raise StructuralError("canonical class lives in a different torsion group")
        if K.degree != 3:
            raise ValueError("the canonical class is numerically 3 L1")
        if self.aut_label == "G21":
            if not (self.torsion.is_elementary_two() and self.torsion.rank in (3, 4, 6)):
                raise StructuralError("a G21 plane has H1 = (Z/2)^3, (Z/2)^4 or (Z/2)^6")
            if not K.torsion.is_zero:
                raise StructuralError("on a G21 plane K = 3 O(1) in the distinguished basis")

    @property
    def is_g21(self) -> bool:
        return self.aut_label == "G21"

    def cls(self, degree: int, coords=None) -> LineBundleClass:
        return line_bundle(self.torsion, degree, coords)

    @property
    def structure_sheaf(self) -> LineBundleClass:
        return self.cls(0)

    def summary(self) -> dict:
        return {
            "id": self.id,
            "h1": str(self.torsion),
            "h1_orders": list(self.torsion.cyclic_orders),
            "torsion_size": self.torsion.size,
            "aut": self.aut_label,
            "K2": self.K2,
            "c2": self.c2,
            "pg": self.pg,
            "q": self.q,
            "canonical": self.canonical.to_json(),
        }


def enumerate_torsion(plane: FakePlane) -> list[TorsionElement]:
    return plane.torsion.elements()


def numerical_cubic_roots(plane: FakePlane) -> list[LineBundleClass]:
    """Every class with ``3L = K`` numerically, i.e. every degree-one class."""
    return [LineBundleClass(1, t) for t in enumerate_torsion(plane)]


def keum_plane(rank: int) -> FakePlane:
    return FakePlane(f"b{rank}", TorsionGroup((2,) * rank), "G21")


GENERIC_TORSION = (2, 4)


def generic_plane(orders=GENERIC_TORSION, canonical_torsion=None, plane_id="generic",
                  aut_label="other") -> FakePlane:
    group = TorsionGroup(tuple(orders))
    K = line_bundle(group, 3, canonical_torsion)
    return FakePlane(plane_id, group, aut_label, K)


REGISTRY: dict[str, FakePlane] = {
    "b3": keum_plane(3),
    "b4": keum_plane(4),
    "b6": keum_plane(6),
    "generic": generic_plane(),
}


class UnknownPlane(KeyError):
    pass


def get_plane(plane_id: str) -> FakePlane:
    try:
        return REGISTRY[plane_id]
    except KeyError:
        raise UnknownPlane(plane_id) from None

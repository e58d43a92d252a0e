"""Finite-order linear actions on torsion groups, orbits and fixed vectors."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .picard import FakePlane, LineBundleClass, TorsionElement, TorsionGroup

ORBIT_BOUND = 2 ** 16

# companion matrix of x^3 + x + 1 over F_2; its multiplicative order is 7
SINGER_BLOCK = np.array([[0, 0, 1],
                         [1, 0, 1],
                         [0, 1, 0]], dtype=np.int64)


class UnsupportedAction(ValueError):
    pass


def _all_coords(group: TorsionGroup) -> np.ndarray:
    if group.rank == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.meshgrid(*(np.arange(n) for n in group.cyclic_orders), indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1).astype(np.int64)


def _encode(coords: np.ndarray, group: TorsionGroup) -> np.ndarray:
    """Mixed-radix index, matching the lexicographic element order."""
    idx = np.zeros(coords.shape[0], dtype=np.int64)
    for j, n in enumerate(group.cyclic_orders):
        idx = idx * n + coords[:, j]
    return idx


@dataclass(frozen=True, eq=False)
class LinearAction:
    """``v -> matrix @ v`` reduced modulo the factor orders."""

    group: TorsionGroup
    matrix: np.ndarray
    order: int

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=np.int64)
        if m.shape != (self.group.rank, self.group.rank):
            raise UnsupportedAction(f"matrix shape {m.shape} does not match rank {self.group.rank}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        perm = self.permutation()
        if len(np.unique(perm)) != len(perm):
            raise UnsupportedAction("matrix does not act bijectively on the group")
        if _perm_order(perm) != self.order:
            raise UnsupportedAction(f"action has order {_perm_order(perm)}, not {self.order}")

    def _mod(self) -> np.ndarray:
        return np.array(self.group.cyclic_orders, dtype=np.int64)

    def apply(self, t: TorsionElement) -> TorsionElement:
        v = self.matrix @ np.array(t.coords, dtype=np.int64)
        return TorsionElement(tuple(int(x) for x in v % self._mod()), t.group)

    def permutation(self) -> np.ndarray:
        """Image index of every element, in lexicographic element order."""
        if self.group.size > ORBIT_BOUND:
            raise UnsupportedAction(f"group of size {self.group.size} exceeds {ORBIT_BOUND}")
        pts = _all_coords(self.group)
        img = (pts @ self.matrix.T) % self._mod() if self.group.rank else pts
        return _encode(img, self.group)

    def power(self, k: int) -> np.ndarray:
        out = np.eye(self.group.rank, dtype=np.int64)
        for _ in range(k):
            out = (self.matrix @ out) % self._mod()[:, None]
        return out

    def fixed_elements(self) -> list[TorsionElement]:
        perm = self.permutation()
        elems = self.group.elements()
        return [elems[i] for i in np.flatnonzero(perm == np.arange(len(perm)))]

    def fixed_nontrivial(self) -> list[TorsionElement]:
        return [t for t in self.fixed_elements() if not t.is_zero]


def _perm_order(perm: np.ndarray) -> int:
    ident = np.arange(len(perm))
    cur = perm.copy()
    k = 1
    while not np.array_equal(cur, ident):
        cur = perm[cur]
        k += 1
    return k


def identity_action(group: TorsionGroup) -> LinearAction:
    return LinearAction(group, np.eye(group.rank, dtype=np.int64), 1)


def make_order7_action(rank: int) -> LinearAction:
    """Representative order-7 action on ``(Z/2)^rank`` built from Singer blocks.

    rank 3: one block, free on nonzero vectors; rank 4: block plus a fixed line;
    rank 6: two blocks, again free on nonzero vectors.
    """
    if rank not in (3, 4, 6):
        raise UnsupportedAction(f"no representative order-7 action for rank {rank}")
    m = np.zeros((rank, rank), dtype=np.int64)
    m[:3, :3] = SINGER_BLOCK
    if rank == 4:
        m[3, 3] = 1
    elif rank == 6:
        m[3:, 3:] = SINGER_BLOCK
    return LinearAction(TorsionGroup((2,) * rank), m, 7)


@dataclass(frozen=True)
class OrbitDecomposition:
    orbits: tuple[tuple[TorsionElement, ...], ...]

    @property
    def sizes(self) -> list[int]:
        return sorted(len(o) for o in self.orbits)


def orbits(action: LinearAction, bound: int = ORBIT_BOUND) -> OrbitDecomposition:
    if action.group.size > bound:
        raise UnsupportedAction(f"group of size {action.group.size} exceeds bound {bound}")
    perm = action.permutation()
    elems = action.group.elements()
    seen = np.zeros(len(perm), dtype=bool)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        orbit = []
        i = start
        while not seen[i]:
            seen[i] = True
            orbit.append(elems[i])
            i = perm[i]
        out.append(tuple(orbit))
    return OrbitDecomposition(tuple(out))


def guaranteed_fixed_nontrivial(rank: int, order: int = 7) -> bool:
    """Whether every order-``order`` action on ``(Z/2)^rank`` fixes a nonzero vector.

    Nonzero vectors split into fixed points and free orbits of size ``order``
    (prime), so a fixed one is forced exactly when ``2^rank - 1`` is not a
    multiple of the order.
    """
    return (2 ** rank - 1) % order != 0


def equivariant_classes(plane: FakePlane, action: LinearAction, degree: int) -> list[LineBundleClass]:
    """Classes ``(degree, T)`` with ``T`` fixed by the action.

    On a G21 plane the degree part ``degree * O(1)`` is invariant by the basis
    convention, so equivariance reduces to the torsion part.
    """
    if not plane.is_g21:
        raise UnsupportedAction(f"plane {plane.id} is not a G21 plane")
    if action.group != plane.torsion:
        raise UnsupportedAction("action and plane have different torsion groups")
    return [LineBundleClass(degree, t) for t in action.fixed_elements()]


def parse_action(spec: str, group: TorsionGroup) -> LinearAction:
    """``"trivial"`` or ``"rank<k>"``."""
    if spec == "trivial":
        return identity_action(group)
    if spec.startswith("rank"):
        act = make_order7_action(int(spec[4:]))
        if act.group != group:
            raise UnsupportedAction(f"{spec} does not act on {group}")
        return act
    raise UnsupportedAction(f"unknown action {spec!r}")

"""Registry of tagged external facts the replay scripts may consume."""

from __future__ import annotations

from dataclasses import dataclass

from .cohomology import h_exact
from .derivation import Axiom
from .picard import FakePlane, TorsionElement


@dataclass(frozen=True)
class AxiomSpec:
    id: str
    statement: str
    citation: str
    optional: bool = False


REGISTRY: dict[str, AxiomSpec] = {a.id: a for a in (
    AxiomSpec("A1", "h0(2 O(1)) = 0 on a G21 plane",
              "Galkin-Katzarkov-Mellit-Shinder, Theorem 1.3"),
    AxiomSpec("A2", "a G21 plane carries a unique G21-equivariant O(1) with K = 3 O(1)",
              "Galkin-Katzarkov-Mellit-Shinder, Lemma 2.2"),
    AxiomSpec("A3", "the fixed locus of the Z/7 action on a G21 plane is zero-dimensional",
              "Keum, Proposition 2.4 and Theorem 1.1"),
    AxiomSpec("A4", "X/(Z/7) has exactly 3 singular points",
              "Keum, Theorem 1.1"),
    AxiomSpec("A5", "no fake projective plane contains an immersed totally geodesic curve",
              "Prasad-Yeung with Cartwright-Steger (second-type arithmetic quotients); "
              "Moller-Toledo, p. 901"),
    AxiomSpec("A-kra", ("excludes normalization genus 4 for the order-7 automorphism; only this exclusion "
              "is used, the cited statement is not reproduced"),
              "Farkas-Kra, Riemann Surfaces, Proposition V.2.14"),
    AxiomSpec("A-minifold", "the only 2-minifold is P^2",
              "Galkin-Katzarkov-Mellit-Shinder, minifold classification, Theorem 1.1"),
    AxiomSpec("A-hodge", "a fake projective plane has the Hodge numbers of P^2 (total dimension 3)",
              "Hodge theory of surfaces with p_g = q = 0 and c2 = 3"),
    AxiomSpec("A-van", "h0(2 O(1) + T) = 0 whenever 2 O(1) + T is Z/7-equivariant",
              "output of the prop-vanishing replay"),
    AxiomSpec("A-noL1", "no fake projective plane carries an effective L1",
              "open conjecture; only used when enabled explicitly", optional=True),
)}

DEFAULT_AXIOMS = tuple(a for a, spec in REGISTRY.items() if not spec.optional)


class UnknownAxiom(KeyError):
    pass


def spec(axiom_id: str) -> AxiomSpec:
    try:
        return REGISTRY[axiom_id]
    except KeyError:
        raise UnknownAxiom(axiom_id) from None


def plain(axiom_id: str) -> Axiom:
    s = spec(axiom_id)
    return Axiom(s.id, s.statement, s.citation)


def a1(plane: FakePlane) -> Axiom:
    if not plane.is_g21:
        raise ValueError("A1 only holds on G21 planes")
    return Axiom("A1", h_exact(plane.cls(2), 0, 0), REGISTRY["A1"].citation)


def a_van(plane: FakePlane, t: TorsionElement) -> Axiom:
    return Axiom("A-van", h_exact(plane.cls(2, t.coords), 0, 0), REGISTRY["A-van"].citation)


def no_effective_l1(plane: FakePlane) -> list[Axiom]:
    cit = REGISTRY["A-noL1"].citation
    return [Axiom("A-noL1", h_exact(plane.cls(1, t.coords), 0, 0), cit)
            for t in plane.torsion.elements()]

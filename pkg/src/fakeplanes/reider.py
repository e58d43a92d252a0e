"""Classification of the bicanonical map from cohomological facts.

Only two consequences of Reider's criterion for ``|K + L|`` with ``L = K``,
``L^2 = 9`` are used: base points need a curve with ``C^2`` in ``{0, -1}``, and a
failure to separate points needs a curve numerically ``L1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .cohomology import CohomologyTable, DimInterval, UNKNOWN
from .curves import arithmetic_genus, curve_chi, curve_serre_dual
from .derivation import Derivation
from .picard import FakePlane, LineBundleClass, numerical_cubic_roots

REIDER_CITATION = "Reider's theorem, as in Barth-Hulek-Peters-Van de Ven, p. 176"
CATANESE_CITATION = ("Catanese: points P, Q of C are not separated by K_C + M iff "
                     "h^1(I_PQ (K_C + M)) = 1")


class Level(enum.Enum):
    MORPHISM = "Morphism"
    BIRATIONAL = "BirationalIsoOutsideFiniteSet"
    CONDITIONAL_EMBEDDING = "ConditionalEmbedding"
    EMBEDDING = "Embedding"

    @property
    def strength(self) -> int:
        return list(Level).index(self)


@dataclass
class BicanonicalStatus:
    level: Level
    obstruction_classes: list[LineBundleClass]
    curve_count_bound: int
    derivation: Derivation = field(repr=False)

    def to_json(self) -> dict:
        return {"level": self.level.value,
                "obstruction_classes": [c.to_json() for c in self.obstruction_classes],
                "curve_count_bound": self.curve_count_bound}


def last_fact_step(derivation: Derivation, cls: LineBundleClass, index: int) -> int | None:
    want = cls.to_json()
    for s in reversed(derivation.steps):
        o = s.output
        if o.get("kind") == "h" and o.get("index") == index and o.get("class") == want:
            return s.id
    return None


def base_point_free_check(plane: FakePlane, derivation: Derivation | None = None):
    d = derivation if derivation is not None else Derivation()
    s1 = d.claim("lattice", "an effective curve C is numerically k L1 with k >= 1",
                 rule_note="Picard rank one, L1 ample")
    s2 = d.claim("lattice", "C^2 = k^2 >= 1, so no curve has C^2 in {0, -1}", (s1,),
                 min_self_intersection=1)
    s3 = d.claim("reider-bpf", "K ample with K^2 = 9 and no curve with C^2 in {0,-1}: "
                 "|2K| is base point free", (s2,), citation=REIDER_CITATION)
    d.claim("conclusion", "the bicanonical map is a morphism", (s3,))
    return True, d


def separation_obstructions(plane: FakePlane, facts: CohomologyTable) -> list[LineBundleClass]:
    """Degree-one classes not proven to have ``h^0 = 0``."""
    return [c for c in numerical_cubic_roots(plane)
            if c not in facts or not facts.h(c, 0).is_zero()]


def bicanonical_status(plane: FakePlane, facts: CohomologyTable,
                       fact_derivation: Derivation | None = None) -> BicanonicalStatus:
    d = Derivation()
    if fact_derivation is not None:
        d.merge(fact_derivation)
    _, _ = base_point_free_check(plane, d)
    bpf = d.last
    roots = numerical_cubic_roots(plane)
    obstructions = separation_obstructions(plane, facts)
    refs = []
    for c in roots:
        src = last_fact_step(d, c, 0)
        h0 = facts.h(c, 0) if c in facts else UNKNOWN
        if c in obstructions:
            refs.append(d.claim("curves", f"h0{c} in {h0}: at most one curve in |{c}|",
                                (src,), cls=c.to_json()))
        else:
            refs.append(d.claim("curves", f"h0{c} = 0: no curve in |{c}|", (src,),
                                cls=c.to_json()))
    bound = plane.torsion.size
    fin = d.claim("curves", f"at most {bound} curves numerically L1, one per torsion class",
                  refs, curve_count_bound=bound)
    if obstructions:
        d.claim("reider-separation",
                "points not separated by |2K| lie on a curve numerically L1; "
                "finitely many such curves",
                (bpf, fin), citation=REIDER_CITATION)
        level = Level.BIRATIONAL
    else:
        d.claim("reider-separation",
                "no curve numerically L1 and none with C^2 in {0,-1,-2}: |2K| separates "
                "points and tangents", (bpf, fin), citation=REIDER_CITATION)
        level = Level.EMBEDDING
    d.claim("conclusion", f"bicanonical map: {level.value}", (d.last,), level=level.value)
    return BicanonicalStatus(level, obstructions, bound, d)


@dataclass(frozen=True)
class CurveFacts:
    """Externally supplied data on the curve in ``|L1 + T|``, if any."""

    effective: bool | None = None
    h0_OC2C: DimInterval = UNKNOWN
    h1_OC2C: DimInterval = UNKNOWN


@dataclass
class CataneseVerdict:
    embedding: bool | None
    witnesses: list[LineBundleClass]
    undetermined: list[LineBundleClass]
    derivation: Derivation = field(repr=False)

    @property
    def level(self) -> Level:
        if self.embedding is None:
            return Level.CONDITIONAL_EMBEDDING
        return Level.EMBEDDING if self.embedding else Level.BIRATIONAL


def catanese_criterion(plane: FakePlane, curve_facts: dict, facts: CohomologyTable | None = None
                       ) -> CataneseVerdict:
    """Embedding iff no effective ``C`` with ``C^2 = 1`` and ``h0(O_C(2C)) = h1(O_C(2C)) = 1``.

    ``curve_facts`` maps torsion coordinates to ``CurveFacts``. A class proven
    to have no sections in ``facts`` needs no curve data.
    """
    d = Derivation()
    g = arithmetic_genus(1)
    s_rr = d.claim("curve-rr", f"curve_chi(2, {g}) = {curve_chi(2, g)}: h0 = h1 on a degree-2 bundle",
                   genus=g, chi=curve_chi(2, g))
    s_dual = d.claim("curve-serre", f"dual degree {curve_serre_dual(2, g)}: h1(O_C(2C+T)) = "
                     "h0(K_C - 2C - T), again of degree 2", (s_rr,))
    s_crit = d.claim("catanese", "|2K| fails to embed along C iff h0(O_C(2C+T)) = 1",
                     (s_dual,), citation=CATANESE_CITATION)
    witnesses, undetermined = [], []
    for c in numerical_cubic_roots(plane):
        if facts is not None and c in facts and facts.h(c, 0).is_zero():
            d.claim("catanese", f"{c}: not effective", (s_crit,))
            continue
        cf = curve_facts.get(c.torsion.coords)
        if cf is None or cf.effective is None:
            undetermined.append(c)
            d.claim("catanese", f"{c}: effectivity unknown", (s_crit,))
            continue
        if not cf.effective:
            d.claim("catanese", f"{c}: not effective (supplied)", (s_crit,))
            continue
        both = cf.h0_OC2C.meet(cf.h1_OC2C)
        if both is None:
            raise ValueError(f"curve data for {c} violates h0 = h1")
        if both.exact and both.lo == 1:
            witnesses.append(c)
            d.claim("catanese", f"{c}: h0 = h1 = 1, points on C are not separated", (s_crit,))
        elif not both.contains(1):
            d.claim("catanese", f"{c}: h0 = h1 = {both} != 1", (s_crit,))
        else:
            undetermined.append(c)
            d.claim("catanese", f"{c}: h0 = h1 in {both}, undetermined", (s_crit,))
    if witnesses:
        verdict = False
    elif undetermined:
        verdict = None
    else:
        verdict = True
    d.claim("conclusion", "embedding" if verdict else
            ("not an embedding" if verdict is False else "embedding conditional on curve data"),
            tuple(range(s_crit, len(d.steps))), embedding=verdict)
    return CataneseVerdict(verdict, witnesses, undetermined, d)

"""Dimension-level bookkeeping for exceptional collections of line bundles.

``Ext^k(O(A), O(B)) = h^k(B - A)``, so every question about a collection of
line bundles becomes a question for the cohomology engine.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field

from . import axioms as ax
from .cohomology import CohomologyTable, InsufficientFacts, infer
from .derivation import Derivation
from .group_action import LinearAction, guaranteed_fixed_nontrivial
from .picard import FakePlane, LineBundleClass, scale
from .reider import last_fact_step

HODGE_TOTAL = 3


@dataclass
class CollectionReport:
    objects: list[LineBundleClass]
    exceptional: bool | None
    ext_tables: dict[tuple[int, int], tuple[int, int, int]]
    blocking: list[LineBundleClass] = field(default_factory=list)
    full: bool | None = None
    phantom_orthogonal: bool | None = None
    conditional: str = ""
    derivation: Derivation = field(default_factory=Derivation, repr=False)

    def to_json(self) -> dict:
        doc = {
            "objects": [o.to_json() for o in self.objects],
            "exceptional": self.exceptional,
            "ext_tables": {f"{i},{j}": list(v) for (i, j), v in sorted(self.ext_tables.items())},
            "full": self.full,
            "phantom_orthogonal": self.phantom_orthogonal,
        }
        if self.blocking:
            doc["blocking"] = [c.to_json() for c in self.blocking]
        if self.conditional:
            doc["conditional"] = self.conditional
        return doc


def needed_classes(objects) -> list[LineBundleClass]:
    return sorted({b - a for a in objects for b in objects})


def facts_for(plane: FakePlane, objects, axioms=(), **kw) -> tuple[CohomologyTable, Derivation]:
    return infer(plane, axioms, needed_classes(objects), **kw)


def ext_dims(plane: FakePlane, A: LineBundleClass, B: LineBundleClass,
             facts: CohomologyTable) -> tuple[int, int, int]:
    """``(dim Ext^0, Ext^1, Ext^2)`` from ``O(A)`` to ``O(B)``."""
    return facts.require_exact([B - A])[B - A]


def is_exceptional(plane: FakePlane, objects, facts: CohomologyTable,
                   fact_derivation: Derivation | None = None) -> CollectionReport:
    """Check ``Ext^*(E_j, E_i) = 0`` for ``j > i`` and ``Ext^*(E_i, E_i) = (1, 0, 0)``.

    ``exceptional`` is None when the facts leave a required vanishing open;
    ``blocking`` then lists the classes whose cohomology is missing.
    """
    objects = list(objects)
    d = Derivation()
    if fact_derivation is not None:
        d.merge(fact_derivation)
    tables, blocking = {}, []
    failed = False
    checks = []
    n = len(objects)
    for i in range(n):
        for j in range(n):
            c = objects[j] - objects[i]
            e = facts.exact(c)
            if e is not None:
                tables[(i, j)] = e
            if i < j:
                continue
            want = (1, 0, 0) if i == j else (0, 0, 0)
            srcs = [last_fact_step(d, c, k) for k in range(3)]
            if e is not None:
                ok = e == want
                checks.append(d.claim("ext", f"Ext^*(E{i}, E{j}) = h^*{c} = {e}"
                                      + ("" if ok else f" != {want}"), srcs,
                                      pair=[i, j], dims=list(e)))
                failed |= not ok
                continue
            # undetermined, but a forced nonzero entry already decides it
            known_nonzero = any(facts.h(c, k).lo > want[k] or facts.h(c, k).upper < want[k]
                                for k in range(3))
            if known_nonzero:
                failed = True
                checks.append(d.claim("ext", f"Ext^*(E{i}, E{j}) = h^*{c} cannot be {want}",
                                      srcs, pair=[i, j]))
            else:
                blocking.append(c)
    if failed:
        verdict = False
    elif blocking:
        verdict = None
    else:
        verdict = True
    text = {True: "exceptional", False: "not exceptional",
            None: "undetermined: missing " + ", ".join(map(str, sorted(set(blocking))))}[verdict]
    d.claim("exceptional", text, checks, exceptional=verdict)
    return CollectionReport(objects, verdict, tables, sorted(set(blocking)), derivation=d)


def cubic_root_triple(plane: FakePlane, Lp: LineBundleClass) -> list[LineBundleClass]:
    return [plane.structure_sheaf, -Lp, scale(-2, Lp)]


def cubic_root_criterion(plane: FakePlane, Lp: LineBundleClass, facts: CohomologyTable):
    """Return ``(verdict, requirements)`` for ``(O, -L', -2L')``.

    The verdict is True when ``h0(2L')``, ``h2(L')`` and ``h2(2L')`` all vanish,
    False when one of them is known nonzero, None otherwise.
    """
    if Lp.degree != 1:
        raise ValueError("L' must be a numerical cubic root of K (degree 1)")
    two = scale(2, Lp)
    reqs = {"h0(2L')": facts.h(two, 0), "h2(L')": facts.h(Lp, 2), "h2(2L')": facts.h(two, 2)}
    if all(iv.is_zero() for iv in reqs.values()):
        verdict = True
    elif any(iv.lo > 0 for iv in reqs.values()):
        verdict = False
    else:
        verdict = None
    return verdict, reqs


@dataclass
class SearchResult:
    plane: str
    collections: list[CollectionReport]
    candidates: int
    label: str
    counting_forces_fixed: bool

    def __len__(self) -> int:
        return len(self.collections)

    def __iter__(self):
        return iter(self.collections)


def search_nonstandard(plane: FakePlane, action: LinearAction) -> SearchResult:
    """Collections ``(O, -O(1) - T, -2 O(1))`` for nontrivial ``T`` fixed by ``action``.

    The vanishing axiom A-van is granted only for fixed ``T``. Under an action of
    order other than 7 every grant is flagged as needing equivariance evidence.
    """
    if not plane.is_g21:
        raise ValueError(f"plane {plane.id} is not a G21 plane")
    if action.group != plane.torsion:
        raise ValueError("action does not act on this plane's torsion group")
    O1 = plane.cls(1)
    fixed = action.fixed_nontrivial()
    reports = []
    for t in fixed:
        axioms = [ax.a1(plane), ax.a_van(plane, t)]
        objects = [plane.structure_sheaf, -(O1 + plane.cls(0, t.coords)), scale(-2, O1)]
        facts, fd = facts_for(plane, objects, axioms)
        rep = is_exceptional(plane, objects, facts, fd)
        if action.order != 7:
            rep.conditional = (f"A-van for T={t} needs evidence that 2 O(1) + T is "
                               "Z/7-equivariant; the supplied action does not provide it")
        if rep.exceptional:
            reports.append(rep)
    forced = guaranteed_fixed_nontrivial(plane.torsion.rank)
    if reports:
        label = f"{len(reports)} nonstandard collection(s) found"
    elif forced:
        label = "none found, although counting forces a fixed nontrivial class"
    else:
        label = "none found under the representative action; undetermined by counting"
    return SearchResult(plane.id, reports, len(fixed), label, forced)


def record_sod(d: Derivation, length: int, anchor: int | None) -> tuple[bool, bool]:
    """Append the non-fullness, SOD and Hochschild steps for a verified collection."""
    s_min = d.use_axiom(ax.plain("A-minifold"))
    why = ("a full length-3 collection would make X a 2-minifold, i.e. P^2"
           if length == HODGE_TOTAL else f"a full collection has length dim HH(X) = {HODGE_TOTAL}")
    s_full = d.claim("sod", f"the collection is not full: {why}", (anchor, s_min), full=False)
    names = ", ".join(f"E{i}" for i in range(length))
    s_sod = d.claim("sod", f"D^b(X) = <{names}, A> with A the right orthogonal; the envelope of "
                    "an exceptional collection is admissible", (anchor, s_full))
    s_hodge = d.use_axiom(ax.plain("A-hodge"))
    hh_a = HODGE_TOTAL - length
    phantom = hh_a == 0
    d.claim("hochschild", f"HH(X) has dimension {HODGE_TOTAL}; each exceptional object adds 1; "
            f"HH(A) has dimension {hh_a}", (s_sod, s_hodge), hh_orthogonal=hh_a,
            phantom=phantom)
    return False, phantom


def phantom_and_sod(plane: FakePlane, report: CollectionReport) -> CollectionReport:
    """Record non-fullness, the SOD with the orthogonal ``A`` and its Hochschild dimension."""
    if report.exceptional is not True:
        raise ValueError("phantom bookkeeping needs an exceptional collection")
    d = Derivation()
    d.merge(report.derivation)
    full, phantom = record_sod(d, len(report.objects), d.last)
    return dataclasses.replace(report, full=full, phantom_orthogonal=phantom, derivation=d)

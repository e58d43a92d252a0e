"""Interval-valued inference of line-bundle cohomology on a fake projective plane.

Each class carries three intervals bounding ``h^0, h^1, h^2``. A fixed rule set
tightens them until nothing changes:

R-struct   h^*(O) = (1, q, p_g)
R-axiom    injected facts
R-neg      no sections in negative degree, or in degree 0 with nontrivial torsion
R-chi      h^0 - h^1 + h^2 = chi(L) as an interval propagator
R-serre    h^i(L) = h^{2-i}(K - L)
R-kodaira  h^1(L) = h^2(L) = 0 once L - K is ample
R-mult     h^0(2A) >= 2 h^0(A) - 1 when h^0(A) >= 1, and its contrapositive

Rules fire in the order above; inside a rule classes are visited in
``(degree, torsion)`` order, so traces are reproducible. Every tightening is a
step in a ``Derivation`` whose inputs are the steps that last tightened the
facts it read.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .derivation import Axiom, Derivation
from .picard import FakePlane, LineBundleClass, scale

DEFAULT_WINDOW = (-6, 6)
MAX_PASSES = 10_000

RULE_ORDER = ("R-axiom", "R-neg", "R-chi", "R-serre", "R-kodaira", "R-mult")

RULE_CITATIONS = {
    "R-struct": "h^1(O) = q and h^2(O) = p_g for a surface; both vanish on a fake projective plane",
    "R-axiom": "injected axiom",
    "R-neg": "an effective divisor has nonnegative degree against an ample class, "
             "and a numerically trivial effective divisor is zero",
    "R-chi": "Riemann-Roch: chi(L) = D.(D-K)/2 + 1 - q + p_g",
    "R-serre": "Serre duality on a surface: h^i(L) = h^{2-i}(K - L)",
    "R-kodaira": "Kodaira vanishing: h^i(K + A) = 0 for i > 0 and A ample",
    "R-mult": "Kollar, Lemma 15.6.2: h^0(A + B) >= h^0(A) + h^0(B) - 1 when both are nonzero",
}


@dataclass(frozen=True)
class DimInterval:
    """``lo <= h <= hi``; ``hi=None`` means unbounded above."""

    lo: int = 0
    hi: int | None = None

    def __post_init__(self):
        if self.lo < 0:
            object.__setattr__(self, "lo", 0)
        if self.hi is not None and self.hi < self.lo:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def exactly(cls, v: int) -> DimInterval:
        return cls(v, v)

    @property
    def exact(self) -> bool:
        return self.hi == self.lo

    @property
    def value(self) -> int | None:
        return self.lo if self.exact else None

    @property
    def upper(self) -> float:
        return math.inf if self.hi is None else self.hi

    def is_zero(self) -> bool:
        return self.hi == 0

    def contains(self, v: int) -> bool:
        return self.lo <= v <= self.upper

    def subset_of(self, other: DimInterval) -> bool:
        return self.lo >= other.lo and self.upper <= other.upper

    def meet(self, other: DimInterval) -> DimInterval | None:
        lo = max(self.lo, other.lo)
        hi = min(self.upper, other.upper)
        if hi < lo:
            return None
        return DimInterval(lo, None if hi == math.inf else int(hi))

    def to_json(self) -> list:
        return [self.lo, self.hi]

    def __str__(self) -> str:
        if self.exact:
            return str(self.lo)
        return f"[{self.lo},{'inf' if self.hi is None else self.hi}]"


UNKNOWN = DimInterval()


def _bounded(lo: float, hi: float) -> DimInterval | None:
    """Interval from float bounds, clamped at 0; None when the bounds say nothing."""
    lo = max(0, lo)
    if lo == 0 and hi == math.inf:
        return None
    if hi < lo:
        # caller meets this with the current interval, which then comes out empty
        return _EMPTY_MARK
    return DimInterval(int(lo), None if hi == math.inf else int(hi))


class _Empty:
    lo = 1
    hi = 0
    upper = 0

    def to_json(self):
        return [1, 0]

    def __str__(self):
        return "empty"


_EMPTY_MARK = _Empty()


@dataclass(frozen=True)
class Fact:
    """A bound on one cohomology dimension of one class."""

    cls: LineBundleClass
    index: int
    interval: DimInterval

    def to_json(self) -> dict:
        return {"kind": "h", "index": self.index, "class": self.cls.to_json(),
                "interval": self.interval.to_json()}

    def __str__(self) -> str:
        iv = self.interval
        if iv.exact:
            rel = f"= {iv.lo}"
        elif iv.hi is None:
            rel = f">= {iv.lo}"
        elif iv.lo == 0:
            rel = f"<= {iv.hi}"
        else:
            rel = f"in {iv}"
        return f"h{self.index}{self.cls} {rel}"


def h_exact(cls: LineBundleClass, index: int, value: int) -> Fact:
    return Fact(cls, index, DimInterval.exactly(value))


def h_at_least(cls: LineBundleClass, index: int, value: int) -> Fact:
    return Fact(cls, index, DimInterval(value, None))


def h_at_most(cls: LineBundleClass, index: int, value: int) -> Fact:
    return Fact(cls, index, DimInterval(0, value))


def chi(plane: FakePlane, L: LineBundleClass) -> int:
    """Holomorphic Euler characteristic; depends only on the degree."""
    D2 = L.degree * L.degree
    DK = L.degree * plane.canonical.degree
    return (D2 - DK) // 2 + 1 - plane.q + plane.pg


class Inconsistency(Exception):
    """Saturation produced an empty interval."""

    def __init__(self, known: Fact, derived: Fact, rule: str, derivation: Derivation):
        self.known = known
        self.derived = derived
        self.rule = rule
        self.derivation = derivation
        super().__init__(
            f"contradiction via {rule}: known {known.interval} for h{known.index}{known.cls}, "
            f"derived {derived.interval}"
        )


class NotRefutable(Exception):
    """No contradiction at the current rule strength; says nothing about truth."""


class InsufficientFacts(Exception):
    def __init__(self, missing):
        self.missing = sorted(set(missing))
        super().__init__("cohomology not determined for " + ", ".join(map(str, self.missing)))


class CohomologyTable:
    def __init__(self, plane: FakePlane, entries=None):
        self.plane = plane
        self.entries: dict[LineBundleClass, tuple[DimInterval, DimInterval, DimInterval]] = (
            dict(entries or {})
        )

    def __contains__(self, cls: LineBundleClass) -> bool:
        return cls in self.entries

    def __getitem__(self, cls: LineBundleClass):
        return self.entries[cls]

    def classes(self) -> list[LineBundleClass]:
        return sorted(self.entries)

    def h(self, cls: LineBundleClass, index: int) -> DimInterval:
        return self.entries.get(cls, (UNKNOWN,) * 3)[index]

    def chi(self, cls: LineBundleClass) -> int:
        return chi(self.plane, cls)

    def exact(self, cls: LineBundleClass) -> tuple[int, int, int] | None:
        if cls not in self.entries:
            return None
        triple = self.entries[cls]
        if all(iv.exact for iv in triple):
            return tuple(iv.lo for iv in triple)
        return None

    def require_exact(self, classes) -> dict[LineBundleClass, tuple[int, int, int]]:
        out, missing = {}, []
        for c in classes:
            e = self.exact(c)
            if e is None:
                missing.append(c)
            else:
                out[c] = e
        if missing:
            raise InsufficientFacts(missing)
        return out

    def to_json(self) -> list:
        return [
            {"class": c.to_json(), "chi": self.chi(c),
             "h": [iv.to_json() for iv in self.entries[c]]}
            for c in self.classes()
        ]


def closure(plane: FakePlane, targets, window=DEFAULT_WINDOW) -> list[LineBundleClass]:
    """Targets plus Serre partners and doublings, doublings kept inside ``window``.

    Serre partners are added unconditionally; the map ``L -> K - L`` is an
    involution, so the set stays finite.
    """
    lo, hi = window
    K = plane.canonical
    seen: set[LineBundleClass] = set()
    stack = list(targets)
    while stack:
        c = stack.pop()
        if c in seen:
            continue
        seen.add(c)
        stack.append(K - c)
        d = scale(2, c)
        if lo <= d.degree <= hi and d != c:
            stack.append(d)
    return sorted(seen)


class _Saturator:
    def __init__(self, plane: FakePlane, classes, derivation: Derivation, table=None):
        self.plane = plane
        self.classes = list(classes)
        self.K = plane.canonical
        self.d = derivation
        self.iv: dict[LineBundleClass, list[DimInterval]] = {}
        for c in self.classes:
            seed = table.entries.get(c) if table is not None else None
            self.iv[c] = list(seed) if seed else [UNKNOWN] * 3
        self.prov: dict[tuple[LineBundleClass, int], int] = {}

    def tighten(self, c, i, bound, rule, inputs=(), extra=None) -> bool:
        if bound is None:
            return False
        cur = self.iv[c][i]
        prev = self.prov.get((c, i))
        if isinstance(bound, _Empty):
            new = None
        else:
            new = cur.meet(bound)
        if new is None:
            derived = Fact(c, i, bound) if not isinstance(bound, _Empty) else None
            out = {"kind": "contradiction", "index": i, "class": c.to_json(),
                   "known": cur.to_json(), "derived": bound.to_json()}
            self.d.add("contradiction", tuple(inputs) + (prev,), out,
                       note=f"via {rule}")
            raise Inconsistency(Fact(c, i, cur),
                                derived or Fact(c, i, DimInterval(0, 0)), rule, self.d)
        if new == cur:
            return False
        self.iv[c][i] = new
        out = Fact(c, i, new).to_json()
        if extra:
            out.update(extra)
        self.prov[(c, i)] = self.d.add(rule, tuple(inputs) + (prev,), out)
        return True

    def src(self, c, i):
        return self.prov.get((c, i))

    # rules

    def r_struct(self):
        O = self.plane.structure_sheaf
        if O not in self.iv:
            return False
        changed = False
        for i, v in enumerate((1, self.plane.q, self.plane.pg)):
            changed |= self.tighten(O, i, DimInterval.exactly(v), "R-struct")
        return changed

    def r_axiom(self, axioms):
        changed = False
        for ax in axioms:
            f = ax.statement
            if isinstance(f, Fact) and f.cls in self.iv:
                changed |= self.tighten(f.cls, f.index, f.interval, "R-axiom",
                                        extra={"axiom": ax.id})
        return changed

    def r_neg(self):
        changed = False
        for c in self.classes:
            if c.degree < 0 or (c.degree == 0 and not c.torsion.is_zero):
                changed |= self.tighten(c, 0, DimInterval(0, 0), "R-neg")
        return changed

    def r_chi(self):
        changed = False
        for c in self.classes:
            x = chi(self.plane, c)
            for i in range(3):
                a, b = (j for j in range(3) if j != i)
                bound = chi_bound(i, x, self.iv[c][a], self.iv[c][b], a, b)
                changed |= self.tighten(c, i, bound, "R-chi",
                                        (self.src(c, a), self.src(c, b)))
        return changed

    def r_serre(self):
        changed = False
        for c in self.classes:
            dual = self.K - c
            if dual not in self.iv:
                continue
            for i in range(3):
                iv = self.iv[dual][2 - i]
                if iv == UNKNOWN:
                    continue
                changed |= self.tighten(c, i, iv, "R-serre", (self.src(dual, 2 - i),))
        return changed

    def r_kodaira(self):
        changed = False
        for c in self.classes:
            if c.degree - self.K.degree >= 1:
                for i in (1, 2):
                    changed |= self.tighten(c, i, DimInterval(0, 0), "R-kodaira")
        return changed

    def r_mult(self):
        changed = False
        for a in self.classes:
            d = scale(2, a)
            if d == a or d not in self.iv:
                continue
            ha = self.iv[a][0]
            if ha.lo >= 1:
                changed |= self.tighten(d, 0, DimInterval(2 * ha.lo - 1, None), "R-mult",
                                        (self.src(a, 0),), {"mode": "forward"})
            hd = self.iv[d][0]
            if hd.hi is not None:
                changed |= self.tighten(a, 0, DimInterval(0, (hd.hi + 1) // 2), "R-mult",
                                        (self.src(d, 0),), {"mode": "contrapositive"})
        return changed

    def run(self, axioms):
        self.r_struct()
        for _ in range(MAX_PASSES):
            changed = self.r_axiom(axioms)
            changed |= self.r_neg()
            changed |= self.r_chi()
            changed |= self.r_serre()
            changed |= self.r_kodaira()
            changed |= self.r_mult()
            if not changed:
                return
        raise RuntimeError("saturation did not reach a fixpoint")

    def table(self) -> CohomologyTable:
        return CohomologyTable(self.plane, {c: tuple(v) for c, v in self.iv.items()})


def chi_bound(i, x, ia: DimInterval, ib: DimInterval, a: int, b: int):
    """Bound on ``h^i`` from ``h^0 - h^1 + h^2 = x`` and the other two intervals."""
    sign = {0: 1, 1: -1, 2: 1}
    # sign[i] h_i = x - sign[a] h_a - sign[b] h_b
    lo = x
    hi = x
    for s, iv in ((sign[a], ia), (sign[b], ib)):
        if s > 0:
            lo -= iv.upper
            hi -= iv.lo
        else:
            lo += iv.lo
            hi += iv.upper
    if sign[i] < 0:
        lo, hi = -hi, -lo
    return _bounded(lo, hi)


def infer(plane: FakePlane, axioms=(), targets=(), window=DEFAULT_WINDOW,
          table: CohomologyTable | None = None) -> tuple[CohomologyTable, Derivation]:
    """Saturate the rule set over the closure of ``targets``.

    Raises ``Inconsistency`` when the facts clash; the exception carries the
    partial derivation ending in a ``contradiction`` step.
    """
    targets = list(targets)
    if table is not None:
        targets += table.classes()
    classes = closure(plane, targets, window)
    d = Derivation()
    for ax in axioms:
        d.axioms.setdefault(ax.id, ax.citation)
    sat = _Saturator(plane, classes, d, table)
    sat.run(list(axioms))
    # keep only consumed axioms
    used = {s.output.get("axiom") for s in d.steps if s.rule == "R-axiom"}
    d.axioms = {k: v for k, v in d.axioms.items() if k in used}
    return sat.table(), d


def refute(plane: FakePlane, axioms, hypothesis: Fact, window=DEFAULT_WINDOW) -> Derivation:
    """Derive a contradiction from ``axioms`` plus ``hypothesis``.

    The returned derivation ends with a step stating the hypothesis's negation.
    """
    hyp = Axiom("H", hypothesis, "hypothesis assumed for contradiction")
    # the axioms alone must be consistent, else any hypothesis would be "refuted"
    infer(plane, axioms, [hypothesis.cls], window)
    try:
        infer(plane, list(axioms) + [hyp], [hypothesis.cls], window)
    except Inconsistency as exc:
        d = exc.derivation
        d.axioms.pop("H", None)
        iv = hypothesis.interval
        out = {"kind": "refuted", "hypothesis": hypothesis.to_json(),
               "text": f"not ({hypothesis})"}
        if iv.hi is None and iv.lo >= 1:
            out.update(h_at_most(hypothesis.cls, hypothesis.index, iv.lo - 1).to_json())
            out["kind"] = "h"
        elif iv.lo == 0 and iv.hi is not None:
            out.update(h_at_least(hypothesis.cls, hypothesis.index, iv.hi + 1).to_json())
            out["kind"] = "h"
        d.add("R-refute", (d.last,), out, note=f"not ({hypothesis})")
        return d
    raise NotRefutable(f"{hypothesis} is not refutable at current rule strength")


def _fact_from_json(plane: FakePlane, out: dict) -> tuple[LineBundleClass, int, DimInterval]:
    c = plane.cls(out["class"]["degree"], out["class"]["torsion"])
    lo, hi = out["interval"]
    return c, out["index"], DimInterval(lo, hi)


def check_derivation(plane: FakePlane, derivation: Derivation, axioms=()) -> list[str]:
    """Re-derive every engine step from its inputs alone; returns the failures.

    Steps from other modules (``kind == "claim"``) are checked only for ordering.
    """
    errors = []
    try:
        derivation.validate()
    except ValueError as exc:
        return [str(exc)]
    facts = [(a.id, a.statement) for a in axioms if isinstance(a.statement, Fact)]
    # a hypothesis counts as an axiom only where an R-refute step discharges it
    for s in derivation.steps:
        if s.rule == "R-refute" and "hypothesis" in s.output:
            hc, hi, hiv = _fact_from_json(plane, s.output["hypothesis"])
            facts.append(("H", Fact(hc, hi, hiv)))
    by_id = {s.id: s for s in derivation.steps}
    K = plane.canonical
    for s in derivation.steps:
        out = s.output
        if out.get("kind") != "h" or s.rule == "R-refute":
            continue
        c, i, iv = _fact_from_json(plane, out)
        prev = UNKNOWN
        others = {}
        for j in s.inputs:
            o = by_id[j].output
            if o.get("kind") != "h":
                continue
            ic, ii, iiv = _fact_from_json(plane, o)
            if (ic, ii) == (c, i):
                prev = iiv
            else:
                others[(ic, ii)] = iiv
        get = lambda cc, jj: others.get((cc, jj), UNKNOWN)  # noqa: E731
        rule = s.rule
        if rule == "R-struct":
            bound = DimInterval.exactly((1, plane.q, plane.pg)[i]) if c == plane.structure_sheaf else None
        elif rule == "R-axiom":
            # without an axiom list the recorded statement is taken at face value
            match = [f.interval for aid, f in facts
                     if aid == out.get("axiom") and f.cls == c and f.index == i
                     and prev.meet(f.interval) == iv]
            bound = match[0] if match else (None if facts else iv)
        elif rule == "R-neg":
            ok = i == 0 and (c.degree < 0 or (c.degree == 0 and not c.torsion.is_zero))
            bound = DimInterval(0, 0) if ok else None
        elif rule == "R-kodaira":
            bound = DimInterval(0, 0) if i in (1, 2) and c.degree - K.degree >= 1 else None
        elif rule == "R-serre":
            bound = get(K - c, 2 - i)
        elif rule == "R-chi":
            a, b = (j for j in range(3) if j != i)
            bound = chi_bound(i, chi(plane, c), get(c, a), get(c, b), a, b)
        elif rule == "R-mult":
            if out.get("mode") == "forward":
                half = [k for k in others if scale(2, k[0]) == c and k[1] == 0]
                bound = (DimInterval(2 * others[half[0]].lo - 1, None)
                         if half and i == 0 and others[half[0]].lo >= 1 else None)
            else:
                dbl = get(scale(2, c), 0)
                bound = DimInterval(0, (dbl.hi + 1) // 2) if dbl.hi is not None and i == 0 else None
        else:
            errors.append(f"step {s.id}: unknown rule {rule}")
            continue
        if bound is None or isinstance(bound, _Empty):
            errors.append(f"step {s.id}: {rule} does not apply")
            continue
        expect = prev.meet(bound)
        if expect != iv:
            errors.append(f"step {s.id}: {rule} gives {expect}, recorded {iv}")
    return errors

"""Named end-to-end derivations and their reports."""

from __future__ import annotations

import dataclasses
import enum
import json
import time
from dataclasses import dataclass, field
from typing import Callable

from . import axioms as ax
from .cohomology import (CohomologyTable, DimInterval, Fact, NotRefutable, check_derivation,
                         h_at_least, infer, refute)
from .curves import (admissible_normalization_genera, arithmetic_genus, hurwitz_solutions,
                     toledo_check, Toledo)
from .derivation import Axiom, Derivation
from .derived import facts_for, is_exceptional, record_sod, search_nonstandard
from .group_action import (equivariant_classes, guaranteed_fixed_nontrivial,
                           make_order7_action, parse_action)
from .picard import FakePlane, get_plane, intersection, numerical_cubic_roots, scale
from .reider import (Level, bicanonical_status, catanese_criterion, last_fact_step)

P1_FIXED_CITATION = ("a finite-order automorphism of P^n, n <= 1, is induced by a linear map, "
                     "which has an eigenvector; so it has a fixed point")


class Verdict(enum.Enum):
    PROVED = "Proved"
    REFUTED = "Refuted"
    CONDITIONAL = "Conditional"


class UnknownResult(KeyError):
    pass


class IncompatiblePlane(ValueError):
    pass


@dataclass
class Options:
    disabled: frozenset = frozenset()
    enabled_optional: frozenset = frozenset()
    user_facts: tuple = ()
    action: str | None = None
    curve_facts: dict = field(default_factory=dict)

    @classmethod
    def from_toggles(cls, toggles: dict, user_facts=(), **kw) -> Options:
        off = frozenset(k for k, v in toggles.items() if not v)
        on = frozenset(k for k, v in toggles.items() if v and ax.REGISTRY[k].optional)
        return cls(off, on, tuple(user_facts), **kw)

    def to_json(self) -> dict:
        return {
            "disabled": sorted(self.disabled),
            "enabled_optional": sorted(self.enabled_optional),
            "user_axioms": [{"id": a.id, "fact": a.statement.to_json(), "citation": a.citation}
                            for a in self.user_facts],
            "action": self.action,
        }


@dataclass
class Report:
    result_id: str
    plane: FakePlane
    verdict: Verdict
    claim: str
    derivation: Derivation
    conclusions: dict = field(default_factory=dict)
    collections: list = field(default_factory=list)
    gaps: list = field(default_factory=list)
    options: Options = field(default_factory=Options)
    elapsed_ms: float = 0.0

    def to_json(self, timing: bool = False) -> dict:
        deriv = self.derivation.to_json()
        return {
            "result_id": self.result_id,
            "plane": self.plane.id,
            "verdict": self.verdict.value,
            "claim": self.claim,
            "axioms": deriv["axioms"],
            "gaps": list(self.gaps),
            "conclusions": self.conclusions,
            "collections": self.collections,
            "steps": deriv["steps"],
            "options": self.options.to_json(),
            "elapsed_ms": round(self.elapsed_ms, 3) if timing else None,
        }


class _Ctx:
    """Per-replay state: options, the growing derivation and recorded gaps."""

    def __init__(self, plane: FakePlane, options: Options):
        self.plane = plane
        self.options = options
        self.d = Derivation()
        self.gaps: list[str] = []
        self.collections: list[dict] = []

    def has(self, axiom_id: str) -> bool:
        spec = ax.spec(axiom_id)
        if spec.optional:
            return axiom_id in self.options.enabled_optional
        return axiom_id not in self.options.disabled

    def need(self, axiom_id: str, inputs=()) -> int | None:
        """Cite a registry axiom; on absence record the gap and return None."""
        if not self.has(axiom_id):
            self.gaps.append(axiom_id)
            self.d.claim("gap", f"axiom {axiom_id} unavailable: {ax.spec(axiom_id).statement}",
                         inputs, axiom=axiom_id)
            return None
        return self.d.use_axiom(ax.plain(axiom_id), inputs)

    def engine_axioms(self, with_a1: bool = False) -> list[Axiom]:
        out = list(self.options.user_facts)
        if with_a1 and self.plane.is_g21 and self.has("A1"):
            out.insert(0, ax.a1(self.plane))
        if self.has("A-noL1"):
            out += ax.no_effective_l1(self.plane)
        return out

    def infer(self, targets, with_a1=False) -> tuple[CohomologyTable, dict]:
        table, sub = infer(self.plane, self.engine_axioms(with_a1), targets)
        return table, self.d.merge(sub)

    def step_for(self, cls, index):
        return last_fact_step(self.d, cls, index)

    def action(self):
        if self.options.action:
            return parse_action(self.options.action, self.plane.torsion)
        return make_order7_action(self.plane.torsion.rank)


@dataclass(frozen=True)
class ResultScript:
    result_id: str
    claim: str
    g21_only: bool
    required_axioms: tuple[str, ...]
    run: Callable[[_Ctx], tuple[Verdict, dict]]


# scripts


def _lemma_l4(ctx: _Ctx):
    p = ctx.plane
    targets = [p.cls(4, t.coords) for t in p.torsion.elements()]
    table, _ = ctx.infer(targets)
    vals = {str(c): str(table.h(c, 0)) for c in targets}
    ok = all(table.exact(c) == (3, 0, 0) for c in targets)
    ctx.d.claim("conclusion", "h0(L4) = 3 for every L4" if ok else "h0(L4) not determined",
                [ctx.step_for(c, 0) for c in targets])
    return (Verdict.PROVED if ok else Verdict.CONDITIONAL), {"h0": vals}


def _refute_each(ctx: _Ctx, degree: int, bound: int):
    p = ctx.plane
    ends, failed = [], []
    for t in p.torsion.elements():
        c = p.cls(degree, t.coords)
        try:
            sub = refute(p, ctx.engine_axioms(), h_at_least(c, 0, bound + 1))
        except NotRefutable:
            failed.append(str(c))
            continue
        m = ctx.d.merge(sub)
        ends.append(m[sub.last])
    return ends, failed


def _lemma_l2(ctx: _Ctx):
    ends, failed = _refute_each(ctx, 2, 2)
    ctx.d.claim("conclusion", "h0(L2) <= 2 for every L2", ends)
    return (Verdict.CONDITIONAL if failed else Verdict.PROVED), {"h0_upper": 2, "unrefuted": failed}


def _lemma_l1(ctx: _Ctx):
    p = ctx.plane
    ends, failed = _refute_each(ctx, 1, 1)
    roots = numerical_cubic_roots(p)
    table, _ = ctx.infer(roots)
    vals = {str(c): str(table.h(c, 0)) for c in roots}
    ctx.d.claim("conclusion", "h0(L1) in {0, 1} for every L1", ends + [ctx.step_for(c, 0) for c in roots])
    return (Verdict.CONDITIONAL if failed else Verdict.PROVED), {"h0": vals}


def _lemma_curves(ctx: _Ctx):
    p = ctx.plane
    roots = numerical_cubic_roots(p)
    table, _ = ctx.infer(roots)
    ok = all(table.h(c, 0).upper <= 1 for c in roots)
    bound = p.torsion.size
    ctx.d.claim("curves", f"each L1 has h0 <= 1, hence at most one curve; {bound} classes L1",
                [ctx.step_for(c, 0) for c in roots], curve_count_bound=bound)
    ctx.d.claim("conclusion", f"at most {bound} curves numerically equivalent to L1", (ctx.d.last,))
    return (Verdict.PROVED if ok else Verdict.CONDITIONAL), {"curve_count_bound": bound}


def _bicanonical_facts(ctx: _Ctx, with_a1: bool):
    p = ctx.plane
    twoK = scale(2, p.canonical)
    roots = numerical_cubic_roots(p)
    table, sub = infer(p, ctx.engine_axioms(with_a1), [twoK] + roots)
    return twoK, table, sub


def _thm_birat(ctx: _Ctx):
    p = ctx.plane
    twoK, table, sub = _bicanonical_facts(ctx, with_a1=False)
    status = bicanonical_status(p, table, sub)
    ctx.d.merge(status.derivation)
    h0 = table.h(twoK, 0)
    ok = h0.exact and h0.lo == 10 and status.level.strength >= Level.BIRATIONAL.strength
    ctx.d.claim("conclusion", f"h0(2K) = {h0}; bicanonical map into P^{(h0.lo - 1)} is a birational "
                "morphism, an isomorphism off the finitely many curves numerically L1",
                (ctx.d.last,))
    return (Verdict.PROVED if ok else Verdict.CONDITIONAL), {
        "h0_2K": h0.value, "level": status.level.value,
        "curve_count_bound": status.curve_count_bound,
        "obstruction_classes": len(status.obstruction_classes)}


def _thm_keum(ctx: _Ctx):
    p = ctx.plane
    s2 = ctx.need("A2")
    if not ctx.has("A1"):
        ctx.need("A1")
    _, table, sub = _bicanonical_facts(ctx, with_a1=True)
    ctx.d.claim("lattice", f"H1 = {p.torsion} has exponent {p.torsion.exponent}: 2 L1 = 2 O(1) "
                "for every L1", (s2,))
    status = bicanonical_status(p, table, sub)
    ctx.d.merge(status.derivation)
    ok = status.level is Level.EMBEDDING and not ctx.gaps
    return (Verdict.PROVED if ok else Verdict.CONDITIONAL), {
        "level": status.level.value,
        "obstruction_classes": [c.to_json() for c in status.obstruction_classes]}


def _prop_catanese(ctx: _Ctx):
    p = ctx.plane
    roots = numerical_cubic_roots(p)
    table, _ = ctx.infer(roots, with_a1=True)
    v = catanese_criterion(p, ctx.options.curve_facts, table)
    ctx.d.merge(v.derivation)
    return (Verdict.CONDITIONAL if v.embedding is None else Verdict.PROVED), {
        "embedding": v.embedding, "level": v.level.value,
        "witnesses": [c.to_json() for c in v.witnesses],
        "undetermined": [c.to_json() for c in v.undetermined]}


def _vanishing_chain(ctx: _Ctx) -> tuple[bool, list]:
    """Contradiction from ``h0(2 O(1) + T) >= 1`` for Z/7-equivariant ``2 O(1) + T``.

    Returns ``(proved, equivariant classes)``.
    """
    p = ctx.plane
    d = ctx.d
    action = ctx.action()
    classes = equivariant_classes(p, action, 2)
    roots = numerical_cubic_roots(p)
    table, _ = ctx.infer(classes + roots, with_a1=True)
    s_eq = d.claim("equivariance", f"{len(classes)} classes 2 O(1) + T are equivariant under the "
                   f"order-{action.order} action", classes=[c.to_json() for c in classes])
    bounds = [ctx.step_for(c, 0) for c in classes]
    if not all(table.h(c, 0).upper <= 2 for c in classes):
        d.claim("gap", "h0(2 O(1) + T) <= 2 not derived", bounds)
        ctx.gaps.append("L2-bound")
        return False, classes
    s_hyp = d.claim("hypothesis", "assume h0(2 O(1) + T) >= 1 for an equivariant T", (s_eq,))
    s_proj = d.claim("projective", "P(H0(2 O(1) + T)) has dimension 0 or 1 (h0 <= 2)",
                     [s_hyp] + bounds, max_dim=1)
    s_inv = d.claim("R-p1-fixed", "Z/7 fixes a point of P(H0): an invariant curve C in "
                    "|2 O(1) + T|", (s_proj,), citation=P1_FIXED_CITATION)
    a3 = ctx.need("A3")
    if a3 is None:
        return False, classes
    s_npf = d.claim("fixed-locus", "C is not pointwise fixed by Z/7", (s_inv, a3))
    a1_steps = [ctx.step_for(c, 0) for c in roots]
    if not (ctx.has("A1") and all(table.h(c, 0).is_zero() for c in roots)):
        d.claim("gap", "no vanishing h0(L1) = 0 for every L1; C may be reducible", a1_steps)
        ctx.gaps.append("A1")
        return False, classes
    s_irr = d.claim("irreducible", "h0(L1) = 0 for every L1: no curve numerically L1, so C "
                    "(numerically 2 L1) is reduced and irreducible", [s_npf] + a1_steps)
    pa = arithmetic_genus(2)
    s_pa = d.claim("adjunction", f"p_a(C) = {pa}", (s_irr,), p_a=pa)
    # smooth branch
    sols = hurwitz_solutions(7, pa)
    s_hur = d.claim("hurwitz", f"smooth case: order-7 automorphism of a genus-{pa} curve: "
                    f"(g', r) in {[(s.quotient_genus, s.fixed_points) for s in sols]}",
                    (s_pa,), solutions=[[s.quotient_genus, s.fixed_points] for s in sols])
    a4 = ctx.need("A4")
    if a4 is None:
        return False, classes
    r_min = min(s.fixed_points for s in sols)
    smooth_ok = r_min > 3
    d.claim("contradiction", f"smooth case: C has {r_min} fixed points, each an isolated fixed "
            f"point of X giving a singular point of X/(Z/7); {r_min} > 3",
            (s_hur, a4, s_npf), fixed_points=r_min, singular_points=3)
    s_smooth = d.last
    # singular branch
    s_norm = d.claim("normalization", f"singular case: the normalization has genus < {pa} "
                     "and inherits the order-7 automorphism", (s_pa,))
    adm = admissible_normalization_genera(7, pa)
    s_adm = d.claim("hurwitz", f"genera 2 <= g < {pa} with an order-7 automorphism: {adm} "
                    "(no rational or elliptic curves on a ball quotient)", (s_norm,), genera=adm)
    akra = ctx.need("A-kra", (s_adm,))
    if akra is None:
        return False, classes
    adm = admissible_normalization_genera(7, pa, kra_axiom=True)
    s_g = d.claim("hurwitz", f"genus of the normalization is in {adm}", (s_adm, akra), genera=adm)
    kc = intersection(p.canonical, p.cls(2))
    verdicts = {g: toledo_check(kc, g) for g in adm}
    s_tol = d.claim("toledo", f"K.C = {kc}; Toledo bound 3(g-1): "
                    + ", ".join(f"g={g}: {kc} vs {3 * (g - 1)} -> {v.value}" for g, v in verdicts.items()),
                    (s_g,), K_dot_C=kc, bounds={str(g): 3 * (g - 1) for g in adm})
    a5 = ctx.need("A5")
    if a5 is None:
        return False, classes
    sing_ok = bool(adm) and all(v in (Toledo.EQUALITY_GEODESIC, Toledo.VIOLATION)
                                for v in verdicts.values())
    d.claim("contradiction", "singular case: equality forces C totally geodesic, excluded",
            (s_tol, a5))
    s_sing = d.last
    proved = smooth_ok and sing_ok
    d.claim("conclusion", "h0(2 O(1) + T) = 0 for every Z/7-equivariant 2 O(1) + T",
            (s_smooth, s_sing), classes=[c.to_json() for c in classes])
    return proved, classes


def _prop_vanishing(ctx: _Ctx):
    proved, classes = _vanishing_chain(ctx)
    return (Verdict.PROVED if proved else Verdict.CONDITIONAL), {
        "vanishing_classes": [c.to_json() for c in classes]}


def _nonstandard(ctx: _Ctx):
    """Vanishing chain, counting, standard check and search.

    Returns ``(search result or None, counting flag, [(report, anchor step)])`` with
    the standard collection first.
    """
    p = ctx.plane
    proved, _ = _vanishing_chain(ctx)
    nontrivial = p.torsion.size - 1
    forced = guaranteed_fixed_nontrivial(p.torsion.rank)
    ctx.d.claim("counting", f"{nontrivial} nontrivial torsion classes; {nontrivial} mod 7 = "
                f"{nontrivial % 7}: " + ("every order-7 action fixes one" if forced
                                         else "undetermined by counting"), forced=forced)
    if not proved:
        return None, forced, []
    ctx.d.use_axiom(ax.plain("A-van"), (ctx.d.last,))
    std = [p.structure_sheaf, -p.cls(1), scale(-2, p.cls(1))]
    facts, fd = facts_for(p, std, ctx.engine_axioms(True))
    std_rep = is_exceptional(p, std, facts, fd)
    out = [(std_rep, ctx.d.merge(std_rep.derivation)[std_rep.derivation.last])]
    result = search_nonstandard(p, ctx.action())
    for rep in result.collections:
        out.append((rep, ctx.d.merge(rep.derivation)[rep.derivation.last]))
    ctx.d.claim("search", result.label, [a for _, a in out[1:]], found=len(result.collections))
    return result, forced, out


def _twist(p: FakePlane, rep) -> tuple[int, ...]:
    """``T`` in the collection ``(O, -O(1) - T, -2 O(1))``."""
    return (-rep.objects[1] - p.cls(1)).torsion.coords


def _thm_eccezionale(ctx: _Ctx):
    result, forced, reps = _nonstandard(ctx)
    if result is None:
        return Verdict.CONDITIONAL, {"nonstandard": None}
    nonstd = [r for r, _ in reps[1:]]
    ctx.collections = [dict(r.to_json(), T=list(_twist(ctx.plane, r))) for r in nonstd]
    ok = len(nonstd) >= 1 and not any(r.conditional for r in nonstd)
    ctx.d.claim("conclusion", f"{len(nonstd)} nonstandard exceptional collection(s)", (ctx.d.last,))
    return (Verdict.PROVED if ok else Verdict.CONDITIONAL), {
        "nonstandard": len(nonstd), "T": [list(_twist(ctx.plane, r)) for r in nonstd],
        "label": result.label, "counting_forces_fixed": forced,
        "standard_exceptional": reps[0][0].exceptional}


def _with_sod(ctx: _Ctx, key: str):
    result, forced, reps = _nonstandard(ctx)
    if result is None:
        return Verdict.CONDITIONAL, {}
    done = []
    for rep, anchor in reps:
        if rep.exceptional is not True:
            continue
        full, phantom = record_sod(ctx.d, len(rep.objects), anchor)
        done.append(dataclasses.replace(rep, full=full, phantom_orthogonal=phantom))
    ctx.collections = [r.to_json() for r in done]
    nonstd = len(done) - 1
    ok = nonstd >= 1 and all(r.full is False and r.phantom_orthogonal for r in done)
    text = ("semi-orthogonal decomposition <E0, E1, E2, A> for each exceptional collection"
            if key == "sod" else "HH(A) = 0: each orthogonal is an H-phantom")
    ctx.d.claim("conclusion", text, (ctx.d.last,))
    return (Verdict.PROVED if ok else Verdict.CONDITIONAL), {
        "collections": len(done), "nonstandard": nonstd,
        "full": [r.full for r in done], "phantom_orthogonal": [r.phantom_orthogonal for r in done]}


SCRIPTS: dict[str, ResultScript] = {s.result_id: s for s in (
    ResultScript("lemma-L4", "h0(L4) = 3", False, (), _lemma_l4),
    ResultScript("lemma-L2", "h0(L2) <= 2", False, (), _lemma_l2),
    ResultScript("lemma-L1", "if h0(L1) != 0 then h0(L1) = 1", False, (), _lemma_l1),
    ResultScript("lemma-curves", "finitely many curves numerically L1", False, (), _lemma_curves),
    ResultScript("thm-birat", "the bicanonical map is a birational morphism, an isomorphism "
                 "off a finite set", False, (), _thm_birat),
    ResultScript("thm-keum", "the bicanonical map of a G21 plane is an embedding", True,
                 ("A1", "A2"), _thm_keum),
    ResultScript("prop-catanese", "embedding iff no effective C with C^2 = 1 and "
                 "h0(O_C(2C)) = h1(O_C(2C)) = 1", False, (), _prop_catanese),
    ResultScript("prop-vanishing", "h0(2 O(1) + T) = 0 when 2 O(1) + T is Z/7-equivariant", True,
                 ("A1", "A3", "A4", "A5", "A-kra"), _prop_vanishing),
    ResultScript("thm-eccezionale", "a nonstandard exceptional collection (O, -O(1) - T, -2 O(1))",
                 True, ("A1", "A3", "A4", "A5", "A-kra", "A-van"), _thm_eccezionale),
    ResultScript("cor-orthogonal", "D^b(X) = <O, -O(1) - T, -2 O(1), A>", True,
                 ("A1", "A3", "A4", "A5", "A-kra", "A-van", "A-minifold", "A-hodge"),
                 lambda ctx: _with_sod(ctx, "sod")),
    ResultScript("remark-phantom", "HH(A) = 0", True,
                 ("A1", "A3", "A4", "A5", "A-kra", "A-van", "A-minifold", "A-hodge"),
                 lambda ctx: _with_sod(ctx, "phantom")),
)}


def list_results() -> list[dict]:
    return [{"result_id": s.result_id, "claim": s.claim, "g21_only": s.g21_only,
             "axioms": list(s.required_axioms)} for s in SCRIPTS.values()]


def plane_info(plane_id: str) -> dict:
    return get_plane(plane_id).summary()


def replay(result_id: str, plane: FakePlane | str, options: Options | None = None) -> Report:
    """Run one script. Raises ``Inconsistency`` when injected facts clash."""
    if result_id not in SCRIPTS:
        raise UnknownResult(result_id)
    if isinstance(plane, str):
        plane = get_plane(plane)
    script = SCRIPTS[result_id]
    if script.g21_only and not plane.is_g21:
        raise IncompatiblePlane(f"{result_id} requires a G21 plane; {plane.id} is {plane.aut_label}")
    options = options or Options()
    ctx = _Ctx(plane, options)
    t0 = time.perf_counter()
    verdict, conclusions = script.run(ctx)
    if ctx.gaps and verdict is Verdict.PROVED:
        verdict = Verdict.CONDITIONAL
    elapsed = (time.perf_counter() - t0) * 1000
    return Report(result_id, plane, verdict, script.claim, ctx.d, conclusions,
                  ctx.collections, sorted(set(ctx.gaps)), options, elapsed)


def export(report: Report, fmt: str = "json", timing: bool = False) -> str:
    if fmt == "json":
        return json.dumps(report.to_json(timing), indent=2) + "\n"
    if fmt == "text":
        return _text(report, timing)
    raise ValueError(f"unknown format {fmt!r}")


def _step_text(out: dict) -> str:
    kind = out.get("kind")
    if kind == "h":
        c = out["class"]
        lo, hi = out["interval"]
        iv = str(lo) if lo == hi else f"[{lo},{'inf' if hi is None else hi}]"
        return f"h{out['index']}({c['degree']};{','.join(map(str, c['torsion']))}) in {iv}"
    if kind == "contradiction":
        c = out["class"]
        return (f"contradiction at h{out['index']}({c['degree']};"
                f"{','.join(map(str, c['torsion']))}): known {out['known']} vs derived {out['derived']}")
    return str(out.get("text", out))


def _text(report: Report, timing: bool) -> str:
    lines = [
        f"result:  {report.result_id}",
        f"plane:   {report.plane.id} (H1 = {report.plane.torsion}, Aut = {report.plane.aut_label})",
        f"claim:   {report.claim}",
        f"verdict: {report.verdict.value}",
    ]
    if report.gaps:
        lines.append("gaps:    " + ", ".join(report.gaps))
    lines.append("axioms:")
    for k, v in sorted(report.derivation.axioms.items()):
        lines.append(f"  {k}: {v}")
    lines.append("conclusions:")
    for k, v in report.conclusions.items():
        lines.append(f"  {k}: {json.dumps(v)}")
    lines.append(f"steps ({len(report.derivation.steps)}):")
    for s in report.derivation.steps:
        src = f" <- {','.join(map(str, s.inputs))}" if s.inputs else ""
        lines.append(f"  [{s.id}] {s.rule}{src}: {_step_text(s.output)}")
    if timing:
        lines.append(f"elapsed_ms: {report.elapsed_ms:.3f}")
    return "\n".join(lines) + "\n"


def verify_report(doc: dict, plane: FakePlane | None = None) -> list[str]:
    """Re-execute a serialized report and re-check its engine steps.

    Returns a list of discrepancies; empty means the report replays.
    """
    plane = plane or get_plane(doc["plane"])
    opts = doc.get("options", {})
    facts = []
    for a in opts.get("user_axioms", []):
        f = a["fact"]
        cls = plane.cls(f["class"]["degree"], f["class"]["torsion"])
        facts.append(Axiom(a["id"], Fact(cls, f["index"], DimInterval(*f["interval"])),
                           a["citation"]))
    options = Options(frozenset(opts.get("disabled", [])), frozenset(opts.get("enabled_optional", [])),
                      tuple(facts), opts.get("action"))
    errors = []
    deriv = Derivation.from_json(doc)
    engine_axioms = list(facts)
    if plane.is_g21:
        engine_axioms.append(ax.a1(plane))
    if "A-noL1" in options.enabled_optional:
        engine_axioms += ax.no_effective_l1(plane)
    if plane.is_g21:
        act = options.action
        act = (parse_action(act, plane.torsion) if act
               else make_order7_action(plane.torsion.rank))
        engine_axioms += [ax.a_van(plane, t) for t in act.fixed_nontrivial()]
    errors += check_derivation(plane, deriv, engine_axioms)
    again = replay(doc["result_id"], plane, options)
    if again.verdict.value != doc["verdict"]:
        errors.append(f"verdict {again.verdict.value} != recorded {doc['verdict']}")
    if again.to_json()["steps"] != doc["steps"]:
        errors.append("re-executed steps differ from the recorded ones")
    return errors

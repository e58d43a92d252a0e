import pytest

from fakeplanes import axioms as ax
from fakeplanes.cohomology import DimInterval, h_exact, infer
from fakeplanes.derivation import Axiom
from fakeplanes.picard import get_plane, numerical_cubic_roots
from fakeplanes.reider import (
    CurveFacts,
    Level,
    base_point_free_check,
    bicanonical_status,
    catanese_criterion,
    separation_obstructions,
)


def _facts(plane, axioms=()):
    return infer(plane, list(axioms), numerical_cubic_roots(plane))


@pytest.mark.parametrize("pid", ["b3", "b4", "b6", "generic"])
def test_base_point_free(pid):
    ok, d = base_point_free_check(get_plane(pid))
    assert ok
    assert any(s.output.get("min_self_intersection") == 1 for s in d.steps)
    d.validate()


@pytest.mark.parametrize("pid", ["b3", "b4", "b6"])
def test_keum_planes_embed_with_a1(pid):
    p = get_plane(pid)
    facts, fd = _facts(p, [ax.a1(p)])
    assert separation_obstructions(p, facts) == []
    status = bicanonical_status(p, facts, fd)
    assert status.level is Level.EMBEDDING
    assert status.obstruction_classes == []


def test_generic_is_birational():
    p = get_plane("generic")
    facts, fd = _facts(p)
    obs = separation_obstructions(p, facts)
    assert obs == numerical_cubic_roots(p)
    status = bicanonical_status(p, facts, fd)
    assert status.level is Level.BIRATIONAL
    assert status.curve_count_bound == p.torsion.size == 8
    assert status.to_json()["level"] == "BirationalIsoOutsideFiniteSet"


def test_injected_section_is_the_only_obstruction():
    p = get_plane("b4")
    facts, _ = _facts(p, [ax.a1(p)])
    # drop A1 for (1,0) alone: take everything else from the A1 table
    one = Axiom("user", h_exact(p.cls(1), 0, 1), "test")
    others = [Axiom(f"z{t}", h_exact(p.cls(1, t.coords), 0, 0), "test")
              for t in p.torsion.elements()[1:]]
    facts, _ = infer(p, [one] + others, numerical_cubic_roots(p))
    assert separation_obstructions(p, facts) == [p.cls(1)]


def test_levels_are_ordered():
    assert Level.MORPHISM.strength < Level.BIRATIONAL.strength < Level.EMBEDDING.strength


def test_catanese_no_effective_curve():
    p = get_plane("b3")
    data = {t.coords: CurveFacts(effective=False) for t in p.torsion.elements()}
    v = catanese_criterion(p, data)
    assert v.embedding is True and v.level is Level.EMBEDDING


def test_catanese_witness():
    p = get_plane("generic")
    data = {t.coords: CurveFacts(effective=False) for t in p.torsion.elements()}
    data[(0, 0)] = CurveFacts(True, DimInterval.exactly(1), DimInterval())
    v = catanese_criterion(p, data)
    assert v.embedding is False
    assert v.witnesses == [p.cls(1)]


def test_catanese_no_sections_on_curve():
    p = get_plane("generic")
    data = {t.coords: CurveFacts(effective=False) for t in p.torsion.elements()}
    data[(1, 3)] = CurveFacts(True, DimInterval.exactly(0), DimInterval())
    assert catanese_criterion(p, data).embedding is True


def test_catanese_missing_data_is_conditional():
    p = get_plane("generic")
    v = catanese_criterion(p, {})
    assert v.embedding is None
    assert v.level is Level.CONDITIONAL_EMBEDDING
    assert len(v.undetermined) == 8


def test_catanese_uses_engine_vanishing():
    p = get_plane("b6")
    facts, _ = _facts(p, [ax.a1(p)])
    v = catanese_criterion(p, {}, facts)
    assert v.embedding is True


def test_catanese_records_rr_step():
    p = get_plane("b4")
    v = catanese_criterion(p, {})
    rr = [s for s in v.derivation.steps if s.rule == "curve-rr"]
    assert rr and rr[0].output["chi"] == 0 and rr[0].output["genus"] == 3


def test_catanese_rejects_inconsistent_curve_data():
    p = get_plane("generic")
    data = {(0, 0): CurveFacts(True, DimInterval.exactly(1), DimInterval.exactly(2))}
    with pytest.raises(ValueError):
        catanese_criterion(p, data)

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fakeplanes.curves import (
    HurwitzSolution,
    Toledo,
    admissible_normalization_genera,
    arithmetic_genus,
    curve_chi,
    curve_serre_dual,
    hurwitz_solutions,
    toledo_check,
)


def hurwitz_bruteforce(p, g):
    """Every (g', r) in a generous box satisfying the relation."""
    return sorted((gq, r) for gq in range(0, g + 1) for r in range(0, 2 * g + 3)
                  if 2 * g - 2 == p * (2 * gq - 2) + (p - 1) * r)


@pytest.mark.parametrize("k,pa", [(1, 3), (2, 6), (3, 10)])
def test_arithmetic_genus(k, pa):
    assert arithmetic_genus(k) == pa
    assert 2 * pa - 2 == k * k + 3 * k


def test_arithmetic_genus_rejects_non_curves():
    with pytest.raises(ValueError):
        arithmetic_genus(0)


def test_curve_chi():
    assert curve_chi(2, 3) == 0
    assert curve_chi(0, 0) == 1


@given(st.integers(0, 50))
def test_canonical_degree_symmetry(g):
    assert curve_chi(2 * g - 2, g) == g - 1
    assert curve_serre_dual(0, g) == 2 * g - 2
    assert curve_serre_dual(2 * g - 2, g) == 0


@given(st.integers(-10, 60), st.integers(0, 30))
def test_riemann_roch_serre_antisymmetry(d, g):
    # chi(D) = -chi(K - D)
    assert curve_chi(d, g) == -curve_chi(curve_serre_dual(d, g), g)


def test_serre_dual_example():
    assert curve_serre_dual(2, 3) == 2


@pytest.mark.parametrize("p,g,expected", [(7, 6, [(0, 4)]), (7, 3, [(0, 3)]), (7, 2, [])])
def test_hurwitz_examples(p, g, expected):
    got = [(s.quotient_genus, s.fixed_points) for s in hurwitz_solutions(p, g)]
    assert got == expected == hurwitz_bruteforce(p, g)


@given(st.sampled_from([2, 3, 5, 7, 11, 13]), st.integers(0, 40))
def test_hurwitz_against_bruteforce(p, g):
    got = [(s.quotient_genus, s.fixed_points) for s in hurwitz_solutions(p, g)]
    assert got == hurwitz_bruteforce(p, g)
    assert all(HurwitzSolution(*s).satisfies(p, g) for s in got)


def test_hurwitz_needs_prime():
    with pytest.raises(ValueError):
        hurwitz_solutions(6, 3)


def test_admissible_genera():
    assert admissible_normalization_genera(7, 6) == [3, 4]
    assert admissible_normalization_genera(7, 6, kra_axiom=True) == [3]
    assert admissible_normalization_genera(7, 3) == []
    oracle = [g for g in range(2, 6) if hurwitz_bruteforce(7, g)]
    assert oracle == [3, 4]


@pytest.mark.parametrize("kc,g,verdict", [(6, 3, Toledo.EQUALITY_GEODESIC),
                                          (3, 3, Toledo.STRICT),
                                          (7, 3, Toledo.VIOLATION)])
def test_toledo(kc, g, verdict):
    assert toledo_check(kc, g) is verdict


def test_toledo_needs_hyperbolic_normalization():
    with pytest.raises(ValueError):
        toledo_check(3, 1)

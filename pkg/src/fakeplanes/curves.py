"""Curve-level arithmetic: adjunction genus, Riemann-Roch on curves,
Riemann-Hurwitz for prime-order automorphisms and the Toledo bound."""

from __future__ import annotations

import enum
from dataclasses import dataclass

# A ball quotient contains no rational or elliptic curves, so normalizations
# of curves on it have genus at least 2.
MIN_HYPERBOLIC_GENUS = 2


def arithmetic_genus(k: int) -> int:
    """``p_a`` of a curve numerically ``k L1``: ``2p_a - 2 = C^2 + K.C = k^2 + 3k``."""
    if k < 1:
        raise ValueError("curve classes have k >= 1")
    return (k * k + 3 * k + 2) // 2


def curve_chi(d: int, g: int) -> int:
    if g < 0:
        raise ValueError("genus must be nonnegative")
    return d + 1 - g


def curve_serre_dual(d: int, g: int) -> int:
    """Degree of ``K_C - D``."""
    return 2 * g - 2 - d


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % q for q in range(2, int(p ** 0.5) + 1))


@dataclass(frozen=True, order=True)
class HurwitzSolution:
    quotient_genus: int
    fixed_points: int

    def satisfies(self, p: int, g: int) -> bool:
        return 2 * g - 2 == p * (2 * self.quotient_genus - 2) + (p - 1) * self.fixed_points


def hurwitz_solutions(p: int, g: int) -> list[HurwitzSolution]:
    """All ``(g', r)`` with ``2g - 2 = p(2g' - 2) + (p - 1) r``, ``g', r >= 0``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if g < 0:
        raise ValueError("genus must be nonnegative")
    out = []
    gq = 0
    while p * (2 * gq - 2) <= 2 * g - 2:
        rest = 2 * g - 2 - p * (2 * gq - 2)
        if rest % (p - 1) == 0:
            out.append(HurwitzSolution(gq, rest // (p - 1)))
        gq += 1
    return out


def admissible_normalization_genera(p: int, g_upper: int, kra_axiom: bool = False) -> list[int]:
    """Genera ``2 <= g < g_upper`` carrying an order-``p`` automorphism.

    ``kra_axiom`` applies the external exclusion recorded as axiom A-kra,
    which for ``p = 7`` below genus 6 leaves only genus 3.
    """
    out = [g for g in range(MIN_HYPERBOLIC_GENUS, g_upper) if hurwitz_solutions(p, g)]
    if kra_axiom:
        out = [g for g in out if (p, g) not in KRA_EXCLUDED]
    return out


# pairs (p, g) removed by axiom A-kra; taken from the cited classification, not derived
KRA_EXCLUDED = frozenset({(7, 4)})


class Toledo(enum.Enum):
    STRICT = "Strict"
    EQUALITY_GEODESIC = "EqualityGeodesic"
    VIOLATION = "Violation"


def toledo_check(K_dot_C: int, g_norm: int) -> Toledo:
    """Compare ``K.C`` with ``3(g - 1)`` for a curve whose normalization has genus ``g``."""
    if g_norm < MIN_HYPERBOLIC_GENUS:
        raise ValueError("the bound is stated for normalizations of genus >= 2")
    bound = 3 * (g_norm - 1)
    if K_dot_C < bound:
        return Toledo.STRICT
    if K_dot_C == bound:
        return Toledo.EQUALITY_GEODESIC
    return Toledo.VIOLATION

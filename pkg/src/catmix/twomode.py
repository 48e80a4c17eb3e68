"""Entropies of the two-mode even/odd cat mixture.

The mixture rho(1,2) = a |cat+><cat+| + b |cat-><cat-| of the orthogonal
even and odd cat states has joint entropy -a ln a - b ln b. Each reduced
state is rank 2 with the same spectral form as the one-mode mixture, with
the parameter

    D(a1, a2) = 1/4 (1 - exp(-4|a1|^2))
                [ (a/(1+E) + b/(1-E))^2
                  - exp(-4|a2|^2) (a/(1+E) - b/(1-E))^2 ],
    E = exp(-2|a1|^2 - 2|a2|^2),

for subsystem 1, and with the amplitudes swapped for subsystem 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateCatState, WeightViolation
from .replica import SpectralPair, binary_entropy, clamp_d, spectral_pair

WEIGHT_TOL = 1e-12

# Below this combined |alpha|^2 an odd cat is numerically degenerate; the
# limit is direction-dependent so no regularized value would be correct.
ODD_CAT_MIN_MOD2 = 1e-8


@dataclass(frozen=True)
class CatMixtureSpec:
    """Weights and amplitudes (a, b, alpha1, alpha2) of the cat mixture."""

    a: float
    b: float
    alpha1: complex
    alpha2: complex


@dataclass(frozen=True)
class SweepRow:
    """One point of the reduced-entropy sweep over |alpha1|."""

    ratio: float
    abs_alpha1: float
    entropy1: float


def validate_cat_mixture(spec: CatMixtureSpec) -> CatMixtureSpec:
    if spec.a < 0.0 or spec.b < 0.0:
        raise WeightViolation("weights must be non-negative")
    if abs(spec.a + spec.b - 1.0) > WEIGHT_TOL:
        raise WeightViolation("a + b = %.17g, must equal 1" % (spec.a + spec.b))
    mod2 = abs(complex(spec.alpha1)) ** 2 + abs(complex(spec.alpha2)) ** 2
    if spec.b > 0.0 and mod2 < ODD_CAT_MIN_MOD2:
        raise DegenerateCatState(
            "odd cat weight b = %g requires |alpha1|^2 + |alpha2|^2 > 0" % spec.b
        )
    return spec


def joint_entropy(spec: CatMixtureSpec) -> float:
    """Entropy of the bipartite mixture: -a ln a - b ln b (nats)."""
    validate_cat_mixture(spec)
    return binary_entropy(SpectralPair(max(spec.a, spec.b), min(spec.a, spec.b)))


def _d_cat_moduli(a: float, b: float, m1sq: float, m2sq: float) -> float:
    """D for subsystem 1 in terms of |alpha1|^2 and |alpha2|^2."""
    e = math.exp(-2.0 * (m1sq + m2sq))
    t_plus = a / (1.0 + e)
    # b multiplies the diverging factor; drop the term entirely at b = 0 so
    # the even-cat case is defined at zero amplitude.
    t_minus = b / (1.0 - e) if b > 0.0 else 0.0
    f1 = -math.expm1(-4.0 * m1sq)
    raw = 0.25 * f1 * (
        (t_plus + t_minus) ** 2 - math.exp(-4.0 * m2sq) * (t_plus - t_minus) ** 2
    )
    return clamp_d(raw)


def d_cat(spec: CatMixtureSpec) -> float:
    """Spectral parameter of the reduced state of mode 1, in [0, 1/4]."""
    validate_cat_mixture(spec)
    return _d_cat_moduli(
        spec.a, spec.b, abs(complex(spec.alpha1)) ** 2, abs(complex(spec.alpha2)) ** 2
    )


def reduced_entropy(spec: CatMixtureSpec, subsystem: int) -> float:
    """Entropy of the reduced state of subsystem 1 or 2, in nats."""
    validate_cat_mixture(spec)
    m1sq = abs(complex(spec.alpha1)) ** 2
    m2sq = abs(complex(spec.alpha2)) ** 2
    if subsystem == 1:
        d = _d_cat_moduli(spec.a, spec.b, m1sq, m2sq)
    elif subsystem == 2:
        d = _d_cat_moduli(spec.a, spec.b, m2sq, m1sq)
    else:
        raise ValueError("subsystem must be 1 or 2, got %r" % (subsystem,))
    return binary_entropy(spectral_pair(d))


def small_alpha_reduced_weights(spec: CatMixtureSpec) -> tuple[float, float]:
    """Weights (w0, w1) of the small-amplitude limit of the reduced state.

    w0 = a + b |alpha2|^2 / (|alpha1|^2 + |alpha2|^2),
    w1 = b |alpha1|^2 / (|alpha1|^2 + |alpha2|^2).
    """
    validate_cat_mixture(spec)
    m1sq = abs(complex(spec.alpha1)) ** 2
    m2sq = abs(complex(spec.alpha2)) ** 2
    total = m1sq + m2sq
    if total <= 0.0:
        if spec.b > 0.0:
            raise DegenerateCatState("limit undefined at alpha1 = alpha2 = 0")
        return 1.0, 0.0
    w1 = spec.b * m1sq / total
    return 1.0 - w1, w1


def small_alpha_entropy(spec: CatMixtureSpec) -> float:
    """Small-amplitude limit of the reduced entropy of subsystem 1."""
    w0, w1 = small_alpha_reduced_weights(spec)
    return binary_entropy(SpectralPair(max(w0, w1), min(w0, w1)))


DEFAULT_RATIOS = (0.5, 1.0, 2.0)
DEFAULT_GRID_MIN = 0.01
DEFAULT_GRID_MAX = 4.0
DEFAULT_GRID_POINTS = 200


def sweep_entropy(
    ratios: list[float], alpha1_grid: list[float], a: float, b: float
) -> list[SweepRow]:
    """Reduced entropy of mode 1 over a grid of real amplitudes.

    One row per (ratio, grid point) with alpha1 = g and alpha2 = ratio * g;
    output is ratio-major, grid-ascending. Raises DegenerateCatState at
    g = 0 with b > 0.
    """
    if any(r <= 0.0 for r in ratios):
        raise ValueError("ratios must be positive")
    if any(g < 0.0 for g in alpha1_grid):
        raise ValueError("grid values must be non-negative")
    rows = []
    for ratio in ratios:
        for g in sorted(alpha1_grid):
            spec = validate_cat_mixture(CatMixtureSpec(a, b, g, ratio * g))
            rows.append(SweepRow(ratio, g, reduced_entropy(spec, 1)))
    return rows


def default_grid(
    grid_min: float = DEFAULT_GRID_MIN,
    grid_max: float = DEFAULT_GRID_MAX,
    points: int = DEFAULT_GRID_POINTS,
) -> list[float]:
    """Uniform |alpha1| grid used by the entropy sweep."""
    if points < 1:
        raise ValueError("points must be >= 1")
    if points == 1:
        return [grid_min]
    step = (grid_max - grid_min) / (points - 1)
    return [grid_min + i * step for i in range(points)]

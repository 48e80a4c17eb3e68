"""Purity parameters and the bipartite purity inequality.

For any bipartite state, 1 + mu(1,2) >= mu(1) + mu(2) where mu = Tr rho^2.
Two cases are covered in closed form: the separable two-branch coherent
mixture a|a1,a2><a1,a2| + b|-a1,-a2><-a1,-a2|, and the symmetrized mixture
of a coherent state with a thermal state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidTemperature, WeightViolation

WEIGHT_TOL = 1e-12


@dataclass(frozen=True)
class PurityTriple:
    """Purities of the joint state and of the two reduced states."""

    mu12: float
    mu1: float
    mu2: float

    def gap(self) -> float:
        """Left-hand side 1 + mu12 - mu1 - mu2 of the purity inequality."""
        return 1.0 + self.mu12 - self.mu1 - self.mu2


@dataclass(frozen=True)
class CatSeparableSpec:
    """Weights and amplitudes of the separable two-branch mixture."""

    a: float
    b: float
    alpha1: complex
    alpha2: complex


@dataclass(frozen=True)
class ThermalMixtureSpec:
    """Coherent amplitudes and mean photon number of the thermal mixture."""

    alpha1: complex
    alpha2: complex
    mean_photons: float


def _check_weights(a: float, b: float) -> None:
    if a < 0.0 or b < 0.0 or abs(a + b - 1.0) > WEIGHT_TOL:
        raise WeightViolation("need a, b >= 0 with a + b = 1; got a=%g, b=%g" % (a, b))


def thermal_mean_photon(temperature: float) -> float:
    """Mean photon number N = 1 / (e^(1/T) - 1) of a thermal state."""
    if temperature <= 0.0:
        raise InvalidTemperature("temperature must be > 0, got %g" % temperature)
    x = 1.0 / temperature
    if x > 745.0:  # exp overflow; N underflows to 0
        return 0.0
    return 1.0 / math.expm1(x)


def thermal_coherent_overlap(alpha: complex, mean_photons: float) -> float:
    """q = <alpha| rho_T |alpha> = exp(-|alpha|^2/(1+N)) / (1+N)."""
    if mean_photons < 0.0 or not math.isfinite(mean_photons):
        raise ValueError("mean photon number must be finite and >= 0")
    n1 = 1.0 + mean_photons
    return math.exp(-abs(complex(alpha)) ** 2 / n1) / n1


def thermal_purity(mean_photons: float) -> float:
    """Tr rho_T^2 = 1/(1+2N) from the geometric photon-number spectrum."""
    if mean_photons < 0.0:
        raise ValueError("mean photon number must be >= 0")
    return 1.0 / (1.0 + 2.0 * mean_photons)


def purity_triple_cat(spec: CatSeparableSpec) -> PurityTriple:
    """Closed-form purities of the separable two-branch mixture.

    mu12 = a^2 + b^2 + 2ab exp(-4|a1|^2 - 4|a2|^2),
    mu_i = a^2 + b^2 + 2ab exp(-4|a_i|^2).
    """
    _check_weights(spec.a, spec.b)
    m1sq = abs(complex(spec.alpha1)) ** 2
    m2sq = abs(complex(spec.alpha2)) ** 2
    sq = spec.a**2 + spec.b**2
    cross = 2.0 * spec.a * spec.b
    return PurityTriple(
        mu12=sq + cross * math.exp(-4.0 * (m1sq + m2sq)),
        mu1=sq + cross * math.exp(-4.0 * m1sq),
        mu2=sq + cross * math.exp(-4.0 * m2sq),
    )


def purity_gap_cat(spec: CatSeparableSpec) -> float:
    """Inequality gap 2ab (1 - exp(-4|a1|^2)) (1 - exp(-4|a2|^2)) >= 0."""
    _check_weights(spec.a, spec.b)
    f1 = -math.expm1(-4.0 * abs(complex(spec.alpha1)) ** 2)
    f2 = -math.expm1(-4.0 * abs(complex(spec.alpha2)) ** 2)
    return 2.0 * spec.a * spec.b * f1 * f2


def purity_triple_thermal(spec: ThermalMixtureSpec) -> PurityTriple:
    """Purities of the coherent/thermal mixture.

    With t = Tr rho_T^2 and q_i the coherent-thermal overlaps:
    mu12 = (2t + 2 q1 q2)/4, mu_i = (1 + 2 q_i + t)/4. The thermal purity
    cancels from the inequality gap.
    """
    t = thermal_purity(spec.mean_photons)
    q1 = thermal_coherent_overlap(spec.alpha1, spec.mean_photons)
    q2 = thermal_coherent_overlap(spec.alpha2, spec.mean_photons)
    return PurityTriple(
        mu12=0.25 * (2.0 * t + 2.0 * q1 * q2),
        mu1=0.25 * (1.0 + 2.0 * q1 + t),
        mu2=0.25 * (1.0 + 2.0 * q2 + t),
    )


def purity_gap_thermal(spec: ThermalMixtureSpec) -> float:
    """Inequality gap (1 - q1)(1 - q2)/2 >= 0 for the thermal mixture."""
    q1 = thermal_coherent_overlap(spec.alpha1, spec.mean_photons)
    q2 = thermal_coherent_overlap(spec.alpha2, spec.mean_photons)
    return 0.5 * (1.0 - q1) * (1.0 - q2)

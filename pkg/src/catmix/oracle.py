"""Closed-form vs brute-force comparison: state assembly and case suites.

Every state treated in closed form elsewhere is rebuilt here as an explicit
truncated-Fock matrix, and its entropy or purity is recomputed from the
spectrum or the matrix. The predefined suites drive both the test suite and
the `oracle-compare` CLI subcommand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .coherent import CatSign, TwoStateMixtureSpec, normalized_mixture
from .fock import (
    FockDensityMatrix,
    FockVector,
    assemble_mixture,
    choose_cutoff,
    coherent_fock,
    entropy_from_spectrum,
    hermitian_eigenvalues,
    partial_trace,
    purity_from_matrix,
    tensor_product,
    thermal_fock,
)
from .purity import (
    CatSeparableSpec,
    PurityTriple,
    ThermalMixtureSpec,
    purity_gap_cat,
    purity_gap_thermal,
)
from .replica import entropy_closed
from .twomode import CatMixtureSpec, joint_entropy, reduced_entropy

DEFAULT_TAIL_TOL = 1e-12
DEFAULT_COMPARE_TOL = 1e-8

# The truncated thermal state's trace deficit enters the reduced purities
# linearly, so the inequality gap inherits an error of roughly 1.3x the
# geometric tail. This target keeps that below 5e-9 while the per-mode
# cutoff stays at or below 48 for N <= 2.
THERMAL_GEOMETRIC_TAIL = 4e-9


def fock_entropy(rho: FockDensityMatrix) -> float:
    """Entropy from the full Jacobi spectrum of an assembled matrix."""
    return entropy_from_spectrum(hermitian_eigenvalues(rho))


def two_state_fock(spec: TwoStateMixtureSpec, cutoff: int | None = None) -> FockDensityMatrix:
    """Assemble the rank-2 coherent mixture as a one-mode matrix."""
    if cutoff is None:
        cutoff = choose_cutoff(
            max(abs(complex(spec.alpha)), abs(complex(spec.beta))), 0.0, DEFAULT_TAIL_TOL
        )
    va = coherent_fock(spec.alpha, cutoff)
    vb = coherent_fock(spec.beta, cutoff)
    c = complex(spec.c)
    return assemble_mixture(
        [(spec.a, va, va), (c, va, vb), (c.conjugate(), vb, va), (spec.b, vb, vb)]
    )


def cat_state_fock(
    sign: CatSign, alpha1: complex, alpha2: complex, cutoff1: int, cutoff2: int
) -> FockVector:
    """Two-mode cat superposition, normalized numerically."""
    plus = tensor_product(coherent_fock(alpha1, cutoff1), coherent_fock(alpha2, cutoff2))
    minus = tensor_product(
        coherent_fock(-alpha1, cutoff1), coherent_fock(-alpha2, cutoff2)
    )
    if sign is CatSign.PLUS:
        amps = plus.amplitudes + minus.amplitudes
    else:
        amps = plus.amplitudes - minus.amplitudes
    norm = float(np.linalg.norm(amps))
    if norm <= 0.0:
        raise ValueError("cat superposition vanished at zero amplitude")
    amps = amps / norm
    return FockVector(len(amps), amps, 0.0, plus.mode_dims)


def cat_mode_cutoffs(
    spec: CatMixtureSpec, tail_tol: float = DEFAULT_TAIL_TOL
) -> tuple[int, int]:
    """Per-mode cutoffs adequate for both cat branches."""
    return (
        choose_cutoff(abs(complex(spec.alpha1)), 0.0, tail_tol),
        choose_cutoff(abs(complex(spec.alpha2)), 0.0, tail_tol),
    )


def cat_mixture_fock(
    spec: CatMixtureSpec, cutoffs: tuple[int, int] | None = None
) -> FockDensityMatrix:
    """Assemble the even/odd cat mixture as a two-mode matrix."""
    if cutoffs is None:
        cutoffs = cat_mode_cutoffs(spec)
    c1, c2 = cutoffs
    terms = []
    if spec.a > 0.0:
        vp = cat_state_fock(CatSign.PLUS, spec.alpha1, spec.alpha2, c1, c2)
        terms.append((spec.a, vp, vp))
    if spec.b > 0.0:
        vm = cat_state_fock(CatSign.MINUS, spec.alpha1, spec.alpha2, c1, c2)
        terms.append((spec.b, vm, vm))
    return assemble_mixture(terms)


def cat_reduced_entropy_fock(
    spec: CatMixtureSpec, subsystem: int, cutoffs: tuple[int, int] | None = None
) -> float:
    """Reduced entropy of one mode by partial trace and diagonalization."""
    rho = cat_mixture_fock(spec, cutoffs)
    return fock_entropy(partial_trace(rho, subsystem))


def cat_separable_fock(
    spec: CatSeparableSpec, cutoffs: tuple[int, int] | None = None
) -> FockDensityMatrix:
    """Assemble the separable two-branch mixture as a two-mode matrix."""
    if cutoffs is None:
        cutoffs = (
            choose_cutoff(abs(complex(spec.alpha1)), 0.0, DEFAULT_TAIL_TOL),
            choose_cutoff(abs(complex(spec.alpha2)), 0.0, DEFAULT_TAIL_TOL),
        )
    c1, c2 = cutoffs
    vp = tensor_product(coherent_fock(spec.alpha1, c1), coherent_fock(spec.alpha2, c2))
    vm = tensor_product(coherent_fock(-spec.alpha1, c1), coherent_fock(-spec.alpha2, c2))
    return assemble_mixture([(spec.a, vp, vp), (spec.b, vm, vm)])


def thermal_mixture_cutoff(spec: ThermalMixtureSpec) -> int:
    """Per-mode cutoff for the coherent/thermal mixture oracle."""
    max_abs = max(abs(complex(spec.alpha1)), abs(complex(spec.alpha2)))
    poisson = choose_cutoff(max_abs, 0.0, DEFAULT_TAIL_TOL)
    geometric = choose_cutoff(0.0, spec.mean_photons, THERMAL_GEOMETRIC_TAIL)
    return max(poisson, geometric)


def thermal_mixture_fock(
    spec: ThermalMixtureSpec, cutoff: int | None = None
) -> FockDensityMatrix:
    """Assemble the symmetrized coherent/thermal mixture, two modes."""
    if cutoff is None:
        cutoff = thermal_mixture_cutoff(spec)
    v1 = coherent_fock(spec.alpha1, cutoff)
    v2 = coherent_fock(spec.alpha2, cutoff)
    p1 = np.outer(v1.amplitudes, v1.amplitudes.conjugate())
    p2 = np.outer(v2.amplitudes, v2.amplitudes.conjugate())
    t = thermal_fock(spec.mean_photons, cutoff).entries
    entries = 0.5 * np.kron(p1, t) + 0.5 * np.kron(t, p2)
    return FockDensityMatrix(entries, mode_dims=(cutoff, cutoff))


def purity_triple_fock(rho: FockDensityMatrix) -> PurityTriple:
    """Joint and reduced purities straight from the matrix."""
    return PurityTriple(
        mu12=purity_from_matrix(rho),
        mu1=purity_from_matrix(partial_trace(rho, 1)),
        mu2=purity_from_matrix(partial_trace(rho, 2)),
    )


# --------------------------------------------------------------------------
# Comparison suites
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ComparisonCase:
    """One closed-form value next to its brute-force recomputation."""

    quantity: str
    inputs: dict
    value: float
    oracle_value: float

    @property
    def abs_diff(self) -> float:
        return abs(self.value - self.oracle_value)


def random_two_state_specs(
    count: int, max_abs: float = 3.0, seed: int = 20090531
) -> list[TwoStateMixtureSpec]:
    """Deterministic random valid mixtures with |alpha|, |beta| <= max_abs.

    Weights are drawn with |c|^2 <= ab and renormalized to unit trace,
    which preserves positivity.
    """
    rng = np.random.default_rng(seed)
    specs = []
    for _ in range(count):
        alpha = complex(*rng.uniform(-max_abs / math.sqrt(2), max_abs / math.sqrt(2), 2))
        beta = complex(*rng.uniform(-max_abs / math.sqrt(2), max_abs / math.sqrt(2), 2))
        a = float(rng.uniform(0.05, 1.0))
        b = float(rng.uniform(0.05, 1.0))
        c = (
            float(rng.uniform(0.0, 1.0))
            * math.sqrt(a * b)
            * np.exp(1j * rng.uniform(0.0, 2.0 * math.pi))
        )
        specs.append(normalized_mixture(a, b, complex(c), alpha, beta))
    return specs


def one_mode_cases(specs: list[TwoStateMixtureSpec]) -> list[ComparisonCase]:
    cases = []
    for spec in specs:
        cases.append(
            ComparisonCase(
                quantity="entropy_two_state",
                inputs={
                    "a": spec.a,
                    "b": spec.b,
                    "c_re": spec.c.real,
                    "c_im": spec.c.imag,
                    "alpha_re": complex(spec.alpha).real,
                    "alpha_im": complex(spec.alpha).imag,
                    "beta_re": complex(spec.beta).real,
                    "beta_im": complex(spec.beta).imag,
                },
                value=entropy_closed(spec),
                oracle_value=fock_entropy(two_state_fock(spec)),
            )
        )
    return cases


def reduced_entropy_cases(
    grid: list[tuple[float, float, float]], subsystems: tuple[int, ...] = (1,)
) -> list[ComparisonCase]:
    """Cases over (abs_alpha1, ratio, a) triples; alpha2 = ratio * alpha1."""
    cases = []
    for abs_a1, ratio, a in grid:
        spec = CatMixtureSpec(a, 1.0 - a, abs_a1, ratio * abs_a1)
        cutoffs = cat_mode_cutoffs(spec)
        for sub in subsystems:
            cases.append(
                ComparisonCase(
                    quantity="reduced_entropy_cat",
                    inputs={
                        "abs_alpha1": abs_a1,
                        "ratio": ratio,
                        "a": a,
                        "subsystem": sub,
                    },
                    value=reduced_entropy(spec, sub),
                    oracle_value=cat_reduced_entropy_fock(spec, sub, cutoffs),
                )
            )
    return cases


def joint_entropy_cases(weights: list[float]) -> list[ComparisonCase]:
    cases = []
    for a in weights:
        spec = CatMixtureSpec(a, 1.0 - a, 1.0, 1.0)
        cases.append(
            ComparisonCase(
                quantity="joint_entropy_cat",
                inputs={"a": a, "abs_alpha1": 1.0, "abs_alpha2": 1.0},
                value=joint_entropy(spec),
                oracle_value=fock_entropy(cat_mixture_fock(spec)),
            )
        )
    return cases


def purity_cat_cases(
    grid: list[tuple[float, float, float]]
) -> list[ComparisonCase]:
    """Cases over (a, abs_alpha1, abs_alpha2)."""
    cases = []
    for a, m1, m2 in grid:
        spec = CatSeparableSpec(a, 1.0 - a, m1, m2)
        triple = purity_triple_fock(cat_separable_fock(spec))
        cases.append(
            ComparisonCase(
                quantity="purity_gap_cat",
                inputs={"a": a, "abs_alpha1": m1, "abs_alpha2": m2},
                value=purity_gap_cat(spec),
                oracle_value=triple.gap(),
            )
        )
    return cases


def purity_thermal_cases(
    grid: list[tuple[float, float, float]]
) -> list[ComparisonCase]:
    """Cases over (mean_photons, abs_alpha1, abs_alpha2)."""
    cases = []
    for n, m1, m2 in grid:
        spec = ThermalMixtureSpec(m1, m2, n)
        triple = purity_triple_fock(thermal_mixture_fock(spec))
        cases.append(
            ComparisonCase(
                quantity="purity_gap_thermal",
                inputs={"mean_photons": n, "abs_alpha1": m1, "abs_alpha2": m2},
                value=purity_gap_thermal(spec),
                oracle_value=triple.gap(),
            )
        )
    return cases


QUICK_REDUCED_GRID = [
    (0.5, 1.0, 0.5),
    (1.0, 0.5, 0.5),
    (1.0, 2.0, 0.2),
    (2.0, 1.0, 0.8),
    (0.25, 2.0, 0.5),
    (1.0, 1.0, 0.3),
]

FULL_REDUCED_GRID = [
    (m1, ratio, a)
    for m1 in (0.25, 0.5, 1.0, 2.0)
    for ratio in (0.5, 1.0, 2.0)
    for a in (0.2, 0.5, 0.8)
]

FULL_PURITY_CAT_GRID = [
    (a, m1, m2)
    for a in (0.2, 0.5, 0.8)
    for m1 in (0.0, 0.5, 1.0, 2.0)
    for m2 in (0.0, 0.5, 1.0, 2.0)
]

FULL_PURITY_THERMAL_GRID = [
    (n, m, m) for n in (0.0, 0.5, 1.0, 2.0) for m in (0.0, 0.5, 1.0, 2.0)
]


def suite_cases(suite: str) -> list[ComparisonCase]:
    """Predefined comparison grids: 'quick' (>= 20) or 'full' (>= 150)."""
    if suite == "quick":
        cases = one_mode_cases(random_two_state_specs(10, max_abs=2.0))
        cases += reduced_entropy_cases(QUICK_REDUCED_GRID)
        cases += joint_entropy_cases([0.5])
        cases += purity_cat_cases(
            [(0.5, 1.0, 1.0), (0.2, 0.5, 2.0), (0.8, 1.0, 0.0), (0.5, 2.0, 0.5)]
        )
        cases += purity_thermal_cases(
            [(0.0, 0.5, 0.5), (1.0, 1.0, 1.0), (1.0, 0.0, 1.0), (0.5, 2.0, 0.5)]
        )
        return cases
    if suite == "full":
        cases = one_mode_cases(random_two_state_specs(50, max_abs=3.0))
        cases += reduced_entropy_cases(FULL_REDUCED_GRID)
        cases += reduced_entropy_cases(QUICK_REDUCED_GRID, subsystems=(2,))
        cases += joint_entropy_cases([0.3, 0.5, 0.9])
        cases += purity_cat_cases(FULL_PURITY_CAT_GRID)
        cases += purity_thermal_cases(FULL_PURITY_THERMAL_GRID)
        return cases
    raise ValueError("suite must be 'quick' or 'full', got %r" % (suite,))

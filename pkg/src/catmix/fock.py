"""Truncated Fock-space brute force: the independent verification path.

Everything here works on explicit photon-number-basis vectors and matrices
so it shares no formulas with the closed-form modules. Coherent amplitudes
use the multiplicative recurrence c_n = c_{n-1} alpha / sqrt(n), never
factorials. Mode 1 is the slow (row-major outer) index of two-mode objects.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    CutoffExceeded,
    HermiticityViolation,
    ModeCountMismatch,
    NegativeEigenvalue,
)
from .jacobi import jacobi_eigenvalues

CUTOFF_CAP = 256
HERMITICITY_TOL = 1e-13
EIG_CLAMP = 1e-10


@dataclass(frozen=True)
class FockVector:
    """Truncated state vector with its norm deficit 1 - sum |c_n|^2."""

    cutoff: int
    amplitudes: np.ndarray
    deficit: float
    mode_dims: tuple[int, ...] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.mode_dims is None:
            object.__setattr__(self, "mode_dims", (self.cutoff,))


@dataclass(frozen=True)
class FockDensityMatrix:
    """Dense Hermitian matrix over one or two truncated modes."""

    entries: np.ndarray
    mode_dims: tuple[int, ...]

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def trace(self) -> float:
        return float(np.trace(self.entries).real)


def choose_cutoff(max_abs_alpha: float, mean_photons: float, tail_tol: float) -> int:
    """Smallest per-mode cutoff with Poisson and geometric tails < tail_tol.

    The Poisson tail uses mu = max|alpha|^2 and the geometric tail the ratio
    N/(1+N). Capped at 256; beyond that amplitudes are too large for
    desk-scale verification.
    """
    if tail_tol <= 0.0:
        raise ValueError("tail tolerance must be > 0")
    mu = max_abs_alpha**2
    ratio = mean_photons / (1.0 + mean_photons) if mean_photons > 0.0 else 0.0
    term = math.exp(-mu)
    cum = term
    for cutoff in range(1, CUTOFF_CAP + 1):
        poisson_tail = max(1.0 - cum, 0.0)
        geometric_tail = ratio**cutoff if ratio > 0.0 else 0.0
        if poisson_tail < tail_tol and geometric_tail < tail_tol:
            return cutoff
        term *= mu / cutoff
        cum += term
    raise CutoffExceeded(
        "no cutoff <= %d reaches tail %g for |alpha| = %g, N = %g"
        % (CUTOFF_CAP, tail_tol, max_abs_alpha, mean_photons)
    )


def coherent_fock(alpha: complex, cutoff: int) -> FockVector:
    """Truncated coherent state, c_n = exp(-|alpha|^2/2) alpha^n / sqrt(n!)."""
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    alpha = complex(alpha)
    amps = np.zeros(cutoff, dtype=np.complex128)
    amps[0] = math.exp(-0.5 * abs(alpha) ** 2)
    for n in range(1, cutoff):
        amps[n] = amps[n - 1] * alpha / math.sqrt(n)
    deficit = max(1.0 - float(np.vdot(amps, amps).real), 0.0)
    return FockVector(cutoff, amps, deficit)


def thermal_fock(mean_photons: float, cutoff: int) -> FockDensityMatrix:
    """Diagonal thermal state, p_n = N^n / (1+N)^(n+1)."""
    if mean_photons < 0.0:
        raise ValueError("mean photon number must be >= 0")
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    n1 = 1.0 + mean_photons
    probs = np.empty(cutoff)
    probs[0] = 1.0 / n1
    for n in range(1, cutoff):
        probs[n] = probs[n - 1] * (mean_photons / n1)
    return FockDensityMatrix(
        np.diag(probs).astype(np.complex128), mode_dims=(cutoff,)
    )


def assemble_mixture(
    terms: list[tuple[complex, FockVector, FockVector]]
) -> FockDensityMatrix:
    """Sum of weighted outer products w |ket><bra|, symmetrized.

    The weighted sum must already be Hermitian (cross terms paired with
    their conjugates); asymmetry beyond 1e-13 raises HermiticityViolation.
    """
    if not terms:
        raise ValueError("need at least one term")
    mode_dims = terms[0][1].mode_dims
    dim = terms[0][1].cutoff
    m = np.zeros((dim, dim), dtype=np.complex128)
    for weight, ket, bra in terms:
        if ket.cutoff != dim or bra.cutoff != dim:
            raise ValueError("all terms must share one truncated space")
        m += complex(weight) * np.outer(ket.amplitudes, bra.amplitudes.conjugate())
    asym = float(np.max(np.abs(m - m.conjugate().T)))
    if asym > HERMITICITY_TOL:
        raise HermiticityViolation("assembled matrix asymmetry %.3e" % asym)
    return FockDensityMatrix((m + m.conjugate().T) / 2.0, mode_dims=mode_dims)


def tensor_product(a, b):
    """Kronecker product of two vectors or two matrices; mode 1 is a."""
    if isinstance(a, FockVector) and isinstance(b, FockVector):
        amps = np.kron(a.amplitudes, b.amplitudes)
        deficit = max(1.0 - float(np.vdot(amps, amps).real), 0.0)
        return FockVector(
            a.cutoff * b.cutoff, amps, deficit, a.mode_dims + b.mode_dims
        )
    if isinstance(a, FockDensityMatrix) and isinstance(b, FockDensityMatrix):
        return FockDensityMatrix(
            np.kron(a.entries, b.entries), a.mode_dims + b.mode_dims
        )
    raise TypeError("operands must be two FockVectors or two FockDensityMatrices")


def partial_trace(rho: FockDensityMatrix, keep: int) -> FockDensityMatrix:
    """Trace out the other mode of a two-mode matrix; keep is 1 or 2."""
    if len(rho.mode_dims) != 2:
        raise ModeCountMismatch(
            "partial trace needs exactly 2 modes, got %d" % len(rho.mode_dims)
        )
    d1, d2 = rho.mode_dims
    blocks = rho.entries.reshape(d1, d2, d1, d2)
    if keep == 1:
        reduced = np.einsum("ijkj->ik", blocks)
        dims = (d1,)
    elif keep == 2:
        reduced = np.einsum("ijil->jl", blocks)
        dims = (d2,)
    else:
        raise ValueError("keep must be 1 or 2, got %r" % (keep,))
    return FockDensityMatrix(np.ascontiguousarray(reduced), mode_dims=dims)


def hermitian_eigenvalues(rho: FockDensityMatrix) -> np.ndarray:
    """Full real spectrum of the matrix, descending (cyclic Jacobi)."""
    return jacobi_eigenvalues(rho.entries)


def entropy_from_spectrum(eigs) -> float:
    """-sum lambda ln lambda over the spectrum, 0 ln 0 = 0, in nats.

    Eigenvalues in [-1e-10, 0) are clamped to 0 as roundoff; anything more
    negative signals an assembly bug and raises NegativeEigenvalue.
    """
    s = 0.0
    for lam in np.asarray(eigs, dtype=np.float64):
        if lam < -EIG_CLAMP:
            raise NegativeEigenvalue("eigenvalue %.3e below -%g" % (lam, EIG_CLAMP))
        if lam > 0.0:
            s -= lam * math.log(lam)
    return s


def purity_from_matrix(rho: FockDensityMatrix) -> float:
    """Tr rho^2 = sum |entries|^2 for Hermitian rho."""
    return float(np.vdot(rho.entries, rho.entries).real)

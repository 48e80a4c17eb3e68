"""Replica-method entropy of a rank-2 coherent mixture.

The mixture rho = a|alpha><alpha| + c|alpha><beta| + c*|beta><alpha|
+ b|beta><beta| has exactly two nonzero eigenvalues. Tr rho^n equals the
trace of the n-th power of a 2x2 transfer matrix, which gives both an
integer-n recurrence and the closed-form spectrum

    lambda_{1,2} = (1 +- sqrt(1 - 4 D)) / 2,
    D = (ab - |c|^2) (1 - exp(-|alpha - beta|^2)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .coherent import TwoStateMixtureSpec, overlap
from .errors import ClampExceeded

D_CLAMP_TOL = 1e-9

FD_STEP_DEFAULT = 1e-5
FD_STEP_MAX = 1e-3


@dataclass(frozen=True)
class SpectralPair:
    """The two nonzero eigenvalues of a rank-2 unit-trace mixture."""

    lambda1: float
    lambda2: float


def clamp_d(raw: float) -> float:
    """Clamp a spectral parameter into [0, 1/4], rejecting gross excursions.

    Floating-point cancellation can push the exact-zero and exact-1/4 cases
    marginally outside; anything beyond 1e-9 means an invalid spec slipped
    through validation.
    """
    if raw < -D_CLAMP_TOL or raw > 0.25 + D_CLAMP_TOL:
        raise ClampExceeded("D = %.17g outside [0, 1/4]" % raw)
    return min(max(raw, 0.0), 0.25)


def d_parameter(spec: TwoStateMixtureSpec) -> float:
    """D = (ab - |c|^2) (1 - exp(-|alpha - beta|^2)), clamped to [0, 1/4]."""
    sep2 = abs(spec.alpha - spec.beta) ** 2
    return clamp_d((spec.a * spec.b - abs(spec.c) ** 2) * (-math.expm1(-sep2)))


def spectral_pair(d: float) -> SpectralPair:
    """Eigenvalues (1 +- sqrt(1 - 4d)) / 2 of the rank-2 mixture."""
    root = math.sqrt(max(1.0 - 4.0 * d, 0.0))
    return SpectralPair((1.0 + root) / 2.0, (1.0 - root) / 2.0)


def transfer_matrix(spec: TwoStateMixtureSpec):
    """The 2x2 matrix whose n-th power's trace equals Tr rho^n.

    Returns the four entries ((m11, m12), (m21, m22)) as complex numbers.
    """
    s = overlap(spec.alpha, spec.beta)  # <beta|alpha>
    sc = s.conjugate()  # <alpha|beta>
    c = complex(spec.c)
    return (
        (spec.a + c.conjugate() * sc, spec.a * s + c.conjugate()),
        (c + spec.b * sc, c * s + spec.b),
    )


def trace_power_recurrence(spec: TwoStateMixtureSpec, n: int) -> float:
    """Tr rho^n for integer n >= 1 by repeated 2x2 multiplication.

    No eigendecomposition is used; this is the independent integer-n route
    against which the spectral continuation is checked.
    """
    if n < 1:
        raise ValueError("n must be a positive integer, got %r" % (n,))
    (m11, m12), (m21, m22) = transfer_matrix(spec)
    p11, p12, p21, p22 = m11, m12, m21, m22
    for _ in range(n - 1):
        p11, p12, p21, p22 = (
            p11 * m11 + p12 * m21,
            p11 * m12 + p12 * m22,
            p21 * m11 + p22 * m21,
            p21 * m12 + p22 * m22,
        )
    return (p11 + p22).real


def trace_power_spectral(pair: SpectralPair, n: float) -> float:
    """lambda1^n + lambda2^n for real n > 0, with 0^n = 0.

    The replica limit evaluates this just below n = 1, so the whole
    continuation domain (0, inf) is accepted.
    """
    if n <= 0.0:
        raise ValueError("n must be > 0, got %g" % n)

    def powr(lam: float) -> float:
        return 0.0 if lam == 0.0 else lam**n

    return powr(pair.lambda1) + powr(pair.lambda2)


def replica_entropy(spec: TwoStateMixtureSpec, step: float = FD_STEP_DEFAULT) -> float:
    """Entropy as the replica limit -d/dn Tr rho^n at n = 1.

    Realized as a central finite difference of the spectral continuation;
    for lambda2 = 0 the one-sided forward difference at n = 1 is used.
    """
    if not 0.0 < step <= FD_STEP_MAX:
        raise ValueError("step must be in (0, 1e-3], got %g" % step)
    pair = spectral_pair(d_parameter(spec))
    if pair.lambda2 == 0.0:
        return -(trace_power_spectral(pair, 1.0 + step) - 1.0) / step
    return -(
        trace_power_spectral(pair, 1.0 + step)
        - trace_power_spectral(pair, 1.0 - step)
    ) / (2.0 * step)


def binary_entropy(pair: SpectralPair) -> float:
    """-lambda1 ln lambda1 - lambda2 ln lambda2 in nats, with 0 ln 0 = 0."""
    s = 0.0
    for lam in (pair.lambda1, pair.lambda2):
        if lam > 0.0:
            s -= lam * math.log(lam)
    return s


def entropy_closed(spec: TwoStateMixtureSpec) -> float:
    """Closed-form von Neumann entropy of the mixture, in nats."""
    return binary_entropy(spectral_pair(d_parameter(spec)))

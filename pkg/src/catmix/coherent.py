"""Coherent-state algebra: overlaps, mixture validation, cat normalization.

Amplitudes are plain Python/numpy complex numbers (dimensionless field
amplitudes). All functions are pure and thread-safe.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from .errors import DegenerateCatState, NegativityViolation, TraceViolation

TRACE_TOL = 1e-12
NEGATIVITY_TOL = 1e-12

# exp() of anything at or below this underflows to exactly 0.0; downstream
# formulas are continuous at overlap = 0 so that is acceptable.
_EXP_UNDERFLOW = -745.0


class CatSign(enum.Enum):
    """Relative sign of the two branches of a cat superposition."""

    PLUS = "+"
    MINUS = "-"


@dataclass(frozen=True)
class TwoStateMixtureSpec:
    """Parameters (a, b, c, alpha, beta) of a rank-2 coherent mixture.

    rho = a|alpha><alpha| + c|alpha><beta| + c*|beta><alpha| + b|beta><beta|
    """

    a: float
    b: float
    c: complex
    alpha: complex
    beta: complex

    def trace(self) -> float:
        """Tr rho = a + b + 2 Re(c <beta|alpha>)."""
        return self.a + self.b + 2.0 * (self.c * overlap(self.alpha, self.beta)).real


def _check_finite(*values: complex) -> None:
    for z in values:
        z = complex(z)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise ValueError("amplitude must be finite, got %r" % (z,))


def overlap(alpha: complex, beta: complex) -> complex:
    """Scalar product <beta|alpha> of two coherent states.

    <beta|alpha> = exp(-|alpha|^2/2 - |beta|^2/2 + beta* alpha).
    The first argument is the ket.
    """
    _check_finite(alpha, beta)
    alpha = complex(alpha)
    beta = complex(beta)
    exponent = (
        -0.5 * (alpha.real**2 + alpha.imag**2)
        - 0.5 * (beta.real**2 + beta.imag**2)
        + beta.conjugate() * alpha
    )
    if exponent.real <= _EXP_UNDERFLOW:
        return 0.0 + 0.0j
    return cmath.exp(exponent)


def validate_mixture(raw: TwoStateMixtureSpec) -> TwoStateMixtureSpec:
    """Return `raw` unchanged if it describes a unit-trace positive mixture.

    Raises NegativityViolation when a < 0, b < 0 or ab - |c|^2 < -1e-12,
    TraceViolation when the trace misses 1 by more than 1e-12.
    """
    _check_finite(raw.alpha, raw.beta, raw.c)
    if raw.a < 0.0 or raw.b < 0.0:
        raise NegativityViolation(
            "weights must be non-negative: a=%g, b=%g" % (raw.a, raw.b)
        )
    if raw.a * raw.b - abs(raw.c) ** 2 < -NEGATIVITY_TOL:
        raise NegativityViolation(
            "ab - |c|^2 = %g < 0: mixture is not positive semidefinite"
            % (raw.a * raw.b - abs(raw.c) ** 2)
        )
    tr = raw.trace()
    if abs(tr - 1.0) > TRACE_TOL:
        raise TraceViolation(
            "trace a + b + 2 Re(c <beta|alpha>) = %.17g, must equal 1 "
            "within %g" % (tr, TRACE_TOL)
        )
    return raw


def normalized_mixture(
    a_raw: float, b_raw: float, c_raw: complex, alpha: complex, beta: complex
) -> TwoStateMixtureSpec:
    """Rescale (a, b, c) by the computed trace so the mixture is unit trace."""
    raw = TwoStateMixtureSpec(a_raw, b_raw, complex(c_raw), complex(alpha), complex(beta))
    tr = raw.trace()
    if tr <= 0.0 or not math.isfinite(tr):
        raise TraceViolation("cannot normalize: raw trace = %g" % tr)
    return validate_mixture(
        TwoStateMixtureSpec(raw.a / tr, raw.b / tr, raw.c / tr, raw.alpha, raw.beta)
    )


def cat_norm(sign: CatSign, alpha1: complex, alpha2: complex) -> float:
    """Normalization constant of a two-mode cat superposition.

    N_pm = 2^(-1/2) (1 pm exp(-2|alpha1|^2 - 2|alpha2|^2))^(-1/2).
    The odd (minus) cat is undefined at alpha1 = alpha2 = 0.
    """
    _check_finite(alpha1, alpha2)
    mod2 = abs(complex(alpha1)) ** 2 + abs(complex(alpha2)) ** 2
    e = math.exp(-2.0 * mod2) if -2.0 * mod2 > _EXP_UNDERFLOW else 0.0
    if sign is CatSign.MINUS:
        if e >= 1.0:
            raise DegenerateCatState(
                "odd cat state needs |alpha1|^2 + |alpha2|^2 > 0"
            )
        return 1.0 / math.sqrt(2.0 * (1.0 - e))
    return 1.0 / math.sqrt(2.0 * (1.0 + e))

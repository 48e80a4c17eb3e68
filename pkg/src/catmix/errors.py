"""Exception hierarchy for catmix."""


class CatmixError(Exception):
    """Base class for all catmix errors."""


class TraceViolation(CatmixError):
    """Mixture coefficients do not sum to unit trace."""


class NegativityViolation(CatmixError):
    """Mixture parameters would give a non-positive density operator."""


class DegenerateCatState(CatmixError):
    """Odd cat state requested at zero amplitude (normalization diverges)."""


class ClampExceeded(CatmixError):
    """Spectral parameter fell outside [0, 1/4] by more than roundoff."""


class WeightViolation(CatmixError):
    """Statistical weights violate a + b = 1."""


class InvalidTemperature(CatmixError):
    """Temperature must be strictly positive."""


class CutoffExceeded(CatmixError):
    """No Fock cutoff below the cap meets the requested tail tolerance."""


class HermiticityViolation(CatmixError):
    """Assembled matrix is further from Hermitian than roundoff allows."""


class ModeCountMismatch(CatmixError):
    """Operation requires a two-mode density matrix."""


class NoConvergence(CatmixError):
    """Jacobi sweeps exhausted before the off-diagonal norm target."""


class NegativeEigenvalue(CatmixError):
    """Spectrum contains an eigenvalue below the roundoff window."""

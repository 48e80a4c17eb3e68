"""catmix: entropies and purity inequalities of coherent-state mixtures.

Closed-form results (replica/transfer-matrix spectrum of rank-2 coherent
mixtures, reduced entropies of two-mode cat mixtures, purity-inequality
gaps) next to an independent truncated-Fock-space brute-force oracle.
"""

from .coherent import (
    CatSign,
    TwoStateMixtureSpec,
    cat_norm,
    normalized_mixture,
    overlap,
    validate_mixture,
)
from .errors import (
    CatmixError,
    ClampExceeded,
    CutoffExceeded,
    DegenerateCatState,
    HermiticityViolation,
    InvalidTemperature,
    ModeCountMismatch,
    NegativeEigenvalue,
    NegativityViolation,
    NoConvergence,
    TraceViolation,
    WeightViolation,
)
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
from .jacobi import USING_COMPILED_KERNEL, jacobi_eigenvalues
from .purity import (
    CatSeparableSpec,
    PurityTriple,
    ThermalMixtureSpec,
    purity_gap_cat,
    purity_gap_thermal,
    purity_triple_cat,
    purity_triple_thermal,
    thermal_coherent_overlap,
    thermal_mean_photon,
    thermal_purity,
)
from .replica import (
    SpectralPair,
    d_parameter,
    entropy_closed,
    replica_entropy,
    spectral_pair,
    trace_power_recurrence,
    trace_power_spectral,
    transfer_matrix,
)
from .twomode import (
    CatMixtureSpec,
    SweepRow,
    d_cat,
    default_grid,
    joint_entropy,
    reduced_entropy,
    small_alpha_entropy,
    small_alpha_reduced_weights,
    sweep_entropy,
    validate_cat_mixture,
)

__version__ = "0.1.0"

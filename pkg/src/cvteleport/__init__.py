"""Gaussian toolkit for steering-constrained secure teleportation of
coherent-state alphabets.

The public surface re-exported here covers covariance-matrix algebra
(:mod:`cvteleport.gaussian`), phase-insensitive channels
(:mod:`cvteleport.channels`), teleportation resources
(:mod:`cvteleport.teleport`), average fidelities and security optima
(:mod:`cvteleport.fidelity`), and Monte Carlo cross-checks
(:mod:`cvteleport.montecarlo`).
"""

from .errors import (
    CVTeleportError,
    ComplexSpectrumError,
    DegenerateBlockError,
    DivergentEnergyError,
    InvalidBudgetError,
    InvalidUnravellingError,
    NegativeLambdaError,
    NegativeParameterError,
    NonPositiveLambdaError,
    NonPositiveNoiseError,
    NonSymmetricError,
    UniformLimitError,
    UnphysicalChannelError,
    UnphysicalError,
    UnphysicalInputError,
    UnphysicalResourceError,
    UnphysicalStateError,
)
from .gaussian import (
    Direction,
    SingleModeGaussian,
    SymplecticSpectrum,
    TwoModeCM,
    is_physical,
    is_separable,
    is_unsteerable,
    mean_photon_number,
    squeezed_thermal,
    steerability,
    symplectic_spectrum,
    tmsv,
)
from .channels import (
    ChannelClass,
    PhaseInsensitiveChannel,
    apply_channel,
    apply_one_sided,
    classify,
    compose,
)
from .teleport import (
    ResourceSpec,
    SteeringBudget,
    accessible,
    bk_output,
    cross_steerability,
    cross_steerability_limit,
    induced_channel,
    optimal_resource_fixed_sab,
    optimal_resource_fixed_sba,
    transmissivity_window,
)
from .fidelity import (
    Alphabet,
    FidelityReport,
    avg_fidelity,
    boundary_noise,
    f_opt,
    is_secure,
    no_cloning_threshold,
    optimal_channel,
    s_ab_min,
    security_report,
    tau_opt,
)
from .montecarlo import (
    BkRunResult,
    McEstimate,
    RngStream,
    coherent_fidelity,
    fidelity_samples,
    mc_bk_teleport,
    mc_channel_fidelity,
    sample_alpha,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

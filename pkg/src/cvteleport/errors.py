"""Exception types raised by the cvteleport package.

Every error raised on purpose derives from :class:`CVTeleportError`, so
callers can catch one base class at an API boundary.  Validation errors
(bad parameters, unphysical inputs) and state errors (divergent energy,
degenerate limits) are kept distinct because command-line tooling maps
them to different exit codes.
"""


class CVTeleportError(Exception):
    """Base class for all package errors."""


class NonSymmetricError(CVTeleportError):
    """A candidate covariance matrix is not symmetric within tolerance."""


class ComplexSpectrumError(CVTeleportError):
    """The symplectic spectrum is not real; not a covariance candidate."""


class UnphysicalError(CVTeleportError):
    """Base class for inputs that violate the uncertainty principle."""


class UnphysicalStateError(UnphysicalError):
    """A Gaussian state fails the bona fide (physicality) condition."""


class UnphysicalChannelError(UnphysicalError):
    """A phase-insensitive map (tau, y) is not completely positive."""


class UnphysicalResourceError(UnphysicalError):
    """A teleportation resource covariance matrix is unphysical."""


class UnphysicalInputError(UnphysicalError):
    """The state fed into a protocol is unphysical."""


class DegenerateBlockError(CVTeleportError):
    """A reduced covariance block is singular; conditioning is undefined."""


class NegativeParameterError(CVTeleportError):
    """A parameter constrained to be non-negative was negative."""


class NonPositiveNoiseError(CVTeleportError):
    """An induced channel came out below the quantum noise limit."""


class DivergentEnergyError(CVTeleportError):
    """The requested resource exists only in the infinite-energy limit."""


class InvalidBudgetError(CVTeleportError):
    """A steering budget is negative, NaN, or otherwise out of range."""


class NegativeLambdaError(CVTeleportError):
    """The alphabet width parameter lambda must be non-negative."""


class UniformLimitError(CVTeleportError):
    """lambda = 0 (flat alphabet) has no finite value for this quantity."""


class NonPositiveLambdaError(CVTeleportError):
    """Sampling from the alphabet prior requires lambda > 0."""


class InvalidUnravellingError(CVTeleportError):
    """The run-level output admits no classical mixture of coherent states."""

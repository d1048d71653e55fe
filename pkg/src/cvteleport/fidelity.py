"""Average teleportation fidelity over coherent-state alphabets and the
security thresholds and optima that go with it.

The alphabet is the isotropic Gaussian prior

    p_lambda(alpha) = (lambda / pi) exp(-lambda |alpha|^2),

flat in the ``lambda -> 0`` limit.  Over a phase-insensitive channel
``(tau, y)`` the prior-averaged fidelity has the closed form

    F(tau, y, lambda) = 2 lambda / (2 (1 - sqrt(tau))^2 + lambda (1 + y + tau)).

Security is the no-cloning benchmark: a run is secure when the average
fidelity strictly exceeds the threshold, which guarantees no better
copy of the input alphabet exists elsewhere.  Optimal channels under a
steering budget sit on the accessible-region boundary, either at the
tangency of a fidelity contour or clamped at the quantum-limited
attenuator endpoint of the resource window.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .errors import (
    InvalidBudgetError,
    NegativeLambdaError,
    UniformLimitError,
    UnphysicalChannelError,
)
from .gaussian import Direction
from .channels import classify
from .teleport import SteeringBudget, accessible

if TYPE_CHECKING:  # pragma: no cover
    from .montecarlo import McEstimate

_SQRT2 = math.sqrt(2.0)

# Guard band for the strict security comparison: fidelities within this
# distance of the threshold count as not secure, so verdicts at exact
# analytic equality cannot flip on the last bit of roundoff.
SECURITY_TOL = 1e-12


def is_secure(f_avg: float, threshold: float) -> bool:
    """Strict no-cloning verdict; equality at the threshold is not secure."""
    return f_avg > threshold + SECURITY_TOL


@dataclass(frozen=True)
class Alphabet:
    """Isotropic Gaussian coherent-state alphabet of width ``1/lambda``.

    ``lam = 0`` denotes the uniform limit, valid only where formulas
    have finite limits; sampling and averaging require ``lam > 0``.
    """

    lam: float

    def __post_init__(self):
        lam = float(self.lam)
        if math.isnan(lam) or lam < 0.0:
            raise NegativeLambdaError(f"lambda must be >= 0, got {lam}")
        object.__setattr__(self, "lam", lam)

    def pdf(self, alpha: complex) -> float:
        if self.lam == 0.0:
            raise UniformLimitError("the flat alphabet has no normalizable pdf")
        return self.lam / math.pi * math.exp(-self.lam * abs(alpha) ** 2)

    @property
    def mean_photon_number(self) -> float:
        if self.lam == 0.0:
            raise UniformLimitError("the flat alphabet has divergent energy")
        return 1.0 / self.lam


@dataclass(frozen=True)
class FidelityReport:
    """Security verdict for one channel and alphabet."""

    tau: float
    y: float
    lam: float
    f_avg: float
    threshold: float
    secure: bool
    accessible: bool
    budget: SteeringBudget
    mc: "McEstimate | None" = None


def _check_lambda(lam: float, allow_zero: bool = False) -> float:
    lam = float(lam)
    if math.isnan(lam) or lam < 0.0:
        raise NegativeLambdaError(f"lambda must be >= 0, got {lam}")
    if lam == 0.0 and not allow_zero:
        raise UniformLimitError("lambda = 0 has no finite average fidelity")
    return lam


def _avg_fidelity_raw(tau, y, lam):
    """Closed-form average fidelity; broadcasts over numpy arrays."""
    root = np.sqrt(tau)
    return 2.0 * lam / (2.0 * (1.0 - root) ** 2 + lam * (1.0 + y + tau))


def avg_fidelity(tau: float, y: float, lam: float) -> float:
    """Alphabet-averaged teleportation fidelity of a channel.

    Parameters
    ----------
    tau, y : float
        Physical phase-insensitive channel parameters.
    lam : float
        Alphabet width parameter, strictly positive.

    Returns
    -------
    float
        Average fidelity in ``(0, 1]``.
    """
    lam = _check_lambda(lam)
    if classify(tau, y).unphysical:
        raise UnphysicalChannelError(f"(tau={tau}, y={y}) is not a channel")
    return float(_avg_fidelity_raw(float(tau), float(y), lam))


def no_cloning_threshold(lam: float) -> float:
    """No-cloning security threshold for the width-``lam`` alphabet.

    Piecewise in ``lam`` with breakpoint ``sqrt(2) - 1``; equals ``2/3``
    in the uniform limit and is continuous everywhere.
    """
    lam = _check_lambda(lam, allow_zero=True)
    if lam <= _SQRT2 - 1.0:
        return 2.0 * (1.0 + lam) / (3.0 + lam)
    return 2.0 * lam / (3.0 - 2.0 * _SQRT2 + 2.0 * lam)


def _check_budget(budget: float) -> float:
    budget = float(budget)
    if math.isnan(budget) or budget < 0.0:
        raise InvalidBudgetError(f"steering budget must be >= 0, got {budget}")
    return budget


def optimal_channel(
    lam: float, budget: float, direction: Direction
) -> tuple[float, float, bool]:
    """Optimal accessible channel ``(tau, y)`` and whether it is clamped.

    The optimum lies on the accessible-region boundary, at the larger
    of the contour-tangency transmissivity and the quantum-limited
    attenuator endpoint of the resource window (the boundary line is
    unphysical below the latter).  ``clamped`` is True when the
    endpoint wins, in which case the optimum is an infinite-energy
    limit rather than a finite resource.
    """
    lam = _check_lambda(lam)
    s = _check_budget(budget)
    if math.isinf(s):
        return 1.0, 0.0, False
    ems = math.exp(-s)
    if Direction(direction) is Direction.B_TO_A:
        tangency = 4.0 / (lam * ems + 2.0 + lam) ** 2
        clamp = 1.0 / (1.0 + ems)
        tau = max(tangency, clamp)
        y = ems * tau
    else:
        tangency = 4.0 / (2.0 + lam) ** 2
        clamp = 1.0 - ems
        tau = max(tangency, clamp)
        y = ems
    return tau, y, tangency <= clamp * (1.0 + 1e-9)


def tau_opt(lam: float, budget: float, direction: Direction) -> float:
    """Transmissivity of the optimal accessible channel.

    ``budget = 0`` is allowed and reproduces the unconstrained-boundary
    special cases; ``budget = inf`` gives the identity channel.
    """
    return optimal_channel(lam, budget, direction)[0]


def boundary_noise(budget: float, tau: float, direction: Direction) -> float:
    """Added noise of the accessible-region boundary at transmissivity ``tau``."""
    s = _check_budget(budget)
    if Direction(direction) is Direction.B_TO_A:
        return math.exp(-s) * float(tau)
    return math.exp(-s)


def f_opt(lam: float, budget: float, direction: Direction) -> float:
    """Maximal average fidelity over channels accessible with ``budget``.

    Piecewise closed form; the branch condition follows the tangency
    versus endpoint dichotomy of :func:`tau_opt`.  Always equals
    ``avg_fidelity(tau_opt, boundary_noise(...), lam)`` and tends to 1
    as the budget grows without bound.
    """
    lam = _check_lambda(lam)
    s = _check_budget(budget)
    if math.isinf(s):
        return 1.0
    es, ems = math.exp(s), math.exp(-s)
    if Direction(direction) is Direction.B_TO_A:
        # tangency applies for lam <= 2 (sqrt(e^s (e^s+1)) - e^s) / (e^s+1)
        cond = 2.0 * (math.sqrt(1.0 + ems) - 1.0) / (1.0 + ems)
        if lam <= cond:
            return (2.0 * (lam * ems + 2.0 + lam)) / (
                (2.0 + lam) * ems + 4.0 + lam
            )
        # endpoint branch, written to avoid cancellation in
        # 2 + lam - 2 sqrt(1 + e^{-s})
        den = 1.0 + lam + lam * es - 2.0 / (math.sqrt(1.0 + ems) + 1.0)
        return lam * (es + 1.0) / den
    # A->B: tangency applies for lam <= 2 (sqrt(e^s / (e^s - 1)) - 1);
    # the bound diverges as s -> 0, where only the tangency remains.
    if es - 1.0 <= 0.0 or lam <= 2.0 * (math.sqrt(es / (es - 1.0)) - 1.0):
        return 2.0 * (2.0 + lam) / ((2.0 + lam) * ems + 4.0 + lam)
    return lam / (lam + (math.sqrt(1.0 - ems) - 1.0) ** 2)


def s_ab_min(lam: float) -> float:
    """Minimal A->B steering budget that allows secure teleportation.

    Piecewise in ``lam`` with breakpoints at ``sqrt(2) - 1`` and
    ``2 (sqrt(2) - 1)``, saturating at ``ln 2``; continuous everywhere.
    At this budget the optimal fidelity exactly meets the no-cloning
    threshold, so security requires strictly more steering.
    """
    lam = _check_lambda(lam, allow_zero=True)
    if lam <= _SQRT2 - 1.0:
        return math.log((1.0 + lam) * (2.0 + lam) / 2.0)
    if lam <= 2.0 * (_SQRT2 - 1.0):
        return -math.log(lam / (lam + 2.0) + (3.0 - 2.0 * _SQRT2) / lam)
    return math.log(2.0)


def security_report(
    tau: float, y: float, lam: float, budget: SteeringBudget | None = None
) -> FidelityReport:
    """Bundle fidelity, threshold, and accessibility for one channel.

    ``secure`` is strict: the fidelity must exceed the threshold, not
    merely reach it.
    """
    budget = budget if budget is not None else SteeringBudget()
    f = avg_fidelity(tau, y, lam)
    threshold = no_cloning_threshold(lam)
    return FidelityReport(
        tau=float(tau),
        y=float(y),
        lam=float(lam),
        f_avg=f,
        threshold=threshold,
        secure=is_secure(f, threshold),
        accessible=accessible(tau, y, budget),
        budget=budget,
    )

"""Continuous-variable teleportation over two-mode Gaussian resources.

The protocol is the standard coherent-state teleportation with a joint
homodyne measurement on the input and mode A, classical feedforward
with gain ``g``, and a displacement on mode B.  On Gaussian inputs the
output is Gaussian with

    d_out = g d_in
    V_out = g^2 V_in + g^2 Z A Z + g (Z C + C^T Z) + B,   Z = diag(1, -1)

so the protocol acts as the phase-insensitive channel

    tau = g^2,    y = g^2 a - 2 g c + b

when the resource is in standard form ``(a, b, c)``.  The gain is fixed
at ``g = sqrt(tau)`` throughout.

Steering-constrained resources
------------------------------

Among standard-form resources with fixed steerability ``s`` in one
direction, the members that reach the accessible-channel boundary at
transmissivity ``tau`` form a one-parameter family in ``a``:

* fixed B->A steerability:  ``b = (a - e^{-s}) tau``, ``c = (a - e^{-s}) sqrt(tau)``
* fixed A->B steerability:  ``b = a tau + e^{-s}``,    ``c = a sqrt(tau)``

Physicality bounds ``a`` from below; the minimal member saturates
``nu_minus = 1`` and is returned by the ``optimal_resource_*``
constructors.  Outside a finite transmissivity window the minimal
member exists only in the infinite-energy limit and the constructors
refuse with :class:`DivergentEnergyError`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DivergentEnergyError,
    InvalidBudgetError,
    NonPositiveNoiseError,
    UnphysicalChannelError,
    UnphysicalInputError,
    UnphysicalResourceError,
    UnphysicalStateError,
)
from .channels import PhaseInsensitiveChannel, classify
from .gaussian import (
    TOL,
    Direction,
    SingleModeGaussian,
    TwoModeCM,
    is_physical,
    mean_photon_number,
    squeezed_thermal,
    steerability,
    symplectic_spectrum,
)

_Z = np.diag([1.0, -1.0])

# Relative margin keeping resource constructions away from the
# infinite-energy endpoints of the transmissivity window.
ENERGY_MARGIN = 1e-9


@dataclass(frozen=True)
class SteeringBudget:
    """Available steerability per direction; ``inf`` means unconstrained."""

    s_ba: float = math.inf
    s_ab: float = math.inf

    def __post_init__(self):
        for name, value in (("s_ba", self.s_ba), ("s_ab", self.s_ab)):
            value = float(value)
            if math.isnan(value) or value < 0.0:
                raise InvalidBudgetError(f"{name} must be >= 0, got {value}")
            object.__setattr__(self, name, value)


@dataclass(frozen=True)
class ResourceSpec:
    """Standard-form teleportation resource with its protocol gain.

    ``direction`` names the steering direction whose budget the family
    holds fixed at ``steering``; ``energy`` is the mean photon number
    of the resource state.
    """

    a: float
    b: float
    c: float
    g: float
    direction: Direction
    steering: float
    energy: float

    def state(self) -> TwoModeCM:
        return squeezed_thermal(self.a, self.b, self.c)

    def induced(self) -> PhaseInsensitiveChannel:
        return induced_channel(self.a, self.b, self.c, self.g)


def bk_output(
    resource: TwoModeCM, g: float, state: SingleModeGaussian
) -> SingleModeGaussian:
    """Teleportation output for a Gaussian input over a given resource.

    Parameters
    ----------
    resource : TwoModeCM
        Two-mode resource state (any physical covariance matrix, not
        necessarily standard form).
    g : float
        Feedforward gain.
    state : SingleModeGaussian
        Input state.

    Returns
    -------
    SingleModeGaussian
        Output with ``d_out = g d_in`` and the covariance above.
    """
    g = float(g)
    if not math.isfinite(g):
        raise ValueError("gain must be finite")
    if not is_physical(resource):
        raise UnphysicalResourceError("resource state is unphysical")
    if not state.is_physical:
        raise UnphysicalInputError("input state is unphysical")
    a, b, c = resource.a_block, resource.b_block, resource.c_block
    v_out = (
        g * g * state.V
        + g * g * (_Z @ a @ _Z)
        + g * (_Z @ c + c.T @ _Z)
        + b
    )
    return SingleModeGaussian(g * state.d, v_out)


def induced_channel(
    a: float, b: float, c: float, g: float
) -> PhaseInsensitiveChannel:
    """Phase-insensitive channel induced by teleportation over ``(a, b, c)``.

    ``tau = g^2`` and ``y = g^2 a - 2 g c + b``.  A physical resource
    always induces a completely positive channel; the converse guard
    exists to catch malformed inputs.
    """
    g = float(g)
    if not math.isfinite(g):
        raise ValueError("gain must be finite")
    try:
        squeezed_thermal(a, b, c)
    except UnphysicalStateError as exc:
        raise UnphysicalResourceError(str(exc)) from exc
    tau = g * g
    y = g * g * a - 2.0 * g * c + b
    if y < abs(1.0 - tau) - TOL:
        raise NonPositiveNoiseError(
            f"induced noise y={y} below the quantum limit |1-tau|"
        )
    return PhaseInsensitiveChannel(tau, max(y, 0.0))


def accessible(tau: float, y: float, budget: SteeringBudget) -> bool:
    """Whether ``(tau, y)`` is reachable under the given steering budget.

    The reachable region is ``y >= e^{-s_ba} tau`` and ``y >= e^{-s_ab}``
    (each constraint disappears as the corresponding budget goes to
    infinity).  Boundaries count as accessible.
    """
    if classify(tau, y).unphysical:
        raise UnphysicalChannelError(f"(tau={tau}, y={y}) is not a channel")
    return (
        y >= math.exp(-budget.s_ba) * tau - TOL
        and y >= math.exp(-budget.s_ab) - TOL
    )


def _require_budget(s: float) -> float:
    s = float(s)
    if math.isnan(s) or s <= 0.0 or math.isinf(s):
        raise InvalidBudgetError(f"steering budget must be finite and > 0, got {s}")
    return s


def transmissivity_window(direction: Direction, s: float) -> tuple[float, float]:
    """Open transmissivity interval with finite-energy minimal resources."""
    s = _require_budget(s)
    if Direction(direction) is Direction.B_TO_A:
        return 1.0 / (1.0 + math.exp(-s)), 1.0 / (1.0 - math.exp(-s))
    return 1.0 - math.exp(-s), 1.0 + math.exp(-s)


def _check_window(direction: Direction, tau: float, s: float) -> float:
    tau = float(tau)
    lo, hi = transmissivity_window(direction, s)
    if not (tau > lo * (1.0 + ENERGY_MARGIN) and tau < hi * (1.0 - ENERGY_MARGIN)):
        raise DivergentEnergyError(
            f"tau={tau} is outside ({lo}, {hi}); the minimal resource for "
            f"this transmissivity has divergent energy"
        )
    return tau


def _family_member(
    direction: Direction, tau: float, s: float, a: float
) -> ResourceSpec:
    """Boundary-family member with the given ``a`` (not necessarily minimal)."""
    g = math.sqrt(tau)
    if Direction(direction) is Direction.B_TO_A:
        b = (a - math.exp(-s)) * tau
        c = (a - math.exp(-s)) * g
    else:
        b = a * tau + math.exp(-s)
        c = a * g
    state = squeezed_thermal(a, b, c)
    return ResourceSpec(
        a=a,
        b=b,
        c=c,
        g=g,
        direction=Direction(direction),
        steering=s,
        energy=mean_photon_number(state),
    )


def _minimal_a(direction: Direction, tau: float, s: float) -> float:
    es, ems = math.exp(s), math.exp(-s)
    if Direction(direction) is Direction.B_TO_A:
        den_p = es * (tau - 1.0) + tau
        den_m = es * (1.0 - tau) + tau
        a_p = (es + tau * (ems + 1.0)) / den_p if den_p > 0.0 else math.inf
        a_m = (es + tau * (ems - 1.0)) / den_m if den_m > 0.0 else math.inf
    else:
        den_p = 1.0 - tau * es / (es + 1.0)
        den_m = tau * es / (es - 1.0) - 1.0
        a_p = 1.0 / den_p if den_p > 0.0 else math.inf
        a_m = 1.0 / den_m if den_m > 0.0 else math.inf
    return max(a_p, a_m)


def _validated(spec: ResourceSpec) -> ResourceSpec:
    state = spec.state()
    nu = symplectic_spectrum(state).nu_minus
    scale = 1.0 + abs(spec.a)
    if abs(nu - 1.0) > 1e-6 * scale:
        raise UnphysicalResourceError(
            f"minimal member does not saturate nu_minus=1 (got {nu})"
        )
    direction = spec.direction
    s_meas = steerability(state, direction)
    if abs(s_meas - spec.steering) > 1e-6 * scale:
        raise UnphysicalResourceError(
            f"steerability {s_meas} does not match the budget {spec.steering}"
        )
    return spec


def optimal_resource_fixed_sba(tau: float, s_ba: float) -> ResourceSpec:
    """Minimal-energy resource with B->A steerability ``s_ba`` whose
    induced channel sits on the boundary ``y = e^{-s_ba} tau``.

    Parameters
    ----------
    tau : float
        Target transmissivity, strictly inside the finite-energy window
        ``(1/(1+e^{-s}), 1/(1-e^{-s}))``.
    s_ba : float
        Steering budget, finite and positive.

    Raises
    ------
    DivergentEnergyError
        At or beyond the window endpoints.
    InvalidBudgetError
        For ``s_ba <= 0``, NaN, or infinite budgets.
    """
    s = _require_budget(s_ba)
    tau = _check_window(Direction.B_TO_A, tau, s)
    a = _minimal_a(Direction.B_TO_A, tau, s)
    return _validated(_family_member(Direction.B_TO_A, tau, s, a))


def optimal_resource_fixed_sab(tau: float, s_ab: float) -> ResourceSpec:
    """Minimal-energy resource with A->B steerability ``s_ab`` whose
    induced channel sits on the boundary ``y = e^{-s_ab}``.

    Same contract as :func:`optimal_resource_fixed_sba` with the window
    ``(1 - e^{-s}, 1 + e^{-s})``.
    """
    s = _require_budget(s_ab)
    tau = _check_window(Direction.A_TO_B, tau, s)
    a = _minimal_a(Direction.A_TO_B, tau, s)
    return _validated(_family_member(Direction.A_TO_B, tau, s, a))


def cross_steerability(spec: ResourceSpec) -> float:
    """Steerability of a family member in the direction it does not fix.

    For the fixed-``s_ba`` family this is the A->B steerability

        s_ab = -ln( e^{-2s} (a e^{s} - 1) tau / a )

    and for the fixed-``s_ab`` family the B->A steerability

        s_ba = -ln( a / (a e^{s} tau + 1) ).

    Both decrease monotonically in ``a``, so larger-energy members of a
    family are strictly less steerable in the opposite direction.
    """
    a, s = spec.a, spec.steering
    tau = spec.g * spec.g
    if spec.direction is Direction.B_TO_A:
        return -math.log(math.exp(-2.0 * s) * (a * math.exp(s) - 1.0) * tau / a)
    return -math.log(a / (a * math.exp(s) * tau + 1.0))


def cross_steerability_limit(direction: Direction, tau: float, s: float) -> float:
    """Infimum of the cross steerability over a family (the ``a -> inf`` limit).

    The infimum is approached only with divergent energy; it is the
    natural cross budget to quote when the minimal resource itself is
    an infinite-energy limit.
    """
    s = _require_budget(s)
    tau = float(tau)
    if Direction(direction) is Direction.B_TO_A:
        return -math.log(math.exp(-s) * tau)
    return s + math.log(tau)

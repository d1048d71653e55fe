"""Single-mode phase-insensitive Gaussian channels.

A channel is the pair ``(tau, y)``: transmissivity/gain ``tau >= 0``
and added noise ``y >= 0``, acting as ``d -> sqrt(tau) d`` and
``V -> tau V + y I``.  Complete positivity requires ``y >= |1 - tau|``.

The classification thresholds (all inclusive within tolerance):

* entanglement breaking:      ``y >= 1 + tau``
* steering breaking B->A:     ``y >= (1 + |2 tau - 1|) / 2``
* steering breaking A->B:     ``y >= max(|1 - tau|, 1)``

so the regions nest as unphysical < SB(B->A) < SB(A->B) < EB on any
vertical slice of the ``(tau, y)`` plane.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    NegativeParameterError,
    UnphysicalChannelError,
    UnphysicalStateError,
)
from .gaussian import TOL, SingleModeGaussian, TwoModeCM, is_physical


@dataclass(frozen=True)
class PhaseInsensitiveChannel:
    """Phase-insensitive Gaussian channel ``(tau, y)``."""

    tau: float
    y: float

    def __post_init__(self):
        tau, y = float(self.tau), float(self.y)
        if not (math.isfinite(tau) and math.isfinite(y)):
            raise NegativeParameterError("tau and y must be finite")
        if tau < 0.0 or y < 0.0:
            raise NegativeParameterError("tau and y must be non-negative")
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "y", y)

    @property
    def is_physical(self) -> bool:
        return self.y >= abs(1.0 - self.tau) - TOL


@dataclass(frozen=True)
class ChannelClass:
    """Classification flags for a ``(tau, y)`` pair.

    ``tag`` names the completely-positive boundary cases and is None
    for unphysical pairs.  An unphysical pair never carries breaking
    flags.
    """

    unphysical: bool
    entanglement_breaking: bool
    sb_b_to_a: bool
    sb_a_to_b: bool
    tag: str | None


def classify(tau: float, y: float) -> ChannelClass:
    """Classify a phase-insensitive channel.

    Parameters
    ----------
    tau, y : float
        Channel parameters, both non-negative.

    Returns
    -------
    ChannelClass
        Physicality, entanglement-breaking, and steering-breaking flags
        (both directions), plus a CP-boundary tag.
    """
    tau, y = float(tau), float(y)
    if tau < 0.0 or y < 0.0 or not (math.isfinite(tau) and math.isfinite(y)):
        raise NegativeParameterError("tau and y must be finite and non-negative")
    unphysical = y < abs(1.0 - tau) - TOL
    if unphysical:
        return ChannelClass(True, False, False, False, None)
    eb = y >= 1.0 + tau - TOL
    sb_ba = y >= 0.5 * (1.0 + abs(2.0 * tau - 1.0)) - TOL
    sb_ab = y >= max(abs(1.0 - tau), 1.0) - TOL
    if abs(tau - 1.0) <= TOL and abs(y) <= TOL:
        tag = "identity"
    elif tau < 1.0 and abs(y - (1.0 - tau)) <= TOL:
        tag = "attenuator-limited"
    elif tau > 1.0 and abs(y - (tau - 1.0)) <= TOL:
        tag = "amplifier-limited"
    else:
        tag = "interior"
    return ChannelClass(False, eb, sb_ba, sb_ab, tag)


def apply_channel(
    channel: PhaseInsensitiveChannel, state: SingleModeGaussian
) -> SingleModeGaussian:
    """Act with a channel on a single-mode state."""
    if not channel.is_physical:
        raise UnphysicalChannelError(
            f"(tau={channel.tau}, y={channel.y}) is not completely positive"
        )
    if not state.is_physical:
        raise UnphysicalStateError("input state is unphysical")
    g = math.sqrt(channel.tau)
    return SingleModeGaussian(
        g * state.d, channel.tau * state.V + channel.y * np.eye(2)
    )


def apply_one_sided(
    channel: PhaseInsensitiveChannel, state: TwoModeCM
) -> TwoModeCM:
    """Act with a channel on mode B of a two-mode state, leaving A alone."""
    if not channel.is_physical:
        raise UnphysicalChannelError(
            f"(tau={channel.tau}, y={channel.y}) is not completely positive"
        )
    if not is_physical(state):
        raise UnphysicalStateError("input state is unphysical")
    g = math.sqrt(channel.tau)
    return TwoModeCM.from_blocks(
        state.a_block,
        channel.tau * state.b_block + channel.y * np.eye(2),
        g * state.c_block,
    )


def compose(
    first: PhaseInsensitiveChannel, second: PhaseInsensitiveChannel
) -> PhaseInsensitiveChannel:
    """Composite channel ``first`` after ``second``.

    Phase-insensitive channels are closed under composition:
    ``(tau1, y1) o (tau2, y2) = (tau1 tau2, tau1 y2 + y1)``.
    """
    for ch in (first, second):
        if not ch.is_physical:
            raise UnphysicalChannelError(
                f"(tau={ch.tau}, y={ch.y}) is not completely positive"
            )
    return PhaseInsensitiveChannel(
        first.tau * second.tau, first.tau * second.y + first.y
    )

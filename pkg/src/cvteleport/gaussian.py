"""Covariance-matrix algebra for one- and two-mode Gaussian states.

Conventions used throughout the package:

* quadrature ordering ``(q1, p1, q2, p2)``;
* the vacuum covariance matrix is the identity, so a coherent state
  ``|alpha>`` has displacement ``d = sqrt(2) * (Re alpha, Im alpha)``
  and covariance ``I``;
* all logarithms are natural.

A two-mode covariance matrix is handled in block form::

    V = [[A, C], [C^T, B]]

with 2x2 blocks.  Physicality (the bona fide condition) is equivalent
to ``V >= 0`` together with the smaller symplectic eigenvalue
satisfying ``nu_minus >= 1``.  Separability and steerability checks are
reduced to the same machinery: partial transposition for separability,
Schur complements for steerability.  Each reduction is exercised
against a direct complex-Hermitian eigenvalue test in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    ComplexSpectrumError,
    DegenerateBlockError,
    NonSymmetricError,
    UnphysicalStateError,
)

# Absolute tolerance for every physicality/separability/steerability
# predicate.  Boundary cases resolve to the non-strict side.
TOL = 1e-9

# symplectic form for two modes in (q1, p1, q2, p2) ordering
_OMEGA = np.array(
    [
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, -1.0, 0.0],
    ]
)

_Z = np.diag([1.0, -1.0])


class Direction(str, Enum):
    """Steering direction between the two parties of a bipartite state."""

    B_TO_A = "ba"
    A_TO_B = "ab"


def _as_matrix(value, shape, name):
    m = np.asarray(value, dtype=float)
    if m.shape != shape:
        raise ValueError(f"{name} must have shape {shape}, got {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError(f"{name} must be finite")
    return m


def _check_symmetric(m, name):
    if np.max(np.abs(m - m.T)) > TOL:
        raise NonSymmetricError(f"{name} is not symmetric within {TOL}")
    return 0.5 * (m + m.T)


@dataclass(frozen=True)
class SingleModeGaussian:
    """Single-mode Gaussian state: displacement ``d`` and covariance ``V``."""

    d: np.ndarray
    V: np.ndarray

    def __post_init__(self):
        d = _as_matrix(self.d, (2,), "d")
        V = _check_symmetric(_as_matrix(self.V, (2, 2), "V"), "V")
        d.flags.writeable = False
        V.flags.writeable = False
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "V", V)

    @classmethod
    def vacuum(cls) -> "SingleModeGaussian":
        return cls(np.zeros(2), np.eye(2))

    @classmethod
    def coherent(cls, alpha: complex) -> "SingleModeGaussian":
        """Coherent state ``|alpha>``: vacuum covariance, displaced."""
        alpha = complex(alpha)
        d = math.sqrt(2.0) * np.array([alpha.real, alpha.imag])
        return cls(d, np.eye(2))

    @property
    def is_physical(self) -> bool:
        """Bona fide condition for one mode: ``det V >= 1`` and ``tr V > 0``."""
        return (
            float(np.linalg.det(self.V)) >= 1.0 - TOL
            and float(np.trace(self.V)) > 0.0
        )


@dataclass(frozen=True)
class TwoModeCM:
    """Two-mode covariance matrix in block form ``[[A, C], [C^T, B]]``."""

    matrix: np.ndarray

    def __post_init__(self):
        m = _check_symmetric(_as_matrix(self.matrix, (4, 4), "matrix"), "matrix")
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_blocks(cls, a, b, c) -> "TwoModeCM":
        a = _as_matrix(a, (2, 2), "A")
        b = _as_matrix(b, (2, 2), "B")
        c = _as_matrix(c, (2, 2), "C")
        return cls(np.block([[a, c], [c.T, b]]))

    @property
    def a_block(self) -> np.ndarray:
        return self.matrix[:2, :2]

    @property
    def b_block(self) -> np.ndarray:
        return self.matrix[2:, 2:]

    @property
    def c_block(self) -> np.ndarray:
        return self.matrix[:2, 2:]


@dataclass(frozen=True)
class SymplecticSpectrum:
    """Symplectic invariants of a two-mode covariance matrix."""

    nu_plus: float
    nu_minus: float
    delta: float
    det_v: float


def symplectic_spectrum(state: TwoModeCM) -> SymplecticSpectrum:
    """Symplectic eigenvalues of a two-mode covariance matrix.

    Uses the invariant form ``Delta = det A + det B + 2 det C`` and

        nu_pm = sqrt((Delta +- sqrt(Delta^2 - 4 det V)) / 2)

    Parameters
    ----------
    state : TwoModeCM
        Symmetric 4x4 covariance candidate (not necessarily physical).

    Returns
    -------
    SymplecticSpectrum
        ``nu_plus >= nu_minus > 0`` together with the invariants.

    Raises
    ------
    ComplexSpectrumError
        If the spectrum is not real, which signals a matrix that is not
        a valid covariance candidate.
    """
    a, b, c = state.a_block, state.b_block, state.c_block
    delta = float(np.linalg.det(a) + np.linalg.det(b) + 2.0 * np.linalg.det(c))
    det_v = float(np.linalg.det(state.matrix))

    eigs, vecs = np.linalg.eigh(state.matrix)
    if eigs[0] >= -1e-12 * max(1.0, abs(eigs[-1])):
        # Positive semidefinite: evaluate the same invariants through the
        # Hermitian matrix V^{1/2} (i Omega) V^{1/2}, whose eigenvalues are
        # +-nu_j.  The quadratic formula in Delta cancels catastrophically
        # for near-degenerate spectra (pure states); this route does not.
        root = (vecs * np.sqrt(np.clip(eigs, 0.0, None))) @ vecs.T
        herm = 1j * (root @ _OMEGA @ root)
        nus = np.linalg.eigvalsh(herm)
        return SymplecticSpectrum(
            nu_plus=float(nus[3]),
            nu_minus=float(nus[2]),
            delta=delta,
            det_v=det_v,
        )

    disc = delta * delta - 4.0 * det_v
    if disc < -TOL:
        raise ComplexSpectrumError(
            f"Delta^2 - 4 det V = {disc:.3e} < 0; spectrum is complex"
        )
    root = math.sqrt(max(disc, 0.0))
    lo = (delta - root) / 2.0
    hi = (delta + root) / 2.0
    if lo < -TOL:
        raise ComplexSpectrumError(
            f"nu_minus^2 = {lo:.3e} < 0; not a covariance candidate"
        )
    return SymplecticSpectrum(
        nu_plus=math.sqrt(max(hi, 0.0)),
        nu_minus=math.sqrt(max(lo, 0.0)),
        delta=delta,
        det_v=det_v,
    )


def mean_photon_number(state, n_modes: int | None = None) -> float:
    """Mean total photon number ``(tr V - 2n) / (4n)`` of an n-mode state.

    Accepts either a :class:`SingleModeGaussian` (displacement included
    in the energy) or a :class:`TwoModeCM`.
    """
    if isinstance(state, SingleModeGaussian):
        n = 1
        if not state.is_physical:
            raise UnphysicalStateError("state violates the uncertainty principle")
        # <q^2> = V_qq/2 + d_q^2, so displacement enters the trace with weight 2
        trace = float(np.trace(state.V)) + 2.0 * float(np.dot(state.d, state.d))
    elif isinstance(state, TwoModeCM):
        n = 2
        if not is_physical(state):
            raise UnphysicalStateError("state violates the uncertainty principle")
        trace = float(np.trace(state.matrix))
    else:
        raise TypeError(f"unsupported state type {type(state)!r}")
    if n_modes is not None and n_modes != n:
        raise ValueError(f"n_modes={n_modes} does not match a {n}-mode state")
    return (trace - 2.0 * n) / (4.0 * n)


def is_physical(state: TwoModeCM) -> bool:
    """Bona fide condition: ``V >= 0`` and ``nu_minus >= 1`` within tolerance."""
    eigs = np.linalg.eigvalsh(state.matrix)
    if float(eigs[0]) < -TOL:
        return False
    try:
        spectrum = symplectic_spectrum(state)
    except ComplexSpectrumError:
        return False
    return spectrum.nu_minus >= 1.0 - TOL


def is_separable(state: TwoModeCM) -> bool:
    """PPT criterion, exact for two-mode Gaussian states.

    The partial transpose of mode 2 maps ``V`` to ``L V L`` with
    ``L = diag(1, 1, 1, -1)``; the state is separable iff the result is
    again physical.
    """
    if not is_physical(state):
        raise UnphysicalStateError("separability is defined for physical states")
    lam = np.diag([1.0, 1.0, 1.0, -1.0])
    return is_physical(TwoModeCM(lam @ state.matrix @ lam))


def _steering_blocks(state: TwoModeCM, direction: Direction):
    if Direction(direction) is Direction.B_TO_A:
        # B performs the measurements, A holds the conditional state.
        return state.b_block, state.a_block, state.c_block
    return state.a_block, state.b_block, state.c_block.T


def is_unsteerable(state: TwoModeCM, direction: Direction) -> bool:
    """Whether the state admits no steering in the given direction.

    Gaussian steering B->A is decided by the Schur complement
    ``M = A - C B^{-1} C^T``: the state is unsteerable iff ``M`` is a
    valid single-mode covariance matrix (``det M >= 1``, ``tr M > 0``).
    The A->B direction swaps the roles of the blocks.
    """
    if not is_physical(state):
        raise UnphysicalStateError("steerability is defined for physical states")
    steering, steered, cross = _steering_blocks(state, direction)
    det_steering = float(np.linalg.det(steering))
    if det_steering <= TOL:
        raise DegenerateBlockError("steering party's block is singular")
    m = steered - cross @ np.linalg.inv(steering) @ cross.T
    return float(np.linalg.det(m)) >= 1.0 - TOL and float(np.trace(m)) > 0.0


def steerability(state: TwoModeCM, direction: Direction) -> float:
    """Gaussian steerability measure in the given direction.

    Returns ``max(0, (1/2) ln(det R / det V))`` where ``R`` is the
    steering party's reduced block.  Zero exactly when
    :func:`is_unsteerable` holds in the same direction, within predicate
    tolerance.  For an ideal EPR state (``det V -> 0``) the measure
    diverges and ``+inf`` is reported instead of a number.
    """
    if not is_physical(state):
        raise UnphysicalStateError("steerability is defined for physical states")
    steering, _, _ = _steering_blocks(state, direction)
    det_v = float(np.linalg.det(state.matrix))
    if det_v <= TOL:
        return math.inf
    return max(0.0, 0.5 * math.log(float(np.linalg.det(steering)) / det_v))


def squeezed_thermal(a: float, b: float, c: float) -> TwoModeCM:
    """Standard-form two-mode state ``A = aI``, ``B = bI``, ``C = diag(-c, c)``.

    Parameters
    ----------
    a, b : float
        Diagonal block values, ``>= 1`` for a physical state.
    c : float
        Correlation strength; the sign convention matches a two-mode
        squeezed vacuum with ``c > 0``.

    Raises
    ------
    UnphysicalStateError
        If the bona fide condition fails.
    """
    state = TwoModeCM.from_blocks(
        a * np.eye(2), b * np.eye(2), np.diag([-c, c])
    )
    if not is_physical(state):
        raise UnphysicalStateError(
            f"(a={a}, b={b}, c={c}) violates the uncertainty principle"
        )
    return state


def tmsv(r: float) -> TwoModeCM:
    """Two-mode squeezed vacuum with squeezing parameter ``r``."""
    r = float(r)
    if not math.isfinite(r):
        raise ValueError("squeezing parameter must be finite")
    return squeezed_thermal(math.cosh(2 * r), math.cosh(2 * r), math.sinh(2 * r))

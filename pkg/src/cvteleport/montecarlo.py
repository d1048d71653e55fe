"""Monte Carlo estimators that cross-check the closed-form fidelities.

Reproducibility contract
------------------------

All randomness flows through :class:`RngStream`, which draws raw
uniform doubles from a Philox counter-based bit generator and converts
them to normals with the trigonometric Box-Muller transform:

    u = uniform doubles in [0, 1), consumed two per pair
    r = sqrt(-2 ln(1 - u1)),  z0 = r cos(2 pi u2),  z1 = r sin(2 pi u2)

The transform is rejection-free, so the number of uniforms consumed is
a function of the number of normals requested alone.  Together with the
fixed block layout below this makes every estimate bit-identical for a
given ``(seed, n)`` on any platform.

Estimators consume samples in fixed blocks of :data:`BLOCK` draws;
block ``j`` uses the substream ``rng.substream(j)``.  Results are
therefore independent of how blocks might be sharded across workers,
and estimates at different ``n`` share a common sample prefix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    InvalidUnravellingError,
    NonPositiveLambdaError,
    UnphysicalChannelError,
    UnphysicalStateError,
)
from .channels import PhaseInsensitiveChannel, apply_channel, classify
from .gaussian import SingleModeGaussian
from .teleport import ResourceSpec, bk_output

BLOCK = 4096

_TWO_PI = 2.0 * math.pi


class RngStream:
    """Seedable, splittable random stream with a pinned sample path.

    Parameters
    ----------
    seed : int
        Master seed, ``0 <= seed < 2**64``.
    """

    algorithm = "philox4x64+trig-box-muller"

    def __init__(self, seed: int, _spawn_key: tuple[int, ...] = ()):
        seed = int(seed)
        if not 0 <= seed < 2**64:
            raise ValueError("seed must satisfy 0 <= seed < 2**64")
        self.seed = seed
        self._spawn_key = _spawn_key
        seq = np.random.SeedSequence(seed, spawn_key=_spawn_key)
        self._gen = np.random.Generator(np.random.Philox(seq))

    def substream(self, index: int) -> "RngStream":
        """Independent stream derived from (seed, index) alone."""
        return RngStream(self.seed, self._spawn_key + (int(index),))

    def uniform(self, n: int) -> np.ndarray:
        """``n`` doubles in ``[0, 1)``."""
        return self._gen.random(int(n))

    def normals(self, n: int) -> np.ndarray:
        """``n`` standard normals via the pinned Box-Muller transform."""
        n = int(n)
        pairs = (n + 1) // 2
        u = self.uniform(2 * pairs)
        u1, u2 = u[0::2], u[1::2]
        r = np.sqrt(-2.0 * np.log1p(-u1))
        out = np.empty(2 * pairs)
        out[0::2] = r * np.cos(_TWO_PI * u2)
        out[1::2] = r * np.sin(_TWO_PI * u2)
        return out[:n]


@dataclass(frozen=True)
class McEstimate:
    """Sample mean with its standard error."""

    mean: float
    std_error: float
    n: int
    seed: int


@dataclass(frozen=True)
class BkRunResult:
    """Run-level teleportation statistics.

    ``fidelity`` estimates the coherent-input fidelity; ``d_mean`` and
    ``v_hat`` are the empirical output displacement and covariance with
    elementwise standard errors.
    """

    fidelity: McEstimate
    d_mean: np.ndarray
    d_se: np.ndarray
    v_hat: np.ndarray
    v_se: np.ndarray


def sample_alpha(lam: float, rng: RngStream) -> complex:
    """One draw from the alphabet prior ``p_lambda``."""
    lam = float(lam)
    if math.isnan(lam) or lam <= 0.0:
        raise NonPositiveLambdaError(f"sampling requires lambda > 0, got {lam}")
    sigma = math.sqrt(1.0 / (2.0 * lam))
    z = rng.normals(2)
    return complex(sigma * z[0], sigma * z[1])


def _overlap_with_coherent(deltas: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Fidelity of a Gaussian state against a coherent state.

    ``deltas`` holds displacement differences as rows; ``v`` is the
    Gaussian state's covariance.  Uses the two-mode overlap formula
    ``F = 2 / sqrt(det(I + V)) exp(-delta^T (I + V)^{-1} delta)``.
    """
    m = np.eye(2) + v
    det_m = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    inv_m = np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]]) / det_m
    quad = np.einsum("ni,ij,nj->n", deltas, inv_m, deltas)
    return 2.0 / math.sqrt(det_m) * np.exp(-quad)


def coherent_fidelity(alpha: complex, state: SingleModeGaussian) -> float:
    """Fidelity between ``|alpha>`` and a single-mode Gaussian state."""
    if not state.is_physical:
        raise UnphysicalStateError("fidelity is defined for physical states")
    alpha = complex(alpha)
    target = math.sqrt(2.0) * np.array([alpha.real, alpha.imag])
    delta = (state.d - target)[None, :]
    return float(_overlap_with_coherent(delta, state.V)[0])


def _alphabet_displacements(lam: float, rng: RngStream, n: int) -> np.ndarray:
    """Displacements ``sqrt(2) (Re a, Im a)`` of ``n`` prior draws."""
    sigma = math.sqrt(1.0 / (2.0 * lam))
    z = rng.normals(2 * n) * sigma
    return math.sqrt(2.0) * z.reshape(n, 2)


def _blocks(n: int):
    full, rest = divmod(n, BLOCK)
    for j in range(full):
        yield j, BLOCK
    if rest:
        yield full, rest


def fidelity_samples(
    tau: float, y: float, lam: float, n: int, rng: RngStream
) -> np.ndarray:
    """Per-run fidelities of ``n`` alphabet draws through a channel.

    Sample ``alpha`` from the prior, send ``|alpha>`` through the
    channel, score the output against the input.  Blocks of
    :data:`BLOCK` draws come from numbered substreams, so the first
    ``m`` samples agree for any two calls with ``n >= m`` and the same
    master stream.
    """
    lam = float(lam)
    if math.isnan(lam) or lam <= 0.0:
        raise NonPositiveLambdaError(f"estimation requires lambda > 0, got {lam}")
    if classify(tau, y).unphysical:
        raise UnphysicalChannelError(f"(tau={tau}, y={y}) is not a channel")
    channel = PhaseInsensitiveChannel(tau, y)
    out_ref = apply_channel(channel, SingleModeGaussian.coherent(0.0))
    g = math.sqrt(channel.tau)
    parts = []
    for j, count in _blocks(int(n)):
        d_in = _alphabet_displacements(lam, rng.substream(j), count)
        deltas = g * d_in - d_in
        parts.append(_overlap_with_coherent(deltas, out_ref.V))
    return np.concatenate(parts)


def _estimate(samples: np.ndarray, seed: int) -> McEstimate:
    n = samples.size
    mean = float(np.mean(samples))
    se = float(np.std(samples, ddof=1) / math.sqrt(n))
    return McEstimate(mean=mean, std_error=se, n=n, seed=seed)


def mc_channel_fidelity(
    tau: float, y: float, lam: float, n: int, rng: RngStream
) -> McEstimate:
    """Monte Carlo estimate of the alphabet-averaged channel fidelity.

    Parameters
    ----------
    tau, y : float
        Physical channel parameters.
    lam : float
        Alphabet width, strictly positive.
    n : int
        Number of prior draws, at least 100.
    rng : RngStream
        Master stream; the estimate is a pure function of
        ``(tau, y, lam, n, rng.seed)``.
    """
    n = int(n)
    if n < 100:
        raise ValueError(f"need n >= 100 draws, got {n}")
    return _estimate(fidelity_samples(tau, y, lam, n, rng), rng.seed)


def mc_bk_teleport(
    spec: ResourceSpec, alpha: complex, n: int, rng: RngStream
) -> BkRunResult:
    """Run-level unravelling of teleportation over a finite resource.

    Each run teleports ``|alpha>`` and, conditioned on the homodyne
    record, leaves a coherent state whose center is Gaussian around
    ``g d_in``.  The center covariance (in displacement units) is
    ``(V_out - I) / 2``, the excess of the deterministic output
    covariance over the coherent core; averaging the runs reproduces
    ``bk_output`` moments exactly.

    Parameters
    ----------
    spec : ResourceSpec
        Teleportation resource and gain.
    alpha : complex
        Input coherent amplitude.
    n : int
        Number of runs, at least 1000.
    rng : RngStream
        Master stream.

    Raises
    ------
    InvalidUnravellingError
        If ``V_out - I`` has a genuinely negative eigenvalue, in which
        case no classical mixture of coherent states matches the output.
    """
    n = int(n)
    if n < 1000:
        raise ValueError(f"need n >= 1000 runs, got {n}")
    state_in = SingleModeGaussian.coherent(alpha)
    out = bk_output(spec.state(), spec.g, state_in)
    excess = out.V - np.eye(2)
    eigvals, eigvecs = np.linalg.eigh(excess)
    if np.any(eigvals < -1e-9):
        raise InvalidUnravellingError(
            f"V_out - I has eigenvalue {eigvals.min():.3e} < 0"
        )
    scale = np.sqrt(np.clip(eigvals, 0.0, None) / 2.0)
    transform = eigvecs * scale[None, :]

    centers = np.empty((n, 2))
    for j, count in _blocks(n):
        z = rng.substream(j).normals(2 * count).reshape(count, 2)
        centers[j * BLOCK : j * BLOCK + count] = out.d + z @ transform.T

    deltas = centers - state_in.d
    fid = _estimate(_overlap_with_coherent(deltas, np.eye(2)), rng.seed)

    d_mean = centers.mean(axis=0)
    d_se = centers.std(axis=0, ddof=1) / math.sqrt(n)
    centered = centers - d_mean
    prods = 2.0 * centered[:, :, None] * centered[:, None, :]
    v_hat = np.eye(2) + prods.sum(axis=0) / (n - 1)
    v_se = prods.std(axis=0, ddof=1) / math.sqrt(n)
    return BkRunResult(
        fidelity=fid, d_mean=d_mean, d_se=d_se, v_hat=v_hat, v_se=v_se
    )

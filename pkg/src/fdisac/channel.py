"""Channel construction: downlink, reflected, self-interference and composites."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import geometry as geom
from .geometry import ArrayGeometry, CarrierConfig, SphericalPosition
from .utils import herm


@dataclass(frozen=True)
class Reflector:
    """Point reflector (user or radar target) with complex reflection gain."""

    position: SphericalPosition
    coefficient: complex = 1.0 + 0.0j

    def __post_init__(self):
        if abs(self.coefficient) <= 0.0:
            raise ValueError("reflection coefficient must be nonzero")


@dataclass(frozen=True)
class NoiseModel:
    """Circularly symmetric complex Gaussian noise with the given variance."""

    variance: float  # W

    def __post_init__(self):
        if self.variance <= 0.0:
            raise ValueError("noise variance must be positive")


@dataclass(frozen=True)
class ChannelSet:
    """All channel matrices of one coherent block.

    h_r = h_ue + h_tar collects the echo paths; h_fd = h_r + h_si is the full
    loopback channel seen between the TX and RX panels. h_ue_hat is the
    reflection-gain-free user channel rebuilt from a position estimate.
    """

    h_dl: np.ndarray  # (n_tx,)
    h_ue: np.ndarray  # (n_rx, n_tx)
    h_ue_hat: np.ndarray  # (n_rx, n_tx)
    h_tar: np.ndarray  # (n_rx, n_tx)
    h_si: np.ndarray  # (n_rx, n_tx)

    @property
    def h_r(self) -> np.ndarray:
        return self.h_ue + self.h_tar

    @property
    def h_fd(self) -> np.ndarray:
        return self.h_r + self.h_si


def reflection_channel(
    geometry: ArrayGeometry, carrier: CarrierConfig, reflector: Reflector
) -> np.ndarray:
    """Rank-one echo channel beta * a_rx(pos) a_tx(pos)^H."""
    a_rx = geom.response_vector(geometry, geom.RX, carrier, reflector.position)
    a_tx = geom.response_vector(geometry, geom.TX, carrier, reflector.position)
    return reflector.coefficient * np.outer(a_rx, a_tx.conj())


def ue_channel_estimate(
    geometry: ArrayGeometry, carrier: CarrierConfig, ue_pos_estimate: SphericalPosition
) -> np.ndarray:
    """User echo channel rebuilt from sounding-based position estimates.

    The user's reflection gain is unobservable from sounding, so the estimate
    uses a unit coefficient; downstream consumers fit the residual scalar gain
    themselves.
    """
    return reflection_channel(geometry, carrier, Reflector(ue_pos_estimate, 1.0 + 0.0j))


def si_channel(geometry: ArrayGeometry, carrier: CarrierConfig, si_gain: float) -> np.ndarray:
    """Deterministic near-field TX-to-RX leakage channel.

    Entry (m, n) is the spherical-wave term exp(j 2 pi d / lambda) / d over the
    exact distance d between RX element m and TX element n, then the whole
    matrix is scaled so that ||H||_F^2 = si_gain * n_rx * n_tx.  si_gain thus
    sets the mean per-entry leakage power.
    """
    if si_gain <= 0.0:
        raise ValueError("si_gain must be positive")
    tx = geom.element_positions(geometry, geom.TX)
    rx = geom.element_positions(geometry, geom.RX)
    d = np.linalg.norm(rx[:, None, :] - tx[None, :, :], axis=2)
    if np.min(d) <= 0.0:
        raise ValueError("TX and RX panels share an element position; increase d_p")
    h = np.exp(2j * np.pi * d / carrier.wavelength) / d
    target_sq = si_gain * geometry.n_rx * geometry.n_tx
    return h * np.sqrt(target_sq / np.sum(np.abs(h) ** 2))


def assemble(
    geometry: ArrayGeometry,
    carrier: CarrierConfig,
    ue: Reflector,
    tar: Reflector,
    ue_pos_estimate: SphericalPosition,
    si_gain: float,
    noise: NoiseModel,
) -> ChannelSet:
    """Construct every channel matrix of one coherent block."""
    del noise  # validated by the caller; kept in the signature for context
    return ChannelSet(
        h_dl=geom.dl_channel(geometry, carrier, ue.position),
        h_ue=reflection_channel(geometry, carrier, ue),
        h_ue_hat=ue_channel_estimate(geometry, carrier, ue_pos_estimate),
        h_tar=reflection_channel(geometry, carrier, tar),
        h_si=si_channel(geometry, carrier, si_gain),
    )


def received_block(
    channels: ChannelSet,
    beams,
    symbols: np.ndarray,
    noise: NoiseModel,
    rng: np.random.Generator,
) -> np.ndarray:
    """RF-chain-output observation Y = (W_rx^H H_fd W_tx + D) v s + N.

    Noise is white at the combiner outputs: each of the n_rf_rx x T entries is
    an independent CN(0, variance) draw from ``rng``.
    """
    symbols = np.asarray(symbols)
    if symbols.ndim != 1 or symbols.size < 1:
        raise ValueError("symbols must be a nonempty vector")
    eff = herm(beams.w_rx) @ channels.h_fd @ beams.w_tx + beams.d
    signal = np.outer(eff @ beams.v, symbols)
    n_rf_rx, t = signal.shape
    scale = np.sqrt(noise.variance / 2.0)
    n = scale * (
        rng.standard_normal((n_rf_rx, t)) + 1j * rng.standard_normal((n_rf_rx, t))
    )
    return signal + n

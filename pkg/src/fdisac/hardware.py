"""Beamforming front-end models, codebook projections and link metrics.

Three analog architectures are supported:

* ``fcps``  - fully connected phase shifters: every raw weight has unit
  modulus.
* ``pcm``   - partially connected metamaterial strips: raw weights live on the
  Lorentzian circle (j + e^{j phi})/2 and only on the block-diagonal support
  (element i_n connects to chain i alone); in-waveguide propagation multiplies
  the raw weights by a diagonal matrix.
* ``fda``   - fully digital baseline: no codebook, free complex weights.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .channel import NoiseModel
from .geometry import ArrayGeometry, CarrierConfig
from .utils import herm

FCPS = "fcps"
PCM = "pcm"
FDA = "fda"

ARCHITECTURES = (FCPS, PCM, FDA)


@dataclass(frozen=True)
class DesignConstraints:
    """Design budgets and thresholds, all in SI units."""

    p_max: float  # W, transmit power budget
    gamma_a: float  # W, residual self-interference after analog combining
    gamma_s: float  # sensing accuracy threshold (see peb_threshold_is_squared)
    gamma_d: float = 1e-12  # W, digital-residual threshold (reporting only)
    nu: float = 0.5  # trade-off weight for scalarized sweeps
    # True: gamma_s bounds the CRB trace (so the PEB must stay below
    # sqrt(gamma_s)); False: gamma_s bounds the PEB itself.
    peb_threshold_is_squared: bool = True
    restricted_phase_domain: bool = False

    def __post_init__(self):
        if min(self.p_max, self.gamma_a, self.gamma_s, self.gamma_d) <= 0.0:
            raise ValueError("all power/threshold values must be positive")
        if not (0.0 <= self.nu <= 1.0):
            raise ValueError("nu must lie in [0, 1]")

    @property
    def crb_bound(self) -> float:
        """gamma_s expressed as a bound on the CRB trace."""
        return self.gamma_s if self.peb_threshold_is_squared else self.gamma_s**2


@dataclass(frozen=True)
class DmaHardware:
    """In-waveguide propagation of the metamaterial front end.

    The diagonal entries exp(-rho_{i,n} (alpha_i + j beta_i)) encode the
    attenuation and phase accumulated by the feed signal up to element n of
    strip i.
    """

    waveguide_attenuation_tx: np.ndarray  # (n_rf_tx,), 1/m
    waveguide_attenuation_rx: np.ndarray  # (n_rf_rx,), 1/m
    wavenumber_tx: np.ndarray  # (n_rf_tx,), rad/m
    wavenumber_rx: np.ndarray  # (n_rf_rx,), rad/m
    element_locations: np.ndarray  # (n_e,), m from the feed
    p_tx: np.ndarray = field(repr=False, default=None)  # (n_tx,) diagonal
    p_rx: np.ndarray = field(repr=False, default=None)  # (n_rx,) diagonal

    def p_tx_matrix(self) -> np.ndarray:
        return np.diag(self.p_tx)

    def p_rx_matrix(self) -> np.ndarray:
        return np.diag(self.p_rx)


def _propagation_diagonal(alpha, beta, rho) -> np.ndarray:
    # One run of rho per strip; flat layout matches the panel element order.
    return np.concatenate([np.exp(-rho * (a + 1j * b)) for a, b in zip(alpha, beta)])


def dma_propagation(
    geometry: ArrayGeometry,
    carrier: CarrierConfig,
    waveguide_attenuation: float = 0.6,
    guide_wavelength_ratio: float = 0.8,
    element_locations: np.ndarray | None = None,
) -> DmaHardware:
    """Build the TX/RX propagation diagonals of a metamaterial front end.

    Defaults: attenuation 0.6 Np/m, in-guide wavenumber 2 pi / (0.8 lambda),
    element n located at n*d_e along its strip.  All fully configurable.
    """
    if element_locations is None:
        rho = (np.arange(geometry.n_e) + 1.0) * geometry.d_e
    else:
        rho = np.asarray(element_locations, dtype=float)
    if rho.shape != (geometry.n_e,) or np.any(np.diff(rho) <= 0.0) or rho[0] <= 0.0:
        raise ValueError("element locations must be positive and strictly increasing")
    if waveguide_attenuation < 0.0:
        raise ValueError("waveguide attenuation must be nonnegative")
    beta = 2.0 * np.pi / (guide_wavelength_ratio * carrier.wavelength)
    alpha_tx = np.full(geometry.n_rf_tx, waveguide_attenuation)
    alpha_rx = np.full(geometry.n_rf_rx, waveguide_attenuation)
    beta_tx = np.full(geometry.n_rf_tx, beta)
    beta_rx = np.full(geometry.n_rf_rx, beta)
    return DmaHardware(
        waveguide_attenuation_tx=alpha_tx,
        waveguide_attenuation_rx=alpha_rx,
        wavenumber_tx=beta_tx,
        wavenumber_rx=beta_rx,
        element_locations=rho,
        p_tx=_propagation_diagonal(alpha_tx, beta_tx, rho),
        p_rx=_propagation_diagonal(alpha_rx, beta_rx, rho),
    )


@dataclass
class BeamformerSet:
    """A full transceiver configuration.

    ``w_tx``/``w_rx`` are the effective analog matrices applied to the array
    (for PCM these already include the propagation diagonals); the raw
    codebook weights are kept separately for feasibility audits.
    """

    architecture: str
    w_tx: np.ndarray  # (n_tx, n_rf_tx)
    w_rx: np.ndarray  # (n_rx, n_rf_rx)
    v: np.ndarray  # (n_rf_tx,)
    d: np.ndarray  # (n_rf_rx, n_rf_tx), digital SI canceller
    w_tx_raw: np.ndarray | None = None
    w_rx_raw: np.ndarray | None = None

    def __post_init__(self):
        if self.architecture not in ARCHITECTURES:
            raise ValueError(f"unknown architecture {self.architecture!r}")
        if self.w_tx_raw is None:
            self.w_tx_raw = self.w_tx
        if self.w_rx_raw is None:
            self.w_rx_raw = self.w_rx

    def tx_vector(self) -> np.ndarray:
        return self.w_tx @ self.v

    def tx_power(self) -> float:
        return float(np.linalg.norm(self.tx_vector()) ** 2)


def project_fcps(matrix: np.ndarray, restricted_phase_domain: bool = False) -> np.ndarray:
    """Entrywise projection onto the unit circle (nearest point, w/|w|).

    Zero entries map to 1 so the projection stays deterministic.  In the
    restricted mode phases are clipped to the closer endpoint of
    [-pi/2, pi/2].
    """
    m = np.asarray(matrix, dtype=complex)
    mag = np.abs(m)
    out = np.where(mag > 0.0, m / np.where(mag > 0.0, mag, 1.0), 1.0 + 0.0j)
    if restricted_phase_domain:
        out = np.exp(1j * _clip_phase(np.angle(out)))
    return out


def project_lorentzian(value: complex, restricted_phase_domain: bool = False):
    """Nearest point of the Lorentzian circle {(j + e^{j phi})/2}.

    The circle has center j/2 and radius 1/2; projecting the center itself is
    broken deterministically to phi = 0.  Works elementwise on arrays.
    """
    v = np.asarray(value, dtype=complex)
    rel = v - 0.5j
    phi = np.where(np.abs(rel) > 0.0, np.angle(rel), 0.0)
    if restricted_phase_domain:
        phi = _clip_phase(phi)
    out = 0.5 * (1j + np.exp(1j * phi))
    return out if out.ndim else complex(out)


def _clip_phase(phi: np.ndarray) -> np.ndarray:
    """Clip angles to [-pi/2, pi/2] by circular distance to the arc."""
    phi = np.mod(np.asarray(phi, dtype=float) + np.pi, 2.0 * np.pi) - np.pi
    hi = phi > np.pi / 2
    lo = phi < -np.pi / 2
    # Beyond +pi/2 the closer endpoint flips at phi = pi (and -pi below).
    out = np.where(hi, np.where(phi <= np.pi, np.pi / 2, -np.pi / 2), phi)
    out = np.where(lo, np.where(phi >= -np.pi, -np.pi / 2, np.pi / 2), out)
    return out


def achievable_rate(h_dl: np.ndarray, beams: BeamformerSet, noise: NoiseModel) -> float:
    """Downlink spectral efficiency log2(1 + |h w|^2 / sigma^2) in bit/s/Hz."""
    gain = abs(np.dot(h_dl, beams.tx_vector())) ** 2
    return float(np.log2(1.0 + gain / noise.variance))


def residual_si(h_si: np.ndarray, beams: BeamformerSet) -> dict:
    """Residual self-interference power after analog and digital stages."""
    eff = herm(beams.w_rx) @ h_si @ beams.w_tx
    analog = float(np.linalg.norm(eff @ beams.v) ** 2)
    digital = float(np.linalg.norm((eff + beams.d) @ beams.v) ** 2)
    return {"analog": analog, "digital": digital}


def codebook_violation(beams: BeamformerSet) -> float:
    """Largest deviation of the raw weights from their codebook.

    Zero (up to rounding) certifies feasibility: unit modulus for FCPS,
    Lorentzian circle plus block-diagonal support for PCM.  The fully digital
    baseline has no codebook, so it always reports 0.
    """
    if beams.architecture == FDA:
        return 0.0
    if beams.architecture == FCPS:
        dev = 0.0
        for w in (beams.w_tx_raw, beams.w_rx_raw):
            dev = max(dev, float(np.max(np.abs(np.abs(w) - 1.0))))
        return dev
    dev = 0.0
    for w in (beams.w_tx_raw, beams.w_rx_raw):
        n_tx, n_rf = w.shape
        n_e = n_tx // n_rf
        mask = np.zeros_like(w, dtype=bool)
        for i in range(n_rf):
            mask[i * n_e : (i + 1) * n_e, i] = True
        off = float(np.max(np.abs(w[~mask]))) if np.any(~mask) else 0.0
        on = float(np.max(np.abs(np.abs(w[mask] - 0.5j) - 0.5)))
        dev = max(dev, off, on)
    return dev


def pcm_support_mask(n_rf: int, n_e: int) -> np.ndarray:
    """Boolean mask of the block-diagonal support of a PCM weight matrix."""
    mask = np.zeros((n_rf * n_e, n_rf), dtype=bool)
    for i in range(n_rf):
        mask[i * n_e : (i + 1) * n_e, i] = True
    return mask

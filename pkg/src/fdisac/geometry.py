"""Array geometry and near-field spherical-wave response vectors.

Both antenna panels live in the xz-plane.  Each panel has ``n_rf`` uniformly
spaced columns (one per RF chain) and ``n_e`` vertically stacked elements per
column.  The transmit panel starts at x = +d_p/2 and extends toward +x; the
receive panel is its mirror image across the origin.  Element (i, n) of a
panel maps to the flat index (i-1)*n_e + n, following the column-major RF
chain layout.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .utils import SPEED_OF_LIGHT

TX = "TX"
RX = "RX"


@dataclass(frozen=True)
class CarrierConfig:
    """Carrier frequency, bandwidth and propagation constants."""

    carrier_frequency: float  # Hz
    bandwidth: float = 0.0  # Hz
    absorption_coeff: float = 0.0  # 1/m, molecular absorption

    def __post_init__(self):
        if self.carrier_frequency <= 0.0:
            raise ValueError("carrier_frequency must be positive")
        if self.absorption_coeff < 0.0:
            raise ValueError("absorption_coeff must be nonnegative")

    @property
    def wavelength(self) -> float:
        return SPEED_OF_LIGHT / self.carrier_frequency


@dataclass(frozen=True)
class ArrayGeometry:
    """Panel layout: RF-chain counts, per-chain element count and spacings."""

    n_rf_tx: int
    n_rf_rx: int
    n_e: int
    d_rf: float  # horizontal spacing between adjacent columns, m
    d_e: float  # vertical spacing between adjacent elements, m
    d_p: float  # separation between the TX and RX panels, m

    def __post_init__(self):
        if min(self.n_rf_tx, self.n_rf_rx, self.n_e) < 1:
            raise ValueError("element counts must be >= 1")
        if min(self.d_rf, self.d_e, self.d_p) <= 0.0:
            raise ValueError("spacings must be positive")

    @property
    def n_tx(self) -> int:
        return self.n_rf_tx * self.n_e

    @property
    def n_rx(self) -> int:
        return self.n_rf_rx * self.n_e

    def n_rf(self, panel: str) -> int:
        _check_panel(panel)
        return self.n_rf_tx if panel == TX else self.n_rf_rx

    def n_elements(self, panel: str) -> int:
        return self.n_rf(panel) * self.n_e

    def aperture(self, panel: str) -> float:
        """Diagonal extent of one panel in meters."""
        w = (self.n_rf(panel) - 1) * self.d_rf
        h = (self.n_e - 1) * self.d_e
        return float(np.hypot(w, h))


@dataclass(frozen=True)
class SphericalPosition:
    """Point location in (range, elevation, azimuth) about the array origin."""

    range: float  # m
    elevation: float  # rad, in (0, pi)
    azimuth: float  # rad, in [0, pi]

    def __post_init__(self):
        if self.range <= 0.0:
            raise ValueError("range must be positive")
        if not (0.0 < self.elevation < np.pi):
            raise ValueError("elevation must lie in (0, pi)")
        if not (0.0 <= self.azimuth <= np.pi):
            raise ValueError("azimuth must lie in [0, pi]")

    def cartesian(self) -> np.ndarray:
        r, th, ph = self.range, self.elevation, self.azimuth
        return np.array(
            [r * np.sin(th) * np.cos(ph), r * np.sin(th) * np.sin(ph), r * np.cos(th)]
        )


@dataclass(frozen=True)
class ElementIndex:
    """One-based (rf_chain, element) pair with its flat panel index."""

    rf_chain: int
    element: int

    def flat(self, n_e: int) -> int:
        return (self.rf_chain - 1) * n_e + self.element


def _check_panel(panel: str):
    if panel not in (TX, RX):
        raise ValueError(f"panel must be {TX!r} or {RX!r}, got {panel!r}")


def element_positions(geometry: ArrayGeometry, panel: str) -> np.ndarray:
    """Cartesian coordinates of every element of one panel, shape (N, 3).

    Row order follows the flat index: chain-major, element-minor.
    """
    _check_panel(panel)
    n_rf = geometry.n_rf(panel)
    sign = 1.0 if panel == TX else -1.0
    i = np.repeat(np.arange(n_rf), geometry.n_e)
    n = np.tile(np.arange(geometry.n_e), n_rf)
    pos = np.zeros((n_rf * geometry.n_e, 3))
    pos[:, 0] = sign * (geometry.d_p / 2.0 + i * geometry.d_rf)
    pos[:, 2] = n * geometry.d_e
    return pos


def element_position(geometry: ArrayGeometry, panel: str, idx: ElementIndex) -> np.ndarray:
    """Cartesian coordinates of a single panel element."""
    n_rf = geometry.n_rf(panel)
    if not (1 <= idx.rf_chain <= n_rf and 1 <= idx.element <= geometry.n_e):
        raise ValueError(
            f"element index ({idx.rf_chain}, {idx.element}) out of bounds for "
            f"{panel} panel with {n_rf} chains x {geometry.n_e} elements"
        )
    return element_positions(geometry, panel)[idx.flat(geometry.n_e) - 1]


def distances(geometry: ArrayGeometry, panel: str, pos: SphericalPosition) -> np.ndarray:
    """Distance from ``pos`` to every element of the panel, shape (N,)."""
    diff = pos.cartesian()[None, :] - element_positions(geometry, panel)
    return np.linalg.norm(diff, axis=1)


def distance_to(
    geometry: ArrayGeometry, panel: str, idx: ElementIndex, pos: SphericalPosition
) -> float:
    """Distance from ``pos`` to one panel element."""
    return float(np.linalg.norm(pos.cartesian() - element_position(geometry, panel, idx)))


def amplitude_factor(carrier: CarrierConfig, dist: np.ndarray) -> np.ndarray:
    """Free-space amplitude lambda/(4 pi r) with optional molecular absorption."""
    lam = carrier.wavelength
    return lam / (4.0 * np.pi * dist) * np.exp(-0.5 * carrier.absorption_coeff * dist)


def response_vector(
    geometry: ArrayGeometry, panel: str, carrier: CarrierConfig, pos: SphericalPosition
) -> np.ndarray:
    """Near-field spherical-wavefront response vector of one panel.

    Entry i_n carries the exact per-element propagation phase
    exp(j 2 pi r_{i,n} / lambda) and the free-space amplitude of that path.
    Positions closer than one wavelength to any element are rejected: the
    amplitude model diverges there.
    """
    dist = distances(geometry, panel, pos)
    lam = carrier.wavelength
    if np.min(dist) < lam:
        raise ValueError(
            f"position is within one wavelength ({lam:.3e} m) of a {panel} element; "
            "the free-space amplitude model is invalid that close"
        )
    return amplitude_factor(carrier, dist) * np.exp(2j * np.pi * dist / lam)


def dl_channel(
    geometry: ArrayGeometry, carrier: CarrierConfig, ue_pos: SphericalPosition
) -> np.ndarray:
    """Downlink row channel from the TX panel to a single-antenna user.

    Entries coincide with the TX response vector (no conjugation): both are
    direct evaluations of the same per-element amplitude/phase model.
    """
    return response_vector(geometry, TX, carrier, ue_pos)

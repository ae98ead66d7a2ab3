"""Shared helpers: unit conversions, seeded RNG substreams, error types."""

from __future__ import annotations

import zlib

import numpy as np

SPEED_OF_LIGHT = 299_792_458.0  # m/s


class ConfigError(ValueError):
    """Raised when a scenario configuration is missing or inconsistent."""


class InfeasibleDesignError(RuntimeError):
    """Raised when a design problem has no feasible point within its budget."""


class NumericalError(RuntimeError):
    """Raised when a solver or matrix operation fails irrecoverably."""


class UnidentifiableFimError(RuntimeError):
    """Raised when the nuisance-marginalized Fisher information is singular."""


def dbm_to_watt(p_dbm: float) -> float:
    return 10.0 ** ((p_dbm - 30.0) / 10.0)


def watt_to_dbm(p_watt: float) -> float:
    if p_watt <= 0.0:
        raise ValueError("power must be positive to express in dBm")
    return 10.0 * np.log10(p_watt) + 30.0


def substream(master_seed: int, *key) -> np.random.Generator:
    """Deterministic named RNG substream derived from a single master seed.

    Every random draw in the toolkit flows through here so that a run is
    reproducible from one integer.  Keys may be strings or ints; strings are
    hashed with crc32 which is stable across platforms and sessions.
    """
    entropy = [int(master_seed) & 0xFFFFFFFF]
    for k in key:
        if isinstance(k, str):
            entropy.append(zlib.crc32(k.encode("utf-8")))
        else:
            entropy.append(int(k) & 0xFFFFFFFF)
    return np.random.default_rng(np.random.SeedSequence(entropy))


def unit_modulus_symbols(n: int, rng: np.random.Generator) -> np.ndarray:
    """Random unit-power transmit symbols (uniform phases)."""
    return np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, size=n))


def herm(a: np.ndarray) -> np.ndarray:
    return a.conj().T


def hermitian_part(a: np.ndarray) -> np.ndarray:
    return 0.5 * (a + a.conj().T)

"""Full-duplex MIMO joint downlink communication and monostatic sensing toolkit.

Builds near-field sub-THz channels, evaluates Fisher-information position
error bounds, runs alternating-optimization beamformer designs for
phase-shifter and metamaterial front ends, and scores the results with
MUSIC-based target estimation and communication/sensing trade-off sweeps.
"""

__version__ = "0.1.0"

from . import channel, design_fcps, design_pcm, fisher, geometry, hardware
from . import pareto, scenario, sdp, sensing

__all__ = [
    "channel",
    "design_fcps",
    "design_pcm",
    "fisher",
    "geometry",
    "hardware",
    "pareto",
    "scenario",
    "sdp",
    "sensing",
    "__version__",
]

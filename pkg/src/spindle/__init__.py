"""Spindles and k-spindle convexity probes."""

from .probe import ProbeStatus, SpindleProbeResult, k_spindle_probe, spindle

__all__ = [
    # Types
    "ProbeStatus",
    "SpindleProbeResult",
    # Operations
    "k_spindle_probe",
    "spindle",
]

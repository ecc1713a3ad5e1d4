"""Reproductions of the worked examples and the seeded check suites."""

from .octahedral import segment_distance, verify_octahedral_non_separation
from .oracle import DimensionFourOracle, Membership, verify_disc_hull, verify_segment_hull
from .reports import VerificationReport
from .suites import SUITES, hexagon_norm, run_suite

__all__ = [
    # Types
    "DimensionFourOracle",
    "Membership",
    "VerificationReport",
    # Operations
    "SUITES",
    "hexagon_norm",
    "run_suite",
    "segment_distance",
    "verify_disc_hull",
    "verify_octahedral_non_separation",
    "verify_segment_hull",
]

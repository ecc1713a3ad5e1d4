"""Separation by unit spheres and exposed b-faces."""

from .faces import b_exposed_points, exposed_b_faces, generates_hull
from .spheres import separate_point, separate_point_strict, supporting_sphere_at
from .types import CertificateKind, ExposedBFace, HullGeneration, SeparationCertificate

__all__ = [
    # Types
    "CertificateKind",
    "ExposedBFace",
    "HullGeneration",
    "SeparationCertificate",
    # Operations
    "b_exposed_points",
    "exposed_b_faces",
    "generates_hull",
    "separate_point",
    "separate_point_strict",
    "supporting_sphere_at",
]

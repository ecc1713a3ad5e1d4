"""Exception hierarchy shared by every package of the lab.

Each error carries a stable ``code`` (used verbatim in the CLI's error JSON)
plus a free-form context dict for diagnostics.
"""

from __future__ import annotations

from typing import Any, Dict


class GeometryError(Exception):
    """Base error with a machine-readable code and optional context."""

    code: str = "GeometryError"

    def __init__(self, message: str, **context: Any) -> None:
        self.message = message
        self.context: Dict[str, Any] = context
        super().__init__(self.message)

    def __str__(self) -> str:
        if not self.context:
            return f"{self.code}: {self.message}"
        details = ", ".join(f"{key}={value}" for key, value in self.context.items())
        return f"{self.code}: {self.message} ({details})"


class EmptyPolytope(GeometryError):
    code = "EmptyPolytope"


class Unbounded(GeometryError):
    code = "Unbounded"


class Infeasible(GeometryError):
    code = "Infeasible"


class UnboundedObjective(GeometryError):
    code = "UnboundedObjective"


class DimensionMismatch(GeometryError):
    code = "DimensionMismatch"


class OriginOutside(GeometryError):
    code = "OriginOutside"


class NotSymmetric(GeometryError):
    code = "NotSymmetric"


class NotFullDimensional(GeometryError):
    code = "NotFullDimensional"


class OriginNotInterior(GeometryError):
    code = "OriginNotInterior"


class NoSegmentOnSphere(GeometryError):
    code = "NoSegmentOnSphere"


class DegenerateSingleton(GeometryError):
    """Raised for one-point inputs; the trivial answer rides along."""

    code = "DegenerateSingleton"

    def __init__(self, message: str, *, radius: Any = 0, pair: Any = None, **context: Any) -> None:
        self.radius = radius
        self.pair = pair
        super().__init__(message, **context)


class NotBoundary(GeometryError):
    code = "NotBoundary"


class NotBConvex(GeometryError):
    code = "NotBConvex"


class PointInsideHull(GeometryError):
    code = "PointInsideHull"


class NotBBounded(GeometryError):
    code = "NotBBounded"


class PointInsideBody(GeometryError):
    code = "PointInsideBody"


class SampleInconsistency(GeometryError):
    code = "SampleInconsistency"


class SNotInK(GeometryError):
    code = "SNotInK"


class DiameterNotOne(GeometryError):
    code = "DiameterNotOne"


class CNotComplete(GeometryError):
    code = "CNotComplete"


class KNotInC(GeometryError):
    code = "KNotInC"


class PreconditionError(GeometryError):
    code = "PreconditionError"


class CertificateInvalid(GeometryError):
    """A proof-carrying result failed its own exact re-check."""

    code = "CertificateInvalid"


class CrossCheckMismatch(GeometryError):
    """Two independent computations of the same predicate disagree."""

    code = "CrossCheckMismatch"


class MalformedInput(GeometryError):
    code = "MalformedInput"

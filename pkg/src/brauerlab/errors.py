"""Domain error hierarchy.

Every error carries a stable ``code`` string that the CLI and HTTP service
expose verbatim, so callers can dispatch without parsing messages.
"""

from __future__ import annotations


class BrauerLabError(Exception):
    """Base class for all domain errors."""

    code = "DomainError"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details

    def to_json(self) -> dict:
        body = {"error": self.code, "message": str(self)}
        if self.details:
            body["details"] = self.details
        return body


# ribbon graph validation
class GraphInvalid(BrauerLabError):
    code = "GraphInvalid"


class FixedPointInPairing(GraphInvalid):
    code = "FixedPointInPairing"


class RotationOrbitMismatch(GraphInvalid):
    code = "RotationOrbitMismatch"


class Disconnected(GraphInvalid):
    code = "Disconnected"


class DanglingId(GraphInvalid):
    code = "DanglingId"


class EmptyResult(BrauerLabError):
    code = "EmptyResult"


class SizeLimit(BrauerLabError):
    code = "SizeLimit"


# quiver engine
class IllFormedPath(BrauerLabError):
    code = "IllFormedPath"


class InadmissibleRelation(BrauerLabError):
    code = "InadmissibleRelation"


class NotFiniteDimensional(BrauerLabError):
    code = "NotFiniteDimensional"


class QuiverMismatch(BrauerLabError):
    code = "QuiverMismatch"


# graph -> algebra builders
class NoQuiver(BrauerLabError):
    code = "NoQuiver"


class MergeTargetsDiffer(BrauerLabError):
    code = "MergeTargetsDiffer"


class UnsupportedLabeling(BrauerLabError):
    code = "UnsupportedLabeling"


# classifiers
class DegreeTooHigh(BrauerLabError):
    code = "DegreeTooHigh"


class NotSymmetric(BrauerLabError):
    code = "NotSymmetric"


class ArrowInSocle(BrauerLabError):
    code = "ArrowInSocle"


# tracks / symmetrization
class NotSQB(BrauerLabError):
    code = "NotSQB"


class Decomposable(BrauerLabError):
    code = "Decomposable"


class ClosureBudgetExceeded(BrauerLabError):
    code = "ClosureBudgetExceeded"


class PostconditionFailed(BrauerLabError):
    code = "PostconditionFailed"


# extraction
class CycleCoverIncomplete(BrauerLabError):
    code = "CycleCoverIncomplete"


# kauer moves
class NoSuchEdge(BrauerLabError):
    code = "NoSuchEdge"


class Inadmissible(BrauerLabError):
    code = "Inadmissible"


# interchange formats
class FormatError(BrauerLabError):
    code = "FormatError"

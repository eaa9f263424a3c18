"""Exception hierarchy shared by every module.

Each class mirrors one failure mode of the public API.  The HTTP layer maps
class names to error codes verbatim, so renaming one is a wire-format change.
"""


class InscribeError(Exception):
    """Base class for all library errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


class TooFewPoints(InscribeError):
    pass


class FitProducesInvalidCurve(InscribeError):
    """Curve fitting succeeded numerically but the result fails validation.

    Carries the offending validation report in ``report`` when available.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class InvalidCurve(InscribeError):
    pass


class CurveGenerationFailed(InscribeError):
    pass


class DegenerateInput(InscribeError):
    pass


class NotOnUnitCircle(InscribeError):
    pass


class ThetaOutOfRange(InscribeError):
    pass


class RepeatedNodes(InscribeError):
    pass


class IllConditioned(InscribeError):
    pass


class ZeroPoint(InscribeError):
    pass


class NotInterleaved(InscribeError):
    pass


class NullspaceNotOneDimensional(InscribeError):
    pass


class DegenerateCrossRatio(InscribeError):
    pass

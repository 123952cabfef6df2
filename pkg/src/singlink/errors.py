"""Exception classes.

Every error carries a short machine-readable ``code`` that the CLI prints
verbatim (``error<TAB>code``).
"""


class SingLinkError(ValueError):
    code = "error"

    def __init__(self, message: str = ""):
        super().__init__(message or self.code)


class InvalidArgument(SingLinkError):
    code = "invalid-argument"


class UnsupportedGrade(SingLinkError):
    code = "unsupported-grade"


class LoopsForbidden(SingLinkError):
    code = "loops-forbidden"


class BadIds(SingLinkError):
    code = "bad-ids"


class NotConnected(SingLinkError):
    code = "not-connected"


class SingularIntersectionForm(SingLinkError):
    code = "singular-intersection-form"


class NotGorenstein(SingLinkError):
    code = "not-gorenstein"


class NotHomologySphere(SingLinkError):
    code = "not-homology-sphere"


class InternalInconsistency(SingLinkError):
    code = "internal-inconsistency"


class IncomparableFrames(SingLinkError):
    code = "incomparable-frames"


class EhatUndefined(SingLinkError):
    code = "ehat-undefined"


class InvalidToddValue(SingLinkError):
    code = "invalid-todd-value"


class NotCharacteristic(SingLinkError):
    code = "not-characteristic"


class TooLargeUseSampling(SingLinkError):
    code = "too-large-use-sampling"


class GraphParseError(SingLinkError):
    code = "parse-error"

    def __init__(self, message: str, lineno: int | None = None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno

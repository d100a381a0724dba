"""Exception hierarchy shared by all gazekit modules.

Two families matter for the CLI exit-code contract: ValidationError
(malformed input, bad files, contract violations -> exit 2) and
NumericalError (degenerate geometry, rank trouble -> exit 3).
"""


class GazeKitError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(GazeKitError):
    """Input data violates a structural or format contract."""


class NumericalError(GazeKitError):
    """A computation cannot proceed for numerical reasons."""


# landmark frames

class WrongPointCount(ValidationError):
    def __init__(self, count: int):
        super().__init__(f"frame has {count} landmarks, expected 478")
        self.count = count


class NonFiniteCoordinate(ValidationError):
    def __init__(self, index: int):
        super().__init__(f"landmark {index} has a non-finite coordinate")
        self.index = index


class OutOfRangeCoordinate(ValidationError):
    def __init__(self, index: int, value: float):
        super().__init__(
            f"landmark {index} has x or y = {value!r} outside [-0.5, 1.5]"
        )
        self.index = index
        self.value = value


# descriptors

class DegenerateGeometry(NumericalError):
    """Landmark configuration too close to a division-by-zero pose."""


# regression

class TooFewSamples(NumericalError):
    def __init__(self, count: int, minimum: int = 5):
        super().__init__(f"need at least {minimum} calibration samples, got {count}")
        self.count = count


class RankDeficient(NumericalError):
    def __init__(self, axis: str, condition: float):
        super().__init__(
            f"design matrix for axis {axis!r} is rank deficient "
            f"(condition {condition:.3e} exceeds 1e10)"
        )
        self.axis = axis
        self.condition = condition


class MalformedModelFile(ValidationError):
    """Model document is missing fields or cannot be parsed."""


class UnsupportedVersion(ValidationError):
    def __init__(self, version, supported):
        super().__init__(f"format version {version!r} not supported (expected {supported})")
        self.version = version


# metrics

class LengthMismatch(ValidationError):
    def __init__(self, n_pred: int, n_truth: int):
        super().__init__(f"series lengths differ: {n_pred} predictions vs {n_truth} truths")


class ZeroVariance(NumericalError):
    """Truth series is constant; R^2 is undefined."""


class EmptySession(ValidationError):
    """No usable labeled samples in the session."""


# synthetic generator

class PoseOutOfEnvelope(ValidationError):
    """Head pose outside the generator's valid envelope."""


class TargetBehindScreenPlane(ValidationError):
    """Gaze target is not in front of the eyes; no gaze ray exists."""


# session files

class SessionFormatError(ValidationError):
    """Base for session-file problems; carries the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class MissingHeader(SessionFormatError):
    def __init__(self, message: str = "missing or invalid header record"):
        super().__init__(message, line=1)


class VersionMismatch(SessionFormatError):
    def __init__(self, version):
        super().__init__(f"unsupported session format version {version!r}", line=1)
        self.version = version


class MalformedRecord(SessionFormatError):
    pass


class FrameValidation(SessionFormatError):
    """A structurally well-formed record failed landmark validation."""

    def __init__(self, line: int, cause: ValidationError):
        super().__init__(f"invalid frame: {cause}", line=line)
        self.cause = cause


class IoFailure(GazeKitError):
    """Underlying file I/O failed."""

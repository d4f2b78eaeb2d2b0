"""Exception types shared across the package."""


class RectConvError(Exception):
    """Base class for all errors raised by this package."""


class OutOfDomainError(RectConvError):
    """A pixel or point falls outside the camera's invertible range."""


class BehindCameraError(RectConvError):
    """A 3D point cannot be projected because it is outside the FOV."""


class NonConvergenceError(RectConvError):
    """An iterative solve exhausted its budget without converging."""


class OutOfBoundsError(RectConvError):
    """A query position is outside the stored extent."""


class ShapeMismatchError(RectConvError):
    """Tensor or parameter shapes are inconsistent."""


class GeometryMismatchError(RectConvError):
    """Layer, field, or image geometry is inconsistent."""


class ScaleConflictError(RectConvError):
    """Two branches meet with different cumulative scale factors."""


class ParseError(RectConvError):
    """A config or network file failed to parse or validate."""


class UnknownKindError(ParseError):
    """A network file names a layer kind the engine does not support."""


class MissingWeightError(RectConvError):
    """A layer's parameters are absent from the weight container."""


class FormatVersionMismatchError(RectConvError):
    """A binary file has the wrong magic, version, or structure."""


class ChecksumMismatchError(RectConvError):
    """A binary file's payload does not match its checksum."""


class LabelOutOfRangeError(RectConvError):
    """A label map contains a class index outside the configured range."""


class EmptyEvaluationError(RectConvError):
    """No pixels were left to evaluate after ignore-label filtering."""


class EmptyInputError(RectConvError):
    """An operation received an empty sample collection."""


class CoverageGapError(RectConvError):
    """A patch plan leaves part of the camera's field of view uncovered."""

"""Exception hierarchy shared by the library, the CLI and the HTTP routes."""


class PathRecipError(Exception):
    """Base class for every error raised by pathrecip."""


class DimensionError(PathRecipError, ValueError):
    """Matrix or subset sizes do not fit the requested operation."""


class NetworkValidationError(PathRecipError):
    def __init__(self, msg, report=None):
        super().__init__(msg)
        self.report = report


class SingularMatrixError(PathRecipError):
    def __init__(self, msg="path matrix is singular"):
        super().__init__(msg)


class RecurrenceError(PathRecipError):
    """No recurrence (or no backward extension) exists for the request."""


class CapacityError(PathRecipError):
    """A brute-force oracle was asked for more candidates than it may visit."""

    def __init__(self, candidates: int, capacity: int, what: str = "tuples"):
        super().__init__(
            f"oracle refused: {candidates} candidate {what} exceeds capacity {capacity}"
        )
        self.candidates = candidates
        self.capacity = capacity


class ShapeError(PathRecipError, ValueError):
    """Invalid partition, skew shape, tableau or plane partition."""


class NetworkFileError(PathRecipError):
    def __init__(self, msg, location=None):
        if location:
            msg = f"{location}: {msg}"
        super().__init__(msg)
        self.location = location

"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class FSpectrumError(Exception):
    """Base class for all errors raised by fspectrum."""


class InvalidAlgebraError(FSpectrumError, ValueError):
    pass


class UnsupportedRepresentationError(FSpectrumError, ValueError):
    pass


class UnknownFiberError(FSpectrumError, ValueError):
    pass


class InvalidGermError(FSpectrumError, ValueError):
    """The polynomial cannot be used as a singularity germ (e.g. it is zero)."""


class NotASingularityError(InvalidGermError):
    """Constant or linear part present: the origin is not a singular point."""


class PolySyntaxError(FSpectrumError, ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class InconclusiveError(FSpectrumError):
    """The local algebra could not be certified finite within the degree cap."""

    def __init__(self, message: str, degree_cap: int):
        self.degree_cap = degree_cap
        super().__init__(message)


class OracleInapplicableError(FSpectrumError, ValueError):
    pass


class ModelError(FSpectrumError, ValueError):
    """Parse-level problem in a model document; ``location`` is a JSON path."""

    def __init__(self, message: str, location: str = "$"):
        self.location = location
        super().__init__(f"{location}: {message}")


class InconsistencyError(FSpectrumError, ValueError):
    pass


class SolveError(FSpectrumError, ValueError):
    pass

"""Exception types shared across the library."""


class ThetaLabError(Exception):
    """Base class for all library-specific failures."""


class MalformedFaceError(ThetaLabError, ValueError):
    """A face or facet specification has duplicates or bad labels."""


class NotAFaceError(ThetaLabError, ValueError):
    """The given face does not belong to the complex."""


class PreconditionError(ThetaLabError, ValueError):
    """An operation was applied outside its stated domain."""


class ConsistencyError(ThetaLabError, RuntimeError):
    """Two independent computation routes disagreed.

    Raised by the invariants that are always computed twice; a disagreement
    signals corrupted input (typically a wrong boundary subcomplex) or an
    internal defect, never a legitimate answer.
    """


class InvalidTriangulationError(ThetaLabError, ValueError):
    """A carrier map violates the triangulation contract."""


class FileFormatError(ThetaLabError, ValueError):
    """A facet or triangulation file cannot be parsed."""

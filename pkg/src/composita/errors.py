"""Exception hierarchy shared by all composita modules."""


class CompositaError(Exception):
    """Base class for every error raised by this package."""


class DegreeMismatchError(CompositaError, ValueError):
    """Permutations (or groups) of different degrees were combined."""


class CapExceededError(CompositaError, RuntimeError):
    """A configurable desk-scale cap (group order, closure size, polynomial
    degree, retry budget) was exceeded.  Never indicates a wrong answer,
    only that the input is bigger than the engine is willing to chew."""


class CosetDecompositionError(CompositaError, ValueError):
    """An element set was not a union of the requested double cosets.
    Signals a malformed amalgamation input."""


class NotClosedError(CompositaError, ValueError):
    """An operation that requires a closed compositum system was called
    on an unclosed one."""


class NotConnectedError(CompositaError, ValueError):
    """Base-field extraction was requested for a disconnected system."""


class ModelInvariantError(CompositaError, RuntimeError):
    """A guarantee of the closure construction failed at runtime: the union
    of self-cosets of a closed system was not a group, a base-field
    conjugacy check failed, or a weak-rigidity check came out false.
    On valid inputs this is unreachable; seeing it means a bug."""


class SemisimplicityError(CompositaError, RuntimeError):
    """A characteristic-zero tensor algebra had a nonzero nilradical."""


class OracleMismatchError(CompositaError, RuntimeError):
    """The double-coset model and the concrete number-field decomposition
    disagreed.  Carries the full comparison report as ``report``."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class EmbeddingError(CompositaError, ValueError):
    """A field embedding failed its defining relation."""


class DocumentError(CompositaError, ValueError):
    """A JSON context/system/realization document failed to parse or
    validate."""

"""Exception hierarchy.

Every error carries the CLI exit code it maps to and a short ``kind`` tag
used in the machine-readable error object.
"""


class NNLabError(Exception):
    exit_code = 1
    kind = "error"


class PreconditionError(NNLabError, ValueError):
    """An operation was called outside its contract."""

    exit_code = 3
    kind = "precondition"


class DimensionError(PreconditionError):
    kind = "dimension"


class SingularMatrixError(PreconditionError):
    kind = "singular-system"


class DuplicateNodeError(PreconditionError):
    kind = "duplicate-node"


class OutOfShapeError(PreconditionError):
    kind = "out-of-shape"


class EmptyShapeError(PreconditionError):
    kind = "empty-shape"


class EmptyDescentSetError(PreconditionError):
    kind = "empty-descent-set"


class NotARibbonError(PreconditionError):
    kind = "not-a-ribbon"


class RangeError(PreconditionError):
    kind = "range"


class DegenerateMapError(PreconditionError):
    kind = "degenerate-map"


class DomainError(PreconditionError):
    kind = "domain"


class ParseError(PreconditionError):
    exit_code = 2
    kind = "parse"


class CapExceededError(NNLabError, RuntimeError):
    exit_code = 4
    kind = "cap-exceeded"


class EnumerationCapError(CapExceededError):
    kind = "enumeration-cap"


class OracleCapError(CapExceededError):
    kind = "oracle-cap"


class ConsistencyError(NNLabError, RuntimeError):
    """Raised when an identity that must hold fails. Indicates a bug."""

    exit_code = 5
    kind = "internal-consistency"

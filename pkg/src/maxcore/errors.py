"""Shared exception types."""


class BudgetExceededError(RuntimeError):
    """An exhaustive routine was asked to run past its enumeration budget."""


class AuditError(AssertionError):
    """A structural law that should hold on valid inputs was violated."""


class MergeError(ValueError):
    """Two configurations could not be merged into one maximal configuration."""


class CodecError(ValueError):
    """Encoder/decoder failure: bad payload, corrupt block, or size mismatch."""

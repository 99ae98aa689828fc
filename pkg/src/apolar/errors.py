"""Domain-level error types shared by the library and the CLI."""


class HypothesisViolationError(Exception):
    """Input is well-formed but violates a theorem hypothesis the operation needs."""


class InternalInconsistencyError(Exception):
    """An invariant the library guarantees was observed to fail."""

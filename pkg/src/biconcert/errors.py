"""Exception types shared across the package."""


class GraphInputError(ValueError):
    """Malformed input: bad JSON schema, invalid edge list, out-of-range node."""


class PreconditionError(ValueError):
    """A structural precondition is not met (disconnected graph, n too small)."""


class EigenConvergenceError(RuntimeError):
    """The underlying eigenvalue iteration failed to converge."""

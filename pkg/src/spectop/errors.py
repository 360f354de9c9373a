"""Exception hierarchy shared by all modules.

Every error carries a ``witness`` attribute so callers (and the CLI) can show
the concrete object that triggered it.
"""


class SpectopError(Exception):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class UnknownElement(SpectopError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class DuplicateElement(SpectopError, ValueError):
    pass


class CycleError(SpectopError, ValueError):
    """Raised when a generating relation is not antisymmetric.

    ``witness`` is the offending pair ``(a, b)``, ``cycle`` a path
    ``a -> ... -> b -> ... -> a`` through the generating pairs.
    """

    def __init__(self, message, witness=None, cycle=()):
        super().__init__(message, witness)
        self.cycle = tuple(cycle)


class NotALattice(SpectopError, ValueError):
    pass


class NotBounded(SpectopError, ValueError):
    pass


class SizeLimitExceeded(SpectopError, RuntimeError):
    pass


class InvalidSpace(SpectopError, ValueError):
    pass


class EmptySubset(SpectopError, ValueError):
    pass


class NotSubsetOfX(SpectopError, ValueError):
    pass


class InvalidContext(SpectopError, ValueError):
    pass


class NotXTop(SpectopError, ValueError):
    pass


class InternalInconsistency(SpectopError, AssertionError):
    """Two independent decision routes disagreed. Always a bug, never input."""


class AxiomViolation(SpectopError, ValueError):
    def __init__(self, axiom, witness=None):
        super().__init__(f"semiring axiom violated: {axiom} (witness {witness!r})", witness)
        self.axiom = axiom


class BadParameters(SpectopError, ValueError):
    pass


class ParseError(SpectopError, ValueError):
    def __init__(self, message, line=0, column=0):
        super().__init__(f"{line}:{column}: {message}", (line, column))
        self.line = line
        self.column = column


class SemanticError(SpectopError, ValueError):
    pass

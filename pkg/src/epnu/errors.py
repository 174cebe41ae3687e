"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of a formula."""


class NonPhysicalError(ValueError):
    """A quantity was requested for a state that is not a normalizable bound state."""


class UnsupportedCaseError(ValueError):
    """A special-function evaluation outside the terminating cases we support."""


class ConvergenceError(RuntimeError):
    """A numerical procedure did not converge."""


class NoBoundStateError(RuntimeError):
    """The requested bound state does not exist in the search window."""

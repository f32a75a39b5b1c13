"""Exception types shared across the package."""


class LedlabError(Exception):
    """Base class for all package specific errors."""


class CycleDetected(LedlabError):
    """The input relation contains a directed cycle."""


class CapExceeded(LedlabError):
    """An enumeration or search would exceed the configured cap."""

    def __init__(self, cap, message=None):
        self.cap = cap
        super().__init__(message or f"cap of {cap} exceeded")


class WidthExceeded(LedlabError):
    """A width-bounded algorithm was handed a poset that is too wide."""


class NotALinearExtension(LedlabError):
    """A sequence is not a linear extension of the poset at hand."""


class SizeExceeded(LedlabError):
    """Input is beyond the supported brute-force scale."""


class NotIntervalOrder(LedlabError):
    """The poset admits no consecutive ordering of its maximal antichains."""


class ClassViolation(LedlabError):
    """A constructed poset does not belong to the requested class."""


class InconsistentConstraints(LedlabError):
    """Forced relations are cyclic together with the poset order."""


class MalformedDocument(LedlabError):
    """A document or graph file does not follow the expected format."""

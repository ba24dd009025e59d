"""Exception hierarchy shared by all modules.

The CLI maps these onto exit codes: PreconditionError -> 1,
FormatError -> 2, ResourceLimitError -> 3.
"""


class RecolourError(Exception):
    """Base class for all library errors."""


class PreconditionError(RecolourError):
    """An operation was called on inputs that violate its contract."""


class FormatError(RecolourError):
    """A file or JSON payload does not match its documented schema."""


class ResourceLimitError(RecolourError):
    """An operation would exceed a configured size or count limit.

    ``details`` may carry partial progress, e.g. the count reached before
    an enumeration was aborted.
    """

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details

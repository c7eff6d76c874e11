"""Exception types shared across the package.

The command line maps these onto distinct exit codes, so keep the split:
syntax problems, degree problems, truncation problems and resource caps
are different failures.
"""


class SymfError(Exception):
    """Base class for all errors raised by symf."""


class DegreeError(SymfError):
    """An operand has the wrong degree, or is not homogeneous where it must be."""


class TruncationError(SymfError):
    """A graded series was queried beyond its truncation degree."""


class ResourceLimitError(SymfError):
    """A computation exceeds a documented size cap."""


class ExprError(SymfError):
    """A command line expression failed to parse or to evaluate."""

    def __init__(self, message, position=None):
        if position is not None:
            message = "column %d: %s" % (position + 1, message)
        super().__init__(message)
        self.position = position

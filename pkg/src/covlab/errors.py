"""Exception hierarchy shared across modules.

The CLI maps ``InputError`` to exit code 1 and ``InvariantViolation`` to
exit code 2; everything else is an ordinary crash.
"""


class CovlabError(Exception):
    pass


class InputError(CovlabError):
    """Bad user input: unknown config keys, malformed domains, out-of-range
    requests."""


class InvariantViolation(CovlabError):
    """A hard mathematical assertion failed (degenerate frame, negative
    transversal coordinate, inconsistent partition, ...)."""

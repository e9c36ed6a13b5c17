"""Exception types and the shared enumeration budget."""

import os

DEFAULT_CAP = 10**7


class RecompositionError(AssertionError):
    """A constructed decomposition failed to recompose to its polynomial.

    Raised by the builders and collision constructors; it signals a broken
    formula or a violated precondition rather than bad user input.
    """


class CapExceeded(RuntimeError):
    """A brute-force enumeration would exceed its budget."""


def default_cap() -> int:
    """Enumeration budget, overridable through RITTKIT_CAP."""
    raw = os.environ.get("RITTKIT_CAP")
    if raw is None:
        return DEFAULT_CAP
    cap = int(raw)
    if cap < 1:
        raise ValueError("RITTKIT_CAP must be a positive integer")
    return cap

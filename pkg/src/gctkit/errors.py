"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: ``DomainError`` -> 1,
``CeilingError`` -> 2.
"""


class DomainError(ValueError):
    """Arguments are mathematically invalid (size mismatch, bad shape, ...)."""


class CeilingError(DomainError):
    """A configured resource ceiling would be exceeded."""


class ConsistencyError(AssertionError):
    """An internal cross-check failed; indicates a bug, never bad input."""

"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """Argument outside the domain where a function is defined."""


class ConvergenceError(ArithmeticError):
    """An iteration failed to reach its target within the iteration cap."""


class QuadratureError(ArithmeticError):
    """The integrand produced a non-finite value inside the interval."""

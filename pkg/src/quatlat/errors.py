"""Shared exception types for scope and resource limits."""


class UnsupportedFeatureError(ValueError):
    """Raised for inputs outside the supported scope (e.g. indefinite algebras)."""


class ResourceBudgetExceededError(RuntimeError):
    """Raised when an enumeration would exceed the configured budget."""

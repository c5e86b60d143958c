"""
Errors raised across the project.

Each one maps onto a process exit code in ``main.py``:
``VerificationError`` -> 1, ``ConfigError`` -> 2, ``BudgetExceededError`` -> 3.
"""


class VerificationError(Exception):
    """A checked identity (CSS condition, duality, balancedness, ...) did not hold."""


class ConfigError(Exception):
    """The run configuration is inconsistent or could not be read."""


class BudgetExceededError(Exception):
    """An exhaustive enumeration would exceed the configured budget."""

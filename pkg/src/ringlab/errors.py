"""Shared exception types and search-budget configuration.

Exhaustive searches in this package are always bounded.  Two budgets exist:
a cap on finite-ring enumeration (``element_budget``) and a cap on candidate
searches such as homomorphism or generator hunts (``search_budget``).  The
search budget can be raised globally through the ``RINGLAB_SEARCH_BUDGET``
environment variable; hitting either budget raises :class:`BudgetExceeded`
instead of silently returning a weaker answer.
"""

from __future__ import annotations

import os

DEFAULT_ELEMENT_BUDGET = 4096
DEFAULT_SEARCH_BUDGET = 1_000_000
BUDGET_ENV_VAR = "RINGLAB_SEARCH_BUDGET"


class RinglabError(Exception):
    """Base class for errors raised by this package."""


class MismatchedRings(RinglabError, ValueError):
    """Operands belong to different rings."""


class UnsupportedRing(RinglabError, ValueError):
    """The requested operation is not defined for this ring descriptor."""


class BudgetExceeded(RinglabError):
    """A bounded search ran out of budget before reaching an answer.

    This is an inconclusive outcome, never a negative one.
    """


def element_budget(override: int | None = None) -> int:
    """Cap on the cardinality of rings that exhaustive operations enumerate."""
    if override is not None:
        if override <= 0:
            raise ValueError("element budget must be positive")
        return override
    return DEFAULT_ELEMENT_BUDGET


def search_budget(override: int | None = None) -> int:
    """Cap on candidate searches, overridable via RINGLAB_SEARCH_BUDGET."""
    if override is not None:
        if override <= 0:
            raise ValueError("search budget must be positive")
        return override
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is not None:
        try:
            value = int(raw)
        except ValueError as exc:
            raise ValueError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}") from exc
        if value <= 0:
            raise ValueError(f"{BUDGET_ENV_VAR} must be positive, got {value}")
        return value
    return DEFAULT_SEARCH_BUDGET

"""Enumeration guard: exhaustive walks over ring elements must fail loudly.

The default ceiling is 2**20 elements; the STONEKIT_ELEMENT_LIMIT
environment variable overrides it.
"""

from __future__ import annotations

import os

from .errors import CapacityError

DEFAULT_ELEMENT_LIMIT = 2**20
_ENV_VAR = "STONEKIT_ELEMENT_LIMIT"


def element_limit() -> int:
    raw = os.environ.get(_ENV_VAR)
    if raw is None:
        return DEFAULT_ELEMENT_LIMIT
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_ELEMENT_LIMIT
    return value if value > 0 else DEFAULT_ELEMENT_LIMIT


def require_enumerable(count: int, what: str = "ring") -> None:
    limit = element_limit()
    if count > limit:
        raise CapacityError(
            f"{what} has {count} elements, above the enumeration guard of {limit}"
            f" (raise {_ENV_VAR} to override)"
        )

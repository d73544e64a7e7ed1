"""Global size caps.

The degree cap guards every generator whose output grows with the number of
partitions; ``UMBRA_DEGREE_CAP`` overrides the default at import time.
"""
from __future__ import annotations

import os

from .errors import ResourceError

DEFAULT_DEGREE_CAP = 32
DEFAULT_TRUNCATION = 12


def _cap_from_env() -> int:
    raw = os.environ.get("UMBRA_DEGREE_CAP")
    if raw is None:
        return DEFAULT_DEGREE_CAP
    cap = int(raw)
    if cap <= 0:
        raise ValueError("UMBRA_DEGREE_CAP must be positive")
    return cap


_degree_cap = _cap_from_env()


def degree_cap() -> int:
    return _degree_cap


def set_degree_cap(cap: int) -> None:
    global _degree_cap
    if cap <= 0:
        raise ValueError("degree cap must be positive")
    _degree_cap = cap


def check_degree(n: int, what: str = "degree") -> None:
    if n > _degree_cap:
        raise ResourceError(f"{what} {n} exceeds degree cap {_degree_cap}")

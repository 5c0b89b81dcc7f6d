"""Runtime caps for group construction and subgroup search."""

from __future__ import annotations

import os

DEFAULT_ELEMENT_CAP = 20_000
DEFAULT_SUBGROUP_CAP = 512
DEFAULT_ORACLE_CAP = 40

ENV_ELEMENT_CAP = "GRPCOV_MAX_ELEMENTS"


def element_cap(override: int | None = None) -> int:
    """Effective element cap: explicit override, else env, else default."""
    if override is not None:
        return override
    env = os.environ.get(ENV_ELEMENT_CAP)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{ENV_ELEMENT_CAP} must be an integer, got {env!r}") from None
    return DEFAULT_ELEMENT_CAP


def subgroup_cap(override: int | None = None) -> int:
    return DEFAULT_SUBGROUP_CAP if override is None else override


def oracle_cap(override: int | None = None) -> int:
    return DEFAULT_ORACLE_CAP if override is None else override

"""Runtime defaults, overridable through the environment or a local .env file.

Settings:
- AFFINE_FC_ELEMENT_BUDGET: maximum number of elements one enumeration may produce
- AFFINE_FC_TRACE_CAP: maximum number of traces the exhaustive policy may return
- AFFINE_FC_SEED: default seed of the randomized suites
- AFFINE_FC_EXPRESSION_GUARD: longest element whose reduced expressions are listed
"""

import os

from dotenv import load_dotenv

from .errors import ConfigError

load_dotenv()

DEFAULTS = {
    "AFFINE_FC_ELEMENT_BUDGET": 5_000_000,
    "AFFINE_FC_TRACE_CAP": 1_000_000,
    "AFFINE_FC_SEED": 0,
    "AFFINE_FC_EXPRESSION_GUARD": 12,
}


def get_int(name: str) -> int:
    """Read a non-negative integer setting.

    Args:
        name: One of the keys of DEFAULTS.

    Returns:
        The value from the environment, or the default when unset.
    """
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return DEFAULTS[name]
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None
    if value < 0:
        raise ConfigError(f"{name} must be non-negative, got {value}")
    return value


def element_budget() -> int:
    return get_int("AFFINE_FC_ELEMENT_BUDGET")


def trace_cap() -> int:
    return get_int("AFFINE_FC_TRACE_CAP")


def default_seed() -> int:
    return get_int("AFFINE_FC_SEED")


def expression_guard() -> int:
    return get_int("AFFINE_FC_EXPRESSION_GUARD")

import logging
import multiprocessing
import os
from typing import Optional

from readstr import readstr

logger = logging.getLogger(__name__)

TOLERANCE_VARIABLE = 'METAJACOBI_TOL'
PARALLELISM_VARIABLE = 'METAJACOBI_PARALLELISM'


# noinspection PyShadowingBuiltins
def read_value(value, type):
    if value is None:
        return None
    try:
        return readstr(value, type)
    except ValueError:
        return None


def _read_env(name: str, type):
    raw = os.getenv(name)
    value = read_value(raw, type)
    if raw is not None and value is None:
        logger.warning("ignoring %s=%r, not a valid %s", name, raw, type.__name__)
    return value


def default_tolerance(fallback: float = 1e-10) -> float:
    value: Optional[float] = _read_env(TOLERANCE_VARIABLE, float)
    if value is None:
        return fallback
    return value


def default_parallelism() -> int:
    value: Optional[int] = _read_env(PARALLELISM_VARIABLE, int)
    if value is None or value < 1:
        return multiprocessing.cpu_count()
    return value

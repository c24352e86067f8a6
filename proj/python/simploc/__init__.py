"""Flag complexes, local conditions, disc diagrams and flattened wheel metrics."""

from ._simploc import *  # noqa: F401,F403
from ._simploc import InputError, MetricUndefined, SurgeryError  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]

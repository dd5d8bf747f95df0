"""Stable-like Markov chains: threshold constants, drift criteria, simulation."""

__version__ = "0.1.0"

from .constants import recurrence_constant, transience_constant, transience_ratio  # noqa: E402
from .specfun import DomainError  # noqa: E402
from .stable import StableParams, stable_pdf, stable_sample, tail_constant  # noqa: E402

__all__ = [
    "DomainError",
    "StableParams",
    "recurrence_constant",
    "stable_pdf",
    "stable_sample",
    "tail_constant",
    "transience_constant",
    "transience_ratio",
]

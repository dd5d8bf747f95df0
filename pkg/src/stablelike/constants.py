"""Recurrence and transience threshold constants R(alpha) and T(alpha, beta)."""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .specfun import DomainError, beta as beta_fn, digamma, hyp2f1

# number of explicitly summed terms in sum_i 1/(i(2i - alpha))
_R_SERIES_TERMS = 1 << 20


class ThresholdKind(str, Enum):
    RECURRENCE = "Recurrence"
    TRANSIENCE = "Transience"


@dataclass(frozen=True)
class ThresholdConstant:
    kind: ThresholdKind
    alpha: float
    beta: float
    value: float
    abs_error_estimate: float

    def __post_init__(self):
        if self.kind is ThresholdKind.RECURRENCE:
            ok = 1 < self.alpha < 2
        else:
            ok = 0 <= self.alpha < 1 and 0 < self.beta < 1 - self.alpha
        if not ok:
            raise DomainError(f"{self.kind.value} constant outside its domain")

    def __float__(self):
        return self.value


def harmonic_series(alpha: float, n_terms: int = _R_SERIES_TERMS) -> tuple[float, float]:
    """sum_{i>=1} 1/(i(2i - alpha)) for alpha < 2.

    The first ``n_terms`` terms are summed exactly; the remainder lies between
    the integrals of the (decreasing) summand over [N+1, inf) and [N, inf),
    whose antiderivative is ln((2t - alpha)/(2t))/alpha. Returns the bracket
    midpoint and half its width.
    """
    i = np.arange(1, n_terms + 1, dtype=float)
    head = math.fsum((1.0 / (i * (2.0 * i - alpha)))[::-1])

    def tail_from(n):
        if alpha == 0:
            return 1.0 / (2.0 * n)
        return -math.log1p(-alpha / (2.0 * n)) / alpha

    upper = tail_from(n_terms)
    lower = tail_from(n_terms + 1)
    return head + 0.5 * (upper + lower), 0.5 * (upper - lower)


def recurrence_constant(alpha: float) -> ThresholdConstant:
    """R(alpha) for alpha in (1, 2)."""
    if not 1 < alpha < 2:
        raise DomainError(f"R(alpha) requires 1 < alpha < 2, got {alpha}")
    series, series_err = harmonic_series(alpha)
    psi_diff = digamma((alpha + 1) / 2) - digamma(alpha / 2)
    value = series - math.log(2) / alpha - psi_diff / (2 * alpha)
    err = series_err + 1e-14 * (abs(series) + abs(psi_diff))
    return ThresholdConstant(ThresholdKind.RECURRENCE, alpha, 0.0, value, err)


def transience_constant(alpha: float, beta: float) -> ThresholdConstant:
    """T(alpha, beta) for alpha in [0, 1), beta in (0, 1 - alpha)."""
    if not (0 <= alpha < 1 and 0 < beta < 1 - alpha):
        raise DomainError(
            f"T(alpha, beta) requires 0 <= alpha < 1 and 0 < beta < 1 - alpha, got ({alpha}, {beta})"
        )
    # c - a - b = 1 - beta > 0, so 2F1 at z = 1 has its Gauss closed form
    f = hyp2f1(-alpha, beta, 1 - alpha, 1.0)
    b1 = beta_fn(alpha + beta, 1 - alpha)
    b2 = beta_fn(alpha + beta, 1 - beta)
    value = f.value + beta * b1 - alpha * b2
    err = f.abs_error_estimate + 1e-14 * (abs(f.value) + beta * b1 + alpha * b2)
    return ThresholdConstant(ThresholdKind.TRANSIENCE, alpha, beta, value, err)


def transience_ratio(alpha: float, beta: float) -> float:
    """T(alpha, beta) / beta, strictly decreasing in beta."""
    return transience_constant(alpha, beta).value / beta

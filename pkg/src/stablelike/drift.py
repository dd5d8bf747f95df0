"""Foster-Lyapunov drift of the two test functions and grid classification.

Delta(x) = int f_x(y) [V(x + y) - V(x)] dy for

    V(x) = ln(1 + |x|)               (recurrence test)
    V(x) = 1 - (1 + |x|)^(-beta)     (transience test)

The integral is folded onto y >= 0 so that the symmetric part of f_x meets
the second-order combination g(y) + g(-y), computed without cancellation.
Beyond a cutoff Y (past the kink of V at y = -x and inside the exact power
zone of the density, or far enough out for the stable asymptote) the tails
are integrated in closed form through 2F1.
"""
from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Union

import numpy as np

from .constants import recurrence_constant, transience_constant
from .model import (
    StableLikeModel,
    condition_mean_drift,
    condition_transience_integral,
    condition_transience_simple,
    condition_truncated_log,
    folded_integral,
)
from .specfun import DomainError, gauss_2f1

# per-x budget; overruns are flagged in the report, never hidden
BUDGET_SECONDS = 0.05
ABS_TOL = 1e-8


class QuadratureError(RuntimeError):
    def __init__(self, message, error_estimate):
        self.error_estimate = error_estimate
        super().__init__(f"{message} (error estimate {error_estimate:g})")


class MixedRegimeError(DomainError):
    """alpha(x) straddles 1 on the grid; neither drift criterion covers that."""


@dataclass(frozen=True)
class RecurrenceLog:
    name = "RecurrenceLog"


@dataclass(frozen=True)
class TransiencePower:
    beta: float

    name = "TransiencePower"

    def __post_init__(self):
        if not 0 < self.beta < 1:
            raise DomainError(f"beta must lie in (0, 1), got {self.beta}")


TestFunction = Union[RecurrenceLog, TransiencePower]


# ---------------------------------------------------------------------------
# closed-form tails: int_Y^inf u^(-a-1) g(u) du for an exact power density


def tail_log(a, s, K, Y):
    """int_Y^inf u^(-a-1) ln((u + s)/K) du, |s| < Y."""
    z = -s / Y
    return Y**-a / a * (math.log((Y + s) / K) + gauss_2f1(1.0, a, 1.0 + a, z) / a)


def tail_power(a, beta, s, K, Y):
    """int_Y^inf u^(-a-1) (K^-beta - (u + s)^-beta) du, |s| < Y."""
    z = -s / Y
    return K**-beta * Y**-a / a - Y ** (-a - beta) / (a + beta) * gauss_2f1(beta, a + beta, 1.0 + a + beta, z)


# ---------------------------------------------------------------------------
# integrand pairs on y >= 0 (x >= 0 after orientation)


def _log_terms(x, K):
    def g_both(y):
        gp = np.log1p(y / K)
        near = y <= x
        far = np.log1p((np.maximum(y, x) - 2 * x) / K)
        gm = np.where(near, np.log1p(-np.minimum(y, x) / K), far)
        t = y / K
        s = np.where(near, np.log1p(-np.minimum(t, x / K) ** 2), gp + gm)
        return gp, gm, s

    return g_both


def _pair_for(test, x, K):
    g_both = _log_terms(x, K)
    if isinstance(test, RecurrenceLog):

        def pair(y):
            gp, gm, s = g_both(y)
            return s, gp - gm

        return pair
    beta = test.beta
    kb = K**-beta

    def pair(y):
        gp, gm, s = g_both(y)
        ea = np.expm1(-beta * gp)
        eb = np.expm1(-beta * gm)
        # expm1(a) + expm1(b) = expm1(a + b) - expm1(a) expm1(b)
        return -kb * (np.expm1(-beta * s) - ea * eb), -kb * (ea - eb)

    return pair


def _cutoff(loc, K):
    if math.isfinite(loc.tail_start):
        return max(loc.tail_start, 4 * K), True
    # stable: past this point the first-order tail law is exact to
    # O(Y^-alpha) relative, far below the quadrature tolerance
    return 2.0**24 * (4 * K + loc.core_scale()), False


def drift_with_error(model: StableLikeModel, test: TestFunction, x: float):
    """(Delta(x), error estimate)."""
    x = float(x)
    loc = model.local(x)
    if x < 0:
        loc = loc.reflected()
    ax = abs(x)
    K = 1.0 + ax
    Y, _ = _cutoff(loc, K)
    pair = _pair_for(test, ax, K)
    feats = [(ax, 1.0)]
    body, err = folded_integral(loc, pair, Y, feats)
    if isinstance(test, RecurrenceLog):
        right = tail_log(loc.alpha_plus, K, K, Y)
        left = tail_log(loc.alpha_minus, 1.0 - ax, K, Y)
    else:
        right = tail_power(loc.alpha_plus, test.beta, K, K, Y)
        left = tail_power(loc.alpha_minus, test.beta, 1.0 - ax, K, Y)
    tails = loc.c_plus * right + loc.c_minus * left
    value = body + tails
    err = err + 1e-12 * abs(tails)
    if not math.isfinite(value) or err > ABS_TOL * (1 + abs(value)) and err > 1e-6 * abs(value):
        raise QuadratureError(f"drift at x = {x:g} did not converge", err)
    return value, err


def drift(model: StableLikeModel, test: TestFunction, x: float) -> float:
    return drift_with_error(model, test, x)[0]


def scaled_drift_recurrence(model: StableLikeModel, x: float, normalization: str = "one_plus") -> float:
    """((1+|x|)^alpha(x) / c(x)) * Delta_log(x); ``normalization='abs'`` uses |x|^alpha."""
    loc = model.local(x)
    if max(model.alpha_range(x)[0]) <= 1:
        raise DomainError("the recurrence scaling needs alpha(x) > 1")
    base = 1 + abs(x) if normalization == "one_plus" else abs(x)
    return base**loc.alpha / loc.c * drift(model, RecurrenceLog(), x)


def scaled_drift_transience(model: StableLikeModel, x: float, beta: float) -> float:
    """(alpha(x) |x|^(alpha(x)+beta) / c(x)) * Delta_beta(x)."""
    loc = model.local(x)
    if max(model.alpha_range(x)[1]) >= 1:
        raise DomainError("the transience scaling needs alpha(x) < 1")
    return loc.alpha * abs(x) ** (loc.alpha + beta) / loc.c * drift(model, TransiencePower(beta), x)


# ---------------------------------------------------------------------------
# reports


class Verdict(str, Enum):
    RECURRENT = "RecurrentEvidence"
    TRANSIENT = "TransientEvidence"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class ConditionReport:
    """One sufficient condition checked on a grid of x values.

    ``direction`` is 'below' (values must stay under threshold - margin) or
    'above' (values must stay over threshold + margin), for |x| >= radius.
    """

    name: str
    x_grid: list
    values: list
    threshold: float
    margin: float
    radius: float
    direction: str
    extra: dict = field(default_factory=dict)

    @property
    def satisfied(self) -> bool:
        vals = [v for x, v in zip(self.x_grid, self.values) if abs(x) >= self.radius]
        if not vals:
            return False
        if self.direction == "below":
            return all(v <= self.threshold - self.margin for v in vals)
        return all(v >= self.threshold + self.margin for v in vals)

    def to_dict(self):
        return {
            "name": self.name,
            "x_grid": list(self.x_grid),
            "values": list(self.values),
            "threshold": self.threshold,
            "margin": self.margin,
            "radius": self.radius,
            "direction": self.direction,
            "satisfied": self.satisfied,
            "extra": self.extra,
        }


EVIDENCE_NOTE = "numerical evidence on a finite grid, not a proof"


@dataclass
class DriftReport:
    test: TestFunction
    x_grid: list
    raw_drift: list
    scaled_drift: list
    radius: float
    margin: float
    verdict: Verdict
    threshold: float
    alpha: float
    abs_errors: list = field(default_factory=list)
    conditions: list = field(default_factory=list)
    budget_exceeded: int = 0
    notes: list = field(default_factory=list)

    def to_dict(self):
        test = {"kind": self.test.name}
        if isinstance(self.test, TransiencePower):
            test["beta"] = self.test.beta
        return {
            "test": test,
            "x_grid": list(self.x_grid),
            "raw_drift": list(self.raw_drift),
            "scaled_drift": list(self.scaled_drift),
            "abs_errors": list(self.abs_errors),
            "radius": self.radius,
            "margin": self.margin,
            "threshold": self.threshold,
            "alpha": self.alpha,
            "verdict": self.verdict.value,
            "conditions": [c.to_dict() for c in self.conditions],
            "budget_exceeded": self.budget_exceeded,
            "notes": list(self.notes) + [EVIDENCE_NOTE],
        }

    def csv_rows(self):
        """Rows keyed by the CSV columns of the chosen regime."""
        conds = {c.name: c for c in self.conditions}
        rows = []
        for i, x in enumerate(self.x_grid):
            row = {"x": x, "raw_drift": self.raw_drift[i], "scaled_drift": self.scaled_drift[i]}
            if isinstance(self.test, RecurrenceLog):
                row["condition_13"] = conds["condition_13"].values[i]
                trend = conds["condition_15"].extra["delta_trend"]
                row["condition_15_delta_trend"] = ";".join(format(t[i], ".17g") for t in trend.values())
            else:
                row["condition_14"] = conds["condition_14"].values[i]
                row["condition_17_lhs"] = conds["condition_17"].values[i]
                row["condition_17_rhs"] = conds["condition_17"].threshold
            rows.append(row)
        return rows


def symmetric_grid(grid):
    g = np.unique(np.abs(np.asarray(grid, dtype=float)))
    return [float(v) for v in np.concatenate([-g[::-1], g])]


def _map(fn, xs, threads):
    if threads and threads > 1:
        with ThreadPoolExecutor(threads) as ex:
            return list(ex.map(fn, xs))
    return [fn(x) for x in xs]


def _timed(fn):
    def run(x):
        t0 = time.perf_counter()
        out = fn(x)
        return out, time.perf_counter() - t0

    return run


def report_mean_drift(model, xs, radius, margin, R, threads=1):
    vals = _map(lambda x: condition_mean_drift(model, x), xs, threads)
    return ConditionReport("condition_13", xs, vals, R, margin, radius, "below")


DEFAULT_DELTAS = (0.5, 0.2, 0.1, 0.05)


def report_truncated_log(model, xs, radius, margin, R, deltas=DEFAULT_DELTAS, threads=1):
    trend = {}
    for d in deltas:
        trend[format(d, "g")] = _map(lambda x: condition_truncated_log(model, x, d), xs, threads)
    # the smallest delta stands in for the delta -> 0 limit; the trend is kept
    vals = trend[format(deltas[-1], "g")]
    return ConditionReport("condition_15", xs, vals, R, margin, radius, "below", {"delta_trend": trend})


def report_transience_integral(model, xs, radius, margin, T, beta, a0=1.0, threads=1):
    def worst(x):
        K = 1 + abs(x)
        vals = [condition_transience_integral(model, x, a, beta) for a in (a0, 10 * a0, 100 * a0) if a < K]
        return min(vals)

    vals = _map(worst, xs, threads)
    return ConditionReport("condition_14", xs, vals, -T, margin, radius, "above", {"a0": a0, "beta": beta})


def report_transience_simple(model, xs, radius, margin, beta, alpha_sup, a0=1.0, threads=1):
    pairs = _map(lambda x: condition_transience_simple(model, x, beta, a0, alpha_sup), xs, threads)
    lhs = [p[0] for p in pairs]
    rhs = pairs[0][1]
    return ConditionReport("condition_17", xs, lhs, rhs, 0.0, radius, "below", {"a0": a0, "beta": beta})


def default_betas(alpha_sup):
    gap = 1 - alpha_sup
    return [f * gap for f in (0.5, 0.25, 0.1)]


def classify(
    model: StableLikeModel,
    beta_candidates=None,
    grid=None,
    radius: float = 1e3,
    margin: Optional[float] = None,
    a0: float = 1.0,
    deltas=DEFAULT_DELTAS,
    threads: int = 1,
) -> DriftReport:
    """Drift-sign classification on a grid of |x| values (both signs of x).

    The index extreme over the grid beyond ``radius`` stands in for the
    liminf/limsup of alpha. The first test whose scaled drift clears the
    margin at every grid point beyond the radius gives the verdict; if an
    attached sufficient-condition report then fails, the verdict is
    downgraded to Inconclusive so the two never disagree.
    """
    grid = np.logspace(2, 6, 9) if grid is None else np.asarray(grid, dtype=float)
    xs = symmetric_grid(grid)
    outer = [x for x in xs if abs(x) >= radius]
    if not outer:
        raise DomainError("no grid points beyond the radius")
    mags = [abs(x) for x in outer]
    if max(mags) / max(radius, min(mags)) < 100 * (1 - 1e-12):
        raise DomainError("grid must span at least two decades beyond the radius")
    lo, hi = model.alpha_range(np.asarray(xs))
    a_inf, a_sup = float(np.min(lo)), float(np.max(hi))
    lo_o, hi_o = model.alpha_range(np.asarray(outer))
    a_inf_o, a_sup_o = float(np.min(lo_o)), float(np.max(hi_o))

    if a_inf > 1:
        test = RecurrenceLog()
        R = recurrence_constant(a_inf_o).value
        m = 0.05 * R if margin is None else margin

        def one(x):
            v, e = drift_with_error(model, test, x)
            loc = model.local(x)
            return v, e, (1 + abs(x)) ** loc.alpha / loc.c * v

        res = _map(_timed(one), xs, threads)
        raw = [r[0][0] for r in res]
        errs = [r[0][1] for r in res]
        scaled = [r[0][2] for r in res]
        over = sum(r[1] > BUDGET_SECONDS for r in res)
        ok = all(s <= -m for x, s in zip(xs, scaled) if abs(x) >= radius)
        conds = [
            report_mean_drift(model, xs, radius, m, R, threads),
            report_truncated_log(model, xs, radius, m, R, deltas, threads),
        ]
        verdict = Verdict.RECURRENT if ok else Verdict.INCONCLUSIVE
        notes = []
        if ok and not all(c.satisfied for c in conds):
            verdict = Verdict.INCONCLUSIVE
            notes.append("drift sign negative but a recurrence condition report fails; downgraded")
        return DriftReport(test, xs, raw, scaled, radius, m, verdict, R, a_inf_o, errs, conds, over, notes)

    if a_sup < 1:
        betas = default_betas(a_sup_o) if beta_candidates is None else list(beta_candidates)
        betas = [b for b in betas if 0 < b < 1 - a_sup_o]
        if not betas:
            raise DomainError(f"no beta candidate in (0, {1 - a_sup_o:g})")
        last = None
        for beta in betas:
            test = TransiencePower(beta)
            T = transience_constant(a_sup_o, beta).value
            m = 0.05 * T if margin is None else margin

            def one(x, test=test, beta=beta):
                v, e = drift_with_error(model, test, x)
                loc = model.local(x)
                return v, e, loc.alpha * abs(x) ** (loc.alpha + beta) / loc.c * v

            res = _map(_timed(one), xs, threads)
            raw = [r[0][0] for r in res]
            errs = [r[0][1] for r in res]
            scaled = [r[0][2] for r in res]
            over = sum(r[1] > BUDGET_SECONDS for r in res)
            ok = all(s >= m for x, s in zip(xs, scaled) if abs(x) >= radius)
            last = (test, raw, scaled, m, T, errs, over)
            if ok:
                break
        test, raw, scaled, m, T, errs, over = last
        conds = [
            report_transience_integral(model, xs, radius, m, T, test.beta, a0, threads),
            report_transience_simple(model, xs, radius, m, test.beta, a_sup_o, a0, threads),
        ]
        verdict = Verdict.TRANSIENT if ok else Verdict.INCONCLUSIVE
        notes = []
        # condition_17 is only a stronger sufficient condition; condition_14
        # is the one a transient verdict must not contradict
        if ok and not conds[0].satisfied:
            verdict = Verdict.INCONCLUSIVE
            notes.append("drift sign positive but the transience integral condition fails; downgraded")
        return DriftReport(test, xs, raw, scaled, radius, m, verdict, T, a_sup_o, errs, conds, over, notes)

    raise MixedRegimeError(f"alpha ranges over [{a_inf:g}, {a_sup:g}] on the grid, straddling 1")

"""Stable-like jump families f_x and the per-x condition quantities.

A model is a family of jump densities indexed by the current state x. Two
families are provided:

* ``ExactStable``: f_x is the S_alpha(x)(skew(x), scale(x), shift(x)) density.
* ``ParetoTail``: exact power tails c_plus(x) y^(-alpha_plus(x)-1) for y >= y0(x),
  c_minus(x) |y|^(-alpha_minus(x)-1) for y <= -y0(x) and a flat plateau between.

Every asymptotic quantity in this module is evaluated at finitely many x;
reports built on top of it are numerical evidence only.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from . import quad
from .constants import transience_constant
from .expr import Expr, ExprError, evaluate, is_constant, parse, pretty
from .specfun import DomainError
from .stable import StableParams, cms_transform, stable_pdf, tail_constant


class ProfileRangeError(DomainError):
    """A profile left its admissible range at some x."""


class NonIntegrableMeanError(DomainError):
    """The jump law has no finite mean (alpha <= 1)."""


@dataclass(frozen=True)
class Profile:
    """A parsed scalar function of x."""

    source: str
    expr: Expr = field(compare=False, repr=False)

    @classmethod
    def of(cls, value) -> "Profile":
        if isinstance(value, Profile):
            return value
        if isinstance(value, (int, float)):
            value = repr(float(value))
        return cls(str(value), parse(str(value)))

    @property
    def constant(self) -> bool:
        return is_constant(self.expr)

    def __call__(self, x):
        return evaluate(self.expr, x)

    def __str__(self):
        return self.source


def _prof(v):
    return Profile.of(v)


# ---------------------------------------------------------------------------
# local (fixed-x) densities


@dataclass(frozen=True)
class StableJump:
    """f_x for an exact stable family at one x."""

    params: StableParams

    @property
    def alpha(self):
        return self.params.alpha

    alpha_plus = alpha_minus = alpha

    @property
    def c(self):
        return tail_constant(self.params)

    @property
    def c_plus(self):
        return self.c * (1 + self.params.skew)

    @property
    def c_minus(self):
        return self.c * (1 - self.params.skew)

    @property
    def symmetric(self):
        return self.params.symmetric

    # exact power-law zone; a stable density is never exactly a power
    tail_start = math.inf

    def features(self):
        p = self.params
        return [(0.0, p.scale), (abs(p.shift), p.scale)]

    def core_scale(self):
        return self.params.scale + abs(self.params.shift)

    def pdf(self, y):
        return stable_pdf(self.params, y)

    def mean(self):
        if self.alpha <= 1:
            raise NonIntegrableMeanError("stable law with alpha <= 1 has no mean")
        return self.params.shift

    def reflected(self):
        p = self.params
        return StableJump(StableParams(p.alpha, -p.skew, p.scale, -p.shift))


def solve_plateau(alpha_plus, alpha_minus, c_plus, c_minus, core_halfwidth):
    """(y0, h) making the plateau-plus-Pareto density integrate to one.

    y0 solves c+ y0^-a+ (1 + 1/a+) + c- y0^-a- (1 + 1/a-) = 1, which makes
    the plateau height the mean of the two tail edge values (continuous in
    the symmetric case). When that root falls inside ``core_halfwidth`` the
    plateau is widened to it and h absorbs the remaining mass. Vectorised.
    """
    ap, am, cp, cm = np.broadcast_arrays(
        *(np.asarray(v, dtype=float) for v in (alpha_plus, alpha_minus, c_plus, c_minus))
    )

    def F(y):
        return cp * y ** (-ap) * (1 + 1 / ap) + cm * y ** (-am) * (1 + 1 / am)

    def dF(y):
        return -(cp * ap * y ** (-ap) * (1 + 1 / ap) + cm * am * y ** (-am) * (1 + 1 / am)) / y

    y = np.full(ap.shape, float(core_halfwidth))
    active = F(y) > 1
    # F is convex and decreasing in log y, so Newton from the left is monotone
    for _ in range(200):
        if not np.any(active):
            break
        t = np.log(y[active])
        fv = F(y[active]) - 1
        step = fv / (dF(y[active]) * y[active])
        t = t - step
        y[active] = np.exp(t)
        done = np.abs(step) < 1e-15
        idx = np.flatnonzero(active)
        active[idx[done]] = False
    tails = cp * y ** (-ap) / ap + cm * y ** (-am) / am
    h = (1 - tails) / (2 * y)
    return y, h


@dataclass(frozen=True)
class ParetoJump:
    """f_x for the plateau-plus-Pareto family at one x."""

    alpha_plus: float
    alpha_minus: float
    c_plus: float
    c_minus: float
    y0: float
    height: float

    @property
    def alpha(self):
        return 0.5 * (self.alpha_plus + self.alpha_minus)

    @property
    def c(self):
        return 0.5 * (self.c_plus + self.c_minus)

    @property
    def symmetric(self):
        return self.alpha_plus == self.alpha_minus and self.c_plus == self.c_minus

    @property
    def tail_start(self):
        return self.y0

    def features(self):
        return [(0.0, min(1.0, self.y0)), (self.y0, min(1.0, self.y0))]

    def core_scale(self):
        return self.y0

    def pdf(self, y):
        scalar = np.ndim(y) == 0
        y = np.atleast_1d(np.asarray(y, dtype=float))
        u = np.abs(y)
        out = np.full(y.shape, self.height)
        right = y >= self.y0
        left = y <= -self.y0
        out[right] = self.c_plus * u[right] ** (-self.alpha_plus - 1)
        out[left] = self.c_minus * u[left] ** (-self.alpha_minus - 1)
        return float(out[0]) if scalar else out

    def tail_ratio(self, sign, y):
        """f(sign*y) y^(alpha+1) / c on y > 0; exactly 1 past the plateau."""
        y = np.asarray(y, dtype=float)
        a, c = (self.alpha_plus, self.c_plus) if sign > 0 else (self.alpha_minus, self.c_minus)
        return np.where(y >= self.y0, 1.0, self.height * y ** (a + 1) / c)

    def mean(self):
        if min(self.alpha_plus, self.alpha_minus) <= 1:
            raise NonIntegrableMeanError("Pareto tail with alpha <= 1 has no mean")
        return self.c_plus * self.y0 ** (1 - self.alpha_plus) / (self.alpha_plus - 1) - (
            self.c_minus * self.y0 ** (1 - self.alpha_minus) / (self.alpha_minus - 1)
        )

    def reflected(self):
        return ParetoJump(self.alpha_minus, self.alpha_plus, self.c_minus, self.c_plus, self.y0, self.height)


LocalJump = Union[StableJump, ParetoJump]


# ---------------------------------------------------------------------------
# families


@dataclass(frozen=True)
class ExactStable:
    alpha: Profile
    skew: Profile = field(default_factory=lambda: _prof(0.0))
    scale: Profile = field(default_factory=lambda: _prof(1.0))
    shift: Profile = field(default_factory=lambda: _prof(0.0))

    kind = "exact_stable"

    def __post_init__(self):
        for name in ("alpha", "skew", "scale", "shift"):
            object.__setattr__(self, name, _prof(getattr(self, name)))

    def profiles(self):
        return {"alpha": self.alpha, "skew": self.skew, "scale": self.scale, "shift": self.shift}

    def evaluate(self, x):
        x = np.atleast_1d(np.asarray(x, dtype=float))
        a, b, g, d = (np.broadcast_to(p(x), x.shape) for p in (self.alpha, self.skew, self.scale, self.shift))
        bad = ~((a > 0) & (a <= 2))
        if np.any(bad):
            raise ProfileRangeError(f"alpha(x) = {a[bad][0]:g} outside (0, 2] at x = {x[bad][0]:g}")
        bad = ~((b >= -1) & (b <= 1))
        if np.any(bad):
            raise ProfileRangeError(f"skew(x) = {b[bad][0]:g} outside [-1, 1] at x = {x[bad][0]:g}")
        bad = ~(g > 0)
        if np.any(bad):
            raise ProfileRangeError(f"scale(x) = {g[bad][0]:g} not positive at x = {x[bad][0]:g}")
        bad = (a == 1) & (b != 0)
        if np.any(bad):
            raise ProfileRangeError(f"skewed alpha = 1 law requested at x = {x[bad][0]:g}")
        return a, b, g, d

    def local(self, x: float) -> StableJump:
        a, b, g, d = (float(v[0]) for v in self.evaluate(x))
        return StableJump(StableParams(a, b, g, d))

    def alpha_range(self, x):
        a = self.evaluate(x)[0]
        return a, a

    def sample(self, x, u1, u2):
        a, b, g, d = self.evaluate(x)
        v = np.pi * (u1 - 0.5)
        w = -np.log1p(-u2)
        return g * cms_transform(a, b, v, w) + d


@dataclass(frozen=True)
class ParetoTail:
    alpha_plus: Profile
    alpha_minus: Profile
    c_plus: Profile
    c_minus: Profile
    core_halfwidth: float = 1.0

    kind = "pareto_tail"

    def __post_init__(self):
        for name in ("alpha_plus", "alpha_minus", "c_plus", "c_minus"):
            object.__setattr__(self, name, _prof(getattr(self, name)))
        if not (self.core_halfwidth > 0 and math.isfinite(self.core_halfwidth)):
            raise DomainError("core_halfwidth must be positive")

    @classmethod
    def symmetric(cls, alpha, c, core_halfwidth=1.0):
        return cls(alpha, alpha, c, c, core_halfwidth)

    def profiles(self):
        return {
            "alpha_plus": self.alpha_plus,
            "alpha_minus": self.alpha_minus,
            "c_plus": self.c_plus,
            "c_minus": self.c_minus,
        }

    def evaluate(self, x):
        x = np.atleast_1d(np.asarray(x, dtype=float))
        ap, am, cp, cm = (
            np.broadcast_to(p(x), x.shape) for p in (self.alpha_plus, self.alpha_minus, self.c_plus, self.c_minus)
        )
        for name, v in (("alpha_plus", ap), ("alpha_minus", am)):
            bad = ~((v > 0) & (v < 2))
            if np.any(bad):
                raise ProfileRangeError(f"{name}(x) = {v[bad][0]:g} outside (0, 2) at x = {x[bad][0]:g}")
        for name, v in (("c_plus", cp), ("c_minus", cm)):
            bad = ~(v > 0)
            if np.any(bad):
                raise ProfileRangeError(f"{name}(x) = {v[bad][0]:g} not positive at x = {x[bad][0]:g}")
        y0, h = solve_plateau(ap, am, cp, cm, self.core_halfwidth)
        return ap, am, cp, cm, y0, h

    def local(self, x: float) -> ParetoJump:
        return ParetoJump(*(float(v[0]) for v in self.evaluate(x)))

    def alpha_range(self, x):
        ap, am = self.evaluate(x)[:2]
        return np.minimum(ap, am), np.maximum(ap, am)

    def sample(self, x, u1, u2=None):
        ap, am, cp, cm, y0, h = self.evaluate(x)
        m_minus = cm * y0 ** (-am) / am
        m_core = 2 * y0 * h
        with np.errstate(all="ignore"):
            left = -((am * u1 / cm) ** (-1 / am))
            core = -y0 + (u1 - m_minus) / h
            right = (ap * (1 - u1) / cp) ** (-1 / ap)
        return np.where(u1 < m_minus, left, np.where(u1 < m_minus + m_core, core, right))


DensityFamily = Union[ExactStable, ParetoTail]


@dataclass(frozen=True)
class StableLikeModel:
    family: DensityFamily
    k_cutoff: float = 1.0
    l_cutoff: float = 1.0
    name: str = ""

    def __post_init__(self):
        for n in ("k_cutoff", "l_cutoff"):
            v = getattr(self, n)
            if not (v > 0 and math.isfinite(v)):
                raise DomainError(f"{n} must be finite and positive")

    def local(self, x: float) -> LocalJump:
        return self.family.local(float(x))

    def alpha_range(self, x):
        return self.family.alpha_range(x)

    def to_config(self) -> dict:
        cfg = {"family": self.family.kind, "k_cutoff": self.k_cutoff, "l_cutoff": self.l_cutoff}
        cfg.update({k: p.source for k, p in self.family.profiles().items()})
        if isinstance(self.family, ParetoTail):
            cfg["core_halfwidth"] = self.family.core_halfwidth
        return cfg


# ---------------------------------------------------------------------------
# config documents and presets


class ConfigError(DomainError):
    pass


_STABLE_KEYS = {"alpha", "skew", "scale", "shift"}
_PARETO_KEYS = {"alpha_plus", "alpha_minus", "c_plus", "c_minus", "alpha", "c", "core_halfwidth"}
_COMMON_KEYS = {"family", "k_cutoff", "l_cutoff", "name"}


def model_from_config(cfg: dict) -> StableLikeModel:
    """Build a model from a config mapping; profile strings use the expr grammar."""
    if not isinstance(cfg, dict):
        raise ConfigError("model config must be a JSON object")
    try:
        return _model_from_config(cfg)
    except ExprError as e:
        raise ConfigError(f"profile {e.field!r}: {e}") from e


def _parse_field(cfg, key, default=None):
    value = cfg.get(key, default)
    try:
        return _prof(value)
    except ExprError as e:
        e.field = key
        raise


def _model_from_config(cfg):
    fam = cfg.get("family")
    common = dict(
        k_cutoff=float(cfg.get("k_cutoff", 1.0)),
        l_cutoff=float(cfg.get("l_cutoff", 1.0)),
        name=str(cfg.get("name", "")),
    )
    if fam == "exact_stable":
        unknown = set(cfg) - _STABLE_KEYS - _COMMON_KEYS
        if unknown:
            raise ConfigError(f"unknown keys for exact_stable: {sorted(unknown)}")
        if "alpha" not in cfg:
            raise ConfigError("exact_stable needs an 'alpha' profile")
        family = ExactStable(
            _parse_field(cfg, "alpha"),
            _parse_field(cfg, "skew", 0.0),
            _parse_field(cfg, "scale", 1.0),
            _parse_field(cfg, "shift", 0.0),
        )
    elif fam == "pareto_tail":
        unknown = set(cfg) - _PARETO_KEYS - _COMMON_KEYS
        if unknown:
            raise ConfigError(f"unknown keys for pareto_tail: {sorted(unknown)}")

        def pick(side, short):
            if side in cfg:
                return _parse_field(cfg, side)
            if short in cfg:
                return _parse_field(cfg, short)
            raise ConfigError(f"pareto_tail needs '{side}' (or '{short}')")

        family = ParetoTail(
            pick("alpha_plus", "alpha"),
            pick("alpha_minus", "alpha"),
            pick("c_plus", "c"),
            pick("c_minus", "c"),
            float(cfg.get("core_halfwidth", 1.0)),
        )
    else:
        raise ConfigError(f"family must be 'exact_stable' or 'pareto_tail', got {fam!r}")
    return StableLikeModel(family, **common)


def load_config(path) -> StableLikeModel:
    with open(path, encoding="utf-8") as fh:
        try:
            cfg = json.load(fh)
        except json.JSONDecodeError as e:
            raise ConfigError(f"{path}: invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}") from None
    return model_from_config(cfg)


PRESETS = {
    # constant-index symmetric alpha-stable random walk
    "sas_const": {"alpha": 1.5},
    # index switching between half-lines
    "two_valued": {"alpha_minus": 0.4, "alpha_plus": 0.6},
    # periodic index, kept inside (0, 1) where any continuous index is admissible
    "periodic": {"center": 0.5, "amplitude": 0.2},
    # symmetric plateau-plus-Pareto density
    "pareto_sym": {"alpha": 1.5, "c": 0.3},
}


def preset_config(name: str, **params) -> dict:
    if name not in PRESETS:
        raise ConfigError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}")
    p = dict(PRESETS[name])
    unknown = set(params) - set(p)
    if unknown:
        raise ConfigError(f"preset {name!r} has no parameters {sorted(unknown)}")
    p.update({k: float(v) for k, v in params.items()})
    if name == "sas_const":
        return {"family": "exact_stable", "alpha": repr(p["alpha"]), "name": name}
    if name == "two_valued":
        return {
            "family": "exact_stable",
            "alpha": f"ite(x < 0, {p['alpha_minus']!r}, {p['alpha_plus']!r})",
            "name": name,
        }
    if name == "periodic":
        return {"family": "exact_stable", "alpha": f"{p['center']!r} + {p['amplitude']!r}*sin(x)", "name": name}
    return {"family": "pareto_tail", "alpha": repr(p["alpha"]), "c": repr(p["c"]), "name": name}


def preset(name: str, **params) -> StableLikeModel:
    return model_from_config(preset_config(name, **params))


def validate_exact_stable(model: StableLikeModel, x_grid, max_levels=8) -> list[str]:
    """Check the sufficient conditions for an exact stable family on a grid.

    Outside [-k, k] the index must lie in (0, 1) or in a finite set of values
    in [1, 2); where it is >= 1, skewness and scale must also come from finite
    sets, with |skew| < 1. Finiteness is judged by counting distinct values on
    the grid (more than ``max_levels`` is reported). Returns a list of issues.
    """
    fam = model.family
    if not isinstance(fam, ExactStable):
        return []
    x = np.asarray(x_grid, dtype=float)
    a, b, g, d = fam.evaluate(x)
    issues = []
    outer = np.abs(x) > model.k_cutoff
    heavy = outer & (a >= 1)
    if np.any(a[outer] >= 2):
        issues.append("alpha reaches 2 outside [-k, k]")
    for name, v in (("alpha", a), ("skew", b), ("scale", g)):
        levels = np.unique(v[heavy])
        if levels.size > max_levels:
            issues.append(f"{name} takes {levels.size} distinct values where alpha >= 1 (finite set expected)")
    if np.any(np.abs(b[outer]) >= 1):
        issues.append("|skew| reaches 1 outside [-k, k]")
    return issues


# ---------------------------------------------------------------------------
# folded integration against f_x


def folded_integral(local: LocalJump, pair, hi: float, features=(), lo: float = 0.0):
    """int_{lo <= |y| <= hi} f(y) g(y) dy with the two half-lines folded onto y >= 0.

    ``pair(y)`` returns (S, D) = (g(y) + g(-y), g(y) - g(-y)) for y >= 0, so
    that callers can form S without cancellation (it is second order for the
    test functions used here). Returns (value, error estimate).
    """
    if hi <= lo:
        return 0.0, 0.0
    feats = list(local.features()) + list(features)
    edges = quad.make_edges(lo, hi, feats)
    sym = local.symmetric

    def integrand(y):
        fp = local.pdf(y)
        S, D = pair(y)
        if sym:
            return fp * S
        fm = local.pdf(-y)
        return 0.5 * (fp + fm) * S + 0.5 * (fp - fm) * D

    return quad.integrate(integrand, edges)


def _oriented(model, x):
    """Local density seen from |x| (reflected when x < 0)."""
    loc = model.local(x)
    return loc.reflected() if x < 0 else loc


def log_pair(K):
    """(S, D) for g(y) = ln(1 + y/K), |y| < K."""

    def pair(y):
        t = y / K
        return np.log1p(-t * t), np.log1p(t) - np.log1p(-t)

    return pair


def power_pair(K, beta):
    """(S, D) for g(y) = 1 - (1 + y/K)^(-beta), |y| < K."""

    def pair(y):
        t = y / K
        ea = np.expm1(-beta * np.log1p(t))
        eb = np.expm1(-beta * np.log1p(-t))
        s = ea * eb - np.expm1(-beta * np.log1p(-t * t))
        return s, eb - ea

    return pair


# ---------------------------------------------------------------------------
# per-x condition quantities


def jump_density(model: StableLikeModel, x: float, y):
    """f_x(y)."""
    return model.local(x).pdf(y)


def uniform_pair(rng: np.random.Generator, shape=()):
    """Two arrays of uniforms on the open interval (0, 1).

    53-bit draws are shifted by half a grid step so neither the angle nor the
    exponential variate built from them can hit its singular endpoint.
    """
    u = rng.random((2,) + tuple(shape)) + 2.0**-54
    return u[0], u[1]


def jump_sample(model: StableLikeModel, x, rng: np.random.Generator, size=None):
    """Draw from f_x. With an array x (and no size) one draw per state."""
    shape = tuple(np.atleast_1d(size)) if size is not None else np.shape(x)
    u1, u2 = uniform_pair(rng, shape)
    xs = np.broadcast_to(np.asarray(x, dtype=float), shape)
    out = model.family.sample(np.atleast_1d(xs), np.atleast_1d(u1), np.atleast_1d(u2))
    return float(out[0]) if shape == () else out.reshape(shape)


def condition_mean_drift(model: StableLikeModel, x: float) -> float:
    """sgn(x) |x|^(alpha(x)-1) / c(x) * E[jump | X0 = x]; the mean is exact for both families."""
    loc = model.local(x)
    m = loc.mean()
    if x == 0:
        return 0.0
    return math.copysign(1.0, x) * abs(x) ** (loc.alpha - 1) / loc.c * m


def condition_truncated_log(model: StableLikeModel, x: float, delta: float) -> float:
    """((1+|x|)^alpha / c) * int_{|y| < delta(1+|x|)} ln(1 + sgn(x) y/(1+|x|)) f_x(y) dy."""
    if not 0 < delta < 1:
        raise DomainError("delta must lie in (0, 1)")
    loc = _oriented(model, x)
    K = 1 + abs(x)
    val, _ = folded_integral(loc, log_pair(K), delta * K)
    base = model.local(x)
    return K**base.alpha / base.c * val


def condition_transience_integral(model: StableLikeModel, x: float, a: float, beta: float) -> float:
    """(alpha|x|^alpha / c) * int_{-a}^{a} (1 - (1 + sgn(x) y/(1+|x|))^(-beta)) f_x(y) dy."""
    loc = model.local(x)
    if max(model.alpha_range(x)[1]) >= 1:
        raise DomainError("the transience integral needs alpha(x) < 1")
    if not 0 < beta < 1:
        raise DomainError("beta must lie in (0, 1)")
    K = 1 + abs(x)
    if a >= K:
        raise DomainError(f"window a = {a:g} reaches past the origin at x = {x:g}")
    val, _ = folded_integral(_oriented(model, x), power_pair(K, beta), a)
    return loc.alpha * abs(x) ** loc.alpha / loc.c * val


def condition_transience_simple(model: StableLikeModel, x: float, beta: float, a0: float, alpha_sup=None):
    """(lhs, rhs) = (alpha|x|^(alpha-1)/c, T(alpha_sup, beta)/(a0 beta))."""
    loc = model.local(x)
    if max(model.alpha_range(x)[1]) >= 1:
        raise DomainError("the simplified transience condition needs alpha(x) < 1")
    a_sup = loc.alpha if alpha_sup is None else alpha_sup
    lhs = loc.alpha * abs(x) ** (loc.alpha - 1) / loc.c
    rhs = transience_constant(a_sup, beta).value / (a0 * beta)
    return lhs, rhs


# ---------------------------------------------------------------------------
# tail uniformity


@dataclass(frozen=True)
class TailDiagnostic:
    x_grid: tuple
    y_grid: tuple
    sup_deviation: tuple  # per y, sup over x and both sides
    max_plateau_edge: float
    decreasing: bool

    @property
    def final(self):
        return self.sup_deviation[-1]

    def rows(self):
        return [{"y": y, "sup_deviation": d} for y, d in zip(self.y_grid, self.sup_deviation)]


def check_tail_uniformity(model: StableLikeModel, x_grid, y_grid) -> TailDiagnostic:
    """sup_x |f_x(+-y) y^(alpha_pm(x)+1) / c_pm(x) - 1| for each y."""
    xs = [float(v) for v in x_grid]
    ys = np.asarray(y_grid, dtype=float)
    if any(abs(v) <= model.k_cutoff for v in xs):
        raise DomainError("tail uniformity is checked only for |x| > k_cutoff")
    if np.any(ys <= 0) or np.any(np.diff(ys) <= 0):
        raise DomainError("y grid must be increasing and positive")
    dev = np.zeros(ys.size)
    edge = 0.0
    for x in xs:
        loc = model.local(x)
        edge = max(edge, loc.tail_start if math.isfinite(loc.tail_start) else 0.0)
        for sign, a, c in ((1, loc.alpha_plus, loc.c_plus), (-1, loc.alpha_minus, loc.c_minus)):
            if c <= 0:
                continue
            if hasattr(loc, "tail_ratio"):
                ratio = loc.tail_ratio(sign, ys)
            else:
                ratio = loc.pdf(sign * ys) * ys ** (a + 1) / c
            dev = np.maximum(dev, np.abs(ratio - 1))
    decreasing = bool(np.all(np.diff(dev) <= 0))
    return TailDiagnostic(tuple(xs), tuple(ys.tolist()), tuple(dev.tolist()), edge, decreasing)


__all__ = [
    "Profile",
    "ExactStable",
    "ParetoTail",
    "StableLikeModel",
    "StableJump",
    "ParetoJump",
    "ProfileRangeError",
    "NonIntegrableMeanError",
    "ConfigError",
    "PRESETS",
    "preset",
    "preset_config",
    "model_from_config",
    "load_config",
    "validate_exact_stable",
    "solve_plateau",
    "jump_density",
    "jump_sample",
    "condition_mean_drift",
    "condition_truncated_log",
    "condition_transience_integral",
    "condition_transience_simple",
    "check_tail_uniformity",
    "TailDiagnostic",
    "folded_integral",
    "pretty",
]

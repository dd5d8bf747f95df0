"""Seeded simulation of stable-like chains X_{n+1} = X_n + jump ~ f_{X_n}.

Every path owns a PCG64 stream seeded by mix64(seed, path_index), so a path's
trajectory does not depend on which other paths run beside it, in what
order, or on how many threads. Paths are advanced together as a vector; each
step consumes exactly two uniforms per path, drawn from that path's stream in
blocks. Finite-horizon statistics are evidence only; recurrence concerns the
infinite horizon.
"""
from __future__ import annotations

import math
import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from .model import StableLikeModel
from .specfun import DomainError

CLAMP = 1e300
BLOCK = 1024
MASK64 = (1 << 64) - 1

EVIDENCE_NOTE = "finite-horizon simulation statistics are evidence, not a proof of recurrence or transience"


def mix64(seed: int, path_index: int) -> int:
    """SplitMix64 finaliser applied to seed + (index + 1) * golden gamma."""
    z = (seed + (path_index + 1) * 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def path_stream(seed: int, path_index: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(mix64(seed, path_index)))


@dataclass(frozen=True)
class SimConfig:
    n_steps: int
    n_paths: int
    seed: int = 42
    x0: float = 0.0
    return_radius: float = 1.0
    burn_in: int = 0

    def __post_init__(self):
        if int(self.n_steps) != self.n_steps or self.n_steps <= 0:
            raise DomainError("n_steps must be a positive integer")
        if int(self.n_paths) != self.n_paths or self.n_paths <= 0:
            raise DomainError("n_paths must be a positive integer")
        if not (0 <= self.seed <= MASK64):
            raise DomainError("seed must be a 64-bit unsigned integer")
        if not math.isfinite(self.x0):
            raise DomainError("x0 must be finite")
        if not (self.return_radius > 0):
            raise DomainError("return_radius must be positive")
        if not (0 <= self.burn_in < self.n_steps):
            raise DomainError("burn_in must satisfy 0 <= burn_in < n_steps")


@dataclass(frozen=True)
class TrajectoryStats:
    visits_to_ball: int
    last_return_step: Optional[int]
    max_abs: float
    final_abs: float
    overflow: bool = False


def _simulate(model: StableLikeModel, config: SimConfig, indices) -> list[TrajectoryStats]:
    indices = list(indices)
    n = len(indices)
    streams = [path_stream(config.seed, i) for i in indices]
    x = np.full(n, float(config.x0))
    visits = np.zeros(n, dtype=np.int64)
    last = np.full(n, -1, dtype=np.int64)
    max_abs = np.abs(x).copy()
    alive = np.ones(n, dtype=bool)
    r = config.return_radius
    buf = None
    for step in range(1, config.n_steps + 1):
        k = (step - 1) % BLOCK
        if k == 0:
            # the block for path j comes only from stream j
            buf = np.stack([s.random((2, BLOCK)) for s in streams]) + 2.0**-54
        u1 = buf[:, 0, k]
        u2 = buf[:, 1, k]
        idx = np.flatnonzero(alive)
        if idx.size:
            with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
                jump = model.family.sample(x[idx], u1[idx], u2[idx])
                nx = x[idx] + jump
            bad = ~np.isfinite(nx) | (np.abs(nx) > CLAMP)
            if np.any(bad):
                direction = np.sign(np.where(np.isfinite(nx), nx, jump))
                direction[direction == 0] = 1.0
                nx = np.where(bad, direction * CLAMP, nx)
                alive[idx[bad]] = False
            x[idx] = nx
        ax = np.abs(x)
        np.maximum(max_abs, ax, out=max_abs)
        inside = ax <= r
        last[inside] = step
        if step > config.burn_in:
            visits += inside
    return [
        TrajectoryStats(
            int(visits[j]),
            None if last[j] < 0 else int(last[j]),
            float(max_abs[j]),
            float(abs(x[j])),
            bool(not alive[j]),
        )
        for j in range(n)
    ]


def simulate_path(model: StableLikeModel, config: SimConfig, path_index: int) -> TrajectoryStats:
    """Statistics of one path; identical to that path's entry in any ensemble."""
    return _simulate(model, config, [path_index])[0]


def simulate_paths(model: StableLikeModel, config: SimConfig, threads: int = 1) -> list[TrajectoryStats]:
    idx = list(range(config.n_paths))
    if threads <= 1 or config.n_paths < 2:
        return _simulate(model, config, idx)
    chunks = [c for c in np.array_split(np.asarray(idx), threads) if c.size]
    with ThreadPoolExecutor(threads) as ex:
        parts = list(ex.map(lambda c: _simulate(model, config, c.tolist()), chunks))
    return [s for p in parts for s in p]


def summarize(stats: list[TrajectoryStats], config: SimConfig) -> dict:
    """Reduce per-path statistics in path-index order."""
    span = config.n_steps - config.burn_in

    def mm(vals):
        if not vals:
            return {"mean": None, "median": None}
        return {"mean": math.fsum(vals) / len(vals), "median": float(statistics.median(vals))}

    visits = [s.visits_to_ball for s in stats]
    returns = [s.last_return_step for s in stats if s.last_return_step is not None]
    return {
        "n_paths": len(stats),
        "n_steps": config.n_steps,
        "burn_in": config.burn_in,
        "seed": config.seed,
        "return_radius": config.return_radius,
        "x0": config.x0,
        "visits_to_ball": mm([float(v) for v in visits]),
        "last_return_step": mm([float(v) for v in returns]),
        "max_abs": mm([s.max_abs for s in stats]),
        "final_abs": mm([s.final_abs for s in stats]),
        "recurrence_score": math.fsum(visits) / (len(stats) * span),
        "returned_after_burn_in": sum(
            1 for s in stats if s.last_return_step is not None and s.last_return_step > config.burn_in
        )
        / len(stats),
        "overflow_count": sum(s.overflow for s in stats),
        "note": EVIDENCE_NOTE,
    }


def ensemble_stats(model: StableLikeModel, config: SimConfig, threads: int = 1, return_paths: bool = False):
    """Summary dict (mean/median of each path statistic, recurrence_score, ...)."""
    stats = simulate_paths(model, config, threads)
    summary = summarize(stats, config)
    return (summary, stats) if return_paths else summary


def path_rows(stats: list[TrajectoryStats]):
    rows = []
    for i, s in enumerate(stats):
        d = asdict(s)
        rows.append(
            {
                "path_index": i,
                "visits": d["visits_to_ball"],
                "last_return": "" if d["last_return_step"] is None else d["last_return_step"],
                "max_abs": d["max_abs"],
                "final_abs": d["final_abs"],
                "overflow_flag": int(d["overflow"]),
            }
        )
    return rows

"""Scaled-drift sweep across the index for constant-index models.

For each alpha, evaluates the scaled drift of the log test function
(alpha > 1) or the power test function (alpha < 1) on a geometric grid of x
and prints it next to the threshold and the large-x limit:

    recurrence: scaled drift -> -(pi/alpha)|cot(pi alpha/2)|, threshold -R(alpha)
    transience: scaled drift -> T(alpha, beta),               threshold  T(alpha, beta)

    python3 scripts/drift_sweep.py [--family stable|pareto] [--out FILE]
"""
import argparse
import json
import math
import time
from pathlib import Path

import numpy as np

from stablelike.constants import recurrence_constant, transience_constant
from stablelike.drift import scaled_drift_recurrence, scaled_drift_transience
from stablelike.model import ExactStable, ParetoTail, StableLikeModel

XS = np.geomspace(1e2, 1e6, 5)
RECURRENT = (1.1, 1.2, 1.3, 1.4, 1.5, 1.6, 1.7, 1.8, 1.9)
TRANSIENT = (0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8)


def build(family, alpha):
    if family == "stable":
        return StableLikeModel(ExactStable(alpha))
    return StableLikeModel(ParetoTail.symmetric(alpha, 0.3))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--family", choices=("stable", "pareto"), default="stable")
    ap.add_argument("--out", default=str(Path(__file__).with_name("drift_sweep_results.json")))
    args = ap.parse_args()

    rows = []
    head = "  ".join(f"x={x:<9.0e}" for x in XS)
    print(f"{'regime':10s} {'alpha':>5s} {'beta':>6s}  {head}  {'threshold':>10s} {'limit':>10s} {'secs':>5s}")
    for alpha in RECURRENT + TRANSIENT:
        m = build(args.family, alpha)
        t0 = time.perf_counter()
        if alpha > 1:
            beta = None
            vals = [scaled_drift_recurrence(m, x, normalization="abs") for x in XS]
            threshold = -recurrence_constant(alpha).value
            limit = -(math.pi / alpha) * abs(1 / math.tan(math.pi * alpha / 2))
            regime = "recurrent"
        else:
            beta = 0.5 * (1 - alpha)
            vals = [scaled_drift_transience(m, x, beta) for x in XS]
            threshold = limit = transience_constant(alpha, beta).value
            regime = "transient"
        dt = time.perf_counter() - t0
        rows.append(
            {"regime": regime, "alpha": alpha, "beta": beta, "x": XS.tolist(), "scaled_drift": vals,
             "threshold": threshold, "limit": limit}
        )
        cells = "  ".join(f"{v:11.6f}" for v in vals)
        print(f"{regime:10s} {alpha:5.2f} {beta if beta is not None else float('nan'):6.3f}  {cells}  "
              f"{threshold:10.6f} {limit:10.6f} {dt:5.2f}")
    Path(args.out).write_text(json.dumps({"family": args.family, "rows": rows}, indent=2) + "\n")
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()

"""Command-line interface.

Exit codes: 0 success, 2 input or domain error, 3 mixed index regime,
4 condition-check failure.
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import math
import os
import sys
from datetime import datetime, timezone

import numpy as np

from . import __version__
from .constants import recurrence_constant, transience_constant
from .drift import MixedRegimeError, QuadratureError, classify
from .expr import ExprError
from .model import (
    ConfigError,
    ProfileRangeError,
    check_tail_uniformity,
    jump_density,
    jump_sample,
    load_config,
    model_from_config,
    preset_config,
    validate_exact_stable,
)
from .montecarlo import SimConfig, ensemble_stats, path_rows, path_stream
from .specfun import DomainError
from .stable import StableParams, StableInversionError, stable_pdf, stable_sample

EXIT_OK, EXIT_INPUT, EXIT_MIXED, EXIT_CHECK = 0, 2, 3, 4


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# canonical output


def _canon(v):
    if isinstance(v, bool) or v is None:
        return json.dumps(v)
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        v = float(v)
        return format(v, ".17g") if math.isfinite(v) else json.dumps(str(v))
    if isinstance(v, str):
        return json.dumps(v, ensure_ascii=False)
    if isinstance(v, dict):
        items = sorted((str(k), val) for k, val in v.items())
        return "{" + ",".join(json.dumps(k) + ":" + _canon(val) for k, val in items) + "}"
    if isinstance(v, (list, tuple, np.ndarray)):
        return "[" + ",".join(_canon(x) for x in v) + "]"
    if hasattr(v, "value"):  # enums
        return _canon(v.value)
    raise TypeError(f"cannot serialise {type(v).__name__}")


def canonical_json(obj) -> str:
    """Sorted keys, no whitespace, floats at 17 significant digits."""
    return _canon(obj)


def config_hash(cfg) -> str:
    return hashlib.sha256(canonical_json(cfg).encode()).hexdigest()


def run_manifest(cfg, command, seed=None) -> dict:
    return {
        "tool_version": __version__,
        "config_hash": config_hash(cfg),
        "command": command,
        "seed": seed,
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }


def _fmt(v):
    if isinstance(v, float):
        return format(v, ".17g")
    return "" if v is None else str(v)


def to_csv(rows) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: _fmt(v) for k, v in r.items()})
    return buf.getvalue()


class Output:
    """Collects files for --out, or prints to stdout."""

    def __init__(self, args, cfg, seed=None):
        self.args = args
        self.cfg = cfg
        self.seed = seed

    def emit(self, name, payload: dict, rows=None, text=None):
        fmt = self.args.format
        out = self.args.out
        body_json = canonical_json(payload) + "\n"
        body_csv = to_csv(rows) if rows is not None else None
        manifest = run_manifest(self.cfg, " ".join(self.args.argv), self.seed)
        if out:
            os.makedirs(out, exist_ok=True)
            with open(os.path.join(out, f"{name}.json"), "w", encoding="utf-8") as fh:
                fh.write(body_json)
            if body_csv is not None:
                with open(os.path.join(out, f"{name}.csv"), "w", encoding="utf-8") as fh:
                    fh.write(body_csv)
            with open(os.path.join(out, "manifest.json"), "w", encoding="utf-8") as fh:
                fh.write(canonical_json(manifest) + "\n")
        else:
            sys.stderr.write("manifest " + canonical_json(manifest) + "\n")
        if fmt == "json":
            sys.stdout.write(body_json)
        elif fmt == "csv":
            sys.stdout.write(body_csv if body_csv is not None else to_csv([_flat(payload)]))
        else:
            sys.stdout.write((text if text is not None else _text(payload)) + "\n")


def _flat(d, prefix=""):
    out = {}
    for k, v in d.items():
        if isinstance(v, dict):
            out.update(_flat(v, f"{prefix}{k}."))
        elif not isinstance(v, (list, tuple)):
            out[prefix + k] = v
    return out


def _text(payload):
    return "\n".join(f"{k}: {_fmt(v)}" for k, v in sorted(_flat(payload).items()))


# ---------------------------------------------------------------------------
# argument helpers


def parse_grid(spec: str):
    """'logspace:1e2:1e6:9', 'linspace:a:b:n' or a comma list."""
    try:
        if spec.startswith(("logspace:", "linspace:")):
            kind, a, b, n = spec.split(":")
            a, b, n = float(a), float(b), int(n)
            if n < 1:
                raise ValueError
            if kind == "logspace":
                if a <= 0 or b <= 0:
                    raise ValueError
                return np.logspace(math.log10(a), math.log10(b), n)
            return np.linspace(a, b, n)
        vals = np.array([float(v) for v in spec.split(",") if v.strip()])
        if vals.size == 0:
            raise ValueError
        return vals
    except ValueError:
        raise UsageError(f"bad grid spec {spec!r}; use logspace:START:STOP:COUNT or a comma list") from None


def _floats(spec):
    try:
        return [float(v) for v in spec.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"bad number list {spec!r}") from None


def _model_args(args):
    """(model, config dict) from --config or --preset/--param; None when absent."""
    if getattr(args, "config", None) and getattr(args, "preset", None):
        raise UsageError("use either --config or --preset, not both")
    if getattr(args, "config", None):
        with open(args.config, encoding="utf-8") as fh:
            try:
                cfg = json.load(fh)
            except json.JSONDecodeError as e:
                raise ConfigError(f"{args.config}: invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}") from None
        return model_from_config(cfg), cfg
    if getattr(args, "preset", None):
        params = {}
        for kv in args.param or []:
            if "=" not in kv:
                raise UsageError(f"--param expects key=value, got {kv!r}")
            k, v = kv.split("=", 1)
            try:
                params[k.strip()] = float(v)
            except ValueError:
                raise UsageError(f"--param {k} needs a number") from None
        cfg = preset_config(args.preset, **params)
        return model_from_config(cfg), cfg
    return None, None


def _stable_args(args):
    return StableParams(args.alpha, args.skew, args.scale, args.shift)


# ---------------------------------------------------------------------------
# commands


def cmd_constants(args):
    if args.beta is None:
        r = recurrence_constant(args.alpha)
        payload = {"kind": "Recurrence", "alpha": r.alpha, "R": r.value, "abs_error_estimate": r.abs_error_estimate}
        text = f"R({args.alpha:g}) = {r.value:.17g}"
    else:
        t = transience_constant(args.alpha, args.beta)
        payload = {
            "kind": "Transience",
            "alpha": t.alpha,
            "beta": t.beta,
            "T": t.value,
            "T_over_beta": t.value / t.beta,
            "abs_error_estimate": t.abs_error_estimate,
        }
        text = f"T({args.alpha:g}, {args.beta:g}) = {t.value:.17g}\nT/beta = {t.value / t.beta:.17g}"
    cfg = {"alpha": args.alpha, "beta": args.beta}
    Output(args, cfg).emit("constants", payload, [_flat(payload)], text)
    return EXIT_OK


def cmd_pdf(args):
    ys = _floats(args.y)
    model, cfg = _model_args(args)
    if model is not None:
        vals = jump_density(model, args.x, np.asarray(ys))
        cfg = {"model": cfg, "x": args.x}
    else:
        p = _stable_args(args)
        vals = stable_pdf(p, np.asarray(ys))
        cfg = {"alpha": p.alpha, "skew": p.skew, "scale": p.scale, "shift": p.shift}
    rows = [{"y": float(y), "pdf": float(v)} for y, v in zip(ys, np.atleast_1d(vals))]
    text = "\n".join(f"{_fmt(r['y'])}\t{_fmt(r['pdf'])}" for r in rows)
    Output(args, cfg).emit("pdf", {"values": rows}, rows, text)
    return EXIT_OK


def cmd_sample(args):
    if args.n <= 0:
        raise UsageError("--n must be positive")
    rng = path_stream(args.seed, 0)
    model, cfg = _model_args(args)
    if model is not None:
        draws = np.atleast_1d(jump_sample(model, args.x, rng, size=args.n))
        cfg = {"model": cfg, "x": args.x}
    else:
        p = _stable_args(args)
        draws = np.atleast_1d(stable_sample(p, rng, size=args.n))
        cfg = {"alpha": p.alpha, "skew": p.skew, "scale": p.scale, "shift": p.shift}
    summary = {
        "n": int(args.n),
        "seed": int(args.seed),
        "mean": float(np.mean(draws)),
        "variance": float(np.var(draws)),
        "median": float(np.median(draws)),
    }
    rows = [{"index": i, "value": float(v)} for i, v in enumerate(draws)]
    payload = {"summary": summary, "values": [float(v) for v in draws]} if args.values else {"summary": summary}
    Output(args, cfg, seed=args.seed).emit("sample", payload, rows, _text(summary))
    return EXIT_OK


def _require_model(args):
    model, cfg = _model_args(args)
    if model is None:
        raise UsageError("a model is required: pass --config FILE or --preset NAME")
    return model, cfg


def cmd_classify(args):
    model, cfg = _require_model(args)
    grid = parse_grid(args.grid)
    betas = _floats(args.betas) if args.betas else None
    report = classify(model, betas, grid, args.radius, args.margin, args.a0, threads=args.threads)
    payload = report.to_dict()
    text = (
        f"verdict: {report.verdict.value}\n"
        f"test: {payload['test']}\nthreshold: {report.threshold:.17g}\nmargin: {report.margin:.17g}\n"
        f"alpha: {report.alpha:.17g}\n"
        + "\n".join(f"x={_fmt(x)}\tscaled={_fmt(s)}" for x, s in zip(report.x_grid, report.scaled_drift))
        + "\n"
        + "\n".join(f"{c.name}: satisfied={c.satisfied}" for c in report.conditions)
        + "\nnote: numerical evidence on a finite grid, not a proof"
    )
    Output(args, cfg).emit("drift_report", payload, report.csv_rows(), text)
    return EXIT_OK


def cmd_simulate(args):
    model, cfg = _require_model(args)
    config = SimConfig(args.steps, args.paths, args.seed, args.x0, args.radius, args.burn_in)
    summary, stats = ensemble_stats(model, config, threads=args.threads, return_paths=True)
    rows = path_rows(stats) if (args.per_path or args.format == "csv") else None
    Output(args, cfg, seed=args.seed).emit("summary", summary, rows, _text(summary))
    return EXIT_OK


def cmd_check(args):
    model, cfg = _require_model(args)
    xs = parse_grid(args.x_grid)
    xs = np.concatenate([-xs[::-1], xs])
    ys = parse_grid(args.y_grid)
    diag = check_tail_uniformity(model, xs, ys)
    issues = validate_exact_stable(model, xs)
    ok = diag.decreasing and diag.final < args.threshold
    payload = {
        "rows": diag.rows(),
        "decreasing": diag.decreasing,
        "final": diag.final,
        "threshold": args.threshold,
        "passed": ok,
        "max_plateau_edge": diag.max_plateau_edge,
        "issues": issues,
    }
    text = "\n".join(f"y={_fmt(r['y'])}\tsup_dev={_fmt(r['sup_deviation'])}" for r in diag.rows())
    text += f"\ndecreasing: {diag.decreasing}\npassed: {ok}"
    if issues:
        text += "\nissues:\n" + "\n".join("  " + i for i in issues)
    Output(args, cfg).emit("tail_check", payload, diag.rows(), text)
    return EXIT_OK if ok else EXIT_CHECK


# ---------------------------------------------------------------------------
# parser


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--out", metavar="DIR", help="write outputs and manifest.json here")
    common.add_argument("--threads", type=int, default=1, help="worker threads (speed only)")

    modelopts = argparse.ArgumentParser(add_help=False)
    modelopts.add_argument("--config", help="model config JSON file")
    modelopts.add_argument("--preset", help="named preset model")
    modelopts.add_argument("--param", action="append", metavar="KEY=VALUE", help="preset parameter")

    stableopts = argparse.ArgumentParser(add_help=False)
    stableopts.add_argument("--alpha", type=float, default=1.5)
    stableopts.add_argument("--skew", type=float, default=0.0)
    stableopts.add_argument("--scale", type=float, default=1.0)
    stableopts.add_argument("--shift", type=float, default=0.0)

    p = argparse.ArgumentParser(prog="stablelike", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("constants", parents=[common], help="R(alpha) or T(alpha, beta)")
    c.add_argument("--alpha", type=float, required=True)
    c.add_argument("--beta", type=float)
    c.set_defaults(func=cmd_constants)

    c = sub.add_parser("pdf", parents=[common, stableopts, modelopts], help="stable or jump density")
    c.add_argument("--y", required=True, help="comma-separated points")
    c.add_argument("--x", type=float, default=0.0, help="state for a model's jump density")
    c.set_defaults(func=cmd_pdf)

    c = sub.add_parser("sample", parents=[common, stableopts, modelopts], help="seeded draws")
    c.add_argument("--n", type=int, default=1000)
    c.add_argument("--seed", type=int, default=42)
    c.add_argument("--x", type=float, default=0.0)
    c.add_argument("--values", action="store_true", help="include the draws in JSON output")
    c.set_defaults(func=cmd_sample)

    c = sub.add_parser("classify", parents=[common, modelopts], help="drift classification")
    c.add_argument("--grid", default="logspace:1e2:1e6:9")
    c.add_argument("--radius", type=float, default=1e3)
    c.add_argument("--margin", type=float)
    c.add_argument("--betas", help="comma-separated beta candidates")
    c.add_argument("--a0", type=float, default=1.0)
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("simulate", parents=[common, modelopts], help="Monte Carlo ensemble")
    c.add_argument("--steps", type=int, default=10_000)
    c.add_argument("--paths", type=int, default=200)
    c.add_argument("--seed", type=int, default=42)
    c.add_argument("--radius", type=float, default=1.0, help="return radius")
    c.add_argument("--burn-in", type=int, default=100)
    c.add_argument("--x0", type=float, default=0.0)
    c.add_argument("--per-path", action="store_true", help="also write per-path CSV")
    c.set_defaults(func=cmd_simulate)

    c = sub.add_parser("check", parents=[common, modelopts], help="tail uniformity diagnostic")
    c.add_argument("--x-grid", default="logspace:1e1:1e4:4")
    c.add_argument("--y-grid", default="1e2,1e3,1e4")
    c.add_argument("--threshold", type=float, default=0.1)
    c.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK
    args.argv = argv
    try:
        return args.func(args)
    except MixedRegimeError as e:
        print(f"mixed regime: {e}", file=sys.stderr)
        return EXIT_MIXED
    except (UsageError, ConfigError, ProfileRangeError, ExprError, DomainError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (QuadratureError, StableInversionError) as e:
        print(f"numerical failure: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

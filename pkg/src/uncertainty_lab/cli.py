"""Command-line front end.

Subcommands
    lambda0     sweep the top concentration eigenvalue against c
    map         emit a possibility-map boundary polyline
    verify      run the inequality margin harness over a seeded corpus
    estimate-c  variational estimate of the homogeneous-weight constant

Data files are the primary output: CSV with a "# uncertainty-lab v1 <cmd>"
schema comment and 17-significant-digit reals, or a single JSON object.
--plot additionally renders a PNG of the same data.  All numeric
parameters are validated before anything is written, so a failing run
leaves no partial artifacts.

Exit codes: 0 success, 2 invalid parameters, 3 eigensolver convergence
failure, 4 unsupported model/coordinate combination, 5 violated margin.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import corpus as corpus_mod
from . import homogeneous_const as hc
from . import possibility as pb
from . import prolate
from . import signal_core as sc
from .errors import (ConvergenceError, InvalidParameter, NotSupported,
                     UncertaintyLabError)

SCHEMA_PREFIX = "uncertainty-lab v1"
MARGIN_FLOOR = -1e-8

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_CONVERGENCE = 3
EXIT_UNSUPPORTED = 4
EXIT_MARGIN = 5

VERIFY_COLUMNS = ("suite", "index", "kind", "lambda0", "T", "omega", "c",
                  "lhs", "rhs", "margin", "relative_margin", "equality")
VERIFY_LAMBDA0S = (0.5, 0.7, 0.8)


@dataclass(frozen=True)
class RunConfig:
    command: str
    params: dict
    out: Path
    format: str
    seed: int
    grid_n: int
    grid_x_max: float
    n_quad: int
    plot: Path | None


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


def _write_csv(path: Path, command: str, columns, rows) -> None:
    lines = [f"# {SCHEMA_PREFIX} {command}", ",".join(columns)]
    for row in rows:
        lines.append(",".join(_fmt(row[c]) for c in columns))
    path.write_text("\n".join(lines) + "\n", newline="\n")


def _write_json(path: Path, payload: dict) -> None:
    path.write_text(json.dumps(payload, indent=2) + "\n", newline="\n")


# ---------------------------------------------------------------------------
# lambda0


def run_lambda0(cfg: RunConfig):
    p = cfg.params
    rows = prolate.lambda0_sweep(p["c_min"], p["c_max"], p["steps"], cfg.n_quad)
    return [
        {"c": r.c, "lambda0": r.lambda0, "lambda0_asymptotic": r.lambda0_asymptotic,
         "relative_difference": r.relative_difference}
        for r in rows
    ], rows


def _emit_lambda0(cfg: RunConfig):
    dict_rows, rows = run_lambda0(cfg)
    if cfg.format == "csv":
        _write_csv(cfg.out, "lambda0", prolate.SWEEP_COLUMNS, dict_rows)
    else:
        _write_json(cfg.out, {"schema": f"{SCHEMA_PREFIX} lambda0", "rows": dict_rows})
    if cfg.plot is not None:
        from . import plotting
        plotting.render_sweep(rows, cfg.plot)
    return EXIT_OK


# ---------------------------------------------------------------------------
# map


def _parse_coords(name: str, m: int, n: int) -> pb.CoordinateSystem:
    if name == "power":
        return pb.spreading_power(m, n)
    return pb.CoordinateSystem(name)


def _build_model(p: dict):
    if p["model"] == "lp":
        if p["lambda0"] is None:
            raise InvalidParameter("lp model needs --lambda0")
        return pb.LPModel(p["lambda0"])
    if p["model"] == "hpw":
        if p["c"] is None:
            raise InvalidParameter("hpw model needs --c")
        return pb.HPWModel(p["c"])
    if p["model"] == "homogeneous":
        if p["c"] is None or p["C"] is None or p["k"] is None:
            raise InvalidParameter("homogeneous model needs --k, --C and --c")
        return pb.HomogeneousModel(k=p["k"], C=p["C"], c=p["c"])
    raise InvalidParameter(f"unknown model {p['model']!r}")


def run_map(cfg: RunConfig) -> pb.PossibilityBoundary:
    p = cfg.params
    coords = _parse_coords(p["coords"], p["m"], p["n"])
    return pb.map_slice(_build_model(p), coords, p["n_pts"])


def _emit_map(cfg: RunConfig):
    boundary = run_map(cfg)
    meta = {"coords": boundary.coords.label, "model": boundary.model,
            "parameter": boundary.parameter}
    if cfg.format == "csv":
        rows = [{"x": float(x), "y": float(y)} for x, y in boundary.points]
        _write_csv(cfg.out, "map", ("x", "y"), rows)
        _write_json(cfg.out.with_suffix(cfg.out.suffix + ".meta.json"), meta)
    else:
        meta["schema"] = f"{SCHEMA_PREFIX} map"
        meta["points"] = [[float(x), float(y)] for x, y in boundary.points]
        _write_json(cfg.out, meta)
    if cfg.plot is not None:
        from . import plotting
        plotting.render_boundary(boundary, cfg.plot)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _window_draws(n_signals: int, seed: int, grid: sc.Grid, n_quad: int):
    """Per-signal (lambda0, T, omega) assignments shared by the lp suites.

    Each draw anchors at one of VERIFY_LAMBDA0S, then snaps both window
    half-widths onto sample-cell boundaries of the corpus grid and its dual
    (so the tail sums are midpoint-rule accurate rather than quantizing a
    boundary cell) and recomputes the eigenvalue for the realized pair.
    """
    cs = {lam: prolate.c_for_lambda0(lam, n_quad) for lam in VERIFY_LAMBDA0S}
    dual = grid.dual()
    rng = np.random.default_rng((seed, 0xA11))
    draws = []
    for _ in range(n_signals):
        target = float(rng.choice(VERIFY_LAMBDA0S))
        T = grid.align_window(float(rng.uniform(0.5, 1.5)))
        omega = dual.align_window(cs[target] / (2.0 * math.pi * T))
        lam = prolate.lambda_top(prolate.angular_c(omega, T), n_quad)
        draws.append((lam, T, omega))
    return draws


def run_verify_suite(suite: str, n_signals: int, seed: int,
                     grid: sc.Grid | None = None,
                     n_quad: int = prolate.DEFAULT_N_QUAD) -> list[dict]:
    """Margin rows for one suite (or all three) over the seeded corpus.

    The same seed reuses the same corpus and the same window draws across
    suites, so lp and lp_weak rows align index by index.
    """
    if n_signals < 1:
        raise InvalidParameter(f"need at least one signal, got {n_signals}")
    if suite not in ("lp", "lp_weak", "hpw", "all"):
        raise InvalidParameter(f"unknown suite {suite!r}")
    grid = grid or sc.Grid(1024, 8.0)
    signals = corpus_mod.make_corpus(n_signals, seed, grid)
    suites = ("lp", "lp_weak", "hpw") if suite == "all" else (suite,)
    draws = (_window_draws(n_signals, seed, grid, n_quad)
             if ("lp" in suites or "lp_weak" in suites) else None)
    rows: list[dict] = []
    for name in suites:
        for member in signals:
            base = {"suite": name, "index": member.index, "kind": member.kind,
                    "lambda0": None, "T": None, "omega": None, "c": None,
                    "equality": None}
            if name == "hpw":
                rep = pb.verify_hpw(member.signal)
                base["equality"] = rep.equality
            else:
                lam, T, omega = draws[member.index]
                fn = (pb.verify_lp_inequality if name == "lp"
                      else pb.verify_lp_weak_inequality)
                rep = fn(member.signal, T, omega, lam)
                base.update({"lambda0": lam, "T": T, "omega": omega, "c": rep.c})
            base.update({"lhs": rep.lhs, "rhs": rep.rhs, "margin": rep.margin,
                         "relative_margin": rep.relative_margin})
            rows.append(base)
    return rows


def _emit_verify(cfg: RunConfig):
    p = cfg.params
    grid = sc.Grid(cfg.grid_n, cfg.grid_x_max)
    rows = run_verify_suite(p["suite"], p["n_signals"], cfg.seed, grid, cfg.n_quad)
    offset = p["inject_margin_offset"]
    offenders = [r for r in rows if r["relative_margin"] + offset < MARGIN_FLOOR]
    if cfg.format == "csv":
        _write_csv(cfg.out, "verify", VERIFY_COLUMNS, rows)
    else:
        _write_json(cfg.out, {"schema": f"{SCHEMA_PREFIX} verify", "rows": rows})
    if cfg.plot is not None:
        from . import plotting
        plotting.render_margins(rows, cfg.plot)
    if offenders:
        for r in offenders:
            print(
                f"margin violation: suite={r['suite']} index={r['index']} "
                f"kind={r['kind']} relative_margin={r['relative_margin']:.3e}",
                file=sys.stderr,
            )
        return EXIT_MARGIN
    return EXIT_OK


# ---------------------------------------------------------------------------
# estimate-c


def _parse_family(name: str):
    if name == "gaussian":
        return hc.GaussianScale()
    if name.startswith("hermite"):
        try:
            terms = int(name[len("hermite"):])
        except ValueError:
            raise InvalidParameter(f"unknown family {name!r}")
        return hc.HermiteMixture(terms)
    raise InvalidParameter(f"unknown family {name!r}")


def run_estimate(cfg: RunConfig) -> hc.ConstantEstimate:
    p = cfg.params
    opt = hc.OptParams(max_evals=p["budget"], restarts=p["restarts"],
                       seed=cfg.seed, grid_n=cfg.grid_n,
                       grid_x_max=cfg.grid_x_max)
    return hc.estimate_constant(p["k"], _parse_family(p["family"]), opt)


def _emit_estimate(cfg: RunConfig):
    est = run_estimate(cfg)
    _write_json(cfg.out, {
        "k": est.k,
        "family": est.family,
        "C_estimate": est.C_estimate,
        "minimizer_params": list(est.minimizer_params),
        "converged": est.converged,
        "seed": est.seed,
    })
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing and dispatch


def _add_common(sub, default_out: str):
    sub.add_argument("--out", type=Path, default=None,
                     help=f"output path (default {default_out} + format suffix)")
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--n-quad", type=int, default=prolate.DEFAULT_N_QUAD)
    sub.add_argument("--grid-n", type=int, default=1024)
    sub.add_argument("--grid-xmax", type=float, default=8.0)
    sub.add_argument("--plot", type=Path, nargs="?", const="auto", default=None,
                     help="also render a PNG (default: output path with .png)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uncertainty-lab",
        description="Concentration eigenvalues, possibility maps, and "
                    "uncertainty-inequality verification.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("lambda0", help="sweep lambda_0 against c")
    s.add_argument("--c-min", type=float, required=True)
    s.add_argument("--c-max", type=float, required=True)
    s.add_argument("--steps", type=int, default=60)
    _add_common(s, "lambda0_sweep")

    s = subs.add_parser("map", help="possibility-map boundary polyline")
    s.add_argument("--model", choices=("lp", "hpw", "homogeneous"), required=True)
    s.add_argument("--coords", default="spreading",
                   choices=("concentration", "concentration2",
                            "spreading", "spreading2", "power"))
    s.add_argument("--lambda0", type=float, default=None)
    s.add_argument("--c", type=float, default=None)
    s.add_argument("--k", type=int, default=None)
    s.add_argument("--C", type=float, default=None)
    s.add_argument("--m", type=int, default=1, help="power-coordinate exponent")
    s.add_argument("--n", type=int, default=1, help="power-coordinate exponent")
    s.add_argument("--n-pts", type=int, default=256)
    _add_common(s, "map")

    s = subs.add_parser("verify", help="margin harness over a random corpus")
    s.add_argument("--suite", choices=("lp", "lp_weak", "hpw", "all"), default="all")
    s.add_argument("--n", dest="n_signals", type=int, default=100)
    s.add_argument("--inject-margin-offset", type=float, default=0.0,
                   help=argparse.SUPPRESS)  # harness self-test hook
    _add_common(s, "verify")

    s = subs.add_parser("estimate-c", help="estimate the homogeneous-weight constant")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--family", default="gaussian")
    s.add_argument("--budget", type=int, default=2000)
    s.add_argument("--restarts", type=int, default=3)
    _add_common(s, "estimate_c")
    return parser


_DEFAULT_OUT = {"lambda0": "lambda0_sweep", "map": "map",
                "verify": "verify", "estimate-c": "estimate_c"}

_PARAM_KEYS = {
    "lambda0": ("c_min", "c_max", "steps"),
    "map": ("model", "coords", "lambda0", "c", "k", "C", "m", "n", "n_pts"),
    "verify": ("suite", "n_signals", "inject_margin_offset"),
    "estimate-c": ("k", "family", "budget", "restarts"),
}


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    fmt = "json" if args.command == "estimate-c" else args.format
    out = args.out
    if out is None:
        out = Path(f"{_DEFAULT_OUT[args.command]}.{fmt}")
    plot = args.plot
    if plot is not None and str(plot) == "auto":
        plot = out.with_suffix(".png")
    params = {k: getattr(args, k) for k in _PARAM_KEYS[args.command]}
    return RunConfig(command=args.command, params=params, out=out, format=fmt,
                     seed=args.seed, grid_n=args.grid_n,
                     grid_x_max=args.grid_xmax, n_quad=args.n_quad, plot=plot)


def _validate(cfg: RunConfig) -> None:
    sc.Grid(cfg.grid_n, cfg.grid_x_max)  # raises InvalidParameter when bad
    if cfg.n_quad < 32:
        raise InvalidParameter(f"n_quad must be at least 32, got {cfg.n_quad}")
    p = cfg.params
    if cfg.command == "lambda0":
        if not (0 < p["c_min"] <= p["c_max"]):
            raise InvalidParameter("need 0 < c_min <= c_max")
        if p["steps"] < 1 or (p["steps"] == 1 and p["c_min"] != p["c_max"]):
            raise InvalidParameter("steps must be >= 1 (>= 2 for a real range)")
    elif cfg.command == "map":
        _build_model(p)
        _parse_coords(p["coords"], p["m"], p["n"])
        if p["n_pts"] < 2:
            raise InvalidParameter("n_pts must be >= 2")
    elif cfg.command == "verify":
        if p["n_signals"] < 1:
            raise InvalidParameter("verify needs --n >= 1")
    elif cfg.command == "estimate-c":
        if p["k"] < 1:
            raise InvalidParameter("weight degree k must be >= 1")
        if p["budget"] < 10:
            raise InvalidParameter("budget too small to move the simplex")
        _parse_family(p["family"])


_EMITTERS = {"lambda0": _emit_lambda0, "map": _emit_map,
             "verify": _emit_verify, "estimate-c": _emit_estimate}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config_from_args(args)
        _validate(cfg)
    except (InvalidParameter, UncertaintyLabError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INVALID
    try:
        return _EMITTERS[cfg.command](cfg)
    except NotSupported as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ConvergenceError as err:
        print(f"error: eigensolver did not converge {err}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except InvalidParameter as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

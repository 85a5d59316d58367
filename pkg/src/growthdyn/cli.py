"""Command-line front end: simulate, fit, analyze, compete, pde, classify-early.

Every subcommand validates its parameters first, computes second, and writes
plot-ready data files plus a versioned JSON report (``"schema": 1``).  Output
is data only — CSV/JSON columns for external plotting tools, no rendering.

Conventions shared by all subcommands:

* comma-separated values on model-parameter flags fan out into one curve per
  combination (``--b 1,2,3`` gives three curves);
* ``--config FILE`` reads ``key = value`` lines (keys are long flag names
  without the dashes) that override anything given on the command line;
* the output directory is ``--out-dir`` if given, else the GROWTHDYN_OUT
  environment variable, else the current directory;
* identical invocations produce byte-identical files.

Exit codes: 0 success, 2 validation error, 3 numerical failure, 4 I/O error.
"""
from __future__ import annotations

import argparse
import itertools
import json
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import dataio, dynsys, fields, fitting, models
from .errors import (DataIOError, NumericalError, ValidationError)
from .models import UNBOUNDED
from .ode import integrate_adaptive, interp_states

OUT_DIR_ENV = "GROWTHDYN_OUT"
_SCHEMA = 1

MODEL_POWER = "power"
MODEL_SATURATING = "saturating"
MODEL_LOGISTIC = "logistic"

_GRID_AUTO = "auto"
_GRID_LINEAR = "linear"
_GRID_LOG = "log"


@dataclass(frozen=True)
class RunConfig:
    """Resolved output plumbing shared by every subcommand."""

    subcommand: str
    out_dir: str
    prefix: str
    axes: str
    plot_format: str

    def path(self, suffix: str) -> str:
        return os.path.join(self.out_dir, self.prefix + suffix)


def _float_list(text: str):
    try:
        out = [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")
    if not out:
        raise argparse.ArgumentTypeError(f"expected at least one number, got {text!r}")
    return out


def _int_list(text: str):
    vals = _float_list(text)
    out = []
    for v in vals:
        if not v.is_integer():
            raise argparse.ArgumentTypeError(f"expected integers, got {text!r}")
        out.append(int(v))
    return out


def _fmt(v: float) -> str:
    return f"{v:g}"


def _jsonable(v):
    if v is None or isinstance(v, (bool, int, str)):
        return v
    if v is UNBOUNDED:
        return None
    if isinstance(v, float):
        return v if math.isfinite(v) else repr(v)
    if isinstance(v, complex):
        return [v.real, v.imag]
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple, np.ndarray)):
        return [_jsonable(x) for x in np.asarray(v).tolist()] \
            if isinstance(v, np.ndarray) else [_jsonable(x) for x in v]
    if isinstance(v, (np.floating, np.integer)):
        return _jsonable(v.item())
    return str(v)


def _write_report(cfg: RunConfig, payload: dict, path: str | None = None) -> str:
    target = path or cfg.path("_report.json")
    body = {"schema": _SCHEMA, "subcommand": cfg.subcommand}
    body.update(payload)
    with open(target, "w", encoding="utf-8") as fh:
        json.dump(_jsonable(body), fh, indent=2, sort_keys=True)
        fh.write("\n")
    return target


def _resolve_config(args, subcommand: str) -> RunConfig:
    out_dir = args.out_dir or os.environ.get(OUT_DIR_ENV) or "."
    os.makedirs(out_dir, exist_ok=True)
    return RunConfig(subcommand=subcommand, out_dir=out_dir,
                     prefix=args.prefix or subcommand,
                     axes=getattr(args, "axes", dataio.AXES_LINEAR),
                     plot_format=getattr(args, "plot_format", dataio.FORMAT_CSV))


def _time_grid(args) -> np.ndarray:
    axes = getattr(args, "axes", dataio.AXES_LINEAR)
    spacing = args.grid
    if spacing == _GRID_AUTO:
        spacing = _GRID_LOG if axes in (dataio.AXES_LOG_X, dataio.AXES_LOG_LOG) \
            else _GRID_LINEAR
    t_max = args.t_max
    if not t_max > 0:
        raise ValidationError(f"--t-max must be > 0, got {t_max}")
    t_min = args.t_min
    if t_min is None:
        t_min = t_max * 1e-4 if spacing == _GRID_LOG else 0.0
    if args.points < 2:
        raise ValidationError(f"--points must be >= 2, got {args.points}")
    if not t_min < t_max:
        raise ValidationError(f"need --t-min < --t-max, got {t_min} >= {t_max}")
    if spacing == _GRID_LOG:
        if t_min <= 0:
            raise ValidationError(
                "log-spaced grid needs --t-min > 0 (log axes default to "
                "t_max/10^4; pass --t-min explicitly to change it)")
        return np.geomspace(t_min, t_max, args.points)
    return np.linspace(t_min, t_max, args.points)


# ---------------------------------------------------------------- simulate

def _simulate_combos(args):
    """Cartesian fan-out over list-valued model parameters."""
    if args.model == MODEL_POWER:
        names = ("a", "beta")
        pools = (args.a, args.beta)
    elif args.model == MODEL_SATURATING:
        names = ("a", "b")
        pools = (args.a, args.b)
    else:
        names = ("a", "b", "alpha", "phi0")
        pools = (args.a, args.b, args.alpha, args.phi0)
    varying = [name for name, pool in zip(names, pools) if len(pool) > 1]
    combos = []
    for combo in itertools.product(*pools):
        named = dict(zip(names, combo))
        if varying:
            label = ",".join(f"{n}={_fmt(named[n])}" for n in varying)
        else:
            label = args.model
        combos.append((label, named))
    return combos


def cmd_simulate(args) -> int:
    cfg = _resolve_config(args, "simulate")
    times = _time_grid(args)
    curves = []
    summary = []
    for label, named in _simulate_combos(args):
        if args.model == MODEL_POWER:
            record = models.PowerLawParams(a=named["a"], beta=named["beta"])
            values = models.eval_power_law(record, times)
            terminal = None
        elif args.model == MODEL_SATURATING:
            record = models.SaturatingLinearParams(a=named["a"], b=named["b"])
            values = models.eval_saturating_linear(record, times)
            terminal = models.terminal_value(record)
        else:
            record = models.GeneralizedLogisticParams(
                a=named["a"], b=named["b"], alpha=int(named["alpha"]),
                phi0=named["phi0"])
            values = models.eval_logistic_family(record, times)
            terminal = models.terminal_value(record)
        curves.append((label, times, values))
        summary.append({"label": label, "params": named,
                        "terminal_value": terminal})
    plot_path = cfg.path("." + cfg.plot_format)
    dataio.emit_plot_series(curves, cfg.axes, plot_path, format=cfg.plot_format)
    report_path = _write_report(cfg, {
        "model": args.model,
        "axes": cfg.axes,
        "grid": {"t_min": float(times[0]), "t_max": float(times[-1]),
                 "points": int(times.size)},
        "curves": summary,
        "plot_file": os.path.basename(plot_path),
    })
    print(plot_path)
    print(report_path)
    return 0


# --------------------------------------------------------------------- fit

_CLI_TO_FIT_MODEL = {
    MODEL_POWER: fitting.POWER_LAW,
    MODEL_SATURATING: fitting.SATURATING_LINEAR,
    MODEL_LOGISTIC: fitting.LOGISTIC_FAMILY,
}


def _eval_fitted(model: str, alpha: int, params, times: np.ndarray) -> np.ndarray:
    if model == fitting.POWER_LAW:
        record = models.PowerLawParams(a=params[0], beta=params[1])
        return np.asarray(models.eval_power_law(record, times), dtype=float)
    if model == fitting.SATURATING_LINEAR:
        record = models.SaturatingLinearParams(a=params[0], b=params[1])
        return np.asarray(models.eval_saturating_linear(record, times), dtype=float)
    record = models.GeneralizedLogisticParams(a=params[0], b=params[1],
                                              alpha=alpha, phi0=params[2])
    return np.asarray(models.eval_logistic_family(record, times), dtype=float)


def _load_series(args) -> dataio.TimeSeries:
    series = dataio.read_csv(args.input, time_col=args.time_col,
                             value_col=args.value_col, label=args.label)
    if getattr(args, "accumulation_start", None) is not None:
        keep = series.times >= args.accumulation_start
        if not np.any(keep):
            raise ValidationError(
                f"--accumulation-start {args.accumulation_start} leaves no samples")
        series = dataio.TimeSeries(series.times[keep], series.values[keep],
                                   label=series.label, kind=series.kind)
    if getattr(args, "cumulative", False):
        series = dataio.cumulate(series)
    return series


def _default_guess(model: str, series: dataio.TimeSeries):
    first_positive = next((v for v in series.values if v > 0), 1.0)
    if model == fitting.LOGISTIC_FAMILY:
        return (1.0, 1.0, float(first_positive))
    return (1.0, 1.0)


def cmd_fit(args) -> int:
    cfg = _resolve_config(args, "fit")
    series = _load_series(args)
    # Fail on incompatible log axes before any fitting work happens.
    dataio._apply_axes(series.label or "data", series.times, series.values,
                       cfg.axes)
    model = _CLI_TO_FIT_MODEL[args.model]
    guess = tuple(args.guess) if args.guess else _default_guess(model, series)
    problem = fitting.FitProblem(series=series, model=model,
                                 initial_guess=guess, loss_space=args.loss,
                                 alpha=args.alpha)
    result = fitting.fit(problem, tol=args.tol, max_iter=args.max_iter)

    if args.points < 2:
        raise ValidationError(f"--points must be >= 2, got {args.points}")
    dense_t = np.linspace(float(series.times[0]), float(series.times[-1]),
                          args.points)
    fitted_curve = _eval_fitted(model, args.alpha, result.params, dense_t)
    plot_path = cfg.path("." + cfg.plot_format)
    dataio.emit_plot_series(
        [(series.label or "data", series.times, series.values),
         ("fitted", dense_t, fitted_curve)],
        cfg.axes, plot_path, format=cfg.plot_format)

    onset = None
    if model != fitting.POWER_LAW and not (model == fitting.LOGISTIC_FAMILY
                                           and args.alpha == 0):
        est = fitting.saturation_onset(series, result)
        onset = {"half_terminal_time": est.half_terminal_time,
                 "terminal_value": est.terminal_value,
                 "crude_scale": est.crude_scale}
    report_path = _write_report(cfg, {
        "input": os.path.basename(str(args.input)),
        "cumulative": bool(args.cumulative),
        "fit": {
            "model": result.model,
            "loss_space": result.loss_space,
            "alpha": result.alpha,
            "params": result.named_params(),
            "rmse": result.rmse,
            "iterations": result.iterations,
            "converged": result.converged,
            "terminal_forecast": result.terminal_forecast,
            "jacobian_condition": result.jacobian_condition,
        },
        "saturation_onset": onset,
        "plot_file": os.path.basename(plot_path),
    })
    print(plot_path)
    print(report_path)
    return 0


# ----------------------------------------------------------------- analyze

def cmd_analyze(args) -> int:
    cfg = _resolve_config(args, "analyze")
    if args.demo != "coupled-logistic":
        raise ValidationError(f"unknown demo system {args.demo!r}")
    rates = args.rates
    if len(rates) != 6:
        raise ValidationError(
            "--rates takes 6 comma-separated values: aR,bR,eRS,aS,bS,eSR")
    system = dynsys.coupled_logistic_demo(*rates)
    guess = args.guess
    if len(guess) != 2:
        raise ValidationError("--guess takes 2 comma-separated values: x,y")
    report = dynsys.stability_report(system, guess, tol=args.tol)
    report_path = _write_report(cfg, {
        "demo": args.demo,
        "rates": {"aR": rates[0], "bR": rates[1], "eRS": rates[2],
                  "aS": rates[3], "bS": rates[4], "eSR": rates[5]},
        "fixed_point": {"s_c": report.fixed_point.s_c,
                        "r_c": report.fixed_point.r_c,
                        "residual_norm": report.fixed_point.residual_norm},
        "jacobian": list(report.jacobian),
        "trace": report.trace,
        "determinant": report.determinant,
        "eigenvalues": list(report.eigenvalues),
        "classification": report.classification,
    })
    print(report_path)
    return 0


# ----------------------------------------------------------------- compete

def cmd_compete(args) -> int:
    cfg = _resolve_config(args, "compete")
    params = dynsys.CompetitionParams(a1=args.a1, a2=args.a2, d1=args.d1,
                                      d2=args.d2, b=args.b, c=args.c)
    verdict = dynsys.exclusion_verdict(params)
    init = args.init
    if len(init) != 2:
        raise ValidationError("--init takes 2 comma-separated values: phi1,phi2")
    if any(v <= 0 for v in init):
        raise ValidationError("--init values must be > 0 (extinct species stay extinct)")
    t_end = args.t_end if args.t_end is not None else 50.0 / min(args.a1, args.a2)
    system = dynsys.competition_system(params)
    traj = integrate_adaptive(system, np.array(init), 0.0, t_end,
                              rel_tol=1e-10, abs_tol=1e-12)
    grid = np.linspace(0.0, t_end, args.points)
    states = interp_states(traj, grid)
    plot_path = cfg.path("." + cfg.plot_format)
    dataio.emit_plot_series(
        [("phi1", grid, states[:, 0]), ("phi2", grid, states[:, 1])],
        cfg.axes, plot_path, format=cfg.plot_format)
    report_path = _write_report(cfg, {
        "params": {"a1": args.a1, "a2": args.a2, "d1": args.d1,
                   "d2": args.d2, "b": args.b, "c": args.c},
        "verdict": verdict.verdict,
        "survivor_limit": verdict.survivor_limit,
        "ratio": verdict.ratio,
        "t_end": t_end,
        "final_state": {"phi1": float(states[-1, 0]),
                        "phi2": float(states[-1, 1])},
        "plot_file": os.path.basename(plot_path),
    })
    print(plot_path)
    print(report_path)
    return 0


# --------------------------------------------------------------------- pde

def cmd_pde(args) -> int:
    cfg = _resolve_config(args, "pde")
    setup = fields.AdvectionSetup(c=args.c, phi0=args.phi0, x_min=args.x_min,
                                  x_max=args.x_max, n_cells=args.n_cells,
                                  cfl=args.cfl)
    if not args.t_end > 0:
        raise ValidationError(f"--t-end must be > 0, got {args.t_end}")
    snap_times = np.concatenate(
        ([0.0], np.geomspace(args.t_end * 1e-5, args.t_end, args.n_snapshots)))
    snapshots = fields.evolve_advection_fd(setup, args.t_end, snap_times)

    probe_curves = []
    probe_summaries = []
    for x_probe in args.probe_x:
        times, signed = fields.probe_series(snapshots, x_probe)
        magnitude = np.abs(signed)
        asymptote = fields.euler_terminal_profile(setup, x_probe)
        probe_curves.append((f"abs_phi_x={_fmt(x_probe)}", times, magnitude))
        probe_curves.append((f"asymptote_x={_fmt(x_probe)}", times,
                             np.full_like(times, asymptote)))
        final = float(magnitude[-1])
        probe_summaries.append({
            "x": x_probe,
            "final_abs_phi": final,
            "terminal_profile": asymptote,
            "rel_err": abs(final - asymptote) / asymptote,
        })
    probe_path = cfg.path("_probe." + cfg.plot_format)
    dataio.emit_plot_series(probe_curves, cfg.axes, probe_path,
                            format=cfg.plot_format)

    last = snapshots[-1]
    interior = slice(last.x_grid.size // 16, -1)  # skip the outflow edge
    exact = fields.euler_terminal_profile(setup, last.x_grid[interior])
    numeric = np.abs(last.phi[interior])
    rel = np.abs(numeric - exact) / exact
    profile_path = cfg.path("_profile." + cfg.plot_format)
    dataio.emit_plot_series(
        [("abs_phi_fd", last.x_grid[interior], numeric),
         ("terminal_profile", last.x_grid[interior], exact)],
        dataio.AXES_LINEAR, profile_path, format=cfg.plot_format)

    report_path = _write_report(cfg, {
        "setup": {"c": setup.c, "phi0": setup.phi0, "x_min": setup.x_min,
                  "x_max": setup.x_max, "n_cells": setup.n_cells,
                  "cfl": setup.cfl},
        "t_end": args.t_end,
        "probes": probe_summaries,
        "profile_max_rel_err": float(np.max(rel)),
        "probe_file": os.path.basename(probe_path),
        "profile_file": os.path.basename(profile_path),
    })
    print(probe_path)
    print(profile_path)
    print(report_path)
    return 0


# ------------------------------------------------------------ classify-early

def cmd_classify_early(args) -> int:
    cfg = _resolve_config(args, "classify-early")
    series = _load_series(args)
    verdict = fitting.early_growth_classifier(series, window=args.window)
    report_path = _write_report(cfg, {
        "input": os.path.basename(str(args.input)),
        "window": args.window,
        "verdict": verdict.verdict,
        "estimate": verdict.estimate,
        "r2_exponential": verdict.r2_exponential,
        "r2_power_law": verdict.r2_power_law,
        "n_points": verdict.n_points,
    })
    print(report_path)
    return 0


# ----------------------------------------------------------------- parsing

def _add_common(parser: argparse.ArgumentParser, axes_default=dataio.AXES_LINEAR):
    parser.add_argument("--out-dir", default=None,
                        help=f"output directory (default: ${OUT_DIR_ENV} or .)")
    parser.add_argument("--prefix", default=None,
                        help="output filename prefix (default: subcommand name)")
    parser.add_argument("--axes", default=axes_default,
                        choices=[dataio.AXES_LINEAR, dataio.AXES_LOG_X,
                                 dataio.AXES_LOG_Y, dataio.AXES_LOG_LOG],
                        help="axis transform applied to emitted plot data")
    parser.add_argument("--plot-format", default=dataio.FORMAT_CSV,
                        choices=[dataio.FORMAT_CSV, dataio.FORMAT_JSON])
    parser.add_argument("--config", default=None,
                        help="key=value file whose entries override flags")


def _add_input_flags(parser: argparse.ArgumentParser):
    parser.add_argument("input", help="CSV file with time,value rows")
    parser.add_argument("--time-col", type=int, default=0)
    parser.add_argument("--value-col", type=int, default=1)
    parser.add_argument("--label", default="data")
    parser.add_argument("--cumulative", action=argparse.BooleanOptionalAction,
                        default=False,
                        help="apply the running-sum transform before using the series")
    parser.add_argument("--accumulation-start", type=float, default=None,
                        help="drop samples before this time prior to accumulating")


def build_parser() -> argparse.ArgumentParser:
    # Abbreviation matching is disabled everywhere: with single-letter flags
    # like --a/--b/--c in play, a prefix match (e.g. --c for --config) would
    # silently swallow arguments.
    parser = argparse.ArgumentParser(
        prog="growthdyn",
        allow_abbrev=False,
        description="Growth-dynamics toolkit: closed-form growth laws, ODE "
                    "integration, stability analysis, competition, and "
                    "field evolution.")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    def sub(name, **kwargs):
        return subparsers.add_parser(name, allow_abbrev=False, **kwargs)

    p = sub("simulate", help="evaluate growth curves on a grid")
    _add_common(p)
    p.add_argument("--model", required=True,
                   choices=[MODEL_POWER, MODEL_SATURATING, MODEL_LOGISTIC])
    p.add_argument("--a", type=_float_list, default=[1.0])
    p.add_argument("--b", type=_float_list, default=[1.0])
    p.add_argument("--beta", type=_float_list, default=[1.0])
    p.add_argument("--alpha", type=_int_list, default=[1])
    p.add_argument("--phi0", type=_float_list, default=[1.0])
    p.add_argument("--t-min", type=float, default=None)
    p.add_argument("--t-max", type=float, default=20.0)
    p.add_argument("--points", type=int, default=201)
    p.add_argument("--grid", default=_GRID_AUTO,
                   choices=[_GRID_AUTO, _GRID_LINEAR, _GRID_LOG])
    p.set_defaults(func=cmd_simulate)

    p = sub("fit", help="fit a growth model to a CSV series")
    _add_common(p)
    _add_input_flags(p)
    p.add_argument("--model", required=True,
                   choices=[MODEL_POWER, MODEL_SATURATING, MODEL_LOGISTIC])
    p.add_argument("--alpha", type=int, default=1,
                   help="fixed nonlinearity exponent for the logistic family")
    p.add_argument("--loss", default=fitting.LOSS_LINEAR,
                   choices=[fitting.LOSS_LINEAR, fitting.LOSS_LOG])
    p.add_argument("--guess", type=_float_list, default=None,
                   help="comma-separated initial parameter guess")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--max-iter", type=int, default=200)
    p.add_argument("--points", type=int, default=200,
                   help="grid size for the fitted overlay curve")
    p.set_defaults(func=cmd_fit)

    p = sub("analyze", help="fixed-point stability report")
    _add_common(p)
    p.add_argument("--demo", default="coupled-logistic")
    p.add_argument("--rates", type=_float_list,
                   default=[1.0, 1.0, 0.5, 1.0, 1.0, 0.5],
                   help="aR,bR,eRS,aS,bS,eSR for the demo system")
    p.add_argument("--guess", type=_float_list, default=[2.0, 2.0])
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_analyze)

    p = sub("compete", help="two-species shared-resource competition")
    _add_common(p)
    p.add_argument("--a1", type=float, required=True)
    p.add_argument("--a2", type=float, required=True)
    p.add_argument("--d1", type=float, required=True)
    p.add_argument("--d2", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--init", type=_float_list, default=[1.0, 1.0])
    p.add_argument("--t-end", type=float, default=None,
                   help="default: 50 / min(a1, a2)")
    p.add_argument("--points", type=int, default=501)
    p.set_defaults(func=cmd_compete)

    p = sub("pde", help="forced advection field evolution")
    _add_common(p)
    p.add_argument("--c", type=float, default=1.0)
    p.add_argument("--phi0", type=float, default=0.0)
    p.add_argument("--x-min", type=float, default=1.0)
    p.add_argument("--x-max", type=float, default=200.0)
    p.add_argument("--n-cells", type=int, default=1024)
    p.add_argument("--cfl", type=float, default=0.9)
    p.add_argument("--t-end", type=float, default=2500.0)
    p.add_argument("--probe-x", type=_float_list, default=[50.0])
    p.add_argument("--n-snapshots", type=int, default=200)
    p.set_defaults(func=cmd_pde)

    p = sub("classify-early",
                       help="exponential-vs-power-law verdict on a CSV series")
    _add_common(p)
    _add_input_flags(p)
    p.add_argument("--window", type=float, default=1.0,
                   help="leading fraction of the time span to classify")
    p.set_defaults(func=cmd_classify_early)
    return parser


def _read_config_tokens(path: str) -> list:
    """Turn a key = value file into override argv tokens."""
    tokens = []
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise DataIOError(f"cannot read config {path}: {exc}") from exc
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValidationError(
                f"{path}, line {lineno}: expected key = value, got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if not key:
            raise ValidationError(f"{path}, line {lineno}: empty key")
        flag = "--" + key.lstrip("-")
        if value.lower() in ("true", "yes", "on"):
            tokens.append(flag)
        elif value.lower() in ("false", "no", "off"):
            tokens.append("--no-" + key.lstrip("-"))
        else:
            tokens.extend([flag, value])
    return tokens


def _apply_config(argv: list) -> list:
    probe = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    probe.add_argument("--config", default=None)
    known, _ = probe.parse_known_args(argv)
    if known.config is None:
        return argv
    return list(argv) + _read_config_tokens(known.config)


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_apply_config(argv))
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except (DataIOError, OSError) as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())

"""Command-line driver: ``fsshear tables | sweep | verify``.

Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import os
import sys
import tempfile
from pathlib import Path

import numpy as np

from . import hypoelastic as hypo
from .hyperelastic import parse_model, shear_stress
from .shear_kinematics import ShearMode, kinematic_state, motion_parameters
from .verification import CRITERIA, PROFILES, run_criterion

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CSV_HEADER = "alpha,sigma11,sigma22,sigma12,sigma_bar11,sigma_bar22,sigma_bar12"

DEFAULTS = {
    "model": "hlih-h",
    "mode": "lfss",
    "alpha_max": 1.5,
    "points": 31,
    "steps": hypo.DEFAULT_STEPS,
    "mu": 1.0,
    "lambda": 0.0,
    "sigma12_0": 0.0,
    "out": None,
    "profile": "default",
}


class UsageError(Exception):
    pass


# -- tables ------------------------------------------------------------------


def _fmt_table_value(x: float, angle: bool) -> str:
    """Four decimals, or fewer for large values (5 significant digits); angles keep 2."""
    if angle:
        return f"{x:.2f}"
    if x == 0:
        return "0"
    decimals = min(4, 4 - math.floor(math.log10(abs(x))))
    return f"{x:.{max(decimals, 0)}f}"


def table_rows(alphas=(0.0, 0.5, 1.0, 1.5)) -> str:
    out = io.StringIO()
    for mode, angle_name, shear_name in ((ShearMode.LFSS, "theta*", "gamma*"), (ShearMode.RFSS, "theta", "gamma")):
        out.write(f"{mode.name}\n")
        out.write(f"{'alpha':>6} {angle_name + ' [deg]':>13} {shear_name:>8} {'a':>8} {'b':>8} {'c':>8}\n")
        for alpha in alphas:
            st = kinematic_state(mode, alpha)
            a, b, c = (float(v) for v in motion_parameters(mode, alpha))
            if mode is ShearMode.LFSS:
                theta, gamma = st.theta_star, st.gamma_star
            else:
                theta, gamma = st.theta, st.gamma
            cells = [_fmt_table_value(np.degrees(theta), True)] + [
                _fmt_table_value(v, False) for v in (gamma, a, b, c)
            ]
            out.write(f"{alpha:>6.1f} {cells[0]:>13} " + " ".join(f"{v:>8}" for v in cells[1:]) + "\n")
        out.write("\n")
    return out.getvalue()


def cmd_tables(args) -> int:
    sys.stdout.write(table_rows())
    return EXIT_OK


# -- sweep -------------------------------------------------------------------


def split_models(text: str) -> list[str]:
    """Split a comma-separated model list, keeping ``mr:<mu1>,<mu2>`` intact."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    out: list[str] = []
    for p in parts:
        if out and out[-1].startswith("mr:") and "," not in out[-1] and _is_number(p):
            out[-1] = f"{out[-1]},{p}"
        else:
            out.append(p)
    return out


def _is_number(text: str) -> bool:
    try:
        float(text)
    except ValueError:
        return False
    return True


def sweep_trajectory(model_name: str, cfg: dict) -> hypo.StressTrajectory:
    mode = ShearMode.parse(cfg["mode"])
    points, steps = int(cfg["points"]), int(cfg["steps"])
    amax, mu, lam, s12 = float(cfg["alpha_max"]), float(cfg["mu"]), float(cfg["lambda"]), float(cfg["sigma12_0"])
    if points < 2:
        raise UsageError("--points must be at least 2")
    if steps < 1:
        raise UsageError("--steps must be positive")
    if amax < 0:
        raise UsageError("--alpha-max must be non-negative")
    if mu <= 0:
        raise UsageError("--mu must be positive")
    grid = np.linspace(0.0, amax, points)
    key = model_name.strip().lower()
    if key.startswith("hypo-"):
        rate = hypo.parse_rate(key)
        sigma0 = np.array([[0.0, s12], [s12, 0.0]])
        # integrate on a grid that contains every output point
        intervals = points - 1
        steps = intervals * max(1, math.ceil(steps / intervals))
        every = steps // intervals
        if rate.kind == "corotational" and mode is ShearMode.LFSS:
            tr = hypo.integrate_lfss(hypo.HypoProblem(rate, mode, mu, lam, sigma0, amax, steps))
            return tr.sample(every)
        if rate.kind == "corotational" and mode is ShearMode.RFSS and s12 == 0.0:
            pairs = [hypo.rfss_solution(mu, a) for a in grid]
        else:
            tr = hypo.incremental_integrate(rate, mode, mu, lam, sigma0, amax, steps)
            return tr.sample(every)
    else:
        if s12 != 0.0:
            raise UsageError("initial stress applies to hypoelastic models only")
        if mode is ShearMode.SIMPLE_SHEAR:
            raise UsageError("hyperelastic sweeps support lfss and rfss only")
        model = parse_model(key, mu, lam)
        pairs = [shear_stress(model, mode, a) for a in grid]
    return hypo.StressTrajectory(
        grid, np.array([p.sigma for p in pairs]), np.array([p.sigma_bar for p in pairs])
    )


def trajectory_csv(tr: hypo.StressTrajectory) -> str:
    lines = [CSV_HEADER]
    for a, s, sb in zip(tr.alpha, tr.sigma, tr.sigma_bar):
        row = (a, s[0, 0], s[1, 1], s[0, 1], sb[0, 0], sb[1, 1], sb[0, 1])
        # adding 0.0 turns a negative zero into 0
        lines.append(",".join("%.17g" % (v + 0.0) for v in row))
    return "\n".join(lines) + "\n"


def read_csv(path) -> hypo.StressTrajectory:
    data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    sig = np.zeros((len(data), 2, 2))
    bar = np.zeros_like(sig)
    sig[:, 0, 0], sig[:, 1, 1], sig[:, 0, 1] = data[:, 1], data[:, 2], data[:, 3]
    bar[:, 0, 0], bar[:, 1, 1], bar[:, 0, 1] = data[:, 4], data[:, 5], data[:, 6]
    sig[:, 1, 0], bar[:, 1, 0] = sig[:, 0, 1], bar[:, 0, 1]
    return hypo.StressTrajectory(data[:, 0], sig, bar)


def _write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _safe_filename(name: str) -> str:
    return "".join(ch if ch.isalnum() or ch in "-_." else "_" for ch in name)


def cmd_sweep(cfg: dict) -> int:
    models = split_models(cfg["model"])
    if not models:
        raise UsageError("no model given")
    mode = ShearMode.parse(cfg["mode"])
    out = cfg["out"]
    try:
        results = [(m, trajectory_csv(sweep_trajectory(m, cfg))) for m in models]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        if out is None:
            if len(results) > 1:
                for name, text in results:
                    sys.stdout.write(f"# {name}\n{text}")
            else:
                sys.stdout.write(results[0][1])
        elif len(results) == 1:
            _write_atomic(Path(out), results[0][1])
        else:
            for name, text in results:
                _write_atomic(Path(out) / f"{_safe_filename(name)}_{mode.value}.csv", text)
    except OSError as exc:
        raise UsageError(f"cannot write output: {exc}") from None
    return EXIT_OK


# -- verify ------------------------------------------------------------------


def cmd_verify(cfg: dict) -> int:
    profile = cfg["profile"]
    if profile not in PROFILES:
        raise UsageError(f"unknown profile {profile!r}")
    failed = total = 0
    for number, (title, _) in CRITERIA.items():
        results = run_criterion(number, profile)
        bad = [r for r in results if not r.passed]
        total += len(results)
        failed += len(bad)
        status = "PASS" if not bad else "FAIL"
        print(f"criterion {number:2d} {status} ({len(results) - len(bad)}/{len(results)}) {title}")
        for r in results:
            print("    " + r.line())
    print(f"{total - failed} passed, {failed} failed, {total} checks ({profile} profile)")
    return EXIT_OK if failed == 0 else EXIT_FAIL


# -- argument handling -------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fsshear", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("tables", help="print the shear parameter tables")
    for name, helptext in (("sweep", "write stress trajectories as CSV"), ("verify", "run the acceptance checks")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--config", help="JSON file with flag values; flags override it")
        p.add_argument("--model", help="model name(s), comma separated")
        p.add_argument("--mode", help="lfss, rfss or simple-shear")
        p.add_argument("--alpha-max", type=float, dest="alpha_max")
        p.add_argument("--points", type=int)
        p.add_argument("--steps", type=int)
        p.add_argument("--mu", type=float)
        p.add_argument("--lambda", type=float, dest="lambda")
        p.add_argument("--sigma12-0", type=float, dest="sigma12_0")
        p.add_argument("--out")
        p.add_argument("--profile", choices=PROFILES)
    return parser


def resolve_config(args: argparse.Namespace) -> dict:
    cfg = dict(DEFAULTS)
    if getattr(args, "config", None):
        try:
            loaded = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config: {exc}") from None
        if not isinstance(loaded, dict):
            raise UsageError("config must be a JSON object")
        for key, value in loaded.items():
            norm = key.replace("-", "_")
            if norm not in cfg:
                raise UsageError(f"unknown config key {key!r}")
            cfg[norm] = value
    for key in DEFAULTS:
        value = getattr(args, key, None)
        if value is not None:
            cfg[key] = value
    if isinstance(cfg["model"], list):
        cfg["model"] = ",".join(cfg["model"])
    return cfg


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "tables":
            return cmd_tables(args)
        cfg = resolve_config(args)
        if args.command == "sweep":
            try:
                ShearMode.parse(cfg["mode"])
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            return cmd_sweep(cfg)
        return cmd_verify(cfg)
    except UsageError as exc:
        print(f"fsshear: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

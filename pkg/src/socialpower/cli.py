"""Command-line front end: simulate, analyze, periodic, verify, plot.

Exit codes: 0 all checks passed, 1 domain/validation failure, 2 IO or
configuration failure.  Output directory precedence: --out flag, then
the SOCIALPOWER_OUT environment variable, then the working directory.
All indices printed or read from files are 1-based.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import analysis, periodic, svg
from .dynamics import Vertex, limit_gap, simulate
from .errors import ParseError, SocialPowerError, ValidationError
from .topology import (
    Periodic,
    RandomUniform,
    TopologyProgram,
    classify_star,
    load_program,
    max_gamma_profile,
)
from .verification import run_suite


def _out_dir(args) -> Path:
    out = args.out or os.environ.get("SOCIALPOWER_OUT") or "."
    path = Path(out)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _load_config(path) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _parse_init(spec, n):
    if isinstance(spec, str):
        if spec.startswith("vertex:"):
            idx = int(spec.split(":", 1)[1])
            if not 1 <= idx <= n:
                raise ValidationError(f"vertex index {idx} out of 1..{n}")
            return Vertex(idx - 1)
        raise ParseError(f"unrecognized initial condition {spec!r}")
    return np.asarray(spec, dtype=float)


def _json_ready(obj):
    if isinstance(obj, np.ndarray):
        return [_json_ready(v) for v in obj.tolist()]
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    if isinstance(obj, dict):
        return {k: _json_ready(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_ready(v) for v in obj]
    return obj


def _write_report(doc: dict, path: Path) -> None:
    with open(path, "w") as fh:
        json.dump(_json_ready(doc), fh, indent=2)
        fh.write("\n")


def cmd_simulate(args) -> int:
    cfg = _load_config(args.config)
    cfg_dir = Path(args.config).parent
    program = load_program(cfg_dir / cfg["program"])
    issues = int(args.issues or cfg.get("issues", 100))
    seed = args.seed if args.seed is not None else cfg.get("seed")
    if seed is not None and isinstance(program.signal, RandomUniform):
        program = TopologyProgram(program.matrices, RandomUniform(int(seed)))
    out = _out_dir(args)

    # One shared signal realization: limit-gap comparison is only
    # meaningful when every run sees the identical switching sequence.
    log = program.realize(issues)
    names, trajs = [], []
    for name, spec in cfg["initial_conditions"].items():
        traj = simulate(program, _parse_init(spec, program.n), issues, signal_log=log)
        traj.to_csv(out / f"run_{name}.csv")
        names.append(name)
        trajs.append(traj)

    gbar = max_gamma_profile(program)
    bounds = analysis.equilibrium_upper_bound(gbar)
    # the bound constrains the limit set, so transients are excluded
    burn_in = int(cfg.get("burn_in", 20))
    violations = 0
    min_margin = 1.0
    for traj in trajs:
        settled = traj.states[burn_in + 1:]
        violations += int(np.sum(np.any(settled > bounds + 1e-9, axis=1)))
        for s in range(1, traj.states.shape[0]):
            if np.all(traj.states[s] > 0):
                rep = analysis.transform_chain(traj.states[s])
                min_margin = min(min_margin, rep.margin)

    report = {
        "issues": issues,
        "runs": {name: f"run_{name}.csv" for name in names},
        "max_gamma_profile": gbar,
        "equilibrium_bounds": bounds,
        "bound_violation_count": violations,
        "min_contraction_margin": min_margin,
    }
    if len(trajs) >= 2:
        gap = limit_gap(trajs[0], trajs[1])
        with open(out / "limit_gap.csv", "w") as fh:
            fh.write("s,gap\n")
            fh.writelines(f"{s},{format(g, '.17g')}\n" for s, g in enumerate(gap))
        report["limit_gap"] = "limit_gap.csv"
        report["final_gap"] = float(gap[-1])
    _write_report(report, out / "report.json")
    if cfg.get("plot"):
        _plot_files([out / f"run_{n}.csv" for n in names], out)
    print(f"simulate: {len(trajs)} run(s), {issues} issues, "
          f"{violations} bound violations, min margin {min_margin:.4f}")
    return 0 if violations == 0 else 1


def cmd_analyze(args) -> int:
    program = load_program(args.path)
    gammas = program.gammas()
    gbar = max_gamma_profile(program)
    stars = [classify_star(m) for m in program.matrices]
    doc = {
        "n": program.n,
        "matrix_count": len(program.matrices),
        "gamma_per_matrix": gammas,
        "max_gamma_profile": gbar,
        "star": [
            {"is_star": s.is_star, "center": (s.center + 1) if s.is_star else None}
            for s in stars
        ],
        "contraction_radii": analysis.contraction_radii(gbar),
    }
    try:
        doc["equilibrium_upper_bound"] = analysis.equilibrium_upper_bound(gbar)
    except SocialPowerError as exc:
        doc["equilibrium_upper_bound"] = None
        doc["equilibrium_upper_bound_note"] = str(exc)
    rate = analysis.convergence_rate(gammas)
    doc["convergence_rate"] = rate if rate is not None else "not applicable"
    doc["vertex_stability"] = [
        {
            "individual": i + 1,
            "stability": cls.stability.value,
            "eigenvalue": cls.eigenvalue,
        }
        for i in range(program.n)
        for cls in [analysis.vertex_stability(gbar, i)]
    ]
    out = _out_dir(args)
    _write_report(doc, out / "analysis.json")
    print(json.dumps(_json_ready(doc), indent=2))
    return 0


def cmd_periodic(args) -> int:
    cfg = _load_config(args.config)
    cfg_dir = Path(args.config).parent
    program = load_program(cfg_dir / cfg["program"])
    if not isinstance(program.signal, Periodic):
        raise ValidationError("periodic command requires a periodic signal")
    pprog = periodic.PeriodicProgram.from_program(program)
    limit = periodic.periodic_fixed_points(pprog)
    issues = int(args.issues or cfg.get("issues", 200))
    burn_in = int(cfg.get("burn_in", 30))
    init = _parse_init(cfg.get("initial_condition", [1.0 / program.n] * program.n), program.n)
    traj = simulate(program, init, issues)
    ok, worst = periodic.verify_periodic_limit(traj, limit, burn_in, tol=float(args.tol or 1e-8))
    doc = {
        "period": pprog.period,
        "fixed_points": list(limit.fixed_points),
        "chain_residuals": limit.chain_residuals,
        "burn_in": burn_in,
        "worst_deviation": worst,
        "verified": ok,
    }
    out = _out_dir(args)
    _write_report(doc, out / "periodic.json")
    print(f"periodic: period {pprog.period}, worst deviation {worst:.3e}, "
          f"{'verified' if ok else 'NOT verified'}")
    return 0 if ok else 1


def cmd_verify(args) -> int:
    program = load_program(args.path)
    seed = args.seed if args.seed is not None else 0
    failed = None
    for k, matrix in enumerate(program.matrices):
        for res in run_suite(matrix, args.samples, seed + k):
            status = "pass" if res.passed else "FAIL"
            extra = f" ({res.detail})" if res.detail else ""
            print(f"matrix {k + 1} {res.name}: {status}, worst margin {res.worst_margin:.3e}{extra}")
            if not res.passed and failed is None:
                failed = f"matrix {k + 1} {res.name}"
    if failed:
        print(f"first failing property: {failed}")
        return 1
    return 0


def _read_csv(path):
    with open(path) as fh:
        rows = list(csv.reader(fh))
    if len(rows) < 2 or not rows[0] or rows[0][0] != "s":
        raise ParseError(f"{path}: not a trajectory export")
    header = rows[0]
    data = np.array([[float(v) for v in row] for row in rows[1:]])
    return header, data


def _plot_files(paths, out: Path) -> None:
    runs = []
    for path in paths:
        header, data = _read_csv(path)
        n = len(header) - 2
        series = {
            f"x_{i + 1}": (data[:, 0], data[:, 2 + i], False) for i in range(n)
        }
        chart = out / (Path(path).stem + ".svg")
        svg.line_chart(series, chart, f"Social power evolution: {Path(path).stem}")
        runs.append((Path(path).stem, data, n))
        print(f"wrote {chart}")
    if len(runs) >= 2:
        (name_a, a, n), (name_b, b, _) = runs[0], runs[1]
        picks = sorted({0, n // 2, n - 1})
        series = {}
        for i in picks:
            series[f"{name_a} x_{i + 1}"] = (a[:, 0], a[:, 2 + i], False)
            series[f"{name_b} x_{i + 1}"] = (b[:, 0], b[:, 2 + i], True)
        chart = out / "comparison.svg"
        svg.line_chart(series, chart, "Initial-condition comparison")
        print(f"wrote {chart}")
    else:
        print("single run: comparison chart skipped")


def cmd_plot(args) -> int:
    _plot_files(args.csvs, _out_dir(args))
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="socialpower",
        description="Social power evolution under switching interaction topologies",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="run configured initial conditions under one shared signal")
    p.add_argument("--config", required=True)
    p.add_argument("--out")
    p.add_argument("--seed", type=int)
    p.add_argument("--issues", type=int)
    p.add_argument("--tol", type=float)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("analyze", help="eigenvector profile, radii, bounds, rate, vertex table")
    p.add_argument("path")
    p.add_argument("--out")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("periodic", help="per-phase fixed points and limit verification")
    p.add_argument("--config", required=True)
    p.add_argument("--out")
    p.add_argument("--issues", type=int)
    p.add_argument("--tol", type=float)
    p.set_defaults(func=cmd_periodic)

    p = sub.add_parser("verify", help="randomized invariant suite on a matrix/program file")
    p.add_argument("path")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("plot", help="render trajectory CSVs as SVG charts")
    p.add_argument("csvs", nargs="+")
    p.add_argument("--out")
    p.set_defaults(func=cmd_plot)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SocialPowerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

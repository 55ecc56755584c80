"""Command-line front end.

Subcommands:

    gen       draw a seeded matrix (or pair) from a named ensemble
    compute   mean of two matrices (arith | geom | harm | measure)
    radius    numerical radius and its upper bounds
    entropy   Tsallis relative operator entropy (and the t -> 0 limit)
    verify    run the inequality suite and emit a JSON report

Matrices travel as the JSON format of :mod:`accretive_lab.matio`. The
``ACCRETIVE_LAB_SEED`` environment variable overrides the built-in
default seed; an explicit flag or config-file entry wins over it.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys

try:
    import tomllib
except ImportError:  # python < 3.11
    import tomli as tomllib
from pathlib import Path


from . import __version__, entropy, matio, means, radius, sectorial, verify
from .errors import AccretiveLabError

_SEED_ENV = "ACCRETIVE_LAB_SEED"
_DEFAULTS = verify.SuiteConfig()


def _float_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated floats, got {text!r}") from exc


def _dim_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return int(lo), int(hi)
        value = int(text)
        return value, value
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected DIM or MIN..MAX, got {text!r}") from exc


def _replay_token(text: str) -> tuple[int, int]:
    try:
        seed, index = text.split(":")
        return int(seed), int(index)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected SEED:INDEX, got {text!r}") from exc


def _env_seed() -> int | None:
    raw = os.environ.get(_SEED_ENV)
    if raw is None or not raw.strip():
        return None
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"{_SEED_ENV} must be an integer, got {raw!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="accretive-lab",
        description="Matrix means, numerical-radius bounds, operator entropy, "
        "and randomized Loewner-margin verification at desk scale.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="draw a seeded matrix or pair from a named ensemble")
    gen.add_argument("--class", dest="matrix_class", required=True,
                     choices=sectorial.MATRIX_CLASSES)
    gen.add_argument("--dim", type=int, required=True)
    gen.add_argument("--seed", type=int, default=None)
    gen.add_argument("--scale", type=float, default=1.0)
    gen.add_argument("--alpha", type=float, default=None,
                     help="sector half-angle (sectorial class only)")
    gen.add_argument("--out", required=True, help="output matrix JSON path")
    gen.add_argument("--out2", default=None,
                     help="second output path, required for pair classes")

    compute = sub.add_parser("compute", help="binary operations on matrix files")
    compute_sub = compute.add_subparsers(dest="operation", required=True)
    cmean = compute_sub.add_parser("mean", help="mean of two matrices")
    cmean.add_argument("--kind", required=True, choices=("arith", "geom", "harm", "measure"))
    cmean.add_argument("--t", type=float, default=0.5)
    cmean.add_argument("--alpha", type=float, default=None,
                       help="power-density exponent (measure kind)")
    cmean.add_argument("--A", dest="a_path", required=True)
    cmean.add_argument("--B", dest="b_path", required=True)
    cmean.add_argument("--out", required=True)

    rad = sub.add_parser("radius", help="numerical radius and upper bounds")
    rad.add_argument("--A", dest="a_path", required=True)
    rad.add_argument("--p", type=float, default=1.0)
    rad.add_argument("--t", type=float, default=0.5)
    rad.add_argument("--bounds", action="store_true",
                     help="also print the Kittaneh, power, and refined bounds")

    ent = sub.add_parser("entropy", help="Tsallis relative operator entropy")
    ent.add_argument("--A", dest="a_path", required=True)
    ent.add_argument("--B", dest="b_path", required=True)
    ent.add_argument("--t", type=float, required=True)
    ent.add_argument("--s", action="store_true",
                     help="also print the relative operator entropy (t -> 0 limit)")

    ver = sub.add_parser("verify", help="run the inequality suite")
    ver.add_argument("--case", default=None,
                     help="comma-separated case ids, or 'all'")
    ver.add_argument("--trials", type=int, default=None)
    ver.add_argument("--dim", type=_dim_range, default=None, metavar="MIN..MAX")
    ver.add_argument("--alpha", type=_float_list, default=None, metavar="LIST")
    ver.add_argument("--t", type=_float_list, default=None, metavar="LIST")
    ver.add_argument("--p", type=_float_list, default=None, metavar="LIST")
    ver.add_argument("--s", type=_float_list, default=None, metavar="LIST")
    ver.add_argument("--measure-alpha", type=_float_list, default=None, metavar="LIST")
    ver.add_argument("--seed", type=int, default=None)
    ver.add_argument("--tol", type=float, default=None)
    ver.add_argument("--out", default=None, help="report JSON path")
    ver.add_argument("--config", default=None, help="TOML or JSON config file")
    ver.add_argument("--replay", type=_replay_token, default=None, metavar="SEED:INDEX",
                     help="re-run one recorded trial of a single case")
    ver.add_argument("--list-cases", action="store_true", help="print case ids and exit")
    return parser


def _load_config_file(path: str) -> dict:
    raw = Path(path).read_bytes()
    if path.endswith(".toml"):
        return tomllib.loads(raw.decode())
    return json.loads(raw.decode())


_CONFIG_KEYS = {f.name for f in dataclasses.fields(verify.SuiteConfig)}


def parse_config(args: argparse.Namespace) -> verify.SuiteConfig:
    """Merge CLI flags over config-file entries over environment/defaults."""
    merged: dict = {}
    if args.config:
        file_data = _load_config_file(args.config)
        unknown = set(file_data) - _CONFIG_KEYS
        if unknown:
            raise ValueError(f"unknown config keys {sorted(unknown)}")
        merged.update(file_data)
    if "seed" not in merged:
        env_seed = _env_seed()
        if env_seed is not None:
            merged["seed"] = env_seed
    flag_values = {
        "cases": tuple(args.case.split(",")) if args.case else None,
        "trials": args.trials,
        "dim_min": args.dim[0] if args.dim else None,
        "dim_max": args.dim[1] if args.dim else None,
        "alpha_grid": args.alpha,
        "t_grid": args.t,
        "p_grid": args.p,
        "s_grid": args.s,
        "measure_alpha_grid": args.measure_alpha,
        "seed": args.seed,
        "tol": args.tol,
        "out": args.out,
    }
    merged.update({k: v for k, v in flag_values.items() if v is not None})
    return verify.SuiteConfig(**merged)


def emit_report(reports, out_path=None, stream=None) -> int:
    """Write the report file, print the per-case summary, return the exit code."""
    stream = stream if stream is not None else sys.stdout
    payload = {
        "version": __version__,
        "cases": [r.to_dict() for r in reports],
        "pass": all(r.passed for r in reports),
    }
    if out_path:
        Path(out_path).write_text(json.dumps(payload, indent=2) + "\n")
    width = max((len(r.case) for r in reports), default=4)
    print(f"{'case':<{width}}  {'trials':>6}  {'min_margin':>13}  result", file=stream)
    for r in reports:
        verdict = "PASS" if r.passed else "FAIL"
        print(f"{r.case:<{width}}  {r.trials:>6}  {r.min_margin:>13.3e}  {verdict}",
              file=stream)
    total = "PASS" if payload["pass"] else "FAIL"
    print(f"{len(reports)} case(s): {total}", file=stream)
    return 0 if payload["pass"] else 1


def parse_report(path) -> list[verify.InequalityReport]:
    data = json.loads(Path(path).read_text())
    return [verify.InequalityReport.from_dict(case) for case in data["cases"]]


def _cmd_gen(args) -> int:
    seed = args.seed
    if seed is None:
        seed = _env_seed()
    if seed is None:
        seed = _DEFAULTS.seed
    spec = sectorial.EnsembleSpec(
        dim=args.dim, matrix_class=args.matrix_class, seed=seed,
        scale=args.scale, alpha=args.alpha,
    )
    drawn = sectorial.generate(spec)
    if isinstance(drawn, tuple):
        if not args.out2:
            raise ValueError(f"class {args.matrix_class!r} draws a pair; pass --out2")
        matio.write_matrix(args.out, drawn[0])
        matio.write_matrix(args.out2, drawn[1])
    else:
        matio.write_matrix(args.out, drawn)
    return 0


def _cmd_compute_mean(args) -> int:
    a = matio.read_matrix(args.a_path)
    b = matio.read_matrix(args.b_path)
    if args.kind == "measure":
        if args.alpha is None:
            raise ValueError("measure means need --alpha for the power density")
        result = means.mean_from_measure(a, b, means.RepresentingMeasure.power_density(args.alpha))
    else:
        result = means.mean(args.kind, a, b, args.t)
    matio.write_matrix(args.out, result)
    return 0


def _cmd_radius(args) -> int:
    a = matio.read_matrix(args.a_path)
    result = radius.numerical_radius(a)
    payload = {
        "omega": result.omega,
        "theta_star": result.theta_star,
        "grid_points": result.grid_points,
        "refined": result.refined,
    }
    if args.bounds:
        payload["kittaneh"] = radius.kittaneh_bound(a)
        payload["power"] = radius.power_bound(a, args.p, args.t)
        payload["refined_bound"] = radius.refined_bound(a, args.p, args.t)
        payload["p"] = args.p
        payload["t"] = args.t
    print(json.dumps(payload, indent=2))
    return 0


def _cmd_entropy(args) -> int:
    a = matio.read_matrix(args.a_path)
    b = matio.read_matrix(args.b_path)
    t_matrix = entropy.tsallis(a, b, args.t)
    if args.s:
        payload = {
            "tsallis": matio.matrix_to_dict(t_matrix),
            "relative_entropy": matio.matrix_to_dict(entropy.relative_entropy(a, b)),
        }
    else:
        payload = matio.matrix_to_dict(t_matrix)
    print(json.dumps(payload, indent=2))
    return 0


def _cmd_verify(args) -> int:
    if args.list_cases:
        for case_id in verify.CASE_IDS:
            print(case_id)
        return 0
    cfg = parse_config(args)
    if args.replay is not None:
        seed, index = args.replay
        selected = cfg.resolved_cases()
        if len(selected) != 1:
            raise ValueError("--replay needs exactly one --case")
        cfg = dataclasses.replace(cfg, seed=seed)
        margins = verify.run_trial(selected[0], cfg, index)
        tol = max(cfg.tol, verify.CASE_TOL_FLOOR.get(selected[0], 0.0))
        ok = min(margins) >= -tol if margins else True
        print(json.dumps({
            "case": selected[0], "seed": seed, "trial": index,
            "dim": verify.CheckCase.resolve(selected[0], cfg, index).dim,
            "margins": margins, "pass": ok,
        }, indent=2))
        return 0 if ok else 1
    reports = verify.run_suite(cfg)
    return emit_report(reports, cfg.out)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "compute":
            return _cmd_compute_mean(args)
        if args.command == "radius":
            return _cmd_radius(args)
        if args.command == "entropy":
            return _cmd_entropy(args)
        return _cmd_verify(args)
    except (AccretiveLabError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

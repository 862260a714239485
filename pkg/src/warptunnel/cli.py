"""
Command-line interface: subcommand dispatch, config loading, CSV emission.

All numeric CSV output uses 17 significant digits so double-precision values
round-trip losslessly. Exit codes: 0 success, 1 validation/parameter failure,
2 usage error.
"""

import argparse
import json
import sys
import time

import numpy as np

from .params import DEFAULT_CONFIG, load_config, specs_from_config
from .metric import alcubierre_metric, bubble_profile
from .phase import phase_constants, phase_II, phase_II_derivative
from .potential import quantum_potential_II
from .matching import zeta_terms, solve_coefficients, system_residuals
from .dynamics import trajectory_constants, integrate_trajectory, fig2_dataset
from .hartman import sweep as hartman_sweep, tunneling_time
from .validation import run_all


def _fmt(v) -> str:
    return f"{float(v):.17g}"


def _write_csv(path: str, header, rows) -> None:
    with open(path, "w") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) if not isinstance(v, str) else v
                              for v in row) + "\n")


def _out_path(args, subcommand: str) -> str:
    if args.out:
        return args.out
    stamp = time.strftime("%Y%m%d-%H%M%S")
    return f"{subcommand}_{stamp}.csv"


def _load_specs(args):
    cfg = dict(DEFAULT_CONFIG)
    if args.config:
        cfg.update(load_config(args.config))
    for key in ("a", "vs", "sigma", "R"):
        val = getattr(args, key, None)
        if val is not None:
            cfg[key] = val
    return specs_from_config(cfg)


def _add_common(sp):
    sp.add_argument("--config", help="key=value parameter file")
    sp.add_argument("--out", help="output CSV path")
    sp.add_argument("--a", type=float, help="barrier width override")
    sp.add_argument("--vs", type=float, help="bubble speed override")
    sp.add_argument("--sigma", type=float, help="bubble steepness override")
    sp.add_argument("--R", type=float, help="bubble radius override")


def _cmd_metric(args) -> int:
    _, p = _load_specs(args)
    rows = []
    for x in np.linspace(-5.0, 5.0, 201):
        f = bubble_profile(x - p.xs0, p)
        g = alcubierre_metric(0.0, x, p).g
        rows.append((x, f, p.vs * f, g[0, 0], g[0, 1], g[1, 1]))
    _write_csv(_out_path(args, "metric"),
               ["x", "f", "beta", "g00", "g01", "g11"], rows)
    return 0


def _cmd_phase(args) -> int:
    _, p = _load_specs(args)
    pc = phase_constants(p.alpha0, p.alpha1)
    rows = [(x, phase_II(x, p.xs0, p, pc), phase_II_derivative(x - p.xs0, p))
            for x in np.linspace(-3.0, 3.0, 241)]
    _write_csv(_out_path(args, "phase"), ["x", "S_II", "dS_II_drs"], rows)
    return 0


def _cmd_potential(args) -> int:
    _, p = _load_specs(args)
    rows = []
    for x in np.linspace(-4.0, 4.0, 161):
        f = bubble_profile(x - p.xs0, p)
        rows.append((x, f, quantum_potential_II(x, 0.0, p)))
    _write_csv(_out_path(args, "potential"), ["x", "f", "Q_II"], rows)
    return 0


def _cmd_match(args) -> int:
    spec, p = _load_specs(args)
    z = zeta_terms(spec, p)
    coeffs = solve_coefficients(spec, z)
    resid = float(np.max(system_residuals(spec, z, coeffs)))
    named = {
        "cI1": coeffs.cI1, "cI2": coeffs.cI2,
        "cII1": coeffs.cII1, "cII2": coeffs.cII2,
        "cIII1": coeffs.cIII1, "cIII2": coeffs.cIII2,
        "varpi1": coeffs.varpi[1], "varpi2": coeffs.varpi[2],
        "varpi3": coeffs.varpi[3], "varpi4": coeffs.varpi[4],
    }
    if args.json:
        out = {k: [v.real, v.imag] for k, v in named.items()}
        out["max_residual"] = resid
        print(json.dumps(out, indent=2, sort_keys=True))
        return 0
    rows = [(k, _fmt(v.real), _fmt(v.imag)) for k, v in named.items()]
    rows.append(("max_residual", _fmt(resid), _fmt(0.0)))
    _write_csv(_out_path(args, "match"), ["name", "real", "imag"], rows)
    return 0


def _cmd_trajectories(args) -> int:
    spec, p = _load_specs(args)
    tc = trajectory_constants(solve_coefficients(spec, zeta_terms(spec, p)),
                              spec, p)
    rows = []
    for region, x0 in (("I", -spec.a), ("II", p.xs0 + 0.1), ("III", spec.a)):
        result = integrate_trajectory(region, x0, spec.t0, spec.t0 + 2.0, tc)
        for s in result.samples[::10]:
            rows.append((_fmt(s.t), _fmt(s.x), s.region,
                         _fmt(s.momentum), _fmt(s.invariant_value)))
    _write_csv(_out_path(args, "trajectories"),
               ["t", "x", "region", "momentum", "invariant"], rows)
    return 0


def _cmd_tunneling_time(args) -> int:
    spec, p = _load_specs(args)
    a = args.a if args.a is not None else spec.a
    vs = args.vs if args.vs is not None else p.vs
    dt = tunneling_time(a, vs)
    print(f"{dt:g}")
    if args.out:
        _write_csv(args.out, ["a", "vs", "dt"], [(a, vs, dt)])
    return 0


def _sweep_rows(regime: str, n0: float | None):
    if regime == "narrow":
        a = np.linspace(0.1, 1.0, 46)
        drivers = [1.0, 2.0, 4.0]
    elif regime == "wide":
        a = np.linspace(2.0, 10.0, 33)
        drivers = [n0] if n0 is not None else [0.5, 1.0, 2.0]
    elif regime == "speed":
        a = np.linspace(0.1, 3.0, 59)
        drivers = [n0 if n0 is not None else 0.7]
    else:
        raise ValueError(f"unknown regime {regime!r}")
    return hartman_sweep(regime, a, drivers)


def _cmd_sweep(args) -> int:
    rows = _sweep_rows(args.regime, args.n0)
    _write_csv(_out_path(args, "sweep"), ["a", "driver", "vs", "dt"],
               [(r.a, r.driver, r.vs, r.dt) for r in rows])
    return 0


def _cmd_figures(args) -> int:
    fig = args.figure_id
    path = _out_path(args, f"figures_{fig}")
    if fig == "fig2":
        header, data = fig2_dataset()
        _write_csv(path, header, data)
    elif fig == "fig3":
        rows = _sweep_rows("narrow", None)
        _write_csv(path, ["a", "E", "dt"],
                   [(r.a, r.driver, r.dt) for r in rows])
    elif fig == "fig4":
        rows = _sweep_rows("wide", args.n0)
        _write_csv(path, ["a", "n0", "dt"],
                   [(r.a, r.driver, r.dt) for r in rows])
    elif fig == "fig5":
        rows = _sweep_rows("speed", args.n0)
        _write_csv(path, ["a", "n0", "vs_over_c"],
                   [(r.a, r.driver, r.vs) for r in rows])
    else:
        print(f"unknown figure id {fig!r} (expected fig2..fig5)", file=sys.stderr)
        return 2
    return 0


def _cmd_validate(args) -> int:
    results = run_all()
    width = max(len(r.name) for r in results)
    failed = 0
    for r in results:
        status = "pass" if r.passed else "FAIL"
        print(f"{r.name:<{width}}  {status}  measured={r.measured:.3e} "
              f"tol={r.tolerance:.1e}  {r.detail}")
        failed += not r.passed
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="warptunnel",
        description="Warp-bubble tunneling model: metrics, phases, matching, "
                    "trajectories, and tunneling-time datasets.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    for name, fn in (("metric", _cmd_metric), ("phase", _cmd_phase),
                     ("potential", _cmd_potential),
                     ("trajectories", _cmd_trajectories),
                     ("validate", _cmd_validate)):
        sp = sub.add_parser(name)
        _add_common(sp)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("match")
    _add_common(sp)
    sp.add_argument("--json", action="store_true",
                    help="print coefficients as JSON instead of CSV")
    sp.set_defaults(func=_cmd_match)

    sp = sub.add_parser("tunneling-time")
    _add_common(sp)
    sp.set_defaults(func=_cmd_tunneling_time)

    sp = sub.add_parser("sweep")
    _add_common(sp)
    sp.add_argument("--regime", required=True,
                    choices=["narrow", "wide", "speed"])
    sp.add_argument("--n0", type=float, help="wide/speed scale factor")
    sp.set_defaults(func=_cmd_sweep)

    sp = sub.add_parser("figures")
    sp.add_argument("figure_id", choices=["fig2", "fig3", "fig4", "fig5"])
    _add_common(sp)
    sp.add_argument("--n0", type=float, help="wide/speed scale factor")
    sp.set_defaults(func=_cmd_figures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

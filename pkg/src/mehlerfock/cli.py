"""Command-line harness.

Single-point evaluation, transform verification, wedge/plane kernels, grid
emission for plots and regression baselines, and the named verification
suites.  Output is deterministic: 17 significant digits, '.' decimal
separator, newline-terminated records, rows ordered by the grid axis.

Exit codes: 0 success; 1 a verify/suite residual exceeded its contract;
2 argument/config parse errors; 3 numeric failure (the failing operation is
named on stderr).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import re
import sys
import time
from dataclasses import replace

import numpy as np

from .kernels import (
    TransformRequest,
    cosine_kernel,
    kernel_catalog,
    transform_lhs,
    transform_rhs,
    verify_transform,
)
from .laplace import LaplaceInversionConfig
from .legendre import legendre_p, legendre_q
from .quadrature import QuadratureConfig
from .scalars import ConvergenceError, DomainError, PoleError
from .suites import run_suite, suite_names
from .wedge import (
    PolarPoint,
    WedgeSpec,
    green_plane,
    green_wedge,
    heat_plane,
    heat_wedge,
    hyperbolic_distance,
)

_ENV_PREFIX = "MEHLERFOCK_"


class UsageError(ValueError):
    """Bad command-line usage beyond what argparse itself catches."""


def parse_complex(text: str) -> complex:
    """Parse a complex literal of the form ``a+bi`` (or plain ``a``/``bi``)."""
    t = text.strip()
    if t.lower().endswith("i"):
        body = t[:-1]
        m = re.match(
            r"^(?P<re>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
            r"(?P<im>[+-](?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)$",
            body,
        )
        if m:
            im_txt = m.group("im")
            if im_txt in ("+", "-"):
                im_txt += "1"
            return complex(float(m.group("re")), float(im_txt))
        if body in ("", "+", "-"):
            body += "1"
        return complex(0.0, float(body))
    return complex(float(t), 0.0)


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def _env_float(name: str):
    raw = os.environ.get(_ENV_PREFIX + name)
    return float(raw) if raw is not None else None


def _env_int(name: str):
    raw = os.environ.get(_ENV_PREFIX + name)
    return int(raw) if raw is not None else None


def build_quadrature_config(args) -> QuadratureConfig:
    cfg = QuadratureConfig()
    rel = args.rel_tol if args.rel_tol is not None else _env_float("REL_TOL")
    ab = args.abs_tol if args.abs_tol is not None else _env_float("ABS_TOL")
    sub = (args.max_subdivisions if args.max_subdivisions is not None
           else _env_int("MAX_SUBDIVISIONS"))
    if rel is not None:
        cfg = replace(cfg, rel_tol=rel)
    if ab is not None:
        cfg = replace(cfg, abs_tol=ab)
    if sub is not None:
        cfg = replace(cfg, max_subdivisions=sub)
    return cfg


def build_inversion_config(args) -> LaplaceInversionConfig:
    nodes = args.node_count if args.node_count is not None else _env_int("NODE_COUNT")
    scale = (args.contour_scale if args.contour_scale is not None
             else _env_float("CONTOUR_SCALE"))
    kwargs = {}
    if nodes is not None:
        kwargs["node_count"] = nodes
    if scale is not None:
        kwargs["contour_scale"] = scale
    return LaplaceInversionConfig(**kwargs)


def emit_records(records: list, fmt_name: str, path: str | None):
    """Write records as a JSON array or a CSV table, deterministically."""
    if not records:
        text = "[]\n" if fmt_name == "json" else "\n"
    elif fmt_name == "json":
        text = json.dumps(records, indent=2) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(records[0].keys()),
                                lineterminator="\n")
        writer.writeheader()
        writer.writerows(records)
        text = buf.getvalue()
    if path:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _grid_values(spec: str):
    """Parse ``param:start:stop:count[:log]`` into (name, ndarray)."""
    parts = spec.split(":")
    if len(parts) not in (4, 5):
        raise DomainError(
            f"grid spec {spec!r} must be param:start:stop:count[:log]"
        )
    name = parts[0]
    start, stop = float(parts[1]), float(parts[2])
    count = int(parts[3])
    if count < 1:
        raise DomainError("grid count must be at least 1")
    if len(parts) == 5:
        if parts[4] != "log":
            raise DomainError(f"unknown grid mode {parts[4]!r}")
        if start <= 0 or stop <= 0:
            raise DomainError("log grids need positive endpoints")
        vals = np.geomspace(start, stop, count)
    else:
        vals = np.linspace(start, stop, count)
    return name, vals


def _value_record(inputs: dict, value: complex, err: float, elapsed: float) -> dict:
    rec = {k: (fmt(v) if isinstance(v, float) else str(v)) for k, v in inputs.items()}
    rec["value_re"] = fmt(value.real)
    rec["value_im"] = fmt(value.imag)
    rec["err_est"] = fmt(err)
    rec["elapsed"] = fmt(round(elapsed, 6))
    return rec


def _resolve_kernel(args):
    if args.kernel == "cosine":
        theta = args.theta if args.theta is not None else 0.5 * math.pi
        return cosine_kernel(theta)
    cat = kernel_catalog()
    if args.kernel not in cat:
        raise DomainError(
            f"unknown kernel {args.kernel!r}; choose from "
            f"{sorted(cat) + ['cosine']}"
        )
    return cat[args.kernel]


def _run_eval(args, which: str) -> int:
    fn = legendre_p if which == "p" else legendre_q
    nu = parse_complex(args.nu)
    mu = parse_complex(args.mu)
    records = []
    if args.grid:
        name, vals = _grid_values(args.grid)
        if name != "z":
            raise DomainError(f"eval grids vary 'z', got {name!r}")
        for zv in vals:
            t0 = time.perf_counter()
            val = fn(nu, mu, complex(zv))
            records.append(_value_record(
                {"nu": args.nu, "mu": args.mu, "z": float(zv)},
                val, 0.0, time.perf_counter() - t0))
    else:
        if args.z is None:
            raise UsageError("either --z or --grid is required")
        z = parse_complex(args.z)
        t0 = time.perf_counter()
        val = fn(nu, mu, z)
        records.append(_value_record(
            {"nu": args.nu, "mu": args.mu, "z": args.z},
            val, 0.0, time.perf_counter() - t0))
    emit_records(records, args.format, args.output)
    return 0


def _run_transform(args) -> int:
    kernel = _resolve_kernel(args)
    cfg = build_quadrature_config(args)
    nu = parse_complex(args.nu)
    req = TransformRequest(kernel, nu, args.z, args.omega)
    records = []
    t0 = time.perf_counter()
    lhs, e1 = transform_lhs(req, cfg)
    rhs, e2 = transform_rhs(req)
    elapsed = time.perf_counter() - t0
    rec = _value_record(
        {"kernel": kernel.name, "nu": args.nu, "z": args.z, "omega": args.omega},
        lhs, e1, elapsed)
    rec["rhs_re"] = fmt(rhs.real)
    rec["rhs_im"] = fmt(rhs.imag)
    rec["rhs_err"] = fmt(e2)
    rec["residual"] = fmt(abs(lhs - rhs) / max(1.0, abs(rhs)))
    records.append(rec)
    emit_records(records, args.format, args.output)
    return 0


def _run_verify(args) -> int:
    kernel = _resolve_kernel(args)
    cfg = build_quadrature_config(args)
    nu = parse_complex(args.nu)
    t0 = time.perf_counter()
    v = verify_transform(TransformRequest(kernel, nu, args.z, args.omega), cfg)
    elapsed = time.perf_counter() - t0
    rec = _value_record(
        {"kernel": kernel.name, "nu": args.nu, "z": args.z, "omega": args.omega},
        v.lhs, v.lhs_err, elapsed)
    rec["rhs_re"] = fmt(v.rhs.real)
    rec["rhs_im"] = fmt(v.rhs.imag)
    rec["residual"] = fmt(v.residual)
    rec["passed"] = str(v.passed)
    emit_records([rec], args.format, args.output)
    return 0 if v.passed else 1


def _run_green_plane(args) -> int:
    build_quadrature_config(args)  # validate overrides even when unused here
    s = parse_complex(args.s)
    records = []
    if args.grid:
        name, vals = _grid_values(args.grid)
        if name != "d":
            raise DomainError(f"green-plane grids vary 'd', got {name!r}")
        for dv in vals:
            t0 = time.perf_counter()
            val = green_plane(float(dv), s)
            records.append(_value_record({"d": float(dv), "s": args.s}, val, 0.0,
                                         time.perf_counter() - t0))
    else:
        if args.d is None:
            raise UsageError("either --d or --grid is required")
        t0 = time.perf_counter()
        val = green_plane(args.d, s)
        records.append(_value_record({"d": args.d, "s": args.s}, val, 0.0,
                                     time.perf_counter() - t0))
    emit_records(records, args.format, args.output)
    return 0


def _wedge_points(args):
    return (PolarPoint(args.a, args.alpha), PolarPoint(args.b, args.beta),
            WedgeSpec(args.gamma))


def _run_green_wedge(args) -> int:
    cfg = build_quadrature_config(args)
    s = parse_complex(args.s)
    x, y, w = _wedge_points(args)
    records = []
    if args.grid:
        name, vals = _grid_values(args.grid)
        if name != "alpha":
            raise DomainError(f"green-wedge grids vary 'alpha', got {name!r}")
        for av in vals:
            xv = PolarPoint(args.a, float(av))
            t0 = time.perf_counter()
            val = green_wedge(xv, y, s, w, cfg)
            rec = _value_record(
                {"gamma": args.gamma, "a": args.a, "alpha": float(av),
                 "b": args.b, "beta": args.beta, "s": args.s},
                val, 0.0, time.perf_counter() - t0)
            rec["plane_re"] = fmt(green_plane(hyperbolic_distance(xv, y), s).real)
            records.append(rec)
    else:
        t0 = time.perf_counter()
        val = green_wedge(x, y, s, w, cfg)
        records.append(_value_record(
            {"gamma": args.gamma, "a": args.a, "alpha": args.alpha,
             "b": args.b, "beta": args.beta, "s": args.s},
            val, 0.0, time.perf_counter() - t0))
    emit_records(records, args.format, args.output)
    return 0


def _run_heat_wedge(args) -> int:
    cfg = build_quadrature_config(args)
    inv = build_inversion_config(args)
    x, y, w = _wedge_points(args)
    records = []
    if args.grid:
        name, vals = _grid_values(args.grid)
        if name != "t":
            raise DomainError(f"heat-wedge grids vary 't', got {name!r}")
        for tv in vals:
            t0 = time.perf_counter()
            val = heat_wedge(x, y, float(tv), w, inv, cfg)
            rec = _value_record(
                {"gamma": args.gamma, "a": args.a, "alpha": args.alpha,
                 "b": args.b, "beta": args.beta, "t": float(tv)},
                complex(val), 0.0, time.perf_counter() - t0)
            rec["plane"] = fmt(heat_plane(hyperbolic_distance(x, y), float(tv)))
            records.append(rec)
    else:
        if args.t is None:
            raise UsageError("either --t or --grid is required")
        t0 = time.perf_counter()
        val = heat_wedge(x, y, args.t, w, inv, cfg)
        records.append(_value_record(
            {"gamma": args.gamma, "a": args.a, "alpha": args.alpha,
             "b": args.b, "beta": args.beta, "t": args.t},
            complex(val), 0.0, time.perf_counter() - t0))
    emit_records(records, args.format, args.output)
    return 0


def _run_suite(args) -> int:
    records = run_suite(args.name)
    failures = 0
    rows = []
    for r in records:
        status = "PASS" if r.passed else "FAIL"
        if not r.passed:
            failures += 1
        print(f"{status} {r.suite}/{r.name}: value={fmt(r.value)} "
              f"tol={fmt(r.tol)}{'  ' + r.detail if r.detail else ''}")
        rows.append({"suite": r.suite, "check": r.name, "value": fmt(r.value),
                     "tol": fmt(r.tol), "passed": str(r.passed),
                     "detail": r.detail})
    if args.output:
        emit_records(rows, args.format, args.output)
    print(f"{len(records) - failures}/{len(records)} checks passed")
    return 0 if failures == 0 else 1


def _run_report(args) -> int:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    os.makedirs(args.output_dir, exist_ok=True)
    cfg = build_quadrature_config(args)
    base = os.path.join(args.output_dir, args.name.replace("-", "_"))

    if args.name == "wedge-boundary-profile":
        w = WedgeSpec(args.gamma)
        y = PolarPoint(args.b, args.beta)
        s = parse_complex(args.s)
        alphas = np.linspace(0.01, args.gamma - 0.01, 50)
        rows = []
        for av in alphas:
            x = PolarPoint(args.a, float(av))
            gw = green_wedge(x, y, s, w, cfg).real
            gp = green_plane(hyperbolic_distance(x, y), s).real
            rows.append({"alpha": fmt(float(av)), "green_wedge": fmt(gw),
                         "green_plane": fmt(gp)})
        emit_records(rows, "csv", base + ".csv")
        fig, ax = plt.subplots(figsize=(6.0, 3.7))
        ax.plot(alphas, [float(r["green_wedge"]) for r in rows], label="wedge")
        ax.plot(alphas, [float(r["green_plane"]) for r in rows], "--",
                label="plane")
        ax.set_xlabel("angle alpha")
        ax.set_ylabel("Green's function")
        ax.set_title(f"Dirichlet boundary profile, gamma={args.gamma:g}")
        ax.legend()
        fig.tight_layout()
        fig.savefig(base + ".png", dpi=150)
    elif args.name == "heat-decay":
        w = WedgeSpec(args.gamma)
        x = PolarPoint(args.a, args.alpha)
        y = PolarPoint(args.b, args.beta)
        inv = build_inversion_config(args)
        times = np.geomspace(0.1, 5.0, 24)
        rows = []
        for tv in times:
            kw = heat_wedge(x, y, float(tv), w, inv, cfg)
            kp = heat_plane(hyperbolic_distance(x, y), float(tv))
            rows.append({"t": fmt(float(tv)), "heat_wedge": fmt(kw),
                         "heat_plane": fmt(kp)})
        emit_records(rows, "csv", base + ".csv")
        fig, ax = plt.subplots(figsize=(6.0, 3.7))
        ax.loglog(times, [float(r["heat_wedge"]) for r in rows], label="wedge")
        ax.loglog(times, [float(r["heat_plane"]) for r in rows], "--",
                  label="plane")
        ax.set_xlabel("time t")
        ax.set_ylabel("heat kernel")
        ax.set_title(f"Dirichlet heat kernel decay, gamma={args.gamma:g}")
        ax.legend()
        fig.tight_layout()
        fig.savefig(base + ".png", dpi=150)
    elif args.name == "transform-residuals":
        names, residuals = [], []
        rows = []
        for kname, kernel in kernel_catalog().items():
            v = verify_transform(
                TransformRequest(kernel, parse_complex(args.nu), args.z,
                                 args.omega), cfg)
            names.append(kname)
            residuals.append(v.residual)
            rows.append({"kernel": kname, "residual": fmt(v.residual),
                         "lhs_re": fmt(v.lhs.real), "rhs_re": fmt(v.rhs.real)})
        emit_records(rows, "csv", base + ".csv")
        fig, ax = plt.subplots(figsize=(6.5, 3.7))
        ax.bar(range(len(names)), residuals)
        ax.set_yscale("log")
        ax.set_xticks(range(len(names)), names, rotation=30, ha="right")
        ax.axhline(1e-8, color="k", lw=0.8, ls=":")
        ax.set_ylabel("|lhs - rhs| / max(1, |rhs|)")
        ax.set_title("transform identity residuals")
        fig.tight_layout()
        fig.savefig(base + ".png", dpi=150)
    else:
        raise DomainError(
            f"unknown report {args.name!r}; choose wedge-boundary-profile, "
            "heat-decay or transform-residuals"
        )
    print(f"wrote {base}.csv and {base}.png")
    return 0


def _apply_config_file(argv: list) -> list:
    """Expand ``--config FILE`` into command-line arguments."""
    if "--config" not in argv:
        return argv
    idx = argv.index("--config")
    try:
        path = argv[idx + 1]
    except IndexError:
        raise DomainError("--config needs a file path")
    with open(path) as fh:
        data = json.load(fh)
    known = {"command", "parameters", "tolerances", "output"}
    unknown = set(data) - known
    if unknown:
        raise DomainError(f"unknown config keys: {sorted(unknown)}")
    expanded = [data["command"]]
    for key, val in data.get("parameters", {}).items():
        expanded += [f"--{key}", str(val)]
    for key, val in data.get("tolerances", {}).items():
        expanded += [f"--{key}", str(val)]
    out = data.get("output", {})
    if "format" in out:
        expanded += ["--format", out["format"]]
    if "path" in out:
        expanded += ["--output", out["path"]]
    return argv[:idx] + expanded + argv[idx + 2:]


def _add_common(p):
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", default=None, help="write records to this path")
    p.add_argument("--rel-tol", type=float, default=None)
    p.add_argument("--abs-tol", type=float, default=None)
    p.add_argument("--max-subdivisions", type=int, default=None)
    p.add_argument("--node-count", type=int, default=None)
    p.add_argument("--contour-scale", type=float, default=None)
    p.add_argument("--grid", default=None,
                   help="emit rows over param:start:stop:count[:log]")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="mehlerfock",
        description="Legendre functions of complex degree/order, "
                    "order-integral transforms, and hyperbolic wedge kernels",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    for which in ("p", "q"):
        p = sub.add_parser(f"eval-{which}",
                           help=f"evaluate the Legendre function of the "
                                f"{'first' if which == 'p' else 'second'} kind")
        p.add_argument("--nu", required=True)
        p.add_argument("--mu", required=True)
        p.add_argument("--z", default=None)
        _add_common(p)
        p.set_defaults(func=lambda a, _w=which: _run_eval(a, _w))

    p = sub.add_parser("transform", help="evaluate both transform sides")
    p.add_argument("--kernel", required=True)
    p.add_argument("--theta", type=float, default=None)
    p.add_argument("--nu", required=True)
    p.add_argument("--z", type=float, required=True)
    p.add_argument("--omega", type=float, required=True)
    _add_common(p)
    p.set_defaults(func=_run_transform)

    p = sub.add_parser("verify", help="check the transform identity")
    p.add_argument("--kernel", required=True)
    p.add_argument("--theta", type=float, default=None)
    p.add_argument("--nu", required=True)
    p.add_argument("--z", type=float, required=True)
    p.add_argument("--omega", type=float, required=True)
    _add_common(p)
    p.set_defaults(func=_run_verify)

    p = sub.add_parser("green-plane", help="plane Green's function")
    p.add_argument("--d", type=float, default=None)
    p.add_argument("--s", required=True)
    _add_common(p)
    p.set_defaults(func=_run_green_plane)

    p = sub.add_parser("green-wedge", help="wedge Green's function")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--s", required=True)
    _add_common(p)
    p.set_defaults(func=_run_green_wedge)

    p = sub.add_parser("heat-wedge", help="wedge heat kernel")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--t", type=float, default=None)
    _add_common(p)
    p.set_defaults(func=_run_heat_wedge)

    p = sub.add_parser("suite", help="run a named verification suite")
    p.add_argument("--name", required=True,
                   help=f"one of {suite_names()} or 'all'")
    _add_common(p)
    p.set_defaults(func=_run_suite)

    p = sub.add_parser("report",
                       help="render a figure and CSV for a named study")
    p.add_argument("name")
    p.add_argument("--output-dir", default="reports")
    p.add_argument("--gamma", type=float, default=2.0)
    p.add_argument("--a", type=float, default=0.9)
    p.add_argument("--alpha", type=float, default=0.6)
    p.add_argument("--b", type=float, default=1.3)
    p.add_argument("--beta", type=float, default=1.4)
    p.add_argument("--s", default="1")
    p.add_argument("--nu", default="0.5")
    p.add_argument("--z", type=float, default=3.0)
    p.add_argument("--omega", type=float, default=2.0)
    _add_common(p)
    p.set_defaults(func=_run_report)

    return ap


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        argv = _apply_config_file(argv)
    except (DomainError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        if isinstance(exc, (DomainError, PoleError)):
            print(f"{args.command}: {exc}", file=sys.stderr)
            return 3
        print(f"{args.command}: bad value: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"{args.command}: numeric failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Verbs:

* ``list``            registered families with claims and derived constants
* ``verify``          constancy check of a family's claim over a grid
* ``grid``            export a sampled grid as CSV or Wavefront OBJ
* ``cross-validate``  specialized vs generic curvature routes
* ``probe``           randomized counterexample search for type-2 claims
* ``ode-check``       closed-form profiles vs Runge-Kutta integration

Exit codes: 0 success (and verification passed), 1 a check ran and
failed (reports are still written), 2 usage or parameter errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, verify
from .catalog import ParameterError, UnknownFamilyError
from .factorable import TYPE1, TYPE2, AffineFactorable, as_chart, random_instance
from .geometry import Rect, SurfaceChart
from .rng import SplitMix64

__all__ = ["main"]


def _error_text(err: BaseException) -> str:
    if isinstance(err, KeyError) and err.args:
        return str(err.args[0])
    return str(err)


def _parse_params(pairs) -> dict:
    params = {}
    for item in pairs or ():
        name, sep, text = item.partition("=")
        if not sep or not name:
            raise ValueError(f"--param expects name=value, got {item!r}")
        try:
            params[name] = float(text)
        except ValueError:
            params[name] = text
    return params


def _parse_interval(text: str, label: str) -> tuple[float, float]:
    lo_text, sep, hi_text = text.partition("..")
    if not sep:
        raise ValueError(f"{label} expects lo..hi, got {text!r}")
    try:
        lo, hi = float(lo_text), float(hi_text)
    except ValueError:
        raise ValueError(f"{label} expects numeric bounds, got {text!r}") from None
    if not hi > lo:
        raise ValueError(f"{label} needs hi > lo, got {text!r}")
    return lo, hi


def _surface_axes(surface) -> tuple[str, str]:
    chart = as_chart(surface) if isinstance(surface, AffineFactorable) else surface
    return chart.axes()


def _parse_domain(text: str, axes: tuple[str, str]) -> Rect:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"--domain expects two axis ranges, got {text!r}")
    intervals = []
    for part, expected in zip(parts, axes):
        name, sep, rng = part.partition(":")
        if not sep:
            raise ValueError(f"--domain axis spec {part!r} expects name:lo..hi")
        if name.strip() != expected:
            raise ValueError(
                f"--domain axis {name.strip()!r} does not match this chart "
                f"(expected {expected!r})"
            )
        intervals.append(_parse_interval(rng.strip(), f"--domain axis {expected}"))
    return Rect(intervals[0], intervals[1])


def _write_out(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _cmd_list(args) -> int:
    header = (
        f"{'id':<24} {'claim':<8} {'claimed':>12} {'derived':>14} {'status':<11} formula"
    )
    print(header)
    print("-" * len(header))
    for fid in catalog.family_ids():
        spec = catalog.get_family(fid)
        profile = catalog.expected_profile(fid)
        derived = "none" if profile.derived_value is None else f"{profile.derived_value:.6g}"
        status = "as-printed" if spec.as_printed else "-"
        print(
            f"{fid:<24} {spec.claim:<8} {profile.claimed_value:>12.6g} "
            f"{derived:>14} {status:<11} {spec.formula}"
        )
    return 0


def _cmd_verify(args) -> int:
    params = _parse_params(args.param)
    spec = catalog.get_family(args.family)
    surface = catalog.build_family(args.family, **params)
    profile = catalog.expected_profile(args.family, **params)
    quantity = catalog.quantity_for_claim(profile.claim)
    domain = None
    if args.domain:
        domain = _parse_domain(args.domain, _surface_axes(surface))
    run = verify.sample_grid(surface, domain=domain, n=args.grid, subject=args.family)
    notes = spec.notes
    if profile.derived_value is None:
        target = profile.claimed_value
        notes = f"{notes}; no constant derives from this construction, targeting the claim"
    else:
        target = profile.derived_value
        if abs(profile.derived_value - profile.claimed_value) > args.tol:
            notes = (
                f"{notes}; claimed {quantity} = {profile.claimed_value:g} but direct "
                f"differentiation gives {profile.derived_value:.12g}"
            )
    report = verify.check_constancy(
        run, target=target, tol=args.tol, quantity=quantity, subject=args.family, notes=notes
    )
    text = report.to_json()
    print(text)
    if args.out:
        _write_out(args.out, text + "\n")
    return 0 if report.passed else 1


def _cmd_grid(args) -> int:
    params = _parse_params(args.param)
    surface = catalog.build_family(args.family, **params)
    chart = as_chart(surface) if isinstance(surface, AffineFactorable) else surface
    domain = None
    if args.domain:
        domain = _parse_domain(args.domain, chart.axes())
    run = verify.sample_grid(surface, domain=domain, n=args.grid, subject=args.family)
    if run.excluded:
        first_point, first_reason = run.excluded[0]
        print(
            f"error: {len(run.excluded)} grid points were excluded "
            f"(first: {first_point!r}: {first_reason}); refusing to export an incomplete grid",
            file=sys.stderr,
        )
        return 1
    n = run.n
    if args.format == "csv":
        lines = ["x,y,z,K,H"]
        for s in run.samples:
            x, y, z = chart.point3d(s.point)
            lines.append(f"{x:.17g},{y:.17g},{z:.17g},{s.K:.17g},{s.H:.17g}")
    else:
        lines = [f"# {args.family} sampled on a {n}x{n} grid"]
        for s in run.samples:
            x, y, z = chart.point3d(s.point)
            lines.append(f"v {x:.17g} {y:.17g} {z:.17g}")
        for i in range(n - 1):
            for j in range(n - 1):
                a = i * n + j + 1
                b = a + 1
                c = a + n
                d = a + n + 1
                lines.append(f"f {a} {b} {c}")
                lines.append(f"f {b} {d} {c}")
    _write_out(args.out, "\n".join(lines) + "\n")
    print(f"wrote {args.out}: {len(run.samples)} points from {args.family}")
    return 0


def _cmd_cross_validate(args) -> int:
    if args.family:
        params = _parse_params(args.param)
        surface = catalog.build_family(args.family, **params)
        if not isinstance(surface, AffineFactorable):
            raise ParameterError(
                f"{args.family} does not expose the factored form needed for cross-validation"
            )
        instance = surface
        point_seed = args.seed
    else:
        kind = TYPE1 if args.kind == "type-1" else TYPE2
        instance = random_instance(SplitMix64(args.seed), kind)
        point_seed = args.seed + 1
    report = verify.cross_validate(
        instance, n_points=args.points, seed=point_seed, tol=args.tol
    )
    text = report.to_json()
    print(text)
    if args.out:
        _write_out(args.out, text + "\n")
    return 0 if report.passed else 1


def _cmd_probe(args) -> int:
    report = verify.probe_nonexistence(
        args.kind, count=args.count, seed=args.seed, n=args.grid, floor=args.floor
    )
    text = report.to_json()
    print(text)
    if args.out:
        _write_out(args.out, text + "\n")
    return 0 if report.counterexamples == 0 else 1


def _cmd_ode_check(args) -> int:
    params = _parse_params(args.param)
    trange = _parse_interval(args.range, "--range") if args.range else None
    max_error = verify.ode_crosscheck(args.ode, params or None, trange, args.steps)
    passed = max_error <= args.tol
    payload = {
        "ode": args.ode,
        "steps": args.steps,
        "max_error": max_error,
        "tolerance": args.tol,
        "pass": passed,
    }
    print(json.dumps(payload, indent=2))
    return 0 if passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isocurv",
        description="curvature checks for product surfaces of the isotropic 3-space",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="list the registered families")
    p_list.set_defaults(handler=_cmd_list)

    p_verify = sub.add_parser("verify", help="check a family's constancy claim on a grid")
    p_verify.add_argument("--family", required=True)
    p_verify.add_argument("--param", action="append", metavar="NAME=VALUE")
    p_verify.add_argument("--domain", metavar="AX:LO..HI,AX:LO..HI")
    p_verify.add_argument("--grid", type=int, default=21)
    p_verify.add_argument("--tol", type=float, default=verify.DEFAULT_TOL)
    p_verify.add_argument("--out", metavar="PATH")
    p_verify.set_defaults(handler=_cmd_verify)

    p_grid = sub.add_parser("grid", help="export a sampled grid")
    p_grid.add_argument("--family", required=True)
    p_grid.add_argument("--param", action="append", metavar="NAME=VALUE")
    p_grid.add_argument("--domain", metavar="AX:LO..HI,AX:LO..HI")
    p_grid.add_argument("--grid", type=int, default=21)
    p_grid.add_argument("--format", choices=("csv", "obj"), required=True)
    p_grid.add_argument("--out", required=True, metavar="PATH")
    p_grid.set_defaults(handler=_cmd_grid)

    p_cross = sub.add_parser(
        "cross-validate", help="compare specialized and generic curvature routes"
    )
    group = p_cross.add_mutually_exclusive_group(required=True)
    group.add_argument("--family")
    group.add_argument("--kind", choices=("type-1", "type-2"))
    p_cross.add_argument("--param", action="append", metavar="NAME=VALUE")
    p_cross.add_argument("--points", type=int, default=100)
    p_cross.add_argument("--seed", type=int, default=0)
    p_cross.add_argument("--tol", type=float, default=1e-10)
    p_cross.add_argument("--out", metavar="PATH")
    p_cross.set_defaults(handler=_cmd_cross_validate)

    p_probe = sub.add_parser("probe", help="randomized nonexistence probe")
    p_probe.add_argument("--kind", choices=("afs2-minimal", "afs2-constant-K"), required=True)
    p_probe.add_argument("--count", type=int, default=100)
    p_probe.add_argument("--seed", type=int, default=42)
    p_probe.add_argument("--grid", type=int, default=11)
    p_probe.add_argument("--floor", type=float, default=verify.PROBE_FLOOR)
    p_probe.add_argument("--out", metavar="PATH")
    p_probe.set_defaults(handler=_cmd_probe)

    p_ode = sub.add_parser("ode-check", help="closed-form profile vs numeric integration")
    p_ode.add_argument("--ode", choices=("afs1-minimal", "afs2-cmc"), required=True)
    p_ode.add_argument("--param", action="append", metavar="NAME=VALUE")
    p_ode.add_argument("--range", metavar="LO..HI")
    p_ode.add_argument("--steps", type=int, default=1000)
    p_ode.add_argument("--tol", type=float, default=1e-6)
    p_ode.set_defaults(handler=_cmd_ode_check)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except (UnknownFamilyError, ParameterError, ValueError) as err:
        print(f"error: {_error_text(err)}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Grid sampling, constancy checks, cross-validation, and probe searches.

The checks in this module never trust a single evaluation route.
Constancy is measured over whole grids; the specialized product-surface
formulas are compared against the generic chart route on random points;
jets are compared against central finite differences; the closed-form
profiles are compared against a Runge-Kutta integration of their
defining equations; and the nonexistence claims for type-2 surfaces
(no nonplanar minimal ones, no nonflat constant-K ones) are probed
with randomized counterexample searches.

Every report serializes to JSON with a fixed key order so repeated
runs with the same seeds are byte-identical.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Callable, Sequence

from . import jets
from .jets import BranchDomainError, Jet2
from .geometry import (
    AdmissibilityError,
    Motion,
    ParametricSurface,
    Rect,
    SurfaceChart,
    as_parametric,
    moved_surface,
)
from .factorable import (
    TYPE2,
    AffineFactorable,
    as_chart,
    is_planar,
    random_instance,
    regularity,
)
from .catalog import cmc_slope_profile, minimal_oscillation_profile
from .rng import SplitMix64

__all__ = [
    "DEFAULT_TOL",
    "PROBE_FLOOR",
    "GridSample",
    "GridRun",
    "VerificationReport",
    "sample_grid",
    "check_constancy",
    "unit_relative_difference",
    "cross_validate",
    "motion_invariance_check",
    "finite_difference_check",
    "ode_crosscheck",
    "ProbeInstance",
    "ProbeReport",
    "draw_nonplanar_type2",
    "probe_instances",
    "probe_nonexistence",
]

DEFAULT_TOL = 1e-9
#: Magnitudes below this count as "numerically zero" in probe searches.
PROBE_FLOOR = 1e-4
#: Cross-validation skips type-2 points with regularity magnitude below this.
_CROSS_REG_FLOOR = 1e-3

_EVAL_ERRORS = (AdmissibilityError, BranchDomainError, ZeroDivisionError, OverflowError)


@dataclass(frozen=True)
class GridSample:
    point: tuple[float, float]
    K: float
    H: float


@dataclass(frozen=True)
class GridRun:
    """Curvatures sampled over a grid, with per-point exclusions."""

    subject: str
    domain: Rect
    n: int
    samples: tuple[GridSample, ...]
    excluded: tuple[tuple[tuple[float, float], str], ...]

    def values(self, quantity: str) -> list[float]:
        if quantity == "K":
            return [s.K for s in self.samples]
        if quantity == "H":
            return [s.H for s in self.samples]
        raise ValueError(f"unknown quantity {quantity!r}")


@dataclass(frozen=True)
class VerificationReport:
    subject: str
    domain: Rect | None
    grid: int
    quantity: str
    target: float | None
    max_abs_deviation: float
    mean: float
    tolerance: float
    passed: bool
    excluded_points: tuple[tuple[tuple[float, float], str], ...] = ()
    notes: str = ""

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "domain": self.domain.as_json() if self.domain is not None else None,
            "grid": self.grid,
            "quantity": self.quantity,
            "target": self.target,
            "max_abs_deviation": self.max_abs_deviation,
            "mean": self.mean,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "excluded_points": [
                [[p[0], p[1]], reason] for p, reason in self.excluded_points
            ],
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def sample_grid(surface, domain: Rect | None = None, n: int = 21, subject: str = "") -> GridRun:
    """Evaluate K and H on an n x n grid, collecting exclusions.

    Points where evaluation raises an admissibility or branch-domain
    error (or overflows, or yields a non-finite value) are excluded
    with a reason instead of aborting the run.
    """
    if domain is None:
        domain = surface.domain
    if not subject:
        subject = getattr(surface, "label", "") or type(surface).__name__
    samples = []
    excluded = []
    for p in domain.grid(n):
        try:
            pair = surface.curvatures(p)
        except _EVAL_ERRORS as err:
            excluded.append((p, str(err)))
            continue
        if not (math.isfinite(pair.K) and math.isfinite(pair.H)):
            excluded.append((p, "non-finite curvature value"))
            continue
        samples.append(GridSample(p, pair.K, pair.H))
    return GridRun(subject, domain, n, tuple(samples), tuple(excluded))


def check_constancy(
    samples: GridRun | Sequence[float],
    target: float | None = None,
    tol: float = DEFAULT_TOL,
    quantity: str = "K",
    subject: str | None = None,
    notes: str = "",
) -> VerificationReport:
    """Is the sampled quantity constant (optionally: equal to a target)?

    Without a target the deviation is measured against the sample mean.
    Sums run left to right over the grid order, so the report is
    deterministic.  Fewer than 4 included samples is an error: a claim
    of constancy over a grid needs more than a corner's worth of data.
    """
    if isinstance(samples, GridRun):
        values = samples.values(quantity)
        domain: Rect | None = samples.domain
        grid = samples.n
        excluded = samples.excluded
        if subject is None:
            subject = samples.subject
    else:
        values = [float(v) for v in samples]
        domain = None
        grid = len(values)
        excluded = ()
        if subject is None:
            subject = "value sequence"
    if len(values) < 4:
        raise ValueError(
            f"constancy check needs at least 4 included samples, got {len(values)}"
        )
    mean = sum(values) / len(values)
    center = mean if target is None else target
    max_dev = max(abs(v - center) for v in values)
    return VerificationReport(
        subject=subject,
        domain=domain,
        grid=grid,
        quantity=quantity,
        target=target,
        max_abs_deviation=max_dev,
        mean=mean,
        tolerance=tol,
        passed=max_dev <= tol,
        excluded_points=excluded,
        notes=notes,
    )


def unit_relative_difference(x: float, y: float) -> float:
    """|x - y| scaled by 1 + the larger magnitude.

    Behaves like a relative difference for large values and like an
    absolute one near zero, so near-zero curvatures do not blow up the
    measure.
    """
    return abs(x - y) / (1.0 + max(abs(x), abs(y)))


def cross_validate(
    instance: AffineFactorable,
    n_points: int = 100,
    seed: int = 0,
    tol: float = 1e-10,
) -> VerificationReport:
    """Specialized product-surface formulas vs the generic chart route.

    Both routes differentiate the same height, assembled differently;
    agreement to near rounding is evidence against algebra slips in
    either.  Type-2 points too close to the regularity zero set are
    skipped (both routes would only amplify rounding there).
    """
    chart = as_chart(instance)
    rng = SplitMix64(seed)
    (u_lo, u_hi), (v_lo, v_hi) = instance.domain.u, instance.domain.v
    deviations = []
    excluded = []
    for _ in range(n_points):
        p = (rng.uniform(u_lo, u_hi), rng.uniform(v_lo, v_hi))
        if instance.kind == TYPE2 and abs(regularity(instance, p)) < _CROSS_REG_FLOOR:
            excluded.append((p, f"regularity magnitude below {_CROSS_REG_FLOOR:g}"))
            continue
        try:
            special = instance.curvatures(p)
            generic = chart.curvatures(p)
        except _EVAL_ERRORS as err:
            excluded.append((p, str(err)))
            continue
        dev = max(
            unit_relative_difference(special.K, generic.K),
            unit_relative_difference(special.H, generic.H),
        )
        deviations.append(dev)
    if len(deviations) < 4:
        raise ValueError(
            f"cross-validation needs at least 4 usable points, got {len(deviations)}"
        )
    max_dev = max(deviations)
    mean = sum(deviations) / len(deviations)
    return VerificationReport(
        subject=instance.label or "cross-validation",
        domain=instance.domain,
        grid=len(deviations),
        quantity="discrepancy",
        target=None,
        max_abs_deviation=max_dev,
        mean=mean,
        tolerance=tol,
        passed=max_dev <= tol,
        excluded_points=tuple(excluded),
        notes=f"specialized route vs generic chart route at {len(deviations)} random points",
    )


def motion_invariance_check(
    surface,
    motion: Motion,
    domain: Rect | None = None,
    n: int = 11,
    tol: float = 1e-9,
    subject: str = "",
) -> VerificationReport:
    """K and H before vs after a rigid motion, at matching parameters.

    The surface is moved as a parametric patch, so the same (u, v)
    names the corresponding point on both copies.
    """
    if isinstance(surface, AffineFactorable):
        base = as_parametric(as_chart(surface))
        subject = subject or surface.label
    elif isinstance(surface, SurfaceChart):
        base = as_parametric(surface)
    else:
        base = surface
    moved = moved_surface(motion, base)
    if domain is None:
        domain = base.domain
    deviations = []
    excluded = []
    for p in domain.grid(n):
        try:
            before = base.curvatures(p)
            after = moved.curvatures(p)
        except _EVAL_ERRORS as err:
            excluded.append((p, str(err)))
            continue
        deviations.append(max(abs(before.K - after.K), abs(before.H - after.H)))
    if len(deviations) < 4:
        raise ValueError(
            f"motion invariance check needs at least 4 usable points, got {len(deviations)}"
        )
    max_dev = max(deviations)
    mean = sum(deviations) / len(deviations)
    return VerificationReport(
        subject=subject or "motion invariance",
        domain=domain,
        grid=n,
        quantity="discrepancy",
        target=None,
        max_abs_deviation=max_dev,
        mean=mean,
        tolerance=tol,
        passed=max_dev <= tol,
        excluded_points=tuple(excluded),
        notes=motion.describe(),
    )


def finite_difference_check(
    field: Callable[[Jet2, Jet2], Jet2],
    point: tuple[float, float],
    h: float = 1e-4,
    domain: Rect | None = None,
) -> float:
    """Largest scaled gap between jet derivatives and central differences.

    Returns max over the five derivative components of
    |jet - fd| / (1 + |jet|).  When a domain is given, the point must
    sit at least 2h inside it so the stencil stays evaluable.
    """
    if domain is not None and not domain.contains(point, margin=2.0 * h):
        raise ValueError(
            f"finite-difference stencil at {point!r} leaves the domain "
            f"(needs a margin of 2h = {2.0 * h:g})"
        )
    x, y = point
    jet = jets.eval_field(field, x, y)

    def value(px: float, py: float) -> float:
        return jets.eval_field(field, px, py).v

    f0 = jet.v
    fe = value(x + h, y)
    fw = value(x - h, y)
    fn_ = value(x, y + h)
    fs = value(x, y - h)
    fne = value(x + h, y + h)
    fnw = value(x - h, y + h)
    fse = value(x + h, y - h)
    fsw = value(x - h, y - h)
    fd = {
        "dx": (fe - fw) / (2.0 * h),
        "dy": (fn_ - fs) / (2.0 * h),
        "dxx": (fe - 2.0 * f0 + fw) / (h * h),
        "dyy": (fn_ - 2.0 * f0 + fs) / (h * h),
        "dxy": (fne - fse - fnw + fsw) / (4.0 * h * h),
    }
    worst = 0.0
    for name, approx in fd.items():
        exact = getattr(jet, name)
        worst = max(worst, abs(exact - approx) / (1.0 + abs(exact)))
    return worst


# ---------------------------------------------------------------------------
# ODE cross-checks


def _rk4(deriv, t0: float, y0: Sequence[float], t1: float, steps: int):
    """Classic fixed-step fourth-order Runge-Kutta over [t0, t1]."""
    if steps < 1:
        raise ValueError("steps must be at least 1")
    h = (t1 - t0) / steps
    t = t0
    y = tuple(float(v) for v in y0)
    out = [(t, y)]
    for i in range(steps):
        k1 = deriv(t, y)
        y2 = tuple(v + 0.5 * h * k for v, k in zip(y, k1))
        k2 = deriv(t + 0.5 * h, y2)
        y3 = tuple(v + 0.5 * h * k for v, k in zip(y, k2))
        k3 = deriv(t + 0.5 * h, y3)
        y4 = tuple(v + h * k for v, k in zip(y, k3))
        k4 = deriv(t + h, y4)
        y = tuple(
            v + (h / 6.0) * (a + 2.0 * b + 2.0 * c + d)
            for v, a, b, c, d in zip(y, k1, k2, k3, k4)
        )
        t = t0 + (i + 1) * h
        out.append((t, y))
    return out


_ODE_DEFAULTS = {
    "afs1-minimal": ({"c1": 1.0, "a": 1.0, "c2": 1.0, "c3": 0.0}, (0.0, 1.0)),
    "afs2-cmc": ({"H0": 1.0, "c1": 1.0, "c2": 1.0, "c3": 0.0}, (-1.0, 0.0)),
}


def ode_crosscheck(
    ode: str,
    params: dict | None = None,
    trange: tuple[float, float] | None = None,
    steps: int = 1000,
) -> float:
    """Max pointwise |numeric - closed form| for a profile's defining ODE.

    ``afs1-minimal``: the damped oscillation behind the minimal sheared
    exponential family, (1+a^2)*f'' + 2*a*c1*f' + c1^2*f = 0.
    ``afs2-cmc``: the slope equation f'' = 2*H0*c1^2*(f')^3 behind the
    constant-H family with a constant first factor.  Initial conditions
    come from the closed form at the range start.
    """
    if ode not in _ODE_DEFAULTS:
        known = ", ".join(sorted(_ODE_DEFAULTS))
        raise ValueError(f"unknown ode {ode!r} (known: {known})")
    defaults, default_range = _ODE_DEFAULTS[ode]
    merged = dict(defaults)
    for name, value in (params or {}).items():
        if name not in merged:
            expected = ", ".join(merged)
            raise ValueError(f"unknown ode parameter {name!r} (expected: {expected})")
        merged[name] = float(value)
    t0, t1 = trange if trange is not None else default_range
    if not t1 > t0:
        raise ValueError("ode range must satisfy hi > lo")

    if ode == "afs1-minimal":
        c1, a = merged["c1"], merged["a"]
        if c1 == 0.0 or a == 0.0:
            raise ValueError("afs1-minimal needs c1 != 0 and a != 0")
        closed = minimal_oscillation_profile(c1, a, merged["c2"], merged["c3"])
        denom = 1.0 + a * a

        def deriv(t, y):
            return (y[1], -(2.0 * a * c1 * y[1] + c1 * c1 * y[0]) / denom)

    else:
        H0, c1, c2 = merged["H0"], merged["c1"], merged["c2"]
        if H0 == 0.0 or c1 == 0.0:
            raise ValueError("afs2-cmc needs H0 != 0 and c1 != 0")
        q = 4.0 * H0 * c1 * c1
        # The radicand c2 - q*t is linear in t, so checking the range
        # ends bounds it over the whole integration window.
        if c2 - q * t0 <= 1e-6 or c2 - q * t1 <= 1e-6:
            raise ValueError("afs2-cmc radicand c2 - 4*H0*c1^2*t must stay positive")
        closed = cmc_slope_profile(H0, c1, c2, merged["c3"])
        rate = 2.0 * H0 * c1 * c1

        def deriv(t, y):
            return (y[1], rate * y[1] ** 3)

    start = jets.eval_profile(closed, t0)
    path = _rk4(deriv, t0, (start.v, start.dx), t1, steps)
    worst = 0.0
    for t, y in path:
        exact = jets.eval_profile(closed, t).v
        worst = max(worst, abs(y[0] - exact))
    return worst


# ---------------------------------------------------------------------------
# randomized nonexistence probes


@dataclass(frozen=True)
class ProbeInstance:
    label: str
    stat: float
    flat: bool
    degenerate: bool
    bad: bool

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "stat": self.stat,
            "flat": self.flat,
            "degenerate": self.degenerate,
            "bad": self.bad,
        }


@dataclass(frozen=True)
class ProbeReport:
    kind: str
    count: int
    seed: int
    grid: int
    floor: float
    counterexamples: int
    min_stat: float
    instances: tuple[ProbeInstance, ...]

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "count": self.count,
            "seed": self.seed,
            "grid": self.grid,
            "floor": self.floor,
            "counterexamples": self.counterexamples,
            "min_stat": self.min_stat,
            "instances": [inst.to_dict() for inst in self.instances],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


_PROBE_KINDS = ("afs2-minimal", "afs2-constant-K")


def draw_nonplanar_type2(count: int, seed: int) -> list[AffineFactorable]:
    """Random type-2 instances with the planar draws rejected.

    Planes are genuine minimal (and flat) type-2 surfaces, so leaving
    them in would hand the probes spurious counterexamples.
    """
    rng = SplitMix64(seed)
    out: list[AffineFactorable] = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 50 * max(count, 1):
            raise RuntimeError("too many planar draws; generator looks degenerate")
        candidate = random_instance(rng, TYPE2)
        if not is_planar(candidate):
            out.append(candidate)
    return out


def probe_instances(
    kind: str,
    instances: Sequence[AffineFactorable],
    n: int = 11,
    floor: float = PROBE_FLOOR,
) -> ProbeReport:
    """Probe given instances for violations of a nonexistence claim.

    ``afs2-minimal``: an instance is a counterexample when |H| stays at
    or below the floor over its whole sampled grid.  ``afs2-constant-K``:
    a counterexample has K spread at or below the floor while max |K|
    sits above it (numerically flat instances are allowed; flat type-2
    surfaces exist and are not covered by the claim).
    """
    if kind not in _PROBE_KINDS:
        raise ValueError(f"unknown probe kind {kind!r} (known: {', '.join(_PROBE_KINDS)})")
    results = []
    for s in instances:
        run = sample_grid(s, n=n)
        if len(run.samples) < 4:
            results.append(ProbeInstance(s.label, -1.0, False, True, False))
            continue
        if kind == "afs2-minimal":
            stat = max(abs(v) for v in run.values("H"))
            results.append(ProbeInstance(s.label, stat, False, False, stat <= floor))
        else:
            ks = run.values("K")
            max_abs = max(abs(v) for v in ks)
            spread = max(ks) - min(ks)
            if max_abs <= floor:
                results.append(ProbeInstance(s.label, spread, True, False, False))
            else:
                results.append(ProbeInstance(s.label, spread, False, False, spread <= floor))
    usable = [r.stat for r in results if not (r.degenerate or r.flat)]
    min_stat = min(usable) if usable else -1.0
    return ProbeReport(
        kind=kind,
        count=len(instances),
        seed=-1,
        grid=n,
        floor=floor,
        counterexamples=sum(1 for r in results if r.bad),
        min_stat=min_stat,
        instances=tuple(results),
    )


def probe_nonexistence(
    kind: str,
    count: int = 100,
    seed: int = 42,
    n: int = 11,
    floor: float = PROBE_FLOOR,
) -> ProbeReport:
    """Randomized search for counterexamples to a type-2 nonexistence claim."""
    if kind not in _PROBE_KINDS:
        raise ValueError(f"unknown probe kind {kind!r} (known: {', '.join(_PROBE_KINDS)})")
    instances = draw_nonplanar_type2(count, seed)
    report = probe_instances(kind, instances, n=n, floor=floor)
    return ProbeReport(
        kind=report.kind,
        count=report.count,
        seed=seed,
        grid=report.grid,
        floor=report.floor,
        counterexamples=report.counterexamples,
        min_stat=report.min_stat,
        instances=report.instances,
    )

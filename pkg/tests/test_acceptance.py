"""Acceptance gate: every catalog claim checked end to end.

Each test covers one numbered criterion, prints a single summary line
of the form

    [acceptance] criterion NN name: PASS/FAIL (detail)

and then asserts.  The lines are replayed after the run by the
terminal-summary hook in conftest.py.  All randomness is seeded, so
the whole gate is reproducible bit for bit.
"""

import math

from isocurv.catalog import build_family, expected_profile, family_ids, get_family
from isocurv.factorable import TYPE1, TYPE2, AffineFactorable, as_chart, random_instance
from isocurv.geometry import Motion
from isocurv.rng import SplitMix64
from isocurv.verify import (
    check_constancy,
    cross_validate,
    finite_difference_check,
    motion_invariance_check,
    ode_crosscheck,
    probe_nonexistence,
    sample_grid,
)

RESULT_LINES: list[str] = []

GRID_N = 41
TOL = 1e-9
INTEGRAL_TOL = 1e-7
CROSS_SEED = 20260819
MOTION_SEED = 99


def _record(num: int, name: str, ok: bool, detail: str) -> None:
    line = f"[acceptance] criterion {num:02d} {name}: {'PASS' if ok else 'FAIL'} ({detail})"
    RESULT_LINES.append(line)
    print(line)


def _grid_deviation(fid: str, params: dict, quantity: str, target: float):
    """Max |quantity - target| over the full default-domain grid."""
    surface = build_family(fid, **params)
    run = sample_grid(surface, n=GRID_N, subject=fid)
    report = check_constancy(run, target=target, tol=TOL, quantity=quantity)
    return report.max_abs_deviation, len(run.excluded)


# criterion 1 ------------------------------------------------------------

FLAT_SETTINGS = {
    "AFS1.flat.scale": [
        {"c1": 1.0, "a": 1.0, "fn": "quadratic"},
        {"c1": -2.0, "a": 0.7, "fn": "exp"},
        {"c1": 0.5, "a": -1.2, "fn": "sin"},
    ],
    "AFS1.flat.exp": [
        {"c1": 1.0, "c2": 1.0, "c3": 1.0, "a": 1.0},
        {"c1": 2.0, "c2": 0.5, "c3": -1.0, "a": 0.8},
        {"c1": -1.0, "c2": 1.3, "c3": 0.6, "a": -0.5},
    ],
    "AFS1.flat.pow": [
        {"c1": 1.0, "c2": 2.0, "a": 1.0},
        {"c1": 2.0, "c2": -1.0, "a": 0.5},
        {"c1": 1.0, "c2": 0.5, "a": -0.25},
    ],
    "AFS2.flat.scale": [
        {"c1": 1.0, "a": 1.0, "fn": "quadratic"},
        {"c1": 2.0, "a": -0.8, "fn": "exp"},
        {"c1": 1.0, "a": 1.5, "fn": "sin"},
    ],
    "AFS2.flat.exp": [
        {"c1": 1.0, "c2": 1.0, "c3": 1.0, "a": 1.0},
        {"c1": 2.0, "c2": -1.0, "c3": 2.0, "a": 0.5},
        {"c1": 1.0, "c2": 0.5, "c3": 0.25, "a": -2.0},
    ],
    "AFS2.flat.pow": [
        {"c1": 1.0, "c2": 2.0, "a": 1.0},
        {"c1": 2.0, "c2": -1.0, "a": 0.5},
        {"c1": 1.0, "c2": 3.0, "a": 0.6},
    ],
    "FS1.flat.scale": [
        {"c1": 1.0, "fn": "quadratic"},
        {"c1": -2.0, "fn": "exp"},
        {"c1": 0.5, "fn": "sin"},
    ],
    "FS1.flat.exp": [
        {"c1": 1.0, "c2": 1.0, "c3": 1.0},
        {"c1": 2.0, "c2": 0.5, "c3": -1.0},
        {"c1": -1.0, "c2": 1.3, "c3": 0.6},
    ],
    "FS1.flat.pow": [
        {"c1": 1.0, "c2": 2.0},
        {"c1": 2.0, "c2": -1.0},
        {"c1": 1.0, "c2": 0.5},
    ],
    "FS2.flat.scale": [
        {"c1": 1.0, "fn": "quadratic"},
        {"c1": -2.0, "fn": "exp"},
        {"c1": 0.5, "fn": "sin"},
    ],
    "FS2.flat.exp": [
        {"c1": 1.0, "c2": 1.0, "c3": 1.0},
        {"c1": 2.0, "c2": -1.0, "c3": 2.0},
        {"c1": -1.0, "c2": 0.5, "c3": -0.5},
    ],
    "FS2.flat.pow": [
        {"c1": 1.0, "c2": 2.0},
        {"c1": 2.0, "c2": -1.0},
        {"c1": 1.0, "c2": 0.5},
    ],
}


def test_criterion_01_flat_families_have_vanishing_K():
    worst = 0.0
    settings = 0
    excluded_total = 0
    for fid, variants in FLAT_SETTINGS.items():
        for params in variants:
            dev, excluded = _grid_deviation(fid, params, "K", 0.0)
            worst = max(worst, dev)
            excluded_total += excluded
            settings += 1
    ok = worst <= TOL and excluded_total == 0 and settings == 36
    _record(
        1,
        "flat-families",
        ok,
        f"{settings} settings on {GRID_N}x{GRID_N} grids, max |K| = {worst:.3e}, "
        f"{excluded_total} exclusions",
    )
    assert ok, RESULT_LINES[-1]


# criterion 2 ------------------------------------------------------------


def test_criterion_02_constant_K_families_attain_their_constant():
    cases = [
        ("AFS1.K.saddle", {}, TOL),
        ("AFS1.K.saddle", {"K0": -4.0, "a": 0.5}, TOL),
        ("FS1.K.saddle", {}, TOL),
        ("FS1.K.saddle", {"K0": -2.25}, TOL),
        ("FS2.K.hyperbolic", {}, TOL),
        ("FS2.K.hyperbolic", {"K0": -4.0, "sign": -1.0}, TOL),
        ("FS2.K.integral", {}, INTEGRAL_TOL),
        ("FS2.K.integral", {"K0": -2.0, "c1": 1.5, "c2": 0.5}, INTEGRAL_TOL),
    ]
    worst = 0.0
    ok = True
    for fid, params, tol in cases:
        profile = expected_profile(fid, **params)
        dev, excluded = _grid_deviation(fid, params, "K", profile.derived_value)
        worst = max(worst, dev)
        if dev > tol or excluded:
            ok = False
        # outside the quadrature family the derived constant must also
        # reproduce the claimed one
        if fid != "FS2.K.integral":
            if abs(profile.derived_value - profile.claimed_value) > 1e-12:
                ok = False
    _record(
        2,
        "constant-K",
        ok,
        f"{len(cases)} settings across 4 families, max |K - K_target| = {worst:.3e}",
    )
    assert ok, RESULT_LINES[-1]


# criterion 3 ------------------------------------------------------------


def test_criterion_03_constant_H_families_attain_their_constant():
    cases = [
        ("AFS1.cmc.parabolic", {}),
        ("AFS1.cmc.parabolic", {"H0": -1.5, "a": 0.3}),
        ("AFS1.cmc.shear", {}),
        ("AFS1.cmc.shear", {"H0": 2.0, "a": -0.7}),
        ("AFS2.cmc.f1const", {}),
        ("AFS2.cmc.f1const", {"H0": -0.5, "c1": 1.2, "c2": 2.0, "c3": 1.0, "a": 0.4}),
        ("AFS2.cmc.sqrt", {}),
        ("AFS2.cmc.sqrt", {"H0": 2.0, "c1": 0.8, "a": 1.5}),
        ("FS1.cmc.parab", {}),
        ("FS1.cmc.parab", {"H0": 3.0, "c1": 2.0}),
        ("FS2.cmc.sqrt", {}),
        ("FS2.cmc.sqrt", {"H0": -1.5, "sign": -1.0}),
    ]
    worst = 0.0
    ok = True
    for fid, params in cases:
        profile = expected_profile(fid, **params)
        dev, excluded = _grid_deviation(fid, params, "H", profile.derived_value)
        worst = max(worst, dev)
        if dev > TOL or excluded:
            ok = False
    # the square-root family's stated constant differs from what direct
    # differentiation yields; the discrepancy must be on record
    sqrt_profile = expected_profile("AFS2.cmc.sqrt")
    flagged = (
        get_family("AFS2.cmc.sqrt").as_printed
        and abs(sqrt_profile.derived_value - (-1.0)) <= 1e-12
        and sqrt_profile.claimed_value == 1.0
    )
    ok = ok and flagged
    _record(
        3,
        "constant-H",
        ok,
        f"{len(cases)} settings across 6 families, max |H - H_target| = {worst:.3e}; "
        f"square-root family tracks its derived constant, stated sign retained on record",
    )
    assert ok, RESULT_LINES[-1]


# criterion 4 ------------------------------------------------------------


def test_criterion_04_minimal_families_have_vanishing_H():
    cases = [
        ("FS1.min.xy", {}),
        ("FS1.min.xy", {"c1": -3.0}),
        ("FS1.min.exp-trig", {}),
        ("FS1.min.exp-trig", {"c1": 2.0, "c2": 0.7, "c3": -1.0, "c4": 0.5, "c5": 1.5}),
        ("FS2.min.tan", {}),
        ("FS2.min.tan", {"c1": 2.5}),
        ("FS2.min.ratio", {}),
        ("FS2.min.ratio", {"c1": 3.0}),
        ("AFS1.min.plane", {}),
        ("AFS1.min.osc", {}),
        ("AFS1.min.osc", {"c1": 2.0, "a": -0.8, "c2": 0.5, "c3": 1.5}),
    ]
    worst = 0.0
    ok = True
    for fid, params in cases:
        dev, excluded = _grid_deviation(fid, params, "H", 0.0)
        worst = max(worst, dev)
        if dev > TOL or excluded:
            ok = False
    # the two retained stated forms are genuinely not minimal and must
    # show a visible deviation rather than sneak through
    printed_devs = {}
    for fid in ("AFS1.min.osc.printed", "FS2.min.ratio.printed"):
        dev, _ = _grid_deviation(fid, {}, "H", 0.0)
        printed_devs[fid] = dev
        if dev <= 0.01 or not get_family(fid).as_printed:
            ok = False
    _record(
        4,
        "minimal-families",
        ok,
        f"{len(cases)} corrected settings, max |H| = {worst:.3e}; retained forms "
        f"deviate by {printed_devs['AFS1.min.osc.printed']:.2g} and "
        f"{printed_devs['FS2.min.ratio.printed']:.2g} as expected",
    )
    assert ok, RESULT_LINES[-1]


# criterion 5 ------------------------------------------------------------


def test_criterion_05_specialized_and_generic_routes_agree():
    worst = 0.0
    checked = 0
    ok = True
    for kind in (TYPE1, TYPE2):
        for i in range(50):
            instance = random_instance(SplitMix64(CROSS_SEED + i), kind)
            report = cross_validate(
                instance, n_points=100, seed=CROSS_SEED + 1000 + i, tol=1e-10
            )
            worst = max(worst, report.max_abs_deviation)
            checked += 1
            if not report.passed:
                ok = False
    _record(
        5,
        "route-cross-validation",
        ok,
        f"{checked} random instances x 100 points, max unit-relative "
        f"discrepancy = {worst:.3e} (tol 1e-10)",
    )
    assert ok, RESULT_LINES[-1]


# criterion 6 ------------------------------------------------------------


def test_criterion_06_curvatures_are_motion_invariant():
    surfaces = [
        "AFS1.K.saddle",
        "FS1.min.exp-trig",
        "AFS1.cmc.parabolic",
        "FS2.min.tan",
        "AFS2.cmc.sqrt",
    ]
    rng = SplitMix64(MOTION_SEED)
    worst = 0.0
    ok = True
    checks = 0
    for _ in range(20):
        motion = Motion(
            angle=rng.uniform(0.0, 2.0 * math.pi),
            tx=rng.uniform(-2.0, 2.0),
            ty=rng.uniform(-2.0, 2.0),
            tz=rng.uniform(-2.0, 2.0),
            shear_x=rng.uniform(-1.0, 1.0),
            shear_y=rng.uniform(-1.0, 1.0),
        )
        for fid in surfaces:
            report = motion_invariance_check(build_family(fid), motion, n=5, tol=TOL)
            worst = max(worst, report.max_abs_deviation)
            checks += 1
            if not report.passed:
                ok = False
    _record(
        6,
        "motion-invariance",
        ok,
        f"20 random motions x {len(surfaces)} surfaces ({checks} checks), "
        f"max curvature drift = {worst:.3e}",
    )
    assert ok, RESULT_LINES[-1]


# criterion 7 ------------------------------------------------------------


def test_criterion_07_jets_match_finite_differences():
    worst = 0.0
    ok = True
    points = 0
    for fid in family_ids():
        surface = build_family(fid)
        chart = as_chart(surface) if isinstance(surface, AffineFactorable) else surface
        for p in chart.domain.shrunk(0.1).grid(5):
            dev = finite_difference_check(chart.height, p, h=1e-4, domain=chart.domain)
            worst = max(worst, dev)
            points += 1
            if dev > 1e-5:
                ok = False
    _record(
        7,
        "finite-difference-oracle",
        ok,
        f"all 30 families x 25 interior points ({points} stencils), "
        f"max unit-relative derivative gap = {worst:.3e} (tol 1e-5)",
    )
    assert ok, RESULT_LINES[-1]


# criterion 8 ------------------------------------------------------------


def test_criterion_08_profile_equations_check_out_numerically():
    details = []
    ok = True
    for ode in ("afs1-minimal", "afs2-cmc"):
        coarse = ode_crosscheck(ode, steps=10)
        fine = ode_crosscheck(ode, steps=1000)
        ratio = coarse / fine
        details.append(f"{ode}: err(1000)={fine:.2e}, err(10)/err(1000)={ratio:.1e}")
        if fine > 1e-6 or ratio < 1e6:
            ok = False
    _record(8, "ode-convergence", ok, "; ".join(details))
    assert ok, RESULT_LINES[-1]


# criterion 9 ------------------------------------------------------------


def test_criterion_09_probes_find_no_counterexamples():
    details = []
    ok = True
    for kind, seed in (("afs2-minimal", 42), ("afs2-constant-K", 7)):
        report = probe_nonexistence(kind, count=100, seed=seed)
        details.append(
            f"{kind}: {report.counterexamples} counterexamples in {report.count} "
            f"draws (min stat {report.min_stat:.2e})"
        )
        if report.counterexamples != 0 or report.count != 100:
            ok = False
    _record(9, "nonexistence-probes", ok, "; ".join(details))
    assert ok, RESULT_LINES[-1]


# criterion 10 -----------------------------------------------------------


def test_criterion_10_reports_are_bitwise_reproducible():
    def verify_channel():
        surface = build_family("FS2.K.integral")
        run = sample_grid(surface, n=21, subject="FS2.K.integral")
        return check_constancy(run, target=-1.0, tol=INTEGRAL_TOL, quantity="K").to_json()

    def cross_channel():
        instance = random_instance(SplitMix64(123), TYPE2)
        return cross_validate(instance, n_points=100, seed=456).to_json()

    def probe_channel():
        return probe_nonexistence("afs2-minimal", count=20, seed=11).to_json()

    channels = {"verify": verify_channel, "cross-validate": cross_channel, "probe": probe_channel}
    mismatched = [name for name, fn in channels.items() if fn() != fn()]
    ok = not mismatched
    _record(
        10,
        "bitwise-reproducibility",
        ok,
        "verify, cross-validate, and probe reports identical across "
        "independent rebuilds" if ok else f"mismatch in: {', '.join(mismatched)}",
    )
    assert ok, RESULT_LINES[-1]

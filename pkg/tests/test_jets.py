"""Unit tests for second-order jet arithmetic.

Expected derivative values are worked out by hand and frozen, or checked
against a test-local central finite-difference oracle that shares no code
with the jet implementation.
"""

import math

import pytest

from isocurv import jets
from isocurv.jets import BranchDomainError, Jet2
from isocurv.rng import SplitMix64


def test_division_field_hand_values():
    # w(x, y) = x / y at (1, 2):
    # w = 1/2, w_x = 1/y = 1/2, w_y = -x/y^2 = -1/4,
    # w_xx = 0, w_xy = -1/y^2 = -1/4, w_yy = 2x/y^3 = 1/4.
    got = jets.eval_field(lambda x, y: x / y, 1.0, 2.0).components()
    want = (0.5, 0.5, -0.25, 0.0, -0.25, 0.25)
    assert got == want, f"jet of x/y at (1,2) is {got}, expected {want}"


def test_sqrt_profile_hand_values():
    # f(t) = sqrt(t) at t = 4: f = 2, f' = 1/4, f'' = -1/32.
    got = jets.eval_profile(jets.sqrt, 4.0).components()
    want = (2.0, 0.25, 0.0, -0.03125, 0.0, 0.0)
    assert got == want, f"jet of sqrt at 4 is {got}, expected {want}"


def test_exp_field_hand_values():
    # exp(x) seeded in the first coordinate at 0: all x-derivatives are 1.
    got = jets.eval_field(lambda x, y: jets.exp(x), 0.0, 5.0).components()
    want = (1.0, 1.0, 0.0, 1.0, 0.0, 0.0)
    assert got == want, f"jet of exp(x) at x=0 is {got}, expected {want}"


def test_product_rule_hand_values():
    # w = x * y at (3, 5): w_x = y, w_y = x, w_xy = 1, pure seconds vanish.
    got = jets.eval_field(lambda x, y: x * y, 3.0, 5.0).components()
    want = (15.0, 5.0, 3.0, 0.0, 1.0, 0.0)
    assert got == want, f"jet of x*y at (3,5) is {got}, expected {want}"


def test_log_negative_raises():
    with pytest.raises(BranchDomainError):
        jets.log(jets.const(-1.0))


def test_sqrt_negative_raises():
    with pytest.raises(BranchDomainError):
        jets.sqrt(jets.const(-2.0))


def test_tan_pole_raises():
    with pytest.raises(BranchDomainError):
        jets.tan(jets.const(math.pi / 2.0))


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        jets.eval_field(lambda x, y: x / y, 1.0, 0.0)


def test_power_edge_cases():
    a = jets.coord1(2.0)
    assert jets.power(a, 0).components() == (1.0, 0.0, 0.0, 0.0, 0.0, 0.0)
    assert jets.power(a, 1).components() == a.components()
    # integer exponent on a negative base is fine
    cube = jets.power(jets.coord1(-2.0), 3)
    assert cube.v == -8.0 and cube.dx == 12.0, f"(-2)^3 jet: {cube.components()}"
    with pytest.raises(BranchDomainError):
        jets.power(jets.coord1(-2.0), 0.5)
    with pytest.raises(BranchDomainError):
        jets.power(jets.coord1(0.0), -1)


def test_operator_coercion_with_plain_numbers():
    x = jets.coord1(3.0)
    left = (1.0 + x) * 2.0 - 0.5
    right = 2.0 * x + 1.5
    assert left.components() == right.components(), (
        f"coerced arithmetic mismatch: {left.components()} != {right.components()}"
    )


def _random_jet(rng: SplitMix64) -> Jet2:
    return Jet2(*(rng.uniform(-2.0, 2.0) for _ in range(6)))


def test_multiplication_commutes_and_associates():
    rng = SplitMix64(2024)
    for trial in range(50):
        a, b, c = _random_jet(rng), _random_jet(rng), _random_jet(rng)
        ab, ba = a * b, b * a
        for u, v in zip(ab.components(), ba.components()):
            assert abs(u - v) <= 1e-14, f"trial {trial}: commutativity off by {abs(u - v)}"
        lhs, rhs = (a * b) * c, a * (b * c)
        for u, v in zip(lhs.components(), rhs.components()):
            assert abs(u - v) <= 1e-14 * (1.0 + abs(u)), (
                f"trial {trial}: associativity off by {abs(u - v)}"
            )


def test_exp_log_roundtrip():
    rng = SplitMix64(7)
    for trial in range(50):
        a = Jet2(rng.uniform(0.2, 3.0), *(rng.uniform(-1.0, 1.0) for _ in range(5)))
        back = jets.exp(jets.log(a))
        for u, v in zip(back.components(), a.components()):
            assert abs(u - v) <= 1e-12 * (1.0 + abs(v)), (
                f"trial {trial}: exp(log(a)) off by {abs(u - v)}"
            )


def _fd_oracle(f, x: float, y: float, h: float = 1e-4):
    """Central finite differences for the five partials of f at (x, y)."""
    fxp, fxm = f(x + h, y), f(x - h, y)
    fyp, fym = f(x, y + h), f(x, y - h)
    f0 = f(x, y)
    dx = (fxp - fxm) / (2.0 * h)
    dy = (fyp - fym) / (2.0 * h)
    dxx = (fxp - 2.0 * f0 + fxm) / (h * h)
    dyy = (fyp - 2.0 * f0 + fym) / (h * h)
    dxy = (
        f(x + h, y + h) - f(x + h, y - h) - f(x - h, y + h) + f(x - h, y - h)
    ) / (4.0 * h * h)
    return dx, dy, dxx, dxy, dyy


def test_composite_field_against_finite_differences():
    def field(x, y):
        return jets.exp(0.3 * x) * jets.sin(y) + x * x / (1.0 + y * y)

    def plain(x, y):
        return math.exp(0.3 * x) * math.sin(y) + x * x / (1.0 + y * y)

    points = [(0.4, 0.9), (-1.1, 0.3), (0.0, -0.7), (1.5, 1.2)]
    for x, y in points:
        jet = jets.eval_field(field, x, y)
        oracle = _fd_oracle(plain, x, y)
        got = (jet.dx, jet.dy, jet.dxx, jet.dxy, jet.dyy)
        for name, u, v in zip(("dx", "dy", "dxx", "dxy", "dyy"), got, oracle):
            assert abs(u - v) <= 1e-5 * (1.0 + abs(u)), (
                f"{name} at ({x},{y}): jet {u} vs finite difference {v}"
            )


def test_trig_second_derivatives_close_the_circle():
    # sin'' = -sin and cos'' = -cos, checked through the jet components.
    for t in (-1.3, 0.0, 0.6, 2.9):
        s = jets.eval_profile(jets.sin, t)
        c = jets.eval_profile(jets.cos, t)
        assert abs(s.dxx + s.v) <= 1e-15, f"sin'' + sin = {s.dxx + s.v} at {t}"
        assert abs(c.dxx + c.v) <= 1e-15, f"cos'' + cos = {c.dxx + c.v} at {t}"
        assert abs(s.v * s.v + c.v * c.v - 1.0) <= 1e-15


def test_is_finite_flags_bad_components():
    assert Jet2(1.0, 2.0, 3.0).is_finite()
    assert not Jet2(float("nan")).is_finite()
    assert not Jet2(1.0, dyy=float("inf")).is_finite()


def test_splitmix64_reference_stream():
    # Reference outputs for seed 0 from the published splitmix64 test vector.
    rng = SplitMix64(0)
    got = [rng.next_u64() for _ in range(3)]
    want = [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]
    assert got == want, f"splitmix64 seed-0 stream {got} != {want}"


def test_splitmix64_uniform_and_determinism():
    a, b = SplitMix64(123), SplitMix64(123)
    seq_a = [a.uniform(-1.0, 1.0) for _ in range(100)]
    seq_b = [b.uniform(-1.0, 1.0) for _ in range(100)]
    assert seq_a == seq_b, "same seed must reproduce the same stream"
    assert all(-1.0 <= v < 1.0 for v in seq_a), "uniform draws left the range"
    signs = {SplitMix64(9).sign() for _ in range(1)} | {
        SplitMix64(s).sign() for s in range(8)
    }
    assert signs <= {-1.0, 1.0}, f"sign() produced {signs}"

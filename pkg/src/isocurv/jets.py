"""Exact second-order forward-mode jets for scalar fields of two variables.

A :class:`Jet2` bundles the value of a field w with its first and second
partial derivatives at a single point: (w, w_1, w_2, w_11, w_12, w_22),
where the subscripts refer to the two input coordinates.  Arithmetic and
the elementary functions propagate all six components through the exact
second-order Leibniz and chain rules, so curvature formulas evaluated on
jets carry no truncation error; the only noise left is float64 rounding.

The mixed partial is stored once: symmetry of second partials is
structural, not checked.  Jets are immutable values, so evaluating the
same field at many points concurrently is safe.

Fields are ordinary callables built from jet arithmetic: a two-variable
field maps two jets to a jet (plain numbers are accepted and treated as
constants), a one-variable profile maps one jet to a jet.  Seed the
inputs with :func:`coord1` / :func:`coord2` and the output jet holds the
derivatives with respect to those coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "Jet2",
    "BranchDomainError",
    "MIN_DIVISOR",
    "TAN_COS_FLOOR",
    "coord1",
    "coord2",
    "const",
    "compose",
    "eval_field",
    "eval_profile",
    "exp",
    "log",
    "sin",
    "cos",
    "tan",
    "sqrt",
    "power",
    "neg",
]

#: Divisors with |value| below this raise ZeroDivisionError instead of
#: silently producing inf components.
MIN_DIVISOR = 1e-300

#: |cos| at or below this counts as a tangent pole.
TAN_COS_FLOOR = 1e-8


class BranchDomainError(ArithmeticError):
    """An elementary function was evaluated outside its real branch."""

    def __init__(self, fn: str, value: float, requirement: str) -> None:
        super().__init__(f"{fn} evaluated at {value!r}: requires {requirement}")
        self.fn = fn
        self.value = value


def _as_jet(x):
    """Coerce a plain number to a constant jet; pass jets through."""
    if isinstance(x, Jet2):
        return x
    if isinstance(x, (int, float)):
        return Jet2(float(x))
    return None


def _req(x, fn: str) -> "Jet2":
    j = _as_jet(x)
    if j is None:
        raise TypeError(f"{fn} expects a Jet2 or a real number, got {type(x).__name__}")
    return j


@dataclass(frozen=True, slots=True)
class Jet2:
    """Value and partial derivatives (through second order) at one point."""

    v: float
    dx: float = 0.0
    dy: float = 0.0
    dxx: float = 0.0
    dxy: float = 0.0
    dyy: float = 0.0

    def components(self) -> tuple[float, float, float, float, float, float]:
        return (self.v, self.dx, self.dy, self.dxx, self.dxy, self.dyy)

    def is_finite(self) -> bool:
        return all(math.isfinite(c) for c in self.components())

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = _as_jet(other)
        if o is None:
            return NotImplemented
        return Jet2(
            self.v + o.v,
            self.dx + o.dx,
            self.dy + o.dy,
            self.dxx + o.dxx,
            self.dxy + o.dxy,
            self.dyy + o.dyy,
        )

    __radd__ = __add__

    def __neg__(self):
        return Jet2(-self.v, -self.dx, -self.dy, -self.dxx, -self.dxy, -self.dyy)

    def __sub__(self, other):
        o = _as_jet(other)
        if o is None:
            return NotImplemented
        return Jet2(
            self.v - o.v,
            self.dx - o.dx,
            self.dy - o.dy,
            self.dxx - o.dxx,
            self.dxy - o.dxy,
            self.dyy - o.dyy,
        )

    def __rsub__(self, other):
        o = _as_jet(other)
        if o is None:
            return NotImplemented
        return o.__sub__(self)

    def __mul__(self, other):
        o = _as_jet(other)
        if o is None:
            return NotImplemented
        a, b = self, o
        return Jet2(
            a.v * b.v,
            a.dx * b.v + a.v * b.dx,
            a.dy * b.v + a.v * b.dy,
            a.dxx * b.v + 2.0 * a.dx * b.dx + a.v * b.dxx,
            a.dxy * b.v + a.dx * b.dy + a.dy * b.dx + a.v * b.dxy,
            a.dyy * b.v + 2.0 * a.dy * b.dy + a.v * b.dyy,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _as_jet(other)
        if o is None:
            return NotImplemented
        return self.__mul__(_reciprocal(o))

    def __rtruediv__(self, other):
        o = _as_jet(other)
        if o is None:
            return NotImplemented
        return o.__mul__(_reciprocal(self))

    def __pow__(self, exponent):
        if isinstance(exponent, (int, float)):
            return power(self, exponent)
        return NotImplemented


def _reciprocal(b: Jet2) -> Jet2:
    if abs(b.v) < MIN_DIVISOR:
        raise ZeroDivisionError(
            f"jet division by {b.v!r}: |denominator| < {MIN_DIVISOR:g}"
        )
    r = 1.0 / b.v
    return compose(r, -r * r, 2.0 * r * r * r, b)


# seeding --------------------------------------------------------------


def coord1(value: float) -> Jet2:
    """The first coordinate as a field: value with unit first derivative."""
    return Jet2(float(value), dx=1.0)


def coord2(value: float) -> Jet2:
    """The second coordinate as a field."""
    return Jet2(float(value), dy=1.0)


def const(value: float) -> Jet2:
    """A constant field: all derivative components zero."""
    return Jet2(float(value))


def eval_field(field, p1: float, p2: float) -> Jet2:
    """Evaluate a two-variable field at (p1, p2) with coordinate seeds."""
    out = _as_jet(field(coord1(p1), coord2(p2)))
    if out is None:
        raise TypeError("field must return a Jet2 or a real number")
    return out


def eval_profile(profile, t: float) -> Jet2:
    """Evaluate a one-variable profile at t.

    The profile is an ordinary jet field with the second coordinate simply
    unused: the derivative of the result lands in ``dx`` and the second
    derivative in ``dxx``.
    """
    out = _as_jet(profile(coord1(t)))
    if out is None:
        raise TypeError("profile must return a Jet2 or a real number")
    return out


# univariate composition ----------------------------------------------


def compose(value: float, d1: float, d2: float, inner: Jet2) -> Jet2:
    """Chain a univariate function through ``inner``.

    ``value``, ``d1``, ``d2`` are g(f), g'(f), g''(f) at f = inner.v; the
    result is the jet of g(f(x, y)).
    """
    f = inner
    return Jet2(
        value,
        d1 * f.dx,
        d1 * f.dy,
        d2 * f.dx * f.dx + d1 * f.dxx,
        d2 * f.dx * f.dy + d1 * f.dxy,
        d2 * f.dy * f.dy + d1 * f.dyy,
    )


# elementary functions -------------------------------------------------


def exp(a) -> Jet2:
    a = _req(a, "exp")
    e = math.exp(a.v)
    return compose(e, e, e, a)


def log(a) -> Jet2:
    a = _req(a, "log")
    if a.v <= 0.0:
        raise BranchDomainError("log", a.v, "a positive argument")
    r = 1.0 / a.v
    return compose(math.log(a.v), r, -r * r, a)


def sin(a) -> Jet2:
    a = _req(a, "sin")
    s, c = math.sin(a.v), math.cos(a.v)
    return compose(s, c, -s, a)


def cos(a) -> Jet2:
    a = _req(a, "cos")
    s, c = math.sin(a.v), math.cos(a.v)
    return compose(c, -s, -c, a)


def tan(a) -> Jet2:
    a = _req(a, "tan")
    c = math.cos(a.v)
    if abs(c) <= TAN_COS_FLOOR:
        raise BranchDomainError(
            "tan", a.v, f"|cos| > {TAN_COS_FLOOR:g} (pole guard)"
        )
    t = math.tan(a.v)
    sec2 = 1.0 + t * t
    return compose(t, sec2, 2.0 * t * sec2, a)


def sqrt(a) -> Jet2:
    a = _req(a, "sqrt")
    if a.v <= 0.0:
        raise BranchDomainError("sqrt", a.v, "a positive argument")
    s = math.sqrt(a.v)
    d1 = 0.5 / s
    return compose(s, d1, -0.5 * d1 / a.v, a)


def power(a, exponent: float) -> Jet2:
    """a**p for a real exponent p.

    Integer exponents work for any base (except a zero base with a negative
    exponent); non-integer exponents require a positive base.
    """
    a = _req(a, "power")
    p = float(exponent)
    v = a.v
    if p == 0.0:
        return Jet2(1.0)
    if p == 1.0:
        return a
    if not p.is_integer():
        if v <= 0.0:
            raise BranchDomainError(
                "power", v, f"a positive base for non-integer exponent {p!r}"
            )
    elif v == 0.0 and p < 0.0:
        raise BranchDomainError("power", v, "a nonzero base for negative exponent")
    g = math.pow(v, p)
    g1 = p * math.pow(v, p - 1.0)
    g2 = p * (p - 1.0) * math.pow(v, p - 2.0)
    return compose(g, g1, g2, a)


def neg(a) -> Jet2:
    return -_req(a, "neg")

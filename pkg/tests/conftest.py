import random
from fractions import Fraction

import pytest

from dp1.surface import (
    Surface,
    SurfaceParams,
    WPoint,
    finite_smoothness_check,
    smoothness_check,
)


@pytest.fixture
def worked_surface() -> Surface:
    """y² = x³ + z⁶ + 2z³w³ + 3w⁶, the primary worked example."""
    return Surface(SurfaceParams(0, 0, 1, 2, 3, 0, 0, 0, 1))


@pytest.fixture
def worked_surface_2() -> Surface:
    """y² = x³ + z⁶ + 2w⁶, the second worked example."""
    return Surface(SurfaceParams(0, 0, 1, 0, 2, 0, 0, 0, 1))


@pytest.fixture
def worked_seed() -> WPoint:
    return WPoint.parse("[-1:1:-1:1]")


@pytest.fixture
def singular_fixture() -> Surface:
    """A ≡ 0, B = (t³+1)²: branch sextic singular over the roots of t³+1."""
    return Surface(SurfaceParams(0, 0, 1, 2, 1, 0, 0, 0, 1))


def random_params(
    rng: random.Random,
    height: int = 5,
    a=None,
    c=None,
) -> SurfaceParams:
    """Random parameter tuple with |coefficients| of height ≤ height.

    a and c may be pinned to hit a specific singularity regime.
    """

    def rat() -> Fraction:
        return Fraction(rng.randint(-height, height), rng.randint(1, height))

    def rat_nonzero() -> Fraction:
        while True:
            v = rat()
            if v != 0:
                return v

    return SurfaceParams(
        rat() if a is None else Fraction(a),
        rat(),
        rat() if c is None else Fraction(c),
        rat(),
        rat(),
        rat(),
        rat(),
        rat(),
        rat_nonzero(),
    )


def random_smooth_surface(
    rng: random.Random,
    height: int = 5,
    a=None,
    c=None,
    d_nonzero=False,
    finite_only=False,
) -> Surface:
    """Rejection-sample until the smoothness check passes.

    With c pinned to 0 no member of the family is smooth over t = ∞, so the
    c = 0 regimes must be sampled with finite_only=True (smoothness of every
    finite fiber chart only).
    """
    check = finite_smoothness_check if finite_only else smoothness_check
    while True:
        p = random_params(rng, height, a=a, c=c)
        if d_nonzero and p.d == 0:
            continue
        S = Surface(p)
        try:
            if check(S).smooth:
                return S
        except Exception:
            continue


def surface_through(rng: random.Random, height: int = 4):
    """A random surface with a guaranteed rational point.

    Picks everything but e at random, then solves the surface equation for e
    so that (x0, y0) lies on fiber t0.  Returns (surface, point).
    """

    def rat() -> Fraction:
        return Fraction(rng.randint(-height, height), rng.randint(1, height))

    while True:
        a, b, c, d = rat(), rat(), rat(), rat()
        f0, f1, f2 = rat(), rat(), rat()
        f3 = rat()
        if f3 == 0:
            continue
        t0, x0, y0 = rat(), rat(), rat()
        if y0 == 0:
            continue
        f = SurfaceParams(a, b, c, d, 0, f0, f1, f2, f3).f_poly()
        u0 = f(t0)
        e = y0 * y0 - x0 ** 3 - (a * u0 + b) * x0 - c * u0 ** 2 - d * u0
        params = SurfaceParams(a, b, c, d, e, f0, f1, f2, f3)
        S = Surface(params)
        P = WPoint.from_affine(t0, x0, y0)
        if not S.membership(P):
            continue
        return S, P

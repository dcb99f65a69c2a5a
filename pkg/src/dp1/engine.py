"""Rational-point generation on the surface, plus the hypothesis checker.

The engine expands a verified seed by four mechanisms, breadth-first over
fibers: group-law multiples on the seed's fiber, the tangent-section point
−[2]P, multisection hops to other fibers sharing the same (x, y), and a
bounded-height sweep of the tangent section across fibers.  Every emitted
point is re-verified against the surface equation before it is reported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Set, Tuple

from . import cubic, elliptic, poly
from .elliptic import ECPoint
from .poly import UniPoly
from .rational import bit_size, format_rational, is_square
from .surface import Surface, WPoint, smoothness_check


@dataclass(frozen=True)
class HypothesisReport:
    """The five decidable hypotheses for a candidate seed point."""

    smooth: bool
    w0_nonzero: bool
    slope_condition: bool
    separable: bool
    non_torsion: bool

    @property
    def overall(self) -> bool:
        return (
            self.smooth
            and self.w0_nonzero
            and self.slope_condition
            and self.separable
            and self.non_torsion
        )

    def to_json(self) -> dict:
        return {
            "smooth": self.smooth,
            "w0_nonzero": self.w0_nonzero,
            "slope_condition": self.slope_condition,
            "separable": self.separable,
            "non_torsion": self.non_torsion,
            "overall": self.overall,
        }


def check_hypotheses(S: Surface, P: WPoint) -> HypothesisReport:
    """Evaluate each seed condition independently.

    The slope condition is checked with cleared denominators as
    3·z0·f3 + 2·f2·w0 ≠ 0.  When w0 = 0 the fiber-level conditions are
    reported False rather than erroring.
    """
    if not S.membership(P):
        raise ValueError(f"{P} is not on the surface")
    smooth = smoothness_check(S).smooth
    if P.w == 0:
        return HypothesisReport(smooth, False, False, False, False)
    slope = 3 * P.z * S.params.f3 + 2 * S.params.f2 * P.w != 0
    t0 = P.t()
    shifted = S.f - UniPoly.constant(S.f(t0))
    separable = poly.is_separable(shifted)
    E = S.fiber_at(t0)
    if E.is_singular():
        non_torsion = False
    else:
        x0, y0 = P.affine_xy()
        non_torsion = elliptic.torsion_status(E, ECPoint(x0, y0)) is None
    return HypothesisReport(smooth, True, slope, separable, non_torsion)


def bounded_height_rationals(height: int) -> Iterator[Fraction]:
    """All rationals p/q with max(|p|, q) ≤ height, each exactly once.

    Farey-style enumeration: coprime pairs in increasing denominator, both
    signs, zero and the integers included.
    """
    if height < 1:
        raise ValueError("height bound must be >= 1")
    yield Fraction(0)
    for q in range(1, height + 1):
        for p in range(1, height + 1):
            if math.gcd(p, q) != 1:
                continue
            yield Fraction(p, q)
            yield Fraction(-p, q)


def u_hop(S: Surface, t0: Fraction, Q: ECPoint) -> List[Tuple[Fraction, ECPoint]]:
    """Hop a point to other fibers through the multisection structure.

    The surface equation sees z only through u = f(z/w), so a fixed (x0, y0)
    lies on every fiber t with c·u² + (a·x0 + d)·u + (b·x0 + e − k) = 0 and
    f(t) = u, where k = y0² − x0³.  Returns the hops, excluding t0 itself.
    """
    if Q.is_infinity:
        raise ValueError("hop needs an affine point")
    p = S.params
    x0, y0 = Q.x, Q.y
    k = y0 * y0 - x0 ** 3
    u0 = S.f(t0)
    u_quad = UniPoly((p.b * x0 + p.e - k, p.a * x0 + p.d, p.c))
    assert u_quad(u0) == 0, "current fiber's u-value must solve the hop equation"
    u_values = {u0}
    if p.c != 0:
        # the second root is rational by Vieta
        u_values.add(-(p.a * x0 + p.d) / p.c - u0)
    out: List[Tuple[Fraction, ECPoint]] = []
    for u in sorted(u_values):
        shifted = S.f - UniPoly.constant(u)
        for t, _mult in poly.rational_roots(shifted):
            if t == t0:
                continue
            E = S.fiber_at(t)
            assert elliptic.on_curve(E, Q), "hopped point fails the new fiber"
            out.append((t, Q))
    return out


def cp_sweep(
    S: Surface, P: WPoint, t_height_bound: int
) -> List[Tuple[Fraction, ECPoint]]:
    """Sweep the tangent section of P across bounded-height fibers.

    Restricts the pulled-back tangent plane to each fiber, solves the
    resulting line/curve intersection for rational points, and excludes P
    itself.
    """
    ell = cubic.pullback_plane(S, cubic.tangent_plane(S, P))
    p_t = P.t() if P.w != 0 else None
    p_xy = P.affine_xy() if P.w != 0 else None
    out: List[Tuple[Fraction, ECPoint]] = []
    for t in bounded_height_rationals(t_height_bound):
        a, b, c0 = ell.restrict_to_fiber(t)
        E = S.fiber_at(t)
        found: List[ECPoint] = []
        if b != 0:
            cub = cubic.fiber_line_cubic(E, (a, b, c0))
            for x, _mult in poly.rational_roots(cub):
                found.append(ECPoint(x, -(a * x + c0) / b))
        elif a != 0:
            x = -c0 / a
            v = E.rhs(x)
            root = is_square(v)
            if root is not None:
                found.append(ECPoint(x, root))
                if root != 0:
                    found.append(ECPoint(x, -root))
        else:
            continue  # plane misses the affine fiber entirely
        for Q in found:
            if p_t is not None and t == p_t and (Q.x, Q.y) == p_xy:
                continue
            assert elliptic.on_curve(E, Q)
            out.append((t, Q))
    return out


@dataclass(frozen=True)
class GenerationConfig:
    t_height_bound: int = 10
    multiple_bound: int = 10
    depth: int = 1
    max_points: int = 500
    bit_cap: int = 4096

    def __post_init__(self):
        if self.t_height_bound < 1 or self.multiple_bound < 1 or self.max_points < 1:
            raise ValueError("bounds must be >= 1")
        if self.depth < 0:
            raise ValueError("depth must be >= 0")
        if self.bit_cap < 1:
            raise ValueError("bit cap must be >= 1")


@dataclass(frozen=True)
class PointRecord:
    wpoint: WPoint
    t: Fraction
    point: ECPoint
    provenance: str

    def to_json(self) -> dict:
        return {
            "t": format_rational(self.t),
            "x": format_rational(self.point.x),
            "y": format_rational(self.point.y),
            "provenance": self.provenance,
        }


@dataclass
class GenerationReport:
    points: List[PointRecord] = field(default_factory=list)
    fibers: Dict[Fraction, int] = field(default_factory=dict)
    all_verified: bool = False
    truncated: bool = False
    skipped: List[str] = field(default_factory=list)

    def to_json(self, S: Surface, seed: WPoint) -> dict:
        return {
            "surface": S.params.to_json(),
            "seed": str(seed),
            "points": [r.to_json() for r in self.points],
            "fibers": {format_rational(t): n for t, n in sorted(self.fibers.items())},
            "all_verified": self.all_verified,
            "truncated": self.truncated,
            "skipped": self.skipped,
        }


class HypothesisFailure(ValueError):
    """The seed does not satisfy all generation hypotheses."""


def _within_cap(t: Fraction, Q: ECPoint, cap: int) -> bool:
    return max(bit_size(t), bit_size(Q.x), bit_size(Q.y)) <= cap


def generate(S: Surface, seed: WPoint, cfg: GenerationConfig) -> GenerationReport:
    """Breadth-first point generation from a hypothesis-certified seed."""
    hyp = check_hypotheses(S, seed)
    if not hyp.overall:
        raise HypothesisFailure(f"seed {seed} fails hypotheses: {hyp.to_json()}")
    report = GenerationReport()
    seen: Set[WPoint] = set()

    def emit(t: Fraction, Q: ECPoint, provenance: str) -> bool:
        """Record a candidate; returns True when it is new and kept."""
        if Q.is_infinity:
            return False
        if not _within_cap(t, Q, cfg.bit_cap):
            report.truncated = True
            report.skipped.append(f"bit cap exceeded ({provenance})")
            return False
        wp = WPoint.from_affine(t, Q.x, Q.y)
        if wp in seen:
            return False
        if not S.membership(wp):
            raise AssertionError(f"generated point {wp} fails membership")
        seen.add(wp)
        report.points.append(PointRecord(wp, t, Q, provenance))
        report.fibers[t] = report.fibers.get(t, 0) + 1
        return True

    t_seed = seed.t()
    x0, y0 = seed.affine_xy()
    emit(t_seed, ECPoint(x0, y0), "seed")
    frontier: List[Tuple[Fraction, ECPoint]] = [(t_seed, ECPoint(x0, y0))]

    for _level in range(cfg.depth):
        next_frontier: List[Tuple[Fraction, ECPoint]] = []
        known_fibers = set(report.fibers)
        for t, Q in frontier:
            if len(report.points) >= cfg.max_points:
                report.truncated = True
                break
            E = S.fiber_at(t)
            if E.is_singular():
                report.skipped.append(f"singular fiber t={t}")
                continue
            newly: List[Tuple[Fraction, ECPoint]] = []
            # group-law multiples on this fiber
            if elliptic.torsion_status(E, Q) is None:
                acc = Q
                for n in range(2, cfg.multiple_bound + 1):
                    acc = elliptic.add(E, acc, Q)
                    if acc.is_infinity:
                        break
                    if not _within_cap(t, acc, cfg.bit_cap):
                        report.truncated = True
                        report.skipped.append(f"bit cap exceeded (multiple({n}))")
                        break
                    if emit(t, acc, f"multiple({n})"):
                        newly.append((t, acc))
            else:
                report.skipped.append(f"torsion point on fiber t={t}")
            # tangent-section point
            wp = WPoint.from_affine(t, Q.x, Q.y)
            if Q.y != 0:
                tq_t, tq = cubic.tangent_point(S, wp)
                if emit(tq_t, tq, "tangent"):
                    newly.append((tq_t, tq))
                # bounded-height sweep of the same tangent section
                for ts, Qs in cp_sweep(S, wp, cfg.t_height_bound):
                    if S.fiber_at(ts).is_singular():
                        continue
                    if emit(ts, Qs, f"sweep({ts})"):
                        newly.append((ts, Qs))
            else:
                report.skipped.append(f"2-torsion point on fiber t={t}")
            # multisection hops
            for th, Qh in u_hop(S, t, Q):
                if S.fiber_at(th).is_singular():
                    continue
                if emit(th, Qh, "hop"):
                    newly.append((th, Qh))
            next_frontier.extend(
                (tn, Qn) for tn, Qn in newly if tn not in known_fibers
            )
        frontier = next_frontier
        if len(report.points) >= cfg.max_points:
            report.truncated = True
            break
    report.all_verified = all(S.membership(r.wpoint) for r in report.points)
    return report


def brute_force_oracle(
    S: Surface,
    x_num: int,
    x_den: int,
    t_num: int,
    t_den: int,
) -> List[Tuple[Fraction, ECPoint]]:
    """Exhaustive box search: every fiber t and abscissa x within the bounds,
    keeping (x, ±y) whenever x³ + A(t)x + B(t) is a rational square.

    Ground truth for engine output; intended for small boxes only (the cost
    is O(t-box · x-box) exact square tests).
    """
    out: List[Tuple[Fraction, ECPoint]] = []
    for t in _box_rationals(t_num, t_den):
        E = S.fiber_at(t)
        for x in _box_rationals(x_num, x_den):
            v = E.rhs(x)
            root = is_square(v)
            if root is None:
                continue
            out.append((t, ECPoint(x, root)))
            if root != 0:
                out.append((t, ECPoint(x, -root)))
    return out


def _box_rationals(num_bound: int, den_bound: int) -> Iterator[Fraction]:
    """Rationals p/q with |p| ≤ num_bound, 1 ≤ q ≤ den_bound, deduplicated."""
    seen = set()
    for q in range(1, den_bound + 1):
        for p in range(-num_bound, num_bound + 1):
            v = Fraction(p, q)
            if v not in seen:
                seen.add(v)
                yield v

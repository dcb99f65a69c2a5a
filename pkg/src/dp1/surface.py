"""The degree-one del Pezzo family y² = x³ + a₄(f(z/w))·x·w⁴ + a₆(f(z/w))·w⁶.

Covers construction from the nine rational parameters, weighted-point
normalization and membership, the exact two-chart smoothness decision for the
branch sextic, a mod-p exhaustive oracle cross-checking it, and the degree-12
discriminant bookkeeping for singular fibers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import factorint

from . import poly
from .elliptic import FiberCurve
from .poly import UniPoly
from .rational import format_rational, parse_rational


class DegenerateSurfaceError(ValueError):
    """The discriminant form vanishes identically (degenerate family member)."""


@dataclass(frozen=True)
class SurfaceParams:
    """The nine rational parameters (a,b,c,d,e,f0..f3) of the family."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction
    f0: Fraction
    f1: Fraction
    f2: Fraction
    f3: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c", "d", "e", "f0", "f1", "f2", "f3"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.f3 == 0:
            raise ValueError("f3 must be nonzero (f must be a cubic)")

    def f_poly(self) -> UniPoly:
        return UniPoly((self.f0, self.f1, self.f2, self.f3))

    def a4_of_u(self) -> UniPoly:
        """a₄ as a polynomial in u = f(t)."""
        return UniPoly((self.b, self.a))

    def a6_of_u(self) -> UniPoly:
        """a₆ as a polynomial in u = f(t)."""
        return UniPoly((self.e, self.d, self.c))

    @staticmethod
    def from_json(obj: dict) -> "SurfaceParams":
        f = [parse_rational(v) for v in obj["f"]]
        if len(f) != 4:
            raise ValueError("surface file must list f as [f0,f1,f2,f3]")
        return SurfaceParams(
            *(parse_rational(obj[k]) for k in ("a", "b", "c", "d", "e")), *f
        )

    def to_json(self) -> dict:
        out = {k: format_rational(getattr(self, k)) for k in ("a", "b", "c", "d", "e")}
        out["f"] = [format_rational(getattr(self, k)) for k in ("f0", "f1", "f2", "f3")]
        return out


def _vp(n: int, p: int) -> Optional[int]:
    """p-adic valuation; None stands for +infinity (n == 0)."""
    if n == 0:
        return None
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass(frozen=True)
class WPoint:
    """A point of P(2,3,1,1) in canonical integer form (weights 2,3,1,1).

    Canonical means no prime λ divides (x,y,z,w) as (λ²,λ³,λ,λ), and the
    sign is fixed so that the first nonzero of (w, z) is positive, else y.
    """

    x: int
    y: int
    z: int
    w: int

    @staticmethod
    def canonicalize(x: int, y: int, z: int, w: int) -> "WPoint":
        if x == y == z == w == 0:
            raise ValueError("all four coordinates are zero")
        if z or w:
            base = math.gcd(z, w)
        elif x and y:
            base = math.gcd(x, y)
        else:
            base = abs(x or y)
        for p in factorint(base):
            exps = [
                v for v in (
                    _vp(z, p),
                    _vp(w, p),
                    None if x == 0 else _vp(x, p) // 2,
                    None if y == 0 else _vp(y, p) // 3,
                )
                if v is not None
            ]
            e = min(exps) if exps else 0
            if e > 0:
                x //= p ** (2 * e)
                y //= p ** (3 * e)
                z //= p ** e
                w //= p ** e
        if w < 0 or (w == 0 and z < 0) or (w == z == 0 and y < 0):
            y, z, w = -y, -z, -w
        return WPoint(x, y, z, w)

    @staticmethod
    def from_fractions(x: Fraction, y: Fraction, z: Fraction, w: Fraction) -> "WPoint":
        """Scale a rational quadruple into canonical integer form."""
        lam = 1
        dens = {2: x.denominator, 3: y.denominator, 1: math.lcm(z.denominator, w.denominator)}
        need: Dict[int, int] = {}
        for weight, den in dens.items():
            for p, v in factorint(den).items():
                need[p] = max(need.get(p, 0), -(-v // weight))
        for p, v in need.items():
            lam *= p ** v
        return WPoint.canonicalize(
            int(x * lam ** 2), int(y * lam ** 3), int(z * lam), int(w * lam)
        )

    @staticmethod
    def from_affine(t: Fraction, x: Fraction, y: Fraction) -> "WPoint":
        """Lift a Weierstrass point (x, y) on fiber t into P(2,3,1,1).

        The affine model lives in the w = 1 chart, so the rational quadruple
        is (x, y, t, 1) before weighted scaling.
        """
        return WPoint.from_fractions(Fraction(x), Fraction(y), Fraction(t), Fraction(1))

    @staticmethod
    def parse(s: str) -> "WPoint":
        s = s.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError(f"expected [x:y:z:w], got {s!r}")
        parts = s[1:-1].split(":")
        if len(parts) != 4:
            raise ValueError(f"expected four coordinates, got {s!r}")
        x, y, z, w = (Fraction(p.strip()) for p in parts)
        return WPoint.from_fractions(x, y, z, w)

    def __str__(self) -> str:
        return f"[{self.x}:{self.y}:{self.z}:{self.w}]"

    @property
    def is_base_point(self) -> bool:
        return (self.x, self.y, self.z, self.w) == (1, 1, 0, 0)

    def t(self) -> Fraction:
        if self.w == 0:
            raise ValueError("fiber parameter undefined for w = 0")
        return Fraction(self.z, self.w)

    def affine_xy(self) -> Tuple[Fraction, Fraction]:
        if self.w == 0:
            raise ValueError("affine coordinates undefined for w = 0")
        return Fraction(self.x, self.w ** 2), Fraction(self.y, self.w ** 3)


BASE_POINT = WPoint(1, 1, 0, 0)


class Surface:
    """An immutable member of the family, with its chart polynomials.

    A_t, B_t are the Weierstrass coefficients as polynomials in t = z/w;
    A_s, B_s are their chart-at-infinity counterparts in s = w/z (degree-4
    and degree-6 reversals of the homogeneous forms).
    """

    def __init__(self, params: SurfaceParams):
        self.params = params
        self.f = params.f_poly()
        self.A_t = params.a4_of_u().compose(self.f)
        self.B_t = params.a6_of_u().compose(self.f)
        self.A_s = self.A_t.reverse(4)
        self.B_s = self.B_t.reverse(6)
        self.f_s = self.f.reverse(3)

    @staticmethod
    def build(params: SurfaceParams) -> "Surface":
        return Surface(params)

    # -- weighted forms ----------------------------------------------
    def A_form(self, z: Fraction, w: Fraction) -> Fraction:
        """Degree-4 form A(z,w); A(1,0) = 0 is forced by the family shape."""
        if w != 0:
            return self.A_t(Fraction(z) / w) * Fraction(w) ** 4
        return self.A_s(Fraction(w) / z) * Fraction(z) ** 4

    def B_form(self, z: Fraction, w: Fraction) -> Fraction:
        """Degree-6 form B(z,w); B(1,0) = c·f3²."""
        if w != 0:
            return self.B_t(Fraction(z) / w) * Fraction(w) ** 6
        return self.B_s(Fraction(w) / z) * Fraction(z) ** 6

    def f_hom(self, z: Fraction, w: Fraction) -> Fraction:
        """Degree-3 homogenization of f."""
        if w != 0:
            return self.f(Fraction(z) / w) * Fraction(w) ** 3
        return self.f_s(Fraction(w) / z) * Fraction(z) ** 3

    # -- point operations --------------------------------------------
    def membership(self, P: WPoint) -> bool:
        x, y, z, w = (Fraction(v) for v in (P.x, P.y, P.z, P.w))
        if z == 0 and w == 0:
            return y * y == x ** 3
        return y * y == x ** 3 + self.A_form(z, w) * x + self.B_form(z, w)

    def fiber_at(self, t: Fraction) -> FiberCurve:
        t = Fraction(t)
        return FiberCurve(t, self.A_t(t), self.B_t(t))

    def discriminant_t(self) -> UniPoly:
        """Δ(t) = −16(4A(t)³ + 27B(t)²), the w=1 chart of the degree-12 form."""
        return ((self.A_t ** 3).scale(4) + (self.B_t ** 2).scale(27)).scale(-16)


# -- smoothness of the branch sextic ----------------------------------

@dataclass(frozen=True)
class SmoothnessVerdict:
    """Outcome of the exact smoothness decision for the branch sextic.

    kind is "smooth", "singular", or "degenerate"; for a singular surface the
    witnesses list the nontrivial gcd factors per chart whose roots carry
    singular points.
    """

    kind: str
    witnesses: Tuple[Tuple[str, UniPoly], ...] = ()

    @property
    def smooth(self) -> bool:
        return self.kind == "smooth"


def _strip_common_roots(h: UniPoly, A: UniPoly) -> UniPoly:
    """Remove from h every factor sharing a root with A."""
    if A.is_zero():
        return UniPoly.constant(1)
    while True:
        g = poly.gcd(h, A)
        if g.degree() == 0:
            return h
        h = h.divmod(g)[0]


def _chart_singular_witnesses(A: UniPoly, B: UniPoly) -> List[UniPoly]:
    """Nontrivial witness factors for singular points of x³ + A(t)x + B(t).

    Eliminating x = −3B/(2A) reduces F = F_x = F_t = 0 over A ≠ 0 to
    Δ(t) = 0 and 2AB' − 3A'B = 0; over A = 0 the conditions are
    B = B' = 0 (forcing x = 0).
    """
    delta = (A ** 3).scale(4) + (B ** 2).scale(27)
    if delta.is_zero():
        raise DegenerateSurfaceError("discriminant vanishes identically")
    witnesses = []
    g = (A * B.derivative()).scale(2) - (A.derivative() * B).scale(3)
    if not A.is_zero():
        common = delta.monic() if g.is_zero() else poly.gcd(delta, g)
        common = _strip_common_roots(common, A)
        if common.degree() >= 1:
            witnesses.append(common)
    # singular points lying over roots of A
    if A.is_zero():
        cond = poly.gcd(B, B.derivative()) if not B.is_zero() else UniPoly.zero()
    else:
        if B.is_zero():
            cond = A.monic()
        else:
            cond = poly.gcd(poly.gcd(B, B.derivative()), A)
    if cond.degree() >= 1:
        witnesses.append(cond)
    return witnesses


def finite_smoothness_check(S: Surface) -> SmoothnessVerdict:
    """Smoothness of the branch sextic away from the fiber at infinity.

    Only the chart t = z/w is inspected.  When c = 0 the sextic is always
    singular over t = ∞ (there A, B and B_w all vanish), so the a = 0 and
    c = 0 singularity regimes of the cubic model admit no globally smooth
    member; this weaker check is the right notion for those regimes.
    """
    witnesses = tuple(
        ("t", wpoly) for wpoly in _chart_singular_witnesses(S.A_t, S.B_t)
    )
    return SmoothnessVerdict("singular" if witnesses else "smooth", witnesses)


def smoothness_check(S: Surface) -> SmoothnessVerdict:
    """Decide smoothness of the branch sextic in both affine charts of P¹."""
    witnesses: List[Tuple[str, UniPoly]] = []
    for chart, A, B in (("t", S.A_t, S.B_t), ("s", S.A_s, S.B_s)):
        for wpoly in _chart_singular_witnesses(A, B):
            witnesses.append((chart, wpoly))
    if witnesses:
        return SmoothnessVerdict("singular", tuple(witnesses))
    return SmoothnessVerdict("smooth")


# -- mod-p exhaustive oracle ------------------------------------------

def _reduce_poly_mod(f: UniPoly, p: int) -> List[int]:
    out = []
    for c in f.coeffs:
        if c.denominator % p == 0:
            raise ValueError(f"prime {p} divides a coefficient denominator")
        out.append(c.numerator * pow(c.denominator, -1, p) % p)
    return out


def _eval_mod(coeffs: Sequence[int], t: int, p: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * t + c) % p
    return acc


def _deriv_mod(coeffs: Sequence[int], p: int) -> List[int]:
    return [(i * c) % p for i, c in enumerate(coeffs)][1:]


def modp_singular_scan(S: Surface, p: int) -> str:
    """Exhaustive singular-point scan of the branch sextic over F_p.

    Returns "smooth", "singular", or "bad_prime".  Both affine charts are
    enumerated, so every point of the weighted projective curve is covered.
    Independent of the symbolic criterion: it checks the three partials
    directly at each of the ≤ 2p² chart points.
    """
    if p == 2 or p == 3 or not _is_probable_prime(p):
        raise ValueError(f"scan needs a prime p >= 5, got {p}")
    for params_den in _param_denominators(S.params):
        if params_den % p == 0:
            raise ValueError(f"prime {p} divides a parameter denominator")
    degenerate = True
    singular = False
    for A, B in ((S.A_t, S.B_t), (S.A_s, S.B_s)):
        a = _reduce_poly_mod(A, p)
        b = _reduce_poly_mod(B, p)
        da, db = _deriv_mod(a, p), _deriv_mod(b, p)
        # degenerate iff Δ ≡ 0 on this chart
        if any(
            (4 * _eval_mod(a, t, p) ** 3 + 27 * _eval_mod(b, t, p) ** 2) % p
            for t in range(p)
        ):
            degenerate = False
        for t in range(p):
            at, bt = _eval_mod(a, t, p), _eval_mod(b, t, p)
            dat, dbt = _eval_mod(da, t, p), _eval_mod(db, t, p)
            for x in range(p):
                if (x ** 3 + at * x + bt) % p:
                    continue
                if (3 * x * x + at) % p:
                    continue
                if (dat * x + dbt) % p:
                    continue
                singular = True
    if degenerate:
        return "bad_prime"
    return "singular" if singular else "smooth"


def _param_denominators(params: SurfaceParams) -> List[int]:
    return [
        getattr(params, k).denominator
        for k in ("a", "b", "c", "d", "e", "f0", "f1", "f2", "f3")
    ]


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        if n % q == 0:
            return n == q
        if q * q > n:
            break
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class OracleDisagreementError(RuntimeError):
    """Mod-p oracle contradicts the symbolic smoothness verdict."""


def smoothness_cross_check(S: Surface, primes: Sequence[int] = (7, 11, 13, 17, 19)) -> dict:
    """Compare the symbolic verdict with the mod-p oracle at several primes.

    A surface smooth over Q may be singular mod p (bad reduction), but must
    be smooth mod at least one prime in the set.  A surface singular with a
    rational witness must reduce to a singular curve at every usable prime;
    any such disagreement aborts with diagnostics, since it can only mean a
    criterion bug.
    """
    verdict = smoothness_check(S)
    has_rational_witness = verdict.kind == "singular" and any(
        poly.rational_roots(wp) for _, wp in verdict.witnesses
    )
    per_prime: Dict[int, str] = {}
    for p in primes:
        if any(den % p == 0 for den in _param_denominators(S.params)):
            per_prime[p] = "skipped"
            continue
        per_prime[p] = modp_singular_scan(S, p)
    usable = {p: v for p, v in per_prime.items() if v in ("smooth", "singular")}
    if verdict.smooth:
        if usable and all(v == "singular" for v in usable.values()):
            raise OracleDisagreementError(
                f"declared smooth but singular mod every prime: {per_prime}"
            )
    elif has_rational_witness:
        bad = [p for p, v in usable.items() if v == "smooth"]
        if bad:
            raise OracleDisagreementError(
                f"rational singular witness does not reduce mod {bad}: {per_prime}"
            )
    return {"symbolic": verdict.kind, "mod_p": per_prime}


# -- discriminant form and singular fibers ----------------------------

@dataclass(frozen=True)
class DiscriminantForm:
    """The degree-12 form Δ(z,w) = −16(4A³ + 27B²) as a coefficient ledger.

    form_coeffs[i] is the coefficient of z^i w^(12−i); the affine chart
    polynomial in t = z/w is recoverable as the same list.
    """

    delta_t: UniPoly
    form_coeffs: Tuple[Fraction, ...]

    @property
    def z12_coefficient(self) -> Fraction:
        return self.form_coeffs[12]


def discriminant_form(S: Surface) -> DiscriminantForm:
    delta = S.discriminant_t()
    coeffs = tuple(delta[i] for i in range(13))
    return DiscriminantForm(delta, coeffs)


@dataclass(frozen=True)
class FiberFactor:
    factor: UniPoly
    degree: int
    multiplicity: int
    reduction: str  # "additive" when A vanishes at the factor's roots


@dataclass(frozen=True)
class SingularFiberReport:
    factors: Tuple[FiberFactor, ...]
    multiplicity_at_infinity: int

    @property
    def total_multiplicity(self) -> int:
        return (
            sum(f.degree * f.multiplicity for f in self.factors)
            + self.multiplicity_at_infinity
        )


def singular_fiber_report(S: Surface) -> SingularFiberReport:
    """Squarefree factorization of Δ(t) with the multiplicity-12 budget.

    The multiplicity at infinity is 12 − deg Δ(t).  Each factor is split by
    whether A vanishes at its roots (additive reduction) or not
    (multiplicative).
    """
    delta = S.discriminant_t()
    if delta.is_zero():
        raise DegenerateSurfaceError("discriminant vanishes identically")
    factors: List[FiberFactor] = []
    for g, m in poly.squarefree_factorization(delta):
        if S.A_t.is_zero():
            factors.append(FiberFactor(g, g.degree(), m, "additive"))
            continue
        g_add = poly.gcd(g, S.A_t)
        if g_add.degree() >= 1:
            factors.append(FiberFactor(g_add, g_add.degree(), m, "additive"))
            g = g.divmod(g_add)[0].monic()
        if g.degree() >= 1:
            factors.append(FiberFactor(g, g.degree(), m, "multiplicative"))
    return SingularFiberReport(tuple(factors), 12 - delta.degree())

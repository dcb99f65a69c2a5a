"""Exact polynomial algebra over the rationals (and quadratic extensions).

Univariate polynomials are dense coefficient tuples of Fractions; the
multivariate type is a sparse exponent-vector map whose coefficients may also
be QuadExt elements.  Everything is exact; there is no floating point
anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from sympy import divisors

from .rational import QuadExt, Scalar

Coeff = Union[Fraction, QuadExt]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class UniPoly:
    """Dense univariate polynomial over Q, coefficients indexed by degree.

    The zero polynomial has an empty coefficient tuple and degree() == -1
    (documented sentinel).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(cs)

    # -- constructors -------------------------------------------------
    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly(())

    @staticmethod
    def constant(c) -> "UniPoly":
        return UniPoly((c,))

    @staticmethod
    def x() -> "UniPoly":
        return UniPoly((0, 1))

    # -- basic queries ------------------------------------------------
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> Fraction:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero():
            return "UniPoly(0)"
        parts = [f"{c}*t^{i}" for i, c in enumerate(self.coeffs) if c != 0]
        return "UniPoly(" + " + ".join(parts) + ")"

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] + other[i] for i in range(n)])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] - other[i] for i in range(n)])

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero() or other.is_zero():
            return UniPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    def scale(self, c) -> "UniPoly":
        c = _frac(c)
        return UniPoly([a * c for a in self.coeffs])

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power")
        result = UniPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def compose(self, inner: "UniPoly") -> "UniPoly":
        """Return self(inner(t)), by Horner evaluation in UniPoly."""
        result = UniPoly.zero()
        for c in reversed(self.coeffs):
            result = result * inner + UniPoly.constant(c)
        return result

    def __call__(self, t) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def divmod(self, g: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        if g.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, self.degree() - g.degree() + 1)
        rem = list(self.coeffs)
        glc = g.lc()
        gd = g.degree()
        while len(rem) - 1 >= gd and any(c != 0 for c in rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < gd:
                break
            k = len(rem) - 1 - gd
            factor = rem[-1] / glc
            q[k] = factor
            for i in range(gd + 1):
                rem[k + i] -= factor * g.coeffs[i]
            rem.pop()
        return UniPoly(q), UniPoly(rem)

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self.scale(1 / self.lc())

    def shift_mul_x(self, k: int) -> "UniPoly":
        """Multiply by t^k."""
        if self.is_zero():
            return self
        return UniPoly((Fraction(0),) * k + self.coeffs)

    def reverse(self, n: Optional[int] = None) -> "UniPoly":
        """Coefficient reversal t^n · f(1/t), n defaulting to deg f.

        Used to move between the two affine charts of P^1.
        """
        if n is None:
            n = self.degree()
        if n < self.degree():
            raise ValueError("reversal order below degree")
        cs = [Fraction(0)] * (n + 1)
        for i, c in enumerate(self.coeffs):
            cs[n - i] = c
        return UniPoly(cs)


# -- integer-polynomial helpers (gcd via primitive PRS) ----------------

def _clear_denominators(f: UniPoly) -> List[int]:
    den = math.lcm(*(c.denominator for c in f.coeffs)) if f.coeffs else 1
    return [int(c * den) for c in f.coeffs]


def _content(cs: Sequence[int]) -> int:
    g = 0
    for c in cs:
        g = math.gcd(g, abs(c))
    return g or 1


def _primitive(cs: Sequence[int]) -> List[int]:
    g = _content(cs)
    return [c // g for c in cs]


def _int_prem(f: List[int], g: List[int]) -> List[int]:
    """Pseudo-remainder of integer polynomials (prem), trailing zeros trimmed."""
    f = list(f)
    dg = len(g) - 1
    glc = g[-1]
    while len(f) - 1 >= dg:
        if f[-1] == 0:
            f.pop()
            continue
        k = len(f) - 1 - dg
        flc = f[-1]
        f = [c * glc for c in f]
        for i in range(dg + 1):
            f[k + i] -= flc * g[i]
        f.pop()
        while f and f[-1] == 0:
            f.pop()
    return f


def gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd over Q via a primitive remainder sequence over Z.

    The remainder sequence is kept primitive after every pseudo-division to
    control coefficient growth on high-degree discriminant inputs.
    """
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    a = _primitive(_clear_denominators(f))
    b = _primitive(_clear_denominators(g))
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _int_prem(a, b)
        a, b = b, _primitive(r) if r else []
    return UniPoly(a).monic()


def resultant(f: UniPoly, g: UniPoly) -> Fraction:
    """Resultant via exact Gaussian elimination on the Sylvester matrix."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial is undefined")
    m, n = f.degree(), g.degree()
    if m == 0:
        return f.lc() ** n
    if n == 0:
        return g.lc() ** m
    size = m + n
    rows: List[List[Fraction]] = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([Fraction(0)] * i + fc + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + gc + [Fraction(0)] * (size - n - 1 - i))
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, size):
            if rows[r][col] == 0:
                continue
            factor = rows[r][col] * inv
            for cidx in range(col, size):
                rows[r][cidx] -= factor * rows[col][cidx]
    return det


def discriminant(f: UniPoly) -> Fraction:
    if f.degree() < 1:
        raise ValueError("discriminant needs degree >= 1")
    n = f.degree()
    fp = f.derivative()
    if fp.is_zero():
        return Fraction(0)
    res = resultant(f, fp)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * res / f.lc()


def is_separable(f: UniPoly) -> bool:
    if f.degree() < 1:
        raise ValueError("separability needs degree >= 1")
    return gcd(f, f.derivative()).degree() == 0


def squarefree_part(f: UniPoly) -> UniPoly:
    if f.is_zero():
        raise ValueError("squarefree part of zero is undefined")
    if f.degree() == 0:
        return UniPoly.constant(1)
    g = gcd(f, f.derivative())
    q, r = f.divmod(g)
    assert r.is_zero()
    return q.monic()


def squarefree_factorization(f: UniPoly) -> List[Tuple[UniPoly, int]]:
    """Yun's algorithm: return [(g_i, i)] with f = lc · ∏ g_i^i, g_i monic."""
    if f.is_zero():
        raise ValueError("cannot factor zero")
    f = f.monic()
    if f.degree() == 0:
        return []
    out: List[Tuple[UniPoly, int]] = []
    fp = f.derivative()
    a = gcd(f, fp)
    b = f.divmod(a)[0]
    c = fp.divmod(a)[0]
    d = c - b.derivative()
    i = 1
    while b.degree() > 0:
        g = gcd(b, d)
        if g.degree() > 0:
            out.append((g.monic(), i))
        b = b.divmod(g)[0]
        c = d.divmod(g)[0]
        d = c - b.derivative()
        i += 1
    return out


def rational_roots(f: UniPoly) -> List[Tuple[Fraction, int]]:
    """All rational roots of f with multiplicities.

    Clears denominators to a primitive integer polynomial and enumerates
    divisor pairs of the constant and leading coefficients; a root's
    multiplicity is found by repeated division.
    """
    if f.is_zero():
        raise ValueError("rational_roots of the zero polynomial")
    roots: List[Tuple[Fraction, int]] = []
    # factor out powers of t
    k = 0
    while f[0] == 0 and f.degree() >= 1:
        f = UniPoly(f.coeffs[1:])
        k += 1
    if k:
        roots.append((Fraction(0), k))
    if f.degree() < 1:
        return roots
    ics = _primitive(_clear_denominators(f))
    a0, an = abs(ics[0]), abs(ics[-1])
    seen = set()
    for p in divisors(a0):
        for q in divisors(an):
            if math.gcd(p, q) != 1:
                continue
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in seen:
                    continue
                seen.add(cand)
                if f(cand) == 0:
                    mult = 0
                    g = f
                    lin = UniPoly((-cand, 1))
                    while True:
                        quo, rem = g.divmod(lin)
                        if not rem.is_zero():
                            break
                        mult += 1
                        g = quo
                    roots.append((cand, mult))
    roots.sort(key=lambda rm: (rm[0].numerator, rm[0].denominator))
    return roots


def rational_roots_flat(f: UniPoly) -> List[Fraction]:
    """Rational roots repeated per multiplicity."""
    out: List[Fraction] = []
    for r, m in rational_roots(f):
        out.extend([r] * m)
    return out


# -- sparse multivariate polynomials ----------------------------------

Exponent = Tuple[int, ...]


def _is_zero_coeff(c: Coeff) -> bool:
    return not bool(c) if isinstance(c, QuadExt) else c == 0


class MultiPoly:
    """Sparse multivariate polynomial; coefficients in Q or a fixed Q(√D).

    Terms map fixed-arity exponent vectors to nonzero coefficients.  The
    canonical term order (total degree, then lexicographic) makes equality
    and serialization deterministic.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[Dict[Exponent, Coeff]] = None):
        self.nvars = nvars
        clean: Dict[Exponent, Coeff] = {}
        for exp, c in (terms or {}).items():
            if len(exp) != nvars:
                raise ValueError("exponent arity mismatch")
            if isinstance(c, int):
                c = Fraction(c)
            if not _is_zero_coeff(c):
                clean[tuple(exp)] = c
        self.terms = clean

    @staticmethod
    def constant(nvars: int, c) -> "MultiPoly":
        return MultiPoly(nvars, {(0,) * nvars: c})

    @staticmethod
    def var(nvars: int, idx: int) -> "MultiPoly":
        exp = [0] * nvars
        exp[idx] = 1
        return MultiPoly(nvars, {tuple(exp): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, tuple(self.sorted_terms())))

    def sorted_terms(self) -> List[Tuple[Exponent, Coeff]]:
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]))

    def __repr__(self) -> str:
        if self.is_zero():
            return "MultiPoly(0)"
        bits = []
        for exp, c in self.sorted_terms():
            mono = "*".join(f"X{i}^{e}" for i, e in enumerate(exp) if e)
            bits.append(f"({c})" + ("*" + mono if mono else ""))
        return "MultiPoly(" + " + ".join(bits) + ")"

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        if self.nvars != other.nvars:
            raise ValueError("arity mismatch")
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            terms[exp] = terms.get(exp, Fraction(0)) + c
        return MultiPoly(self.nvars, terms)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        if self.nvars != other.nvars:
            raise ValueError("arity mismatch")
        terms: Dict[Exponent, Coeff] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.nvars, terms)

    def scale(self, c) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __pow__(self, n: int) -> "MultiPoly":
        result = MultiPoly.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def substitute(self, replacements: Sequence["MultiPoly"]) -> "MultiPoly":
        """Substitute one replacement polynomial per variable, simultaneously."""
        if len(replacements) != self.nvars:
            raise ValueError("need one replacement per variable")
        nv = replacements[0].nvars
        out = MultiPoly(nv)
        for exp, c in self.terms.items():
            term = MultiPoly.constant(nv, c)
            for idx, e in enumerate(exp):
                if e:
                    term = term * (replacements[idx] ** e)
            out = out + term
        return out

    def evaluate(self, values: Sequence[Scalar]) -> Coeff:
        if len(values) != self.nvars:
            raise ValueError("need one value per variable")
        acc: Coeff = Fraction(0)
        for exp, c in self.terms.items():
            t: Coeff = c
            for v, e in zip(values, exp):
                for _ in range(e):
                    t = t * v
            acc = acc + t
        return acc

    def partial(self, idx: int) -> "MultiPoly":
        terms: Dict[Exponent, Coeff] = {}
        for exp, c in self.terms.items():
            e = exp[idx]
            if e == 0:
                continue
            nexp = list(exp)
            nexp[idx] = e - 1
            key = tuple(nexp)
            terms[key] = terms.get(key, Fraction(0)) + c * e
        return MultiPoly(self.nvars, terms)

    def degree_in(self, idx: int) -> int:
        """Max exponent of variable idx; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(e[idx] for e in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def coefficient_of(self, idx: int, power: int) -> "MultiPoly":
        """Coefficient of (variable idx)^power, as a polynomial with that
        variable's exponent zeroed."""
        terms: Dict[Exponent, Coeff] = {}
        for exp, c in self.terms.items():
            if exp[idx] == power:
                nexp = list(exp)
                nexp[idx] = 0
                terms[tuple(nexp)] = c
        return MultiPoly(self.nvars, terms)

    def to_json_terms(self) -> List[list]:
        """Serializable term list [[e0,...,ek], "p/q"] in canonical order."""
        out = []
        for exp, c in self.sorted_terms():
            if isinstance(c, QuadExt):
                raise ValueError("QuadExt coefficients do not serialize")
            out.append([list(exp), str(c)])
        return out

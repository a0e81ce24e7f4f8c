"""Elliptic curves over Q with exact rational arithmetic: the chord-tangent
group law on long Weierstrass models, point orders bounded by Mazur's theorem,
Lutz-Nagell torsion computation, and the specializations of the pre-image
elliptic surfaces with their torsion-family parametrizations.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Optional

from .exactmath import QPoly, RatLike, format_rat, int_sqrt, parse_rat
from .factor import (
    DEFAULT_RHO_STEPS,
    DEFAULT_TRIAL_BOUND,
    FactorBudgetExceeded,
    factorize,
)


class OffCurveError(ValueError):
    """An affine point fed to the group law does not satisfy the curve
    equation; carries the nonzero residue."""

    def __init__(self, point: "ECPoint", residue: Fraction):
        self.point = point
        self.residue = residue
        super().__init__("point %s is not on the curve (residue %s)"
                         % (point, format_rat(residue)))


@dataclass(frozen=True)
class ECPoint:
    """Affine point (x, y) or the point at infinity (x = y = None)."""

    x: Optional[Fraction]
    y: Optional[Fraction]

    @classmethod
    def affine(cls, x: RatLike, y: RatLike) -> "ECPoint":
        return cls(Fraction(x), Fraction(y))

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self):
        if self.is_infinity:
            return "O"
        return "(%s, %s)" % (format_rat(self.x), format_rat(self.y))

    def as_json(self):
        if self.is_infinity:
            return None
        return [format_rat(self.x), format_rat(self.y)]

    @classmethod
    def from_json(cls, data) -> "ECPoint":
        if data is None:
            return INFINITY
        return cls.affine(parse_rat(data[0]), parse_rat(data[1]))


INFINITY = ECPoint(None, None)


@dataclass(frozen=True)
class WeierstrassCurve:
    """Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
    over Q.  Singular models are representable; the group law refuses them.
    """

    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction

    @classmethod
    def from_coeffs(cls, a1: RatLike, a2: RatLike, a3: RatLike,
                    a4: RatLike, a6: RatLike) -> "WeierstrassCurve":
        return cls(Fraction(a1), Fraction(a2), Fraction(a3),
                   Fraction(a4), Fraction(a6))

    @classmethod
    def short(cls, a: RatLike, b: RatLike) -> "WeierstrassCurve":
        return cls.from_coeffs(0, 0, 0, a, b)

    # -- standard invariants -------------------------------------------------

    @property
    def b2(self) -> Fraction:
        return self.a1 * self.a1 + 4 * self.a2

    @property
    def b4(self) -> Fraction:
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self) -> Fraction:
        return self.a3 * self.a3 + 4 * self.a6

    @property
    def b8(self) -> Fraction:
        return (self.a1 * self.a1 * self.a6 + 4 * self.a2 * self.a6
                - self.a1 * self.a3 * self.a4 + self.a2 * self.a3 * self.a3
                - self.a4 * self.a4)

    @property
    def c4(self) -> Fraction:
        return self.b2 * self.b2 - 24 * self.b4

    @property
    def c6(self) -> Fraction:
        return -self.b2 ** 3 + 36 * self.b2 * self.b4 - 216 * self.b6

    def discriminant(self) -> Fraction:
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def is_singular(self) -> bool:
        return self.discriminant() == 0

    def j_invariant(self) -> Optional[Fraction]:
        disc = self.discriminant()
        if disc == 0:
            return None
        return self.c4 ** 3 / disc

    # -- membership ------------------------------------------------------------

    def equation_residue(self, p: ECPoint) -> Fraction:
        if p.is_infinity:
            return Fraction(0)
        x, y = p.x, p.y
        return (y * y + self.a1 * x * y + self.a3 * y
                - x ** 3 - self.a2 * x * x - self.a4 * x - self.a6)

    def contains(self, p: ECPoint) -> bool:
        return self.equation_residue(p) == 0

    def _require_on_curve(self, p: ECPoint):
        residue = self.equation_residue(p)
        if residue != 0:
            raise OffCurveError(p, residue)

    # -- group law ---------------------------------------------------------------

    def neg(self, p: ECPoint) -> ECPoint:
        if p.is_infinity:
            return INFINITY
        return ECPoint(p.x, -p.y - self.a1 * p.x - self.a3)

    def add(self, p: ECPoint, q: ECPoint) -> ECPoint:
        if self.is_singular():
            raise ValueError("group law on a singular model")
        self._require_on_curve(p)
        self._require_on_curve(q)
        return self._add_unchecked(p, q)

    def _add_unchecked(self, p: ECPoint, q: ECPoint) -> ECPoint:
        if p.is_infinity:
            return q
        if q.is_infinity:
            return p
        x1, y1, x2, y2 = p.x, p.y, q.x, q.y
        if x1 == x2:
            if y2 == -y1 - self.a1 * x1 - self.a3:
                return INFINITY
            denom = 2 * y1 + self.a1 * x1 + self.a3
            slope = (3 * x1 * x1 + 2 * self.a2 * x1 + self.a4
                     - self.a1 * y1) / denom
        else:
            slope = (y2 - y1) / (x2 - x1)
        nu = y1 - slope * x1
        x3 = slope * slope + self.a1 * slope - self.a2 - x1 - x2
        y3 = -(slope + self.a1) * x3 - nu - self.a3
        return ECPoint(x3, y3)

    def mul(self, n: int, p: ECPoint) -> ECPoint:
        """[n]P by double-and-add (exact; n may be negative)."""
        if self.is_singular():
            raise ValueError("group law on a singular model")
        self._require_on_curve(p)
        if n < 0:
            n, p = -n, self.neg(p)
        result = INFINITY
        addend = p
        while n:
            if n & 1:
                result = self._add_unchecked(result, addend)
            addend = self._add_unchecked(addend, addend)
            n >>= 1
        return result

    # -- serialization -----------------------------------------------------------

    def as_json(self) -> dict:
        return {
            "a1": format_rat(self.a1), "a2": format_rat(self.a2),
            "a3": format_rat(self.a3), "a4": format_rat(self.a4),
            "a6": format_rat(self.a6),
        }

    @classmethod
    def from_json(cls, data: dict) -> "WeierstrassCurve":
        return cls.from_coeffs(*(parse_rat(data[k])
                                 for k in ("a1", "a2", "a3", "a4", "a6")))

    def __str__(self):
        def tack(parts, coef, mono):
            if not coef:
                return
            sign = " - " if coef < 0 else " + "
            mag = abs(coef)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = "%s*%s" % (format_rat(mag), mono)
            else:
                body = format_rat(mag)
            parts.append(sign + body)

        lhs = ["y^2"]
        tack(lhs, self.a1, "x*y")
        tack(lhs, self.a3, "y")
        rhs = ["x^3"]
        tack(rhs, self.a2, "x^2")
        tack(rhs, self.a4, "x")
        tack(rhs, self.a6, "")
        return "".join(lhs) + " = " + "".join(rhs)


def point_order(curve: WeierstrassCurve, p: ECPoint) -> Optional[int]:
    """Exact order of p, or None for infinite order.

    By Mazur's classification a rational torsion point has order in
    {1, ..., 10, 12}, so checking multiples up to 12 decides torsion without
    any height or reduction argument.
    """
    if curve.is_singular():
        raise ValueError("point order on a singular model")
    curve._require_on_curve(p)
    if p.is_infinity:
        return 1
    q = p
    for k in range(2, 13):
        q = curve._add_unchecked(q, p)
        if q.is_infinity:
            return k
    return None


# ---------------------------------------------------------------------------
# integral models and Lutz-Nagell torsion
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ShortIntegralModel:
    """Integral short model Y^2 = X^3 + a X + b isomorphic to the source
    curve, with the coordinate change X = s^2 (36x + 3 b2),
    Y = 108 s^3 (2y + a1 x + a3)."""

    a: int
    b: int
    scale: Fraction
    source: WeierstrassCurve

    @property
    def curve(self) -> WeierstrassCurve:
        return WeierstrassCurve.short(self.a, self.b)

    def push(self, p: ECPoint) -> ECPoint:
        if p.is_infinity:
            return INFINITY
        s = self.scale
        big_x = s * s * (36 * p.x + 3 * self.source.b2)
        big_y = 108 * s ** 3 * (2 * p.y + self.source.a1 * p.x + self.source.a3)
        return ECPoint(big_x, big_y)

    def pull(self, p: ECPoint) -> ECPoint:
        if p.is_infinity:
            return INFINITY
        s = self.scale
        x = (p.x / (s * s) - 3 * self.source.b2) / 36
        y = (p.y / (108 * s ** 3) - self.source.a1 * x - self.source.a3) / 2
        return ECPoint(x, y)


def short_integral_model(curve: WeierstrassCurve,
                         trial_bound: int = DEFAULT_TRIAL_BOUND,
                         rho_steps: int = DEFAULT_RHO_STEPS) -> ShortIntegralModel:
    """Scale the standard short form Y^2 = X^3 - 27 c4 X - 54 c6 to integer
    coefficients, then strip superfluous (p^4, p^6) power pairs so the
    discriminant stays as small as the scaling allows."""
    a0 = -27 * curve.c4
    b0 = -54 * curve.c6
    # per-prime exponents k with 4k >= v_p(den a0) and 6k >= v_p(den b0)
    exps: dict[int, int] = {}
    for value, weight in ((a0, 4), (b0, 6)):
        den = value.denominator
        if den == 1:
            continue
        for p, e in factorize(den, trial_bound, rho_steps).items():
            need = -(-e // weight)       # ceil(e / weight)
            exps[p] = max(exps.get(p, 0), need)
    u = 1
    for p, k in exps.items():
        u *= p ** k
    a1 = a0 * u ** 4
    b1 = b0 * u ** 6
    assert a1.denominator == 1 and b1.denominator == 1
    a_int, b_int = int(a1), int(b1)
    v = 1
    for p in sorted(set(exps) | {2, 3}):
        while True:
            ok_a = a_int == 0 or a_int % p ** 4 == 0
            ok_b = b_int == 0 or b_int % p ** 6 == 0
            if not (ok_a and ok_b):
                break
            a_int //= p ** 4
            b_int //= p ** 6
            v *= p
    return ShortIntegralModel(a=a_int, b=b_int, scale=Fraction(u, v),
                              source=curve)


def _icbrt(n: int) -> int:
    """Floor cube root of n >= 0 by Newton iteration on integers."""
    if n == 0:
        return 0
    x = 1 << ((n.bit_length() + 2) // 3)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            break
        x = y
    return x


def _integer_roots_depressed_cubic(a: int, b: int) -> list[int]:
    """All integer roots of x^3 + a x + b, by monotone-interval bisection
    (the polynomial is monic, so rational roots are integers).  Root size is
    capped by the Fujiwara bound 2 max(|a|^(1/2), |b|^(1/3))."""

    def f(x: int) -> int:
        return x * x * x + a * x + b

    bound = 2 * max(isqrt(abs(a)) + 1, _icbrt(abs(b)) + 1)
    roots = set()

    def bisect(lo: int, hi: int, increasing: bool):
        if lo > hi:
            return
        flo, fhi = f(lo), f(hi)
        if flo == 0:
            roots.add(lo)
        if fhi == 0:
            roots.add(hi)
        if increasing:
            if not (flo < 0 < fhi):
                return
        else:
            if not (flo > 0 > fhi):
                return
        while hi - lo > 1:
            mid = (lo + hi) // 2
            fm = f(mid)
            if fm == 0:
                roots.add(mid)
                return
            if (fm < 0) == increasing:
                lo = mid
            else:
                hi = mid

    if a >= 0:
        bisect(-bound, bound, True)
    else:
        m = isqrt((-a) // 3)
        for probe in (-m - 1, -m, m, m + 1):
            if f(probe) == 0:
                roots.add(probe)
        bisect(-bound, -m - 1, True)
        bisect(-m, m, False)
        bisect(m + 1, bound, True)
    return sorted(roots)


def _cauchy_bound(coeffs: list[int]) -> int:
    lead = abs(coeffs[-1])
    return 1 + max(abs(c) for c in coeffs) // lead + 1


def integer_roots(coeffs: list[int]) -> list[int]:
    """All integer roots of a nonzero integer polynomial, exactly.

    Strategy: reduce to the squarefree part, recursively confine the real
    roots of the derivative to unit intervals, bisect for sign changes on the
    monotone gaps in between, and test the integer endpoints.  Exact integer
    arithmetic throughout; no factoring, no floating point.
    """
    poly = QPoly(coeffs)
    if poly.is_zero():
        raise ValueError("zero polynomial")
    if poly.degree == 0:
        return []
    square_free = poly.divmod(poly.gcd(poly.derivative()))[0]
    ints = square_free.content_den_cleared()
    candidates = _real_root_unit_intervals([int(c) for c in ints.coeffs])
    roots = set()
    for lo, hi in candidates:
        for r in {lo, hi}:
            if poly.eval(Fraction(r)) == 0:
                roots.add(r)
    return sorted(roots)


def _real_root_unit_intervals(coeffs: list[int]) -> list[tuple[int, int]]:
    """Unit (or point) integer intervals jointly covering every real root of
    the given squarefree integer polynomial."""
    degree = len(coeffs) - 1
    if degree <= 0:
        return []
    if degree == 1:
        c0, c1 = coeffs
        root_floor = -c0 // c1
        return [(root_floor, root_floor + 1)]

    def evaluate(x: int) -> int:
        acc = 0
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    bound = _cauchy_bound(coeffs)
    deriv = [i * c for i, c in enumerate(coeffs)][1:]
    g = 0
    for c in deriv:
        g = gcd(g, c)
    deriv = [c // g for c in deriv]
    crit = _real_root_unit_intervals(_squarefree_int(deriv))

    breakpoints = {-bound, bound}
    for lo, hi in crit:
        breakpoints.add(max(-bound, min(bound, lo)))
        breakpoints.add(max(-bound, min(bound, hi)))
    marks = sorted(breakpoints)

    found: list[tuple[int, int]] = []
    for lo, hi in crit:
        found.append((lo, hi))
    for left, right in zip(marks, marks[1:]):
        flo, fhi = evaluate(left), evaluate(right)
        if flo == 0:
            found.append((left, left))
        if fhi == 0:
            found.append((right, right))
        if (flo < 0 < fhi) or (fhi < 0 < flo):
            lo, hi = left, right
            while hi - lo > 1:
                mid = (lo + hi) // 2
                fm = evaluate(mid)
                if fm == 0:
                    lo, hi = mid, mid
                    break
                if (fm < 0) == (flo < 0):
                    lo = mid
                else:
                    hi = mid
            found.append((lo, hi))
    return found


def _squarefree_int(coeffs: list[int]) -> list[int]:
    poly = QPoly(coeffs)
    if poly.degree <= 0:
        return coeffs
    reduced = poly.divmod(poly.gcd(poly.derivative()))[0].content_den_cleared()
    return [int(c) for c in reduced.coeffs]


# ---------------------------------------------------------------------------
# division polynomials on y^2 = x^3 + a x + b
# ---------------------------------------------------------------------------

def _division_poly_pairs(a: int, b: int, n_max: int) -> list[tuple[QPoly, QPoly]]:
    """Division polynomials psi_0..psi_n_max represented as u(x) + v(x) y in
    Q[x, y]/(y^2 - (x^3 + a x + b)): the pair (u, v)."""
    E = QPoly([b, a, 0, 1])
    half = Fraction(1, 2)

    def pair_mul(p, q):
        (u1, v1), (u2, v2) = p, q
        return (u1 * u2 + v1 * v2 * E, u1 * v2 + v1 * u2)

    def pair_div_2y(p):
        # (u + v y) / (2y) = v/2 + (u/E)/2 * y; u is divisible by E whenever
        # the recurrence is applied to a genuine division polynomial
        u, v = p
        if u.is_zero():
            u_quot = QPoly.zero()
        else:
            u_quot, rem = u.divmod(E)
            assert rem.is_zero(), "division polynomial parity broke"
        return (v * half, u_quot * half)

    zero = (QPoly.zero(), QPoly.zero())
    psi = [zero] * (n_max + 1)
    if n_max >= 1:
        psi[1] = (QPoly.one(), QPoly.zero())
    if n_max >= 2:
        psi[2] = (QPoly.zero(), QPoly.constant(2))
    if n_max >= 3:
        psi[3] = (QPoly([-a * a, 12 * b, 6 * a, 0, 3]), QPoly.zero())
    if n_max >= 4:
        psi[4] = (QPoly.zero(),
                  QPoly([-4 * (8 * b * b + a ** 3), -16 * a * b, -20 * a * a,
                         80 * b, 20 * a, 0, 4]))
    for n in range(5, n_max + 1):
        m = n // 2
        if n % 2 == 1:
            first = pair_mul(psi[m + 2], pair_mul(psi[m], pair_mul(psi[m], psi[m])))
            second = pair_mul(psi[m - 1],
                              pair_mul(psi[m + 1], pair_mul(psi[m + 1], psi[m + 1])))
            psi[n] = (first[0] - second[0], first[1] - second[1])
        else:
            lhs = pair_mul(psi[m + 2], pair_mul(psi[m - 1], psi[m - 1]))
            rhs = pair_mul(psi[m - 2], pair_mul(psi[m + 1], psi[m + 1]))
            inner = (lhs[0] - rhs[0], lhs[1] - rhs[1])
            psi[n] = pair_div_2y(pair_mul(psi[m], inner))
    return psi


def _division_solve(integral: "WeierstrassCurve", a: int, b: int, ell: int,
                    target: ECPoint, psi_cache: dict) -> list[ECPoint]:
    """All rational Q on the integral model with [ell]Q = target, found by
    solving x([ell]Q) = x(target) over the integers (torsion coordinates on
    an integral model are integers) and verifying each candidate exactly."""
    if ell == 2:
        if target.is_infinity:
            xs = integer_roots([b, a, 0, 1])
            out = []
            for x in xs:
                out.append(ECPoint.affine(x, 0))
            return out
        xp = target.x
        poly = QPoly([a * a - 4 * b * xp, -(8 * b + 4 * a * xp), -2 * a,
                      -4 * xp, 1])
        cleared = poly.content_den_cleared()
        xs = integer_roots([int(c) for c in cleared.coeffs])
    else:
        if ell not in psi_cache:
            psi_cache[ell] = _division_poly_pairs(a, b, ell + 1)
        psi = psi_cache[ell]
        E = QPoly([b, a, 0, 1])
        sq_u, sq_v = psi[ell]
        assert sq_v.is_zero()
        psi_sq = sq_u * sq_u
        lo_u, lo_v = psi[ell - 1]
        hi_u, hi_v = psi[ell + 1]
        # ell odd: neighbors are even-index, pure y-part
        prod = lo_v * hi_v * E
        if target.is_infinity:
            # [ell]Q = O exactly on roots of psi_ell
            xs_poly = sq_u
        else:
            xs_poly = (QPoly.x() - target.x) * psi_sq - prod
        cleared = xs_poly.content_den_cleared()
        if cleared.is_zero():
            return []
        xs = integer_roots([int(c) for c in cleared.coeffs])
    out = []
    for x in xs:
        yy = x ** 3 + a * x + b
        if yy < 0:
            continue
        r = int_sqrt(yy)
        if r is None:
            continue
        for y in ((0,) if r == 0 else (r, -r)):
            q = ECPoint.affine(x, y)
            if integral.mul(ell, q) == target:
                out.append(q)
    return out


def _count_points_mod_p(a: int, b: int, p: int) -> int:
    squares = [False] * p
    for i in range(p):
        squares[i * i % p] = True
    count = 1
    am, bm = a % p, b % p
    for x in range(p):
        v = (x * x * x + am * x + bm) % p
        if v == 0:
            count += 1
        elif squares[v]:
            count += 2
    return count


def _torsion_order_bound(a: int, b: int, disc: int) -> int:
    """gcd of #E(F_p) over several good primes: a multiple of the rational
    torsion order, since torsion injects under good reduction."""
    bound = 0
    used = 0
    for p in (5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43):
        if disc % p == 0:
            continue
        bound = gcd(bound, _count_points_mod_p(a, b, p))
        used += 1
        if used >= 6 or bound in (1, 2):
            break
    return bound if bound else 16


def _torsion_by_division(integral: "WeierstrassCurve", a: int, b: int,
                         disc: int) -> dict[tuple[int, int], int]:
    """Exact torsion points of an integral short model via ell-division
    closure: starting from the 2-torsion, repeatedly solve [ell]Q = P for
    every known P and ell in {2, 3, 5, 7}, until no growth.  Any missing
    torsion point would map into the current subgroup under some prime ell
    dividing the (Mazur-bounded) index, so the fixpoint is the full group.
    """
    bound = _torsion_order_bound(a, b, disc)
    points: dict[tuple[int, int], int] = {}
    psi_cache: dict = {}

    def register(q: ECPoint) -> bool:
        key = (int(q.x), int(q.y))
        if key in points:
            return False
        order = _order_on_integral_model(integral, q)
        if order is None:
            return False
        points[key] = order
        return True

    changed = True
    while changed:
        changed = False
        group_order = len(points) + 1
        for ell in (2, 3, 5, 7):
            if bound % ell != 0 and ell != 2:
                continue
            if group_order * ell > 16:
                continue
            targets = [INFINITY] + [ECPoint.affine(x, y) for x, y in points]
            for target in targets:
                for q in _division_solve(integral, a, b, ell, target, psi_cache):
                    if register(q):
                        changed = True
    return points


_SIEVE_MODULI = (64, 63, 25, 11, 17, 19, 23, 29, 31)


def _lutz_nagell_sweep(a: int, b: int, factors: dict[int, int],
                       candidate_cap: int, consider) -> None:
    """Run consider(y) for every y > 0 with y^2 dividing the factored
    discriminant and y*y a cubic value modulo each sieve modulus.

    The walk over prime-power choices carries only the candidate's residues
    modulo the sieve moduli (small-integer arithmetic); the big integer y is
    assembled for the rare survivors.  The candidate count honors the cap.
    """
    primes_halves = [(p, e // 2) for p, e in sorted(factors.items()) if e >= 2]

    active = []
    for m in _SIEVE_MODULI:
        values = frozenset((x * x * x + a * x + b) % m for x in range(m))
        if len(values) == m:
            continue                      # modulus filters nothing here
        ok = tuple(((r * r) % m) in values for r in range(m))
        active.append((m, ok))

    powers: list[list[int]] = []
    power_res: list[list[list[int]]] = []
    for p, half in primes_halves:
        row = [1]
        for _ in range(half):
            row.append(row[-1] * p)
        powers.append(row)
        power_res.append([[q % m for q in row] for m, _ in active])

    n_primes = len(primes_halves)
    n_mod = len(active)
    choice = [0] * n_primes
    count = 0

    def walk(idx: int, residues: tuple[int, ...]):
        nonlocal count
        if idx == n_primes:
            count += 1
            if count > candidate_cap:
                raise FactorBudgetExceeded(0, factors, count)
            for j in range(n_mod):
                if not active[j][1][residues[j]]:
                    return
            y = 1
            for i in range(n_primes):
                y *= powers[i][choice[i]]
            consider(y)
            return
        res_rows = power_res[idx]
        for k in range(len(powers[idx])):
            choice[idx] = k
            walk(idx + 1, tuple((residues[j] * res_rows[j][k]) % active[j][0]
                                for j in range(n_mod)))

    walk(0, tuple(1 % m for m, _ in active))


@dataclass(frozen=True)
class TorsionGroup:
    """Rational torsion subgroup: invariant factors (1, n) for cyclic Z/n or
    (2, n) for Z/2 x Z/n, with generators and the full point list on the
    original model."""

    invariants: tuple[int, int]
    generators: tuple[ECPoint, ...]
    points: tuple[ECPoint, ...]

    @property
    def order(self) -> int:
        return self.invariants[0] * self.invariants[1]

    def contains_structure(self, m: int, n: int) -> bool:
        """Whether Z/m x Z/n (m | n) embeds in this group."""
        sm, sn = self.invariants
        return (m == 1 or sm % m == 0) and sn % n == 0

    def __str__(self):
        m, n = self.invariants
        if n == 1:
            return "trivial"
        if m == 1:
            return "Z/%d" % n
        return "Z/%d x Z/%d" % (m, n)


def _order_on_integral_model(curve: WeierstrassCurve, p: ECPoint) -> Optional[int]:
    """point_order specialized to candidates on an integral model: every
    multiple of a true torsion point is again integral, so the first
    fractional coordinate proves infinite order without computing the rest
    of the (rapidly growing) multiples."""
    if p.is_infinity:
        return 1
    q = p
    for k in range(2, 13):
        q = curve._add_unchecked(q, p)
        if q.is_infinity:
            return k
        if q.x.denominator != 1 or q.y.denominator != 1:
            return None
    return None


def torsion_subgroup(curve: WeierstrassCurve,
                     trial_bound: int = DEFAULT_TRIAL_BOUND,
                     rho_steps: int = DEFAULT_RHO_STEPS,
                     candidate_cap: int = 500_000,
                     hints=(),
                     method: str = "auto") -> TorsionGroup:
    """Rational torsion subgroup on an integral short model.

    method="lutz-nagell" is the enumeration route: candidate torsion points
    have integer coordinates with Y = 0 or Y^2 | disc, are screened with
    quadratic-residue tables modulo small numbers, solved exactly for X, and
    confirmed against the Mazur order bound.  It needs the discriminant
    factored (budgeted; hint integers from a known coefficient structure
    help, see e24_torsion_hints) and its candidate count is the product of
    (v_p(disc)//2 + 1), which the cap bounds.

    method="division" closes the 2-torsion under exact ell-division
    (ell in {2, 3, 5, 7}) and needs no factoring at all.

    method="auto" runs the enumeration when the factorization succeeds and
    the candidate count fits the cap, and falls back to division closure
    otherwise; curves in the twelve-torsion family have enumeration counts
    beyond 10^8, so the fallback is what makes them tractable.  Every point
    returned by any route satisfies (and is checked against) the
    integral-coordinate and Y^2 | disc conditions.
    """
    if curve.is_singular():
        raise ValueError("torsion of a singular model")
    if method not in ("auto", "lutz-nagell", "division"):
        raise ValueError("unknown torsion method %r" % (method,))
    model = short_integral_model(curve, trial_bound, rho_steps)
    a, b = model.a, model.b
    disc = -16 * (4 * a ** 3 + 27 * b ** 2)

    factors = None
    if method != "division":
        try:
            factors = factorize(disc, trial_bound, rho_steps,
                                hints=tuple(hints) + (a, b))
        except FactorBudgetExceeded:
            if method == "lutz-nagell":
                raise
    if factors is not None:
        # with the discriminant factored, finish minimizing: strip every
        # (p^4 | a, p^6 | b) pair, which divides the discriminant by p^12
        shrink = 1
        for p in sorted(factors):
            while (factors[p] >= 12
                   and (a == 0 or a % p ** 4 == 0)
                   and (b == 0 or b % p ** 6 == 0)):
                a //= p ** 4
                b //= p ** 6
                factors[p] -= 12
                shrink *= p
        factors = {p: e for p, e in factors.items() if e > 0}
        model = ShortIntegralModel(a=a, b=b, scale=model.scale / shrink,
                                   source=curve)
        disc = -16 * (4 * a ** 3 + 27 * b ** 2)
    integral = model.curve

    use_sweep = False
    if factors is not None:
        count = 1
        for e in factors.values():
            count *= e // 2 + 1
        use_sweep = count <= candidate_cap or method == "lutz-nagell"

    torsion_raw: dict[tuple[int, int], int] = {}

    def consider(y: int):
        for x in _integer_roots_depressed_cubic(a, b - y * y):
            for yy in ((0,) if y == 0 else (y, -y)):
                key = (x, yy)
                if key in torsion_raw:
                    continue
                order = _order_on_integral_model(integral, ECPoint.affine(x, yy))
                if order is not None:
                    torsion_raw[key] = order

    if use_sweep:
        consider(0)
        _lutz_nagell_sweep(a, b, factors, candidate_cap, consider)
    else:
        torsion_raw = _torsion_by_division(integral, a, b, disc)

    # every torsion point, whichever route found it, obeys the
    # integral-coordinate and y = 0 or y^2 | disc conditions
    for (x, y) in torsion_raw:
        assert y == 0 or abs(disc) % (y * y) == 0, "torsion point escapes y^2 | disc"

    points_int = [INFINITY] + [ECPoint.affine(x, y) for x, y in torsion_raw]
    orders = {INFINITY: 1}
    orders.update({ECPoint.affine(x, y): o for (x, y), o in torsion_raw.items()})
    order_total = len(points_int)

    gen_max = max(points_int, key=lambda p: orders[p])
    max_order = orders[gen_max]
    if max_order == order_total:
        invariants = (1, order_total)
        generators = (model.pull(gen_max),) if order_total > 1 else ()
    else:
        # over Q the only alternative shape is Z/2 x Z/(order/2)
        assert max_order * 2 == order_total and max_order % 2 == 0
        cyclic = set()
        q = INFINITY
        for _ in range(max_order):
            q = integral._add_unchecked(q, gen_max)
            cyclic.add((q.x, q.y))
        two_tors = [p for p in points_int
                    if not p.is_infinity and orders[p] == 2
                    and (p.x, p.y) not in cyclic]
        invariants = (2, max_order)
        generators = (model.pull(two_tors[0]), model.pull(gen_max))
    points = tuple(model.pull(p) for p in points_int)
    for p in points:
        residue = curve.equation_residue(p)
        assert residue == 0, "torsion point failed to map back"
    return TorsionGroup(invariants=invariants, generators=generators,
                        points=points)


# ---------------------------------------------------------------------------
# the pre-image elliptic surfaces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class E24Fiber:
    """Specialization of the two-four arrangement surface at a rational a:
    y^2 = x^3 + (4a-1)x^2 + 16a x + (64a^2 - 16a) with the 4-torsion section
    (2, 8a+2).  Singular exactly at a = 0 and a = -1/4."""

    a: Fraction
    curve: WeierstrassCurve
    torsion_point: ECPoint
    j: Optional[Fraction]
    delta: Fraction
    singular: bool

    def as_json(self) -> dict:
        out = self.curve.as_json()
        out.update({
            "a": format_rat(self.a),
            "delta": format_rat(self.delta),
            "j": None if self.j is None else format_rat(self.j),
            "singular": self.singular,
            "section": self.torsion_point.as_json(),
        })
        return out


def specialize_e24(a: RatLike) -> E24Fiber:
    a = Fraction(a)
    curve = WeierstrassCurve.from_coeffs(0, 4 * a - 1, 0, 16 * a,
                                         64 * a * a - 16 * a)
    delta = a * (4 * a + 1) ** 4
    singular = delta == 0
    j = None
    if not singular:
        j = (16 * a * a - 56 * a + 1) ** 3 / delta
    return E24Fiber(a=a, curve=curve, torsion_point=ECPoint.affine(2, 8 * a + 2),
                    j=j, delta=delta, singular=singular)


def e24_torsion_hints(a: RatLike) -> tuple[int, ...]:
    """Factor hints for torsion_subgroup on a two-four fiber: its integral
    discriminant is built from a(4a+1)^4 and the integralizing scale, so the
    numerator and denominator of a and the numerator of 4a+1 split it."""
    a = Fraction(a)
    return (a.numerator, a.denominator, (4 * a + 1).numerator)


def torsion_family_hints(kind: TorsionKind, t: RatLike) -> tuple[int, ...]:
    """Factor hints for the fiber at torsion_family_a(kind, t), exploiting
    how a and 4a+1 factor as rational functions of the family parameter
    (e.g. 4a+1 = (t^2-1)^2 on the Z/8 family, and
    4(110408t-1)^3 (124968t-1)^3 (14009460544t^2-235376t+1) over the
    denominator on the Z/12 family)."""
    t = Fraction(t)
    a = torsion_family_a(kind, t)
    if a is None:
        return ()
    pieces = [t, 4 * t * t - 1, t * t - 1, t * t + 1, 4 * t * t + 1]
    if kind is TorsionKind.Z2xZ8:
        pieces += [4 * t * t - 4 * t - 1, 4 * t * t + 4 * t - 1]
    if kind is TorsionKind.Z12:
        pieces += [
            110408 * t - 1,
            124968 * t - 1,
            14009460544 * t * t - 235376 * t + 1,
            _Z12_Q1 * t * t - _Z12_LIN * t + 1,
            _Z12_Q2 * t * t - _Z12_LIN * t + 1,
            _Z12_POLE * t - 1,
        ]
    hints = set(e24_torsion_hints(a))
    for q in pieces:
        hints.add(q.numerator)
        hints.add(q.denominator)
    return tuple(sorted(h for h in hints if abs(h) > 1))


@dataclass(frozen=True)
class E222Fiber:
    """Specialization of the two-two-two arrangement surface, with the two
    independent sections of infinite order.  Singular exactly where
    (4a+1)^2 (256a^3 + 368a^2 + 104a + 23) vanishes (a = -1/4 and the three
    third-level critical values)."""

    a: Fraction
    curve: WeierstrassCurve
    p_point: ECPoint
    q_point: ECPoint
    j: Optional[Fraction]
    delta: Fraction
    singular: bool

    def as_json(self) -> dict:
        out = self.curve.as_json()
        out.update({
            "a": format_rat(self.a),
            "delta": format_rat(self.delta),
            "j": None if self.j is None else format_rat(self.j),
            "singular": self.singular,
            "sections": [self.p_point.as_json(), self.q_point.as_json()],
        })
        return out


def specialize_e222(a: RatLike) -> E222Fiber:
    a = Fraction(a)
    curve = WeierstrassCurve.from_coeffs(
        0,
        16 * a + Fraction(942, 13),
        0,
        Fraction(10048, 13) * a + Fraction(293084, 169),
        1024 * a * a + Fraction(1620800, 169) * a + Fraction(30250696, 2197),
    )
    delta = (4 * a + 1) ** 2 * (256 * a ** 3 + 368 * a * a + 104 * a + 23)
    singular = delta == 0
    j = None if singular else curve.j_invariant()
    p_point = ECPoint.affine(Fraction(-262, 13), 32 * a + 8)
    q_point = ECPoint.affine(Fraction(-366, 13), 32 * a + 8)
    return E222Fiber(a=a, curve=curve, p_point=p_point, q_point=q_point,
                     j=j, delta=delta, singular=singular)


class TorsionKind(enum.Enum):
    Z2xZ4 = "Z2xZ4"
    Z8 = "Z8"
    Z2xZ8 = "Z2xZ8"
    Z12 = "Z12"

    @property
    def structure(self) -> tuple[int, int]:
        return {"Z2xZ4": (2, 4), "Z8": (1, 8),
                "Z2xZ8": (2, 8), "Z12": (1, 12)}[self.value]


# The four twelve-digit-scale constants of the Z/12 family, kept in one place
# so a transcription slip cannot hide in two spots.
_Z12_Q1 = int("13691470144")
_Z12_Q2 = int("13903463744")
_Z12_LIN = int("235376")
_Z12_DEN = int("9527265101250297856000000")
_Z12_POLE = int("117688")


def torsion_family_a(kind: TorsionKind, t: RatLike) -> Optional[Fraction]:
    """The a value whose two-four fiber contains the named torsion subgroup,
    per the rational parametrization of each family; None when t lies in the
    family's excluded set (where the fiber degenerates)."""
    t = Fraction(t)
    if kind is TorsionKind.Z2xZ4:
        if t in (0, Fraction(1, 2), Fraction(-1, 2)):
            return None
        return -t * t
    if kind is TorsionKind.Z8:
        if t in (0, 1, -1):
            return None
        return t * t * (t * t - 2) / 4
    if kind is TorsionKind.Z2xZ8:
        if t in (0, Fraction(1, 2), Fraction(-1, 2)):
            return None
        num = (4 * t * t - 4 * t - 1) ** 2 * (4 * t * t + 4 * t - 1) ** 2
        return -num / (4 * (4 * t * t + 1) ** 4)
    if kind is TorsionKind.Z12:
        if t in (0, Fraction(1, _Z12_POLE)):
            return None
        num = ((_Z12_Q1 * t * t - _Z12_LIN * t + 1)
               * (_Z12_Q2 * t * t - _Z12_LIN * t + 1) ** 3)
        den = _Z12_DEN * t ** 6 * (_Z12_POLE * t - 1) ** 2
        return num / den
    raise ValueError("unknown torsion family %r" % (kind,))


def curve_244() -> tuple[WeierstrassCurve, ECPoint]:
    """The rank-one curve carrying the ten-pre-image arrangements of
    a = -1/4: v^2 = u^3 + u^2 - 9u + 7, with the infinite-order point (3, 4).
    """
    curve = WeierstrassCurve.from_coeffs(0, 1, 0, -9, 7)
    return curve, ECPoint.affine(3, 4)

"""Exact arithmetic foundation: integer and rational square roots, dense
univariate polynomials over Q, bivariate polynomials, resultants, and
quotient-ring (number field) arithmetic.

Everything here is immutable and pure; values can be shared freely between
threads.  Rationals are ``fractions.Fraction`` throughout (already stored in
lowest terms with a positive denominator), aliased as ``Rat``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Optional, Sequence, Union

Rat = Fraction

RatLike = Union[Fraction, int]


# ---------------------------------------------------------------------------
# square roots and heights
# ---------------------------------------------------------------------------

def int_sqrt(n: int) -> Optional[int]:
    """Exact integer square root: the r >= 0 with r*r == n, or None.

    Negative input is a contract violation and raises ValueError.
    """
    if n < 0:
        raise ValueError("int_sqrt: negative input %d" % n)
    r = isqrt(n)
    return r if r * r == n else None


def rat_sqrt(q: RatLike) -> Optional[Fraction]:
    """The nonnegative rational square root of q, or None.

    A rational in lowest terms is a square iff its numerator and denominator
    are both perfect squares.  Negative q yields None (not an error).
    """
    q = Fraction(q)
    if q < 0:
        return None
    rn = int_sqrt(q.numerator)
    if rn is None:
        return None
    rd = int_sqrt(q.denominator)
    if rd is None:
        return None
    return Fraction(rn, rd)


def height(q: RatLike) -> int:
    """Multiplicative height of a rational: max(|numerator|, denominator)."""
    q = Fraction(q)
    return max(abs(q.numerator), q.denominator)


# ---------------------------------------------------------------------------
# rational serialization ("p/q" strings)
# ---------------------------------------------------------------------------

class RatParseError(ValueError):
    """Malformed rational string; .position points at the offending char."""

    def __init__(self, text: str, position: int, message: str):
        self.text = text
        self.position = position
        super().__init__("invalid rational %r: %s at position %d"
                         % (text, message, position))


def format_rat(q: RatLike) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def parse_rat(text: str) -> Fraction:
    """Parse "p/q" (or "p").  Raises RatParseError with the bad position."""
    s = text.strip()
    if not s:
        raise RatParseError(text, 0, "empty string")
    offset = text.index(s[0])

    def parse_int(part: str, base: int) -> int:
        chunk = part
        pos = 0
        if chunk[:1] in ("+", "-"):
            pos = 1
        if pos >= len(chunk):
            raise RatParseError(text, base + pos, "expected digits")
        for i, ch in enumerate(chunk[pos:], start=pos):
            if not ch.isdigit():
                raise RatParseError(text, base + i, "expected digit, got %r" % ch)
        return int(chunk)

    if "/" in s:
        slash = s.index("/")
        num = parse_int(s[:slash], offset)
        den_part = s[slash + 1:]
        if not den_part:
            raise RatParseError(text, offset + slash + 1, "expected denominator")
        den = parse_int(den_part, offset + slash + 1)
        if den == 0:
            raise RatParseError(text, offset + slash + 1, "zero denominator")
        return Fraction(num, den)
    return Fraction(parse_int(s, offset))


# ---------------------------------------------------------------------------
# univariate polynomials over Q
# ---------------------------------------------------------------------------

class QPoly:
    """Dense univariate polynomial with Fraction coefficients, lowest degree
    first.  The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RatLike] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "QPoly":
        return cls(())

    @classmethod
    def one(cls) -> "QPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "QPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: RatLike) -> "QPoly":
        return cls((c,))

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == QPoly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(("QPoly", self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = _as_qpoly(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _as_qpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_qpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QPoly(c * other for c in self.coeffs)
        if not isinstance(other, QPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return QPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return QPoly(c / scalar for c in self.coeffs)
        return NotImplemented

    def __pow__(self, n: int) -> "QPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = QPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        """Euclidean division over Q: self = q*other + r, deg r < deg other."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lead = other.lc()
        if self.degree < d:
            return QPoly.zero(), self
        quot = [Fraction(0)] * (self.degree - d + 1)
        for k in range(self.degree - d, -1, -1):
            coeff = rem[k + d] / lead
            quot[k] = coeff
            if coeff:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= coeff * b
        return QPoly(quot), QPoly(rem[:d])

    def __mod__(self, other: "QPoly") -> "QPoly":
        return self.divmod(other)[1]

    def monic(self) -> "QPoly":
        if self.is_zero():
            return self
        return self / self.lc()

    def gcd(self, other: "QPoly") -> "QPoly":
        """Monic gcd over Q."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> "QPoly":
        return QPoly(i * c for i, c in enumerate(self.coeffs) if i >= 1)

    def eval(self, x):
        """Horner evaluation.  Works for Fraction arguments and, by duck
        typing, for any ring element supporting + and * with Fractions
        (NFElem, QPoly itself for composition, BiPoly, ...).
        """
        result = 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def compose(self, other: "QPoly") -> "QPoly":
        out = self.eval(other)
        return out if isinstance(out, QPoly) else QPoly.constant(out)

    # -- normalization -----------------------------------------------------

    def content_den_cleared(self) -> "QPoly":
        """Integer-primitive normalization: clear denominators, divide by the
        integer content, force a positive leading coefficient.  Fixes the
        representative of a polynomial known only up to a nonzero scalar.
        """
        if self.is_zero():
            return self
        den_lcm = 1
        for c in self.coeffs:
            den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
        ints = [int(c * den_lcm) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        ints = [v // g for v in ints]
        if ints[-1] < 0:
            ints = [-v for v in ints]
        return QPoly(ints)

    # -- display -----------------------------------------------------------

    def format(self, var: str = "x", descending: bool = True) -> str:
        if self.is_zero():
            return "0"
        terms = []
        indices = range(len(self.coeffs))
        if descending:
            indices = reversed(indices)
        for i in indices:
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                body = format_rat(abs(c))
            else:
                mag = abs(c)
                head = "" if mag == 1 else format_rat(mag) + "*"
                body = head + (var if i == 1 else "%s^%d" % (var, i))
            terms.append(("-" if c < 0 else "+", body))
        sign0, body0 = terms[0]
        out = ("-" if sign0 == "-" else "") + body0
        for sign, body in terms[1:]:
            out += " %s %s" % (sign, body)
        return out

    def __repr__(self):
        return "QPoly(%s)" % (self.format(),)


def _as_qpoly(value) -> "QPoly":
    if isinstance(value, QPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return QPoly.constant(value)
    return NotImplemented


# ---------------------------------------------------------------------------
# resultants
# ---------------------------------------------------------------------------

def resultant(f: QPoly, g: QPoly) -> Fraction:
    """Resultant of two univariate polynomials over Q.

    Computed with the subresultant polynomial remainder sequence (Cohen,
    Algorithm 3.3.7) rather than a Sylvester determinant, which keeps
    intermediate coefficients under control for the degree-7/8 eliminations
    this package performs.  Zero iff f and g share a root over the closure.
    """
    if f.is_zero() and g.is_zero():
        raise ValueError("resultant of two zero polynomials is undefined")
    if f.is_zero() or g.is_zero():
        return Fraction(0)
    if f.degree == 0:
        return f.coeffs[0] ** g.degree
    if g.degree == 0:
        return g.coeffs[0] ** f.degree

    sign = 1
    a, b = f, g
    if a.degree < b.degree:
        if (a.degree & 1) and (b.degree & 1):
            sign = -sign
        a, b = b, a

    g_coef = Fraction(1)
    h_coef = Fraction(1)
    while True:
        delta = a.degree - b.degree
        if (a.degree & 1) and (b.degree & 1):
            sign = -sign
        # pseudo-remainder: lc(b)^(delta+1) * a  mod  b
        rem = (b.lc() ** (delta + 1) * a) % b
        a, b = b, rem / (g_coef * h_coef ** delta)
        if b.is_zero():
            return Fraction(0)
        g_coef = a.lc()
        if delta > 0:
            h_coef = g_coef ** delta / h_coef ** (delta - 1)
        if b.degree == 0:
            break
    res = b.coeffs[0] ** a.degree / h_coef ** (a.degree - 1)
    return sign * res


def sylvester_resultant(f: QPoly, g: QPoly) -> Fraction:
    """Resultant as the determinant of the Sylvester matrix, by fraction-free
    Bareiss elimination.  Independent of the PRS route; kept as the oracle
    side of the dual-route check.
    """
    if f.is_zero() and g.is_zero():
        raise ValueError("resultant of two zero polynomials is undefined")
    if f.is_zero() or g.is_zero():
        return Fraction(0)
    m, n = f.degree, g.degree
    if m == 0:
        return f.coeffs[0] ** n
    if n == 0:
        return g.coeffs[0] ** m
    size = m + n
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([Fraction(0)] * i + fc + [Fraction(0)] * (size - i - len(fc)))
    for i in range(m):
        rows.append([Fraction(0)] * i + gc + [Fraction(0)] * (size - i - len(gc)))
    return _det_fraction(rows)


def _det_fraction(rows: list) -> Fraction:
    """Determinant over Q by Gaussian elimination with partial pivoting by
    nonzero entry (exact arithmetic, so any nonzero pivot works)."""
    n = len(rows)
    rows = [list(r) for r in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if rows[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        pv = rows[col][col]
        det *= pv
        for r in range(col + 1, n):
            factor = rows[r][col] / pv
            if factor:
                rowr = rows[r]
                rowc = rows[col]
                for k in range(col, n):
                    rowr[k] -= factor * rowc[k]
    return det


# ---------------------------------------------------------------------------
# bivariate polynomials in (c, a)
# ---------------------------------------------------------------------------

class BiPoly:
    """Sparse bivariate polynomial in (c, a): mapping (deg_c, deg_a) -> Rat.

    Used for the elimination of c from the critical-parameter system and, in
    the nearly-degenerate "a only" form, as the coefficient ring of the
    projective quadric models.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        data = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for (i, j), v in items:
            v = Fraction(v)
            if v:
                key = (int(i), int(j))
                data[key] = data.get(key, Fraction(0)) + v
        object.__setattr__(self, "terms",
                           {k: v for k, v in data.items() if v != 0})

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def constant(cls, v: RatLike) -> "BiPoly":
        return cls({(0, 0): Fraction(v)})

    @classmethod
    def c_var(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def a_var(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    @classmethod
    def from_qpoly_c(cls, p: QPoly) -> "BiPoly":
        return cls({(i, 0): v for i, v in enumerate(p.coeffs)})

    @classmethod
    def from_qpoly_a(cls, p: QPoly) -> "BiPoly":
        return cls({(0, j): v for j, v in enumerate(p.coeffs)})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def deg_c(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    @property
    def deg_a(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == BiPoly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(("BiPoly", tuple(sorted(self.terms.items()))))

    def __add__(self, other):
        other = _as_bipoly(other)
        if other is NotImplemented:
            return NotImplemented
        merged = dict(self.terms)
        for k, v in other.terms.items():
            merged[k] = merged.get(k, Fraction(0)) + v
        return BiPoly(merged)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = _as_bipoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_bipoly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BiPoly({k: v * other for k, v in self.terms.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = {}
        for (i1, j1), v1 in self.terms.items():
            for (i2, j2), v2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, Fraction(0)) + v1 * v2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        result = BiPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def subs_a(self, a_value: RatLike) -> QPoly:
        """Substitute a rational for a; result is a QPoly in c."""
        a_value = Fraction(a_value)
        out = {}
        for (i, j), v in self.terms.items():
            out[i] = out.get(i, Fraction(0)) + v * a_value ** j
        if not out:
            return QPoly.zero()
        coeffs = [Fraction(0)] * (max(out) + 1)
        for i, v in out.items():
            coeffs[i] = v
        return QPoly(coeffs)

    def eval_a(self, a_value):
        """Evaluate a polynomial that involves only a (deg_c == 0) at a_value,
        which may be any ring element (Fraction, NFElem, QPoly, ...)."""
        if self.deg_c > 0:
            raise ValueError("eval_a on a polynomial involving c")
        result = 0
        for (_, j), v in sorted(self.terms.items(), reverse=True):
            result = result + (v if j == 0 else v * a_value ** j)
        return result

    def eval(self, c_value: RatLike, a_value: RatLike) -> Fraction:
        c_value = Fraction(c_value)
        a_value = Fraction(a_value)
        total = Fraction(0)
        for (i, j), v in self.terms.items():
            total += v * c_value ** i * a_value ** j
        return total

    def as_poly_in_c(self) -> list[QPoly]:
        """Coefficients of powers of c, each a QPoly in a."""
        if self.is_zero():
            return []
        rows: list[dict] = [dict() for _ in range(self.deg_c + 1)]
        for (i, j), v in self.terms.items():
            rows[i][j] = v
        out = []
        for row in rows:
            if row:
                coeffs = [Fraction(0)] * (max(row) + 1)
                for j, v in row.items():
                    coeffs[j] = v
                out.append(QPoly(coeffs))
            else:
                out.append(QPoly.zero())
        return out

    def format(self, c_name: str = "c", a_name: str = "a") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for (i, j), v in sorted(self.terms.items(), reverse=True):
            mono = []
            if i:
                mono.append(c_name if i == 1 else "%s^%d" % (c_name, i))
            if j:
                mono.append(a_name if j == 1 else "%s^%d" % (a_name, j))
            mag = abs(v)
            if not mono:
                body = format_rat(mag)
            else:
                head = "" if mag == 1 else format_rat(mag) + "*"
                body = head + "*".join(mono)
            parts.append(("-" if v < 0 else "+", body))
        sign0, body0 = parts[0]
        out = ("-" if sign0 == "-" else "") + body0
        for sign, body in parts[1:]:
            out += " %s %s" % (sign, body)
        return out

    def __repr__(self):
        return "BiPoly(%s)" % (self.format(),)


def _as_bipoly(value):
    if isinstance(value, BiPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return BiPoly.constant(value)
    return NotImplemented


def eliminate_c(f: BiPoly, g: BiPoly) -> QPoly:
    """Resultant of f and g with respect to c, as a polynomial in a,
    normalized to integer coefficients with content 1 and a positive leading
    coefficient.

    Strategy: the resultant in c is a polynomial in a of degree at most
    degc(f)*dega(g) + degc(g)*dega(f); we compute univariate resultants at
    sampled rational a values and Lagrange-interpolate.  Samples where either
    leading c-coefficient vanishes are skipped, since specialization only
    commutes with the resultant when the leading coefficients survive.
    """
    if f.deg_c < 1 or g.deg_c < 1:
        raise ValueError("eliminate_c requires positive degree in c for both inputs")
    lcf = f.as_poly_in_c()[-1]
    lcg = g.as_poly_in_c()[-1]
    bound = f.deg_c * g.deg_a + g.deg_c * f.deg_a
    samples: list[tuple[Fraction, Fraction]] = []
    k = 0
    while len(samples) < bound + 1:
        a0 = Fraction((k + 1) // 2 if k % 2 else -(k // 2))
        k += 1
        if lcf.eval(a0) == 0 or lcg.eval(a0) == 0:
            continue
        fa = f.subs_a(a0)
        ga = g.subs_a(a0)
        samples.append((a0, resultant(fa, ga)))
    poly = _lagrange(samples)
    return poly.content_den_cleared()


def _lagrange(samples: Sequence[tuple[Fraction, Fraction]]) -> QPoly:
    total = QPoly.zero()
    for i, (xi, yi) in enumerate(samples):
        if yi == 0:
            continue
        basis = QPoly.one()
        denom = Fraction(1)
        for j, (xj, _) in enumerate(samples):
            if j == i:
                continue
            basis = basis * QPoly((-xj, 1))
            denom *= xi - xj
        total = total + basis * (yi / denom)
    return total


# ---------------------------------------------------------------------------
# quotient-ring (number field) arithmetic
# ---------------------------------------------------------------------------

class ReducibleModulusError(ArithmeticError):
    """Inversion failed because the modulus is reducible; carries the factor
    discovered by the extended Euclidean algorithm."""

    def __init__(self, factor: QPoly):
        self.factor = factor
        super().__init__("modulus is reducible; discovered factor %r" % (factor,))


class NFElem:
    """Element of Q[x]/(modulus): a representative of degree < deg(modulus).

    Towers like Q(alpha, beta) are flattened to a single quotient by the
    minimal polynomial of a primitive element before use.
    """

    __slots__ = ("modulus", "rep")

    def __init__(self, modulus: QPoly, rep: QPoly):
        if modulus.degree < 1:
            raise ValueError("modulus must be nonconstant")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "rep", rep % modulus)

    def __setattr__(self, name, value):
        raise AttributeError("NFElem is immutable")

    def _coerce(self, other) -> "NFElem":
        if isinstance(other, NFElem):
            if other.modulus != self.modulus:
                raise ValueError("NFElem modulus mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return NFElem(self.modulus, QPoly.constant(other))
        if isinstance(other, QPoly):
            return NFElem(self.modulus, other)
        return NotImplemented

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def __eq__(self, other) -> bool:
        coerced = self._coerce(other)
        if coerced is NotImplemented:
            return NotImplemented
        return self.rep == coerced.rep

    def __hash__(self):
        return hash(("NFElem", self.modulus, self.rep))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return NFElem(self.modulus, self.rep + other.rep)

    __radd__ = __add__

    def __neg__(self):
        return NFElem(self.modulus, -self.rep)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return NFElem(self.modulus, self.rep - other.rep)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return NFElem(self.modulus, self.rep * other.rep)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "NFElem":
        if n < 0:
            return self.inverse() ** (-n)
        result = NFElem(self.modulus, QPoly.one())
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "NFElem":
        """Inverse by the extended Euclidean algorithm.  If gcd(rep, modulus)
        is nontrivial the modulus is reducible and the gcd is surfaced as the
        discovered factor."""
        if self.rep.is_zero():
            raise ZeroDivisionError("inverse of zero in quotient ring")
        r0, r1 = self.modulus, self.rep
        s0, s1 = QPoly.zero(), QPoly.one()
        while not r1.is_zero():
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        if r0.degree > 0:
            raise ReducibleModulusError(r0.monic())
        return NFElem(self.modulus, s0 / r0.coeffs[0])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __repr__(self):
        return "NFElem(%s mod %s)" % (self.rep.format(), self.modulus.format())


def nf_make(modulus: QPoly, rep: QPoly) -> NFElem:
    return NFElem(modulus, rep)


def nf_add(x: NFElem, y: NFElem) -> NFElem:
    return x + y


def nf_mul(x: NFElem, y: NFElem) -> NFElem:
    return x * y


def nf_inv(x: NFElem) -> NFElem:
    return x.inverse()

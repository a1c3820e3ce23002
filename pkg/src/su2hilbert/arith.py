"""Exact polynomial and rational-function arithmetic over the rationals.

Everything here is exact: coefficients are Python ``int`` or
``fractions.Fraction`` and floats are rejected on construction.  Integral
coefficients are stored as ``int`` for speed; the two types interoperate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence

Coeff = "int | Fraction"


def _q(x) -> int | Fraction:
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return _q(Fraction(x.numerator, x.denominator))
    raise TypeError(f"exact rational coefficient expected, got {type(x).__name__}")


def _strip(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


class Poly:
    """Dense univariate polynomial; ``coeffs[i]`` is the coefficient of t**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs: tuple = tuple(_strip([_q(c) for c in coeffs]))

    @classmethod
    def _raw(cls, coeffs: list) -> Poly:
        # caller guarantees normalized entries
        p = object.__new__(cls)
        p.coeffs = tuple(_strip(coeffs))
        return p

    @classmethod
    def constant(cls, c) -> Poly:
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=1) -> Poly:
        return cls([0] * k + [c])

    @classmethod
    def binomial(cls, k: int) -> Poly:
        """``1 - t**k``."""
        return cls._raw([1] + [0] * (k - 1) + [-1]) if k else cls()

    # -- basic protocol -------------------------------------------------
    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def valuation(self) -> int:
        """Index of the lowest nonzero coefficient (``-1`` for zero)."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return -1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- ring operations ------------------------------------------------
    def __neg__(self) -> Poly:
        return Poly._raw([-c for c in self.coeffs])

    def __add__(self, other) -> Poly:
        if not isinstance(other, Poly):
            other = Poly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = _q(out[i] + c)
        return Poly._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> Poly:
        if not isinstance(other, Poly):
            other = Poly([other])
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            k = _q(other)
            if k == 0:
                return Poly()
            return Poly._raw([_q(c * k) for c in self.coeffs])
        return Poly._raw([_q(c) for c in _mul_lists(self.coeffs, other.coeffs)])

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly([1]), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other: Poly):
        return poly_divmod(self, other)

    def __floordiv__(self, other: Poly) -> Poly:
        return poly_divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return poly_divmod(self, other)[1]

    def shift(self, k: int) -> Poly:
        """Multiply by ``t**k`` (``k`` may be negative if low terms vanish)."""
        if not self.coeffs:
            return self
        if k >= 0:
            return Poly._raw([0] * k + list(self.coeffs))
        if any(self.coeffs[:-k]):
            raise ValueError("negative shift would drop nonzero terms")
        return Poly._raw(list(self.coeffs[-k:]))

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        return Poly._raw([_q(Fraction(c) / lc) for c in self.coeffs])

    def reverse(self, n: int | None = None) -> Poly:
        """``t**n * p(1/t)`` with ``n`` defaulting to the degree."""
        if n is None:
            n = self.degree
        if n < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        return Poly._raw(([0] * (n - self.degree)) + list(reversed(self.coeffs)))

    def derivative(self) -> Poly:
        return Poly._raw([_q(i * c) for i, c in enumerate(self.coeffs)][1:])

    def content_integer(self) -> tuple[Poly, Fraction]:
        """Return ``(P, c)`` with ``self == c * P`` and ``P`` primitive in Z[t]."""
        if not self.coeffs:
            return self, Fraction(1)
        den = 1
        for c in self.coeffs:
            if isinstance(c, Fraction):
                den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for c in ints:
            g = math.gcd(g, c)
        return Poly._raw([c // g for c in ints]), Fraction(g, den)

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]


def _mul_lists(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if bj == 0:
            continue
        for i, ai in enumerate(a):
            if ai:
                out[i + j] += ai * bj
    return out


T = Poly([0, 1])
ONE = Poly([1])


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder over Q; raises ``ZeroDivisionError`` for ``b == 0``."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.degree < b.degree:
        return Poly(), a
    rem = list(a.coeffs)
    db, lb = b.degree, b.lc
    bc = b.coeffs
    quo = [0] * (a.degree - db + 1)
    unit = lb == 1 or lb == -1
    for k in range(len(quo) - 1, -1, -1):
        c = rem[k + db]
        if c == 0:
            continue
        q = c * lb if unit else _q(Fraction(c) / lb)
        quo[k] = q
        for i in range(db + 1):
            if bc[i]:
                rem[k + i] -= q * bc[i]
    return Poly(quo), Poly(rem[:db])


def poly_exact_div(a: Poly, b: Poly) -> Poly:
    q, r = poly_divmod(a, b)
    if not r.is_zero():
        raise ArithmeticError("polynomial division is not exact")
    return q


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
        if not b.is_zero():
            b = b.content_integer()[0]
    return a.monic()


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(g, u, v)`` with ``u*a + v*b == g`` and ``g`` monic."""
    r0, r1 = a, b
    s0, s1 = ONE, Poly()
    t0, t1 = Poly(), ONE
    while not r1.is_zero():
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lc = r0.lc
    inv = Fraction(1) / lc
    return r0 * inv, s0 * inv, t0 * inv


def taylor_at_one(p: Poly) -> list:
    """Coefficients of ``p(1 - u)`` in powers of ``u``."""
    c = list(p.coeffs)
    n = len(c)
    # repeated synthetic division gives p(1 + v); then v = -u
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            c[j] += c[j + 1]
    return [x if k % 2 == 0 else -x for k, x in enumerate(c)]


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> Poly:
    """The d-th cyclotomic polynomial."""
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    p = Poly.monomial(d) - 1
    for e in range(1, d):
        if d % e == 0:
            p = poly_exact_div(p, cyclotomic(e))
    return p


# ---------------------------------------------------------------------------
# rational functions


class RationalFunction:
    """Reduced quotient ``num/den`` in canonical form.

    Canonical form: ``gcd(num, den) == 1``; both have integer coefficients
    with no common integer factor; the lowest-degree nonzero coefficient of
    ``den`` is positive.  Structural equality is value equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, Poly) else Poly([num])
        den = ONE if den is None else (den if isinstance(den, Poly) else Poly([den]))
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = poly_exact_div(num, g), poly_exact_div(den, g)
        self.num, self.den = _canonical_pair(num, den)

    @classmethod
    def _coprime(cls, num: Poly, den: Poly) -> RationalFunction:
        """Build from a pair already known to be coprime."""
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        f = object.__new__(cls)
        f.num, f.den = _canonical_pair(num, den)
        return f

    def __repr__(self) -> str:
        return f"RationalFunction({list(self.num.coeffs)!r}, {list(self.den.coeffs)!r})"

    def __str__(self) -> str:
        return format_rf(self)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Poly)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError("pole at evaluation point")
        return _q(Fraction(self.num(x)) / d)

    def __neg__(self) -> RationalFunction:
        return RationalFunction._coprime(-self.num, self.den)

    def __add__(self, other) -> RationalFunction:
        other = _as_rf(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> RationalFunction:
        return self + (-_as_rf(other))

    def __rsub__(self, other) -> RationalFunction:
        return _as_rf(other) - self

    def __mul__(self, other) -> RationalFunction:
        other = _as_rf(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RationalFunction:
        other = _as_rf(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def series(self, n: int) -> list:
        return rf_series(self, n)


def _as_rf(x) -> RationalFunction:
    return x if isinstance(x, RationalFunction) else RationalFunction(x)


def _canonical_pair(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if num.is_zero():
        return Poly(), ONE
    pn, cn = num.content_integer()
    pd, cd = den.content_integer()
    c = cn / cd
    # c = p/q in lowest terms; num/den = (p*pn)/(q*pd), both primitive
    num, den = pn * c.numerator, pd * c.denominator
    v = den.valuation()
    if den.coeffs[v] < 0:
        num, den = -num, -den
    return num, den


def rf_normalize(num: Poly, den: Poly) -> RationalFunction:
    """Canonical reduced form of ``num/den``."""
    return RationalFunction(num, den)


def rf_series(f: RationalFunction, n: int) -> list:
    """Maclaurin coefficients ``c_0..c_n`` of ``f``."""
    if n < 0:
        raise ValueError("series length must be nonnegative")
    d0 = f.den[0]
    if d0 == 0:
        raise ValueError("not a power series at 0")
    return _series_div(list(f.num.coeffs), list(f.den.coeffs), n + 1)


def _series_div(num: Sequence, den: Sequence, count: int) -> list:
    d0 = den[0]
    unit = d0 == 1 or d0 == -1
    out = []
    for k in range(count):
        acc = num[k] if k < len(num) else 0
        for j in range(1, min(k, len(den) - 1) + 1):
            if den[j]:
                acc -= den[j] * out[k - j]
        out.append(acc * d0 if unit else _q(Fraction(acc) / d0))
    return out


@dataclass(frozen=True)
class LaurentExpansion:
    """Expansion ``sum_m coefficients[m] * (1-t)**(m - pole_order)``."""

    pole_order: int
    coefficients: tuple

    def coefficient(self, power: int):
        """Coefficient of ``(1-t)**power``; zero below the leading term."""
        idx = power + self.pole_order
        if idx < 0:
            return 0
        if idx >= len(self.coefficients):
            raise IndexError(f"expansion computed only up to (1-t)^{len(self.coefficients) - 1 - self.pole_order}")
        return self.coefficients[idx]

    @property
    def leading(self):
        return self.coefficients[0]


def laurent_at_one(f: RationalFunction, order: int) -> LaurentExpansion:
    """Laurent expansion of ``f`` in powers of ``(1 - t)``.

    Returns ``order + 1`` coefficients starting at ``(1-t)**(-pole_order)``.
    """
    if f.is_zero():
        raise ValueError("Laurent expansion of the zero function")
    if order < 0:
        raise ValueError("order must be nonnegative")
    nu = taylor_at_one(f.num)
    du = taylor_at_one(f.den)
    vn = next(i for i, c in enumerate(nu) if c != 0)
    vd = next(i for i, c in enumerate(du) if c != 0)
    nu, du = nu[vn:], du[vd:]
    pole = vd - vn
    if pole >= 0:
        coeffs = _series_div(nu, du, order + 1)
    else:
        # zero at t=1: report pole order 0 with leading zeros
        coeffs = ([0] * -pole + _series_div(nu, du, order + 1 + pole))[: order + 1]
        pole = 0
    return LaurentExpansion(pole, tuple(coeffs))


def functional_eq_check(f: RationalFunction, d: int) -> bool:
    """True iff ``f(1/t) == (-t)**d * f(t)`` identically."""
    if f.is_zero():
        raise ValueError("functional equation of the zero function")
    n, m = f.num.degree, f.den.degree
    # f(1/t) = t^(m-n) rev(num)/rev(den); cross-multiply with t^k exponents
    lhs_shift = m - n
    rhs_shift = d
    lhs = f.num.reverse() * f.den
    rhs = f.num * f.den.reverse()
    if d % 2:
        rhs = -rhs
    lo = min(lhs_shift, rhs_shift)
    return lhs.shift(lhs_shift - lo) == rhs.shift(rhs_shift - lo)


def _norm_in_extension(p: Poly, a: int) -> Poly:
    """``prod_{zeta^a=1} p(zeta x)`` as a polynomial in ``t = x**a``.

    Computed as the determinant of multiplication by ``p`` on
    ``Q[t][x]/(x**a - t)``, i.e. the resultant ``Res_x(x**a - t, p)``.
    """
    if a == 1:
        return p
    # column j: coordinates of x^j * p(x) reduced with x^a = t
    mat = [[Poly() for _ in range(a)] for _ in range(a)]
    for j in range(a):
        for k, c in enumerate(p.coeffs):
            e = k + j
            mat[e % a][j] = mat[e % a][j] + Poly.monomial(e // a, c)
    return _bareiss_det(mat)


def _bareiss_det(mat: list[list[Poly]]) -> Poly:
    n = len(mat)
    m = [row[:] for row in mat]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if swap is None:
                return Poly()
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = poly_exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def u_a(f: RationalFunction, a: int) -> RationalFunction:
    """Multisection: the rational function whose n-th coefficient is ``f``'s (n*a)-th."""
    if a < 1:
        raise ValueError("multisection step must be positive")
    if f.den[0] == 0:
        raise ValueError("not a power series at 0")
    if a == 1 or f.is_zero():
        return f
    norm = _norm_in_extension(f.den, a)
    # numerator of f in the form P(x)/norm(x^a) has degree below this bound
    bound = f.num.degree + a * norm.degree - f.den.degree
    nterms = bound // a + 1
    guard = 4
    coeffs = rf_series(f, a * (nterms + guard + norm.degree))
    section = coeffs[::a]
    num = _mul_lists(section, list(norm.coeffs))
    tail = num[nterms : nterms + guard]
    if any(tail):
        raise ArithmeticError("multisection reconstruction failed")
    return RationalFunction(Poly(num[:nterms]), norm)


# ---------------------------------------------------------------------------
# bivariate polynomials


class BiPoly:
    """Polynomial in ``z`` whose coefficients are ``Poly`` in a second variable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Poly] = ()):
        c = [p if isinstance(p, Poly) else Poly([p]) for p in coeffs]
        while c and c[-1].is_zero():
            c.pop()
        self.coeffs = tuple(c)

    def __repr__(self) -> str:
        return f"BiPoly({[list(p.coeffs) for p in self.coeffs]!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: BiPoly) -> BiPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        get = lambda c, i: c[i] if i < len(c) else Poly()  # noqa: E731
        return BiPoly([get(self.coeffs, i) + get(other.coeffs, i) for i in range(n)])

    def __mul__(self, other) -> BiPoly:
        if not isinstance(other, BiPoly):
            return BiPoly([p * other for p in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return BiPoly()
        out = [Poly() for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, p in enumerate(self.coeffs):
            for j, q in enumerate(other.coeffs):
                out[i + j] = out[i + j] + p * q
        return BiPoly(out)

    def __pow__(self, n: int) -> BiPoly:
        out = BiPoly([ONE])
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, z, s):
        acc = 0
        for p in reversed(self.coeffs):
            acc = acc * z + p(s)
        return acc


# ---------------------------------------------------------------------------
# formatting


def _fmt_coeff(c) -> str:
    return str(c)


def format_poly(p: Poly, var: str = "t") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if i == 0:
            body = _fmt_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_fmt_coeff(mag)}*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def format_rf(f: RationalFunction, var: str = "t") -> str:
    num = format_poly(f.num, var)
    if f.den == ONE:
        return num
    return f"({num})/({format_poly(f.den, var)})"

r"""Exact Hilbert series of SL2 covariants and of SU2 symplectic quotients.

The Molien-Weyl contour integral

    Upsilon_{W,l}(t) = (1/2 pi i) \oint_{|z|=1} z^(l-1) dz
                       / ((1-t)^e prod_{a in Lambda} (1 - t z^-a)(1 - t z^a))

is evaluated by residues.  After clearing negative powers the integrand is
``numerator(z) / (inside(z) * outside(z))`` where ``inside`` collects
``z**k`` and the factors ``z**a - t`` (roots inside the unit disk for small
``t``) and ``outside`` the factors ``1 - t z**a`` and ``(1-t)**e``.

For each distinct positive weight ``a`` occurring ``m`` times, the residue at
one root ``z = s`` of ``z**a = t`` is a Laurent coefficient in ``u`` after
``z = s (1 + u)``; its conjugates ``z = zeta s`` contribute the field trace
from ``Q(s)`` down to ``Q(t)``, which keeps exactly the exponents of ``s``
divisible by ``a`` (the multisection operator).  Every denominator that
occurs is a product of binomials ``1 - s**k``, so the trace is taken after
multiplying through by ``(1 - s**lcm(k,a)) / (1 - s**k)``.  Repeated weights
are simply higher-order poles; no perturbation or limit is involved.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Mapping

from .arith import (
    ONE,
    BiPoly,
    Poly,
    RationalFunction,
    _mul_lists,
    _q,
    cyclotomic,
    poly_divmod,
)
from .reps import (
    NOT_ONE_LARGE,
    ReprSpec,
    WeightData,
    as_spec,
    cotangent_lift,
    decompose,
)

log = logging.getLogger(__name__)


class InvarianceError(ArithmeticError):
    """An internal consistency check failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class IntegrandFactorization:
    """``numerator(z) / (inside(z) * outside(z))`` with coefficients in ``Q[t]``.

    ``weights`` maps each distinct positive weight to its multiplicity;
    ``numerator`` maps z-exponents to rational coefficients.  ``M`` is the
    lcm of the positive weights (the degree of the splitting extension),
    kept for reference: the residue computation works over ``Q(t)``
    directly.
    """

    M: int
    weights: tuple[tuple[int, int], ...]
    e: int
    z_power: int
    numerator: tuple[tuple[int, Fraction | int], ...]
    weight_sum: int = field(default=0)

    def inside(self) -> BiPoly:
        out = BiPoly([Poly()] * self.z_power + [ONE])
        for a, m in self.weights:
            # z^a - t
            out = out * BiPoly([Poly([0, -1])] + [Poly()] * (a - 1) + [ONE]) ** m
        return out

    def outside(self) -> BiPoly:
        out = BiPoly([Poly.binomial(1) ** self.e])
        for a, m in self.weights:
            # 1 - t z^a
            out = out * BiPoly([ONE] + [Poly()] * (a - 1) + [Poly([0, -1])]) ** m
        return out

    def numerator_bipoly(self) -> BiPoly:
        top = max(k for k, _ in self.numerator)
        coeffs = [Poly()] * (top + 1)
        for k, c in self.numerator:
            coeffs[k] = coeffs[k] + Poly([c])
        return BiPoly(coeffs)

    def density(self, z, t):
        """Evaluate the integrand ``numerator / (inside * outside)`` at a point."""
        return Fraction(self.numerator_bipoly()(z, t)) / (self.inside()(z, t) * self.outside()(z, t))


def build_integrand(w: WeightData, ell) -> IntegrandFactorization:
    """Integrand of ``Upsilon_{W,ell}``; ``ell`` may be a mapping ``{ell: coeff}``."""
    terms = {ell: 1} if isinstance(ell, int) else dict(ell)
    mult = {}
    for a in w.positive_weights:
        mult[a] = mult.get(a, 0) + 1
    total = sum(w.positive_weights)
    exps = {l - 1 + total: c for l, c in terms.items() if c != 0}
    zp = max(0, -min(exps)) if exps else 0
    return IntegrandFactorization(
        M=reduce(math.lcm, mult, 1),
        weights=tuple(sorted(mult.items())),
        e=w.e,
        z_power=zp,
        numerator=tuple(sorted((k + zp, _q(c)) for k, c in exps.items())),
        weight_sum=total,
    )


# ---------------------------------------------------------------------------
# fractions with cyclotomic denominators


class _CycloFrac:
    """``t**tpow * num / prod_d Phi_d(t)**den[d]``."""

    __slots__ = ("num", "tpow", "den")

    def __init__(self, num: Poly, tpow: int = 0, den: Mapping[int, int] | None = None):
        self.num = num
        self.tpow = tpow
        self.den = {d: k for d, k in (den or {}).items() if k}

    @classmethod
    def from_binomials(cls, num: Poly, tpow: int, binomials: Mapping[int, int]) -> _CycloFrac:
        """``t**tpow * num / prod_c (1 - t**c)**q``."""
        den: dict[int, int] = {}
        sign = 1
        for c, q in binomials.items():
            if q % 2:
                sign = -sign  # 1 - t^c = -prod_{d | c} Phi_d
            for d in range(1, c + 1):
                if c % d == 0:
                    den[d] = den.get(d, 0) + q
        return cls(num * sign, tpow, den)

    def __add__(self, other: _CycloFrac) -> _CycloFrac:
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        den = dict(self.den)
        for d, k in other.den.items():
            den[d] = max(den.get(d, 0), k)
        lo = min(self.tpow, other.tpow)
        total = Poly()
        for f in (self, other):
            p = f.num
            for d, k in den.items():
                extra = k - f.den.get(d, 0)
                for _ in range(extra):
                    p = p * cyclotomic(d)
            total = total + p.shift(f.tpow - lo)
        return _CycloFrac(total, lo, den)

    def mul_poly(self, p: Poly) -> _CycloFrac:
        return _CycloFrac(self.num * p, self.tpow, self.den)

    def reduced(self) -> _CycloFrac:
        num, den = self.num, dict(self.den)
        if num.is_zero():
            return _CycloFrac(Poly(), 0, {})
        for d in sorted(den):
            phi = cyclotomic(d)
            while den[d]:
                q, r = poly_divmod(num, phi)
                if not r.is_zero():
                    break
                num, den[d] = q, den[d] - 1
        v = num.valuation()
        num = num.shift(-v)
        return _CycloFrac(num, self.tpow + v, den)

    def to_rf(self) -> RationalFunction:
        f = self.reduced()
        if f.num.is_zero():
            return RationalFunction(0)
        den = ONE
        for d in sorted(f.den):
            den = den * _phi_power(d, f.den[d])
        if f.tpow >= 0:
            return RationalFunction._coprime(f.num.shift(f.tpow), den)
        return RationalFunction._coprime(f.num, den.shift(-f.tpow))


@lru_cache(maxsize=None)
def _phi_power(d: int, k: int) -> Poly:
    return cyclotomic(d) ** k


# ---------------------------------------------------------------------------
# truncated power series in u with polynomial-in-s coefficients


def _ser_mul(x: list, y: list, m: int) -> list:
    out = [Poly() for _ in range(m)]
    for i in range(min(m, len(x))):
        if x[i].is_zero():
            continue
        for j in range(min(m - i, len(y))):
            if not y[j].is_zero():
                out[i + j] = out[i + j] + x[i] * y[j]
    return out


def _gen_binom(e: int, k: int) -> int:
    """``binomial(e, k)`` for any integer ``e``."""
    num = 1
    for i in range(k):
        num *= e - i
    return num // math.factorial(k)


def _scaled_inverse_power(c0: Poly, Y: list, p: int, m: int) -> list:
    """``c0**(p + m - 1) * (c0 + Y(u))**(-p)`` modulo ``u**m``; ``Y(0) == 0``."""
    out = [Poly() for _ in range(m)]
    ypow = [ONE] + [Poly()] * (m - 1)
    c0_pows = [ONE]
    for _ in range(m):
        c0_pows.append(c0_pows[-1] * c0)
    for j in range(m):
        coef = _gen_binom(-p, j)
        scale = c0_pows[m - 1 - j] * coef
        for i in range(m):
            if not ypow[i].is_zero():
                out[i] = out[i] + ypow[i] * scale
        ypow = _ser_mul(ypow, Y, m)
    return out


def _rational_series_inverse_power(q: list, p: int, m: int) -> list:
    """``q(u)**(-p)`` modulo ``u**m`` for rational ``q`` with ``q[0] != 0``."""
    inv = [Fraction(0)] * m
    inv[0] = Fraction(1) / q[0]
    for k in range(1, m):
        acc = Fraction(0)
        for j in range(1, min(k, len(q) - 1) + 1):
            acc += q[j] * inv[k - j]
        inv[k] = -acc * inv[0]
    out = [Fraction(0)] * m
    out[0] = Fraction(1)
    for _ in range(p):
        nxt = [Fraction(0)] * m
        for i, x in enumerate(out):
            if x:
                for j in range(m - i):
                    nxt[i + j] += x * inv[j]
        out = nxt
    return out


# ---------------------------------------------------------------------------
# residues


def _trace_at_weight(f: IntegrandFactorization, a: int) -> _CycloFrac:
    """Sum of residues at the ``a`` roots of ``z**a = t``."""
    mult = dict(f.weights)
    m = mult[a]
    factors: list[tuple[Poly, list, int]] = []
    s_power = 0
    binoms: dict[int, int] = {}
    sign = 1

    def binom_row(b: int, scale_exp: int, scale_sign: int) -> list:
        # scale_sign * s^scale_exp * ((1+u)^b - 1), truncated
        row = [Poly()]
        for j in range(1, m):
            c = math.comb(b, j) if b >= j else 0
            row.append(Poly.monomial(scale_exp, scale_sign * c) if c else Poly())
        return row

    for b, mb in f.weights:
        q = mb + m - 1
        if b != a:
            # s^b (1+u)^b - s^a
            factors.append((Poly.monomial(b) - Poly.monomial(a), binom_row(b, b, 1), mb))
            if b < a:
                s_power += b * q
                binoms[a - b] = binoms.get(a - b, 0) + q
            else:
                s_power += a * q
                binoms[b - a] = binoms.get(b - a, 0) + q
                if q % 2:
                    sign = -sign
        # 1 - s^(a+b) (1+u)^b
        factors.append((Poly.binomial(a + b), binom_row(b, a + b, -1), mb))
        binoms[a + b] = binoms.get(a + b, 0) + q
    if f.e:
        binoms[a] = binoms.get(a, 0) + f.e

    # (z^a - t) = s^a u Q_a(u)
    qa = [Fraction(math.comb(a, j + 1)) for j in range(a)]
    series = [Poly([c]) for c in _rational_series_inverse_power(qa, m, m)]
    for c0, Y, p in factors:
        series = _ser_mul(series, _scaled_inverse_power(c0, Y, p, m), m)

    # numerator terms z^E (1+u)^E with z = s(1+u); E excludes the z_power
    nu_terms: dict[int, Poly] = {}
    for k, c in f.numerator:
        E = k - f.z_power
        acc = Poly()
        for i in range(m):
            g = _gen_binom(E, i)
            if g and not series[m - 1 - i].is_zero():
                acc = acc + series[m - 1 - i] * g
        if not acc.is_zero():
            nu_terms[E] = nu_terms.get(E, Poly()) + acc * c
    if not nu_terms:
        return _CycloFrac(Poly())
    lo = min(nu_terms)
    nu = Poly()
    for E, p in nu_terms.items():
        nu = nu + p.shift(E - lo)
    # residue = sign * s^shift * nu(s) / prod (1 - s^k)^q
    shift = lo + 1 - a * m - s_power
    c = -(shift // a) if shift < 0 else 0
    shift += a * c
    prim, scalar = nu.content_integer()
    coeffs = [0] * shift + list(prim.coeffs)
    t_binoms: dict[int, int] = {}
    for k, q in sorted(binoms.items()):
        big = math.lcm(k, a)
        for _ in range(q):
            coeffs = _times_geometric(coeffs, k, big)
        t_binoms[big // a] = t_binoms.get(big // a, 0) + q
    traced = Poly(coeffs[::a]) * (scalar * a * sign)
    return _CycloFrac.from_binomials(traced, -c, t_binoms)


def _times_geometric(p: list, k: int, big: int) -> list:
    """Multiply by ``(1 - s**big) / (1 - s**k)`` where ``k`` divides ``big``."""
    if big == k:
        return p
    out = list(p) + [0] * big
    for i in range(len(p)):
        out[i + big] -= p[i]
    # exact division by 1 - s^k: running sums with stride k
    for i in range(k, len(out)):
        out[i] += out[i - k]
    while out and out[-1] == 0:
        out.pop()
    return out


def _residue_at_zero(f: IntegrandFactorization) -> _CycloFrac:
    """Residue at ``z = 0`` (present only when ``z_power > 0``)."""
    K = f.z_power - 1
    if K < 0:
        return _CycloFrac(Poly())
    # 1/rest(z) as series in z with Laurent-polynomial coefficients {exp: c}
    ser: list[dict[int, int]] = [{0: 1}] + [{} for _ in range(K)]
    C = 0
    for b, mb in f.weights:
        C += mb
        for direction in (-1, 1):
            # (1 - t^direction z^b)^(-mb) = sum_i binom(mb+i-1, i) t^(direction*i) z^(b i)
            factor = {}
            i = 0
            while b * i <= K:
                factor[b * i] = (direction * i, math.comb(mb + i - 1, i))
                i += 1
            new: list[dict[int, int]] = [{} for _ in range(K + 1)]
            for zi, row in enumerate(ser):
                for zj, (texp, coef) in factor.items():
                    if zi + zj > K:
                        continue
                    tgt = new[zi + zj]
                    for ex, v in row.items():
                        tgt[ex + texp] = tgt.get(ex + texp, 0) + v * coef
            ser = new
    total: dict[int, Fraction | int] = {}
    for k, c in f.numerator:
        idx = f.z_power - 1 - k
        if 0 <= idx <= K:
            for ex, v in ser[idx].items():
                total[ex] = total.get(ex, 0) + c * v
    total = {ex: v for ex, v in total.items() if v}
    if not total:
        return _CycloFrac(Poly())
    lo = min(total)
    num = Poly([total.get(lo + i, 0) for i in range(max(total) - lo + 1)])
    # prefactor prod (-t)^(-mb) = (-1)^C t^(-C), and 1/(1-t)^e
    if C % 2:
        num = -num
    return _CycloFrac.from_binomials(num, lo - C, {1: f.e} if f.e else {})


def _residue_sum(f: IntegrandFactorization) -> _CycloFrac:
    total = _residue_at_zero(f)
    for a, _ in f.weights:
        total = total + _trace_at_weight(f, a)
    return total


def residue_sum_inside(f: IntegrandFactorization) -> RationalFunction:
    """Total residue of the integrand at the poles inside the unit circle."""
    return _residue_sum(f).to_rf()


# ---------------------------------------------------------------------------
# public series


def upsilon(spec, ell: int) -> RationalFunction:
    return residue_sum_inside(build_integrand(decompose(spec), ell))


@lru_cache(maxsize=512)
def _covariant_cached(degrees: tuple[int, ...], L: int) -> _CycloFrac:
    w = decompose(ReprSpec(degrees))
    return _residue_sum(build_integrand(w, {-L: 1, L + 2: -1})).reduced()


def covariant_hilbert(spec, L: int, cache=None) -> RationalFunction:
    """Hilbert series of ``(C[W] (x) V_L)^SL2``: ``Upsilon_{W,-L} - Upsilon_{W,L+2}``."""
    if L < 0:
        raise ValueError("L must be nonnegative")
    spec = as_spec(spec)
    kind = "invariant" if L == 0 else "covariant"
    if cache is not None:
        hit = cache.get(kind, spec, L)
        if hit is not None:
            return hit
    rf = _covariant_cached(spec.degrees, L).to_rf()
    if cache is not None:
        cache.put(kind, spec, L, rf)
    return rf


def invariant_hilbert(spec, cache=None) -> RationalFunction:
    return covariant_hilbert(spec, 0, cache=cache)


Z2_MOLIEN = RationalFunction(Poly([1, 0, 1]), Poly([1, 0, -1]) ** 2)


def koszul_onshell(spec) -> RationalFunction:
    """``(1 - t^6) inv + (t^4 - t^2) cov_2`` on ``V + V*``, without special cases."""
    w = cotangent_lift(spec).degrees
    inv = _covariant_cached(w, 0).mul_poly(Poly([1, 0, 0, 0, 0, 0, -1]))
    cov = _covariant_cached(w, 2).mul_poly(Poly([0, 0, -1, 0, 1]))
    return (inv + cov).to_rf()


def onshell_hilbert(spec, cache=None) -> RationalFunction:
    """Hilbert series of the regular functions on the symplectic quotient of ``V``."""
    spec = as_spec(spec)
    if cache is not None:
        hit = cache.get("onshell", spec, 0)
        if hit is not None:
            return hit
    key = spec.degrees
    if key == (1,):
        rf = RationalFunction(1)
    elif key in NOT_ONE_LARGE:
        # 2V1 and V2 both reduce to C/{+-1}
        rf = Z2_MOLIEN
    else:
        if key == (1, 2):
            log.info("using the Koszul formula for 1+2, which is 1-large")
        rf = koszul_onshell(spec)
    if cache is not None:
        cache.put("onshell", spec, 0, rf)
    return rf


def multigraded_table(spec, L: int, N: int) -> dict[tuple[int, ...], int]:
    """Dimensions per multidegree of total degree at most ``N``."""
    from . import oracle

    return oracle.multigraded_dims(spec, L, N)

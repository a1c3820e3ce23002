"""Brute-force covariant dimensions from torus weight multiplicities.

A degree-n monomial on ``W`` has torus weight equal to the sum of the weights
of its variables.  The multiplicity table of ``Sym^n W`` then gives
``dim (Sym^n W (x) V_L)^SL2 = mult(L) - mult(L + 2)``.  Nothing here touches
rational functions; this is the independent reference for the series engine.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .reps import ONSHELL_SPECIAL, as_spec, cotangent_lift

WeightMultTable = list  # list over degree n of {weight: multiplicity}


@lru_cache(maxsize=None)
def _block_table(d: int, N: int) -> tuple[dict[int, int], ...]:
    """Weight multiplicities of ``Sym^n V_d`` for ``n <= N``."""
    # rows[n][w]: monomials of degree n in the variables processed so far
    rows: list[dict[int, int]] = [{0: 1}] + [{} for _ in range(N)]
    for i in range(d + 1):
        a = 2 * i - d
        for n in range(1, N + 1):
            prev, cur = rows[n - 1], rows[n]
            for w, m in prev.items():
                cur[w + a] = cur.get(w + a, 0) + m
    return tuple(rows)


def _convolve(x: dict[int, int], y: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for w1, m1 in x.items():
        for w2, m2 in y.items():
            out[w1 + w2] = out.get(w1 + w2, 0) + m1 * m2
    return out


def sym_weight_mult(spec, N: int) -> WeightMultTable:
    """Weight multiplicities of ``Sym^n W`` for ``0 <= n <= N``."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    return [dict(sorted(row.items())) for row in _univariate_rows(as_spec(spec).degrees, N)]


@lru_cache(maxsize=None)
def _univariate_rows(degrees: tuple[int, ...], N: int) -> tuple[dict[int, int], ...]:
    rows: list[dict[int, int]] = [{0: 1}] + [{} for _ in range(N)]
    for d in degrees:
        block = _block_table(d, N)
        new: list[dict[int, int]] = [{} for _ in range(N + 1)]
        for n in range(N + 1):
            for j in range(n + 1):
                if rows[n - j] and block[j]:
                    for w, m in _convolve(rows[n - j], block[j]).items():
                        new[n][w] = new[n].get(w, 0) + m
        rows = new
    return tuple(rows)


def covariant_dim(spec, L: int, n: int) -> int:
    if L < 0 or n < 0:
        raise ValueError("L and n must be nonnegative")
    row = _univariate_rows(as_spec(spec).degrees, n)[n]
    dim = row.get(L, 0) - row.get(L + 2, 0)
    if dim < 0:
        raise AssertionError(f"negative covariant dimension for {spec}, L={L}, n={n}")
    return dim


def covariant_dims(spec, L: int, N: int) -> list[int]:
    """``covariant_dim(spec, L, n)`` for ``n = 0..N``."""
    rows = _univariate_rows(as_spec(spec).degrees, N)
    return [row.get(L, 0) - row.get(L + 2, 0) for row in rows]


def multigraded_covariant_dim(spec, L: int, multidegree) -> int:
    spec = as_spec(spec)
    multidegree = tuple(multidegree)
    if len(multidegree) != spec.r:
        raise ValueError("multidegree must have one entry per irreducible summand")
    if any(n < 0 for n in multidegree):
        raise ValueError("multidegree entries must be nonnegative")
    acc: dict[int, int] = {0: 1}
    for d, n in zip(spec.degrees, multidegree):
        acc = _convolve(acc, _block_table(d, n)[n])
    return acc.get(L, 0) - acc.get(L + 2, 0)


def multigraded_dims(spec, L: int, N: int) -> dict[tuple[int, ...], int]:
    """All multidegrees of total degree at most ``N``."""
    spec = as_spec(spec)
    out = {}
    for md in product(range(N + 1), repeat=spec.r):
        if sum(md) <= N:
            out[md] = multigraded_covariant_dim(spec, L, md)
    return out


def onshell_dim_series(spec, N: int) -> list[int]:
    """Truncated ``(1 - t^6) inv + (t^4 - t^2) cov_2`` on ``V + V*``."""
    spec = as_spec(spec)
    # the combination needs the moment map to be a regular sequence, which
    # holds for every representation except V_1, 2V_1 and V_2
    if spec.degrees in ONSHELL_SPECIAL:
        raise ValueError(f"Koszul combination not asserted for {spec}")
    w = cotangent_lift(spec)
    inv = covariant_dims(w, 0, N)
    cov = covariant_dims(w, 2, N)
    out = []
    for n in range(N + 1):
        v = inv[n] - (inv[n - 6] if n >= 6 else 0)
        v += (cov[n - 4] if n >= 4 else 0) - (cov[n - 2] if n >= 2 else 0)
        out.append(v)
    return out

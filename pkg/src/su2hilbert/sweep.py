"""Tabulate on-shell series and their leading Laurent data over many representations."""

from __future__ import annotations

import csv
import io
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .arith import Poly, RationalFunction, cyclotomic, laurent_at_one, poly_divmod
from .cache import SeriesCache
from .engine import onshell_hilbert
from .reps import ReprSpec, as_spec
from .schur import gamma0_onshell

log = logging.getLogger(__name__)

CSV_COLUMNS = (
    "spec",
    "D",
    "dim_M0",
    "gamma0_on",
    "gamma2_on",
    "pole_order",
    "series_num",
    "series_den",
    "palindromic_abbrev",
    "formula_used",
)


def enumerate_specs(max_dim: int, include_negative: bool = False) -> list[ReprSpec]:
    """Every ``V`` with ``dim M_0 = 2D - 6 <= max_dim``, sorted by degree sequence.

    ``V_1`` (where ``2D - 6 < 0``) is left out unless ``include_negative``.
    """
    max_D = (max_dim + 6) // 2
    out: list[tuple[int, ...]] = []

    def extend(prefix: list[int], start: int, D: int) -> None:
        if prefix and (include_negative or 2 * D - 6 >= 0):
            out.append(tuple(prefix))
        d = start
        while D + d + 1 <= max_D:
            prefix.append(d)
            extend(prefix, d, D + d + 1)
            prefix.pop()
            d += 1

    extend([], 1, 0)
    return [ReprSpec(t) for t in sorted(out)]


def fmt_fraction(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def render_palindromic(p: Poly) -> str:
    """Abbreviate a palindromic polynomial as ``{a_0, ..., a_k; n}`` with ``k = n // 2``."""
    if p.is_zero():
        raise ValueError("zero polynomial has no palindromic form")
    if not p.is_palindromic():
        raise ValueError("polynomial is not palindromic")
    n = p.degree
    head = ", ".join(str(c) for c in p.coeffs[: n // 2 + 1])
    return f"{{{head}; {n}}}"


def binomial_denominator(den: Poly) -> list[int]:
    """Exponents ``k_i`` with ``prod (1 - t**k_i)`` a multiple of ``den``.

    ``den`` must factor into cyclotomic polynomials.  Each binomial carries
    one factor ``1 - t``, so we aim for exactly as many binomials as the
    pole order at ``t = 1``; for a Gorenstein series this is what makes the
    numerator palindromic.  Cyclotomic factors are packed into binomials
    largest order first, each going where it raises ``k`` the least.
    """
    need: dict[int, int] = {}
    rest = den
    d = 1
    while rest.degree > 0:
        phi = cyclotomic(d)
        while True:
            q, r = poly_divmod(rest, phi)
            if not r.is_zero():
                break
            rest = q
            need[d] = need.get(d, 0) + 1
        d += 1
        if d > 2 * den.degree**2 + 2:  # phi(d) >= sqrt(d/2)
            raise ValueError("denominator is not a product of cyclotomic polynomials")
    slots = [1] * need.pop(1, 0)
    used: list[set[int]] = [set() for _ in slots]
    for d in sorted(need, reverse=True):
        for _ in range(need[d]):
            free = [i for i in range(len(slots)) if d not in used[i]]
            if not free:
                slots.append(1)
                used.append(set())
                free = [len(slots) - 1]
            i = min(free, key=lambda j: (math.lcm(slots[j], d) - slots[j], j))
            used[i].add(d)
            slots[i] = math.lcm(slots[i], d)
    return sorted(slots)


def factored_display(f: RationalFunction) -> tuple[Poly, list[int]]:
    """``(N, ks)`` with ``f == N / prod (1 - t**k)``."""
    ks = binomial_denominator(f.den)
    full = Poly([1])
    for k in ks:
        full = full * Poly.binomial(k)
    q, r = poly_divmod(full, f.den)
    if not r.is_zero():
        raise ArithmeticError("binomial product is not a multiple of the denominator")
    return f.num * q, ks


def _format_binomials(ks: list[int]) -> str:
    counts: dict[int, int] = {}
    for k in ks:
        counts[k] = counts.get(k, 0) + 1
    parts = []
    for k in sorted(counts):
        base = "(1-t)" if k == 1 else f"(1-t^{k})"
        parts.append(base if counts[k] == 1 else f"{base}^{counts[k]}")
    return "".join(parts) or "1"


@dataclass(frozen=True)
class SweepRow:
    spec: str
    D: int
    dim_M0: int
    gamma0_on: Fraction
    gamma2_on: Fraction
    pole_order: int
    series: RationalFunction
    palindromic_abbrev: str
    formula_used: bool

    def as_csv(self) -> list[str]:
        return [
            self.spec,
            str(self.D),
            str(self.dim_M0),
            fmt_fraction(self.gamma0_on),
            fmt_fraction(self.gamma2_on),
            str(self.pole_order),
            " ".join(str(c) for c in self.series.num.coeffs),
            " ".join(str(c) for c in self.series.den.coeffs),
            self.palindromic_abbrev,
            "true" if self.formula_used else "false",
        ]


def sweep_row(spec, cache: SeriesCache | None = None) -> SweepRow:
    spec = as_spec(spec)
    f = onshell_hilbert(spec, cache=cache)
    exp = laurent_at_one(f, 2)
    report = gamma0_onshell(spec)
    g0 = Fraction(exp.coefficients[0])
    if report.applicable and report.value != g0:
        log.warning("closed form for %s gives %s, series gives %s", spec, report.value, g0)
    num, ks = factored_display(f)
    try:
        abbrev = f"{render_palindromic(num)}/{_format_binomials(ks)}"
    except ValueError:
        abbrev = ""
    return SweepRow(
        spec=str(spec),
        D=spec.dim,
        dim_M0=2 * spec.dim - 6,
        gamma0_on=g0,
        gamma2_on=Fraction(exp.coefficients[2]),
        pole_order=exp.pole_order,
        series=f,
        palindromic_abbrev=abbrev,
        formula_used=report.applicable and report.value == g0,
    )


def _row_job(args: tuple[tuple[int, ...], str | None]) -> SweepRow:
    degrees, root = args
    cache = SeriesCache(root) if root is not None else None
    return sweep_row(ReprSpec(degrees), cache=cache)


def run_sweep(max_dim: int, jobs: int = 1, cache: SeriesCache | None = None) -> list[SweepRow]:
    """Rows for every spec up to ``max_dim``, in enumeration order."""
    specs = enumerate_specs(max_dim)
    root = str(cache.root) if cache is not None else None
    work = [(s.degrees, root) for s in specs]
    log.info("sweeping %d representations with %d worker(s)", len(work), jobs)
    if jobs <= 1:
        return [_row_job(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map preserves input order regardless of completion order
        return list(pool.map(_row_job, work, chunksize=1))


def rows_to_csv(rows: list[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(row.as_csv())
    return buf.getvalue()

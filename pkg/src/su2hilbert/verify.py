"""Run the structural checks on every representation up to a dimension bound."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from . import oracle
from .arith import functional_eq_check, laurent_at_one
from .cache import SeriesCache
from .engine import covariant_hilbert, onshell_hilbert
from .reps import (
    GAMMA0_ON_EXCLUDED,
    NOT_ONE_LARGE,
    ReprSpec,
    cotangent_lift,
)
from .schur import extracted_gamma, gamma0_onshell, gamma32_relation_check
from .sweep import enumerate_specs

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    check: str
    spec: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f": {self.detail}" if self.detail else ""
        return f"{status} {self.check} [{self.spec}]{tail}"


def _series_vs_oracle(spec: ReprSpec, L: int, depth: int, cache) -> CheckResult:
    got = covariant_hilbert(spec, L, cache=cache).series(depth)
    want = oracle.covariant_dims(spec, L, depth)
    name = f"oracle L={L}"
    if got != want:
        n = next(i for i, (x, y) in enumerate(zip(got, want)) if x != y)
        return CheckResult(name, str(spec), False, f"degree {n}: series {got[n]}, oracle {want[n]}")
    return CheckResult(name, str(spec), True)


def checks_for(spec: ReprSpec, depth: int, cache: SeriesCache | None = None) -> Iterator[CheckResult]:
    key, s = spec.degrees, str(spec)
    lift = cotangent_lift(spec)
    for L in (0, 2):
        yield _series_vs_oracle(spec, L, depth, cache)
        yield _series_vs_oracle(lift, L, depth, cache)

    f = onshell_hilbert(spec, cache=cache)
    if key not in NOT_ONE_LARGE:
        got = f.series(depth)
        want = oracle.onshell_dim_series(spec, depth)
        yield CheckResult("onshell oracle", s, got == want)
    if any(c < 0 for c in f.series(depth)):
        yield CheckResult("nonnegative coefficients", s, False)

    if key in NOT_ONE_LARGE:
        return
    D = spec.dim
    yield CheckResult("functional equation", s, functional_eq_check(f, 2 * D - 6))
    exp = laurent_at_one(f, 1)
    yield CheckResult("onshell pole order", s, exp.pole_order == 2 * D - 6, f"got {exp.pole_order}")
    yield CheckResult("gamma1_on vanishes", s, exp.coefficients[1] == 0, f"got {exp.coefficients[1]}")
    inv_pole = laurent_at_one(covariant_hilbert(spec, 0, cache=cache), 0).pole_order
    yield CheckResult("invariant pole order", s, inv_pole == D - 3, f"got {inv_pole}")

    g = {(m, L): extracted_gamma(lift, m, L) for m in (0, 1) for L in (0, 2)}
    first = 6 * g[0, 0] - 2 * g[0, 2]
    second = -15 * g[0, 0] + 5 * g[0, 2] + 6 * g[1, 0] - 2 * g[1, 2]
    yield CheckResult("leading cancellation", s, first == 0 and second == 0, f"{first}, {second}")

    if key not in GAMMA0_ON_EXCLUDED:
        report = gamma0_onshell(spec)
        lead = Fraction(exp.coefficients[0])
        yield CheckResult("gamma0_on closed form", s, report.value == lead, f"{report.value} vs {lead}")
        yield CheckResult("gamma32 relation", s, gamma32_relation_check(spec))


def run_verify(max_dim: int, depth: int = 24, cache: SeriesCache | None = None) -> Iterator[CheckResult]:
    for spec in enumerate_specs(max_dim, include_negative=True):
        log.info("verifying %s", spec)
        yield from checks_for(spec, depth, cache)

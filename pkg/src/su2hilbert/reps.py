"""SL2 representations as multisets of binary-form degrees, and their weights."""

from __future__ import annotations

import re
from dataclasses import dataclass

_SPEC_RE = re.compile(r"^\s*\d+(\s*\+\s*\d+)*\s*$")


class ReprError(ValueError):
    """Malformed or disallowed representation."""


@dataclass(frozen=True, order=True)
class ReprSpec:
    """``V = V_{d_1} + ... + V_{d_r}`` with every ``d_k >= 1``, kept sorted."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        degs = tuple(sorted(int(d) for d in self.degrees))
        if not degs:
            raise ReprError("empty representation")
        if any(d <= 0 for d in degs):
            raise ReprError("trivial summand not allowed")
        object.__setattr__(self, "degrees", degs)

    @classmethod
    def of(cls, *degrees: int) -> ReprSpec:
        return cls(tuple(degrees))

    @classmethod
    def parse(cls, text: str) -> ReprSpec:
        """Parse ``"d1+d2+..."``; summands may be given in any order."""
        if not _SPEC_RE.match(text or ""):
            raise ReprError(f"cannot parse representation {text!r}; expected e.g. '1+1+2'")
        return cls(tuple(int(x) for x in text.split("+")))

    def __str__(self) -> str:
        return "+".join(str(d) for d in self.degrees)

    @property
    def dim(self) -> int:
        return sum(d + 1 for d in self.degrees)

    @property
    def r(self) -> int:
        return len(self.degrees)


def as_spec(x) -> ReprSpec:
    if isinstance(x, ReprSpec):
        return x
    if isinstance(x, str):
        return ReprSpec.parse(x)
    return ReprSpec(tuple(x))


@dataclass(frozen=True)
class WeightData:
    """Weight bookkeeping: ``theta`` lists all ``(k, i, a)``, ``lam`` the positive ones."""

    theta: tuple[tuple[int, int, int], ...]
    lam: tuple[tuple[int, int, int], ...]
    D: int
    C: int
    e: int
    r: int
    sigma: int

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(a for _, _, a in self.theta)

    @property
    def positive_weights(self) -> tuple[int, ...]:
        return tuple(a for _, _, a in self.lam)

    def multiplicities(self) -> dict[int, int]:
        """Distinct positive weight -> number of occurrences."""
        out: dict[int, int] = {}
        for a in self.positive_weights:
            out[a] = out.get(a, 0) + 1
        return dict(sorted(out.items()))


def decompose(spec) -> WeightData:
    spec = as_spec(spec)
    theta, lam = [], []
    for k, d in enumerate(spec.degrees, start=1):
        for i in range(d + 1):
            a = 2 * i - d
            theta.append((k, i, a))
            if i >= d // 2 + 1:
                lam.append((k, i, a))
    degs = spec.degrees
    return WeightData(
        theta=tuple(theta),
        lam=tuple(lam),
        D=spec.dim,
        C=len(lam),
        e=sum(1 for d in degs if d % 2 == 0),
        r=len(degs),
        sigma=2 if all(d % 2 == 0 for d in degs) else 1,
    )


def cotangent_lift(spec) -> ReprSpec:
    """``V + V*``; every ``V_d`` is self-dual so each summand is doubled."""
    spec = as_spec(spec)
    return ReprSpec(spec.degrees * 2)


def nu(w: WeightData, L: int) -> int:
    if L < 0:
        raise ValueError("L must be nonnegative")
    return L + 1 - sum(w.positive_weights)


def _specs(*items: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    return frozenset(tuple(sorted(t)) for t in items)


NOT_ONE_LARGE = _specs((1,), (1, 1), (2,))
ONSHELL_FORMULA_EXCLUDED = _specs((1,), (1, 1), (1, 2))
GAMMA0_EXCEPTIONS = _specs((1,), (2,), (3,), (4,), (1, 1))
GAMMA1_EXCEPTIONS = GAMMA0_EXCEPTIONS | _specs((1, 2), (2, 2))
GAMMA2_EXCEPTIONS = _specs(
    (1,), (2,), (3,), (4,), (5,), (6,), (8,),
    (1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (2, 4), (3, 3), (4, 4),
)
# 2V1 is added to the literal list: the closed form needs 1-largeness
GAMMA0_ON_EXCLUDED = _specs((1,), (2,), (3,), (4,), (1, 2), (1, 1))
# representations whose on-shell series is not taken from the Koszul formula
ONSHELL_SPECIAL = NOT_ONE_LARGE


@dataclass(frozen=True)
class Classification:
    one_large: bool
    onshell_formula_ok: bool
    gamma_exception_m0: bool
    gamma_exception_m1: bool
    gamma_exception_m2: bool
    gamma0_on_formula_ok: bool


def classify(spec) -> Classification:
    key = as_spec(spec).degrees
    return Classification(
        one_large=key not in NOT_ONE_LARGE,
        onshell_formula_ok=key not in ONSHELL_FORMULA_EXCLUDED,
        gamma_exception_m0=key in GAMMA0_EXCEPTIONS,
        gamma_exception_m1=key in GAMMA1_EXCEPTIONS,
        gamma_exception_m2=key in GAMMA2_EXCEPTIONS,
        gamma0_on_formula_ok=key not in GAMMA0_ON_EXCLUDED,
    )


def gamma2_case(spec) -> str:
    """Parity case for the second covariant coefficient: ``"I"``, ``"II"`` or ``"III"``."""
    degs = as_spec(spec).degrees
    odd = [d for d in degs if d % 2]
    if not odd:
        return "II"
    if odd == [1]:
        return "III"
    return "I"

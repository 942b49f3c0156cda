"""Frobenius behaviour of the missing monomials, and what it implies.

The map v |-> p*v on gap vectors is the whole story: a gap vector whose
p-th multiple lands back in the semigroup is killed by Frobenius, one whose
multiple is again a gap persists.  Everything this module reports —
F-singularity type, the number of Frobenius steps needed to clear the
missing part (the HSL number), and the uniform test exponent for parameter
ideals (Fte) — is read off that action plus the classification case table.

The three gap shapes behave differently:

* finite gaps die in one step for every p (the multiple has larger degree);
* line gaps die in one step for every p (the multiple's small entry is p != 1);
* odd-odd gaps die in one step for p = 2 and never for odd p, which is the
  injectivity evidence behind the parity dichotomy.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Union

from veropinch.exceptions import InvalidSpecError
from veropinch.gapset import (
    CokernelModel,
    GapKind,
    multipinch_coordinate_bound,
    multipinch_gap_set,
)
from veropinch.lattice import ExponentVector, SemigroupSpec, SpecKind
from veropinch.membership import is_member

MAX_CHARACTERISTIC = 10_000

INJECTIVE_EVIDENCE = "injective-evidence"


@dataclass(frozen=True)
class Characteristic:
    """A validated prime p (trial division; primes up to 10**4 supported)."""

    p: int

    def __post_init__(self) -> None:
        p = self.p
        if not isinstance(p, int) or p < 2:
            raise InvalidSpecError(f"characteristic must be an integer >= 2, got {p!r}")
        if p > MAX_CHARACTERISTIC:
            raise InvalidSpecError(
                f"characteristic {p} exceeds the supported bound {MAX_CHARACTERISTIC}"
            )
        k = 2
        while k * k <= p:
            if p % k == 0:
                raise InvalidSpecError(f"characteristic must be prime, got {p} = {k}*{p // k}")
            k += 1


def _prime(p: Union[int, Characteristic]) -> int:
    if isinstance(p, Characteristic):
        return p.p
    return Characteristic(p).p


def ceil_log(p: int, x: int) -> int:
    """Smallest e >= 0 with p**e >= x (exact integer arithmetic)."""
    e = 0
    power = 1
    while power < x:
        power *= p
        e += 1
    return e


class FType(str, Enum):
    F_REGULAR = "F-regular"
    F_NILPOTENT = "F-nilpotent"
    F_INJECTIVE = "F-injective"
    REGULAR = "regular"


@dataclass(frozen=True)
class Fte:
    """Frobenius test exponent: exact value, upper bound with formula, or unknown."""

    kind: str  # "exact" | "bound" | "unknown"
    value: int | None
    formula: str | None
    rationale: str

    @staticmethod
    def exact(value: int, rationale: str) -> "Fte":
        return Fte(kind="exact", value=value, formula=None, rationale=rationale)

    @staticmethod
    def bound(value: int, formula: str, rationale: str) -> "Fte":
        return Fte(kind="bound", value=value, formula=formula, rationale=rationale)

    @staticmethod
    def open_question(rationale: str) -> "Fte":
        return Fte(kind="unknown", value=None, formula=None, rationale=rationale)


@dataclass(frozen=True)
class TraceStep:
    vector: ExponentVector
    image: ExponentVector
    killed: bool  # image is a semigroup member


@dataclass(frozen=True)
class FrobeniusTrace:
    """Numeric record of v |-> p*v on the materialized gap, plus the symbolic verdict."""

    action: tuple[TraceStep, ...]
    nilpotency_index: Union[int, str]  # 1, or INJECTIVE_EVIDENCE when odd p persists
    truncation: int
    p: int


@dataclass(frozen=True)
class FSingularityReport:
    ftype: FType
    f_pure: str  # "yes" | "no" | "unknown"
    hsl: int
    fte: Fte
    p: int
    rationale: str = ""
    notes: tuple[str, ...] = ()


def frobenius_on_cokernel(
    ck: CokernelModel,
    p: Union[int, Characteristic],
    truncation: int | None = None,
) -> FrobeniusTrace:
    """Apply v |-> p*v to every gap vector up to the truncation degree.

    Runs the symbolic family analysis alongside the numeric trace and checks
    they agree: whenever the family says one step suffices, every traced
    vector must be killed, and a surviving image must itself be a gap vector.
    """
    p = _prime(p)
    if truncation is None:
        truncation = 6 * ck.spec.d
    gap = ck.gap
    vectors = gap.materialize(truncation)
    if not vectors:
        raise InvalidSpecError("the cokernel model is empty: nothing to trace")
    steps = []
    for v in vectors:
        image = v.scale(p)
        if gap.contains(image):
            killed = False  # still a gap vector: survives this Frobenius step
        elif is_member(image, ck.spec):
            killed = True  # a positive witness exists, found by the search
        else:
            raise AssertionError(
                f"{tuple(image)} is neither a member nor a gap vector"
            )
        steps.append(TraceStep(vector=v, image=image, killed=killed))

    if gap.kind is GapKind.ODD_ODD and p != 2:
        index: Union[int, str] = INJECTIVE_EVIDENCE
        if any(s.killed for s in steps):
            raise AssertionError("odd-characteristic trace killed an odd-odd vector")
    else:
        index = 1
        survivors = [s for s in steps if not s.killed]
        if survivors:
            raise AssertionError(
                f"one-step kill expected, but {tuple(survivors[0].vector)} persists"
            )
    return FrobeniusTrace(action=tuple(steps), nilpotency_index=index, truncation=truncation, p=p)


def multipinch_nilpotency_index(
    spec: SemigroupSpec, p: Union[int, Characteristic]
) -> int:
    """Smallest e with p^e * v a member for every gap vector v of a multipinch.

    Computed by iterated membership; always at most ceil(log_p((n-1)(d^2-d)))
    because at that power every entry bound is cleared.
    """
    p = _prime(p)
    if spec.kind is not SpecKind.MULTI_PINCH:
        raise InvalidSpecError("nilpotency index by iterated scaling needs a multipinch")
    bound = multipinch_coordinate_bound(spec.n, spec.d)
    limit = ceil_log(p, bound)
    worst = 0
    for v in multipinch_gap_set(spec):
        e = 1
        w = v.scale(p)
        # an entry at or above the coordinate bound forces membership outright
        while w.max_entry() < bound and not is_member(w, spec):
            e += 1
            w = w.scale(p)
            if e > limit:
                raise AssertionError(
                    f"gap vector {tuple(v)} not cleared within {limit} steps"
                )
        worst = max(worst, e)
    return worst


_PURITY_NOTE = (
    "purity follows from regularity of ideal closures: every ideal is tightly "
    "closed, hence Frobenius closed"
)
_NOT_PURE_NOTE = (
    "not F-pure: purity would force F-injectivity, and F-injective plus "
    "F-nilpotent means F-rational, impossible for a non-normal ring"
)

_SUMMAND_RATIONALE = (
    "saturated semigroup: the ring splits off a polynomial ring, so every "
    "ideal is tightly closed"
)
_ODD_INJECTIVE_RATIONALE = (
    "odd multiples keep every odd-odd gap vector alive, so Frobenius acts "
    "injectively on the missing part and on the ring's cohomology"
)


def f_singularity(
    spec: SemigroupSpec, p: Union[int, Characteristic]
) -> FSingularityReport:
    """F-singularity type, HSL number, and test-exponent data at characteristic p."""
    p = _prime(p)
    h = hsl(spec, p)
    f = fte(spec, p)

    if spec.kind is SpecKind.MULTI_PINCH:
        return FSingularityReport(
            ftype=FType.F_NILPOTENT,
            f_pure="no",
            hsl=h,
            fte=f,
            p=p,
            rationale="the finite gap set is cleared by iterated Frobenius",
            notes=(_NOT_PURE_NOTE,),
        )
    if spec.kind is SpecKind.FULL_VERONESE:
        return FSingularityReport(
            ftype=FType.F_REGULAR, f_pure="yes", hsl=h, fte=f, p=p,
            rationale=_SUMMAND_RATIONALE, notes=(_PURITY_NOTE,),
        )

    mx = spec.pinched().max_entry()
    n, d = spec.n, spec.d
    if n == 2 and d == 2 and mx == 1:
        return FSingularityReport(
            ftype=FType.REGULAR, f_pure="yes", hsl=h, fte=f, p=p,
            rationale="two independent pure squares generate freely: a polynomial ring",
            notes=("regular rings have every ideal Frobenius closed",),
        )
    if mx == d:
        return FSingularityReport(
            ftype=FType.F_REGULAR, f_pure="yes", hsl=h, fte=f, p=p,
            rationale=_SUMMAND_RATIONALE, notes=(_PURITY_NOTE,),
        )
    if d == 2:  # mx == 1, n >= 3
        if p == 2:
            return FSingularityReport(
                ftype=FType.F_NILPOTENT, f_pure="no", hsl=h, fte=f, p=p,
                rationale="squaring clears the odd-odd gap plane in one step",
                notes=(_NOT_PURE_NOTE,),
            )
        if n == 3:
            return FSingularityReport(
                ftype=FType.F_INJECTIVE, f_pure="yes", hsl=h, fte=f, p=p,
                rationale=_ODD_INJECTIVE_RATIONALE,
                notes=("Gorenstein and F-injective in odd characteristic forces purity",),
            )
        return FSingularityReport(
            ftype=FType.F_INJECTIVE, f_pure="unknown", hsl=h, fte=f, p=p,
            rationale=_ODD_INJECTIVE_RATIONALE,
            notes=("purity for this family in odd characteristic is an open question",),
        )
    return FSingularityReport(
        ftype=FType.F_NILPOTENT, f_pure="no", hsl=h, fte=f, p=p,
        rationale="the missing monomials die in one Frobenius step, so all low "
        "cohomology is Frobenius-nilpotent",
        notes=(_NOT_PURE_NOTE,),
    )



def hsl(spec: SemigroupSpec, p: Union[int, Characteristic]) -> int:
    """Frobenius steps needed to clear the nilpotent part of local cohomology.

    Exact in every case: 0 when Frobenius acts injectively (F-regular,
    regular, and odd-characteristic F-injective outcomes), 1 for every other
    single pinch (the gap dies in one step), and the computed nilpotency
    index for a multipinch.
    """
    p = _prime(p)
    if spec.kind is SpecKind.FULL_VERONESE:
        return 0
    if spec.kind is SpecKind.MULTI_PINCH:
        return multipinch_nilpotency_index(spec, p)
    mx = spec.pinched().max_entry()
    if mx == spec.d or (spec.n == 2 and spec.d == 2):
        return 0
    if spec.d == 2 and p > 2:  # F-injective branch
        return 0
    return 1


def fte(spec: SemigroupSpec, p: Union[int, Characteristic]) -> Fte:
    """Uniform Frobenius test exponent for parameter ideals (exact or bounded).

    Case table: exact 0 for the three F-injective Cohen-Macaulay families,
    exact 1 where Cohen-Macaulayness pins the value to the HSL number, the
    binomial/linear bounds otherwise, the logarithmic formula for
    multipinches, and unknown where no finiteness result exists.
    """
    p = _prime(p)
    n, d = spec.n, spec.d
    closed = "every parameter ideal Frobenius closed"
    if spec.kind is SpecKind.FULL_VERONESE:
        return Fte.exact(0, closed)
    if spec.kind is SpecKind.MULTI_PINCH:
        bound = multipinch_coordinate_bound(n, d)
        value = n * ceil_log(p, bound)
        return Fte.bound(
            value,
            "n*ceil(log_p((n-1)*(d^2-d)))",
            f"{n} Frobenius steps per cleared entry bound {bound}",
        )
    mx = spec.pinched().max_entry()
    if mx == d or (n == 2 and d == 2 and mx == 1):
        return Fte.exact(0, closed)
    if d == 2:  # mx == 1, n >= 3
        if p > 2:
            if n == 3:
                return Fte.exact(0, closed)
            return Fte.open_question(
                "no finiteness result for this F-injective non-Cohen-Macaulay family"
            )
        if n == 3:
            return Fte.exact(1, "Cohen-Macaulay: the test exponent equals the HSL number, 1")
        return Fte.bound(
            comb(n, 3), "binom(n,3)", "one nilpotent cohomology slot in homological degree 3"
        )
    if mx == d - 1:
        if n == 2:
            return Fte.exact(1, "Cohen-Macaulay: the test exponent equals the HSL number, 1")
        return Fte.bound(
            comb(n, 2), "binom(n,2)", "one nilpotent cohomology slot in homological degree 2"
        )
    return Fte.bound(n, "n", "one nilpotent cohomology slot in homological degree 1")

"""Depth, Cohen-Macaulay, Gorenstein, and normalization classification.

Depth is reported from an exact case table on the largest entry of the
removed vector, and every case is paired with the combinatorial witness the
table rests on (gap-set shape, socle enumeration, explicit presentations),
so the premises stay checkable:

* max(m) = d       -> depth n   (saturated semigroup, normal ring)
* max(m) = 1, d=2, n>2 -> depth 3 (odd-odd gap plane has module depth 2)
* max(m) = d-1     -> depth 2   (gap line/plane has module depth >= 1;
                                  includes the regular (2,2,(1,1)) case)
* max(m) < d-1     -> depth 1   (single missing point, finite length)
* any multipinch   -> depth 1   (finite nonempty gap set)

No local cohomology is ever materialized; the constructive side of the
classification is the Artinian quotient by the pure powers x_i^d, whose
basis and socle this module enumerates outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from veropinch.exceptions import InvalidSpecError
from veropinch.lattice import ExponentVector, SemigroupSpec, SpecKind
from veropinch.membership import is_member, layer_members


class Tristate(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class Normalization(str, Enum):
    SELF_NORMAL = "self-normal"
    BY_VERONESE = "normalized-by-veronese"
    REGULAR_SPECIAL_CASE = "regular-special-case"


@dataclass(frozen=True)
class ClassificationReport:
    dimension: int
    depth: int
    cohen_macaulay: bool
    generalized_cm: bool
    gorenstein: Tristate
    complete_intersection: Tristate
    a_invariant: int | None  # None = not applicable / not determined
    normalization: Normalization
    rationale: tuple[tuple[str, str], ...]  # (field, short reason), sorted by field

    def reason(self, field: str) -> str:
        return dict(self.rationale)[field]


def normalization_type(spec: SemigroupSpec) -> Normalization:
    """Where the semigroup sits relative to its saturation.

    Removing a pure power d*e_i removes that axis ray from the cone, so the
    semigroup stays saturated.  (2,2,(1,1)) is the one pinch whose ring is
    regular on its own smaller lattice.  Every other removal is recovered by
    the ambient degree-d slice.
    """
    if spec.kind is SpecKind.FULL_VERONESE:
        return Normalization.SELF_NORMAL
    if spec.kind is SpecKind.MULTI_PINCH:
        return Normalization.BY_VERONESE
    m = spec.pinched()
    if m.max_entry() == spec.d:
        return Normalization.SELF_NORMAL
    if spec.n == 2 and spec.d == 2:
        return Normalization.REGULAR_SPECIAL_CASE
    return Normalization.BY_VERONESE


def depth(spec: SemigroupSpec) -> int:
    if spec.kind is SpecKind.FULL_VERONESE:
        return spec.n
    if spec.kind is SpecKind.MULTI_PINCH:
        return 1
    m = spec.pinched()
    mx = m.max_entry()
    d, n = spec.d, spec.n
    if mx == d:
        return n
    if mx == d - 1:
        if d == 2 and n > 2:
            return 3
        return 2
    return 1


def _is_regular(spec: SemigroupSpec) -> bool:
    # The only regular pinches: (2,2,(1,1)) = k[x^2,y^2], and (2,2,max=2)
    # whose two surviving generators are lattice-independent (a free
    # semigroup, i.e. a polynomial ring).
    return (
        spec.kind is SpecKind.SINGLE_PINCH
        and spec.n == 2
        and spec.d == 2
    )


def classify(spec: SemigroupSpec) -> ClassificationReport:
    """Full homological classification of a pinch or multipinch."""
    n, d = spec.n, spec.d
    dep = depth(spec)
    norm = normalization_type(spec)
    reasons: dict[str, str] = {}

    if spec.kind is SpecKind.MULTI_PINCH:
        reasons["depth"] = (
            "the gap set is finite and nonempty, so the missing part of the "
            "normalization has finite length and depth drops to 1"
        )
        reasons["cohen_macaulay"] = "depth 1 is below dimension {}".format(n)
        reasons["gorenstein"] = "not Cohen-Macaulay"
        reasons["complete_intersection"] = "not Cohen-Macaulay"
        reasons["generalized_cm"] = (
            "a finite gap set means all the low local cohomology has finite length"
        )
        reasons["normalization"] = (
            "every generator with an entry >= d-1 survives, so the ambient "
            "degree-d slice is integral over the semigroup and saturates it"
        )
        reasons["open"] = (
            "which generator subsets give Cohen-Macaulay rings in general is "
            "open; this removal family always has depth 1"
        )
        return ClassificationReport(
            dimension=n,
            depth=1,
            cohen_macaulay=False,
            generalized_cm=True,
            gorenstein=Tristate.NO,
            complete_intersection=Tristate.NO,
            a_invariant=None,
            normalization=norm,
            rationale=tuple(sorted(reasons.items())),
        )

    if spec.kind is SpecKind.FULL_VERONESE:
        reasons["depth"] = "saturated semigroups give Cohen-Macaulay rings of full depth"
        reasons["cohen_macaulay"] = "normal semigroup ring"
        gor = (
            (Tristate.YES if d == 2 else Tristate.NO) if n == 2 else Tristate.UNKNOWN
        )
        reasons["gorenstein"] = (
            "degree-d slice of the plane is Gorenstein exactly when d divides 2"
            if n == 2
            else "not determined here"
        )
        reasons["complete_intersection"] = "not determined here"
        return ClassificationReport(
            dimension=n,
            depth=n,
            cohen_macaulay=True,
            generalized_cm=True,
            gorenstein=gor,
            complete_intersection=Tristate.UNKNOWN,
            a_invariant=None,
            normalization=norm,
            rationale=tuple(sorted(reasons.items())),
        )

    m = spec.pinched()
    mx = m.max_entry()
    cm = (mx == d) or (n == 2 and mx == d - 1) or (n == 3 and d == 2 and mx == 1)
    regular = _is_regular(spec)

    if mx == d:
        reasons["depth"] = "saturated semigroups give Cohen-Macaulay rings of full depth"
    elif mx == d - 1 and d == 2 and n > 2:
        reasons["depth"] = (
            "the odd-odd gap plane carries a two-parameter regular action, "
            "lifting the ring's depth to 3"
        )
    elif mx == d - 1:
        reasons["depth"] = (
            "the gap family carries a one-parameter regular action in its "
            "axis pair, lifting the ring's depth to 2"
        )
    else:
        reasons["depth"] = (
            "only the removed exponent is missing, so the missing part has "
            "finite length and depth drops to 1"
        )
    reasons["cohen_macaulay"] = (
        f"depth {dep} {'equals' if cm else 'is below'} dimension {n}"
    )

    a_inv: int | None = None
    if not cm:
        gor = Tristate.NO
        ci = Tristate.NO
        reasons["gorenstein"] = "not Cohen-Macaulay"
        reasons["complete_intersection"] = "not Cohen-Macaulay"
    elif n == 2 and mx == d - 1:
        qb = quotient_basis(spec)
        a_inv = a_invariant(qb, d)
        gor = Tristate.YES
        reasons["gorenstein"] = (
            "the Artinian quotient by the two pure powers has a one-element socle"
        )
        if regular:
            ci = Tristate.YES
            reasons["complete_intersection"] = (
                "the surviving generators are lattice-independent: a polynomial ring"
            )
        else:
            ci = Tristate.UNKNOWN
            reasons["complete_intersection"] = "not determined here"
    elif n == 3 and d == 2 and mx == 1:
        gor = Tristate.YES
        ci = Tristate.YES
        reasons["gorenstein"] = "complete intersections are Gorenstein"
        reasons["complete_intersection"] = (
            "presented by the two binomial relations ae-b^2 and ce-d^2, "
            "a regular sequence"
        )
    else:  # mx == d, Cohen-Macaulay by normality
        if n == 2:
            gor = Tristate.YES if d in (2, 3) else Tristate.NO
            reasons["gorenstein"] = (
                "isomorphic to the degree-(d-1) slice of the plane, which is "
                "Gorenstein exactly when d-1 divides 2"
            )
            ci = Tristate.YES if regular else Tristate.UNKNOWN
            reasons["complete_intersection"] = (
                "the surviving generators are lattice-independent: a polynomial ring"
                if regular
                else "not determined here"
            )
        else:
            gor = Tristate.UNKNOWN
            ci = Tristate.UNKNOWN
            reasons["gorenstein"] = "not determined here for n > 2"
            reasons["complete_intersection"] = "not determined here"

    gen_cm = cm or mx < d - 1
    reasons["generalized_cm"] = (
        "a finite gap set means all the low local cohomology has finite length"
        if mx < d - 1
        else ("Cohen-Macaulay" if cm else "the gap family is infinite")
    )
    reasons["normalization"] = {
        Normalization.SELF_NORMAL: (
            "the removed exponent is a pure power, whose axis ray leaves the "
            "cone: the semigroup is saturated"
        ),
        Normalization.REGULAR_SPECIAL_CASE: (
            "the surviving generators span a smaller lattice on which the "
            "semigroup is free"
        ),
        Normalization.BY_VERONESE: (
            "each ambient degree-d vector has a power inside the pinch, so the "
            "ambient slice is the saturation"
        ),
    }[norm]

    return ClassificationReport(
        dimension=n,
        depth=dep,
        cohen_macaulay=cm,
        generalized_cm=gen_cm,
        gorenstein=gor,
        complete_intersection=ci,
        a_invariant=a_inv,
        normalization=norm,
        rationale=tuple(sorted(reasons.items())),
    )


@dataclass(frozen=True)
class QuotientBasis:
    """Monomial basis of the Artinian quotient by (x_1^d, x_2^d), with socle."""

    basis: tuple[ExponentVector, ...]
    socle: tuple[ExponentVector, ...]
    spec: SemigroupSpec


def _in_parameter_ideal(v: ExponentVector, spec: SemigroupSpec) -> bool:
    d = spec.d
    for axis in range(spec.n):
        power = [0] * spec.n
        power[axis] = d
        w = v.sub_or_none(power)
        if w is not None and is_member(w, spec):
            return True
    return False


def quotient_basis(spec: SemigroupSpec) -> QuotientBasis:
    """Members surviving modulo the pure powers (x^d, y^d), plus the socle.

    Only defined for the plane pinches with max(m) = d-1.  Enumeration runs
    to degree 3d and checks that nothing survives past 2d, so the degree
    ceiling is a verified assumption rather than a silent one.
    """
    if spec.kind is not SpecKind.SINGLE_PINCH or spec.n != 2:
        raise InvalidSpecError("quotient basis is defined for plane single pinches")
    m = spec.pinched()
    d = spec.d
    if m.max_entry() != d - 1:
        raise InvalidSpecError(
            f"quotient basis needs max(m) = d-1, got max {m.max_entry()} with d={d}"
        )
    basis: list[ExponentVector] = []
    for t in range(0, 4):  # layers 0..3, i.e. members of degree up to 3d
        for v in layer_members(spec, t):
            if not _in_parameter_ideal(v, spec):
                if v.degree() > 2 * d:
                    raise AssertionError(
                        f"basis element {tuple(v)} beyond degree {2 * d}: "
                        "quotient is larger than expected"
                    )
                basis.append(v)
    gens = spec.generators()
    socle = tuple(
        b for b in basis if all(_in_parameter_ideal(b.add(g), spec) for g in gens)
    )
    return QuotientBasis(basis=tuple(sorted(basis)), socle=socle, spec=spec)


def a_invariant(qb: QuotientBasis, d: int) -> int:
    """degree(socle generator) - 2d, defined when the socle is one element."""
    if len(qb.socle) != 1:
        raise InvalidSpecError(
            f"socle has {len(qb.socle)} generators; the ring is not Gorenstein "
            "and carries no single top degree"
        )
    return qb.socle[0].degree() - 2 * d


# The pinch (3, 2, (1,1,0)) is presented by two binomial relations on its five
# generators a=x^2, b=xz, c=y^2, d=yz, e=z^2.  At the exponent level a
# binomial relation is an equality of coordinate sums.
_CI_GENERATORS: dict[str, ExponentVector] = {
    "a": ExponentVector((2, 0, 0)),
    "b": ExponentVector((1, 0, 1)),
    "c": ExponentVector((0, 2, 0)),
    "d": ExponentVector((0, 1, 1)),
    "e": ExponentVector((0, 0, 2)),
}


def ci_relation_holds(left: Sequence[str], right: Sequence[str]) -> bool:
    """Whether two products of named generators agree as exponent vectors."""
    total_left = (0, 0, 0)
    for name in left:
        total_left = tuple(x + y for x, y in zip(total_left, _CI_GENERATORS[name]))
    total_right = (0, 0, 0)
    for name in right:
        total_right = tuple(x + y for x, y in zip(total_right, _CI_GENERATORS[name]))
    return total_left == total_right


def verify_ci_presentation() -> bool:
    """Both defining relations ae = b^2 and ce = d^2 hold on the exponents."""
    return ci_relation_holds(("a", "e"), ("b", "b")) and ci_relation_holds(
        ("c", "e"), ("d", "d")
    )


def lower_veronese_iso(v: Sequence[int], d: int) -> ExponentVector:
    """Coordinates of a plane pinch member on the lattice of the (d-1)-slice.

    The semigroup of the (2, d, (d,0)) pinch spans the lattice generated by
    (0,d) and (1,-1); rewriting v = a*(0,d) + b*(1,-1) gives the image
    (a, b) = ((v1+v2)/d, v1).  The map is additive and sends the generator
    (d-j, j) to (1, d-j).
    """
    vec = ExponentVector(v)
    if len(vec) != 2:
        raise InvalidSpecError("the lower-Veronese map is defined on the plane")
    total = vec.degree()
    if total % d != 0:
        raise InvalidSpecError(
            f"{tuple(vec)} has degree {total}, not a multiple of {d}"
        )
    return ExponentVector((total // d, vec[0]))

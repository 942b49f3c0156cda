"""Gap sets: what the ambient degree-d semigroup has that a pinch is missing.

For a single pinch with max(m) < d the missing set has one of three closed
forms, depending on the largest entry of the removed vector m:

* max(m) < d-1   — only m itself is missing.
* max(m) = d-1, d > 2 — a line: every (ds-1, 1) pattern in the axis pair of m.
* max(m) = 1, d = 2   — a plane: every odd-odd pattern in the axis pair of m.

When max(m) = d the pinched semigroup is saturated in its own cone (the
removed axis direction leaves the cone), so nothing is missing from its
normalization and the gap set is empty.  The brute-force oracle therefore
always compares against the normalization: the ambient slice when
max(removed) < d throughout, the spec itself in the saturated case.

Multipinches have a finite gap set with the uniform coordinate bound
(n-1)(d^2-d): any vector with an entry at or above the bound is a member
outright, so exhaustive enumeration below the bound is complete.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from veropinch.exceptions import InvalidSpecError
from veropinch.lattice import ExponentVector, SemigroupSpec, SpecKind
from veropinch.membership import _full_layer_codes, _layer_codes, _unpack, is_member


class GapKind(str, Enum):
    FINITE = "finite"
    LINE = "line"
    ODD_ODD = "odd-odd"


def multipinch_coordinate_bound(n: int, d: int) -> int:
    """(n-1)(d^2-d): entries at or above this force membership in any multipinch."""
    return (n - 1) * (d * d - d)


@dataclass(frozen=True)
class GapSet:
    """Missing vectors, either listed outright or as a parametric family.

    ``contains`` is the authoritative representation; ``materialize`` lists
    the members up to a degree bound and always agrees with it.  Families
    are never materialized without an explicit bound.
    """

    n: int
    d: int
    kind: GapKind
    members: tuple[ExponentVector, ...] = ()  # FINITE only, sorted
    axes: tuple[int, int] | None = None  # LINE: (axis of d-1, axis of 1); ODD_ODD: the two odd axes

    @property
    def is_finite(self) -> bool:
        return self.kind is GapKind.FINITE

    def contains(self, v: Sequence[int]) -> bool:
        vec = tuple(v)
        if len(vec) != self.n:
            return False
        if any(c < 0 for c in vec):
            return False
        if self.kind is GapKind.FINITE:
            return vec in set(self.members)
        i, j = self.axes  # type: ignore[misc]
        if any(c != 0 for k, c in enumerate(vec) if k not in (i, j)):
            return False
        if self.kind is GapKind.LINE:
            return vec[j] == 1 and vec[i] % self.d == self.d - 1
        return vec[i] % 2 == 1 and vec[j] % 2 == 1

    def materialize(self, max_degree: int) -> tuple[ExponentVector, ...]:
        """All gap vectors of degree <= max_degree, sorted."""
        if self.kind is GapKind.FINITE:
            found = [m for m in self.members if m.degree() <= max_degree]
        elif self.kind is GapKind.LINE:
            i, j = self.axes  # type: ignore[misc]
            found = []
            for s in range(1, max_degree // self.d + 1):
                vec = [0] * self.n
                vec[i] = self.d * s - 1
                vec[j] = 1
                found.append(ExponentVector(vec))
        else:
            i, j = self.axes  # type: ignore[misc]
            found = []
            for a in range(1, max_degree, 2):
                for b in range(1, max_degree - a + 1, 2):
                    vec = [0] * self.n
                    vec[i] = a
                    vec[j] = b
                    found.append(ExponentVector(vec))
        return tuple(sorted(found))


def _single_pinch(spec: SemigroupSpec) -> ExponentVector:
    if spec.kind is SpecKind.FULL_VERONESE:
        raise InvalidSpecError("nothing was removed: the gap set is trivially empty")
    if spec.kind is SpecKind.MULTI_PINCH:
        raise InvalidSpecError(
            "no closed form for multipinch gap sets; use multipinch_gap_set"
        )
    return spec.pinched()


def gap_set_closed_form(spec: SemigroupSpec) -> GapSet:
    """The single-pinch gap set, in the user's own coordinates.

    The removed vector is never reordered; the axis pair carrying the
    (d-1, 1) or (1, 1) pattern is detected so reports speak the coordinates
    the caller supplied.
    """
    m = _single_pinch(spec)
    n, d = spec.n, spec.d
    mx = m.max_entry()
    if mx == d:
        return GapSet(n=n, d=d, kind=GapKind.FINITE, members=())
    if mx < d - 1:
        return GapSet(n=n, d=d, kind=GapKind.FINITE, members=(m,))
    # mx == d-1: exactly one other entry is 1 and the rest vanish
    if d == 2:
        i, j = (k for k, c in enumerate(m) if c == 1)
        return GapSet(n=n, d=d, kind=GapKind.ODD_ODD, axes=(i, j))
    i = m.index(d - 1)
    j = m.index(1)
    return GapSet(n=n, d=d, kind=GapKind.LINE, axes=(i, j))


def _normalizes_to_self(spec: SemigroupSpec) -> bool:
    # Removing a pure power d*e_i cuts that axis ray out of the cone, leaving
    # a saturated semigroup; removing anything with max < d does not.
    return spec.kind is SpecKind.FULL_VERONESE or (
        spec.kind is SpecKind.SINGLE_PINCH and spec.pinched().max_entry() == spec.d
    )


def gap_set_bruteforce(
    spec: SemigroupSpec, layer_bound: int
) -> tuple[ExponentVector, ...]:
    """Layer-by-layer enumeration of the missing vectors up to layer_bound.

    Compares the spec's layers against its normalization's layers; this is
    the independent oracle the closed forms are checked against.
    """
    if layer_bound < 1:
        raise InvalidSpecError(f"layer bound must be >= 1, got {layer_bound}")
    if _normalizes_to_self(spec):
        return ()
    missing: list[tuple[int, ...]] = []
    for t in range(1, layer_bound + 1):
        ambient = _full_layer_codes(spec.n, spec.d, t)
        mine = _layer_codes(spec, t)
        missing.extend(_unpack(c, spec.n) for c in ambient - mine)
    return tuple(ExponentVector(v) for v in sorted(missing))


def verify_gap_equivalence(
    spec: SemigroupSpec, t_max: int
) -> tuple[bool, tuple[ExponentVector, ...]]:
    """Cross-validate the closed form against the brute-force oracle.

    Returns (ok, symmetric difference up to degree t_max*d), the difference
    sorted and empty exactly when the two computations agree.
    """
    if spec.kind is not SpecKind.SINGLE_PINCH:
        raise InvalidSpecError("gap equivalence is defined for single pinches")
    closed = set(gap_set_closed_form(spec).materialize(t_max * spec.d))
    brute = set(gap_set_bruteforce(spec, t_max))
    diff = tuple(sorted(closed ^ brute))
    return (not diff, diff)


def _capped_compositions(total: int, parts: int, cap: int):
    # weak compositions with every part <= cap; prunes instead of filtering
    if parts == 1:
        if 0 <= total <= cap:
            yield (total,)
        return
    for head in range(min(total, cap), -1, -1):
        if total - head > (parts - 1) * cap:
            break
        for rest in _capped_compositions(total - head, parts - 1, cap):
            yield (head,) + rest


@functools.lru_cache(maxsize=256)
def multipinch_gap_set(spec: SemigroupSpec) -> tuple[ExponentVector, ...]:
    """The complete (finite) gap set of a multipinch.

    Enumerates every candidate with all entries below (n-1)(d^2-d); vectors
    with a larger entry are members without search, so the result is the
    whole gap set, not a truncation.
    """
    if spec.kind is not SpecKind.MULTI_PINCH:
        raise InvalidSpecError("multipinch_gap_set needs a multipinch spec")
    n, d = spec.n, spec.d
    bound = multipinch_coordinate_bound(n, d)
    top = n * (bound - 1)
    gaps: list[ExponentVector] = []
    for t in range(1, top // d + 1):
        for v in _capped_compositions(t * d, n, bound - 1):
            if not is_member(v, spec):
                gaps.append(ExponentVector(v))
    return tuple(sorted(gaps))


@dataclass(frozen=True)
class CokernelModel:
    """What the normalization has beyond the pinch, and who generates it.

    For max(m) < d the missing part is generated by the removed monomial
    itself: every gap vector is m plus a member.  In the saturated case the
    model is empty and the generator absent.
    """

    gap: GapSet
    principal_generator: ExponentVector | None
    spec: SemigroupSpec


def cokernel_model(spec: SemigroupSpec) -> CokernelModel:
    m = _single_pinch(spec)
    gap = gap_set_closed_form(spec)
    if m.max_entry() == spec.d:
        return CokernelModel(gap=gap, principal_generator=None, spec=spec)
    return CokernelModel(gap=gap, principal_generator=m, spec=spec)


def verify_principality(
    ck: CokernelModel, max_degree: int
) -> tuple[bool, tuple[ExponentVector, ...]]:
    """Check every materialized gap vector is generator + member (or the generator).

    Returns (ok, counterexamples).
    """
    if ck.principal_generator is None:
        return (not ck.gap.materialize(max_degree), ())
    bad = []
    for v in ck.gap.materialize(max_degree):
        w = v.sub_or_none(ck.principal_generator)
        if w is None or (any(w) and not is_member(w, ck.spec)):
            bad.append(v)
    return (not bad, tuple(bad))

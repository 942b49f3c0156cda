"""Exponent vectors, degree-d generating sets, and pinch descriptions.

Every computation in this package reduces to integer combinatorics on points
of N^n.  This module provides the three ground types: ``ExponentVector`` (a
lattice point), ``GeneratorSet`` (the full degree-d slice of N^n), and
``SemigroupSpec`` (which generators were removed, and how).  The underlying
field of the semigroup ring never appears as data; only the characteristic
survives, as a parameter of the ``charp`` module.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Iterable, Iterator, Sequence

from veropinch.exceptions import InvalidSpecError


class ExponentVector(tuple):
    """A point of N^n (n >= 2) recording a monomial exponent.

    Subclasses ``tuple``, so vectors are immutable, hash like tuples, compare
    lexicographically, and mix freely with plain tuples in sets and tests.
    Coordinates are arbitrary-precision Python integers, so arithmetic cannot
    wrap.
    """

    __slots__ = ()

    def __new__(cls, coords: Iterable[int]) -> "ExponentVector":
        vec = super().__new__(cls, coords)
        if len(vec) < 2:
            raise InvalidSpecError(
                f"exponent vectors need at least 2 coordinates, got {len(vec)}"
            )
        for c in vec:
            if not isinstance(c, int) or c < 0:
                raise InvalidSpecError(
                    f"coordinates must be nonnegative integers, got {c!r}"
                )
        return vec

    def degree(self) -> int:
        """Coordinate sum |a|."""
        return sum(self)

    def max_entry(self) -> int:
        """Largest single coordinate."""
        return max(self)

    def add(self, other: Sequence[int]) -> "ExponentVector":
        return ExponentVector(a + b for a, b in zip(self, other))

    def scale(self, k: int) -> "ExponentVector":
        if k < 0:
            raise InvalidSpecError("scaling factor must be nonnegative")
        return ExponentVector(k * a for a in self)

    def sub_or_none(self, other: Sequence[int]) -> "ExponentVector | None":
        """Coordinatewise difference, or None when it would leave N^n."""
        out = []
        for a, b in zip(self, other):
            c = a - b
            if c < 0:
                return None
            out.append(c)
        return ExponentVector(out)

    def __repr__(self) -> str:  # clearer pytest diffs than the bare tuple repr
        return f"ev{tuple.__repr__(self)}"


def weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `parts` nonnegative integers summing to `total`.

    Yielded in descending lexicographic order; there are C(total+parts-1,
    parts-1) of them.
    """
    if parts == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for rest in weak_compositions(total - head, parts - 1):
            yield (head,) + rest


@dataclass(frozen=True)
class GeneratorSet:
    """The degree-d slice {a in N^n : |a| = d}, or a subset of it."""

    n: int
    d: int
    members: tuple[ExponentVector, ...]  # sorted, pairwise distinct

    def __iter__(self) -> Iterator[ExponentVector]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item: object) -> bool:
        return item in set(self.members)


@functools.lru_cache(maxsize=None)
def veronese_generators(n: int, d: int) -> GeneratorSet:
    """All weak compositions of d into n parts; cardinality C(d+n-1, n-1)."""
    if n < 2:
        raise InvalidSpecError(f"need at least 2 variables, got n={n}")
    if d < 2:
        raise InvalidSpecError(f"need degree at least 2, got d={d}")
    members = tuple(sorted(ExponentVector(c) for c in weak_compositions(d, n)))
    assert len(members) == comb(d + n - 1, n - 1)
    return GeneratorSet(n=n, d=d, members=members)


def perturb(a: Sequence[int], i: int, j: int) -> ExponentVector:
    """Add 1 at position i and subtract 1 at position j (0-based), degree fixed.

    Rejects i == j and a[j] == 0 (the result would leave N^n).
    """
    n = len(a)
    if not (0 <= i < n and 0 <= j < n):
        raise InvalidSpecError(f"positions must lie in 0..{n - 1}, got i={i}, j={j}")
    if i == j:
        raise InvalidSpecError("perturbation positions must differ")
    if a[j] < 1:
        raise InvalidSpecError(
            f"cannot subtract from coordinate {j}: value is {a[j]}"
        )
    out = list(a)
    out[i] += 1
    out[j] -= 1
    return ExponentVector(out)


class SpecKind(str, Enum):
    FULL_VERONESE = "full-veronese"
    SINGLE_PINCH = "single-pinch"
    MULTI_PINCH = "multi-pinch"


@dataclass(frozen=True)
class SemigroupSpec:
    """A validated description of a (multi-)pinched degree-d semigroup.

    ``removed`` lists the degree-d generators taken out of the full slice;
    the semigroup is generated by the rest.  All instances come from
    :func:`pinch_spec`, which enforces the structural constraints.
    """

    n: int
    d: int
    removed: tuple[ExponentVector, ...]  # sorted
    kind: SpecKind

    def generators(self) -> tuple[ExponentVector, ...]:
        return _generators_of(self)

    def pinched(self) -> ExponentVector:
        """The removed vector of a single pinch."""
        if self.kind is not SpecKind.SINGLE_PINCH:
            raise InvalidSpecError(f"{self.kind.value} spec has no single pinched vector")
        return self.removed[0]

    def describe(self) -> str:
        if self.kind is SpecKind.FULL_VERONESE:
            return f"full Veronese slice n={self.n}, d={self.d}"
        removed = ", ".join(str(tuple(m)) for m in self.removed)
        return f"{self.kind.value} n={self.n}, d={self.d}, removed {removed}"


@functools.lru_cache(maxsize=None)
def _generators_of(spec: SemigroupSpec) -> tuple[ExponentVector, ...]:
    removed = set(spec.removed)
    return tuple(
        g for g in veronese_generators(spec.n, spec.d).members if g not in removed
    )


def pinch_spec(
    n: int,
    d: int,
    removed: Iterable[Sequence[int]],
    *,
    multipinch: bool = False,
) -> SemigroupSpec:
    """Validate and tag a pinch description.

    An empty removal gives the full Veronese slice.  One removed vector is a
    single pinch unless ``multipinch=True`` forces the multipinch treatment.
    Two or more removed vectors always form a multipinch, which requires
    d > 2 and max(m) < d-1 for every removed m (the generators with an entry
    >= d-1 must all stay).
    """
    full = veronese_generators(n, d)  # validates n, d
    vecs = sorted({ExponentVector(v) for v in removed})
    for m in vecs:
        if len(m) != n:
            raise InvalidSpecError(f"removed vector {tuple(m)} has arity {len(m)}, expected {n}")
        if m.degree() != d:
            raise InvalidSpecError(f"removed vector {tuple(m)} has degree {m.degree()}, expected {d}")

    if not vecs:
        return SemigroupSpec(n=n, d=d, removed=(), kind=SpecKind.FULL_VERONESE)

    if len(vecs) == 1 and not multipinch:
        return SemigroupSpec(n=n, d=d, removed=tuple(vecs), kind=SpecKind.SINGLE_PINCH)

    # multipinch path: every vector with an entry >= d-1 must stay in place
    if d <= 2:
        raise InvalidSpecError("multipinch requires degree d > 2")
    for m in vecs:
        if m.max_entry() >= d - 1:
            raise InvalidSpecError(
                f"multipinch may not remove {tuple(m)}: max entry "
                f"{m.max_entry()} >= d-1 = {d - 1}"
            )
    if len(vecs) >= len(full):
        raise InvalidSpecError("cannot remove every generator")
    return SemigroupSpec(n=n, d=d, removed=tuple(vecs), kind=SpecKind.MULTI_PINCH)

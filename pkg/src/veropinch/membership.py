"""Exact membership testing and layer enumeration for pinched semigroups.

Two complementary engines live here, because the two access patterns want
opposite strategies:

* :func:`is_member` / :func:`decompose` — memoized top-down search, good for
  sparse queries (a point is a member iff it is zero or some generator can be
  subtracted to land on a member).
* :func:`layer_members` — bottom-up dense enumeration of everything writable
  as a sum of exactly t generators, good for oracle sweeps.

A consistency property ties them together: a vector of degree t*d is a member
iff it shows up in layer t.

Memo tables are keyed per spec and bounded by an entry cap (default 10**7,
override with the ``VEROPINCH_MEMO_CAP`` environment variable).  Hitting the
cap raises :class:`ResourceLimitError` rather than silently evicting, so
oracle answers are never approximate.  Entries are only ever written with
their final value, so sharing a table across threads cannot corrupt results;
answers are identical to sequential execution.
"""

from __future__ import annotations

import functools
import os
from dataclasses import dataclass
from typing import Sequence

from veropinch.exceptions import InvalidSpecError, ResourceLimitError
from veropinch.lattice import (
    ExponentVector,
    SemigroupSpec,
    SpecKind,
    weak_compositions,
)

DEFAULT_MEMO_CAP = 10_000_000
MEMO_CAP_ENV = "VEROPINCH_MEMO_CAP"

# Layer enumeration packs each coordinate into a fixed-width bit field so a
# vector sum is a single integer addition.  24 bits per coordinate keeps sums
# carry-free for every degree this package will ever enumerate.
_SHIFT = 24
_MASK = (1 << _SHIFT) - 1
_COORD_LIMIT = 1 << (_SHIFT - 1)

_memo_tables: dict[SemigroupSpec, dict[tuple[int, ...], bool]] = {}


def _memo_cap() -> int:
    raw = os.environ.get(MEMO_CAP_ENV)
    if raw is None:
        return DEFAULT_MEMO_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise InvalidSpecError(f"{MEMO_CAP_ENV} must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise InvalidSpecError(f"{MEMO_CAP_ENV} must be positive, got {cap}")
    return cap


def reset_membership_cache() -> None:
    """Drop all memo tables and layer caches (mainly for tests)."""
    _memo_tables.clear()
    _generators_descending.cache_clear()
    _layer_codes.cache_clear()
    _full_layer_codes.cache_clear()


@functools.lru_cache(maxsize=None)
def _generators_descending(spec: SemigroupSpec) -> tuple[tuple[int, ...], ...]:
    # Descending lexicographic trial order; fixed so witnesses are reproducible.
    return tuple(sorted((tuple(g) for g in spec.generators()), reverse=True))


def _sub(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...] | None:
    out = []
    for x, y in zip(a, b):
        z = x - y
        if z < 0:
            return None
        out.append(z)
    return tuple(out)


def _member(point: tuple[int, ...], spec: SemigroupSpec) -> bool:
    """Memoized membership for a point whose degree is a multiple of d."""
    memo = _memo_tables.setdefault(spec, {})
    known = memo.get(point)
    if known is not None:
        return known
    gens = _generators_descending(spec)
    cap = _memo_cap()
    # Explicit stack instead of recursion: query depth equals degree/d, which
    # user-supplied bounds can push past the interpreter's recursion limit.
    stack = [point]
    while stack:
        cur = stack[-1]
        if cur in memo:
            stack.pop()
            continue
        if not any(cur):
            memo[cur] = True
            stack.pop()
            continue
        found = False
        pending: list[tuple[int, ...]] = []
        for g in gens:
            child = _sub(cur, g)
            if child is None:
                continue
            val = memo.get(child)
            if val is True:
                found = True
                break
            if val is None:
                pending.append(child)
        if found:
            memo[cur] = True
            stack.pop()
        elif pending:
            stack.extend(pending)
        else:
            memo[cur] = False
            stack.pop()
        if len(memo) > cap:
            raise ResourceLimitError(
                f"membership memo for {spec.describe()} exceeded {cap} entries"
            )
    return memo[point]


def is_member(e: Sequence[int], spec: SemigroupSpec) -> bool:
    """True iff e is a finite N-linear combination of the spec's generators.

    Total: a degree that is not a multiple of d simply returns False.
    """
    point = tuple(ExponentVector(e))
    if len(point) != spec.n:
        raise InvalidSpecError(f"point has arity {len(point)}, spec has n={spec.n}")
    if sum(point) % spec.d != 0:
        return False
    return _member(point, spec)


@dataclass(frozen=True)
class Decomposition:
    """A witness that ``target`` is a sum of generators.

    All generators share degree d, so the number of parts is forced to be
    degree(target)/d.
    """

    parts: tuple[ExponentVector, ...]
    target: ExponentVector

    def __post_init__(self) -> None:
        total = tuple(sum(c) for c in zip(*self.parts)) if self.parts else (0,) * len(self.target)
        if total != tuple(self.target):
            raise InvalidSpecError("decomposition parts do not sum to the target")


def decompose(e: Sequence[int], spec: SemigroupSpec) -> Decomposition | None:
    """A membership witness, or None for non-members.

    Deterministic: at every step the first fitting generator in descending
    lexicographic order is taken (tie-breaking is cosmetic, the boolean
    answer never depends on it).
    """
    target = ExponentVector(e)
    if not is_member(target, spec):
        return None
    gens = _generators_descending(spec)
    parts: list[ExponentVector] = []
    cur = tuple(target)
    while any(cur):
        for g in gens:
            child = _sub(cur, g)
            if child is not None and _member(child, spec):
                parts.append(ExponentVector(g))
                cur = child
                break
        else:  # pragma: no cover - membership of cur guarantees a step exists
            raise AssertionError(f"no generator step from member {cur}")
    return Decomposition(parts=tuple(parts), target=target)


def _pack(v: Sequence[int]) -> int:
    code = 0
    for c in v:
        code = (code << _SHIFT) | c
    return code


def _unpack(code: int, n: int) -> tuple[int, ...]:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        out[i] = code & _MASK
        code >>= _SHIFT
    return tuple(out)


def _layer_step(codes: frozenset[int], gen_codes: tuple[int, ...]) -> frozenset[int]:
    return frozenset(v + g for v in codes for g in gen_codes)


@functools.lru_cache(maxsize=512)
def _layer_codes(spec: SemigroupSpec, t: int) -> frozenset[int]:
    if t == 0:
        return frozenset([0])
    if t * spec.d >= _COORD_LIMIT:
        raise ResourceLimitError(
            f"layer degree {t * spec.d} exceeds the packed-coordinate limit"
        )
    if spec.kind is SpecKind.FULL_VERONESE:
        return _full_layer_codes(spec.n, spec.d, t)
    gen_codes = tuple(_pack(g) for g in spec.generators())
    return _layer_step(_layer_codes(spec, t - 1), gen_codes)


@functools.lru_cache(maxsize=512)
def _full_layer_codes(n: int, d: int, t: int) -> frozenset[int]:
    # Layer t of the unpinched slice is every composition of t*d: any vector
    # of degree t*d splits greedily into t degree-d parts.
    return frozenset(_pack(c) for c in weak_compositions(t * d, n))


def layer_members(spec: SemigroupSpec, t: int) -> tuple[ExponentVector, ...]:
    """All sums of exactly t generators, i.e. the members of degree t*d.

    Returned sorted for deterministic iteration.
    """
    if t < 0:
        raise InvalidSpecError(f"layer index must be nonnegative, got {t}")
    codes = _layer_codes(spec, t)
    return tuple(
        ExponentVector(v) for v in sorted(_unpack(c, spec.n) for c in codes)
    )

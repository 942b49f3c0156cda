"""Command-line surface: per-spec analysis, verification sweeps, gap listings.

Exit codes: 0 success, 1 verification failure, 2 usage or spec error,
3 resource-cap failure.  JSON goes to stdout (schema version "1", sorted
keys, 1-based axes), diagnostics to stderr.  Identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations
from typing import Any, Sequence

from veropinch.charp import (
    Characteristic,
    Fte,
    INJECTIVE_EVIDENCE,
    f_singularity,
    frobenius_on_cokernel,
    multipinch_nilpotency_index,
)
from veropinch.classify import (
    ClassificationReport,
    Normalization,
    a_invariant,
    classify,
    quotient_basis,
)
from veropinch.exceptions import InvalidSpecError, ResourceLimitError
from veropinch.gapset import (
    cokernel_model,
    gap_set_bruteforce,
    gap_set_closed_form,
    multipinch_coordinate_bound,
    multipinch_gap_set,
    verify_gap_equivalence,
    verify_principality,
)
from veropinch.lattice import (
    ExponentVector,
    SemigroupSpec,
    SpecKind,
    pinch_spec,
    veronese_generators,
)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

SCHEMA = "1"


def _parse_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise InvalidSpecError(f"cannot parse vector {text!r}: comma-separated integers expected") from exc


def _parse_primes(text: str) -> tuple[int, ...]:
    return tuple(Characteristic(int(part)).p for part in text.split(","))


def _parse_range(text: str) -> tuple[int, ...]:
    """'2..4' -> (2, 3, 4); a bare integer is a one-element range."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo_i, hi_i = int(lo), int(hi)
        if hi_i < lo_i:
            raise InvalidSpecError(f"empty range {text!r}")
        return tuple(range(lo_i, hi_i + 1))
    return (int(text),)


def _build_spec(args: argparse.Namespace) -> SemigroupSpec:
    if getattr(args, "pinch", None) and getattr(args, "remove", None):
        raise InvalidSpecError("--pinch and --remove are mutually exclusive")
    if getattr(args, "pinch", None):
        if args.multipinch:
            raise InvalidSpecError("--multipinch goes with --remove, not --pinch")
        removed = [_parse_vector(args.pinch)]
        return pinch_spec(args.n, args.d, removed)
    removed = [_parse_vector(v) for v in (args.remove or [])]
    return pinch_spec(args.n, args.d, removed, multipinch=args.multipinch)


def _vec(v: Sequence[int]) -> list[int]:
    return list(v)


def _spec_payload(spec: SemigroupSpec) -> dict[str, Any]:
    return {
        "n": spec.n,
        "d": spec.d,
        "kind": spec.kind.value,
        "removed": [_vec(m) for m in spec.removed],
        "generator_count": len(spec.generators()),
        "generators": [_vec(g) for g in spec.generators()],
    }


def _gap_payload(spec: SemigroupSpec, max_degree: int) -> dict[str, Any]:
    if spec.kind is SpecKind.SINGLE_PINCH:
        gap = gap_set_closed_form(spec)
        payload: dict[str, Any] = {
            "family": gap.kind.value,
            "finite": gap.is_finite,
            "truncation_degree": max_degree,
        }
        if gap.axes is not None:
            payload["axes"] = [gap.axes[0] + 1, gap.axes[1] + 1]
            payload["d"] = gap.d
        if gap.is_finite:
            payload["members"] = [_vec(v) for v in gap.members]
        else:
            payload["sample"] = [_vec(v) for v in gap.materialize(max_degree)]
        return payload
    if spec.kind is SpecKind.MULTI_PINCH:
        members = multipinch_gap_set(spec)
        return {
            "family": "finite",
            "finite": True,
            "complete": True,
            "members": [_vec(v) for v in members],
            "coordinate_bound": multipinch_coordinate_bound(spec.n, spec.d),
        }
    return {"family": "finite", "finite": True, "members": []}


def _classification_payload(report: ClassificationReport) -> dict[str, Any]:
    return {
        "dimension": report.dimension,
        "depth": report.depth,
        "cohen_macaulay": report.cohen_macaulay,
        "generalized_cohen_macaulay": report.generalized_cm,
        "gorenstein": report.gorenstein.value,
        "complete_intersection": report.complete_intersection.value,
        "a_invariant": report.a_invariant,
        "normalization": report.normalization.value,
    }


def _fte_payload(f: Fte) -> dict[str, Any]:
    return {"kind": f.kind, "value": f.value, "formula": f.formula, "rationale": f.rationale}


def _frobenius_payload(spec: SemigroupSpec, p: int, max_degree: int) -> dict[str, Any]:
    report = f_singularity(spec, p)
    payload: dict[str, Any] = {
        "p": p,
        "type": report.ftype.value,
        "rationale": report.rationale,
        "f_pure": report.f_pure,
        "hsl": report.hsl,
        "fte": _fte_payload(report.fte),
        "notes": list(report.notes),
    }
    if spec.kind is SpecKind.SINGLE_PINCH and spec.pinched().max_entry() < spec.d:
        trace = frobenius_on_cokernel(cokernel_model(spec), p, max_degree)
        payload["cokernel_trace"] = {
            "nilpotency_index": trace.nilpotency_index,
            "truncation_degree": trace.truncation,
            "traced": len(trace.action),
            "killed": sum(1 for s in trace.action if s.killed),
        }
    if spec.kind is SpecKind.MULTI_PINCH:
        payload["cokernel_trace"] = {
            "nilpotency_index": multipinch_nilpotency_index(spec, p),
        }
    return payload


def cmd_analyze(args: argparse.Namespace) -> int:
    spec = _build_spec(args)
    if spec.kind is SpecKind.FULL_VERONESE:
        raise InvalidSpecError("analyze needs a removed generator (--pinch or --remove)")
    max_degree = args.tmax * spec.d
    report = classify(spec)
    payload: dict[str, Any] = {
        "schema": SCHEMA,
        "command": "analyze",
        "spec": _spec_payload(spec),
        "gap": _gap_payload(spec, max_degree),
        "classification": _classification_payload(report),
        "rationale": {k: v for k, v in report.rationale},
        "frobenius": [_frobenius_payload(spec, p, max_degree) for p in args.chars],
    }
    verification: dict[str, Any] = {}
    if spec.kind is SpecKind.SINGLE_PINCH:
        ok, diff = verify_gap_equivalence(spec, args.tmax)
        verification["gap_equivalence"] = {
            "t_max": args.tmax,
            "ok": ok,
            "discrepancies": [_vec(v) for v in diff],
        }
        ck = cokernel_model(spec)
        p_ok, bad = verify_principality(ck, max_degree)
        verification["principality"] = {
            "max_degree": max_degree,
            "ok": p_ok,
            "counterexamples": [_vec(v) for v in bad],
        }
    else:
        members = multipinch_gap_set(spec)
        bound = multipinch_coordinate_bound(spec.n, spec.d)
        verification["coordinate_bound"] = {
            "bound": bound,
            "ok": all(v.max_entry() < bound for v in members),
        }
    payload["verification"] = verification
    payload["caveats"] = _caveats(spec, report, payload["frobenius"])
    _emit(payload, args.format)
    if not all(section["ok"] for section in verification.values()):
        return EXIT_VERIFICATION
    return EXIT_OK


def _caveats(
    spec: SemigroupSpec,
    report: ClassificationReport,
    frobenius: Sequence[dict[str, Any]],
) -> list[str]:
    """Open questions the report touches, stated once each."""
    out = []
    if spec.kind is SpecKind.MULTI_PINCH:
        out.append(
            "which generator subsets give Cohen-Macaulay rings in general is open; "
            "this removal family always has depth 1"
        )
    if any(f["f_pure"] == "unknown" for f in frobenius):
        out.append(
            "F-purity for quadratic pinches beyond three variables in odd "
            "characteristic is an open question"
        )
    if any(f["fte"]["kind"] == "unknown" for f in frobenius):
        out.append(
            "no finiteness result is known for the Frobenius test exponent in "
            "this F-injective non-Cohen-Macaulay family"
        )
    if report.normalization is not Normalization.SELF_NORMAL and any(
        f["type"] in ("F-nilpotent", "F-injective") for f in frobenius
    ):
        out.append(
            "the Frobenius classification is read off the embedding into the "
            "ambient degree-d slice; intrinsic semigroup criteria for these "
            "singularity classes are open"
        )
    return out


def cmd_gaps(args: argparse.Namespace) -> int:
    spec = _build_spec(args)
    bound = args.bound if args.bound is not None else 6 * spec.d
    payload: dict[str, Any] = {
        "schema": SCHEMA,
        "command": "gaps",
        "spec": _spec_payload(spec),
        "bound_degree": bound,
    }
    if spec.kind is SpecKind.MULTI_PINCH:
        members = multipinch_gap_set(spec)
        payload["complete"] = True
        payload["members"] = [_vec(v) for v in members if v.degree() <= bound]
        payload["total_gap_size"] = len(members)
        payload["family"] = {"family": "finite"}
    elif spec.kind is SpecKind.SINGLE_PINCH:
        gap = gap_set_closed_form(spec)
        payload["members"] = [_vec(v) for v in gap.materialize(bound)]
        payload["complete"] = gap.is_finite
        family: dict[str, Any] = {"family": gap.kind.value}
        if gap.axes is not None:
            family["axes"] = [gap.axes[0] + 1, gap.axes[1] + 1]
            family["d"] = gap.d
        payload["family"] = family
    else:
        payload["members"] = []
        payload["complete"] = True
        payload["family"] = {"family": "finite"}
    _emit(payload, args.format)
    return EXIT_OK


def _sweep_gap_equivalence(ns: Sequence[int], ds: Sequence[int], t_max: int) -> list[dict[str, Any]]:
    rows = []
    for n in ns:
        for d in ds:
            for m in veronese_generators(n, d).members:
                spec = pinch_spec(n, d, [m])
                ok, diff = verify_gap_equivalence(spec, t_max)
                rows.append(
                    {
                        "check": "gap-equivalence",
                        "spec": f"n={n} d={d} m={tuple(m)}",
                        "ok": ok,
                        "detail": f"{len(diff)} discrepancies" if diff else "",
                    }
                )
    return rows


def _sweep_socle(ds: Sequence[int]) -> list[dict[str, Any]]:
    rows = []
    for d in ds:
        if d < 3:
            continue
        spec = pinch_spec(2, d, [(d - 1, 1)])
        qb = quotient_basis(spec)
        expected_socle = (ExponentVector((d - 1, d + 1)),)
        ok = (
            len(qb.basis) == d
            and qb.socle == expected_socle
            and a_invariant(qb, d) == 0
        )
        rows.append(
            {
                "check": "socle",
                "spec": f"n=2 d={d} m={(d - 1, 1)}",
                "ok": ok,
                "detail": f"|basis|={len(qb.basis)} socle={[tuple(s) for s in qb.socle]}",
            }
        )
    return rows


def _sweep_frobenius(
    ns: Sequence[int], ds: Sequence[int], chars: Sequence[int]
) -> list[dict[str, Any]]:
    rows = []
    for n in ns:
        for d in ds:
            for m in veronese_generators(n, d).members:
                if max(m) >= d:
                    continue
                spec = pinch_spec(n, d, [m])
                ck = cokernel_model(spec)
                for p in chars:
                    trace = frobenius_on_cokernel(ck, p, 6 * d)
                    killed = all(s.killed for s in trace.action)
                    if d == 2 and p > 2:
                        ok = trace.nilpotency_index == INJECTIVE_EVIDENCE and not any(
                            s.killed for s in trace.action
                        )
                        expectation = "persists"
                    else:
                        ok = trace.nilpotency_index == 1 and killed
                        expectation = "one-step kill"
                    rows.append(
                        {
                            "check": "frobenius",
                            "spec": f"n={n} d={d} m={tuple(m)} p={p}",
                            "ok": ok,
                            "detail": expectation,
                        }
                    )
    return rows


def _removal_sets(small: Sequence[ExponentVector]) -> list[tuple[ExponentVector, ...]]:
    # exhaustive for few removable generators; extremes (singletons, the
    # maximal removal, and its near-misses) once the power set gets large
    if 2 ** len(small) <= 64:
        sets: list[tuple[ExponentVector, ...]] = []
        for size in range(1, len(small) + 1):
            sets.extend(combinations(small, size))
        return sets
    sets = [tuple([m]) for m in small]
    sets.extend(tuple(m for m in small if m != skip) for skip in small)
    sets.append(tuple(small))
    return sets


def _sweep_multipinch(ns: Sequence[int], ds: Sequence[int], t_max: int) -> list[dict[str, Any]]:
    rows = []
    for n in ns:
        for d in ds:
            if d <= 2:
                continue
            small = [m for m in veronese_generators(n, d).members if max(m) < d - 1]
            bound = multipinch_coordinate_bound(n, d)
            for removal in _removal_sets(small):
                spec = pinch_spec(n, d, removal, multipinch=True)
                gaps = gap_set_bruteforce(spec, t_max)
                ok = all(v.max_entry() < bound for v in gaps)
                rows.append(
                    {
                        "check": "multipinch-bound",
                        "spec": f"n={n} d={d} removed={[tuple(m) for m in removal]}",
                        "ok": ok,
                        "detail": f"{len(gaps)} gaps below entry bound {bound}",
                    }
                )
    return rows


def cmd_verify(args: argparse.Namespace) -> int:
    ns = _parse_range(args.n)
    ds = _parse_range(args.d)
    selected = {
        "gaps": args.gaps,
        "socle": args.socle,
        "frobenius": args.frobenius,
        "multipinch": args.multipinch,
    }
    if not any(selected.values()):
        selected = {key: True for key in selected}
    rows: list[dict[str, Any]] = []
    if selected["gaps"]:
        rows.extend(_sweep_gap_equivalence(ns, ds, args.tmax))
    if selected["socle"]:
        rows.extend(_sweep_socle(ds))
    if selected["frobenius"]:
        rows.extend(_sweep_frobenius(ns, ds, args.chars))
    if selected["multipinch"]:
        rows.extend(_sweep_multipinch(ns, ds, args.tmax))
    ok = all(row["ok"] for row in rows)
    if args.format == "json":
        _emit({"schema": SCHEMA, "command": "verify", "ok": ok, "results": rows}, "json")
    else:
        for row in rows:
            status = "pass" if row["ok"] else "FAIL"
            detail = f"  ({row['detail']})" if row["detail"] else ""
            print(f"[{status}] {row['check']:18s} {row['spec']}{detail}")
        print(f"{'all pass' if ok else 'FAILURES'}: {sum(r['ok'] for r in rows)}/{len(rows)} checks")
    return EXIT_OK if ok else EXIT_VERIFICATION


def _emit(payload: dict[str, Any], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
        return
    for line in _text_lines(payload, indent=0):
        print(line)


def _text_lines(value: Any, indent: int) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(value, dict):
        for key in sorted(value):
            inner = value[key]
            if isinstance(inner, (dict, list)) and inner and not _is_flat_list(inner):
                lines.append(f"{pad}{key}:")
                lines.extend(_text_lines(inner, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_render_flat(inner)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_text_lines(item, indent + 1))
            else:
                lines.append(f"{pad}- {item}")
    else:
        lines.append(f"{pad}{value}")
    return lines


def _is_flat_list(value: Any) -> bool:
    return isinstance(value, list) and all(
        isinstance(item, (int, str, bool)) or (isinstance(item, list) and all(isinstance(c, int) for c in item))
        for item in value
    )


def _render_flat(value: Any) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(_render_flat(v) for v in value) + "]"
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "null"
    return str(value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="veropinch",
        description="Exact gap sets, classification, and Frobenius behaviour of pinched degree-d semigroups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="full report for one spec")
    _add_spec_flags(analyze)
    analyze.add_argument("--char", dest="chars", type=_parse_primes, default=(),
                         help="comma-separated primes, e.g. 2,7")
    analyze.add_argument("--tmax", type=int, default=6, help="verification layer bound")
    analyze.add_argument("--format", choices=("text", "json"), default="text")
    analyze.set_defaults(func=cmd_analyze)

    gaps = sub.add_parser("gaps", help="list missing vectors")
    _add_spec_flags(gaps)
    gaps.add_argument("--bound", type=int, default=None, help="degree bound (default 6d)")
    gaps.add_argument("--format", choices=("text", "json"), default="text")
    gaps.set_defaults(func=cmd_gaps)

    verify = sub.add_parser("verify", help="oracle sweeps; nonzero exit on any discrepancy")
    verify.add_argument("--n", default="2..3", help="range, e.g. 2..4")
    verify.add_argument("--d", default="2..4", help="range, e.g. 2..5 (socle sweep needs d >= 3)")
    verify.add_argument("--tmax", type=int, default=6)
    verify.add_argument("--chars", type=_parse_primes, default=(2, 3, 5))
    verify.add_argument("--gaps", action="store_true", help="closed form vs brute force")
    verify.add_argument("--socle", action="store_true", help="quotient basis and socle suite")
    verify.add_argument("--frobenius", action="store_true", help="trace kills and parity dichotomy")
    verify.add_argument("--multipinch", action="store_true", help="coordinate bound sweep")
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.set_defaults(func=cmd_verify)
    return parser


def _add_spec_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--n", type=int, required=True, help="number of variables")
    sub.add_argument("--d", type=int, required=True, help="generator degree")
    sub.add_argument("--pinch", help="single removed vector, e.g. 1,1,1")
    sub.add_argument("--remove", action="append",
                     help="removed vector (repeatable), e.g. --remove 2,2")
    sub.add_argument("--multipinch", action="store_true",
                     help="treat --remove vectors as a multipinch")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands mirror the library: ``hilbert``, ``shift``, ``duality``,
``molien``, ``sympow``, ``invgen``, ``descent`` and ``table``.  Ring and
group arguments are file paths; a bare name that is not a file is looked up
among the bundled fixtures, so ``gorenstein-kit shift taf_d15`` works out of
the box.  Every subcommand accepts ``--json`` for machine output: a single
newline-terminated JSON object with a versioned ``schema`` field, all
rationals rendered as exact ``p/q`` strings.  The environment variable
``GORENSTEIN_KIT_MAX_ORDER`` overrides the group-enumeration cap.

Exit status is 0 on success (for ``table``: all rows PASS), 1 on a
computation or input error, 2 on bad usage.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .dataset import TABLE_ROWS, fixture_path
from .descent import (
    BlockMismatch,
    NotPolynomialBase,
    cross_check_invariant_shift,
    descent_report,
)
from .duality import DualityReport, duality_report
from .graded_ring import (
    GradedModuleSeries,
    RingPresentation,
    gorenstein_shift_formula,
    gorenstein_shift_stanley,
    hilbert_series,
    krull_dimension,
)
from .invariants import (
    DEFAULT_ORDER_CAP,
    GradedGroupRep,
    NoBuiltinCharacterTable,
    RationalCharacterTable,
    builtin_character_table,
    decompose,
    format_polynomial,
    invariant_basis,
    molien_series,
    sym_power_character,
)
from .records import (
    GroupInputRecord,
    ParseError,
    RingInputRecord,
    parse_group_record,
    parse_ring_record,
)
from .series import HilbertSeries

SCHEMA_PREFIX = "gorenstein-kit"
MAX_ORDER_ENV = "GORENSTEIN_KIT_MAX_ORDER"


def _order_cap() -> int:
    raw = os.environ.get(MAX_ORDER_ENV)
    if raw is None:
        return DEFAULT_ORDER_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_ORDER_ENV} must be a positive integer, got {raw!r}")
    if cap < 1:
        raise ValueError(f"{MAX_ORDER_ENV} must be a positive integer, got {raw!r}")
    return cap


def _resolve_input(arg: str) -> Path:
    path = Path(arg)
    if path.is_file():
        return path
    return fixture_path(arg)


def _load_ring(arg: str) -> tuple[RingInputRecord, RingPresentation]:
    path = _resolve_input(arg)
    record = parse_ring_record(path.read_text(), source=str(path))
    return record, record.to_presentation()


def _load_group(
    arg: str,
) -> tuple[GroupInputRecord, GradedGroupRep, RationalCharacterTable | None]:
    path = _resolve_input(arg)
    record = parse_group_record(path.read_text(), source=str(path))
    group, table = record.build(cap=_order_cap())
    return record, group, table


def _ensure_grading_matches(p: RingPresentation, group: GradedGroupRep) -> None:
    if list(p.generator_degrees) != list(group.graded_degrees):
        raise BlockMismatch(
            f"group grading {list(group.graded_degrees)} does not match "
            f"generator degrees {list(p.generator_degrees)} of {p.name}"
        )


# -- rendering helpers ---------------------------------------------------------


def _frac_str(x: Fraction) -> str:
    return str(x)


def _ring_json(p: RingPresentation) -> dict:
    return {
        "name": p.name,
        "coefficients": p.coefficient_label,
        "generators": [[s, d] for s, d in p.generators],
        "relations": [[s, d] for s, d in p.relations],
        "regular_sequence_asserted": p.regular_sequence_asserted,
    }


def _series_json(series: HilbertSeries) -> dict:
    return {
        "display": str(series),
        "numerator": [[e, _frac_str(c)] for e, c in series.numerator.terms()],
        "denominator_degrees": list(series.denominator_degrees),
    }


def _module_json(m: GradedModuleSeries, lo: int, hi: int) -> dict:
    return {
        "label": m.label,
        "shift": m.shift,
        "dualized": m.dualized,
        "series": _series_json(m.series),
        "window": {
            "from": lo,
            "to": hi,
            "coefficients": [_frac_str(c) for c in m.expand(lo, hi)],
        },
    }


def _coefficient_rows(series: HilbertSeries, lo: int, hi: int) -> list[list]:
    return [[k, _frac_str(c)] for k, c in zip(range(lo, hi + 1), series.expand(lo, hi))]


def _emit(payload: dict, json_mode: bool, lines: list[str]) -> None:
    if json_mode:
        sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def _ring_header(p: RingPresentation) -> list[str]:
    gens = " ".join(f"{s}:{d}" for s, d in p.generators)
    lines = [f"ring {p.name}" + (f"  (coefficients {p.coefficient_label})" if p.coefficient_label else "")]
    lines.append(f"  generators: {gens}")
    if p.relations:
        rels = " ".join(f"{s}:{d}" for s, d in p.relations)
        lines.append(f"  relations:  {rels}")
    return lines


# -- subcommands ----------------------------------------------------------------


def cmd_hilbert(args: argparse.Namespace) -> int:
    _, p = _load_ring(args.ring)
    series = hilbert_series(p)
    hi = args.max_degree
    payload = {
        "schema": f"{SCHEMA_PREFIX}/hilbert/1",
        "ring": _ring_json(p),
        "series": _series_json(series),
        "coefficients": _coefficient_rows(series, 0, hi),
    }
    lines = _ring_header(p)
    lines.append(f"  hilbert series: {series}")
    lines.append(f"  coefficients 0..{hi}:")
    for k, c in zip(range(0, hi + 1), series.expand(0, hi)):
        if c:
            lines.append(f"    t^{k}: {c}")
    _emit(payload, args.json, lines)
    return 0


def cmd_shift(args: argparse.Namespace) -> int:
    _, p = _load_ring(args.ring)
    dim = krull_dimension(p)
    by_formula = gorenstein_shift_formula(p)
    by_series = gorenstein_shift_stanley(hilbert_series(p), dim)
    agree = by_formula == by_series
    payload = {
        "schema": f"{SCHEMA_PREFIX}/shift/1",
        "ring": _ring_json(p),
        "krull_dimension": dim,
        "shift_by_formula": by_formula,
        "shift_by_series": by_series,
        "agree": agree,
    }
    lines = _ring_header(p)
    lines.append(f"  krull dimension: {dim}")
    lines.append(f"  gorenstein shift by degree formula:      {by_formula}")
    lines.append(f"  gorenstein shift by functional equation: {by_series}")
    lines.append(f"  agreement: {'yes' if agree else 'NO -- MISMATCH'}")
    _emit(payload, args.json, lines)
    return 0


def _duality_json(report: DualityReport) -> dict:
    a = report.shift_a
    return {
        "ring": _ring_json(report.presentation),
        "krull_dimension": report.dim,
        "gorenstein_shift": a,
        "anderson_shift_exponent": report.anderson_shift,
        "anderson_selfdual_display": report.anderson_selfdual_display,
        "splitting": report.splitting.value,
        "recovery_hypotheses_hold": report.recovery_hypotheses_hold,
        "gamma": _module_json(report.gamma_series, a - 24, a),
        "cech_ring_part": _module_json(report.cech_ring_part, 0, 24),
        "cech_dual_part": _module_json(report.cech_dual_part, a + 1 - 24, a + 1),
    }


def cmd_duality(args: argparse.Namespace) -> int:
    _, p = _load_ring(args.ring)
    report = duality_report(p)
    payload = {"schema": f"{SCHEMA_PREFIX}/duality/1", **_duality_json(report)}
    first, second = report.display_strings()
    lines = _ring_header(p)
    lines.append(f"  hilbert series: {hilbert_series(p)}")
    lines.append(f"  krull dimension {report.dim}, gorenstein shift a = {report.shift_a}")
    lines.append(f"  torsion part:   {report.gamma_series.label}  = Sigma^{report.shift_a} dual(r_*)")
    lines.append(
        f"  localized ring: {report.cech_ring_part.label} (+) {report.cech_dual_part.label}"
        f"   [{report.splitting.value}]"
    )
    lines.append(f"  anderson: {second}, i.e. {first}")
    lines.append(
        "  duality recovery range (shift <= -2, torsion vanishing above it): "
        + ("yes" if report.recovery_hypotheses_hold else "no")
    )
    _emit(payload, args.json, lines)
    return 0


def cmd_molien(args: argparse.Namespace) -> int:
    _, p = _load_ring(args.ring)
    _, group, table = _load_group(args.group)
    _ensure_grading_matches(p, group)
    report = molien_series(group, twist=args.twist, table=table)
    hi = args.max_degree
    relations_ignored = bool(p.relations)
    payload = {
        "schema": f"{SCHEMA_PREFIX}/molien/1",
        "ring": _ring_json(p),
        "group": group.name,
        "group_order": group.order,
        "twist": report.twist,
        "series": _series_json(report.series),
        "coefficients": _coefficient_rows(report.series, 0, hi),
        "polynomial_degrees": list(report.polynomial_degrees)
        if report.polynomial_degrees is not None
        else None,
        "pseudoreflection_count": report.pseudoreflection_count,
        "relations_ignored": relations_ignored,
    }
    lines = _ring_header(p)
    lines.append(f"  group {group.name} of order {group.order}, twist {report.twist}")
    if relations_ignored:
        lines.append(
            "  note: relations ignored; this is the invariant series of the free"
            " ring on the generators"
        )
    lines.append(f"  molien series: {report.series}")
    if report.polynomial_degrees is not None:
        lines.append(f"  polynomial invariant degrees: {list(report.polynomial_degrees)}")
    else:
        lines.append("  invariants are not polynomial at this rank")
    lines.append(f"  pseudoreflections: {report.pseudoreflection_count}")
    lines.append(f"  coefficients 0..{hi}:")
    for k, c in zip(range(0, hi + 1), report.series.expand(0, hi)):
        if c:
            lines.append(f"    t^{k}: {c}")
    _emit(payload, args.json, lines)
    return 0


def _table_for(group: GradedGroupRep, table: RationalCharacterTable | None) -> RationalCharacterTable:
    if table is not None:
        return table
    try:
        return builtin_character_table(group)
    except NoBuiltinCharacterTable as exc:
        raise NoBuiltinCharacterTable(
            f"{exc}; supply a [character_table] section in the group file"
        ) from exc


def cmd_sympow(args: argparse.Namespace) -> int:
    _, p = _load_ring(args.ring)
    _, group, table = _load_group(args.group)
    _ensure_grading_matches(p, group)
    table = _table_for(group, table)
    names = list(table.names)
    block_degrees = {d for d, _ in group.blocks}
    uniform_degree = block_degrees.pop() if len(block_degrees) == 1 else None
    rows = []
    for n in range(args.n + 1):
        values = sym_power_character(group, n)
        mults = decompose(values, table)
        rows.append((n, mults))
    payload = {
        "schema": f"{SCHEMA_PREFIX}/sympow/1",
        "ring": _ring_json(p),
        "group": group.name,
        "irreducibles": names,
        "multiplicities": [[n, list(m)] for n, m in rows],
    }
    lines = _ring_header(p)
    lines.append(f"  group {group.name}, decomposition against ({', '.join(names)})")
    for n, mults in rows:
        degree = f"  (degree {n * uniform_degree})" if uniform_degree else ""
        vec = "".join(str(m) for m in mults) if all(m < 10 for m in mults) else str(mults)
        lines.append(f"    Sym^{n}: ({vec}){degree}")
    _emit(payload, args.json, lines)
    return 0


def cmd_invgen(args: argparse.Namespace) -> int:
    _, p = _load_ring(args.ring)
    _, group, _ = _load_group(args.group)
    _ensure_grading_matches(p, group)
    symbols = [s for s, _ in p.generators]
    basis = invariant_basis(group, args.degree)
    payload = {
        "schema": f"{SCHEMA_PREFIX}/invgen/1",
        "ring": _ring_json(p),
        "group": group.name,
        "degree": args.degree,
        "dimension": len(basis),
        "basis": [
            {
                "display": format_polynomial(poly, symbols),
                "terms": [
                    [list(exponents), _frac_str(c)] for exponents, c in sorted(poly.items(), reverse=True)
                ],
            }
            for poly in basis
        ],
    }
    lines = _ring_header(p)
    lines.append(
        f"  invariants of {group.name} in degree {args.degree}: dimension {len(basis)}"
    )
    for poly in basis:
        lines.append(f"    {format_polynomial(poly, symbols)}")
    _emit(payload, args.json, lines)
    return 0


def cmd_descent(args: argparse.Namespace) -> int:
    _, p = _load_ring(args.ring)
    _, group, _ = _load_group(args.group)
    try:
        report = descent_report(p, group)
    except NotPolynomialBase:
        base = duality_report(p)
        payload = {
            "schema": f"{SCHEMA_PREFIX}/descent/1",
            "descent": None,
            "note": (
                "descent prediction out of regime: the base ring is not"
                " polynomial, so only the base-ring duality report is given"
            ),
            "base_duality": _duality_json(base),
        }
        lines = _ring_header(p)
        lines.append(
            "  note: base ring is not polynomial; descent prediction out of"
            " regime, base-ring report follows"
        )
        lines.append(f"  gorenstein shift a = {base.shift_a}")
        first, second = base.display_strings()
        lines.append(f"  anderson: {second}, i.e. {first}")
        _emit(payload, args.json, lines)
        return 0
    consistent = cross_check_invariant_shift(report)
    payload = {
        "schema": f"{SCHEMA_PREFIX}/descent/1",
        "descent": {
            "ring": _ring_json(p),
            "group": group.name,
            "base_shift": report.base_shift_a,
            "invariant_degrees": list(report.invariant_degrees),
            "solomon_supplement": report.solomon_b,
            "descended_gorenstein_shift": report.descended_gorenstein_shift,
            "descended_anderson_shift": report.descended_anderson_shift,
            "solomon_verified": report.solomon_verified,
            "cross_check": consistent,
            "invariant_ring": _ring_json(report.invariant_presentation),
            "invariant_series": _series_json(report.invariant_series),
            "prediction_only": True,
        },
        "note": "for non-rational coefficients this is a prediction, not a theorem",
        "base_duality": None,
    }
    lines = _ring_header(p)
    lines.append(f"  group {group.name} of order {group.order}")
    lines.append(f"  base gorenstein shift a = {report.base_shift_a}")
    lines.append(f"  invariant degrees: {list(report.invariant_degrees)}")
    lines.append(f"  solomon supplement b = {report.solomon_b}"
                 + ("  (verified)" if report.solomon_verified else "  (FAILED verification)"))
    lines.append(f"  descended gorenstein shift a+b = {report.descended_gorenstein_shift}")
    lines.append(f"  descended anderson shift a+b+1 = {report.descended_anderson_shift}")
    lines.append(f"  cross-check of the invariant ring's shift: {'ok' if consistent else 'MISMATCH'}")
    lines.append("  (prediction: exact for rational coefficients, necessary condition otherwise)")
    _emit(payload, args.json, lines)
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    rows = []
    all_pass = True
    for row in TABLE_ROWS:
        computed = gorenstein_shift_formula(row.presentation())
        ok = computed == row.expected_shift_a
        all_pass = all_pass and ok
        rows.append((row, computed, ok))
    payload = {
        "schema": f"{SCHEMA_PREFIX}/table/1",
        "rows": [
            {
                "name": row.name,
                "prime": row.prime_label,
                "group": row.group_label,
                "generator_degrees": list(row.generator_degrees),
                "relation_degree": row.relation_degree,
                "computed_shift": computed,
                "expected_shift": row.expected_shift_a,
                "pass": ok,
            }
            for row, computed, ok in rows
        ],
        "all_pass": all_pass,
    }
    header = f"{'name':<20} {'p':<12} {'group':<10} {'degrees':<12} {'rel':<5} {'a':>4} {'expected':>9}  status"
    lines = [header, "-" * len(header)]
    for row, computed, ok in rows:
        degrees = ",".join(str(d) for d in row.generator_degrees)
        rel = str(row.relation_degree) if row.relation_degree is not None else "-"
        lines.append(
            f"{row.name:<20} {row.prime_label:<12} {row.group_label:<10} "
            f"{degrees:<12} {rel:<5} {computed:>4} {row.expected_shift_a:>9}  "
            + ("PASS" if ok else "FAIL")
        )
    lines.append("all rows pass" if all_pass else "some rows fail")
    _emit(payload, args.json, lines)
    return 0 if all_pass else 1


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gorenstein-kit",
        description=(
            "Exact duality-shift arithmetic for graded complete intersections"
            " and their rings of invariants."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        sp.add_argument("--json", action="store_true", help="emit machine-readable JSON")
        return sp

    sp = add("hilbert", cmd_hilbert, "Hilbert series and coefficient table of a ring")
    sp.add_argument("ring")
    sp.add_argument("--max-degree", type=int, default=40)

    sp = add("shift", cmd_shift, "Gorenstein shift, by formula and by functional equation")
    sp.add_argument("ring")

    sp = add("duality", cmd_duality, "full duality report for a ring")
    sp.add_argument("ring")

    sp = add("molien", cmd_molien, "(twisted) Molien series of a group action")
    sp.add_argument("ring")
    sp.add_argument("group")
    sp.add_argument("--twist", default="trivial",
                    help="'trivial', 'det', or a character name from the table")
    sp.add_argument("--max-degree", type=int, default=48)

    sp = add("sympow", cmd_sympow, "symmetric-power decompositions against a character table")
    sp.add_argument("ring")
    sp.add_argument("group")
    sp.add_argument("--n", type=int, required=True, help="largest symmetric power")

    sp = add("invgen", cmd_invgen, "explicit invariant polynomials of one degree")
    sp.add_argument("ring")
    sp.add_argument("group")
    sp.add_argument("--degree", type=int, required=True)

    sp = add("descent", cmd_descent, "descended shift prediction for a ring of invariants")
    sp.add_argument("ring")
    sp.add_argument("group")

    add("table", cmd_table, "recompute the bundled twelve-row example table")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        # parse errors already carry their source:line location
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError, ArithmeticError, RuntimeError, LookupError) as exc:
        message = str(exc) or repr(exc)
        print(f"error: {type(exc).__name__}: {message}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

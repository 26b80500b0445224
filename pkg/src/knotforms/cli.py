"""Command-line interface.

Subcommands:
    invariants  full invariant report for Seifert-matrix files (or stdin)
    brieskorn   invariant pipeline for an exponent tuple
    cobordant   algebraic-cobordance verdict for two matrix files
    groups      table of embeddable-sphere groups over a dimension range
    handles     handle-presentation data for Seifert-matrix files

Exit codes: 0 success (and "cobordant"); 1 not-cobordant; 2 usage, parse or
semantic error; 3 cobordance unknown within the search bound.  Output is
byte-identical for identical inputs and flags.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .brieskorn import BrieskornGerm, germ_report
from .cobordism import algebraically_cobordant, eps_form_of
from .exact import det
from .laurent import NormalizationError
from .matrixfile import MatrixFileError, parse_matrix_file, serialize_matrix_file
from .quadratic import karl, levine_congruence_check, signature
from .report import ReportDocument, format_table
from .seifert import (SeifertMatrix, alexander_polynomial, intersection_form,
                      is_fibered_form, knot_module, monodromy)
from .spheres import bp_class, bp4k_order, bp4k2_group, embeddable_spheres_group, im_j_order

DEFAULT_RANK_WARN = 4096
DEFAULT_RANK_LIMIT = 65536
RANK_LIMIT_ENV = "KNOTFORMS_RANK_LIMIT"


def _rank_limit() -> int:
    raw = os.environ.get(RANK_LIMIT_ENV)
    if raw is None:
        return DEFAULT_RANK_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"error: {RANK_LIMIT_ENV} must be an integer, got {raw!r}")


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def invariant_report(s: SeifertMatrix) -> ReportDocument:
    doc = ReportDocument()
    doc.add("q", s.q)
    doc.add("rank", s.rank)
    doc.add("seifert_matrix", s.matrix)
    if s.rank == 0:
        doc.add("unknot", "all invariants trivial")
    inter = intersection_form(s)
    doc.add("intersection_form", inter)
    det_i = det(inter)
    doc.add("det_intersection", det_i)
    unimodular = det_i in (1, -1)
    doc.add("unimodular", unimodular)
    fibered = is_fibered_form(s)
    doc.add("fibered", fibered)
    doc.add("monodromy", monodromy(s) if fibered else None)
    doc.add("alexander_raw", alexander_polynomial(s, "raw"))
    try:
        doc.add("alexander_conway", alexander_polynomial(s, "conway"))
    except NormalizationError as exc:
        doc.add("alexander_conway", f"<error: {exc}>")
    module = knot_module(s)
    doc.add("elementary_divisors", list(module.divisors))
    if unimodular:
        if s.q % 2 == 0:
            doc.add("signature", signature(inter))
        else:
            doc.add("karl", karl(s))
            doc.add("levine_congruence", levine_congruence_check(s))
        cls = bp_class(s)
        doc.add("bp_group", cls.group.describe())
        if cls.sigma_over_8 is not None:
            doc.add("bp_class", f"{cls.sigma_over_8} "
                    f"(residue {cls.class_residue} mod group order)"
                    if cls.class_residue is not None else str(cls.sigma_over_8))
        else:
            doc.add("bp_class", cls.karl_value)
        doc.add("exotic", cls.is_exotic)
        for note in cls.notes:
            doc.add("note", note)
    else:
        doc.add("note", "intersection form not unimodular: boundary is not "
                        "a homotopy sphere; sphere-class invariants skipped")
    return doc


def brieskorn_report(germ: BrieskornGerm) -> ReportDocument:
    rep = germ_report(germ)
    doc = ReportDocument()
    doc.add("germ", str(germ))
    doc.add("q", rep.seifert.q)
    doc.add("milnor_number", rep.rank)
    doc.add("seifert_matrix", rep.seifert.matrix)
    doc.add("fibered", rep.fibered)
    doc.add("monodromy", rep.monodromy)
    doc.add("char_poly", rep.char_poly)
    doc.add("quasi_unipotent", rep.quasi_unipotent)
    doc.add("intersection_form", rep.intersection)
    doc.add("det_intersection", rep.det_intersection)
    doc.add("unimodular", rep.unimodular)
    doc.add("alexander_raw", rep.alexander_raw)
    doc.add("alexander_conway", rep.alexander_conway
            if rep.alexander_conway is not None
            else "<not normalizable: boundary is not a homotopy sphere>")
    if rep.signature is not None:
        doc.add("signature", rep.signature)
    if rep.karl_value is not None:
        doc.add("karl", rep.karl_value)
    if rep.bp is not None:
        doc.add("boundary_dim", rep.bp.boundary_dim)
        doc.add("bp_group", rep.bp.group.describe())
        if rep.bp.sigma_over_8 is not None:
            doc.add("bp_class", rep.bp.sigma_over_8)
        if rep.bp.karl_value is not None:
            doc.add("bp_class", rep.bp.karl_value)
        doc.add("exotic", rep.bp.is_exotic)
        for note in rep.bp.notes:
            doc.add("note", note)
    for anomaly in rep.anomalies:
        doc.add("anomaly", anomaly)
    return doc


def handles_report(s: SeifertMatrix) -> ReportDocument:
    from .links import handle_data
    data = handle_data(s)
    doc = ReportDocument()
    doc.add("q", s.q)
    doc.add("rank", data.rank)
    for (i, j), lk in sorted(data.linking.items()):
        doc.add(f"linking_{i + 1}_{j + 1}", lk)
    doc.add("framing_kind", data.framing_kind)
    if data.framings is not None:
        doc.add("framings", list(data.framings))
    return doc


def _render_file_report(path: str, kind: str, mode: str) -> str:
    s = parse_matrix_file(_read_input(path))
    doc = invariant_report(s) if kind == "invariants" else handles_report(s)
    if path != "-":
        doc.items.insert(0, ("input", path))
    return doc.render(mode)


def _cmd_matrix_files(args, kind: str) -> int:
    outputs: list[str] = []
    try:
        if args.jobs > 1 and len(args.paths) > 1 and "-" not in args.paths:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                futures = [pool.submit(_render_file_report, p, kind, args.format)
                           for p in args.paths]
                outputs = [f.result() for f in futures]
        else:
            outputs = [_render_file_report(p, kind, args.format) for p in args.paths]
    except MatrixFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write("\n".join(outputs) if len(outputs) > 1 else outputs[0])
    return 0


def _cmd_brieskorn(args) -> int:
    try:
        germ = BrieskornGerm(tuple(args.exponents))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    mu = germ.milnor_number
    limit = _rank_limit()
    if mu > limit:
        print(f"error: Milnor number {mu} exceeds the rank limit {limit} "
              f"(override with {RANK_LIMIT_ENV})", file=sys.stderr)
        return 2
    if mu > DEFAULT_RANK_WARN:
        print(f"warning: Milnor number {mu} is large; this will be slow",
              file=sys.stderr)
    doc = brieskorn_report(germ)
    if args.emit_matrix:
        text = serialize_matrix_file(brieskorn_seifert_for_emit(germ))
        if args.emit_matrix == "-":
            sys.stdout.write(text)
        else:
            with open(args.emit_matrix, "w", encoding="utf-8") as fh:
                fh.write(text)
    sys.stdout.write(doc.render(args.format))
    return 0


def brieskorn_seifert_for_emit(germ: BrieskornGerm) -> SeifertMatrix:
    from .brieskorn import brieskorn_seifert
    s = brieskorn_seifert(germ)
    # matrix files require q >= 1; a one-variable germ has q = 0
    return SeifertMatrix(s.matrix, q=max(s.q, 1))


def _cmd_cobordant(args) -> int:
    try:
        s1 = parse_matrix_file(_read_input(args.file_a))
        s2 = parse_matrix_file(_read_input(args.file_b))
    except (MatrixFileError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if s1.q % 2 != s2.q % 2:
        print(f"error: parity mismatch: q={s1.q} vs q={s2.q}", file=sys.stderr)
        return 2
    try:
        f1, f2 = eps_form_of(s1), eps_form_of(s2)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    verdict = algebraically_cobordant(f1, f2, bound=args.bound)
    doc = ReportDocument()
    doc.add("verdict", verdict.status)
    if verdict.witness is not None:
        doc.add("witness_basis", [list(v) for v in verdict.witness.basis])
    if verdict.obstruction is not None:
        doc.add("obstruction", verdict.obstruction.name)
        doc.add("certificate", verdict.obstruction.certificate)
    if verdict.status == "unknown-within-bound":
        doc.add("bound", args.bound)
        doc.add("note", "no metaboliser with basis entries within the bound; "
                        "existence beyond it is undecided")
    sys.stdout.write(doc.render(args.format))
    return {"cobordant": 0, "not-cobordant": 1, "unknown-within-bound": 3}[verdict.status]


def _group_cell(n: int) -> tuple[str, str]:
    verdict = embeddable_spheres_group(n)
    if verdict.kind == "trivial":
        if n <= 4:
            return "trivial (low dimension)", verdict.provenance
        if n % 2 == 0:
            return "trivial (even n)", verdict.provenance
        return "trivial (exceptional)", verdict.provenance
    if verdict.kind == "unknown":
        return "unknown", verdict.provenance
    return verdict.describe(), verdict.provenance


def _bp_cell(n: int) -> str:
    m = n + 1
    if m % 2 == 1:
        return "1"
    if n <= 6:
        return "1"
    if m % 4 == 0:
        return str(bp4k_order(m // 4))
    verdict = bp4k2_group((m - 2) // 4)
    return {"trivial": "1", "Z/2": "2", "unknown": "?"}[verdict.kind]


def _cmd_groups(args) -> int:
    lo = args.n_min
    hi = args.n_max if args.n_max is not None else lo
    if lo < 1 or hi < lo:
        print("error: need 1 <= N_MIN <= N_MAX", file=sys.stderr)
        return 2
    headers = ["n", "G^n", "|bP^(n+1)|", "im_J(4k-1)", "provenance"]
    rows = []
    for n in range(lo, hi + 1):
        cell, provenance = _group_cell(n)
        imj = str(im_j_order((n + 1) // 4)) if n % 4 == 3 else "-"
        rows.append([str(n), cell, _bp_cell(n), imj, provenance])
    sys.stdout.write(format_table(headers, rows, args.format))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotforms",
        description="Exact invariants of odd-dimensional knots and links "
                    "from Seifert matrices")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "machine"), default="text",
                       help="output mode (default: text)")

    p_inv = sub.add_parser("invariants", help="invariant report for matrix files")
    p_inv.add_argument("paths", nargs="+", metavar="FILE",
                       help="matrix files; '-' reads stdin")
    p_inv.add_argument("--jobs", type=int, default=1,
                       help="parallel workers for multiple files")
    add_format(p_inv)

    p_br = sub.add_parser("brieskorn", help="invariants of an exponent tuple")
    p_br.add_argument("exponents", nargs="+", type=int, metavar="A")
    p_br.add_argument("--emit-matrix", metavar="PATH",
                      help="also write the Seifert matrix as a matrix file")
    add_format(p_br)

    p_cob = sub.add_parser("cobordant", help="algebraic cobordance of two files")
    p_cob.add_argument("file_a", metavar="FILE_A")
    p_cob.add_argument("file_b", metavar="FILE_B")
    p_cob.add_argument("--bound", type=int, default=2,
                       help="entry bound for the metaboliser search (default 2)")
    add_format(p_cob)

    p_gr = sub.add_parser("groups", help="embeddable-sphere group table")
    p_gr.add_argument("n_min", type=int, metavar="N_MIN")
    p_gr.add_argument("n_max", type=int, nargs="?", default=None, metavar="N_MAX")
    add_format(p_gr)

    p_h = sub.add_parser("handles", help="handle-presentation data for matrix files")
    p_h.add_argument("paths", nargs="+", metavar="FILE")
    p_h.add_argument("--jobs", type=int, default=1)
    add_format(p_h)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "invariants":
        return _cmd_matrix_files(args, "invariants")
    if args.command == "handles":
        return _cmd_matrix_files(args, "handles")
    if args.command == "brieskorn":
        return _cmd_brieskorn(args)
    if args.command == "cobordant":
        return _cmd_cobordant(args)
    if args.command == "groups":
        return _cmd_groups(args)
    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())

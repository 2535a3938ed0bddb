"""Command-line front end.

Exit status: 0 when the property holds or the computation finished, 1 when
the property fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import io
import sys
from contextlib import redirect_stderr, redirect_stdout
from typing import Optional, Sequence

from .betti import graded_betti, render_diagram, render_triples
from .distractions import (
    distract_ideal,
    distraction_points,
    format_polynomial,
    is_radical_for,
    parse_matrix,
    poly_ideal_hilbert,
)
from .ideals import (
    artinian_hilbert_function,
    format_ideal,
    hilbert_function,
    is_artinian,
    is_strongly_stable,
    lex_segment,
    parse_ideal,
)
from .lefschetz import (
    check_rigidity,
    has_m_wlp_stable,
    has_maximal_betti,
    random_m_wlp_ideal,
    random_strongly_stable,
    wlp_criterion,
)
from .lefschetz import build_w
from .monomials import format_monomial, variable_names
from .osequences import check_m_times_wl, parse_sequence

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_ideal_file(text: str):
    """Parse an ideal file, warning on stderr when generators were redundant."""
    ideal, redundant = parse_ideal(text)
    if redundant:
        dropped = ", ".join(format_monomial(m) for m in redundant)
        print(f"warning: input generators are not minimal; dropped {dropped}",
              file=sys.stderr)
    return ideal


class _Out:
    def __init__(self, fmt: str):
        self.fmt = fmt
        self.lines = []

    def kv(self, key: str, value) -> None:
        if self.fmt == "tsv":
            self.lines.append(f"{key}\t{value}")
        else:
            self.lines.append(f"{key}: {value}")

    def raw(self, text: str) -> None:
        self.lines.extend(text.rstrip("\n").split("\n"))

    def text(self) -> str:
        return "\n".join(self.lines) + "\n" if self.lines else ""


def _bool(v: bool) -> str:
    return "true" if v else "false"


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _seq(text: str):
    try:
        return parse_sequence(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _names(args, n: int):
    return variable_names(n, letters=args.names == "letters")


def _ideal_text(ideal, args) -> str:
    names = _names(args, ideal.n)
    return format_ideal(ideal, names, header=names is None)


def cmd_check_oseq(args, out: _Out) -> int:
    h = _seq(args.seq)
    report = check_m_times_wl(h.values, args.m)
    out.kv("sequence", h)
    out.kv("m", args.m)
    out.kv("verdict", _bool(report.ok))
    if report.reason:
        out.kv("reason", report.reason)
    for i, (d, k) in enumerate(zip(report.deltas, report.lengths), start=1):
        out.kv(f"delta_{i}", d)
        out.kv(f"k_{i}", k)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_build_w(args, out: _Out) -> int:
    h = _seq(args.seq)
    report = check_m_times_wl(h.values, args.m)
    if not report.ok:
        out.kv("error", f"not a {args.m}-times weak Lefschetz O-sequence: {report.reason}")
        return EXIT_FAIL
    out.raw(_ideal_text(build_w(h, args.m), args))
    return EXIT_OK


def cmd_lex(args, out: _Out) -> int:
    h = _seq(args.seq)
    try:
        ideal = lex_segment(h)
    except ValueError as exc:
        out.kv("error", str(exc))
        return EXIT_FAIL
    out.raw(_ideal_text(ideal, args))
    return EXIT_OK


def cmd_hf(args, out: _Out) -> int:
    ideal = parse_ideal_file(_read(args.ideal))
    if args.dmax is None:
        if not is_artinian(ideal):
            raise UsageError("--dmax is required for non-artinian ideals")
        values = artinian_hilbert_function(ideal).values
    else:
        values = hilbert_function(ideal, args.dmax)
    out.kv("hilbert", ",".join(str(v) for v in values))
    return EXIT_OK


def cmd_wlp(args, out: _Out) -> int:
    ideal = parse_ideal_file(_read(args.ideal))
    if not is_artinian(ideal):
        raise UsageError("ideal is not artinian")
    stable = is_strongly_stable(ideal)
    out.kv("strongly_stable", _bool(stable))
    if args.m is not None and args.m != 1:
        if not stable:
            raise UsageError("--m > 1 needs a strongly stable ideal")
        try:
            report = has_m_wlp_stable(ideal, args.m)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        out.kv("m", args.m)
        out.kv("verdict", _bool(report.has_property))
        for i, level in enumerate(report.levels):
            out.kv(f"level_{i}_hilbert", level.hilbert)
            out.kv(f"level_{i}", level.describe())
        return EXIT_OK if report.has_property else EXIT_FAIL
    report = wlp_criterion(ideal)
    out.kv("hilbert", report.hilbert)
    out.kv("k", report.k)
    out.kv("verdict", _bool(report.has_property))
    out.kv("certificate", report.describe())
    if not report.has_property and not stable:
        out.kv("note", "x_n is not a weak Lefschetz element; other linear forms are not tested")
    return EXIT_OK if report.has_property else EXIT_FAIL


def cmd_betti(args, out: _Out) -> int:
    ideal = parse_ideal_file(_read(args.ideal))
    table = graded_betti(ideal)
    if args.format == "tsv":
        for i, total in enumerate(table.totals(), start=1):
            out.kv(f"total_{i}", total)
        out.raw(render_triples(table) or "")
    else:
        out.raw(render_diagram(table))
        out.kv("totals", " ".join(str(t) for t in table.totals()))
    return EXIT_OK


def _stable_input(args):
    ideal = parse_ideal_file(_read(args.ideal))
    if not is_strongly_stable(ideal) or not is_artinian(ideal):
        raise UsageError("need an artinian strongly stable ideal")
    return ideal


def cmd_maxbetti(args, out: _Out) -> int:
    ideal = _stable_input(args)
    try:
        report = has_maximal_betti(ideal, args.m, cutoff=args.cutoff)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.kv("hilbert", report.hilbert)
    out.kv("cutoff", report.cutoff)
    out.kv("betti_equal", _bool(report.betti_equal))
    out.kv("gotzmann_criterion", _bool(report.gotzmann_criterion))
    if args.format != "tsv":
        out.raw("ideal:\n" + render_diagram(report.table))
        out.raw("extremal:\n" + render_diagram(report.extremal_table))
    return EXIT_OK if report.betti_equal else EXIT_FAIL


def cmd_rigidity(args, out: _Out) -> int:
    ideal = _stable_input(args)
    try:
        report = check_rigidity(ideal, args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.kv("totals", " ".join(map(str, report.totals)))
    out.kv("extremal_totals", " ".join(map(str, report.extremal_totals)))
    out.kv("first_equal", report.first_equal if report.first_equal else "none")
    out.kv("holds", _bool(report.holds))
    return EXIT_OK if report.holds else EXIT_FAIL


def cmd_distract(args, out: _Out) -> int:
    ideal = parse_ideal_file(_read(args.ideal))
    try:
        L = parse_matrix(_read(args.matrix))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if L.n_rows < ideal.n:
        raise UsageError(f"matrix has {L.n_rows} rows, ideal has {ideal.n} variables")
    partial = L.first_rows(ideal.n)
    names = _names(args, L.n_vars)
    polys = distract_ideal(partial, ideal)
    for p in polys:
        out.kv("generator", format_polynomial(p, names))
    if is_artinian(ideal):
        if L.n_vars == ideal.n:
            s = artinian_hilbert_function(ideal).s
            hf = poly_ideal_hilbert(polys, s + 1, n=L.n_vars)
            out.kv("hilbert", ",".join(map(str, hf)))
        out.kv("radical", _bool(is_radical_for(partial, ideal)))
    if args.points:
        try:
            points, report = distraction_points(ideal, L)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        out.kv("points", len(points))
        for pt in points:
            out.raw(str(pt))
    return EXIT_OK


def cmd_random(args, out: _Out) -> int:
    if args.m:
        ideal = random_m_wlp_ideal(args.seed, args.n, args.m, args.max_degree)
    else:
        try:
            ideal = random_strongly_stable(args.seed, args.n, args.max_degree)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    out.raw(_ideal_text(ideal, args))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "tsv"), default="text")
    common.add_argument("--names", choices=("canonical", "letters"), default="canonical",
                        help="'letters' renders x1..x4 as x, y, z, t")

    parser = argparse.ArgumentParser(
        prog="weaklefschetz",
        description="Weak Lefschetz O-sequences, extremal ideals and Betti tables.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-oseq", parents=[common], help="test an m-times WL O-sequence")
    p.add_argument("seq")
    p.add_argument("--m", type=int, default=1)
    p.set_defaults(func=cmd_check_oseq)

    p = sub.add_parser("build-w", parents=[common], help="construct W_m(h)")
    p.add_argument("seq")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_build_w)

    p = sub.add_parser("lex", parents=[common], help="lex-segment ideal of an O-sequence")
    p.add_argument("seq")
    p.set_defaults(func=cmd_lex)

    p = sub.add_parser("hf", parents=[common], help="Hilbert function of R/I")
    p.add_argument("ideal")
    p.add_argument("--dmax", type=int)
    p.set_defaults(func=cmd_hf)

    p = sub.add_parser("wlp", parents=[common], help="weak Lefschetz check with certificate")
    p.add_argument("ideal")
    p.add_argument("--m", type=int)
    p.set_defaults(func=cmd_wlp)

    p = sub.add_parser("betti", parents=[common], help="graded Betti diagram of R/I")
    p.add_argument("ideal")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("maxbetti", parents=[common], help="compare with the W_m(h) bound")
    p.add_argument("ideal")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--cutoff", choices=("k+1", "k"), default="k+1")
    p.set_defaults(func=cmd_maxbetti)

    p = sub.add_parser("rigidity", parents=[common], help="rigidity of the Betti bound")
    p.add_argument("ideal")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_rigidity)

    p = sub.add_parser("distract", parents=[common], help="apply a distraction matrix")
    p.add_argument("ideal")
    p.add_argument("--matrix", required=True)
    p.add_argument("--points", action="store_true")
    p.set_defaults(func=cmd_distract)

    p = sub.add_parser("random-ideal", parents=[common], help="seeded random Borel ideal")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--m", type=int, default=0, help="force m-times the WLP")
    p.set_defaults(func=cmd_random)
    return parser


def run(argv: Sequence[str]) -> tuple:
    """Run one command; return ``(exit_code, stdout, stderr)``."""
    stdout, stderr = io.StringIO(), io.StringIO()
    with redirect_stdout(stdout), redirect_stderr(stderr):
        code = main(argv)
    return code, stdout.getvalue(), stderr.getvalue()


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = _Out(args.format)
    try:
        code = args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # parse errors in ideal or matrix files
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out.text())
    return code


if __name__ == "__main__":
    sys.exit(main())

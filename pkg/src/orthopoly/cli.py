"""Command-line interface: ``orthopoly <subcommand> ...``.

Exit status: 0 on success, 1 on domain errors (invalid angles, dimension too
small, ...), 2 on malformed arguments.  Nothing is written to stdout on a
non-zero exit.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import report
from .angles import PRESETS, Angle, angles_from_slopes, validate
from .census import rational_search, reproduce_table
from .cone_manifold import classify
from .errors import DimensionTooSmall, GeometryError
from .hermitian import embedding_residual, hermitian_matrix, unfold_double
from .linalg import realify, signature
from .mixed_area import gram_matrix


class UsageError(Exception):
    pass


def _angles(text, min_dim=None):
    try:
        raw = [Angle.parse(t) for t in text.split(",") if t.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse angle list {text!r}: {exc}") from None
    # the dimension depends on the count alone, so report it before the sum
    if min_dim is not None and 3 <= len(raw) < min_dim + 3:
        raise DimensionTooSmall(len(raw) - 3, min_dim)
    return validate(raw)


def _floats(text, what):
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(f"cannot parse {what} {text!r}: {exc}") from None


def _slopes(text):
    out = []
    for t in text.split(","):
        t = t.strip()
        if not t:
            continue
        if t.lower() in ("inf", "infinity", "oo", "+inf", "-inf"):
            out.append(float("inf"))
            continue
        try:
            out.append(float(t))
        except ValueError:
            raise UsageError(f"cannot parse slope {t!r}") from None
    return out


def _orthoscheme_output(a, args, out: list, side: list):
    doc, diagram = report.orthoscheme_document(a)
    if getattr(args, "dot", None):
        if diagram is None:
            raise GeometryError("orthoscheme is not Coxeter; no diagram to write")
        side.append((Path(args.dot), diagram.to_dot()))
    out.append(report.dumps(doc) if args.json else report.orthoscheme_text(doc))


def cmd_orthoscheme(args, out, side):
    _orthoscheme_output(_angles(args.angles, min_dim=2), args, out, side)


def cmd_from_slopes(args, out, side):
    slopes = PRESETS[args.preset] if args.preset else _slopes(args.slopes)
    a = angles_from_slopes(slopes)
    if not args.json:
        out.append("reconstructed angles (radians): "
                   + ", ".join(f"{x:.15g}" for x in a.radians) + "\n")
    _orthoscheme_output(a, args, out, side)


def cmd_cone_manifold(args, out, side):
    c = classify(_angles(args.angles, min_dim=2))
    out.append(report.dumps(report.classification_document(c)) if args.json
               else report.classification_text(c))


def cmd_table(args, out, side):
    rep = reproduce_table()
    out.append(report.dumps(report.table_document(rep)) if args.json else report.table_text(rep))
    return 0 if rep.passed else 1


def cmd_search(args, out, side):
    if args.max_den < 2:
        raise UsageError("--max-den must be at least 2")
    hits = rational_search(args.max_den, args.kmax, args.tol)
    out.append(report.dumps(report.search_document(hits)) if args.json
               else report.search_text(hits))


def cmd_hermitian(args, out, side):
    a = _angles(args.angles)
    H = hermitian_matrix(a)
    sig = signature(H)
    real_sig = signature(realify(H))
    doc = {"angles": a.text(), "n": a.n,
           "signature": list(sig),
           "realified_signature": list(real_sig),
           "real_signature": list(signature(gram_matrix(a))),
           "embedding_residual": embedding_residual(a)}
    if args.heights or args.svg:
        h = _floats(args.heights, "heights") if args.heights else np.ones(len(a))
        if len(h) != len(a):
            raise UsageError(f"need {len(a)} heights, got {len(h)}")
        u = unfold_double(a, h)
        doc["unfolding"] = u.to_json()
        doc["rotation_residual"] = u.rotation_residual()
        if args.svg:
            side.append((Path(args.svg), u.to_svg()))
    if args.json:
        out.append(report.dumps(doc))
    else:
        out.append(f"angles: {a}\nsignature of M (N,Z,P): {tuple(sig)}\n"
                   f"signature of m (N,Z,P): {tuple(doc['real_signature'])}\n"
                   f"max |M(f(u_i),f(u_j)) - 2m(u_i,u_j)| = {doc['embedding_residual']:.3g}\n")
        if "unfolding" in doc:
            out.append(f"unfolding rotation residual = {doc['rotation_residual']:.3g}\n")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="orthopoly",
        description="Spaces of convex polygons as hyperbolic orthoschemes and cone-manifolds.",
        epilog='Angles: "p/q" means p*pi/q, a decimal is radians. '
               'Use --slopes=-2,... when the first slope is negative.')
    sub = p.add_subparsers(dest="command", required=True)

    o = sub.add_parser("orthoscheme", help="type, facet relations, Coxeter diagram, compactness")
    o.add_argument("--angles", required=True)
    o.add_argument("--dot", metavar="FILE", help="write the Coxeter diagram as Graphviz DOT")
    o.add_argument("--json", action="store_true")
    o.set_defaults(func=cmd_orthoscheme)

    c = sub.add_parser("cone-manifold", help="manifold / orbifold / cone-manifold verdict")
    c.add_argument("--angles", required=True)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_cone_manifold)

    t = sub.add_parser("table", help="reproduce the Deligne-Mostow table")
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_table)

    s = sub.add_parser("search", help="rational triples with stratum angle 2pi/k")
    s.add_argument("--max-den", type=int, default=12)
    s.add_argument("--kmax", type=int, default=100)
    s.add_argument("--tol", type=float, default=1e-9)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_search)

    f = sub.add_parser("from-slopes", help="angles from normal slopes, then the orthoscheme report")
    g = f.add_mutually_exclusive_group(required=True)
    g.add_argument("--slopes")
    g.add_argument("--preset", choices=sorted(PRESETS))
    f.add_argument("--dot", metavar="FILE")
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=cmd_from_slopes)

    h = sub.add_parser("hermitian", help="signature of the complex mixed area and the doubling map")
    h.add_argument("--angles", required=True)
    h.add_argument("--heights")
    h.add_argument("--svg", metavar="FILE", help="write the unfolded doubled polygon")
    h.add_argument("--json", action="store_true")
    h.set_defaults(func=cmd_hermitian)
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out, side = [], []
    try:
        code = args.func(args, out, side) or 0
    except UsageError as exc:
        print(f"orthopoly: error: {exc}", file=stderr)
        return 2
    except GeometryError as exc:
        print(f"orthopoly: {type(exc).__name__}: {exc}", file=stderr)
        return 1
    for path, text in side:
        path.write_text(text)
    text = "".join(out)
    if code == 0:
        stdout.write(text)
    else:
        stderr.write(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

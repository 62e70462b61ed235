r"""
Command-line interface: classify a surface from its one-line text
encoding, enumerate diagram catalogs, summarize affine-group monodromy
evidence, and emit text or SVG reports.

Subcommands::

    squaretiled analyze <file> [--direction-bound B] [--format text|svg]
    squaretiled enumerate --stratum 1,1,1,1 --shape case6
    squaretiled monodromy <file> [--norm-bound N] [--word-bound W]
    squaretiled report

Input files contain one origami line, e.g.
``origami h="(0 1 2 3)(4 7 6 5)" v="(0 4 2 6)(1 5 3 7)"``.  Text goes to
standard output; SVG files go to the ``--out`` directory.  The exit code
is 0 on success and 2 on validation errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import SquareTiledError
from .homology import homology_basis
from .monodromy import (
    closure_classify,
    forni_upper_bound,
    homology_action,
    restrict_to_zero_holonomy,
    stabilizer_generators,
)
from .pipeline import (
    classify_surface,
    enumerate_diagrams,
    reference_surface,
    render_report,
)
from .surface import parse_origami, singularity_data


def _load_origami(path):
    text = Path(path).read_text(encoding="utf-8")
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            return parse_origami(line)
    raise ValueError(f"no origami line found in {path}")


def _write_svgs(documents, out_dir):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, content in sorted(documents.items()):
        (out / name).write_text(content, encoding="utf-8")
        print(f"wrote {out / name}")


def _cmd_analyze(args):
    o = _load_origami(args.file)
    verdict = classify_surface(o, direction_bound=args.direction_bound)
    print(render_report(verdict), end="")
    if args.format == "svg":
        _write_svgs(render_report(verdict, format="svg"), args.out)
    return 0


def _cmd_enumerate(args):
    kappa = tuple(int(x) for x in args.stratum.split(","))
    catalog = enumerate_diagrams(kappa, args.shape)
    print(render_report(catalog), end="")
    if args.format == "svg":
        _write_svgs(render_report(catalog, format="svg"), args.out)
    return 0


def _cmd_monodromy(args):
    o = _load_origami(args.file)
    basis = homology_basis(o)
    gens = stabilizer_generators(o, args.word_bound)
    print("surface: %s, genus %d" % (singularity_data(o),
                                     singularity_data(o).genus))
    print("stabilizer words up to length %d: %d"
          % (args.word_bound, len(gens)))
    matrices = [homology_action(o, gen, basis) for gen in gens]
    for (word, _), m in zip(gens, matrices):
        print("  %-20s %dx%d symplectic" % (" ".join(word), len(m), len(m)))
    restricted = restrict_to_zero_holonomy(matrices, basis)
    dim = len(restricted[0]) if restricted else 0
    print("zero-holonomy restriction: dimension %d" % dim)
    closure = closure_classify(restricted, norm_bound=args.norm_bound)
    if closure.is_finite:
        print("restricted closure: Finite, order %d" % closure.order)
    else:
        print("restricted closure: Unbounded (norm %d reached)"
              % closure.norm)
    if singularity_data(o).genus >= 2:
        report = forni_upper_bound(o, args.direction_bound)
        print("isometric-subspace dimension bound: %d" % report.upper_bound)
    return 0


def _cmd_report(args):
    verdict = classify_surface(reference_surface(),
                               direction_bound=args.direction_bound)
    print(render_report(verdict), end="")
    if args.format == "svg":
        _write_svgs(render_report(verdict, format="svg"), args.out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="squaretiled",
        description="Classification toolkit for genus-3 square-tiled "
                    "surfaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify a surface from a file")
    p.add_argument("file")
    p.add_argument("--direction-bound", type=int, default=3)
    p.add_argument("--format", choices=("text", "svg"), default="text")
    p.add_argument("--out", default="reports")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("enumerate", help="catalog cylinder diagrams")
    p.add_argument("--stratum", required=True,
                   help="comma-separated zero orders, e.g. 1,1,1,1")
    p.add_argument("--shape", choices=("one_cylinder", "case6"),
                   required=True)
    p.add_argument("--format", choices=("text", "svg"), default="text")
    p.add_argument("--out", default="reports")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("monodromy",
                       help="affine-group action on homology")
    p.add_argument("file")
    p.add_argument("--norm-bound", type=int, default=10 ** 6)
    p.add_argument("--word-bound", type=int, default=1)
    p.add_argument("--direction-bound", type=int, default=2)
    p.set_defaults(func=_cmd_monodromy)

    p = sub.add_parser("report",
                       help="reference report for the 8-square survivor")
    p.add_argument("--direction-bound", type=int, default=2)
    p.add_argument("--format", choices=("text", "svg"), default="text")
    p.add_argument("--out", default="reports")
    p.set_defaults(func=_cmd_report)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SquareTiledError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""``singlink`` command line.

Output is TSV, one ``key<TAB>value`` per line, in a fixed key order per
subcommand.  Exit codes: 0 success, 1 usage or input error, 2 the input is
well formed but the computation is undefined (singular intersection form,
exhaustive sweep too large, not a homology sphere).
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from . import brieskorn as bk
from . import frames, graphfile, plumbing, todd
from .enumeration import gorenstein_genera, sweep_weights
from .errors import (
    NotHomologySphere,
    SingLinkError,
    SingularIntersectionForm,
    TooLargeUseSampling,
)

EXIT_OK, EXIT_USAGE, EXIT_UNDEFINED = 0, 1, 2
_UNDEFINED = (SingularIntersectionForm, TooLargeUseSampling, NotHomologySphere)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "n/a"
    if isinstance(value, Fraction):
        return str(value)  # "p/q", or a bare integer when q == 1
    return str(value)


def emit_record(pairs: Iterable[Tuple[str, object]]) -> None:
    for key, value in pairs:
        print(f"{key}\t{fmt(value)}")


# ---------------------------------------------------------------------------


def cmd_todd(args) -> int:
    poly = todd.todd_polynomial(args.order, max_grade=args.max_grade)
    record = [(f"T{poly.grade}", todd.format_polynomial(poly))]
    if args.eval is not None:
        chern = todd.parse_chern_assignment(args.eval, poly.grade)
        record.append(("Td", todd.evaluate_genus(poly, chern)))
    emit_record(record)
    return EXIT_OK


def cmd_graph_check(args) -> int:
    g = graphfile.load(args.file)
    m = plumbing.intersection_matrix(g)
    head = [("r", g.r), ("edges", len(g.edges))]
    det = plumbing.determinant(m)
    negdef = plumbing.is_negative_definite(m)
    chi_top = plumbing.euler_char_exceptional(g)
    if det == 0:
        emit_record(head + [("error", SingularIntersectionForm.code),
                            ("negative_definite", negdef), ("chi_top", chi_top)])
        return EXIT_UNDEFINED
    cyc = plumbing.canonical_cycle(g)
    emit_record(head + [
        ("det", det),
        ("negative_definite", negdef),
        ("numerically_gorenstein", cyc.integral),
        ("K", ",".join(fmt(k) for k in cyc.coefficients)),
        ("K2", cyc.k_squared),
        ("chi_top", chi_top),
    ])
    return EXIT_OK


def cmd_brieskorn(args) -> int:
    t = bk.triple(args.a, args.b, args.c)
    p = bk.profile(t)
    if args.emit_graph:
        graphfile.dump(bk.seifert_graph(t), args.emit_graph)
    emit_record([
        ("mu", p.mu), ("pg", p.p_g), ("sigma", p.sigma), ("chi", p.chi), ("ehat", p.ehat),
        ("e_r", p.e_r), ("e_c", p.e_c), ("rochlin", p.rochlin), ("casson", p.casson),
    ])
    return EXIT_OK


def cmd_ehat(args) -> int:
    frame = frames.act(frames.canonical_frame("L", args.mu), args.offset)
    bundle = frames.reduce(frames.ehat(frame))
    emit_record([("ehat", bundle.ehat), ("e_r", bundle.e_r), ("e_c", bundle.e_c)])
    return EXIT_OK


def cmd_enumerate_weights(args) -> int:
    if args.wmin > -1:
        raise UsageError("--wmin must be a negative integer")
    if (args.samples is None) != (args.seed is None):
        raise UsageError("--samples and --seed must be given together")
    g = graphfile.load(args.file)
    rep = sweep_weights(g, -args.wmin, samples=args.samples, seed=args.seed)
    record = [("r", g.r), ("wmin", args.wmin), ("mode", rep.mode)]
    if rep.mode == "sampled":
        record += [("samples", rep.samples), ("seed", rep.seed)]
    record += [
        ("total", rep.total),
        ("negative_definite", rep.negative_definite),
        ("fraction", rep.fraction),
        ("dominant_total", rep.dominant_total),
        ("dominant_negative_definite", rep.dominant_negative_definite),
    ]
    emit_record(record)
    return EXIT_OK


def cmd_enumerate_genera(args) -> int:
    g = graphfile.load(args.file)
    sol = gorenstein_genera(g, args.gmax)
    rendered = ",".join(":".join(map(str, v)) for v in sol.solutions)
    emit_record([
        ("r", g.r),
        ("gmax", sol.g_max),
        ("condition", "numerically-gorenstein"),
        ("period", sol.lattice_period),
        ("count", len(sol.solutions)),
        ("solutions", rendered or "none"),
    ])
    return EXIT_OK


def cmd_selftest(args) -> int:
    from .acceptance import run_all

    return EXIT_OK if run_all() else EXIT_UNDEFINED


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="singlink", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    p = sub.add_parser("todd", help="Todd polynomial T_k, optionally evaluated")
    p.add_argument("--order", type=int, required=True, help="grade k >= 1")
    p.add_argument("--eval", metavar="c1=..,c2=..", help="Chern numbers to substitute")
    p.add_argument("--max-grade", type=int, default=todd.DEFAULT_MAX_GRADE)
    p.set_defaults(func=cmd_todd)

    p = sub.add_parser("graph-check", aliases=["check"], help="lattice invariants of a graph file")
    p.add_argument("file")
    p.set_defaults(func=cmd_graph_check)

    p = sub.add_parser("brieskorn", help="invariants of x^a + y^b + z^c")
    for name in ("a", "b", "c"):
        p.add_argument(name, type=int)
    p.add_argument("--emit-graph", metavar="PATH", help="write the star-shaped resolution graph")
    p.set_defaults(func=cmd_brieskorn)

    p = sub.add_parser("ehat", help="E-hat and its reductions for a canonical frame")
    p.add_argument("--mu", type=int, required=True, help="Milnor number")
    p.add_argument("--offset", type=int, default=0, help="twist the canonical frame by this degree")
    p.set_defaults(func=cmd_ehat)

    p = sub.add_parser("enumerate", help="weight and genus sweeps")
    esub = p.add_subparsers(dest="what", parser_class=_Parser, required=True)
    q = esub.add_parser("weights", help="fraction of negative definite weight vectors")
    q.add_argument("file")
    q.add_argument("--wmin", type=int, required=True, help="most negative weight, e.g. -3")
    q.add_argument("--samples", type=int)
    q.add_argument("--seed", type=int)
    q.set_defaults(func=cmd_enumerate_weights)
    q = esub.add_parser("genera", help="genus vectors with integral canonical cycle")
    q.add_argument("file")
    q.add_argument("--gmax", type=int, required=True)
    q.set_defaults(func=cmd_enumerate_genera)

    p = sub.add_parser("selftest", help="run the embedded acceptance suite")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(sys.argv[1:] if argv is None else argv))
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _UNDEFINED as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_UNDEFINED
    except SingLinkError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 success; 1 mathematical negative (Unknown, NotFoundAtWindow,
HypothesisNotMet, a failed redundancy check); 2 usage or hypothesis error;
3 resource exhaustion (node budgets, truncation overflow, word caps).
"""

from __future__ import annotations

import argparse
import sys

from .abelianization import format_h1, h1_class
from .braid import (
    bounded_equal,
    format_perm_cycles,
    parse_braid_word,
    relators,
    strand_permutation,
    wreath_image,
)
from .config import Config, load_config, override
from .diagrams import (
    Truncation,
    degree_one_symbol,
    format_certificate,
    format_diagram,
    format_monomial,
    ideal_member,
    parse_diagram,
)
from .errors import (
    HypothesisError,
    InvalidGeneratorError,
    ParameterError,
    ParseError,
    ResourceLimitError,
    SurfbraidError,
    TruncationOverflowError,
    UnsupportedDegreeError,
)
from .group_algebra import (
    desingularize,
    format_algebra_element,
    parse_jexpr,
    parse_singular_word,
)
from .surface import SurfaceParams, format_word, free_reduce, inverse_word
from .symplectic import dims_table, symp_twist_redundancy
from .verifier import OBSTRUCTION_ESTABLISHED, format_report, verify_nonexistence

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="flat key = value configuration file")
    parser.add_argument("--genus", "-g", type=int, default=None)
    parser.add_argument("--boundary", "-p", type=int, default=None)
    parser.add_argument("--strands", "-n", type=int, default=None)
    parser.add_argument("--max-chords", type=int, default=None)
    parser.add_argument("--max-beads", type=int, default=None)
    parser.add_argument("--window", "-w", type=int, default=None)
    parser.add_argument("--node-budget", type=int, default=None)
    parser.add_argument("--cache-dir", default=None)
    parser.add_argument(
        "--jobs", type=int, default=None,
        help="worker count (accepted for compatibility; computations run serially)",
    )


def _config_from(args) -> Config:
    cfg = load_config(args.config) if args.config else Config()
    return override(
        cfg,
        genus=args.genus,
        boundary=args.boundary,
        strands=args.strands,
        max_chords=getattr(args, "max_chords", None),
        max_beads=getattr(args, "max_beads", None),
        window=args.window,
        node_budget=getattr(args, "node_budget", None),
        cache_dir=getattr(args, "cache_dir", None),
        jobs=args.jobs,
    )


def _surface(cfg: Config) -> SurfaceParams:
    return SurfaceParams(cfg.genus, cfg.boundary, cfg.strands)


def _trunc(cfg: Config) -> Truncation:
    return Truncation(cfg.max_chords, cfg.max_beads)


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="surfbraid",
        description="surface braid groups, their graded diagram algebras, "
        "and the degree-one obstruction, in exact arithmetic",
    )
    sub = top.add_subparsers(dest="command", required=True)

    braid = sub.add_parser("braid", help="braid words and relators")
    bsub = braid.add_subparsers(dest="subcommand", required=True)
    for name in ("parse", "inv", "perm", "theta"):
        sp = bsub.add_parser(name)
        _add_common(sp)
        sp.add_argument("word")
    sp = bsub.add_parser("mul")
    _add_common(sp)
    sp.add_argument("word1")
    sp.add_argument("word2")
    sp = bsub.add_parser("relators")
    _add_common(sp)
    sp = bsub.add_parser("equal")
    _add_common(sp)
    sp.add_argument("word1")
    sp.add_argument("word2")
    sp.add_argument("--depth", type=int, default=2)

    singular = sub.add_parser("singular", help="singular braid words")
    ssub = singular.add_subparsers(dest="subcommand", required=True)
    sp = ssub.add_parser("desing")
    _add_common(sp)
    sp.add_argument("word")

    gr = sub.add_parser("gr", help="the graded quotient")
    gsub = gr.add_subparsers(dest="subcommand", required=True)
    sp = gsub.add_parser("symbol")
    _add_common(sp)
    sp.add_argument("--jexpr", required=True,
                    help="';'-separated summands 'coef | u | i | v'")

    diagram = sub.add_parser("diagram", help="beaded chord diagrams")
    dsub = diagram.add_subparsers(dest="subcommand", required=True)
    sp = dsub.add_parser("member")
    _add_common(sp)
    sp.add_argument("element")
    sp = dsub.add_parser("equal")
    _add_common(sp)
    sp.add_argument("element1")
    sp.add_argument("element2")

    h1 = sub.add_parser("h1", help="abelianization")
    hsub = h1.add_subparsers(dest="subcommand", required=True)
    sp = hsub.add_parser("class")
    _add_common(sp)
    sp.add_argument("element")

    sp = sub.add_parser("verify-theorem", help="run the obstruction pipeline")
    _add_common(sp)
    sp.add_argument("--report", help="also write the report to this file")

    symp = sub.add_parser("symplectic", help="the symplectic diagram algebra")
    ysub = symp.add_subparsers(dest="subcommand", required=True)
    sp = ysub.add_parser("dims")
    _add_common(sp)
    sp.add_argument("--max-degree", type=int, required=True)
    sp.add_argument("--word-cap", type=int, default=200000)
    sp = ysub.add_parser("twist-check")
    _add_common(sp)

    return top


def _format_symbol(x) -> str:
    if x.is_zero:
        return "0"
    from .braid import identity_perm
    from .diagrams import mono_key

    parts = []
    ident = identity_perm(x.strands)
    for (mono, perm) in sorted(x.terms, key=lambda k: (k[1], mono_key(k[0]))):
        coef = x.terms[(mono, perm)]
        perm_txt = "id" if perm == ident else format_perm_cycles(perm)
        body = f"({format_monomial(mono)}; {perm_txt})"
        parts.append(body if coef == 1 else f"{coef} * {body}")
    return " + ".join(parts)


def _run(args) -> int:
    cfg = _config_from(args)
    s = _surface(cfg)
    trunc = _trunc(cfg)

    if args.command == "braid":
        if args.subcommand == "parse":
            print(format_word(parse_braid_word(args.word, s)))
        elif args.subcommand == "mul":
            u = parse_braid_word(args.word1, s)
            v = parse_braid_word(args.word2, s)
            print(format_word(free_reduce(u + v)))
        elif args.subcommand == "inv":
            print(format_word(inverse_word(parse_braid_word(args.word, s))))
        elif args.subcommand == "perm":
            w = parse_braid_word(args.word, s)
            print(format_perm_cycles(strand_permutation(w, s.strands)))
        elif args.subcommand == "theta":
            el = wreath_image(parse_braid_word(args.word, s), s)
            beads = ",".join(format_word(w) for w in el.beads)
            print(f"beads=({beads}) perm={format_perm_cycles(el.perm)}")
        elif args.subcommand == "relators":
            for rel in relators(s):
                print(f"{rel.family} {format_word(rel.word)}")
        elif args.subcommand == "equal":
            u = parse_braid_word(args.word1, s)
            v = parse_braid_word(args.word2, s)
            res = bounded_equal(u, v, s, args.depth, cfg.node_budget)
            if res.is_equal:
                print(f"Equal moves={len(res.moves)}")
                for mv in res.moves:
                    print(
                        f"  at {mv.pos}: {format_word(mv.removed)} -> "
                        f"{format_word(mv.inserted)} [{mv.family}]"
                    )
            else:
                print("Unknown")
                return EXIT_NEGATIVE
        return EXIT_OK

    if args.command == "singular":
        word = parse_singular_word(args.word, s)
        print(format_algebra_element(desingularize(word)))
        return EXIT_OK

    if args.command == "gr":
        expr = parse_jexpr(args.jexpr, s)
        print(_format_symbol(degree_one_symbol(expr, s, trunc)))
        return EXIT_OK

    if args.command == "diagram":
        if args.subcommand == "member":
            x = parse_diagram(args.element, s, trunc)
            res = ideal_member(x, s, trunc, cfg.window)
            if res.is_member:
                print("Member")
                print(format_certificate(res.certificate))
                return EXIT_OK
            print("NotFoundAtWindow")
            return EXIT_NEGATIVE
        if args.subcommand == "equal":
            x = parse_diagram(args.element1, s, trunc)
            y = parse_diagram(args.element2, s, trunc)
            res = ideal_member(x - y, s, trunc, cfg.window)
            if res.is_member:
                print(f"Equal certificate_terms={len(res.certificate)}")
                return EXIT_OK
            print("NotFoundAtWindow")
            return EXIT_NEGATIVE

    if args.command == "h1":
        x = parse_diagram(args.element, s, trunc)
        print(format_h1(h1_class(x, s)))
        return EXIT_OK

    if args.command == "verify-theorem":
        rep = verify_nonexistence(s, trunc, cfg.window, cfg.node_budget)
        text = format_report(rep)
        print(text)
        if args.report:
            with open(args.report, "w") as fh:
                fh.write(text + "\n")
        return EXIT_OK if rep.verdict == OBSTRUCTION_ESTABLISHED else EXIT_NEGATIVE

    if args.command == "symplectic":
        if args.subcommand == "dims":
            table = dims_table(s, args.max_degree, cfg.cache_dir, args.word_cap)
            sys.stdout.write(table)
            return EXIT_OK
        if args.subcommand == "twist-check":
            if symp_twist_redundancy(s):
                print("chords redundant: yes")
                return EXIT_OK
            print("chords redundant: no")
            return EXIT_NEGATIVE

    raise ParameterError(f"unhandled command {args.command!r}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return _run(args)
    except (ResourceLimitError, TruncationOverflowError) as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (
        ParseError,
        InvalidGeneratorError,
        ParameterError,
        HypothesisError,
        UnsupportedDegreeError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SurfbraidError as exc:  # pragma: no cover - defensive
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

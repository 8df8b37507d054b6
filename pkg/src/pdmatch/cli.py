"""Command-line interface: ``pdmatch {solve,verify,classify,generate,bench}``.

Exit codes: 0 success, 1 malformed input, 2 class precondition violated by a
forced algorithm, 3 budget exceeded, 4 matching is not a PD-matching
(``verify`` only).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import generators as gen
from .bench import family_instance, records_to_csv, records_to_json, run_bench, summarize
from .classes import classify
from .dispatch import ALGORITHM_NAMES, solve
from .errors import BudgetExceededError, ClassMismatchError, InstanceFormatError
from .instance import (dump_instance, dump_matching, is_maximal, is_strongly_maximal,
                       parse_instance, parse_matching, verify)

EXIT_OK, EXIT_INPUT, EXIT_CLASS, EXIT_BUDGET, EXIT_INVALID = 0, 1, 2, 3, 4


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.replace(" ", "").split(",") if x]


def _read(path: str | None) -> bytes:
    if path in (None, "-"):
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _write(path: str | None, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text + "\n")
    else:
        Path(path).write_text(text + "\n", encoding="utf-8")


def cmd_solve(args) -> int:
    inst = parse_instance(_read(args.input))
    opts = {"budget": args.budget, "tiebreak": args.tiebreak}
    if args.machine_order:
        opts["machine_order"] = tuple(_ints(args.machine_order))
    rep = solve(inst, args.algorithm, **opts)
    summary = (f"size {rep.size} optimal {str(rep.optimal).lower()} "
               f"algorithm {rep.algorithm} elapsed_us {int(rep.elapsed * 1e6)}")
    if args.output in (None, "-"):
        _write(None, dump_matching(rep.matching))
        print(summary, file=sys.stderr)
    else:
        _write(args.output, dump_matching(rep.matching))
        print(summary)
    return EXIT_OK


def cmd_verify(args) -> int:
    inst = parse_instance(_read(args.input))
    match = parse_matching(Path(args.matching).read_bytes())
    report = verify(inst, match)
    doc = {
        "valid": report.valid,
        "violations": [{"kind": v.kind, "edge": list(v.edge), "degree": v.degree}
                       for v in report.violations],
        "maximal": is_maximal(inst, match) if report.valid else None,
        "strongly_maximal": is_strongly_maximal(inst, match) if report.valid else None,
    }
    _write(args.output, json.dumps(doc))
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_classify(args) -> int:
    inst = parse_instance(_read(args.input))
    _write(args.output, json.dumps(classify(inst).to_dict()))
    return EXIT_OK


def cmd_generate(args) -> int:
    fam = args.family
    if fam == "3partition":
        inst = gen.gen_3partition(_ints(args.A), args.B, args.k)
    elif fam == "3dm":
        red = gen.gen_3dm(gen.TripleSystem(args.k, _triples(args.triples)))
        inst = red.instance
        if args.meta:
            Path(args.meta).write_text(json.dumps({
                "triples": [list(t) for t in red.system.triples],
                "y_jobs": list(range(args.k)),
                "z_jobs": list(range(args.k, 2 * args.k)),
                "filler_owner": list(red.filler_owner)}) + "\n", encoding="utf-8")
    elif fam == "ddm":
        tuples = _triples(args.triples)
        d = len(tuples[0]) if tuples else args.k2
        inst = gen.gen_ddm(gen.TupleSystem(d, args.k, tuples), args.k1, args.k2)
    elif fam == "fixture":
        key = args.name.upper()
        params = {"r": args.param} if key == "IR" else {"k": args.param}
        inst = gen.fixtures(args.name, **params)
    else:
        extra = {"complete": args.complete, "monotone": args.monotone}
        inst = family_instance(fam, args.seed, n=args.n, m=args.m, max_tol=args.max_tol,
                               zero_prob=args.zero_prob,
                               values=_ints(args.values) if args.values else None,
                               types=args.types, **extra)
    _write(args.output, dump_instance(inst))
    return EXIT_OK


def _triples(text: str) -> list[tuple[int, ...]]:
    return [tuple(_ints(part)) for part in text.split(";") if part.strip()]


def cmd_bench(args) -> int:
    if args.corpus:
        corpus = json.loads(Path(args.corpus).read_text(encoding="utf-8"))
    elif args.family:
        entry = {"family": args.family, "count": args.count, "seed": args.seed,
                 "n": args.n, "m": args.m, "max_tol": args.max_tol,
                 "zero_prob": args.zero_prob, "types": args.types}
        if args.values:
            entry["values"] = _ints(args.values)
        corpus = [entry]
    else:
        corpus = []
    algorithms = [a for a in args.algorithms.split(",") if a]
    unknown = [a for a in algorithms if a not in ALGORITHM_NAMES]
    if unknown:
        raise InstanceFormatError(f"unknown algorithms {unknown}")
    records = run_bench(corpus, algorithms, oracle_budget=args.budget or 10**8,
                        tiebreak=args.tiebreak)
    if args.output in (None, "-"):
        _write(None, records_to_csv(records).rstrip("\n") if args.format == "csv"
               else records_to_json(records))
    else:
        base = Path(args.output)
        base.with_suffix(".csv").write_text(records_to_csv(records), encoding="utf-8")
        base.with_suffix(".json").write_text(records_to_json(records) + "\n", encoding="utf-8")
    for name, s in summarize(records).items():
        lo = "-" if s["min_ratio"] is None else f"{s['min_ratio']:.4f}"
        mean = "-" if s["mean_ratio"] is None else f"{s['mean_ratio']:.4f}"
        print(f"{name}: runs {s['runs']} failed {s['failed']} min_ratio {lo} mean_ratio {mean}",
              file=sys.stderr)
    if records and all(r.error for r in records):
        return EXIT_CLASS
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", help="instance JSON (default: stdin)")
    common.add_argument("--output", "-o", help="output path (default: stdout)")
    common.add_argument("--algorithm", "-a", default="auto", choices=ALGORITHM_NAMES)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=None,
                        help="enumeration budget for const-m / oracle / mono-3tol / t-types")
    common.add_argument("--machine-order", help="comma-separated machine order for greedy")
    common.add_argument("--tiebreak", choices=("low", "high"), default="low")
    common.add_argument("--format", choices=("json", "csv"), default="json")

    p = argparse.ArgumentParser(prog="pdmatch", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", parents=[common], help="solve an instance")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", parents=[common], help="check a matching")
    v.add_argument("--matching", "-M", required=True, help="matching JSON")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("classify", parents=[common], help="report instance classes")
    c.set_defaults(func=cmd_classify)

    g = sub.add_parser("generate", parents=[common], help="emit an instance")
    g.add_argument("--family", required=True,
                   choices=("random", "mono", "udep", "vdep", "values", "onetwo", "types",
                            "3partition", "3dm", "ddm", "fixture"))
    _size_flags(g)
    g.add_argument("--complete", action="store_true", help="udep: every job on every machine")
    g.add_argument("--monotone", action="store_true", help="udep: nested allowed sets")
    g.add_argument("--A", help="3partition: comma-separated integers")
    g.add_argument("--B", type=int, help="3partition: target triple sum")
    g.add_argument("--k", type=int, default=1, help="3partition/3dm/ddm: size parameter")
    g.add_argument("--triples", default="", help="3dm/ddm: tuples as '0,0,0;1,1,1'")
    g.add_argument("--k1", type=int, default=1)
    g.add_argument("--k2", type=int, default=3)
    g.add_argument("--name", default="IR", help="fixture: IR, TIGHT, MONOBAD or 3PART-EXAMPLE")
    g.add_argument("--param", type=int, default=3, help="fixture parameter (r or k)")
    g.add_argument("--meta", help="3dm: write job-role metadata here")
    g.set_defaults(func=cmd_generate)

    b = sub.add_parser("bench", parents=[common], help="benchmark algorithms on a corpus")
    b.add_argument("--corpus", help="JSON list of {family, count, seed, n, m, ...}")
    b.add_argument("--family", help="inline corpus family (alternative to --corpus)")
    b.add_argument("--count", type=int, default=10)
    _size_flags(b)
    b.add_argument("--algorithms", default="greedy", help="comma-separated algorithm names")
    b.set_defaults(func=cmd_bench)
    return p


def _size_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--max-tol", type=int, default=4)
    p.add_argument("--zero-prob", type=float, default=0.0)
    p.add_argument("--values", help="comma-separated tolerance values")
    p.add_argument("--types", type=int, default=2)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InstanceFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ClassMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CLASS
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

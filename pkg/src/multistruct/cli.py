"""Command line: ``multistruct analyze|gen|batch|selftest``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .batch import (
    EXIT_FALSIFIED,
    EXIT_OK,
    EXIT_USAGE,
    PROBLEM_SUFFIX,
    UsageError,
    default_seed,
    items_from_directory,
    items_from_genspec,
    run_batch,
)
from .corpus import CorpusSpec, generate_corpus
from .errors import MultistructError
from .problem import format_problem, parse_problem
from .report import StructureReport, run_analysis
from .scalars import DEFAULT_PRIME, field_from_spec


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def format_text(report: StructureReport, properties: bool = False) -> str:
    th = report.theorem
    lines = [
        f"input      : field {report.input['field']}, vars {', '.join(report.input['vars'])}",
        f"ideal      : {'; '.join(report.input['ideal'])}",
        f"dim_k B    : {report.dim_B}",
        f"m          : {report.m}" + ("  (trivial multiplicity 1)" if report.trivial else ""),
        f"I^l        : {report.chains['powers']}",
        f"0:I^(m+1-l): {report.chains['annihilator']}",
        f"0:(0:I^l)  : {report.chains['double_annihilator']}",
        f"type B     : {report.type['B']}",
        f"type A     : {report.type['A']}",
        f"type M     : {report.type['M']}",
        f"quasiprim. : {report.quasiprimitive}",
        f"pairings   : ranks {th['pairing_ranks']}, bijective {[p['bijective'] for p in report.pairings]}",
        f"(a) {th['cond_a']} (dim A_m = {th['dim_A_m']}, dim M_m = {th['dim_M_m']})  "
        f"(b) {th['cond_b']}  (c) {th['cond_c']}",
        f"criterion  : {'Gorenstein' if th['criterion_gorenstein'] else 'not Gorenstein'}",
        f"socle      : dim {th['socle_dim']} -> {'Gorenstein' if th['oracle_gorenstein'] else 'not Gorenstein'}",
        f"agrees     : {th['agrees']}",
    ]
    if properties:
        lines.append("properties :")
        for p in report.properties:
            if not p["hypothesis_met"]:
                state = "n/a "
            else:
                state = "PASS" if p["passed"] else "FAIL"
            lines.append(f"  {state} {p['name']}")
    if report.embedded:
        lines.append("embedded   : ambient ideal " + "; ".join(report.embedded["ambient_ideal"]))
        for kind in ("powers", "annihilator", "double_annihilator"):
            for ell, gens in enumerate(report.embedded[kind]):
                lines.append(f"  {kind}[{ell}] = J + ({', '.join(gens) or '0'})")
    if report.falsifications:
        lines.append("FALSIFIED  : " + ", ".join(report.falsifications))
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    text = Path(args.file).read_text(encoding="utf-8")
    problem = parse_problem(text, name=Path(args.file).stem)
    if args.field:
        problem = problem.over(args.field)
    report = run_analysis(problem)
    if args.json:
        sys.stdout.write(report.to_json(timing=not args.no_timing))
    else:
        sys.stdout.write(format_text(report, args.properties))
    return EXIT_FALSIFIED if report.falsifications else EXIT_OK


def cmd_gen(args) -> int:
    n_vars = args.vars
    spec = CorpusSpec(
        args.kind,
        n_vars,
        args.count,
        default_seed(args.seed),
        args.max_degree,
        args.max_dim,
        field_from_spec(args.field),
    )
    try:
        problems = generate_corpus(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for p in problems:
            (out / f"{p.name}{PROBLEM_SUFFIX}").write_text(format_problem(p), encoding="utf-8")
        print(f"wrote {len(problems)} files to {out}")
    else:
        sys.stdout.write("\n".join(format_problem(p) for p in problems))
    return EXIT_OK


def cmd_batch(args) -> int:
    target = Path(args.target)
    if target.is_dir():
        items = items_from_directory(target)
    elif target.exists():
        raise UsageError(f"{target} is not a directory")
    else:
        items = items_from_genspec(args.target, default_seed(args.seed))
    summary = run_batch(
        items, jobs=args.jobs, out_dir=args.out, timing=not args.no_timing, abort_on_falsification=not args.keep_going
    )
    if args.json:
        sys.stdout.write(json.dumps(summary.to_dict(timing=not args.no_timing), indent=2) + "\n")
    else:
        d = summary.to_dict()
        print(
            f"{d['total']} analysed: {d['gorenstein']} Gorenstein, {d['non_gorenstein']} not, "
            f"{d['agrees']} agree with the socle oracle; "
            f"{d['parse_errors']} parse errors, {d['math_errors']} math errors, "
            f"{d['falsifications']} falsifications"
        )
        for f in d["files"]:
            if f["status"] != "ok":
                print(f"  {f['status']}: {f['name']} {f.get('error', '')} {f.get('falsifications', '')}".rstrip())
        if summary.reproducers:
            where = args.out or "."
            print(f"reproducers in {where}: {', '.join(summary.reproducers)}")
        if summary.aborted:
            print("stopped at the first falsification event (use --keep-going to continue)")
    return summary.exit_code


def cmd_selftest(args) -> int:
    from .selftest import run_selftest

    return run_selftest(quick=args.quick)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="multistruct", description="Canonical filtrations and the Gorenstein duality criterion for local Artinian algebras.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("analyze", help="analyse one problem file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true", help="print the JSON report")
    p.add_argument("--properties", action="store_true", help="list the property battery")
    p.add_argument("--field", help="override the file's field (prime or Q)")
    p.add_argument("--no-timing", action="store_true", help="omit the timing field from JSON")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("gen", help="generate a seeded corpus of problem files")
    p.add_argument("kind", help="ci, monomial or random")
    p.add_argument("--vars", type=int, default=2)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--seed", type=int, default=None, help="defaults to $MULTISTRUCT_SEED or 0")
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--max-dim", type=int, default=150)
    p.add_argument("--field", default=str(DEFAULT_PRIME))
    p.add_argument("--out", help="directory for the generated files (default: stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("batch", help="analyse a directory of *.ideal files or a generator spec")
    p.add_argument("target", help="directory, or e.g. 'ci:count=200,vars=1-3+monomial:count=50'")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", help="directory for per-file JSON reports")
    p.add_argument("--json", action="store_true", help="print the summary as JSON")
    p.add_argument("--no-timing", action="store_true")
    p.add_argument("--keep-going", action="store_true", help="do not stop at the first falsification event")
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("selftest", help="run the built-in invariant checks")
    p.add_argument("--quick", action="store_true")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"multistruct: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MultistructError as exc:
        print(f"multistruct: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"multistruct: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

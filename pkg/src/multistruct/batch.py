"""Batch analysis of problem directories or generated corpora."""

from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional

from .corpus import CorpusSpec, generate_corpus
from .errors import InputError, MathDomainError, MultistructError
from .problem import ProblemFile, format_problem, parse_problem
from .report import run_analysis

log = logging.getLogger(__name__)

PROBLEM_SUFFIX = ".ideal"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_MATH = 3
EXIT_FALSIFIED = 4


class UsageError(MultistructError):
    exit_code = EXIT_USAGE


@dataclass
class BatchResult:
    name: str
    status: str  # ok | parse_error | math_error | falsification
    report: Optional[dict] = None
    error: str = ""
    problem_text: str = ""


@dataclass
class BatchSummary:
    results: list = field(default_factory=list)
    aborted: bool = False
    reproducers: list = field(default_factory=list)

    def count(self, status) -> int:
        return sum(1 for r in self.results if r.status == status)

    @property
    def gorenstein(self) -> int:
        return sum(1 for r in self.results if r.report and r.report["theorem"]["criterion_gorenstein"])

    @property
    def non_gorenstein(self) -> int:
        return sum(1 for r in self.results if r.report and not r.report["theorem"]["criterion_gorenstein"])

    @property
    def agrees(self) -> int:
        return sum(1 for r in self.results if r.report and r.report["theorem"]["agrees"])

    @property
    def exit_code(self) -> int:
        if self.count("falsification"):
            return EXIT_FALSIFIED
        if self.count("math_error"):
            return EXIT_MATH
        if self.count("parse_error"):
            return EXIT_PARSE
        return EXIT_OK

    def to_dict(self, timing: bool = True) -> dict:
        files = []
        for r in self.results:
            entry = {"name": r.name, "status": r.status}
            if r.report:
                th = r.report["theorem"]
                entry.update(
                    dim_B=r.report["dim_B"],
                    m=r.report["m"],
                    gorenstein=th["criterion_gorenstein"],
                    socle_dim=th["socle_dim"],
                    agrees=th["agrees"],
                    falsifications=r.report["falsifications"],
                )
                if timing:
                    entry["seconds"] = r.report["timing"]["seconds"]
            if r.error:
                entry["error"] = r.error
            files.append(entry)
        return {
            "schema_version": 1,
            "total": len(self.results),
            "gorenstein": self.gorenstein,
            "non_gorenstein": self.non_gorenstein,
            "agrees": self.agrees,
            "parse_errors": self.count("parse_error"),
            "math_errors": self.count("math_error"),
            "falsifications": self.count("falsification"),
            "aborted": self.aborted,
            "reproducers": list(self.reproducers),
            "exit_code": self.exit_code,
            "files": files,
        }


def _analyze_one(item) -> BatchResult:
    name, text = item
    try:
        problem = parse_problem(text, name=name)
    except InputError as exc:
        return BatchResult(name, "parse_error", error=str(exc), problem_text=text)
    try:
        report = run_analysis(problem)
    except MathDomainError as exc:
        return BatchResult(name, "math_error", error=f"{type(exc).__name__}: {exc}", problem_text=text)
    status = "falsification" if report.falsifications else "ok"
    return BatchResult(name, status, report.to_dict(), problem_text=text)


def items_from_directory(path) -> list:
    path = Path(path)
    files = sorted(path.glob(f"*{PROBLEM_SUFFIX}"))
    if not files:
        raise UsageError(f"no *{PROBLEM_SUFFIX} files in {path}")
    return [(f.stem, f.read_text(encoding="utf-8")) for f in files]


def items_from_problems(problems: Iterable[ProblemFile]) -> list:
    return [(p.name, format_problem(p)) for p in problems]


def parse_genspec(text: str, seed: Optional[int] = None) -> list:
    """``kind[:key=value,...]`` joined by ``+``, e.g. ``ci:count=200,vars=1-3``."""
    specs = []
    for part in text.split("+"):
        kind, _, opts = part.strip().partition(":")
        kw = {}
        for opt in filter(None, (o.strip() for o in opts.split(","))):
            key, _, val = opt.partition("=")
            key = key.strip()
            if key == "vars":
                if "-" in val:
                    lo, hi = (int(v) for v in val.split("-"))
                    kw["n_vars"] = tuple(range(lo, hi + 1))
                else:
                    kw["n_vars"] = int(val)
            elif key in ("count", "seed", "max_degree", "max_dim"):
                kw[key] = int(val)
            elif key in ("maxdeg", "degree"):
                kw["max_degree"] = int(val)
            else:
                raise UsageError(f"unknown generator option {key!r}")
        if seed is not None and "seed" not in kw:
            kw["seed"] = seed
        try:
            specs.append(CorpusSpec(kind, **kw))
        except TypeError as exc:
            raise UsageError(str(exc)) from None
    return specs


def items_from_genspec(text: str, seed: Optional[int] = None) -> list:
    items = []
    for spec in parse_genspec(text, seed):
        try:
            items.extend(items_from_problems(generate_corpus(spec)))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return items


def _report_json(report: dict, timing: bool) -> str:
    if not timing:
        report = {k: v for k, v in report.items() if k != "timing"}
    return json.dumps(report, indent=2) + "\n"


def _write_reproducer(result: BatchResult, directory: Path, timing: bool) -> str:
    """Write the offending input and its report; returns the file name (relative to ``directory``)."""
    directory.mkdir(parents=True, exist_ok=True)
    stem = f"falsification-{result.name}"
    (directory / f"{stem}{PROBLEM_SUFFIX}").write_text(result.problem_text, encoding="utf-8")
    (directory / f"{stem}.json").write_text(_report_json(result.report, timing), encoding="utf-8")
    return f"{stem}{PROBLEM_SUFFIX}"


def run_batch(
    items: list,
    jobs: int = 1,
    out_dir=None,
    timing: bool = True,
    abort_on_falsification: bool = True,
) -> BatchSummary:
    """Analyse ``(name, text)`` items; per-file reports go to ``out_dir`` if given.

    A falsification event stops the run (unless ``abort_on_falsification`` is
    false) and leaves a reproducer pair (``falsification-<name>.ideal`` and
    ``.json``) in ``out_dir`` or the working directory.
    """
    if not items:
        raise UsageError("nothing to analyse")
    out = Path(out_dir) if out_dir else None
    if out:
        out.mkdir(parents=True, exist_ok=True)
    summary = BatchSummary()

    def consume(results):
        for res in results:
            summary.results.append(res)
            if out and res.report:
                (out / f"{res.name}.json").write_text(_report_json(res.report, timing), encoding="utf-8")
            if res.status == "falsification":
                log.error("falsification event in %s: %s", res.name, res.report["falsifications"])
                summary.reproducers.append(_write_reproducer(res, out or Path.cwd(), timing))
                if abort_on_falsification:
                    summary.aborted = True
                    return

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            consume(pool.map(_analyze_one, items, chunksize=max(1, len(items) // (4 * jobs))))
    else:
        consume(_analyze_one(item) for item in items)
    return summary


def default_seed(seed: Optional[int] = None) -> int:
    if seed is not None:
        return seed
    return int(os.environ.get("MULTISTRUCT_SEED", "0"))

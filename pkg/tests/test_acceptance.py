"""Acceptance criteria, one test per criterion.

Each test records a single PASS/FAIL line; the lines are printed together in
the terminal summary (see ``pytest_terminal_summary`` in conftest.py).
"""

import json
import random
import time

import numpy as np
import pytest

from conftest import EXAMPLE_TEXT
from oracle import BruteAlgebra
from multistruct.algebra import colon_into_zero
from multistruct.cli import main as cli_main
from multistruct.corpus import acceptance_corpus
from multistruct.groebner import normal_form, reduce_full, s_polynomial
from multistruct.linalg import Subspace, rref
from multistruct.problem import parse_problem
from multistruct.report import analyze_problem, run_analysis
from multistruct.scalars import QQ, PrimeField

RESULTS = {}


def record(number, title, ok, detail=""):
    RESULTS[number] = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title}" + (f" ({detail})" if detail else "")
    return ok


@pytest.fixture(scope="module")
def timed_corpus():
    start = time.perf_counter()
    problems = acceptance_corpus(seed=0)
    analyses = [(p, analyze_problem(p)) for p in problems]
    return analyses, time.perf_counter() - start


def test_criterion_1_theorem_equivalence(timed_corpus):
    analyses, elapsed = timed_corpus
    disagree = [p.name for p, an in analyses if not an.theorem.agrees]
    ok = len(analyses) >= 500 and not disagree and elapsed < 60
    record(1, "criterion_gorenstein == socle oracle", ok,
           f"{len(analyses) - len(disagree)}/{len(analyses)} agree, {elapsed:.1f} s")
    assert not disagree, disagree
    assert len(analyses) == 500
    assert elapsed < 60


def test_criterion_2_golden_example():
    # oracle first: sympy Groebner basis plus brute-force linear algebra on the monomial basis
    ba = BruteAlgebra(["x^3", "x*y", "y^4"], ["x", "y"])
    m, powers, ann, dann = ba.chains()
    graded = lambda ch: tuple(len(ch[l]) - len(ch[l + 1]) for l in range(m + 1))  # noqa: E731
    expected = (ba.n, m, graded(powers), graded(dann), graded(ann), ba.socle_dim())
    assert expected == (6, 3, (1, 2, 2, 1), (1, 2, 1, 2), (1, 1, 2, 2), 2)

    an = analyze_problem(parse_problem(EXAMPLE_TEXT))
    t = an.type
    got = (an.algebra.dim, an.m, t.dims_B, t.dims_A, t.dims_M, an.theorem.socle_dim)
    verdict_ok = not an.theorem.criterion_gorenstein and not an.theorem.cond_a
    distinct = len({t.dims_B, t.dims_A, t.dims_M}) == 3
    ok = got == expected and verdict_ok and distinct
    record(2, "golden example k[x,y]/(x^3,xy,y^4)", ok, f"dims_B={t.dims_B} dims_A={t.dims_A} dims_M={t.dims_M}")
    assert got == expected
    assert verdict_ok and distinct


def test_criterion_3_complete_intersections(timed_corpus):
    analyses, _ = timed_corpus
    ci = [(p, an) for p, an in analyses if p.name.startswith("ci-")]
    bad = [
        p.name for p, an in ci
        if not (an.theorem.criterion_gorenstein and all(q.bijective for q in an.pairings))
    ]
    ok = len(ci) == 200 and not bad
    record(3, "complete intersections are Gorenstein", ok, f"{len(ci) - len(bad)}/{len(ci)}")
    assert len(ci) == 200 and not bad, bad


def test_criterion_4_property_battery(timed_corpus):
    analyses, _ = timed_corpus
    violations = {}
    for p, an in analyses:
        for prop in an.properties:
            if prop.violated:
                violations.setdefault(prop.name, []).append(p.name)
    checked = {prop.name for _, an in analyses for prop in an.properties if prop.hypothesis_met}
    detail = "; ".join(f"{k} violated on {', '.join(v)}" for k, v in sorted(violations.items())) or (
        f"{len(checked)} properties, no violations"
    )
    record(4, "property battery holds under its hypotheses", not violations, detail)
    assert not violations, detail


def _dimension_data(problem, field):
    return run_analysis(problem.over(field)).dimension_data()


def test_criterion_5_characteristic_robustness(timed_corpus):
    analyses, _ = timed_corpus
    rng = random.Random(0)
    picks = [p for p, _ in rng.sample(analyses, 20)]
    cases = [parse_problem(EXAMPLE_TEXT, name="example")] + picks
    differ = []
    for p in cases:
        base = _dimension_data(p, 32003)
        for field in (2, "Q"):
            if _dimension_data(p, field) != base:
                differ.append(f"{p.name}/{field}")
    record(5, "same dimension data over F_32003, F_2 and Q", not differ,
           f"{len(cases) - len({d.split('/')[0] for d in differ})}/{len(cases)} instances identical")
    assert not differ, differ


def _random_poly(rng, ring, nterms=5, deg=5):
    terms = {}
    for _ in range(nterms):
        terms[tuple(rng.randint(0, deg) for _ in ring.vars.names)] = rng.randint(-20, 20)
    return ring.from_terms(terms.items())


def test_criterion_6_engine_suites(timed_corpus):
    analyses, _ = timed_corpus
    failures = []

    # S-polynomials of every output basis reduce to zero
    for p, an in analyses:
        gb = an.algebra.gb
        g, lms = list(gb), gb.leading_monomials
        for i in range(len(g)):
            for j in range(i + 1, len(g)):
                if not reduce_full(s_polynomial(g[i], g[j]), g, lms).is_zero():
                    failures.append(f"S-pair {p.name}")

    # normal form idempotence and linearity, 10^4 random checks over corpus bases
    rng = random.Random(1)
    gbs = [an.algebra.gb for _, an in analyses]
    for _ in range(10_000):
        gb = rng.choice(gbs)
        ring = gb.ring
        f, h = _random_poly(rng, ring), _random_poly(rng, ring)
        a, b = (ring.field.coerce(rng.randint(-50, 50)) for _ in range(2))
        nf = normal_form(f, gb)
        if normal_form(nf, gb) != nf:
            failures.append("NF idempotence")
        if normal_form(f.scale(a) + h.scale(b), gb) != nf.scale(a) + normal_form(h, gb).scale(b):
            failures.append("NF linearity")

    # RREF canonicity and the Grassmann identity on 10^4 random subspace pairs
    nprng = np.random.default_rng(2)
    for trial in range(10_000):
        field = QQ if trial % 10 == 0 else PrimeField(32003)
        n = int(nprng.integers(1, 9))
        gens_a = nprng.integers(-3, 4, size=(int(nprng.integers(0, n + 2)), n))
        gens_b = nprng.integers(-3, 4, size=(int(nprng.integers(0, n + 2)), n))
        a = Subspace.span(field, n, gens_a.tolist()) if len(gens_a) else Subspace.zero(field, n)
        b = Subspace.span(field, n, gens_b.tolist()) if len(gens_b) else Subspace.zero(field, n)
        if a.dim:
            mix = nprng.integers(-3, 4, size=(a.dim + 1, a.dim))
            while rref(field, field.array(mix.tolist()))[1] < a.dim:
                mix = nprng.integers(-3, 4, size=(a.dim + 1, a.dim))
            other = Subspace.span(field, n, field.matmul(field.array(mix.tolist()), a.basis))
            if not np.array_equal(other.basis, a.basis) or other.pivots != a.pivots:
                failures.append("RREF canonicity")
        if (a + b).dim + (a & b).dim != a.dim + b.dim:
            failures.append("Grassmann identity")

    # double-annihilator closure on every filtration ideal of every corpus instance
    n_ideals = 0
    for p, an in analyses:
        for chain in an.filtrations.chains():
            for ideal in chain.members:
                n_ideals += 1
                ann = colon_into_zero(ideal)
                if colon_into_zero(colon_into_zero(ann)) != ann:
                    failures.append(f"closure {p.name}")

    record(6, "engine-level suites", not failures,
           f"{len(failures)} failures; closure checked on {n_ideals} ideals")
    assert not failures, failures[:20]


def test_criterion_7_batch_determinism(tmp_path, capsys):
    spec = "ci:count=200,vars=1-3+monomial:count=200,vars=1-3+random:count=100,vars=1-3"
    outputs = []
    for run in ("a", "b"):
        code = cli_main(["batch", spec, "--seed", "0", "--keep-going", "--json", "--no-timing",
                         "--out", str(tmp_path / run)])
        outputs.append((code, capsys.readouterr().out))
    (code_a, out_a), (code_b, out_b) = outputs
    files_a = sorted(p.name for p in (tmp_path / "a").iterdir())
    files_b = sorted(p.name for p in (tmp_path / "b").iterdir())
    same_files = files_a == files_b and all(
        (tmp_path / "a" / f).read_bytes() == (tmp_path / "b" / f).read_bytes() for f in files_a
    )
    summary = json.loads(out_a)
    ok = out_a == out_b and same_files and code_a == code_b and summary["total"] == 500
    record(7, "batch output byte-identical across runs", ok,
           f"{summary['total']} reports, {len(files_a)} files, exit {code_a}")
    assert out_a == out_b
    assert same_files
    assert summary["total"] == 500

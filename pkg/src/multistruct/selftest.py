"""Built-in invariant suite behind ``multistruct selftest``."""

from __future__ import annotations

import random
import sys

import numpy as np

from .algebra import colon_into_zero
from .corpus import CorpusSpec, generate_corpus
from .groebner import buchberger, normal_form, reduce_full, s_polynomial
from .linalg import Subspace, rref
from .problem import parse_problem
from .report import analyze_problem
from .scalars import PrimeField

EXAMPLE = "field 32003\nvars x, y\nideal x^3; x*y; y^4\n"


def _check_example(out):
    an = analyze_problem(parse_problem(EXAMPLE))
    t = an.type
    ok = (
        an.algebra.dim == 6
        and an.m == 3
        and (t.dims_B, t.dims_A, t.dims_M) == ((1, 2, 2, 1), (1, 2, 1, 2), (1, 1, 2, 2))
        and not an.theorem.criterion_gorenstein
        and an.theorem.socle_dim == 2
    )
    out.append(("example x^3, xy, y^4", ok))


def _check_corpus(out, count):
    problems = []
    for kind in ("ci", "monomial", "random"):
        problems += generate_corpus(CorpusSpec(kind, (1, 2, 3), count, seed=7))
    agree = closure = spairs = nf = True
    rng = random.Random(0)
    for p in problems:
        gb = buchberger(list(p.generators))
        lms = gb.leading_monomials
        polys = list(gb)
        for i in range(len(polys)):
            for j in range(i + 1, len(polys)):
                if not reduce_full(s_polynomial(polys[i], polys[j]), polys, lms).is_zero():
                    spairs = False
        ring = p.ring
        f = ring.zero()
        for g in p.generators:
            f = f + g * ring.monomial(tuple(rng.randint(0, 2) for _ in ring.vars.names))
        f = f + ring.const(rng.randint(1, 5))
        h = normal_form(f, gb)
        nf = nf and normal_form(h, gb) == h
        an = analyze_problem(p)
        agree = agree and an.theorem.agrees
        filt = an.filtrations
        for chain in (filt.powers, filt.ann, filt.dann):
            for a in chain.members:
                ann = colon_into_zero(a)
                closure = closure and colon_into_zero(colon_into_zero(ann)) == ann
    n = len(problems)
    out.append((f"criterion agrees with socle oracle ({n} instances)", agree))
    out.append((f"S-polynomials reduce to zero ({n} bases)", spairs))
    out.append((f"normal form idempotent ({n} samples)", nf))
    out.append(("double-annihilator closure on every filtration ideal", closure))


def _check_linalg(out, trials):
    field = PrimeField(101)
    rng = np.random.default_rng(0)
    canon = grassmann = True
    for _ in range(trials):
        n = int(rng.integers(1, 7))
        a = rng.integers(0, 101, size=(int(rng.integers(0, n + 1)), n))
        b = rng.integers(0, 101, size=(int(rng.integers(0, n + 1)), n))
        sa, sb = Subspace.span(field, n, a), Subspace.span(field, n, b)
        mixed = np.vstack([a, a[::-1] * 3 % 101]) if len(a) else a
        canon = canon and Subspace.span(field, n, mixed) == sa
        r, rk = rref(field, mixed) if len(a) else (None, 0)
        canon = canon and rk == sa.dim
        grassmann = grassmann and (sa + sb).dim + (sa & sb).dim == sa.dim + sb.dim
    out.append((f"RREF canonicity ({trials} subspaces)", canon))
    out.append((f"Grassmann identity ({trials} pairs)", grassmann))


def run_selftest(quick: bool = False, stream=None) -> int:
    stream = stream or sys.stdout
    out: list = []
    _check_example(out)
    _check_corpus(out, 3 if quick else 15)
    _check_linalg(out, 200 if quick else 2000)
    for label, ok in out:
        print(f"{'PASS' if ok else 'FAIL'} {label}", file=stream)
    return 0 if all(ok for _, ok in out) else 4

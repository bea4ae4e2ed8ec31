"""Seeded generators of local Artinian test algebras.

Three kinds:

``ci``
    complete intersections, one generator per variable,
    ``x_i^d + sum(±x_i^j * u)`` with j < d and u a non-constant monomial in
    the variables already used.  Every variable is then nilpotent and the
    quotient has dimension ``prod(d_i)``.  These are Gorenstein.
``monomial``
    a pure power of every variable plus a few mixed monomials.
``random``
    a monomial ideal plus one or two random binomials; candidates that are
    not local (or too big) are discarded.

Coefficients are ±1 so that a generated file means the same thing over any
field.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import GenerationExhausted, MathDomainError
from .algebra import locality_check
from .groebner import buchberger, present_algebra
from .poly import PolyRing, VarSet
from .problem import ProblemFile
from .scalars import DEFAULT_PRIME, Field, PrimeField

KINDS = ("ci", "monomial", "random")
MAX_FAILURES = 100

_KIND_ALIASES = {
    "ci": "ci",
    "completeintersection": "ci",
    "complete_intersection": "ci",
    "monomial": "monomial",
    "random": "random",
}


def normalise_kind(kind: str) -> str:
    key = kind.strip().lower().replace("-", "_")
    if key not in _KIND_ALIASES:
        raise ValueError(f"unknown corpus kind {kind!r}; expected one of {KINDS}")
    return _KIND_ALIASES[key]


@dataclass(frozen=True)
class CorpusSpec:
    kind: str
    n_vars: Union[int, Sequence[int]] = 2
    count: int = 10
    seed: int = 0
    max_degree: int = 4
    max_dim: int = 150
    field: Field = PrimeField(DEFAULT_PRIME)

    def var_choices(self) -> tuple:
        nv = (self.n_vars,) if isinstance(self.n_vars, int) else tuple(self.n_vars)
        if not nv or min(nv) < 1:
            raise ValueError("n_vars must be >= 1")
        return nv


def _var_names(n: int) -> tuple:
    if n <= 3:
        return ("x", "y", "z")[:n]
    return tuple(f"x{i + 1}" for i in range(n))


def _sign(rng: random.Random) -> int:
    return rng.choice((1, -1))


def _random_monomial(rng, n, max_exps, min_deg=1, allowed=None):
    """Exponent vector with e_i <= max_exps[i], supported on ``allowed`` variables."""
    allowed = list(range(n)) if allowed is None else list(allowed)
    for _ in range(50):
        e = [0] * n
        for v in allowed:
            e[v] = rng.randint(0, max_exps[v])
        if sum(e) >= min_deg:
            return tuple(e)
    e = [0] * n
    e[allowed[0]] = max(min_deg, 1)
    return tuple(e)


def _ci_candidate(rng, ring, max_degree, max_dim):
    n = ring.nvars
    while True:
        degs = [rng.randint(1, max_degree) for _ in range(n)]
        if math.prod(degs) <= max_dim:
            break
    order = list(range(n))
    rng.shuffle(order)
    gens = []
    for k, v in enumerate(order):
        d = degs[v]
        e = [0] * n
        e[v] = d
        terms = {tuple(e): 1}
        earlier = order[:k]
        if earlier and d > 1:
            for _ in range(rng.randint(0, 2)):
                u = _random_monomial(rng, n, [max(1, d - 1)] * n, 1, earlier)
                j = rng.randint(0, d - 1)
                mono = list(u)
                mono[v] = j
                mono = tuple(mono)
                if mono not in terms and sum(mono) <= d + 1:
                    terms[mono] = _sign(rng)
        gens.append(ring.from_terms(terms))
    return gens


def _monomial_part(rng, ring, max_degree, extra_max=3):
    n = ring.nvars
    powers = [rng.randint(1, max_degree) for _ in range(n)]
    gens = []
    for v in range(n):
        e = [0] * n
        e[v] = powers[v]
        gens.append(tuple(e))
    if n > 1:
        for _ in range(rng.randint(0, extra_max)):
            mono = _random_monomial(rng, n, [max(0, p - 1) for p in powers], 2)
            if sum(1 for x in mono if x) >= 2 and mono not in gens:
                gens.append(mono)
    return gens


def _monomial_candidate(rng, ring, max_degree, max_dim):
    return [ring.monomial(m) for m in _monomial_part(rng, ring, max_degree)]


def _random_candidate(rng, ring, max_degree, max_dim):
    n = ring.nvars
    gens = [ring.monomial(m) for m in _monomial_part(rng, ring, max_degree + 1, extra_max=1)]
    for _ in range(rng.randint(1, 2)):
        u1 = _random_monomial(rng, n, [max_degree] * n, 1)
        if rng.random() < 0.1:
            u2 = (0,) * n
        else:
            u2 = _random_monomial(rng, n, [max_degree] * n, 1)
        if u1 == u2:
            continue
        gens.append(ring.from_terms({u1: 1, u2: _sign(rng)}))
    return gens


_BUILDERS = {
    "ci": _ci_candidate,
    "monomial": _monomial_candidate,
    "random": _random_candidate,
}


def _valid(gens, max_dim) -> bool:
    try:
        alg = present_algebra(buchberger(gens))
        if alg.is_zero_ring or alg.dim > max_dim:
            return False
        locality_check(alg)
    except MathDomainError:
        return False
    return True


def generate_corpus(spec: CorpusSpec) -> list:
    """Deterministic list of ``spec.count`` valid problems."""
    kind = normalise_kind(spec.kind)
    if spec.count < 1:
        raise ValueError("count must be >= 1")
    choices = spec.var_choices()
    rng = random.Random(f"{kind}:{spec.seed}")
    build = _BUILDERS[kind]
    out = []
    failures = 0
    while len(out) < spec.count:
        n = rng.choice(choices)
        ring = PolyRing(spec.field, VarSet(_var_names(n)))
        gens = build(rng, ring, spec.max_degree, spec.max_dim)
        if not _valid(gens, spec.max_dim):
            failures += 1
            if failures >= MAX_FAILURES:
                raise GenerationExhausted(
                    f"{MAX_FAILURES} consecutive invalid {kind} candidates (seed {spec.seed})"
                )
            continue
        failures = 0
        out.append(ProblemFile(spec.field, ring.vars, tuple(gens), "intrinsic", f"{kind}-{spec.seed}-{len(out):04d}"))
    return out


def acceptance_corpus(seed: int = 0, field: Field = PrimeField(DEFAULT_PRIME)) -> list:
    """200 complete intersections, 200 monomial and 100 random algebras in 1 to 3 variables."""
    out = []
    for kind, count in (("ci", 200), ("monomial", 200), ("random", 100)):
        out.extend(generate_corpus(CorpusSpec(kind, (1, 2, 3), count, seed, field=field)))
    return out

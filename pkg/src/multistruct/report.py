"""The analysis pipeline and its JSON report."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field, fields
from typing import Optional

import numpy as np

from .algebra import lift_generators
from .errors import MathDomainError, ZeroRing
from .groebner import buchberger, present_algebra
from .poly import format_monomial
from .problem import ProblemFile
from .structure import StructureAnalysis, analyze

SCHEMA_VERSION = 1

NOTES = {
    "powers": (
        "Banica-Forster filtration computed as the powers I^l: in a local Artinian "
        "ring the maximal ideal is the only associated prime, so I^l has no "
        "embedded components"
    ),
    "trivial": "m = 0: B is the residue field (trivial multiplicity 1); every chain is B > 0",
}


@dataclass
class StructureReport:
    schema_version: int
    name: str
    input: dict
    groebner_basis: list
    standard_monomials: list
    dim_B: int
    m: int
    trivial: bool
    notes: list
    chains: dict
    type: dict
    quasiprimitive: bool
    canonical_morphisms: list
    pairings: list
    theorem: dict
    socle_generators: list
    properties: list
    falsifications: list
    embedded: Optional[dict] = None
    timing: dict = field(default_factory=dict)

    @property
    def gorenstein(self) -> bool:
        return self.theorem["criterion_gorenstein"]

    @property
    def agrees(self) -> bool:
        return self.theorem["agrees"]

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        if not timing:
            d.pop("timing")
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "StructureReport":
        names = {f.name for f in fields(cls)}
        unknown = set(d) - names
        if unknown:
            raise ValueError(f"unknown report fields: {sorted(unknown)}")
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> "StructureReport":
        return cls.from_dict(json.loads(text))

    def dimension_data(self) -> dict:
        """Everything in the report that does not depend on coefficients."""
        return {
            "dim_B": self.dim_B,
            "m": self.m,
            "chains": self.chains,
            "type": self.type,
            "quasiprimitive": self.quasiprimitive,
            "canonical_morphisms": self.canonical_morphisms,
            "pairings": [{k: v for k, v in p.items() if k != "matrix"} for p in self.pairings],
            "theorem": self.theorem,
            "properties": [{k: v for k, v in p.items() if k != "witness"} for p in self.properties],
        }


def _map_dict(induced) -> dict:
    return {
        "rank": induced.rank,
        "source_dim": induced.source_dim,
        "target_dim": induced.target_dim,
        "injective": induced.is_injective,
        "surjective": induced.is_surjective,
    }


def _lifts(chain, gb) -> list:
    return [[str(f) for f in lift_generators(a, gb)] for a in chain.members]


def build_report(problem: ProblemFile, an: StructureAnalysis, seconds: float = 0.0) -> StructureReport:
    alg = an.algebra
    field = alg.field
    names = alg.ring.vars.names
    filt = an.filtrations
    t = an.type
    th = an.theorem
    notes = [NOTES["powers"]]
    if an.m == 0:
        notes.append(NOTES["trivial"])
    embedded = None
    if problem.mode == "embedded":
        embedded = {
            "ambient_ideal": [str(g) for g in alg.gb],
            "convention": "each filtration ideal is generated by the listed polynomials together with ambient_ideal",
            "powers": _lifts(filt.powers, alg.gb),
            "annihilator": _lifts(filt.ann, alg.gb),
            "double_annihilator": _lifts(filt.dann, alg.gb),
        }
    return StructureReport(
        schema_version=SCHEMA_VERSION,
        name=problem.name,
        input={
            "field": field.spec_string(),
            "vars": list(names),
            "ideal": [str(g) for g in problem.generators],
            "mode": problem.mode,
        },
        groebner_basis=[str(g) for g in alg.gb],
        standard_monomials=[format_monomial(mono, names) for mono in alg.standard_monomials],
        dim_B=alg.dim,
        m=an.m,
        trivial=an.m == 0,
        notes=notes,
        chains={
            "powers": list(filt.powers.dims),
            "annihilator": list(filt.ann.dims),
            "double_annihilator": list(filt.dann.dims),
        },
        type={"B": list(t.dims_B), "A": list(t.dims_A), "M": list(t.dims_M)},
        quasiprimitive=an.quasiprimitive,
        canonical_morphisms=[
            {"index": mr.index, "B_to_A": _map_dict(mr.b_to_a), "A_to_M": _map_dict(mr.a_to_m)}
            for mr in an.morphisms
        ],
        pairings=[
            {
                "index": p.index,
                "rows": int(p.matrix.shape[0]),
                "cols": int(p.matrix.shape[1]),
                "rank": p.rank,
                "injective": p.induced.is_injective,
                "surjective": p.induced.is_surjective,
                "bijective": p.bijective,
                "matrix": [[field.format(_raw(c)) for c in row] for row in p.matrix],
            }
            for p in an.pairings
        ],
        theorem={
            "cond_a": th.cond_a,
            "dim_A_m": th.dim_A_m,
            "dim_M_m": th.dim_M_m,
            "cond_b": th.cond_b,
            "cond_c": th.cond_c,
            "pairing_ranks": list(th.pairing_ranks),
            "criterion_gorenstein": th.criterion_gorenstein,
            "socle_dim": th.socle_dim,
            "oracle_gorenstein": th.oracle_gorenstein,
            "agrees": th.agrees,
        },
        socle_generators=[str(f) for f in lift_generators(an.socle, alg.gb)],
        properties=[
            {"name": p.name, "hypothesis_met": p.hypothesis_met, "passed": p.passed, "witness": p.witness}
            for p in an.properties
        ],
        falsifications=[p.name for p in an.falsifications()],
        embedded=embedded,
        timing={"seconds": round(seconds, 6)},
    )


def _raw(c):
    return int(c) if isinstance(c, np.integer) else c


def analyze_problem(problem: ProblemFile) -> StructureAnalysis:
    """Groebner basis -> presentation -> filtrations -> verdict -> property battery."""
    gens_text = "; ".join(str(g) for g in problem.generators)
    try:
        alg = present_algebra(buchberger(list(problem.generators)))
        if alg.is_zero_ring:
            raise ZeroRing("the ideal is the unit ideal, so B = 0")
        return analyze(alg)
    except MathDomainError as exc:
        raise type(exc)(f"{exc} [ideal: {gens_text}]") from None


def run_analysis(problem: ProblemFile) -> StructureReport:
    start = time.perf_counter()
    an = analyze_problem(problem)
    return build_report(problem, an, time.perf_counter() - start)

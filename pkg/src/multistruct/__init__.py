"""Canonical filtrations of local Artinian algebras and a Gorenstein criterion.

Typical use::

    from multistruct import parse_problem, run_analysis
    report = run_analysis(parse_problem("field 32003\nvars x, y\nideal x^3; x*y; y^4"))
    report.type, report.gorenstein
"""

from .algebra import (
    IdealSubspace,
    colon,
    colon_into_zero,
    ideal_generated,
    ideal_product,
    locality_check,
    maximal_ideal,
    socle,
)
from .corpus import CorpusSpec, acceptance_corpus, generate_corpus
from .errors import (
    FalsificationEvent,
    InputError,
    MathDomainError,
    MultistructError,
    NotLocal,
    NotZeroDimensional,
    ParseError,
    ZeroRing,
)
from .groebner import AlgebraPresentation, GroebnerBasis, buchberger, normal_form, present_algebra
from .linalg import Subspace, induced_map_rank, kernel, rref
from .poly import PolyRing, Polynomial, VarSet
from .problem import ProblemFile, format_problem, parse_problem
from .report import StructureReport, analyze_problem, run_analysis
from .scalars import QQ, PrimeField, RationalField, Scalar, field_from_spec
from .structure import analyze, build_filtrations, graded_pieces, theorem_check

__version__ = "0.1.0"

__all__ = [
    "AlgebraPresentation",
    "CorpusSpec",
    "FalsificationEvent",
    "GroebnerBasis",
    "IdealSubspace",
    "InputError",
    "MathDomainError",
    "MultistructError",
    "NotLocal",
    "NotZeroDimensional",
    "ParseError",
    "PolyRing",
    "Polynomial",
    "PrimeField",
    "ProblemFile",
    "QQ",
    "RationalField",
    "Scalar",
    "StructureReport",
    "Subspace",
    "VarSet",
    "ZeroRing",
    "acceptance_corpus",
    "analyze",
    "analyze_problem",
    "build_filtrations",
    "buchberger",
    "colon",
    "colon_into_zero",
    "field_from_spec",
    "format_problem",
    "generate_corpus",
    "graded_pieces",
    "ideal_generated",
    "ideal_product",
    "induced_map_rank",
    "kernel",
    "locality_check",
    "maximal_ideal",
    "normal_form",
    "parse_problem",
    "present_algebra",
    "rref",
    "run_analysis",
    "socle",
    "theorem_check",
]

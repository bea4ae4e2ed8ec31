"""Canonical filtrations of a local Artinian algebra and the Gorenstein duality test.

For the maximal ideal I with I^m != 0 = I^(m+1) three chains of ideals are
built, each indexed 0..m+1:

* powers      I^l
* annihilator I_l = 0 : I^(m+1-l)
* double      J_l = 0 : (0 : I^l)

Their successive quotients give the graded objects B(Y), M(Y) and A(Y).  The
duality criterion asks that A_m and M_m be one-dimensional, that J_m = I_m,
and that multiplication A_l x M_(m-l) -> M_m be a perfect pairing for every
l.  The socle dimension is computed independently as an oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .algebra import (
    IdealSubspace,
    colon_into_zero,
    ideal_product,
    power_chain,
    socle,
)
from .errors import DegenerateTarget, InternalInvariantViolation, NotWellDefined
from .groebner import AlgebraPresentation
from .linalg import InducedMap, Subspace, induced_map_rank, stack_spaces

POWERS = "powers"
ANNIHILATOR = "annihilator"
DOUBLE_ANNIHILATOR = "double_annihilator"


@dataclass
class IdealChain:
    kind: str
    members: list

    @property
    def dims(self) -> tuple:
        return tuple(a.dim for a in self.members)

    def __getitem__(self, i) -> IdealSubspace:
        return self.members[i]

    def __len__(self):
        return len(self.members)


@dataclass
class Filtrations:
    algebra: AlgebraPresentation
    m: int
    powers: IdealChain
    ann: IdealChain
    dann: IdealChain

    def chains(self):
        return (self.powers, self.ann, self.dann)


def _check_chain(chain: IdealChain, n: int):
    dims = chain.dims
    if dims[0] != n or dims[-1] != 0:
        raise InternalInvariantViolation(f"{chain.kind} chain has endpoints {dims[0]}, {dims[-1]}")
    for big, small in zip(chain.members, chain.members[1:]):
        if not small <= big or small.dim >= big.dim:
            raise InternalInvariantViolation(f"{chain.kind} chain is not strictly decreasing: {dims}")


def build_filtrations(algebra: AlgebraPresentation, m: Optional[int] = None) -> Filtrations:
    """The three chains, each of length m+2 running from B down to 0."""
    powers = power_chain(algebra)
    actual_m = len(powers) - 2
    if m is not None and m != actual_m:
        raise ValueError(f"given m={m} but I^{actual_m} is the last nonzero power")
    m = actual_m
    ann = [colon_into_zero(powers[m + 1 - ell]) for ell in range(m + 2)]
    # J_l = 0 : (0 : I^l) = 0 : I_(m+1-l)
    dann = [colon_into_zero(ann[m + 1 - ell]) for ell in range(m + 2)]
    filt = Filtrations(
        algebra,
        m,
        IdealChain(POWERS, list(powers)),
        IdealChain(ANNIHILATOR, ann),
        IdealChain(DOUBLE_ANNIHILATOR, dann),
    )
    for chain in filt.chains():
        _check_chain(chain, algebra.dim)
    return filt


@dataclass
class GradedPiece:
    index: int
    numerator: IdealSubspace
    denominator: IdealSubspace
    basis_reps: np.ndarray

    @property
    def dim(self) -> int:
        return self.numerator.dim - self.denominator.dim


@dataclass(frozen=True)
class StructureType:
    dims_B: tuple
    dims_A: tuple
    dims_M: tuple


@dataclass
class GradedObjects:
    B: list
    A: list
    M: list
    type: StructureType


def _pieces(chain: IdealChain) -> list:
    out = []
    for ell in range(len(chain) - 1):
        num, den = chain[ell], chain[ell + 1]
        out.append(GradedPiece(ell, num, den, num.space.quotient_reps(den.space)))
    return out


def graded_pieces(filt: Filtrations) -> GradedObjects:
    b, a, mm = _pieces(filt.powers), _pieces(filt.dann), _pieces(filt.ann)
    st = StructureType(
        tuple(p.dim for p in b),
        tuple(p.dim for p in a),
        tuple(p.dim for p in mm),
    )
    n = filt.algebra.dim
    for name, dims in (("B", st.dims_B), ("A", st.dims_A), ("M", st.dims_M)):
        if sum(dims) != n:
            raise InternalInvariantViolation(f"graded dims of {name} sum to {sum(dims)}, not {n}")
    return GradedObjects(b, a, mm, st)


@dataclass
class MorphismRanks:
    index: int
    b_to_a: InducedMap
    a_to_m: InducedMap


def canonical_morphisms(filt: Filtrations) -> list:
    """Maps B_l -> A_l -> M_l induced by the inclusions I^l ⊆ J_l ⊆ I_l."""
    alg = filt.algebra
    ident = alg.field.identity(alg.dim)
    out = []
    for ell in range(filt.m + 1):
        p, p1 = filt.powers[ell].space, filt.powers[ell + 1].space
        j, j1 = filt.dann[ell].space, filt.dann[ell + 1].space
        i, i1 = filt.ann[ell].space, filt.ann[ell + 1].space
        if not (j.contains(p) and i.contains(j)):
            raise NotWellDefined(f"inclusions I^l ⊆ J_l ⊆ I_l fail at l={ell}")
        b_to_a = induced_map_rank(alg.field, ident, p, p1, j, j1)
        a_to_m = induced_map_rank(alg.field, ident, j, j1, i, i1)
        out.append(MorphismRanks(ell, b_to_a, a_to_m))
    return out


@dataclass
class Pairing:
    index: int
    matrix: np.ndarray
    induced: InducedMap

    @property
    def rank(self) -> int:
        return self.induced.rank

    @property
    def bijective(self) -> bool:
        return self.induced.is_bijective


def pairing_map(ell: int, filt: Filtrations, graded: GradedObjects) -> Pairing:
    """Matrix and rank of A_l -> Hom(M_(m-l), M_m), a -> (x -> a·x)."""
    alg = filt.algebra
    field = alg.field
    m = filt.m
    top = filt.ann[m]
    if top.dim == 0:
        raise DegenerateTarget("M_m is zero")
    xs = graded.M[m - ell].basis_reps
    a_piece = graded.A[ell]

    # representative independence on the M side: J_l · I_(m+1-l) = 0
    if ideal_product(filt.dann[ell], filt.ann[m + 1 - ell]).dim:
        raise NotWellDefined(f"J_{ell} does not kill I_{m + 1 - ell}")

    d = len(xs)
    if d == 0:
        f = field.array(None, (0, alg.dim))
    else:
        f = np.vstack([alg.mult_matrix(x) for x in xs])
    zero_cod = Subspace.zero(field, d * alg.dim)
    induced = induced_map_rank(
        field,
        f,
        filt.dann[ell].space,
        filt.dann[ell + 1].space,
        stack_spaces([top.space] * d) if d else zero_cod,
        zero_cod,
    )

    pivots = list(top.space.pivots)
    rows = []
    for a in a_piece.basis_reps:
        row = []
        for x in xs:
            prod = alg.multiply(a, x)
            row.extend(prod[pivots])
        rows.append(row)
    matrix = field.array(None, (len(rows), d * len(pivots)))
    for r, row in enumerate(rows):
        matrix[r, :] = row
    return Pairing(ell, matrix, induced)


@dataclass
class TheoremVerdict:
    cond_a: bool
    dim_A_m: int
    dim_M_m: int
    cond_b: bool
    cond_c: bool
    pairing_ranks: list
    pairing_bijective: list
    socle_dim: int

    @property
    def criterion_gorenstein(self) -> bool:
        return self.cond_a and self.cond_b and self.cond_c

    @property
    def oracle_gorenstein(self) -> bool:
        return self.socle_dim == 1

    @property
    def agrees(self) -> bool:
        return self.criterion_gorenstein == self.oracle_gorenstein


@dataclass
class PropertyResult:
    name: str
    hypothesis_met: bool
    passed: bool
    witness: dict = field(default_factory=dict)

    @property
    def violated(self) -> bool:
        return self.hypothesis_met and not self.passed


@dataclass
class StructureAnalysis:
    algebra: AlgebraPresentation
    filtrations: Filtrations
    graded: GradedObjects
    morphisms: list
    pairings: list
    theorem: TheoremVerdict
    socle: IdealSubspace
    properties: list = field(default_factory=list)

    @property
    def m(self) -> int:
        return self.filtrations.m

    @property
    def type(self) -> StructureType:
        return self.graded.type

    @property
    def quasiprimitive(self) -> bool:
        t = self.graded.type
        return all(d == 1 for d in t.dims_A) and all(d == 1 for d in t.dims_M)

    def falsifications(self) -> list:
        out = [p for p in self.properties if p.violated]
        if not self.theorem.agrees:
            out.append(
                PropertyResult(
                    "theorem_equivalence",
                    True,
                    False,
                    {
                        "criterion": self.theorem.criterion_gorenstein,
                        "socle_dim": self.theorem.socle_dim,
                    },
                )
            )
        return out


def _verdict(filt, graded, pairings, soc) -> TheoremVerdict:
    m = filt.m
    dim_a, dim_m = graded.A[m].dim, graded.M[m].dim
    return TheoremVerdict(
        cond_a=dim_a == 1 and dim_m == 1,
        dim_A_m=dim_a,
        dim_M_m=dim_m,
        cond_b=filt.dann[m] == filt.ann[m],
        cond_c=all(p.bijective for p in pairings),
        pairing_ranks=[p.rank for p in pairings],
        pairing_bijective=[p.bijective for p in pairings],
        socle_dim=soc.dim,
    )


def analyze(algebra: AlgebraPresentation, properties: bool = True) -> StructureAnalysis:
    """Filtrations, graded objects, maps, theorem verdict and (optionally) the property battery."""
    filt = build_filtrations(algebra)
    graded = graded_pieces(filt)
    morphisms = canonical_morphisms(filt)
    pairings = [pairing_map(ell, filt, graded) for ell in range(filt.m + 1)]
    soc = socle(algebra)
    verdict = _verdict(filt, graded, pairings, soc)
    result = StructureAnalysis(algebra, filt, graded, morphisms, pairings, verdict, soc)
    if properties:
        result.properties = property_battery(result)
    return result


def theorem_check(algebra: AlgebraPresentation) -> TheoremVerdict:
    return analyze(algebra, properties=False).theorem


# -- property battery ------------------------------------------------------------


def _products_escape(alg, left: np.ndarray, right: np.ndarray, target: Subspace) -> bool:
    """True if some product left[i]·right[j] lies outside ``target``."""
    field = alg.field
    if len(left) == 0 or len(right) == 0:
        return False
    if len(left) > len(right):
        left, right = right, left
    for a in left:
        prods = field.matmul(right, alg.mult_matrix(a).T)
        if np.any(target.reduce(prods)):
            return True
    return False


def property_battery(an: StructureAnalysis) -> list:
    filt, graded = an.filtrations, an.graded
    alg = an.algebra
    m, n = filt.m, alg.dim
    t = graded.type
    gorenstein = an.theorem.oracle_gorenstein
    out = []

    bad = [
        ell for ell in range(m + 2)
        if not (filt.powers[ell] <= filt.dann[ell] <= filt.ann[ell])
    ]
    out.append(PropertyResult("inclusions", True, not bad, {"failing_indices": bad}))

    out.append(PropertyResult(
        "canonical_morphisms",
        True,
        len(an.morphisms) == m + 1,
        {
            "B_to_A_ranks": [mr.b_to_a.rank for mr in an.morphisms],
            "A_to_M_ranks": [mr.a_to_m.rank for mr in an.morphisms],
        },
    ))

    bad_a, bad_m = [], []
    for l1 in range(m + 1):
        for l2 in range(m + 1 - l1):
            reps1 = graded.A[l1].basis_reps
            if not _products_escape(alg, reps1, graded.A[l2].basis_reps, filt.dann[l1 + l2 + 1].space):
                bad_a.append([l1, l2])
            if not _products_escape(alg, reps1, graded.M[l2].basis_reps, filt.ann[l1 + l2 + 1].space):
                bad_m.append([l1, l2])
    out.append(PropertyResult("nonzero_multiplication_A", True, not bad_a, {"zero_pairs": bad_a}))
    out.append(PropertyResult("nonzero_multiplication_M", True, not bad_m, {"zero_pairs": bad_m}))

    # 0 -> M_l -> O_{X_(l+1)} -> O_{X_l} -> 0 and the analogue for A: lengths add up
    bad = []
    for ell in range(m + 1):
        for name, chain, pieces in (("M", filt.ann, graded.M), ("A", filt.dann, graded.A)):
            quotient_next = n - chain[ell + 1].dim
            quotient_this = n - chain[ell].dim
            if pieces[ell].dim != quotient_next - quotient_this:
                bad.append([name, ell])
    out.append(PropertyResult("exact_sequence_lengths", True, not bad, {"failing": bad}))

    bad = []
    for ell in range(m + 2):
        if colon_into_zero(filt.ann[ell]) != filt.dann[m + 1 - ell]:
            bad.append(["0:I_l", ell])
        if colon_into_zero(filt.dann[ell]) != filt.ann[m + 1 - ell]:
            bad.append(["0:J_l", ell])
    out.append(PropertyResult("linkage", True, not bad, {"failing": bad}))

    bad = []
    for chain in filt.chains():
        for ell, a in enumerate(chain.members):
            ann = colon_into_zero(a)
            dd = colon_into_zero(ann)
            if not a <= dd or colon_into_zero(dd) != ann:
                bad.append([chain.kind, ell])
    out.append(PropertyResult("double_annihilator_closure", True, not bad, {"failing": bad}))

    bad = [
        ell for ell in range(m + 2)
        if (n - filt.ann[m + 1 - ell].dim) + (n - filt.dann[ell].dim) != n
    ]
    out.append(PropertyResult("linkage_length_additivity", gorenstein, not bad, {"failing_indices": bad}))

    bad = []
    for chain in filt.chains():
        for ell, a in enumerate(chain.members):
            if a.dim + colon_into_zero(a).dim != n:
                bad.append([chain.kind, ell])
    out.append(PropertyResult("annihilator_duality", gorenstein, not bad, {"failing": bad}))

    bad = [ell for ell in range(m + 1) if t.dims_A[ell] != t.dims_M[m - ell]]
    out.append(PropertyResult("rank_duality", gorenstein, not bad, {"failing_indices": bad}))

    bad = []
    for ell in range(m + 1):
        bij = an.morphisms[ell].a_to_m.is_bijective
        if bij != (t.dims_A[ell] == t.dims_A[m - ell]):
            bad.append(ell)
    out.append(PropertyResult("equality_criterion", gorenstein, not bad, {"failing_indices": bad}))

    coincide = all(
        filt.powers[ell] == filt.dann[ell] == filt.ann[ell] for ell in range(m + 2)
    )
    out.append(PropertyResult("quasiprimitive_coincidence", an.quasiprimitive, coincide, {}))
    return out

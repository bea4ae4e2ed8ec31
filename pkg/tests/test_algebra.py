import itertools
import random

import numpy as np
import pytest

from conftest import algebra_of
from oracle import BruteAlgebra
from multistruct.algebra import (
    IdealSubspace,
    colon,
    colon_into_zero,
    ideal_generated,
    ideal_product,
    lift_generators,
    locality_check,
    maximal_ideal,
    power_chain,
    socle,
    unit_ideal,
    zero_ideal,
)
from multistruct.errors import AlgebraMismatch, NotLocal, ZeroRing
from multistruct.linalg import Subspace
from multistruct.scalars import QQ, PrimeField

EXAMPLE = ["x^3", "x*y", "y^4"]


def vec(alg, *monos):
    """Coordinate vectors of the given standard monomials."""
    out = []
    for m in monos:
        v = alg.field.array(None, (alg.dim,))
        v[alg.index[m]] = 1
        out.append(v)
    return out


def span_of(alg, *monos):
    return Subspace.span(alg.field, alg.dim, vec(alg, *monos))


def test_ideal_generated_examples():
    alg = algebra_of(EXAMPLE)
    assert ideal_generated(alg, vec(alg, (0, 0))) == unit_ideal(alg)
    assert ideal_generated(alg, []) == zero_ideal(alg)
    got = ideal_generated(alg, vec(alg, (1, 0), (0, 1)))
    assert got.dim == 5
    assert got.space == span_of(alg, (1, 0), (2, 0), (0, 1), (0, 2), (0, 3))
    assert got == maximal_ideal(alg)


def test_closure_is_checked():
    alg = algebra_of(EXAMPLE)
    with pytest.raises(Exception):
        IdealSubspace(alg, span_of(alg, (1, 0)))


def test_product_examples():
    alg = algebra_of(EXAMPLE)
    i = maximal_ideal(alg)
    assert ideal_product(i, unit_ideal(alg)) == i
    ii = ideal_product(i, i)
    assert ii.space == span_of(alg, (2, 0), (0, 2), (0, 3))
    m = locality_check(alg)
    assert m == 3
    im = power_chain(alg)[m]
    assert im.dim and ideal_product(im, i).dim == 0
    with pytest.raises(AlgebraMismatch):
        ideal_product(i, maximal_ideal(algebra_of(["x^2", "y^2"])))


def test_annihilator_examples():
    alg = algebra_of(EXAMPLE)
    assert colon_into_zero(unit_ideal(alg)) == zero_ideal(alg)
    assert colon_into_zero(zero_ideal(alg)) == unit_ideal(alg)
    i = maximal_ideal(alg)
    assert colon_into_zero(i).space == span_of(alg, (2, 0), (0, 3))
    assert colon_into_zero(ideal_product(i, i)).space == span_of(alg, (1, 0), (2, 0), (0, 2), (0, 3))


def test_locality_examples():
    assert locality_check(algebra_of(EXAMPLE)) == 3
    assert locality_check(algebra_of(["x"], names=("x",))) == 0
    with pytest.raises(NotLocal, match="x"):
        locality_check(algebra_of(["x^2 - 1"], names=("x",)))
    with pytest.raises(ZeroRing):
        locality_check(algebra_of(["1"]))


def test_socle_examples():
    alg = algebra_of(["x^3"], names=("x",))
    s = socle(alg)
    assert s.dim == 1 and s.space == span_of(alg, (2,))
    assert socle(algebra_of(EXAMPLE)).dim == 2
    k = algebra_of(["x"], names=("x",))
    assert socle(k) == unit_ideal(k) and socle(k).dim == 1


def test_lift_examples():
    alg = algebra_of(EXAMPLE)
    assert lift_generators(zero_ideal(alg), alg.gb) == []
    assert [str(f) for f in lift_generators(unit_ideal(alg), alg.gb)] == ["1"]
    assert sorted(str(f) for f in lift_generators(socle(alg), alg.gb)) == ["x^2", "y^3"]
    assert sorted(str(f) for f in lift_generators(maximal_ideal(alg), alg.gb)) == ["x", "y"]
    with pytest.raises(AlgebraMismatch):
        lift_generators(socle(alg), algebra_of(["x^2", "y^2"]).gb)


def test_lift_generates_the_ideal():
    alg = algebra_of(["x^2 + x*y^2", "y^3 - x*y"])
    for a in power_chain(alg) + [socle(alg), colon_into_zero(ideal_product(maximal_ideal(alg), maximal_ideal(alg)))]:
        lifted = [alg.coords(f) for f in lift_generators(a, alg.gb)]
        assert ideal_generated(alg, lifted) == a


def test_general_colon():
    alg = algebra_of(EXAMPLE)
    i = maximal_ideal(alg)
    ii = ideal_product(i, i)
    # check a : b against its definition, element by element
    c = colon(ii, i)
    for f in c.basis:
        for g in i.basis:
            assert alg.multiply(f, g) in ii.space
    outside = [v for v in alg.field.identity(alg.dim) if v not in c.space]
    for f in outside:
        assert any(alg.multiply(f, g) not in ii.space for g in i.basis)
    assert colon(zero_ideal(alg), i) == colon_into_zero(i)


ORACLE_CASES = [
    EXAMPLE,
    ["x^2", "y^2"],
    ["x^2", "x*y", "y^2"],
    ["y^3", "x^4 + x*y^2"],
    ["x^2 - y^3", "x*y"],
    ["x^2 + y^2", "x*y"],
    ["x^2 + x*y^2", "y^3 - x*y"],
]


def _oracle_dims(ba, spaces):
    return [len(s) for s in spaces]


@pytest.mark.parametrize("gens", ORACLE_CASES, ids=lambda g: "; ".join(g))
def test_chains_against_brute_force(gens):
    alg = algebra_of(gens)
    ba = BruteAlgebra(gens, ["x", "y"])
    assert sorted(ba.basis) == sorted(alg.standard_monomials)
    m, powers, ann, dann = ba.chains()
    chain = power_chain(alg)
    assert locality_check(alg) == m
    assert [a.dim for a in chain] == _oracle_dims(ba, powers)
    ours_ann = [colon_into_zero(chain[m + 1 - l]) for l in range(m + 2)]
    ours_dann = [colon_into_zero(colon_into_zero(chain[l])) for l in range(m + 2)]
    assert [a.dim for a in ours_ann] == _oracle_dims(ba, ann)
    assert [a.dim for a in ours_dann] == _oracle_dims(ba, dann)
    # same subspaces, not only same dimensions: translate the oracle basis into our coordinates
    perm = [alg.index[e] for e in ba.basis]

    def to_ours(rows):
        out = []
        for r in rows:
            v = QQ.array(None, (alg.dim,))
            for k, c in enumerate(r):
                v[perm[k]] = QQ.coerce(str(c))
            out.append(v)
        return Subspace.span(QQ, alg.dim, out) if out else Subspace.zero(QQ, alg.dim)

    for ours, theirs in zip(ours_ann + ours_dann, ann + dann):
        assert ours.space == to_ours(theirs)
    assert socle(alg).dim == ba.socle_dim()


def random_ideal(alg, rng, k):
    gens = []
    for _ in range(k):
        v = alg.field.array(None, (alg.dim,))
        for i in rng.sample(range(1, alg.dim), min(2, alg.dim - 1)):
            v[i] = rng.randint(-2, 2)
        gens.append(v)
    return ideal_generated(alg, gens)


@pytest.mark.parametrize("gens", ORACLE_CASES, ids=lambda g: "; ".join(g))
def test_ideal_calculus_identities(gens):
    alg = algebra_of(gens, field=PrimeField(32003))
    rng = random.Random(3)
    ideals = [random_ideal(alg, rng, rng.randint(1, 3)) for _ in range(6)] + power_chain(alg)
    for a in ideals:
        ann = colon_into_zero(a)
        assert a <= colon_into_zero(ann)
        assert colon_into_zero(colon_into_zero(ann)) == ann
    for a, b in itertools.product(ideals, repeat=2):
        assert ideal_product(a, b) == ideal_product(b, a)
        if a <= b:
            assert colon_into_zero(b) <= colon_into_zero(a)
        assert (a + b).dim + (a & b).dim == a.dim + b.dim
    for a, b, c in itertools.islice(itertools.product(ideals, repeat=3), 0, None, 7):
        assert ideal_product(ideal_product(a, b), c) == ideal_product(a, ideal_product(b, c))
    if socle(alg).dim == 1:
        for a in ideals:
            assert a.dim + colon_into_zero(a).dim == alg.dim


def test_multiplication_matrices_commute_and_are_nilpotent(corpus):
    from multistruct.groebner import buchberger, present_algebra

    for p in corpus[::10]:
        alg = present_algebra(buchberger(list(p.generators)))
        f = alg.field
        mats = alg.mult_matrices
        for a, b in itertools.combinations(mats, 2):
            assert (f.matmul(a, b) == f.matmul(b, a)).all()
        for a in mats:
            power = f.identity(alg.dim)
            for _ in range(alg.dim):
                power = f.matmul(power, a)
            assert not np.any(power)

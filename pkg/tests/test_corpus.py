import pytest

from multistruct.algebra import locality_check, socle
from multistruct.corpus import CorpusSpec, generate_corpus, normalise_kind
from multistruct.errors import GenerationExhausted
from multistruct.groebner import buchberger, present_algebra
from multistruct.problem import format_problem
from multistruct.scalars import PrimeField


def texts(problems):
    return [format_problem(p) for p in problems]


@pytest.mark.parametrize("kind", ["ci", "monomial", "random"])
def test_deterministic_from_seed(kind):
    a = generate_corpus(CorpusSpec(kind, (1, 2, 3), 25, seed=4))
    b = generate_corpus(CorpusSpec(kind, (1, 2, 3), 25, seed=4))
    c = generate_corpus(CorpusSpec(kind, (1, 2, 3), 25, seed=5))
    assert texts(a) == texts(b)
    assert texts(a) != texts(c)
    assert [p.name for p in a] == [f"{kind}-4-{i:04d}" for i in range(25)]


def test_univariate_ci_is_a_pure_power():
    for p in generate_corpus(CorpusSpec("ci", 1, 20, seed=1)):
        (g,) = p.generators
        (mono,) = g.coeffs
        assert len(g.coeffs) == 1 and mono[0] >= 1


def test_monomial_contains_pure_powers():
    for p in generate_corpus(CorpusSpec("monomial", 2, 20, seed=2)):
        monos = [next(iter(g.coeffs)) for g in p.generators]
        assert all(len(g.coeffs) == 1 for g in p.generators)
        assert any(m[0] > 0 and m[1] == 0 for m in monos)
        assert any(m[1] > 0 and m[0] == 0 for m in monos)


def test_ci_two_variables_degree_two_are_gorenstein():
    for p in generate_corpus(CorpusSpec("ci", 2, 30, seed=3, max_degree=2)):
        alg = present_algebra(buchberger(list(p.generators)))
        degs = [g.total_degree() for g in p.generators]
        assert len(p.generators) == 2
        assert alg.dim <= 4 and alg.dim >= 1
        assert socle(alg).dim == 1, (format_problem(p), degs)


def test_every_instance_is_valid_and_bounded():
    for p in generate_corpus(CorpusSpec("random", (1, 2, 3), 40, seed=9, max_dim=30)):
        alg = present_algebra(buchberger(list(p.generators)))
        assert 1 <= alg.dim <= 30
        locality_check(alg)


def test_random_kind_exercises_rejection(monkeypatch):
    """Some random candidates carry a constant term and must be rejected, not emitted."""
    from multistruct import corpus as mod

    rejected = []
    real = mod._valid

    def spy(gens, max_dim):
        ok = real(gens, max_dim)
        if not ok:
            rejected.append(gens)
        return ok

    monkeypatch.setattr(mod, "_valid", spy)
    problems = generate_corpus(CorpusSpec("random", (1, 2), 60, seed=0))
    assert any((0,) * len(g.ring.vars) in g.coeffs for gens in rejected for g in gens)
    for p in problems:
        for g in p.generators:
            assert (0,) * len(p.vars) not in g.coeffs


def test_acceptance_corpus_shape(corpus):
    assert len(corpus) == 500
    kinds = [p.name.split("-")[0] for p in corpus]
    assert kinds.count("ci") == 200 and kinds.count("monomial") == 200 and kinds.count("random") == 100
    assert {len(p.vars) for p in corpus} == {1, 2, 3}
    assert all(p.field == PrimeField(32003) for p in corpus)


def test_bad_specs():
    assert normalise_kind("Complete-Intersection") == "ci"
    with pytest.raises(ValueError):
        normalise_kind("toric")
    with pytest.raises(ValueError):
        generate_corpus(CorpusSpec("ci", 0, 3))
    with pytest.raises(ValueError):
        generate_corpus(CorpusSpec("ci", 2, 0))
    with pytest.raises(GenerationExhausted):
        generate_corpus(CorpusSpec("monomial", 3, 5, max_degree=4, max_dim=0))

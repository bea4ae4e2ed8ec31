import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from multistruct import QQ, PolyRing, buchberger, parse_problem, present_algebra  # noqa: E402
from multistruct.problem import parse_polynomial  # noqa: E402

EXAMPLE_TEXT = "field 32003\nvars x, y\nideal x^3; x*y; y^4\n"


def algebra_of(gens, names=("x", "y"), field=QQ):
    ring = PolyRing(field, names)
    return present_algebra(buchberger([parse_polynomial(g, ring) for g in gens]))


def polys(texts, names=("x", "y"), field=QQ):
    ring = PolyRing(field, names)
    return [parse_polynomial(t, ring) for t in texts]


@pytest.fixture
def example_problem():
    return parse_problem(EXAMPLE_TEXT, name="example")


@pytest.fixture(scope="session")
def corpus():
    from multistruct.corpus import acceptance_corpus

    return acceptance_corpus(seed=0)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[number])

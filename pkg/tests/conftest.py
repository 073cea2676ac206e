import itertools

import pytest
from hypothesis import strategies as st

from alexandroff import FinSpace, GenConfig, SpaceMap, random_space


def sierp():
    return FinSpace.from_sets([0, 1], {0: {0, 1}, 1: {1}})


def disc2():
    return FinSpace.from_sets(["a", "b"], {"a": {"a"}, "b": {"b"}})


def indisc2():
    return FinSpace.from_sets(["a", "b"], {"a": {"a", "b"}, "b": {"a", "b"}})


@pytest.fixture
def SIERP():
    return sierp()


@pytest.fixture
def DISC2():
    return disc2()


@pytest.fixture
def INDISC2():
    return indisc2()


def all_maps(domain, codomain):
    """Every function domain -> codomain, as SpaceMaps."""
    for values in itertools.product(range(len(codomain)), repeat=len(domain)):
        yield SpaceMap(domain, codomain, values)


def spaces(max_points=8, min_points=0):
    return st.builds(
        lambda seed, n, d: random_space(GenConfig(seed, n, d)),
        st.integers(0, 2**63),
        st.integers(min_points, max_points),
        st.sampled_from([0.0, 0.05, 0.1, 0.2, 0.3, 0.5, 0.8, 1.0]),
    )


# acceptance summary: test_acceptance appends (criterion, passed, detail)
ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")

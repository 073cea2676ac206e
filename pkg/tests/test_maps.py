import pytest
from hypothesis import given, settings, strategies as st

from alexandroff import (
    EnumerationTooLarge,
    FinSpace,
    MapSpaceMismatch,
    NotConstantOnComponent,
    OracleTooLarge,
    SpaceMap,
    ValueNotClosed,
    closed_graph_witness,
    components,
    count_closed_graph_maps,
    enumerate_closed_graph_maps,
    graph_of,
    has_closed_graph,
    has_closed_graph_oracle,
    is_continuous,
    khalimsky_space,
    restrict,
    validate,
)
from alexandroff.generators import random_component_map, random_map
from alexandroff.oracle import is_continuous_brute

from conftest import all_maps, disc2, indisc2, sierp, spaces


def test_continuity_examples(SIERP):
    assert is_continuous(SpaceMap.identity(SIERP))
    swap = SpaceMap.from_dict(SIERP, SIERP, {0: 1, 1: 0})
    assert not is_continuous(swap)
    k = khalimsky_space(2, -3, 3)
    assert is_continuous(SpaceMap.constant(k, k, (1, 1)))


def test_graph_of(SIERP, DISC2):
    assert graph_of(SpaceMap.constant(SIERP, SIERP, 0)).pairs == {(0, 0), (1, 0)}
    assert graph_of(SpaceMap.identity(DISC2)).pairs == {("a", "a"), ("b", "b")}
    f = SpaceMap.from_dict(SIERP, SIERP, {0: 1, 1: 1})
    assert graph_of(f).pairs == {(0, 1), (1, 1)}


def test_closed_graph_sierpinski(SIERP):
    const0 = SpaceMap.constant(SIERP, SIERP, 0)
    const1 = SpaceMap.constant(SIERP, SIERP, 1)
    ident = SpaceMap.identity(SIERP)
    for f, expect in [(const0, True), (ident, False), (const1, False)]:
        assert has_closed_graph_oracle(f) is expect
        assert has_closed_graph(f) is expect


def test_witnesses(SIERP):
    assert closed_graph_witness(SpaceMap.identity(SIERP)) == NotConstantOnComponent((0, 1), 0, 1)
    assert closed_graph_witness(SpaceMap.constant(SIERP, SIERP, 1)) == ValueNotClosed((0, 1), 1, 0)
    assert closed_graph_witness(SpaceMap.constant(SIERP, SIERP, 0)) is None


def test_khalimsky_constant_maps():
    k = khalimsky_space(2, -3, 3)
    assert has_closed_graph(SpaceMap.constant(k, k, (2, 2)))
    assert has_closed_graph_oracle(SpaceMap.constant(k, k, (2, 2)))
    f = SpaceMap.constant(k, k, (1, 1))
    assert not has_closed_graph(f)
    assert not has_closed_graph_oracle(f)


def test_map_construction_errors(SIERP, DISC2):
    with pytest.raises(MapSpaceMismatch):
        SpaceMap.from_dict(SIERP, DISC2, {0: "a"})
    with pytest.raises(MapSpaceMismatch):
        SpaceMap.from_dict(SIERP, DISC2, {0: "a", 1: "z"})
    with pytest.raises(MapSpaceMismatch):
        SpaceMap.from_dict(SIERP, DISC2, {0: "a", 1: "a", 2: "a"})
    with pytest.raises(MapSpaceMismatch):
        SpaceMap(SIERP, DISC2, (0, 2))


def test_graph_oracle_limit(SIERP):
    big = FinSpace.discrete(range(101))
    f = SpaceMap.constant(big, big, 0)
    with pytest.raises(OracleTooLarge):
        has_closed_graph_oracle(f)
    assert has_closed_graph_oracle(SpaceMap.constant(SIERP, SIERP, 0), limit=4)


# -- counting -------------------------------------------------------------------

def brute_count(x, y):
    return sum(has_closed_graph_oracle(f) for f in all_maps(x, y))


@pytest.mark.parametrize(
    "make_x, make_y, alpha, beta, count",
    [(sierp, sierp, 1, 1, 1), (disc2, disc2, 2, 2, 4), (indisc2, indisc2, 1, 0, 0)],
)
def test_count_examples(make_x, make_y, alpha, beta, count):
    x, y = make_x(), make_y()
    rep = count_closed_graph_maps(x, y)
    assert (rep.alpha, rep.beta, rep.count) == (alpha, beta, count)
    assert brute_count(x, y) == count


def test_count_khalimsky_square():
    k = khalimsky_space(2, -3, 3)
    rep = count_closed_graph_maps(k, k)
    assert (rep.alpha, rep.beta, rep.count) == (1, 9, 9)


def test_count_empty_domain(SIERP, INDISC2):
    e = FinSpace((), ())
    assert count_closed_graph_maps(e, SIERP).count == 1
    assert count_closed_graph_maps(e, INDISC2).count == 1
    assert count_closed_graph_maps(e, e).count == 1
    assert has_closed_graph(SpaceMap(e, SIERP, ()))
    assert has_closed_graph_oracle(SpaceMap(e, SIERP, ()))


def test_count_is_exact_big_integer():
    x = FinSpace.discrete(range(70))
    y = FinSpace.discrete(range(3))
    assert count_closed_graph_maps(x, y).count == 3**70


# -- enumeration -----------------------------------------------------------------

def test_enumerate_examples(SIERP, DISC2, INDISC2):
    assert [f.as_dict() for f in enumerate_closed_graph_maps(SIERP, SIERP, 10)] == [{0: 0, 1: 0}]
    maps = enumerate_closed_graph_maps(DISC2, DISC2, 10)
    assert [f.as_dict() for f in maps] == [
        {"a": "a", "b": "a"},
        {"a": "a", "b": "b"},
        {"a": "b", "b": "a"},
        {"a": "b", "b": "b"},
    ]
    assert enumerate_closed_graph_maps(INDISC2, SIERP, 10) == [SpaceMap.constant(INDISC2, SIERP, 0)]
    assert enumerate_closed_graph_maps(INDISC2, INDISC2, 10) == []


def test_enumerate_refuses_to_truncate(DISC2):
    with pytest.raises(EnumerationTooLarge) as e:
        enumerate_closed_graph_maps(DISC2, DISC2, 3)
    assert (e.value.count, e.value.limit) == (4, 3)


@settings(max_examples=60, deadline=None)
@given(spaces(4), spaces(4))
def test_enumeration_equals_filtered_function_space(x, y):
    listed = {f.values for f in enumerate_closed_graph_maps(x, y, 10**6)}
    filtered = {f.values for f in all_maps(x, y) if has_closed_graph_oracle(f)}
    assert listed == filtered
    assert len(listed) == count_closed_graph_maps(x, y).count


# -- restriction ------------------------------------------------------------------

def test_restrict(SIERP):
    r = restrict(SpaceMap.identity(SIERP), {1})
    assert r.domain.points == (1,) and r.as_dict() == {1: 1}
    assert restrict(SpaceMap.identity(SIERP), {0, 1}) == SpaceMap.identity(SIERP)
    c = restrict(SpaceMap.constant(SIERP, SIERP, 0), {0})
    assert c.domain.V(0) == {0}
    assert c.as_dict() == {0: 0}
    validate(c.domain)


# -- properties ---------------------------------------------------------------------

def maps_between(x, y, seed, structured):
    if structured:
        return random_component_map(seed, x, y)
    return random_map(seed, x, y)


@settings(max_examples=300, deadline=None)
@given(spaces(8), spaces(8, min_points=1), st.integers(0, 2**32), st.booleans())
def test_fast_matches_oracle(x, y, seed, structured):
    f = maps_between(x, y, seed, structured)
    closed = has_closed_graph(f)
    assert closed == has_closed_graph_oracle(f)
    if closed:
        assert is_continuous(f)
        for i in range(len(x)):
            assert y.closed_mask >> f.values[i] & 1
            region = x.closure_mask(1 << i) | x.nbhd[i]
            assert {f.values[j] for j in range(len(x)) if region >> j & 1} == {f.values[i]}
        for comp in components(x).masks:
            assert len({f.values[j] for j in range(len(x)) if comp >> j & 1}) == 1


@settings(max_examples=150, deadline=None)
@given(spaces(6), spaces(6, min_points=1), st.integers(0, 2**32), st.booleans())
def test_continuity_matches_open_set_definition(x, y, seed, structured):
    f = maps_between(x, y, seed, structured)
    assert is_continuous(f) == is_continuous_brute(x, y, f.values)

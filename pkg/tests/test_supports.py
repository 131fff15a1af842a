import itertools

import networkx as nx
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import delta_bruteforce, sign_pattern_brute
from toricsplit import exactla
from toricsplit.supports import (
    Matching01,
    SupportGraph,
    bar_bounds,
    circuits,
    cmin,
    delta01,
    delta01_exhaustive,
    gamma_graph,
)
from toricsplit.toric import Configuration, NotPointedError

EX45 = [[33, -4, 1, 0, 1], [23, -3, 0, -9, 0], [-34, 6, 0, 3, 1]]
TWISTED_CUBIC = [[3, 2, 1, 0], [0, 1, 2, 3]]


def circuit_supports_brute(A):
    """S is a circuit support iff A_S has rank |S|-1 and dropping any column keeps that rank."""
    M = sympy.Matrix(A)
    n = M.cols
    out = set()
    for size in range(2, n + 1):
        for S in itertools.combinations(range(n), size):
            if M[:, list(S)].rank() != size - 1:
                continue
            if all(M[:, [j for j in S if j != i]].rank() == size - 1 for i in S):
                out.add(frozenset(S))
    return out


configs = st.integers(2, 3).flatmap(
    lambda m: st.integers(m + 1, 5).flatmap(
        lambda n: st.lists(st.lists(st.integers(0, 5), min_size=n, max_size=n), min_size=m, max_size=m)
    )
)


@given(configs)
@settings(max_examples=60, deadline=None)
def test_circuits_match_rank_oracle(A):
    try:
        conf = Configuration(A)
    except NotPointedError:
        return
    C = circuits(conf)
    assert {frozenset(c.support) for c in C} == circuit_supports_brute(A)
    for c in C:
        assert not any(exactla.mat_vec(A, c.coords))
        assert exactla.primitive(c.coords) == c.coords


def test_twisted_cubic_circuits():
    assert [c.coords for c in circuits(TWISTED_CUBIC)] == [
        (0, 1, -2, 1),
        (1, -2, 1, 0),
        (1, 0, -3, 2),
        (2, -3, 0, 1),
    ]


def test_ex45_cmin():
    assert cmin(EX45) == [frozenset({2}), frozenset({4}), frozenset({0, 1, 3})]


def test_ex45_gamma_has_edges():
    # (15, 79, -179, 12, 0) has positive support {0,1,3} and negative support {2}
    u = (15, 79, -179, 12, 0)
    assert not any(exactla.mat_vec(EX45, u))
    G = gamma_graph(EX45)
    assert G.edge_sets() == {
        frozenset({frozenset({2}), frozenset({0, 1, 3})}),
        frozenset({frozenset({4}), frozenset({0, 1, 3})}),
    }
    assert delta01(G)[0] == 2


@given(configs)
@settings(max_examples=40, deadline=None)
def test_gamma_edges_have_witnesses(A):
    try:
        conf = Configuration(A)
    except NotPointedError:
        return
    G = gamma_graph(conf)
    for (a, b), w in G.witnesses.items():
        assert not any(exactla.mat_vec(A, w.coords))
        assert w.plus == set(G.vertices[a]) and w.minus == set(G.vertices[b])
    # a sign pattern found in a small box is never missed
    edges = {frozenset(e) for e in G.edges}
    for a, b in itertools.combinations(range(len(G.vertices)), 2):
        E, F = G.vertices[a], G.vertices[b]
        if E & F:
            continue
        if sign_pattern_brute(A, E, F, 6) is not None:
            assert frozenset((a, b)) in edges


def _support_graph(n, edges):
    return SupportGraph([frozenset({i}) for i in range(n)], [tuple(sorted(e)) for e in edges])


@given(st.integers(1, 9), st.floats(0.0, 1.0), st.integers(0, 10**6))
@settings(max_examples=150, deadline=None)
def test_delta01_matches_enumeration(n, p, seed):
    g = nx.gnp_random_graph(n, p, seed=seed)
    G = _support_graph(n, g.edges)
    d, M = delta01(G)
    assert d == delta_bruteforce(n, g.edges) == delta01_exhaustive(G)
    assert M.is_valid(G) and M.card == d and M.support == frozenset(range(n))


def test_delta01_cycle_and_empty():
    assert delta01(_support_graph(5, [(i, (i + 1) % 5) for i in range(5)]))[0] == 3
    assert delta01(_support_graph(3, []))[0] == 3


def test_matching_validity():
    G = _support_graph(3, [(0, 1)])
    assert Matching01([(0, 1), (2,)]).is_valid(G)
    assert not Matching01([(0, 2), (1,)]).is_valid(G)
    assert not Matching01([(0, 1), (1,)]).is_valid(G)


def test_delta01_exhaustive_limit():
    with pytest.raises(ValueError):
        delta01_exhaustive(_support_graph(21, []))


def test_bar_bounds():
    bb = bar_bounds(TWISTED_CUBIC)
    assert (bb.lo, bb.hi, bb.height, bb.mu) == (2, 3, 2, 3)
    bb = bar_bounds(EX45, assume_circuit_radical=True)
    assert bb.lo == 2 and bb.hi == 4


@given(configs)
@settings(max_examples=30, deadline=None)
def test_bar_bounds_ordered(A):
    try:
        conf = Configuration(A)
    except NotPointedError:
        return
    bb = bar_bounds(conf, assume_circuit_radical=True, budget=50_000)
    assert bb.lo >= bb.height
    if bb.hi is not None:
        assert bb.lo <= bb.hi

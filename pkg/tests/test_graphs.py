import networkx as nx
import pytest

from oracles import bipartition_exists, canonical, connected_bipartite_graphs, to_bipartite
from toricsplit.families import catalogued_example
from toricsplit.graphs import (
    BipartiteGraph,
    chordless_even_cycles,
    cycle_generators,
    cycles,
    graph_split_numbers,
    incidence_configuration,
    kmn_split,
)
from toricsplit.splitting import find_cover, verify_certificate
from toricsplit.toric import minimal_markov


ALL_GRAPHS = connected_bipartite_graphs(8)


def test_enumeration_size():
    # trees on 2..9 nodes alone contribute 1+1+2+3+6+11+23+47
    assert sum(1 for g in ALL_GRAPHS if nx.is_tree(g)) == 94
    assert len(ALL_GRAPHS) == 162


def cycle_vs_markov_mismatches() -> list:
    bad = []
    for g in ALL_GRAPHS:
        G = to_bipartite(g)
        cyc = cycle_generators(G).classes()
        M = minimal_markov(incidence_configuration(G))
        mark = {canonical(v.coords) for v in M.generators}
        if cyc != mark:
            bad.append((G, cyc ^ mark))
    return bad


def test_chordless_cycles_are_the_minimal_generators():
    assert cycle_vs_markov_mismatches() == []


def test_graph_validation():
    with pytest.raises(ValueError):
        BipartiteGraph(2, 2, ((0, 0), (0, 0)))
    with pytest.raises(ValueError):
        BipartiteGraph(2, 2, ((0, 0), (2, 1)))
    with pytest.raises(ValueError):
        BipartiteGraph(2, 2, ((0, 0), (1, 1)))


def test_cycles_of_k23():
    G = BipartiteGraph.complete(2, 3)
    cs = cycles(G)
    assert len(cs) == 3 and all(len(c.vertices) == 4 for c in cs)
    assert len(chordless_even_cycles(G)) == 3


def test_k33():
    inst = catalogued_example("k33")
    G = inst.extra["graph"]
    gens = cycle_generators(G)
    assert len(chordless_even_cycles(G)) == 9
    assert gens.classes() == inst.generator_sets["minimal"].classes()
    # 6-cycles of K_{3,3} all have chords
    assert len(cycles(G)) == 15


def test_k33_cover_exhaustion():
    G = BipartiteGraph.complete(3, 3)
    A = incidence_configuration(G)
    gens = cycle_generators(G)
    vecs = [v.coords for v in gens]
    assert find_cover(A, gens, 2) is None
    assert not bipartition_exists(vecs, A.height)
    cert = find_cover(A, gens, 3)
    assert cert is not None and verify_certificate(cert, A) == []
    rep = graph_split_numbers(G)
    assert rep.split.exact == rep.split_rad.exact == 3


def test_k33_catalogued_subgraphs():
    inst = catalogued_example("k33")
    K = inst.extra["graph"]
    for name, (left, right) in inst.extra["subgraphs"].items():
        emap, sub = K.induced(left, right)
        lifted = set()
        for v in cycle_generators(sub):
            w = [0] * len(K.edges)
            for e, x in enumerate(v.coords):
                w[emap[e]] = x
            lifted.add(canonical(w))
        assert lifted == inst.generator_sets[name].classes(), name


@pytest.mark.parametrize("m,n,counts", [(3, 3, (3, 3, 3)), (4, 3, (9, 6, 3)), (3, 4, (9, 6, 3)), (2, 3, (1, 1, 1))])
def test_kmn_split(m, n, counts):
    res = kmn_split(m, n)
    assert res.counts == counts
    assert res.ok, res.checks


def test_kmn_split_rejects_small():
    with pytest.raises(ValueError):
        kmn_split(2, 2)
    with pytest.raises(ValueError):
        kmn_split(1, 4)


def test_graph_split_trivial_cases():
    path = BipartiteGraph(2, 2, ((0, 0), (1, 0), (1, 1)))
    assert graph_split_numbers(path).split.exact is None
    square = BipartiteGraph.complete(2, 2)
    assert "principal" in graph_split_numbers(square).split.rule

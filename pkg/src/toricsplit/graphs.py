"""Toric ideals of bipartite graphs.

Vertices x_1..x_m are 0..m-1 on the left, y_1..y_n are 0..n-1 on the
right.  Edge b_ij is the pair (i, j); the column order of the incidence
configuration is the order of ``BipartiteGraph.edges``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .budget import Budget, ensure
from .splitting import Quantity, SplitCertificate, min_cover
from .toric import MINIMAL_GENERATORS, Configuration, GeneratorSet, LatticeVector


@dataclass(frozen=True)
class BipartiteGraph:
    m: int
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple((int(i), int(j)) for i, j in self.edges)
        if len(set(edges)) != len(edges):
            raise ValueError("duplicate edges")
        for i, j in edges:
            if not (0 <= i < self.m and 0 <= j < self.n):
                raise ValueError(f"edge {(i, j)} out of range for a {self.m}+{self.n} bipartition")
        object.__setattr__(self, "edges", edges)
        if not self.is_connected():
            raise ValueError("graph is not connected")

    @classmethod
    def complete(cls, m: int, n: int) -> "BipartiteGraph":
        return cls(m, n, tuple((i, j) for i in range(m) for j in range(n)))

    @property
    def num_vertices(self) -> int:
        return self.m + self.n

    def vertex(self, side: str, k: int) -> int:
        """Global vertex label: left vertices first, then right."""
        return k if side == "x" else self.m + k

    def vertex_name(self, v: int) -> str:
        return f"x{v + 1}" if v < self.m else f"y{v - self.m + 1}"

    def edge_name(self, e: int) -> str:
        i, j = self.edges[e]
        return f"b{i + 1}{j + 1}" if max(self.m, self.n) < 10 else f"b[{i + 1},{j + 1}]"

    def adjacency(self) -> dict[int, dict[int, int]]:
        """vertex -> {neighbour: edge index}."""
        adj: dict[int, dict[int, int]] = {v: {} for v in range(self.num_vertices)}
        for e, (i, j) in enumerate(self.edges):
            a, b = i, self.m + j
            adj[a][b] = e
            adj[b][a] = e
        return adj

    def is_connected(self) -> bool:
        if self.num_vertices == 0:
            return True
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.num_vertices

    def induced(self, left: list[int], right: list[int]) -> tuple[list[int], "BipartiteGraph"]:
        """Induced subgraph on the given vertices, with its edges' indices in this graph."""
        left, right = sorted(left), sorted(right)
        li = {v: k for k, v in enumerate(left)}
        ri = {v: k for k, v in enumerate(right)}
        keep = [e for e, (i, j) in enumerate(self.edges) if i in li and j in ri]
        sub = BipartiteGraph(len(left), len(right), tuple((li[self.edges[e][0]], ri[self.edges[e][1]]) for e in keep))
        return keep, sub


@dataclass(frozen=True)
class EvenCycle:
    """A cycle as an alternating vertex sequence, in canonical rotation."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def odd_edges(self) -> tuple[int, ...]:
        return self.edges[0::2]

    @property
    def even_edges(self) -> tuple[int, ...]:
        return self.edges[1::2]

    def vector(self, num_edges: int) -> LatticeVector:
        """f_gamma: +1 on odd-position edges, -1 on even-position edges."""
        u = [0] * num_edges
        for e in self.odd_edges:
            u[e] = 1
        for e in self.even_edges:
            u[e] = -1
        return LatticeVector(tuple(u))


def incidence_configuration(G: BipartiteGraph) -> Configuration:
    """The (m+n) x |E| 0/1 matrix with one column per edge."""
    rows = [[0] * len(G.edges) for _ in range(G.num_vertices)]
    for e, (i, j) in enumerate(G.edges):
        rows[i][e] = 1
        rows[G.m + j][e] = 1
    return Configuration(rows, name=f"incidence({G.m},{G.n},{len(G.edges)} edges)")


def cycles(G: BipartiteGraph) -> list[EvenCycle]:
    """All cycles of G, each once: start at its smallest vertex, go to the smaller neighbour first."""
    adj = G.adjacency()
    out = []
    for s in range(G.num_vertices):
        path = [s]
        on_path = {s}

        def extend(v):
            for w in sorted(adj[v]):
                if w == s and len(path) >= 4 and path[1] < path[-1]:
                    out.append(tuple(path))
                elif w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    extend(w)
                    path.pop()
                    on_path.discard(w)

        extend(s)
    result = []
    for vs in sorted(out, key=lambda p: (len(p), p)):
        edges = tuple(adj[vs[k]][vs[(k + 1) % len(vs)]] for k in range(len(vs)))
        result.append(EvenCycle(vs, edges))
    return result


def has_chord(G: BipartiteGraph, c: EvenCycle, adj=None) -> bool:
    adj = adj or G.adjacency()
    vs = c.vertices
    L = len(vs)
    for a, b in combinations(range(L), 2):
        if b - a in (1, L - 1):
            continue
        if vs[b] in adj[vs[a]]:
            return True
    return False


def chordless_even_cycles(G: BipartiteGraph) -> list[EvenCycle]:
    adj = G.adjacency()
    return [c for c in cycles(G) if not has_chord(G, c, adj)]


def cycle_generators(G: BipartiteGraph) -> GeneratorSet:
    """The unique minimal generating set of I_G: f_gamma over chordless cycles."""
    vecs = tuple(c.vector(len(G.edges)) for c in chordless_even_cycles(G))
    return GeneratorSet(vecs, MINIMAL_GENERATORS, "chordless even cycles")


# ---------------------------------------------------------------- K_{m,n}


@dataclass
class KmnSplit:
    graph: BipartiteGraph
    swapped: bool
    vertex_sets: list[tuple[list[int], list[int]]]
    subgraphs: list[BipartiteGraph]
    edge_maps: list[list[int]]
    assignment: list[list[LatticeVector]]
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.assignment)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def kmn_split(m: int, n: int) -> KmnSplit:
    """Three induced subgraphs of K_{m,n} whose toric ideals sum to I_{K_{m,n}}.

    With x_1..x_M the side holding at least three vertices: G1 drops x_1,
    G2 drops x_M, G3 keeps only x_1 and x_M.  A minor b_ij b_kl - b_il b_kj
    (i < k) goes to G1 if i != 1, to G2 if i = 1 and k != M, else to G3.
    """
    if min(m, n) < 2 or (m, n) == (2, 2):
        raise ValueError("K_{m,n} splitting needs m, n >= 2 and (m, n) != (2, 2)")
    K = BipartiteGraph.complete(m, n)
    swapped = n > m  # the side playing V_1 is the larger one, ties to the left
    big, small = (n, m) if swapped else (m, n)

    def edge(i_big, j_small):
        i, j = (j_small, i_big) if swapped else (i_big, j_small)
        return i * n + j

    def sides(big_keep):
        # translate "keep these V_1 vertices, all of V_2" into (left, right) lists
        return (list(range(m)), sorted(big_keep)) if swapped else (sorted(big_keep), list(range(n)))

    keeps = [range(1, big), range(0, big - 1), (0, big - 1)]
    vertex_sets = [sides(k) for k in keeps]
    subs = [K.induced(*vs) for vs in vertex_sets]

    assignment: list[list[LatticeVector]] = [[], [], []]
    for i, k in combinations(range(big), 2):
        for j, l in combinations(range(small), 2):
            u = [0] * len(K.edges)
            u[edge(i, j)] += 1
            u[edge(k, l)] += 1
            u[edge(i, l)] -= 1
            u[edge(k, j)] -= 1
            case = 0 if i != 0 else (1 if k != big - 1 else 2)
            assignment[case].append(LatticeVector(tuple(u)))

    full = cycle_generators(K).classes()
    union = [v.canonical().coords for part in assignment for v in part]
    checks = {
        "cases_exclusive": len(union) == len(set(union)),
        "assignment_covers_generating_set": set(union) == full,
    }
    sub_union: set[tuple[int, ...]] = set()
    for t, ((emap, sub), part) in enumerate(zip(subs, assignment)):
        inside = all(all(x == 0 or e in emap for e, x in enumerate(v.coords)) for v in part)
        lifted = set()
        for c in chordless_even_cycles(sub):
            w = [0] * len(K.edges)
            for e_sub, x in enumerate(c.vector(len(sub.edges)).coords):
                w[emap[e_sub]] = x
            lifted.add(LatticeVector(tuple(w)).canonical().coords)
        checks[f"G{t + 1}_contains_assigned"] = inside
        sub_union |= lifted
        checks[f"G{t + 1}_generates_assigned"] = {v.canonical().coords for v in part} <= lifted
        checks[f"G{t + 1}_proper"] = len(sub.edges) < len(K.edges)
    checks["subideal_generators_union_is_generating_set"] = sub_union == full
    return KmnSplit(K, swapped, vertex_sets, [s for _, s in subs], [e for e, _ in subs], assignment, checks)


@dataclass
class GraphSplitReport:
    graph: BipartiteGraph
    generators: GeneratorSet
    split: Quantity
    split_rad: Quantity
    certificate: SplitCertificate | None = None


def graph_split_numbers(G: BipartiteGraph, budget: Budget | int | None = None) -> GraphSplitReport:
    """Split(I_G) from the unique minimal generating set; Split_rad equals it for bipartite G."""
    budget = ensure(budget)
    gens = cycle_generators(G)
    if len(gens) == 0:
        na = Quantity(None, None, "not applicable (zero ideal)")
        return GraphSplitReport(G, gens, na, na)
    if len(gens) == 1:
        na = Quantity(None, None, "not applicable (principal)")
        return GraphSplitReport(G, gens, na, na)
    A = incidence_configuration(G)
    cert = min_cover(A, gens, budget, max_size=None)
    r = cert.r
    split = Quantity(r, r, "unique minimal generating set (chordless even cycles): least covering r")
    split_rad = Quantity(r, r, "bipartite graph: Split_rad = Split")
    return GraphSplitReport(G, gens, split, split_rad, cert)

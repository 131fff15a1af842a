"""Circuits, minimal circuit supports, the graph Gamma_A and {0,1}-matchings.

Vertex sets of Gamma_A are frozensets of 0-based column indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import networkx as nx

from . import exactla
from .budget import Budget, BudgetExceeded, ensure
from .toric import (
    GraverCapExceeded,
    LatticeVector,
    as_configuration,
    canonical_sign,
    minimal_markov,
)

SupportSet = frozenset


def _row_basis(A) -> list[int]:
    """Indices of a maximal independent set of rows."""
    rows = A.matrix.rows
    chosen: list[int] = []
    for i in range(len(rows)):
        if exactla.rank([rows[k] for k in chosen + [i]]) > len(chosen):
            chosen.append(i)
    return chosen


def circuits(A) -> list[LatticeVector]:
    """All circuits of I_A, canonical signs, sorted.

    For every set S of rank+1 columns, the alternating vector of maximal
    minors (Cramer's rule) spans ker(A_S) when A_S has full rank; its
    support is then a minimal kernel support.
    """
    A = as_configuration(A)
    r = A.rank
    if r == A.n:
        return []
    rows = [A.matrix.rows[i] for i in _row_basis(A)]
    found: dict[frozenset, tuple[int, ...]] = {}
    for S in combinations(range(A.n), r + 1):
        v = [0] * A.n
        for pos, j in enumerate(S):
            rest = [k for k in S if k != j]
            v[j] = (-1) ** pos * exactla.determinant([[row[k] for k in rest] for row in rows])
        if not any(v):
            continue
        u = canonical_sign(exactla.primitive(v))
        supp = frozenset(i for i, x in enumerate(u) if x)
        found.setdefault(supp, u)
    # every nonzero Cramer vector already has a minimal support; this is a guard
    supports = list(found)
    keep = [s for s in supports if not any(t < s for t in supports)]
    return [LatticeVector(found[s]) for s in sorted(keep, key=lambda s: found[s])]


def cmin(A, circuit_list: Sequence[LatticeVector] | None = None) -> list[frozenset[int]]:
    """Minimal elements of {supp(u+), supp(u-) : u a circuit}, sorted."""
    if circuit_list is None:
        circuit_list = circuits(A)
    sets = set()
    for u in circuit_list:
        sets.add(frozenset(u.plus))
        sets.add(frozenset(u.minus))
    minimal = [s for s in sets if not any(t < s for t in sets)]
    return sorted(minimal, key=lambda s: (len(s), sorted(s)))


@dataclass
class SupportGraph:
    """Gamma_A: vertices are minimal circuit supports."""

    vertices: list[frozenset[int]]
    edges: list[tuple[int, int]]
    witnesses: dict[tuple[int, int], LatticeVector] = field(default_factory=dict)

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(len(self.vertices)))
        G.add_edges_from(self.edges)
        return G

    def edge_sets(self) -> set[frozenset[frozenset[int]]]:
        return {frozenset((self.vertices[a], self.vertices[b])) for a, b in self.edges}


def gamma_graph(A, vertices: Sequence[frozenset[int]] | None = None) -> SupportGraph:
    """Gamma_A; an edge E -- E' exists iff some kernel vector has supp(u+) = E, supp(u-) = E'.

    Each edge stores a witness u with supp(u+) equal to the lower-indexed
    endpoint.
    """
    A = as_configuration(A)
    if vertices is None:
        vertices = cmin(A)
    vertices = list(vertices)
    edges = []
    witnesses = {}
    for a, b in combinations(range(len(vertices)), 2):
        E, F = vertices[a], vertices[b]
        if E & F:
            continue
        u = exactla.signed_kernel_vector(A.matrix, E, F)
        if u is not None:
            edges.append((a, b))
            witnesses[(a, b)] = LatticeVector(u)
    return SupportGraph(vertices, edges, witnesses)


@dataclass
class Matching01:
    """A {0,1}-matching: disjoint edges and singleton vertices."""

    parts: list[tuple[int, ...]]

    @property
    def support(self) -> frozenset[int]:
        return frozenset(v for p in self.parts for v in p)

    @property
    def card(self) -> int:
        return len(self.parts)

    def is_valid(self, G: SupportGraph) -> bool:
        edge_set = {frozenset(e) for e in G.edges}
        seen: set[int] = set()
        for p in self.parts:
            if len(p) == 2 and frozenset(p) not in edge_set:
                return False
            if len(p) not in (1, 2) or seen & set(p):
                return False
            seen |= set(p)
        return True


def delta01(G: SupportGraph) -> tuple[int, Matching01]:
    """delta(Gamma)_{0,1} and a {0,1}-matching attaining it.

    Singletons make every vertex coverable, so maximal {0,1}-matchings are
    exactly those covering all of V, and the fewest parts is |V| minus the
    size of a maximum matching.
    """
    g = G.to_networkx()
    matching = nx.max_weight_matching(g, maxcardinality=True)
    pairs = sorted(tuple(sorted(e)) for e in matching)
    covered = {v for e in pairs for v in e}
    parts = pairs + [(v,) for v in range(len(G.vertices)) if v not in covered]
    parts.sort()
    return len(parts), Matching01(parts)


def delta01_exhaustive(G: SupportGraph) -> int:
    """Same quantity by literal enumeration of all {0,1}-matchings (small graphs)."""
    n = len(G.vertices)
    if n > 20:
        raise ValueError("exhaustive {0,1}-matching enumeration is limited to 20 vertices")
    edges = [tuple(e) for e in G.edges]
    best_support = -1
    best_card = None

    # every {0,1}-matching is a matching plus a set of singletons on uncovered vertices
    def rec(i: int, used: frozenset, k: int):
        nonlocal best_support, best_card
        if i == len(edges):
            free = [v for v in range(n) if v not in used]
            # all subsets of free vertices as singletons: support = |used| + s, card = k + s
            for s in range(len(free) + 1):
                supp, card = len(used) + s, k + s
                if supp > best_support or (supp == best_support and card < best_card):
                    best_support, best_card = supp, card
            return
        rec(i + 1, used, k)
        a, b = edges[i]
        if a not in used and b not in used:
            rec(i + 1, used | {a, b}, k + 1)

    rec(0, frozenset(), 0)
    return best_card if best_card is not None else 0


@dataclass
class BarBounds:
    """An interval for bar(I_A) with the reason for each end."""

    lo: int
    hi: int | None
    lo_reason: str
    hi_reason: str
    height: int
    delta: int
    mu: int | None = None
    n_circuits: int | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def exact(self) -> int | None:
        return self.lo if self.hi is not None and self.lo == self.hi else None


def bar_bounds(
    A,
    assume_circuit_radical: bool = False,
    budget: Budget | int | None = None,
) -> BarBounds:
    """Bounds on the binomial arithmetical rank.

    lower: max(ht, delta01(Gamma_A)); upper: mu(A), and the number of
    circuits when `assume_circuit_radical` is set (circuits generate I_A up
    to radical).  If mu runs out of budget only the circuit bound remains.
    """
    A = as_configuration(A)
    budget = ensure(budget)
    circ = circuits(A)
    G = gamma_graph(A, cmin(A, circ))
    d, _ = delta01(G) if G.vertices else (0, None)
    ht = A.height
    lo = max(ht, d)
    lo_reason = "delta01(Gamma_A)" if d >= ht else "height"
    notes = []
    mu_val = None
    try:
        mu_val = len(minimal_markov(A, budget).generators)
    except (BudgetExceeded, GraverCapExceeded) as exc:
        notes.append(f"mu unavailable: {exc}")
    hi, hi_reason = mu_val, "mu(I_A)"
    if assume_circuit_radical and (hi is None or len(circ) < hi):
        hi, hi_reason = len(circ), "number of circuits (circuits generate up to radical)"
    if hi is None:
        hi_reason = "none"
    return BarBounds(lo, hi, lo_reason, hi_reason, ht, d, mu_val, len(circ), notes)

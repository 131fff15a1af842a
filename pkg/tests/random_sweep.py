"""Seeded sweep of random pointed configurations, checked against the brute-force oracles.

Computed once per session and shared by the property tests and the
acceptance summary.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

import numpy as np

from oracles import bipartition_exists, canonical, primitive_in_box, span_dim
from toricsplit.budget import Budget, BudgetExceeded
from toricsplit.exactla import rank
from toricsplit.splitting import find_cover
from toricsplit.supports import circuits
from toricsplit.toric import Configuration, NotPointedError, graver_basis, minimal_markov

SEED = 20240611
BOX = 20
TARGET = 100
# Graver completion for a few random 2x6 matrices runs into hundreds of
# thousands of work units; those draws are skipped and counted.
GRAVER_BUDGET = 30_000
COVER_LIMIT = 10


@dataclass
class SweepResult:
    checked: int = 0
    skipped_budget: int = 0
    skipped_unpointed: int = 0
    cover_checks: int = 0
    covers_found: int = 0
    failures: dict[str, list] = field(default_factory=dict)

    def fail(self, prop: str, A, detail) -> None:
        self.failures.setdefault(prop, []).append((A, detail))

    def failures_of(self, prop: str) -> list:
        return self.failures.get(prop, [])


def random_matrix(rng: np.random.Generator) -> list[list[int]]:
    m = int(rng.integers(1, 4))
    # kernel dimension at most 4 keeps the (2B+1)^k brute-force box in memory
    n = int(rng.integers(m + 1, min(m + 4, 6) + 1))
    return rng.integers(0, 6, size=(m, n)).tolist()


def check_config(A: list[list[int]], res: SweepResult) -> bool:
    try:
        conf = Configuration(A)
    except NotPointedError:
        res.skipped_unpointed += 1
        return False
    try:
        G = graver_basis(conf, Budget(GRAVER_BUDGET))
        M = minimal_markov(conf, Budget(GRAVER_BUDGET), graver=G)
    except BudgetExceeded:
        res.skipped_budget += 1
        return False
    res.checked += 1
    n = conf.n
    graver = {g.canonical().coords for g in G}

    if rank(A) + len(conf.lattice_basis) != n:
        res.fail("rank_nullity", A, (rank(A), len(conf.lattice_basis)))

    # every Graver element inside the box is found by brute force and vice versa
    boxed = {g for g in graver if max(map(abs, g)) <= BOX}
    brute = primitive_in_box(A, BOX)
    if boxed != brute:
        res.fail("graver", A, (sorted(boxed ^ brute)))

    circ = {c.canonical().coords for c in circuits(conf)}
    if not circ <= graver:
        res.fail("circuits_in_graver", A, sorted(circ - graver))

    markov = {canonical(v.coords) for v in M.generators}
    if not markov <= graver:
        res.fail("markov_in_graver", A, sorted(markov - graver))

    gens = [v.coords for v in M.generators]
    if len(gens) < 2:
        gens = sorted(graver, key=lambda v: (sum(map(abs, v)), v))[:COVER_LIMIT]
    gens = gens[:COVER_LIMIT]
    if len(gens) >= 2:
        cert = find_cover(conf, gens, 2, Budget(None))
        expect = bipartition_exists(gens, conf.height)
        res.cover_checks += 1
        res.covers_found += expect
        if (cert is not None) != expect:
            res.fail("find_cover", A, (gens, expect))
        elif cert is not None:
            for part in cert.parts:
                if span_dim([gens[i] for i in part]) >= conf.height:
                    res.fail("find_cover", A, ("part spans the kernel", cert.parts))
    return True


@functools.lru_cache(maxsize=None)
def sweep(target: int = TARGET, seed: int = SEED) -> SweepResult:
    rng = np.random.default_rng(seed)
    res = SweepResult()
    while res.checked < target:
        check_config(random_matrix(rng), res)
    return res

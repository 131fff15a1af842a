"""Configurations, lattice vectors, fibers, Graver bases and minimal Markov bases."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import exactla
from ._simplex import find_nonnegative_solution
from .budget import Budget, ensure
from .exactla import IntMatrix

GRAVER_CAP = 100_000

MINIMAL_GENERATORS = "minimal_generators"
RADICAL_GENERATORS = "radical_generators"
USER_SUPPLIED = "user_supplied"
MODES = (MINIMAL_GENERATORS, RADICAL_GENERATORS, USER_SUPPLIED)


class NotPointedError(ValueError):
    """The configuration has a nonzero nonnegative kernel vector."""


class GraverCapExceeded(RuntimeError):
    pass


def canonical_sign(v: Sequence[int]) -> tuple[int, ...]:
    """The representative of {v, -v} whose first nonzero coordinate is positive."""
    v = tuple(v)
    for x in v:
        if x:
            return v if x > 0 else tuple(-y for y in v)
    return v


def conformal_leq(v: Sequence[int], u: Sequence[int]) -> bool:
    """v is conformally below u: v+ <= u+ and v- <= u- componentwise."""
    return all(a * b >= 0 and abs(a) <= abs(b) for a, b in zip(v, u))


@dataclass(frozen=True)
class LatticeVector:
    """An integer vector u, read as the binomial x^{u+} - x^{u-}."""

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(x) for x in self.coords))

    @property
    def plus(self) -> frozenset[int]:
        return frozenset(i for i, x in enumerate(self.coords) if x > 0)

    @property
    def minus(self) -> frozenset[int]:
        return frozenset(i for i, x in enumerate(self.coords) if x < 0)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, x in enumerate(self.coords) if x)

    @property
    def positive_part(self) -> tuple[int, ...]:
        return tuple(max(x, 0) for x in self.coords)

    @property
    def negative_part(self) -> tuple[int, ...]:
        return tuple(max(-x, 0) for x in self.coords)

    def canonical(self) -> "LatticeVector":
        return LatticeVector(canonical_sign(self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __neg__(self):
        return LatticeVector(tuple(-x for x in self.coords))

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def binomial(self, var: str = "x") -> str:
        """Render as a binomial string with 1-based variable indices."""

        def mono(part):
            terms = []
            for i, e in enumerate(part, start=1):
                if e == 1:
                    terms.append(f"{var}{i}")
                elif e > 1:
                    terms.append(f"{var}{i}^{e}")
            return "*".join(terms) or "1"

        return f"{mono(self.positive_part)} - {mono(self.negative_part)}"


def _vec(v) -> tuple[int, ...]:
    if isinstance(v, LatticeVector):
        return v.coords
    return tuple(int(x) for x in v)


def check_pointed(A) -> bool:
    """True iff ker_Z(A) meets N^n only in 0."""
    M = exactla.as_matrix(A)
    A_eq = [list(row) for row in M.rows] + [[1] * M.ncols]
    b_eq = [0] * M.nrows + [1]
    return find_nonnegative_solution(A_eq, b_eq) is None


class Configuration:
    """A pointed vector configuration: the columns of an integer matrix.

    Construction rejects non-pointed matrices.  Derived data (rank, kernel
    bases, a positive grading) is computed lazily and cached; the object
    is otherwise immutable.
    """

    def __init__(self, matrix, name: str | None = None, *, check: bool = True):
        self.matrix: IntMatrix = exactla.as_matrix(matrix)
        self.name = name
        if check and not check_pointed(self.matrix):
            raise NotPointedError(f"configuration {name or self.matrix} is not pointed")

    @property
    def m(self) -> int:
        return self.matrix.nrows

    @property
    def n(self) -> int:
        return self.matrix.ncols

    @cached_property
    def rank(self) -> int:
        return exactla.rank(self.matrix)

    @property
    def height(self) -> int:
        """ht(I_A) = dim ker_Q(A)."""
        return self.n - self.rank

    @cached_property
    def lattice_basis(self) -> tuple[tuple[int, ...], ...]:
        return tuple(exactla.integer_kernel_basis(self.matrix))

    @cached_property
    def grading(self) -> tuple[int, ...]:
        """An integer functional c with c . a_j > 0 for every column."""
        return tuple(exactla.primitive(positive_grading(self)))

    @cached_property
    def column_weights(self) -> tuple[int, ...]:
        c = self.grading
        return tuple(sum(ci * x for ci, x in zip(c, col)) for col in self.matrix.columns())

    def degree(self, v: Sequence[int]) -> tuple[int, ...]:
        return exactla.mat_vec(self.matrix, _vec(v))

    def weight(self, b: Sequence[int]) -> int:
        return sum(ci * x for ci, x in zip(self.grading, b))

    def lattice_vector(self, coords) -> LatticeVector:
        u = LatticeVector(_vec(coords))
        if len(u) != self.n:
            raise ValueError(f"vector of length {len(u)} for {self.n} columns")
        if any(self.degree(u.coords)):
            raise ValueError(f"{u.coords} is not in the kernel")
        return u

    def contains(self, u) -> bool:
        u = _vec(u)
        return len(u) == self.n and not any(self.degree(u))

    def __eq__(self, other):
        return isinstance(other, Configuration) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        label = f"{self.name!r}, " if self.name else ""
        return f"Configuration({label}{self.matrix.tolist()})"


def as_configuration(A) -> Configuration:
    return A if isinstance(A, Configuration) else Configuration(A)


def positive_grading(A) -> tuple[Fraction, ...]:
    """A rational c with c . a_j >= 1 > 0 for every column a_j.

    Exists iff A is pointed (Gordan's alternative); found by exact LP,
    minimizing the l1 norm of c.
    """
    M = A.matrix if isinstance(A, Configuration) else exactla.as_matrix(A)
    m, n = M.shape
    # variables: c+ (m), c- (m), slack s (n);  A^T (c+ - c-) - s = 1
    A_eq = []
    for j in range(n):
        col = M.column(j)
        A_eq.append(list(col) + [-x for x in col] + [-int(k == j) for k in range(n)])
    sol = find_nonnegative_solution(A_eq, [1] * n, objective=[1] * (2 * m) + [0] * n)
    if sol is None:
        raise NotPointedError("not pointed: no positive grading exists")
    return tuple(sol[i] - sol[m + i] for i in range(m))


@dataclass(frozen=True)
class GeneratorSet:
    """Lattice vectors whose binomials generate I_A (or do so up to radical)."""

    vectors: tuple[LatticeVector, ...]
    mode: str = USER_SUPPLIED
    provenance: str = ""

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown generator-set mode {self.mode!r}")
        vecs = tuple(v if isinstance(v, LatticeVector) else LatticeVector(_vec(v)) for v in self.vectors)
        seen = set()
        for v in vecs:
            key = canonical_sign(v.coords)
            if key in seen:
                raise ValueError(f"duplicate generator {v.coords} (up to sign)")
            seen.add(key)
        object.__setattr__(self, "vectors", vecs)

    @classmethod
    def for_configuration(cls, A: Configuration, vectors: Iterable, mode=USER_SUPPLIED, provenance=""):
        return cls(tuple(A.lattice_vector(v) for v in vectors), mode, provenance)

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, i):
        return self.vectors[i]

    def classes(self) -> set[tuple[int, ...]]:
        """The generators as a set of +-classes (canonical representatives)."""
        return {canonical_sign(v.coords) for v in self.vectors}


# ---------------------------------------------------------------- fibers


def fiber(A, b: Sequence[int], budget: Budget | int | None = None) -> list[tuple[int, ...]]:
    """All v in N^n with A v = b, sorted lexicographically.

    The kernel dimension's worth of "free" coordinates is enumerated depth
    first, bounded by the positive grading; the remaining coordinates are
    solved exactly.
    """
    A = as_configuration(A)
    budget = ensure(budget)
    b = tuple(int(x) for x in b)
    if len(b) != A.m:
        raise ValueError(f"degree of length {len(b)} for {A.m} rows")
    total = A.weight(b)
    if total < 0:
        return []
    if total == 0:
        return [(0,) * A.n] if not any(b) else []
    w = A.column_weights
    order = sorted(range(A.n), key=lambda j: (w[j], j))
    aug = [[row[j] for j in order] + [bi] for row, bi in zip(A.matrix.rows, b)]
    R, pivots = exactla.rref(aug)
    if A.n in pivots:
        return []
    free = [k for k in range(A.n) if k not in pivots]
    # pivot value = rhs - sum_f coef_f * v_f
    rhs = [row[A.n] for row in R]
    coefs = [[row[k] for k in free] for row in R]
    out = []
    assign = [0] * len(free)

    def leaf():
        v = [0] * A.n
        for i, p in enumerate(pivots):
            val = rhs[i] - sum(cf * a for cf, a in zip(coefs[i], assign))
            if val < 0 or val.denominator != 1:
                return
            v[order[p]] = int(val)
        for k, a in zip(free, assign):
            v[order[k]] = a
        out.append(tuple(v))

    def dfs(pos: int, left: int):
        budget.spend("fiber enumeration")
        if pos == len(free):
            leaf()
            return
        wj = w[order[free[pos]]]
        for a in range(left // wj + 1):
            assign[pos] = a
            dfs(pos + 1, left - a * wj)
        assign[pos] = 0

    dfs(0, total)
    return sorted(out)


# ---------------------------------------------------------------- Graver


def _dtype_for(vectors) -> type:
    big = max((abs(x) for v in vectors for x in v), default=0)
    return np.int64 if big < 2**20 else object


class _Completion:
    """Pottier-style completion with respect to the conformal order.

    Stores one representative per +-pair; reduction tries both signs.
    """

    def __init__(self, n: int, dtype, budget: Budget, cap: int):
        self.n = n
        self.dtype = dtype
        self.budget = budget
        self.cap = cap
        self.rows = np.zeros((0, n), dtype=dtype)
        self.absrows = self.rows.copy()
        self.keys: set[tuple[int, ...]] = set()
        self.weights = np.array([1 << j for j in range(min(n, 62))], dtype=np.int64)

    def reduce(self, s: np.ndarray) -> np.ndarray:
        while s.any():
            if not len(self.rows):
                return s
            abs_s = np.abs(s)
            fits = (self.absrows <= abs_s).all(axis=1)
            if not fits.any():
                return s
            prod = self.rows[fits] * s
            idx = np.flatnonzero(fits)
            same = (prod >= 0).all(axis=1)
            opp = (prod <= 0).all(axis=1)
            hit = np.flatnonzero(same | opp)
            if not len(hit):
                return s
            k = hit[0]
            g = self.rows[idx[k]]
            s = s - g if same[k] else s + g
        return s

    def add(self, v: np.ndarray) -> int:
        key = canonical_sign(int(x) for x in v)
        if key in self.keys:
            return -1
        if len(self.keys) >= self.cap:
            raise GraverCapExceeded(f"Graver completion exceeded {self.cap} elements")
        self.keys.add(key)
        row = np.array(key, dtype=self.dtype)
        self.rows = np.vstack([self.rows, row])
        self.absrows = np.abs(self.rows)
        if self.dtype is np.int64 and int(self.absrows.max()) >= 2**40:
            raise OverflowError
        return len(self.rows) - 1

    def _bits(self, X: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        w = self.weights
        return (X > 0).astype(np.int64) @ w, (X < 0).astype(np.int64) @ w

    def reduce_batch(self, S: np.ndarray) -> np.ndarray:
        """Normal forms of many vectors at once: repeatedly subtract a conformal reducer.

        Candidates are filtered by sign-support bitmasks before the
        componentwise size test.
        """
        if self.n > 62:
            return np.array([self.reduce(s) for s in S], dtype=self.dtype).reshape(S.shape)
        S = S.copy()
        rows, absrows = self.rows, self.absrows
        if not len(rows):
            return S
        rp, rn = self._bits(rows)
        live = np.flatnonzero(S.any(axis=1))
        chunk = max(1, 2_000_000 // len(rows))
        while len(live):
            moved = []
            for c in range(0, len(live), chunk):
                idx = live[c:c + chunk]
                X = S[idx]
                xp, xn = self._bits(X)
                same = ((rp[None, :] & ~xp[:, None]) == 0) & ((rn[None, :] & ~xn[:, None]) == 0)
                opp = ((rp[None, :] & ~xn[:, None]) == 0) & ((rn[None, :] & ~xp[:, None]) == 0)
                bi, gi = np.nonzero(same | opp)
                if not len(bi):
                    continue
                ok = (absrows[gi] <= np.abs(X[bi])).all(axis=1)
                bi, gi = bi[ok], gi[ok]
                if not len(bi):
                    continue
                bi, first = np.unique(bi, return_index=True)
                gi = gi[first]
                sign = np.where(same[bi, gi], -1, 1).astype(self.dtype)
                S[idx[bi]] = X[bi] + sign[:, None] * rows[gi]
                moved.append(idx[bi])
            live = np.concatenate(moved) if moved else np.zeros(0, dtype=np.int64)
            live = live[S[live].any(axis=1)]
        return S

    def run(self, generators) -> list[tuple[int, ...]]:
        heap: list = []
        counter = 0

        def push_pairs(k: int):
            nonlocal counter
            if k == 0:
                return
            f = self.rows[k]
            G = self.rows[:k]
            prod = G * f
            for sgn in (1, -1):
                # f + sgn*g is reducible by f whenever f and sgn*g share an orthant
                need = np.flatnonzero(~(sgn * prod >= 0).all(axis=1))
                if not len(need):
                    continue
                norms = np.abs(f + sgn * G[need]).sum(axis=1)
                for i, nrm in zip(need.tolist(), norms.tolist()):
                    heapq.heappush(heap, (int(nrm), counter, i, k, sgn))
                    counter += 1

        def add_reduced(r: np.ndarray):
            r = self.reduce(r)
            if r.any():
                k = self.add(r)
                if k >= 0:
                    push_pairs(k)

        for v in generators:
            add_reduced(np.array(v, dtype=self.dtype))
        while heap:
            # every pending pair of the current least norm, reduced together
            level = heap[0][0]
            batch = []
            while heap and heap[0][0] == level and len(batch) < 8192:
                batch.append(heapq.heappop(heap))
            self.budget.spend("Graver completion", len(batch))
            I = np.array([b[2] for b in batch])
            K = np.array([b[3] for b in batch])
            sg = np.array([b[4] for b in batch], dtype=self.dtype)
            S = self.rows[K] + sg[:, None] * self.rows[I]
            R = self.reduce_batch(S)
            for r in R[R.any(axis=1)]:
                add_reduced(r)
        return self.minimal_elements()

    def minimal_elements(self) -> list[tuple[int, ...]]:
        keep = []
        for k in range(len(self.rows)):
            u = self.rows[k]
            abs_u = self.absrows[k]
            fits = (self.absrows <= abs_u).all(axis=1)
            fits[k] = False
            prod = self.rows[fits] * u
            dominated = ((prod >= 0).all(axis=1) | (prod <= 0).all(axis=1)).any() if fits.any() else False
            if not dominated:
                keep.append(tuple(int(x) for x in u))
        return keep


def graver_basis(
    A,
    budget: Budget | int | None = None,
    cap: int = GRAVER_CAP,
    lattice_basis: Sequence[Sequence[int]] | None = None,
) -> list[LatticeVector]:
    """The Graver basis of I_A: one vector per +-pair, canonical signs, sorted.

    `lattice_basis` overrides the starting basis of ker_Z(A) (any basis of
    the same lattice yields the same answer).
    """
    A = as_configuration(A)
    budget = ensure(budget)
    basis = [tuple(v) for v in (lattice_basis if lattice_basis is not None else A.lattice_basis)]
    if not basis:
        return []
    if len(basis) == 1:
        return [LatticeVector(canonical_sign(exactla.primitive(basis[0])))]
    dtype = _dtype_for(basis)
    try:
        result = _Completion(A.n, dtype, budget, cap).run(basis)
    except OverflowError:
        result = _Completion(A.n, object, budget, cap).run(basis)
    return [LatticeVector(v) for v in sorted(result)]


# ---------------------------------------------------------------- Markov


@dataclass
class DegreeData:
    """What the fiber of one Graver degree says about minimal generators."""

    degree: tuple[int, ...]
    fiber_size: int
    components: list[list[tuple[int, ...]]]
    generators: list[LatticeVector] = field(default_factory=list)

    @property
    def indispensable(self) -> bool:
        # two single-element components: the only possible generator
        return len(self.components) == 2 and all(len(c) == 1 for c in self.components)


@dataclass
class MarkovResult:
    generators: GeneratorSet
    degrees: list[DegreeData]

    @property
    def unique(self) -> bool:
        """True when the minimal binomial generating set is unique up to sign."""
        return all(d.indispensable for d in self.degrees)

    def __len__(self):
        return len(self.generators)


def _components(points: list[tuple[int, ...]]) -> list[list[tuple[int, ...]]]:
    parent = list(range(len(points)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    n = len(points[0]) if points else 0
    for j in range(n):
        owners = [i for i, p in enumerate(points) if p[j] > 0]
        for i in owners[1:]:
            ra, rb = find(owners[0]), find(i)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list] = {}
    for i, p in enumerate(points):
        groups.setdefault(find(i), []).append(p)
    comps = [sorted(g) for g in groups.values()]
    comps.sort()
    return comps


def minimal_markov(
    A,
    budget: Budget | int | None = None,
    graver: Sequence[LatticeVector] | None = None,
) -> MarkovResult:
    """A minimal binomial generating set of I_A, with per-degree fiber data.

    For each degree occurring in the Graver basis, the fiber is split into
    classes of monomials linked by common factors; a degree with k classes
    needs exactly k - 1 minimal generators.  The chosen generators form a
    spanning tree of the classes using the lexicographically least Graver
    moves.
    """
    A = as_configuration(A)
    budget = ensure(budget)
    if graver is None:
        graver = graver_basis(A, budget)
    graver_keys = {canonical_sign(g.coords) for g in graver}
    degrees = sorted({A.degree(g.positive_part) for g in graver}, key=lambda b: (A.weight(b), b))
    data = []
    gens: list[LatticeVector] = []
    for b in degrees:
        pts = fiber(A, b, budget)
        comps = _components(pts)
        if len(comps) < 2:
            continue
        label = {p: ci for ci, comp in enumerate(comps) for p in comp}
        edges = set()
        for i, v in enumerate(pts):
            for w in pts[i + 1:]:
                if label[v] != label[w]:
                    key = canonical_sign(x - y for x, y in zip(v, w))
                    if key in graver_keys:
                        edges.add((key, min(label[v], label[w]), max(label[v], label[w])))
        parent = list(range(len(comps)))

        def find(i):
            while parent[i] != i:
                i = parent[i]
            return i

        chosen = []
        for key, ca, cb in sorted(edges):
            ra, rb = find(ca), find(cb)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
                chosen.append(LatticeVector(key))
        if len(chosen) != len(comps) - 1:
            raise AssertionError(f"degree {b}: Graver moves do not connect the fiber")
        data.append(DegreeData(b, len(pts), comps, chosen))
        gens.extend(chosen)
    gens.sort(key=lambda u: u.coords)
    gs = GeneratorSet(tuple(gens), MINIMAL_GENERATORS, "fiber connectivity over Graver degrees")
    return MarkovResult(gs, data)


def mu(A, budget: Budget | int | None = None) -> int:
    """mu(I_A), the minimal number of binomial generators."""
    return len(minimal_markov(A, budget).generators)

"""Splitting criterion: covers of a generating set by parts with proper spans.

A toric ideal splits into r proper toric summands (or does so up to
radical) exactly when some minimal generating set (or radical generating
set) can be covered by r parts, each spanning a proper subspace of
ker_Q(A).  This module searches for such covers, builds the witness
configurations, and assembles what can be said about Split and Split_rad.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import exactla
from .budget import Budget, BudgetExceeded, ensure
from .exactla import FULL_SPAN, IntMatrix
from .supports import bar_bounds
from .toric import (
    RADICAL_GENERATORS,
    Configuration,
    GeneratorSet,
    GraverCapExceeded,
    LatticeVector,
    as_configuration,
    minimal_markov,
)

SPLITTING = "splitting"
RADICAL_SPLITTING = "radical_splitting"
MAX_COVER_SIZE = 16


class FullKernelPart(ValueError):
    """A part spans all of ker_Q(A), so its toric ideal would be I_A itself."""


@dataclass
class SplitCertificate:
    """A partition of a generating set into parts with proper spans."""

    generators: GeneratorSet
    parts: list[tuple[int, ...]]
    span_dims: list[int]
    kernel_dim: int
    witness_configs: list[IntMatrix]
    kind: str = SPLITTING

    @property
    def r(self) -> int:
        return len(self.parts)

    def part_vectors(self, i: int) -> list[tuple[int, ...]]:
        return [self.generators[k].coords for k in self.parts[i]]


def _vecs(C) -> list[tuple[int, ...]]:
    return [v.coords if isinstance(v, LatticeVector) else tuple(v) for v in C]


def kernel_identity_problems(M, vectors: Sequence[Sequence[int]]) -> list[str]:
    """Check ker_Q(M) == span_Q(vectors) by double inclusion; returns problems found."""
    M = exactla.as_matrix(M)
    vectors = [tuple(v) for v in vectors]
    problems = []
    for v in vectors:
        if any(exactla.mat_vec(M, v)):
            problems.append(f"{v} is not in the kernel of the witness matrix")
    for w in exactla.rational_kernel_basis(M):
        if not exactla.in_span(w, vectors):
            problems.append(f"kernel vector {w} is not in the span of the part")
    return problems


def build_subconfigurations(
    parts: Sequence[Sequence[Sequence[int]]], kernel_dim: int | None = None
) -> tuple[list[IntMatrix], list[str]]:
    """Witness matrices A_i with ker_Q(A_i) = span_Q(C_i), plus a verification log.

    Raises FullKernelPart if some part spans the whole kernel (given
    `kernel_dim`) or all of Q^n.
    """
    mats = []
    log = []
    for i, part in enumerate(parts):
        part = [tuple(v) for v in part]
        if not part:
            raise ValueError(f"part {i} is empty")
        n = len(part[0])
        dim = exactla.span_dimension(part)
        if kernel_dim is not None and dim >= kernel_dim:
            raise FullKernelPart(f"part {i} spans a space of dimension {dim} = dim ker_Q(A)")
        M = exactla.orthogonal_complement(part, n)
        if M is FULL_SPAN:
            raise FullKernelPart(f"part {i} spans Q^{n}")
        problems = kernel_identity_problems(M, part)
        if problems:
            raise AssertionError(f"part {i}: " + "; ".join(problems))
        log.append(f"part {i}: {M.nrows}x{M.ncols} witness, ker = span (dim {dim})")
        mats.append(M)
    return mats, log


def verify_certificate(cert: SplitCertificate, A=None) -> list[str]:
    """Independent re-check of a certificate; an empty list means it is valid.

    Recomputes everything from the raw vectors: the parts cover the
    generators, every span is proper, and every witness matrix has kernel
    exactly the span of its part.
    """
    problems = []
    kdim = cert.kernel_dim
    if A is not None:
        A = as_configuration(A)
        if A.height != kdim:
            problems.append(f"kernel dimension {kdim} != ht(A) = {A.height}")
        for v in cert.generators:
            if not A.contains(v.coords):
                problems.append(f"generator {v.coords} is not in ker_Z(A)")
    covered = sorted(k for p in cert.parts for k in p)
    if covered != list(range(len(cert.generators))):
        problems.append("parts do not partition the generator set")
    if len(cert.witness_configs) != len(cert.parts):
        problems.append("one witness matrix per part is required")
    for i, part in enumerate(cert.parts):
        vecs = cert.part_vectors(i)
        dim = exactla.span_dimension(vecs)
        if dim >= kdim:
            problems.append(f"part {i} has span dimension {dim} >= {kdim}")
        if i < len(cert.span_dims) and cert.span_dims[i] != dim:
            problems.append(f"part {i}: recorded span dimension {cert.span_dims[i]}, actual {dim}")
        if i < len(cert.witness_configs):
            problems += [f"part {i}: {p}" for p in kernel_identity_problems(cert.witness_configs[i], vecs)]
    return problems


class _Span:
    """Incremental row-echelon basis over Q."""

    __slots__ = ("rows", "pivots")

    def __init__(self, rows=(), pivots=()):
        self.rows = list(rows)
        self.pivots = list(pivots)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def residue(self, v: Sequence[Fraction]) -> list[Fraction]:
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            if v[p]:
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def contains(self, v) -> bool:
        return not any(self.residue(v))

    def extended(self, v) -> "_Span":
        r = self.residue(v)
        p = next((j for j, x in enumerate(r) if x), None)
        if p is None:
            return self
        piv = r[p]
        r = [x / piv for x in r]
        rows = []
        for row in self.rows:
            if row[p]:
                f = row[p]
                row = [x - f * y for x, y in zip(row, r)]
            rows.append(row)
        return _Span(rows + [r], self.pivots + [p])


def _kernel_coordinates(vectors: list[tuple[int, ...]], basis: list[tuple[int, ...]]) -> list[list[Fraction]]:
    """Coordinates of each vector in a basis of the space it lives in."""
    # solve against the RREF of the basis: pivot entries give coordinates directly
    R, pivots = exactla.rref(basis)
    out = []
    for v in vectors:
        coords = [Fraction(v[p]) for p in pivots]
        recon = [sum(c * row[j] for c, row in zip(coords, R)) for j in range(len(v))]
        if any(x != y for x, y in zip(recon, v)):
            raise ValueError(f"{v} is not in the kernel")
        out.append(coords)
    return out


def _search_partition(coords: list[list[Fraction]], k: int, r: int, budget: Budget) -> list[int] | None:
    """First assignment into <= r parts of span dim < k found by a fixed-order DFS.

    Parts are opened in order (restricted growth), so the result depends
    only on the order of the vectors.
    """
    N = len(coords)
    assign = [-1] * N
    spans: list[_Span] = []

    def fits(i: int, s: _Span) -> bool:
        return s.dim < k - 1 or s.contains(coords[i])

    def viable(start: int) -> bool:
        # forward check: every later vector still has somewhere to go
        if len(spans) < r:
            return True
        return all(any(fits(i, s) for s in spans) for i in range(start, N))

    def dfs(i: int) -> bool:
        budget.spend("cover search")
        if i == N:
            return True
        # a vector already inside some part's span goes there: no span changes,
        # and any other placement could only enlarge a span
        home = next((j for j, s in enumerate(spans) if s.contains(coords[i])), None)
        if home is not None:
            assign[i] = home
            if dfs(i + 1):
                return True
            assign[i] = -1
            return False
        for j, s in enumerate(spans):
            if fits(i, s):
                spans[j] = s.extended(coords[i])
                assign[i] = j
                if viable(i + 1) and dfs(i + 1):
                    return True
                spans[j] = s
        if len(spans) < r:
            spans.append(_Span().extended(coords[i]))
            assign[i] = len(spans) - 1
            if viable(i + 1) and dfs(i + 1):
                return True
            spans.pop()
        assign[i] = -1
        return False

    return assign if dfs(0) else None


def find_cover(
    A,
    C: GeneratorSet | Sequence,
    r: int,
    budget: Budget | int | None = None,
    max_size: int | None = MAX_COVER_SIZE,
    kind: str | None = None,
) -> SplitCertificate | None:
    """A partition of C into exactly r parts (when |C| >= r), each spanning a proper subspace of ker_Q(A).

    Returns the partition found by a deterministic depth-first search over
    the generator order, or None when none exists.
    A partition into fewer parts is split further to reach r, which keeps
    every span proper.
    """
    A = as_configuration(A)
    if r < 2:
        raise ValueError("r must be at least 2")
    if not isinstance(C, GeneratorSet):
        C = GeneratorSet.for_configuration(A, C)
    if not len(C):
        raise ValueError("empty generator set")
    if max_size is not None and len(C) > max_size:
        raise BudgetExceeded(f"cover search over {len(C)} > {max_size} generators", max_size)
    budget = ensure(budget)
    k = A.height
    vecs = _vecs(C)
    coords = _kernel_coordinates(vecs, list(A.lattice_basis))
    assign = _search_partition(coords, k, r, budget)
    if assign is None:
        return None
    parts = [tuple(i for i, a in enumerate(assign) if a == j) for j in range(max(assign) + 1)]
    # pad to exactly r parts by peeling single elements off the largest part
    while len(parts) < r and any(len(p) > 1 for p in parts):
        j = max(range(len(parts)), key=lambda t: (len(parts[t]), -t))
        parts[j], extra = parts[j][:-1], parts[j][-1:]
        parts.append(extra)
    parts.sort()
    part_vecs = [[vecs[i] for i in p] for p in parts]
    mats, _ = build_subconfigurations(part_vecs, k)
    if kind is None:
        kind = RADICAL_SPLITTING if C.mode == RADICAL_GENERATORS else SPLITTING
    return SplitCertificate(C, parts, [exactla.span_dimension(v) for v in part_vecs], k, mats, kind)


def min_cover(A, C, budget=None, max_size=MAX_COVER_SIZE, start: int = 2) -> SplitCertificate | None:
    """Certificate for the least r >= start with a valid cover of C, or None if even singletons fail."""
    A = as_configuration(A)
    for r in range(start, max(len(C), start) + 1):
        cert = find_cover(A, C, r, budget, max_size)
        if cert is not None:
            return cert
    return None


# ---------------------------------------------------------------- reports


@dataclass
class Quantity:
    """An integer quantity known exactly or bracketed, with the rule that licenses it."""

    lo: int | None
    hi: int | None
    rule: str
    notes: list[str] = field(default_factory=list)

    @property
    def exact(self) -> int | None:
        if self.lo is not None and self.lo == self.hi:
            return self.lo
        return None

    def as_dict(self) -> dict:
        d = {"lo": self.lo, "hi": self.hi, "exact": self.exact, "rule": self.rule}
        if self.notes:
            d["notes"] = list(self.notes)
        return d

    def __str__(self):
        if self.exact is not None:
            return f"{self.exact} ({self.rule})"
        hi = "?" if self.hi is None else self.hi
        return f"[{self.lo}, {hi}] ({self.rule})"


@dataclass
class SplitReport:
    height: int
    split: Quantity
    split_rad: Quantity
    method: str
    mu: int | None = None
    certificate: SplitCertificate | None = None
    bar: object = None
    notes: list[str] = field(default_factory=list)

    @property
    def applicable(self) -> bool:
        return self.height >= 2


def split_numbers(
    A,
    budget: Budget | int | None = None,
    assume_circuit_radical: bool = False,
    radical_generators: GeneratorSet | None = None,
    known_bar: int | None = None,
) -> SplitReport:
    """Compute or bound Split(I_A) and Split_rad(I_A).

    Height 2: Split = mu and Split_rad = bar, bracketed by bar_bounds.
    Height >= 3 with a unique minimal generating set: Split is the least
    r admitting a cover of that set.  Otherwise only bounds, labelled as
    coming from one particular minimal generating set.
    """
    A = as_configuration(A)
    budget = ensure(budget)
    ht = A.height
    if ht == 0:
        na = Quantity(None, None, "not applicable (zero ideal)")
        return SplitReport(ht, na, na, "zero ideal")
    if ht == 1:
        na = Quantity(None, None, "not applicable (principal)")
        return SplitReport(ht, na, na, "principal ideal")

    notes: list[str] = []
    try:
        markov = minimal_markov(A, budget)
    except (BudgetExceeded, GraverCapExceeded) as exc:
        markov = None
        notes.append(f"minimal generators unavailable: {exc}")

    if ht == 2:
        bb = bar_bounds(A, assume_circuit_radical, budget)
        if markov is None:
            split = Quantity(2, bb.mu, "height 2: Split = mu (mu unavailable)")
            cert = None
        else:
            mu_val = len(markov.generators)
            split = Quantity(mu_val, mu_val, "height 2: Split = mu")
            cert = _try_cover(A, markov.generators, mu_val, budget, notes)
        lo, hi = max(2, bb.lo), bb.hi
        rule = f"height 2: Split_rad = bar; lower from {bb.lo_reason}, upper from {bb.hi_reason}"
        if known_bar is not None:
            lo = hi = known_bar
            rule = "height 2: Split_rad = bar (bar supplied)"
        split_rad = Quantity(lo, hi, rule)
        return SplitReport(ht, split, split_rad, "height-2 rule", bb.mu, cert, bb, notes)

    cert = None
    mu_val = None
    if markov is not None:
        mu_val = len(markov.generators)
        try:
            cert = min_cover(A, markov.generators, budget, max_size=None)
        except BudgetExceeded as exc:
            notes.append(f"cover search stopped: {exc}")
    if cert is not None and markov.unique:
        split = Quantity(cert.r, cert.r, "unique minimal generating set: least covering r")
        method = "unique minimal generating set"
    elif cert is not None:
        split = Quantity(2, cert.r, "upper bound from one minimal generating set")
        method = "upper bound from one minimal generating set"
    else:
        split = Quantity(2, mu_val, "bounds only")
        method = "bounds only"

    rad_hi = split.hi
    rad_rule = "Split_rad <= Split"
    if radical_generators is not None:
        try:
            rcert = min_cover(A, radical_generators, budget, max_size=None)
        except BudgetExceeded as exc:
            rcert = None
            notes.append(f"radical cover search stopped: {exc}")
        if rcert is not None and (rad_hi is None or rcert.r <= rad_hi):
            rad_hi, rad_rule = rcert.r, "cover of the supplied radical generating set"
    bar_hi = known_bar if known_bar is not None else mu_val
    if bar_hi is not None and bar_hi <= 2 * ht - 2:
        split_rad = Quantity(2, 2, f"height {ht} >= 3 and bar <= {bar_hi} <= 2*ht-2: radical splittable")
    else:
        split_rad = Quantity(2, rad_hi, rad_rule)
    return SplitReport(ht, split, split_rad, method, mu_val, cert, None, notes)


def _try_cover(A, C, r, budget, notes):
    try:
        return find_cover(A, C, r, budget, max_size=None)
    except BudgetExceeded as exc:
        notes.append(f"cover search stopped: {exc}")
        return None


# ---------------------------------------------------------------- rules


@dataclass
class Rule:
    name: str
    conclusion: str
    evidence: str

    def as_dict(self) -> dict:
        return {"name": self.name, "conclusion": self.conclusion, "evidence": self.evidence}


def simplicial_shape(A) -> dict | None:
    """Detect the simplicial shape: a positive multiple of each unit vector among the columns.

    Returns None if some row has no such column, else a dict with the
    diagonal columns, the remaining ("tail") columns and two flags:
    simplicial (tail entries >= 0, each tail column nonzero) and
    full_parametrization (all tail entries nonzero).
    """
    M = exactla.as_matrix(A)
    m, n = M.shape
    diag = []
    for i in range(m):
        j = next(
            (j for j in range(n) if j not in diag and M.rows[i][j] > 0
             and all(M.rows[k][j] == 0 for k in range(m) if k != i)),
            None,
        )
        if j is None:
            return None
        diag.append(j)
    tail = [j for j in range(n) if j not in diag]
    entries = [M.rows[i][j] for i in range(m) for j in tail]
    simplicial = bool(tail) and all(x >= 0 for x in entries) and all(any(M.rows[i][j] for i in range(m)) for j in tail)
    full = simplicial and all(x != 0 for x in entries)
    return {"diagonal": diag, "tail": tail, "simplicial": simplicial, "full_parametrization": full}


def classify_sufficient_conditions(
    A, known_bar: int | None = None, budget: Budget | int | None = None
) -> list[Rule]:
    """The splitting rules whose hypotheses A verifiably satisfies."""
    A = as_configuration(A)
    ht = A.height
    rules: list[Rule] = []
    shape = simplicial_shape(A)
    if ht == 2:
        rules.append(Rule("height2", "Split = mu and Split_rad = bar", "ht = 2"))
        rules.append(Rule(
            "height2_stci_iff",
            "radical splittable iff set-theoretic complete intersection on binomials",
            "ht = 2",
        ))
        if known_bar == 2:
            rules.append(Rule("stci", "set-theoretic CI => radical splittable (Split_rad = 2)", "bar = ht = 2"))
    if shape and shape["simplicial"]:
        if ht == 2:
            label = "simplicial, full parametrization" if shape["full_parametrization"] else "simplicial"
            rules.append(Rule("simplicial_height2", "2 <= Split_rad <= 3", f"{label}, height 2"))
        if shape["full_parametrization"]:
            rules.append(Rule(
                "full_parametrization_char_p",
                "in positive characteristic: set-theoretic CI on binomials, hence radical splittable",
                "simplicial with full parametrization",
            ))
            if ht >= 3:
                rules.append(Rule(
                    "simplicial_full_height3",
                    "radical splittable in any characteristic",
                    f"simplicial with full parametrization, height {ht} >= 3",
                ))
    if ht >= 2 and known_bar is not None and known_bar == ht:
        if not any(r.name == "stci" for r in rules):
            rules.append(Rule("stci", "set-theoretic CI => radical splittable", f"bar = ht = {ht}"))
    if ht >= 3:
        bar_hi, source = known_bar, "supplied bar"
        if bar_hi is None:
            try:
                bar_hi, source = len(minimal_markov(A, budget).generators), "bar <= mu"
            except (BudgetExceeded, GraverCapExceeded):
                bar_hi = None
        if bar_hi is not None and bar_hi <= 2 * ht - 2:
            rules.append(Rule(
                "bar_le_2r_minus_2",
                "radical splittable",
                f"height {ht} >= 3, bar <= {bar_hi} <= {2 * ht - 2} ({source})",
            ))
        if known_bar is not None and known_bar == ht + 1:
            rules.append(Rule("bar_eq_r_plus_1", "radical splittable", f"bar = ht + 1 = {ht + 1}"))
    return rules

"""Exact linear algebra over Q and Z.

Everything here works on Python integers and :class:`fractions.Fraction`;
there is no floating point anywhere.  Vectors are plain tuples, matrices
are :class:`IntMatrix` (or anything that :func:`as_matrix` accepts).
Indices are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from ._simplex import find_nonnegative_solution

__all__ = [
    "IntMatrix",
    "FullSpan",
    "FULL_SPAN",
    "as_matrix",
    "mat_vec",
    "rank",
    "rref",
    "determinant",
    "rational_kernel_basis",
    "integer_kernel_basis",
    "hermite_normal_form",
    "span_dimension",
    "in_span",
    "orthogonal_complement",
    "signed_kernel_vector",
    "primitive",
    "integer_solve",
]


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, stored row-major."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.rows or not self.rows[0]:
            raise ValueError("IntMatrix needs at least one row and one column")
        width = len(self.rows[0])
        for row in self.rows:
            if len(row) != width:
                raise ValueError("ragged matrix")
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise TypeError(f"matrix entry {x!r} is not an integer")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        return cls(tuple(tuple(_as_int(x) for x in row) for row in rows))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    def submatrix(self, cols: Sequence[int]) -> "IntMatrix":
        return IntMatrix(tuple(tuple(row[j] for j in cols) for row in self.rows))

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def __repr__(self):
        return f"IntMatrix({self.tolist()})"


class FullSpan:
    """Marker returned by :func:`orthogonal_complement` when the input spans Q^n."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "FULL_SPAN"

    def __bool__(self):
        return False


FULL_SPAN = FullSpan()


def _as_int(x) -> int:
    if isinstance(x, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    # numpy integers and friends
    if hasattr(x, "__index__"):
        return int(x.__index__())
    raise TypeError(f"{x!r} is not an integer")


def as_matrix(M) -> IntMatrix:
    if isinstance(M, IntMatrix):
        return M
    if hasattr(M, "matrix") and isinstance(M.matrix, IntMatrix):
        return M.matrix
    if hasattr(M, "tolist"):
        M = M.tolist()
    return IntMatrix.from_rows(M)


def mat_vec(M, v: Sequence) -> tuple:
    M = as_matrix(M)
    if len(v) != M.ncols:
        raise ValueError(f"vector of length {len(v)} for a matrix with {M.ncols} columns")
    return tuple(sum(a * x for a, x in zip(row, v)) for row in M.rows)


def _rows(vectors) -> list[list[Fraction]]:
    if isinstance(vectors, IntMatrix):
        vectors = vectors.rows
    return [[Fraction(x) for x in v] for v in vectors]


def rref(vectors) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q.

    Returns the nonzero rows and the list of pivot columns.
    """
    A = _rows(vectors)
    if not A:
        return [], []
    nrows, ncols = len(A), len(A[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        piv = A[r][c]
        if piv != 1:
            A[r] = [x / piv for x in A[r]]
        for i in range(nrows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(M) -> int:
    """Rank over Q, by fraction-free (Bareiss) elimination."""
    if isinstance(M, IntMatrix):
        A = [list(row) for row in M.rows]
    else:
        A = [list(row) for row in M]
    if not A:
        return 0
    if any(isinstance(x, Fraction) and x.denominator != 1 for row in A for x in row):
        return len(rref(A)[1])
    A = [[_as_int(x) for x in row] for row in A]
    nrows, ncols = len(A), len(A[0])
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        piv = A[r][c]
        for i in range(r + 1, nrows):
            a = A[i][c]
            A[i] = [(piv * x - a * y) // prev for x, y in zip(A[i], A[r])]
        prev = piv
        r += 1
    return r


def determinant(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss)."""
    A = [[_as_int(x) for x in row] for row in rows]
    n = len(A)
    if n == 0:
        return 1
    if any(len(row) != n for row in A):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            p = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if p is None:
                return 0
            A[k], A[p] = A[p], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def primitive(v: Sequence) -> tuple[int, ...]:
    """Clear denominators and divide out the content; signs are kept."""
    fr = [Fraction(x) for x in v]
    den = lcm(*(x.denominator for x in fr)) if fr else 1
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def _leading_positive(v: tuple[int, ...]) -> tuple[int, ...]:
    for x in v:
        if x != 0:
            return v if x > 0 else tuple(-y for y in v)
    return v


def _canonical_basis(vectors) -> list[tuple[int, ...]]:
    rows, _ = rref(vectors)
    return [_leading_positive(primitive(row)) for row in rows]


def rational_kernel_basis(M) -> list[tuple[int, ...]]:
    """Basis of ker_Q(M), in canonical form.

    The basis is the reduced row echelon form of any kernel-spanning set,
    with each row scaled to a primitive integer vector whose first nonzero
    entry is positive.
    """
    M = as_matrix(M)
    R, pivots = rref(M)
    n = M.ncols
    free = [j for j in range(n) if j not in pivots]
    raw = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        raw.append(v)
    if not raw:
        return []
    return _canonical_basis(raw)


def hermite_normal_form(vectors: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Row-style Hermite normal form of the lattice spanned by integer rows.

    Pivots are positive, entries above a pivot are reduced into [0, pivot),
    zero rows are dropped.  Two generating sets of the same lattice give
    the same output.
    """
    A = [[_as_int(x) for x in v] for v in vectors]
    if not A:
        return []
    nrows, ncols = len(A), len(A[0])
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        # Euclid on column c among rows r..end
        while True:
            nz = [i for i in range(r, nrows) if A[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(A[i][c]))
            A[r], A[p] = A[p], A[r]
            done = True
            for i in range(r + 1, nrows):
                if A[i][c] != 0:
                    q = A[i][c] // A[r][c]
                    A[i] = [x - q * y for x, y in zip(A[i], A[r])]
                    if A[i][c] != 0:
                        done = False
            if done:
                break
        if all(A[i][c] == 0 for i in range(r, nrows)):
            continue
        if A[r][c] < 0:
            A[r] = [-x for x in A[r]]
        for i in range(r):
            q = A[i][c] // A[r][c]
            if q:
                A[i] = [x - q * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in A[:r]]


def integer_kernel_basis(M) -> list[tuple[int, ...]]:
    """A basis of the lattice ker_Z(M), in Hermite normal form.

    Column reduction of M tracked on an identity block: the columns of the
    transform that end up under zero columns of M span the integer kernel.
    """
    M = as_matrix(M)
    m, n = M.shape
    # work with columns as rows: C[j] = (column j of M | e_j)
    C = [list(M.column(j)) + [int(i == j) for i in range(n)] for j in range(n)]
    r = 0
    for i in range(m):
        if r == n:
            break
        while True:
            nz = [j for j in range(r, n) if C[j][i] != 0]
            if not nz:
                break
            p = min(nz, key=lambda j: abs(C[j][i]))
            C[r], C[p] = C[p], C[r]
            done = True
            for j in range(r + 1, n):
                if C[j][i] != 0:
                    q = C[j][i] // C[r][i]
                    C[j] = [x - q * y for x, y in zip(C[j], C[r])]
                    if C[j][i] != 0:
                        done = False
            if done:
                break
        if C[r][i] != 0:
            r += 1
    basis = [tuple(row[m:]) for row in C[r:]]
    assert all(all(x == 0 for x in row[:m]) for row in C[r:])
    return hermite_normal_form(basis)


def span_dimension(vectors) -> int:
    """Dimension over Q of the span of the given vectors (0 for none)."""
    vectors = list(vectors)
    if not vectors:
        return 0
    return len(rref(vectors)[1])


def in_span(v: Sequence, vectors) -> bool:
    vectors = list(vectors)
    if all(x == 0 for x in v):
        return True
    if not vectors:
        return False
    return span_dimension(vectors + [tuple(v)]) == span_dimension(vectors)


def orthogonal_complement(vectors, n: int) -> IntMatrix | FullSpan:
    """Integer matrix whose row space is the orthogonal complement of span(vectors).

    Consequently ker_Q of the result equals span_Q(vectors).  Returns
    :data:`FULL_SPAN` when the vectors span all of Q^n.
    """
    vectors = [tuple(v) for v in vectors]
    for v in vectors:
        if len(v) != n:
            raise ValueError(f"vector {v} does not have length {n}")
    R, _ = rref(vectors) if vectors else ([], [])
    if not R:
        return IntMatrix(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))
    basis = rational_kernel_basis(IntMatrix.from_rows(primitive(r) for r in R))
    if not basis:
        return FULL_SPAN
    return IntMatrix(tuple(basis))


def integer_solve(basis: Sequence[Sequence[int]], v: Sequence[int]) -> tuple[int, ...] | None:
    """Integer coefficients c with sum(c_i * basis_i) == v, or None.

    Requires the basis vectors to be linearly independent.
    """
    basis = [tuple(b) for b in basis]
    if not basis:
        return () if all(x == 0 for x in v) else None
    k = len(basis)
    # solve the transposed system over Q; independence makes it unique
    aug = [[Fraction(b[i]) for b in basis] + [Fraction(v[i])] for i in range(len(v))]
    R, pivots = rref(aug)
    if k in pivots:
        return None
    if len(pivots) != k:
        raise ValueError("basis vectors are linearly dependent")
    coeffs = [row[k] for row in R]
    if any(c.denominator != 1 for c in coeffs):
        return None
    return tuple(int(c) for c in coeffs)


def signed_kernel_vector(M, plus: Iterable[int], minus: Iterable[int]) -> tuple[int, ...] | None:
    """Integer u with M u = 0, u > 0 exactly on `plus`, u < 0 exactly on `minus`.

    Decided by exact rational feasibility: u_i >= 1 on `plus`, u_i <= -1
    on `minus`, zero elsewhere; any rational solution scales to an
    integer one.  Among feasible points one minimizing sum |u_i| is
    returned, content-reduced.  None if no such vector exists.
    """
    M = as_matrix(M)
    plus, minus = sorted(set(plus)), sorted(set(minus))
    if not plus or not minus:
        raise ValueError("both supports must be nonempty")
    if set(plus) & set(minus):
        raise ValueError("supports must be disjoint")
    n = M.ncols
    if plus[0] < 0 or minus[0] < 0 or max(plus[-1], minus[-1]) >= n:
        raise ValueError("support index out of range")
    idx = plus + minus
    sign = [1] * len(plus) + [-1] * len(minus)
    # u_i = sign_i * (1 + y_i), y >= 0  =>  sum_i M[:, i] sign_i y_i = -sum_i M[:, i] sign_i
    A_eq = [[row[i] * s for i, s in zip(idx, sign)] for row in M.rows]
    b_eq = [-sum(row[i] * s for i, s in zip(idx, sign)) for row in M.rows]
    y = find_nonnegative_solution(A_eq, b_eq, objective=[1] * len(idx))
    if y is None:
        return None
    u = [Fraction(0)] * n
    for i, s, yi in zip(idx, sign, y):
        u[i] = s * (1 + yi)
    return primitive(u)

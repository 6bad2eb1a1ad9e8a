"""Dense exact linear algebra over the rationals.

Scalars are Python ints or ``fractions.Fraction`` in lowest terms; the two mix
freely and integer values are kept as ints so the common all-integer paths stay
fast.  Everything is immutable after construction and all functions are pure.
Row reduction uses first-nonzero pivoting with lowest-row-index tie-breaking,
so outputs are reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, Singular


def q(x):
    """Normalize a scalar: Fractions with denominator 1 become ints."""
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    if isinstance(x, int):
        return x
    raise TypeError(f"not an exact scalar: {x!r}")


def parse_scalar(s):
    """Parse "p" or "p/q" into an exact scalar."""
    if isinstance(s, int):
        return s
    try:
        return q(Fraction(str(s)))
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in scalar {s!r}") from None


def scalar_str(x) -> str:
    """Serialize a scalar as "p" or "p/q"."""
    return str(q(x))


def vec(values):
    return tuple(q(v) for v in values)


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, u):
    return tuple(q(c * a) for a in u)


def vec_zero(n):
    return (0,) * n


def is_zero_vec(u) -> bool:
    return all(a == 0 for a in u)


class Matrix:
    """Immutable dense matrix with exact rational entries (row-major)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols=None):
        rows = tuple(tuple(q(x) for x in row) for row in entries)
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else (cols or 0)
        for row in rows:
            if len(row) != self.cols:
                raise DimensionMismatch("ragged rows")
        self.entries = rows

    @staticmethod
    def zeros(rows, cols=None):
        cols = rows if cols is None else cols
        return Matrix([[0] * cols for _ in range(rows)], cols=cols)

    @staticmethod
    def identity(n):
        return Matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def from_cols(cols):
        if not cols:
            return Matrix([])
        if len(cols[0]) == 0:
            return Matrix([], cols=len(cols))
        return Matrix([[c[i] for c in cols] for i in range(len(cols[0]))])

    @staticmethod
    def diag(values):
        n = len(values)
        return Matrix([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def col(self, j):
        return tuple(r[j] for r in self.entries)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"Matrix({[list(r) for r in self.entries]})"

    def __add__(self, other):
        self._same_shape(other)
        return Matrix([[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._same_shape(other)
        return Matrix([[a - b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.entries])

    def scale(self, c):
        c = q(c)
        return Matrix([[c * a for a in r] for r in self.entries])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionMismatch(f"{self.shape()} * {other.shape()}")
            bt = list(zip(*other.entries))
            return Matrix([[sum(a * b for a, b in zip(row, col)) for col in bt]
                           for row in self.entries])
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def apply(self, v):
        """Matrix times column vector, returned as a tuple."""
        if len(v) != self.cols:
            raise DimensionMismatch(f"{self.shape()} applied to vector of length {len(v)}")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.entries)

    def transpose(self):
        if self.rows == 0:
            return Matrix([()] * self.cols, cols=0)
        if self.cols == 0:
            return Matrix([], cols=self.rows)
        return Matrix(list(zip(*self.entries)))

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.entries for a in r)

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == (1 if i == j else 0)
            for i in range(self.rows) for j in range(self.cols))

    def is_antisymmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(self.entries[i][j] == -self.entries[j][i]
                   for i in range(self.rows) for j in range(i, self.cols))

    def hstack(self, other):
        if self.rows != other.rows:
            raise DimensionMismatch("hstack row mismatch")
        return Matrix([r1 + r2 for r1, r2 in zip(self.entries, other.entries)])

    def vstack(self, other):
        if self.cols != other.cols:
            raise DimensionMismatch("vstack col mismatch")
        return Matrix(self.entries + other.entries)

    def to_lists(self):
        return [list(r) for r in self.entries]

    def _same_shape(self, other):
        if self.shape() != other.shape():
            raise DimensionMismatch(f"{self.shape()} vs {other.shape()}")


def rref(rows):
    """Reduced row echelon form of a list of row tuples.

    Returns (rref_rows, pivot_columns) with zero rows dropped.  Pivoting takes
    the first nonzero entry scanning down from the lowest row index.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        p = m[r][c]
        if p != 1:
            m[r] = [q(Fraction(x) / p) for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [q(a - f * b) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return [tuple(q(x) for x in row) for row in m[:r]], pivots


@dataclass
class LinearSolution:
    """Outcome of solving A x = b: a particular solution plus a kernel basis."""

    consistent: bool
    particular: tuple | None
    kernel: list

    def __iter__(self):
        yield from (self.consistent, self.particular, self.kernel)


def solve_linear(A: Matrix, b) -> LinearSolution:
    """Solve A x = b exactly.

    Returns a particular solution and an independent kernel basis, or an
    inconsistent marker.  The answer is deterministic: free variables are the
    non-pivot columns of the RREF, set to zero in the particular solution.
    """
    if A.rows != len(b):
        raise DimensionMismatch(f"A has {A.rows} rows, b has length {len(b)}")
    aug = [A.row(i) + (q(b[i]),) for i in range(A.rows)]
    red, pivots = rref(aug)
    n = A.cols
    if n in pivots:
        return LinearSolution(False, None, [])
    x = [0] * n
    for r, c in enumerate(pivots):
        x[c] = red[r][n]
    ker = _kernel_from_rref([row[:n] for row in red],
                            [c for c in pivots if c < n], n)
    return LinearSolution(True, tuple(x), ker)


def _kernel_from_rref(red, pivots, n):
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for r, c in enumerate(pivots):
            v[c] = q(-red[r][f])
        basis.append(tuple(v))
    return basis


def kernel(A: Matrix):
    """Basis of {v : A v = 0}, deterministic, possibly empty."""
    red, pivots = rref(A.entries) if A.rows else ([], [])
    return _kernel_from_rref(red, pivots, A.cols)


def rank(A: Matrix) -> int:
    if A.rows == 0 or A.cols == 0:
        return 0
    return len(rref(A.entries)[0])


def invert(A: Matrix) -> Matrix:
    """Exact inverse; raises Singular when the kernel is nontrivial."""
    if A.rows != A.cols:
        raise DimensionMismatch("inverse of a non-square matrix")
    n = A.rows
    aug = [A.row(i) + tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise Singular("matrix has nontrivial kernel")
    return Matrix([row[n:] for row in red])


def column_space_equal(A: Matrix, B: Matrix) -> bool:
    """Whether two matrices (same row count) have the same column span."""
    ra = rank(A)
    rb = rank(B)
    if ra != rb:
        return False
    return rank(A.hstack(B)) == ra

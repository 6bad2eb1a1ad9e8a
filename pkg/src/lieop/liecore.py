"""Lie algebras, their modules, and the structural constructions on them.

Everything is finite dimensional over the exact rationals.  A Lie algebra is a
structure-constant tensor c[i][j] = coefficient vector of [e_i, e_j]; a module
is one action matrix per basis vector.  All validators run exactly on every
basis tuple, so an accepted object genuinely satisfies its axioms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DimensionMismatch, JacobiViolation, NotComplementary, NotIdeal,
    NotSubalgebra, RepViolation, SkewViolation,
)
from .exactla import (
    Matrix, is_zero_vec, kernel, q, rank, rref, solve_linear, vec, vec_add,
    vec_scale, vec_zero,
)


class LieAlgebra:
    """A Lie algebra given by its structure constants, validated on construction."""

    __slots__ = ("dim", "c", "basis_names", "_adjoint")

    def __init__(self, dim, bracket, basis_names=None):
        self.dim = dim
        c = tuple(tuple(vec(bracket[i][j]) for j in range(dim)) for i in range(dim))
        for i in range(dim):
            for j in range(dim):
                if len(c[i][j]) != dim:
                    raise DimensionMismatch("bracket tensor is not dim^3")
        self.c = c
        self.basis_names = tuple(basis_names) if basis_names else None
        self._adjoint = None
        self._validate()

    @staticmethod
    def from_brackets(dim, entries, basis_names=None):
        """Build from sparse {(i, j): coefficient vector} with i < j.

        The j < i values are filled in by skew symmetry.
        """
        c = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), v in entries.items():
            if not 0 <= i < j < dim:
                raise DimensionMismatch(f"bad bracket index pair ({i}, {j})")
            c[i][j] = list(v)
            c[j][i] = [-q(x) for x in v]
        return LieAlgebra(dim, c, basis_names=basis_names)

    def _validate(self):
        d = self.dim
        c = self.c
        for i in range(d):
            for j in range(i, d):
                for k in range(d):
                    if c[i][j][k] != -c[j][i][k]:
                        raise SkewViolation(i, j, k)
        for i in range(d):
            for j in range(i + 1, d):
                for k in range(j + 1, d):
                    defect = self.jacobi_defect(i, j, k)
                    if not is_zero_vec(defect):
                        raise JacobiViolation(i, j, k, defect)

    def jacobi_defect(self, i, j, k):
        """[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]."""
        t1 = self.bracket_basis_vec(i, self.c[j][k])
        t2 = self.bracket_basis_vec(j, self.c[k][i])
        t3 = self.bracket_basis_vec(k, self.c[i][j])
        return vec_add(vec_add(t1, t2), t3)

    def bracket_basis_vec(self, i, y):
        out = [0] * self.dim
        ci = self.c[i]
        for j, yj in enumerate(y):
            if yj:
                row = ci[j]
                for k, v in enumerate(row):
                    if v:
                        out[k] += yj * v
        return tuple(q(x) for x in out)

    def bracket_vec(self, x, y):
        """[x, y] for coordinate vectors x, y."""
        out = [0] * self.dim
        for i, xi in enumerate(x):
            if xi:
                ci = self.c[i]
                for j, yj in enumerate(y):
                    if yj:
                        row = ci[j]
                        for k, v in enumerate(row):
                            if v:
                                out[k] += xi * yj * v
        return tuple(q(v) for v in out)

    def bracket_tensor_equal(self, other) -> bool:
        return self.dim == other.dim and self.c == other.c

    def is_abelian(self) -> bool:
        return all(is_zero_vec(self.c[i][j]) for i in range(self.dim) for j in range(self.dim))

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim})"


def lie_algebra_new(dim, bracket, basis_names=None) -> LieAlgebra:
    return LieAlgebra(dim, bracket, basis_names=basis_names)


class Representation:
    """A Lie algebra action on a module, one matrix per basis vector."""

    __slots__ = ("algebra", "dim_m", "action", "_semidirect", "_dual", "_gcs_ctx")

    def __init__(self, algebra: LieAlgebra, dim_m, action):
        self.algebra = algebra
        self.dim_m = dim_m
        self._gcs_ctx = None
        mats = tuple(a if isinstance(a, Matrix) else Matrix(a) for a in action)
        if len(mats) != algebra.dim:
            raise DimensionMismatch("one action matrix per algebra basis vector required")
        for a in mats:
            if a.shape() != (dim_m, dim_m):
                raise DimensionMismatch("action matrix shape mismatch")
        self.action = mats
        self._semidirect = None
        self._dual = None
        self._validate()

    def _validate(self):
        g = self.algebra
        for i in range(g.dim):
            for j in range(i + 1, g.dim):
                lhs = self.rho(g.c[i][j])
                rhs = self.action[i] * self.action[j] - self.action[j] * self.action[i]
                if lhs != rhs:
                    raise RepViolation(i, j, rhs - lhs)

    def rho(self, x) -> Matrix:
        """Matrix of the action of the algebra element with coordinates x."""
        out = Matrix.zeros(self.dim_m)
        for i, xi in enumerate(x):
            if xi:
                out = out + self.action[i].scale(xi)
        return out

    def act(self, x, m):
        """x • m for coordinate vectors."""
        out = [0] * self.dim_m
        for i, xi in enumerate(x):
            if xi:
                mi = self.action[i].apply(m)
                for k, v in enumerate(mi):
                    if v:
                        out[k] += xi * v
        return tuple(q(v) for v in out)

    def act_basis(self, i, m):
        return self.action[i].apply(m)

    def __repr__(self):
        return f"Representation(dim_g={self.algebra.dim}, dim_m={self.dim_m})"


def representation_new(algebra, dim_m, action) -> Representation:
    return Representation(algebra, dim_m, action)


def adjoint(g: LieAlgebra) -> Representation:
    """The algebra acting on itself by ad_x = [x, -]."""
    if g._adjoint is None:
        mats = [Matrix.from_cols([g.c[i][j] for j in range(g.dim)]) if g.dim else Matrix([])
                for i in range(g.dim)]
        g._adjoint = Representation(g, g.dim, mats)
    return g._adjoint


def dual_rep(rep: Representation) -> Representation:
    """Dual module: <x • a, m> = -<a, x • m>, so matrices are -rho^T."""
    if rep._dual is None:
        rep._dual = Representation(
            rep.algebra, rep.dim_m, [(-a).transpose() for a in rep.action])
    return rep._dual


def coadjoint(g: LieAlgebra) -> Representation:
    return dual_rep(adjoint(g))


def trivial_rep(g: LieAlgebra, dim_m) -> Representation:
    return Representation(g, dim_m, [Matrix.zeros(dim_m) for _ in range(g.dim)])


def semidirect(rep: Representation) -> LieAlgebra:
    """Semi-direct product on g + M: [(x,m),(y,n)] = ([x,y], x•n - y•m)."""
    if rep._semidirect is not None:
        return rep._semidirect
    g = rep.algebra
    d, m = g.dim, rep.dim_m
    n = d + m
    c = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i in range(d):
        for j in range(d):
            for k, v in enumerate(g.c[i][j]):
                c[i][j][k] = v
    for i in range(d):
        for b in range(m):
            col = rep.action[i].col(b)
            for k, v in enumerate(col):
                c[i][d + b][d + k] = v
                c[d + b][i][d + k] = -v
    out = LieAlgebra(n, c)
    rep._semidirect = out
    return out


class Subspace:
    """Subspace of a coordinate space, canonicalized by an RREF row basis."""

    __slots__ = ("ambient_dim", "basis", "rref_rows", "pivots")

    def __init__(self, ambient_dim, basis):
        self.ambient_dim = ambient_dim
        self.basis = tuple(vec(v) for v in basis)
        for v in self.basis:
            if len(v) != ambient_dim:
                raise DimensionMismatch("basis vector length mismatch")
        rows, pivots = rref(self.basis) if self.basis else ([], [])
        if len(rows) != len(self.basis):
            raise DimensionMismatch("subspace basis is linearly dependent")
        self.rref_rows = tuple(rows)
        self.pivots = tuple(pivots)

    @staticmethod
    def span(ambient_dim, vectors):
        """Span of arbitrary (possibly dependent) vectors."""
        rows, _ = rref([vec(v) for v in vectors]) if vectors else ([], [])
        return Subspace(ambient_dim, rows)

    @staticmethod
    def full(ambient_dim):
        return Subspace(ambient_dim, Matrix.identity(ambient_dim).entries)

    @staticmethod
    def zero(ambient_dim):
        return Subspace(ambient_dim, [])

    def dim(self):
        return len(self.basis)

    def reduce(self, v):
        """Residual of v after eliminating pivot coordinates against the RREF basis."""
        v = list(v)
        for row, p in zip(self.rref_rows, self.pivots):
            f = v[p]
            if f:
                for k, r in enumerate(row):
                    if r:
                        v[k] -= f * r
        return tuple(q(x) for x in v)

    def contains(self, v) -> bool:
        return is_zero_vec(self.reduce(v))

    def coords(self, v):
        """Coordinates of v in the declared (not RREF) basis; None if outside."""
        if not self.basis:
            return () if is_zero_vec(v) else None
        A = Matrix.from_cols(list(self.basis))
        sol = solve_linear(A, v)
        return sol.particular if sol.consistent else None

    def matrix(self) -> Matrix:
        """Basis vectors as columns."""
        if not self.basis:
            return Matrix([()] * self.ambient_dim, cols=0)
        return Matrix.from_cols(list(self.basis))

    def __eq__(self, other):
        return (isinstance(other, Subspace)
                and self.ambient_dim == other.ambient_dim
                and self.rref_rows == other.rref_rows)

    def __repr__(self):
        return f"Subspace(ambient={self.ambient_dim}, dim={self.dim()})"


def is_subalgebra(g: LieAlgebra, W: Subspace):
    """Whether [W, W] is contained in W; on failure also returns a witness pair."""
    if W.ambient_dim != g.dim:
        raise DimensionMismatch("subspace ambient dimension mismatch")
    for a in range(W.dim()):
        for b in range(a + 1, W.dim()):
            w1, w2 = W.basis[a], W.basis[b]
            if not W.contains(g.bracket_vec(w1, w2)):
                return False, (w1, w2)
    return True, None


def is_ideal(g: LieAlgebra, W: Subspace):
    """Whether [g, W] is contained in W."""
    if W.ambient_dim != g.dim:
        raise DimensionMismatch("subspace ambient dimension mismatch")
    for i in range(g.dim):
        ei = tuple(1 if k == i else 0 for k in range(g.dim))
        for w in W.basis:
            if not W.contains(g.bracket_vec(ei, w)):
                return False, (ei, w)
    return True, None


def restrict_to_subalgebra(g: LieAlgebra, W: Subspace):
    """Lie algebra structure on a subalgebra in its RREF basis.

    Returns (algebra, basis_vectors); basis_vectors[i] is the ambient vector
    realizing the i-th basis element.
    """
    ok, witness = is_subalgebra(g, W)
    if not ok:
        raise NotSubalgebra(witness)
    basis = list(W.rref_rows)
    k = len(basis)
    sub = Subspace(g.dim, basis)
    c = [[[0] * k for _ in range(k)] for _ in range(k)]
    for a in range(k):
        for b in range(k):
            br = g.bracket_vec(basis[a], basis[b])
            coords = sub.coords(br)
            for t, v in enumerate(coords):
                c[a][b][t] = v
    return LieAlgebra(k, c), basis


@dataclass
class Quotient:
    """A quotient Lie algebra with its projection and a chosen linear section."""

    algebra: LieAlgebra
    projection: Matrix
    section: Matrix
    complement: tuple


def quotient(h: LieAlgebra, W: Subspace) -> Quotient:
    """Quotient of h by an ideal W, on the complement of W's pivot columns.

    The complement basis is deterministic: the standard basis vectors at the
    lowest indices not already pivotal for W.
    """
    ok, witness = is_ideal(h, W)
    if not ok:
        raise NotIdeal(witness)
    d = h.dim
    comp = tuple(i for i in range(d) if i not in W.pivots)
    k = len(comp)
    proj_rows = []
    for ci in comp:
        row = [0] * d
        # pi(x) reads the complement coordinates of x reduced modulo W
        for j in range(d):
            ej = tuple(1 if t == j else 0 for t in range(d))
            row[j] = W.reduce(ej)[ci]
        proj_rows.append(row)
    projection = Matrix(proj_rows) if k else Matrix([], cols=d)
    section = Matrix.from_cols([
        tuple(1 if t == ci else 0 for t in range(d)) for ci in comp]) \
        if k else Matrix([()] * d, cols=0)
    c = [[[0] * k for _ in range(k)] for _ in range(k)]
    for a in range(k):
        for b in range(k):
            br = h.bracket_vec(section.col(a), section.col(b))
            pr = projection.apply(br)
            for t, v in enumerate(pr):
                c[a][b][t] = v
    alg = LieAlgebra(k, c)
    for i in range(d):
        for j in range(i + 1, d):
            ei = tuple(1 if t == i else 0 for t in range(d))
            ej = tuple(1 if t == j else 0 for t in range(d))
            lhs = projection.apply(h.bracket_vec(ei, ej))
            rhs = alg.bracket_vec(projection.apply(ei), projection.apply(ej))
            if lhs != rhs:
                raise NotIdeal((ei, ej))
    return Quotient(alg, projection, section, comp)


def annihilator(rep: Representation, X: Subspace) -> Subspace:
    """{n in M : x • n = 0 for all x in X}."""
    if X.ambient_dim != rep.algebra.dim:
        raise DimensionMismatch("annihilator expects a subspace of the algebra")
    if X.dim() == 0 or rep.dim_m == 0:
        return Subspace.full(rep.dim_m)
    stacked = rep.rho(X.basis[0])
    for x in X.basis[1:]:
        stacked = stacked.vstack(rep.rho(x))
    return Subspace(rep.dim_m, kernel(stacked))


def intersect(W1: Subspace, W2: Subspace) -> Subspace:
    """Exact intersection, computed from the kernel of [B1 | -B2]."""
    if W1.ambient_dim != W2.ambient_dim:
        raise DimensionMismatch("intersection of subspaces of different spaces")
    if W1.dim() == 0 or W2.dim() == 0:
        return Subspace.zero(W1.ambient_dim)
    A = W1.matrix().hstack((-W2.matrix()))
    vecs = []
    for kv in kernel(A):
        coeffs = kv[:W1.dim()]
        v = vec_zero(W1.ambient_dim)
        for cfc, bvec in zip(coeffs, W1.basis):
            if cfc:
                v = vec_add(v, vec_scale(cfc, bvec))
        vecs.append(v)
    return Subspace.span(W1.ambient_dim, vecs)


ROLE_DIMS = {"module", "algebra", "dual-module", "dual-algebra"}


@dataclass(frozen=True)
class LinMap:
    """A matrix with declared domain/codomain roles relative to a module."""

    matrix: Matrix
    source_role: str = "module"
    target_role: str = "algebra"

    def __post_init__(self):
        if self.source_role not in ROLE_DIMS or self.target_role not in ROLE_DIMS:
            raise ValueError(f"unknown role in {self.source_role} -> {self.target_role}")

    def check_roles(self, rep: Representation):
        dims = {"module": rep.dim_m, "algebra": rep.algebra.dim,
                "dual-module": rep.dim_m, "dual-algebra": rep.algebra.dim}
        want = (dims[self.target_role], dims[self.source_role])
        if self.matrix.shape() != want:
            raise DimensionMismatch(
                f"LinMap {self.source_role} -> {self.target_role} needs shape {want}, "
                f"got {self.matrix.shape()}")
        return self


def as_matrix(x) -> Matrix:
    return x.matrix if isinstance(x, LinMap) else x


def graph_subspace(T: Matrix, offset_first=True) -> Subspace:
    """Graph {(T m, m)} inside the (target + source)-dimensional space."""
    rows, cols = T.shape()
    basis = []
    for b in range(cols):
        col = T.col(b)
        unit = tuple(1 if t == b else 0 for t in range(cols))
        basis.append(col + unit if offset_first else unit + col)
    return Subspace(rows + cols, basis)


def direct_sum_map(A: Matrix, B: Matrix) -> Matrix:
    """Block diagonal map A (+) B."""
    n1, m1 = A.shape()
    n2, m2 = B.shape()
    rows = []
    for i in range(n1):
        rows.append(A.row(i) + vec_zero(m2))
    for i in range(n2):
        rows.append(vec_zero(m1) + B.row(i))
    return Matrix(rows, cols=m1 + m2)


def check_complementary(total_dim, A: Subspace, B: Subspace):
    if A.ambient_dim != total_dim or B.ambient_dim != total_dim:
        raise DimensionMismatch("subspace ambient mismatch")
    if A.dim() + B.dim() != total_dim:
        raise NotComplementary("dimensions do not add up to the total space")
    M = Matrix(list(A.basis) + list(B.basis))
    if rank(M) != total_dim:
        raise NotComplementary("subspaces are not independent")

"""Alternating cochains, the Chevalley-Eilenberg differential, and the graded
brackets (shuffle bracket on self-valued cochains, derived bracket) that drive
the Maurer-Cartan checks.

A degree-n cochain stores one target vector per strictly increasing basis
index tuple; evaluation elsewhere is the alternating extension.
"""

from __future__ import annotations

from itertools import combinations

from .errors import DimensionMismatch, LieOpError
from .exactla import Matrix, is_zero_vec, kernel, q, vec, vec_add, vec_scale, vec_zero
from .liecore import LieAlgebra, Representation


def _perm_sign(seq):
    inv = 0
    n = len(seq)
    for a in range(n):
        for b in range(a + 1, n):
            if seq[a] > seq[b]:
                inv += 1
    return -1 if inv % 2 else 1


def _normalize(idxs):
    """(sign, sorted tuple) of an index tuple, or (0, None) on repeats."""
    if len(set(idxs)) != len(idxs):
        return 0, None
    order = tuple(sorted(idxs))
    return _perm_sign(idxs), order


class Cochain:
    """Alternating multilinear map given by values on increasing index tuples."""

    __slots__ = ("degree", "source_dim", "target_dim", "values")

    def __init__(self, degree, source_dim, target_dim, values=None):
        self.degree = degree
        self.source_dim = source_dim
        self.target_dim = target_dim
        vals = {}
        for idx, v in (values or {}).items():
            idx = tuple(idx)
            if len(idx) != degree or any(not 0 <= i < source_dim for i in idx):
                raise DimensionMismatch(f"bad index tuple {idx} for degree {degree}")
            if tuple(sorted(idx)) != idx:
                raise DimensionMismatch(f"index tuple {idx} is not strictly increasing")
            v = vec(v)
            if len(v) != target_dim:
                raise DimensionMismatch("cochain value length mismatch")
            if not is_zero_vec(v):
                vals[idx] = v
        self.values = vals

    @staticmethod
    def zero(degree, source_dim, target_dim):
        return Cochain(degree, source_dim, target_dim)

    @staticmethod
    def from_linmap(M: Matrix):
        """A linear map as a degree-1 cochain."""
        return Cochain(1, M.cols, M.rows,
                       {(j,): M.col(j) for j in range(M.cols)})

    def as_matrix(self) -> Matrix:
        if self.degree != 1:
            raise DimensionMismatch("only degree-1 cochains are matrices")
        return Matrix.from_cols([self.value((j,)) for j in range(self.source_dim)]) \
            if self.source_dim else Matrix([], cols=0)

    def value(self, idx):
        return self.values.get(tuple(idx), vec_zero(self.target_dim))

    def eval_indices(self, idxs):
        sign, order = _normalize(tuple(idxs))
        if sign == 0:
            return vec_zero(self.target_dim)
        val = self.value(order)
        return val if sign == 1 else vec_scale(-1, val)

    def eval_first_vec(self, x, rest):
        """Evaluate on (x, e_{rest[0]}, ...) with a vector in the first slot."""
        out = vec_zero(self.target_dim)
        for k, xk in enumerate(x):
            if xk:
                out = vec_add(out, vec_scale(xk, self.eval_indices((k,) + tuple(rest))))
        return out

    def eval_vectors(self, vectors):
        """Full multilinear alternating evaluation on coordinate vectors."""
        n = self.degree
        if len(vectors) != n:
            raise DimensionMismatch("wrong number of arguments")
        if n == 0:
            return self.value(())
        out = vec_zero(self.target_dim)
        for idx, val in self.values.items():
            coeff = _det([[vectors[c][r] for c in range(n)] for r in idx])
            if coeff:
                out = vec_add(out, vec_scale(coeff, val))
        return out

    def add(self, other):
        self._compat(other)
        keys = set(self.values) | set(other.values)
        return Cochain(self.degree, self.source_dim, self.target_dim,
                       {k: vec_add(self.value(k), other.value(k)) for k in keys})

    def scale(self, c):
        return Cochain(self.degree, self.source_dim, self.target_dim,
                       {k: vec_scale(c, v) for k, v in self.values.items()})

    def sub(self, other):
        return self.add(other.scale(-1))

    def is_zero(self) -> bool:
        return not self.values

    def __eq__(self, other):
        return (isinstance(other, Cochain)
                and (self.degree, self.source_dim, self.target_dim)
                == (other.degree, other.source_dim, other.target_dim)
                and self.values == other.values)

    def _compat(self, other):
        if (self.degree, self.source_dim, self.target_dim) != \
                (other.degree, other.source_dim, other.target_dim):
            raise DimensionMismatch("cochain shape mismatch")

    def __repr__(self):
        return (f"Cochain(degree={self.degree}, source={self.source_dim}, "
                f"target={self.target_dim}, nonzero={len(self.values)})")


def _det(rows):
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    if n == 2:
        return q(rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0])
    total = 0
    for c in range(n):
        a = rows[0][c]
        if a:
            minor = [r[:c] + r[c + 1:] for r in rows[1:]]
            total += (a if c % 2 == 0 else -a) * _det(minor)
    return q(total)


def ce_differential(rep: Representation, f: Cochain) -> Cochain:
    """(d f)(x_1..x_{n+1}) = sum_i (-1)^{i+1} x_i . f(..x_i^..)
    + sum_{i<j} (-1)^{i+j} f([x_i,x_j], ..x_i^..x_j^..)."""
    g = rep.algebra
    if f.source_dim != g.dim or f.target_dim != rep.dim_m:
        raise DimensionMismatch("cochain does not match the representation")
    n = f.degree
    out = {}
    if n + 1 > g.dim:
        return Cochain.zero(n + 1, g.dim, rep.dim_m)
    for idx in combinations(range(g.dim), n + 1):
        total = vec_zero(rep.dim_m)
        for a in range(n + 1):
            rest = idx[:a] + idx[a + 1:]
            val = f.value(rest)
            if not is_zero_vec(val):
                term = rep.act_basis(idx[a], val)
                total = vec_add(total, term if a % 2 == 0 else vec_scale(-1, term))
        for a in range(n + 1):
            for b in range(a + 1, n + 1):
                br = g.c[idx[a]][idx[b]]
                if is_zero_vec(br):
                    continue
                rest = tuple(x for t, x in enumerate(idx) if t != a and t != b)
                term = f.eval_first_vec(br, rest)
                # (-1)^{i+j} for 1-based i, j: even a+b in 0-based positions
                total = vec_add(total, term if (a + b) % 2 == 0 else vec_scale(-1, term))
        if not is_zero_vec(total):
            out[idx] = total
    return Cochain(n + 1, g.dim, rep.dim_m, out)


def is_cocycle(rep: Representation, f: Cochain):
    d = ce_differential(rep, f)
    return d.is_zero(), d


def one_cocycle_basis(rep: Representation):
    """Basis of the space of 1-cocycles g -> M, as matrices."""
    g = rep.algebra
    d, m = g.dim, rep.dim_m
    nvar = m * d
    rows = []
    for i in range(d):
        for j in range(i + 1, d):
            for t in range(m):
                row = [0] * nvar
                for r in range(m):
                    row[r * d + j] += rep.action[i][t, r]
                    row[r * d + i] -= rep.action[j][t, r]
                for cidx, coeff in enumerate(g.c[i][j]):
                    if coeff:
                        row[t * d + cidx] -= coeff
                rows.append(row)
    if not rows:
        basis = [tuple(1 if t == s else 0 for t in range(nvar)) for s in range(nvar)]
    else:
        basis = kernel(Matrix(rows))
    out = []
    for v in basis:
        out.append(Matrix([[v[r * d + c] for c in range(d)] for r in range(m)]))
    return out


def _self_valued(P: Cochain):
    if P.source_dim != P.target_dim:
        raise DimensionMismatch("shuffle bracket needs self-valued cochains")
    if P.degree < 1:
        raise DimensionMismatch("shuffle bracket operands live in degrees >= 1")


def circle_product(P: Cochain, Q: Cochain) -> Cochain:
    """P o Q over (q+1, p)-shuffles with the shuffle sign."""
    _self_valued(P)
    _self_valued(Q)
    if P.source_dim != Q.source_dim:
        raise DimensionMismatch("operands live on different spaces")
    d = P.source_dim
    p, qdeg = P.degree - 1, Q.degree - 1
    n = p + qdeg + 1
    out = {}
    if n > d:
        return Cochain.zero(n, d, d)
    positions = tuple(range(n))
    for idx in combinations(range(d), n):
        total = vec_zero(d)
        for first in combinations(positions, qdeg + 1):
            restpos = tuple(t for t in positions if t not in first)
            sign = _perm_sign(first + restpos)
            inner = Q.value(tuple(idx[t] for t in first))
            if is_zero_vec(inner):
                continue
            term = P.eval_first_vec(inner, tuple(idx[t] for t in restpos))
            if not is_zero_vec(term):
                total = vec_add(total, vec_scale(sign, term))
        if not is_zero_vec(total):
            out[idx] = total
    return Cochain(n, d, d, out)


def nr_bracket(P: Cochain, Q: Cochain) -> Cochain:
    """{P, Q} = P o Q - (-1)^{pq} Q o P on self-valued cochains."""
    p, qdeg = P.degree - 1, Q.degree - 1
    pq = circle_product(P, Q)
    qp = circle_product(Q, P)
    return pq.sub(qp) if (p * qdeg) % 2 == 0 else pq.add(qp)


def bracket_cochain(g: LieAlgebra) -> Cochain:
    """The Lie bracket of g as a degree-2 self-valued cochain."""
    return Cochain(2, g.dim, g.dim, {
        (i, j): g.c[i][j]
        for i in range(g.dim) for j in range(i + 1, g.dim)})


def lie_tensor_from_cochain(mu: Cochain):
    """Structure constants from a degree-2 self-valued cochain (skew completion)."""
    d = mu.source_dim
    c = [[[0] * d for _ in range(d)] for _ in range(d)]
    for i in range(d):
        for j in range(i + 1, d):
            v = mu.value((i, j))
            for k, x in enumerate(v):
                c[i][j][k] = x
                c[j][i][k] = -x
    return c


def lift_to_total(P: Cochain, dim_a, dim_b) -> Cochain:
    """Treat Hom(wedge^p a, b) as a self-valued cochain on a + b.

    The lift vanishes as soon as any argument lies in b, and its values sit in
    the b block.
    """
    if P.source_dim != dim_a or P.target_dim != dim_b:
        raise DimensionMismatch("cochain does not match the splitting")
    d = dim_a + dim_b
    vals = {idx: vec_zero(dim_a) + v for idx, v in P.values.items()}
    return Cochain(P.degree, d, d, vals)


def restrict_to_blocks(R: Cochain, dim_a, dim_b) -> Cochain:
    """Inverse of lift_to_total on results of derived brackets."""
    out = {}
    for idx in combinations(range(dim_a), R.degree):
        v = R.value(idx)
        if any(x != 0 for x in v[:dim_a]):
            raise LieOpError("derived bracket value escapes the b block")
        if not is_zero_vec(v[dim_a:]):
            out[idx] = v[dim_a:]
    return Cochain(R.degree, dim_a, dim_b, out)


def derived_bracket(mu2: Cochain, P: Cochain, Q: Cochain, dim_a, dim_b) -> Cochain:
    """[P, Q]_{mu2} = (-1)^{p-1} {{mu2, P}, Q}, restricted back to Hom(wedge a, b).

    mu2 is the multiplication cochain of the semi-direct product of b acting on
    a: mu2((x,u),(y,v)) = (u .2 y - v .2 x, [u, v]).
    """
    if mu2.source_dim != dim_a + dim_b or mu2.degree != 2:
        raise DimensionMismatch("mu2 must be a degree-2 self-valued cochain on a + b")
    for f in (P, Q):
        if any(max(idx, default=-1) >= dim_a for idx in f.values):
            raise LieOpError("malformed lift: operand does not vanish on b arguments")
    Ph = lift_to_total(P, dim_a, dim_b)
    Qh = lift_to_total(Q, dim_a, dim_b)
    inner = nr_bracket(nr_bracket(mu2, Ph), Qh)
    if (P.degree - 1) % 2 == 1:
        inner = inner.scale(-1)
    return restrict_to_blocks(inner, dim_a, dim_b)


def build_mu2(dim_a, dim_b, b_algebra: LieAlgebra, action2: Representation) -> Cochain:
    """Multiplication cochain of b acting on a (bracket of b plus the action)."""
    if b_algebra.dim != dim_b or action2.algebra.dim != dim_b:
        raise DimensionMismatch("mu2 pieces do not match the splitting")
    if action2.dim_m != dim_a:
        raise DimensionMismatch("action2 must act on the a block")
    d = dim_a + dim_b
    vals = {}
    for i in range(dim_a):
        for b in range(dim_b):
            col = action2.action[b].col(i)
            v = vec_scale(-1, col) + vec_zero(dim_b)
            if not is_zero_vec(v):
                vals[(i, dim_a + b)] = v
    for s in range(dim_b):
        for t in range(s + 1, dim_b):
            br = b_algebra.c[s][t]
            v = vec_zero(dim_a) + br
            if not is_zero_vec(v):
                vals[(dim_a + s, dim_a + t)] = v
    return Cochain(2, d, d, vals)

"""Generalized complex structures on modules and on Lie algebras, complex
structures, and the real-form checks for holomorphic r-matrices and
holomorphic O-operators.

The two GCS checkers (block map on the semi-direct product vs the ten
component identities) are an oracle pair and are written to short-circuit:
the exhaustive agreement sweeps call them tens of millions of times.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DimensionMismatch, InvalidGCS, NotAntisymmetric, NotComplexPair,
    NotComplexStructure, NotOOperator, OracleDisagreement,
)
from .exactla import Matrix, invert
from .liecore import Representation, LieAlgebra, as_matrix, coadjoint, direct_sum_map, semidirect
from .onstruct import is_on_structure, is_pn_structure
from .ooper import Bivector, is_o_operator, o_residual, r_sharp


def _rows(x, shape=None):
    if isinstance(x, Matrix):
        rows = x.entries
    elif type(x) is tuple:
        rows = x
    else:
        rows = tuple(tuple(v for v in row) for row in x)
    if shape is not None and (len(rows), len(rows[0]) if rows else 0) != shape:
        raise DimensionMismatch(f"component has shape {(len(rows), len(rows[0]) if rows else 0)}, wanted {shape}")
    return rows


def _gcs_ctx(rep: Representation):
    cache = getattr(rep, "_gcs_ctx", None)
    if cache is None:
        d, m = rep.algebra.dim, rep.dim_m
        cache = (d, m, semidirect(rep).c, rep.algebra.c,
                 tuple(a.entries for a in rep.action))
        rep._gcs_ctx = cache
    return cache


def gcs_check_direct(rep: Representation, N, T, sigma, S, report=False):
    """J = [[N, T], [sigma, -S]] is almost complex and integrable on g + M.

    With report=False the check stops at the first nonzero residual.
    """
    d, m, c, _, _ = _gcs_ctx(rep)
    n = d + m
    Nr = _rows(N, (d, d))
    Tr = _rows(T, (d, m))
    Gr = _rows(sigma, (m, d))
    Sr = _rows(S, (m, m))
    J = [Nr[i] + Tr[i] for i in range(d)]
    J += [Gr[i] + tuple(-v for v in Sr[i]) for i in range(m)]
    defects = {"almost_complex": [], "integrability": []}
    rng_n = range(n)
    for i in rng_n:
        ji = J[i]
        for j in rng_n:
            s = 1 if i == j else 0
            for k in rng_n:
                a = ji[k]
                if a:
                    s += a * J[k][j]
            if s:
                if not report:
                    return False
                defects["almost_complex"].append((i, j, s))
    cols = list(zip(*J))
    for u in range(n):
        ju = cols[u]
        for v in range(u + 1, n):
            jv = cols[v]
            lhs = [0] * n
            for a in range(n):
                xa = ju[a]
                if xa:
                    ca = c[a]
                    for b in range(n):
                        yb = jv[b]
                        if yb:
                            row = ca[b]
                            for k in range(n):
                                if row[k]:
                                    lhs[k] += xa * yb * row[k]
            for k in range(n):
                lhs[k] -= c[u][v][k]
            inner = [0] * n
            for a in range(n):
                xa = ju[a]
                if xa:
                    row = c[a][v]
                    for k in range(n):
                        if row[k]:
                            inner[k] += xa * row[k]
            for b in range(n):
                yb = jv[b]
                if yb:
                    row = c[u][b]
                    for k in range(n):
                        if row[k]:
                            inner[k] += yb * row[k]
            bad = False
            for i in range(n):
                s = lhs[i] - sum(J[i][k] * inner[k] for k in range(n))
                if s:
                    bad = True
                    if not report:
                        return False
            if bad and report:
                defects["integrability"].append((u, v))
    ok = not defects["almost_complex"] and not defects["integrability"]
    return (ok, defects) if report else ok


def gcs_check_components(rep: Representation, N, T, sigma, S, report=False):
    """The ten structure-component identities, numbered 52..61.

    Must give the same verdict as gcs_check_direct on every input.
    """
    d, m, _, gc, act = _gcs_ctx(rep)
    Nr = _rows(N, (d, d))
    Tr = _rows(T, (d, m))
    Gr = _rows(sigma, (m, d))
    Sr = _rows(S, (m, m))
    failed = []

    def done():
        return (not failed, failed) if report else not failed

    rng_d = range(d)
    rng_m = range(m)
    # (53) N^2 + T sigma = -id: cheapest rejector, row-major
    for i in rng_d:
        ni, ti = Nr[i], Tr[i]
        for j in rng_d:
            s = 1 if i == j else 0
            for k in rng_d:
                a = ni[k]
                if a:
                    s += a * Nr[k][j]
            for k in rng_m:
                a = ti[k]
                if a:
                    s += a * Gr[k][j]
            if s:
                failed.append(53)
                if not report:
                    return False
                break
        if failed:
            break
    # (52) N T = T S
    for i in rng_d:
        ni, ti = Nr[i], Tr[i]
        for j in rng_m:
            s = 0
            for k in rng_d:
                a = ni[k]
                if a:
                    s += a * Tr[k][j]
            for k in rng_m:
                a = ti[k]
                if a:
                    s -= a * Sr[k][j]
            if s:
                failed.append(52)
                if not report:
                    return False
                break
        if 52 in failed:
            break
    # (55) S^2 + sigma T = -id
    for i in rng_m:
        si, gi = Sr[i], Gr[i]
        for j in rng_m:
            s = 1 if i == j else 0
            for k in rng_m:
                a = si[k]
                if a:
                    s += a * Sr[k][j]
            for k in rng_d:
                a = gi[k]
                if a:
                    s += a * Tr[k][j]
            if s:
                failed.append(55)
                if not report:
                    return False
                break
        if 55 in failed:
            break
    # (54) S sigma = sigma N
    for i in rng_m:
        si, gi = Sr[i], Gr[i]
        for j in rng_d:
            s = 0
            for k in rng_m:
                a = si[k]
                if a:
                    s += a * Gr[k][j]
            for k in rng_d:
                a = gi[k]
                if a:
                    s -= a * Nr[k][j]
            if s:
                failed.append(54)
                if not report:
                    return False
                break
        if 54 in failed:
            break

    def bracket(x, y):
        out = [0] * d
        for a in rng_d:
            xa = x[a]
            if xa:
                ca = gc[a]
                for b in rng_d:
                    yb = y[b]
                    if yb:
                        row = ca[b]
                        for k in rng_d:
                            if row[k]:
                                out[k] += xa * yb * row[k]
        return out

    def action(x, mm):
        out = [0] * m
        for a in rng_d:
            xa = x[a]
            if xa:
                rows = act[a]
                for r in rng_m:
                    s = sum(rows[r][t] * mm[t] for t in rng_m)
                    if s:
                        out[r] += xa * s
        return out

    def mat_vec(rows, v):
        return [sum(row[t] * v[t] for t in range(len(v))) for row in rows]

    ncols = list(zip(*Nr))
    tcols = list(zip(*Tr))
    gcols = list(zip(*Gr))
    scols = list(zip(*Sr))

    units_m = [tuple(1 if t == b else 0 for t in range(m)) for b in range(m)]
    units_d = [tuple(1 if t == a else 0 for t in range(d)) for a in range(d)]

    def mbracket(i, j):
        # [m_i, m_j]^T = T(m_i) . m_j - T(m_j) . m_i
        return [a - b for a, b in zip(action(tcols[i], units_m[j]),
                                      action(tcols[j], units_m[i]))]

    # (56) T([m,n]^T) = [Tm, Tn]; (57) S([m,n]^T) = Tm.Sn - Tn.Sm
    for i in range(m):
        for j in range(i + 1, m):
            mb = mbracket(i, j)
            if mat_vec(Tr, mb) != bracket(tcols[i], tcols[j]):
                if 56 not in failed:
                    failed.append(56)
                if not report:
                    return False
            rhs = [a - b for a, b in zip(action(tcols[i], scols[j]),
                                         action(tcols[j], scols[i]))]
            if mat_vec(Sr, mb) != rhs:
                if 57 not in failed:
                    failed.append(57)
                if not report:
                    return False
    # (58), (59): one algebra and one module argument
    for a in range(d):
        nx = ncols[a]
        ex = units_d[a]
        for b in range(m):
            tm = tcols[b]
            em = units_m[b]
            inner = [p - q for p, q in zip(action(nx, em), action(ex, scols[b]))]
            lhs58 = [p - q for p, q in zip(bracket(nx, tm),
                                           mat_vec(Nr, bracket(ex, tm)))]
            if lhs58 != mat_vec(Tr, inner):
                if 58 not in failed:
                    failed.append(58)
                if not report:
                    return False
            lhs59 = [p - q for p, q in zip(mat_vec(Gr, bracket(tm, ex)),
                                           action(tm, gcols[a]))]
            rhs59 = [p + q - r for p, q, r in zip(
                action(ex, em), action(nx, scols[b]), mat_vec(Sr, inner))]
            if lhs59 != rhs59:
                if 59 not in failed:
                    failed.append(59)
                if not report:
                    return False
    # (60), (61): two algebra arguments
    for a in range(d):
        for b in range(a + 1, d):
            nx, ny = ncols[a], ncols[b]
            ex, ey = units_d[a], units_d[b]
            mixed = [p + q for p, q in zip(bracket(nx, ey), bracket(ex, ny))]
            sig_skew = [p - q for p, q in zip(action(ex, gcols[b]),
                                              action(ey, gcols[a]))]
            lhs60 = [p - q - r for p, q, r in zip(
                bracket(nx, ny), gc[a][b], mat_vec(Nr, mixed))]
            if lhs60 != mat_vec(Tr, sig_skew):
                if 60 not in failed:
                    failed.append(60)
                if not report:
                    return False
            lhs61 = [p - q - r for p, q, r in zip(
                action(nx, gcols[b]), action(ny, gcols[a]), mat_vec(Gr, mixed))]
            if lhs61 != [-x for x in mat_vec(Sr, sig_skew)]:
                if 61 not in failed:
                    failed.append(61)
                if not report:
                    return False
    return done()


def gcs_oracle(rep: Representation, N, T, sigma, S) -> bool:
    """Both GCS checks; raises if they ever disagree."""
    direct = gcs_check_direct(rep, N, T, sigma, S)
    comps = gcs_check_components(rep, N, T, sigma, S)
    if direct != comps:
        raise OracleDisagreement("gcs characterization",
                                 f"direct={direct} components={comps}")
    return direct


@dataclass(frozen=True)
class GCSModule:
    """A validated generalized complex structure on a module."""

    rep: Representation
    N: Matrix
    T: Matrix
    sigma: Matrix
    S: Matrix

    def __post_init__(self):
        if not gcs_check_direct(self.rep, self.N, self.T, self.sigma, self.S):
            raise InvalidGCS("block map fails almost-complexity or integrability")


def opposite_gcs(j: GCSModule) -> GCSModule:
    """(N, -T, -sigma, S): flips the off-diagonal blocks."""
    return GCSModule(j.rep, j.N, -j.T, -j.sigma, j.S)


def gcs_from_invertible_o(rep: Representation, T) -> GCSModule:
    """J = (0, T; -T^{-1}, 0) for an invertible O-operator."""
    T = as_matrix(T)
    if not is_o_operator(rep, T):
        raise NotOOperator(o_residual(rep, T))
    tinv = invert(T)
    d, m = rep.algebra.dim, rep.dim_m
    return GCSModule(rep, Matrix.zeros(d), T, -tinv, Matrix.zeros(m))


def is_complex_structure(g: LieAlgebra, I) -> bool:
    """I^2 = -id and [Ix, Iy] - [x, y] - I([Ix, y] + [x, Iy]) = 0."""
    I = as_matrix(I)
    if I.shape() != (g.dim, g.dim):
        raise DimensionMismatch("complex structure must be an endomorphism")
    if not ((I * I) + Matrix.identity(g.dim)).is_zero():
        return False
    for i in range(g.dim):
        ii = I.col(i)
        ei = tuple(1 if k == i else 0 for k in range(g.dim))
        for j in range(i + 1, g.dim):
            ij = I.col(j)
            ej = tuple(1 if k == j else 0 for k in range(g.dim))
            lhs = g.bracket_vec(ii, ij)
            mixed = tuple(a + b for a, b in zip(g.bracket_vec(ii, ej),
                                                g.bracket_vec(ei, ij)))
            rhs = tuple(a + b for a, b in zip(g.c[i][j], I.apply(mixed)))
            if lhs != rhs:
                return False
    return True


def module_complex_defect(rep: Representation, I: Matrix, IM: Matrix):
    """First failure of I(x).I_M(m) - x.m - I_M(I(x).m + x.I_M(m)) = 0."""
    g = rep.algebra
    for i in range(g.dim):
        ii = I.col(i)
        ei = tuple(1 if k == i else 0 for k in range(g.dim))
        for b in range(rep.dim_m):
            em = tuple(1 if k == b else 0 for k in range(rep.dim_m))
            lhs = rep.act(ii, IM.col(b))
            mixed = tuple(a + b2 for a, b2 in zip(rep.act(ii, em),
                                                  rep.act(ei, IM.col(b))))
            rhs = tuple(a + b2 for a, b2 in zip(rep.act(ei, em), IM.apply(mixed)))
            if lhs != rhs:
                return (i, b)
    return None


def is_module_complex_pair(rep: Representation, I, IM) -> bool:
    """(I, I_M) is a complex structure on the module; oracle-checked against
    I + I_M on the semi-direct product."""
    I, IM = as_matrix(I), as_matrix(IM)
    direct = (is_complex_structure(rep.algebra, I)
              and ((IM * IM) + Matrix.identity(rep.dim_m)).is_zero()
              and module_complex_defect(rep, I, IM) is None)
    oracle = is_complex_structure(semidirect(rep), direct_sum_map(I, IM))
    if direct != oracle:
        raise OracleDisagreement("module complex pair",
                                 f"direct={direct} semidirect={oracle}")
    return direct


def gcs_from_complex(rep: Representation, I, IM) -> GCSModule:
    """J = (I, 0; 0, I_M), i.e. S = -I_M."""
    I, IM = as_matrix(I), as_matrix(IM)
    if not is_module_complex_pair(rep, I, IM):
        raise NotComplexPair("input pair is not a module complex structure")
    d, m = rep.algebra.dim, rep.dim_m
    return GCSModule(rep, I, Matrix.zeros(d, m), Matrix.zeros(m, d), -IM)


def _pairing(u, v, d):
    """<(x, a), (y, b)> = (a(y) + b(x)) / 2 on g + g*; doubled to stay integral."""
    return sum(u[d + i] * v[i] for i in range(d)) + sum(v[d + i] * u[i] for i in range(d))


def gcs_lie_check(g: LieAlgebra, N, r: Bivector, sigma2) -> bool:
    """Generalized complex structure (N, r, sigma) on a Lie algebra.

    The verdict is delegated to the coadjoint-module block check; pairing
    orthogonality is re-verified independently and must agree.
    """
    N = as_matrix(N)
    if isinstance(sigma2, Bivector):
        sig = Matrix(sigma2.m)
    else:
        sig = as_matrix(sigma2)
        if not sig.is_antisymmetric():
            raise NotAntisymmetric("sigma must be an antisymmetric 2-form")
    if r.dim != g.dim or sig.shape() != (g.dim, g.dim):
        raise DimensionMismatch("component dimensions do not match the algebra")
    sharp = r_sharp(r)
    flat = sig.transpose()
    co = coadjoint(g)
    verdict = gcs_check_direct(co, N, sharp, flat, N.transpose())
    d = g.dim
    rows = [N.row(i) + sharp.row(i) for i in range(d)]
    rows += [flat.row(i) + tuple(-v for v in N.transpose().row(i)) for i in range(d)]
    J = Matrix(rows, cols=2 * d)
    orthogonal = True
    for u in range(2 * d):
        ju = J.col(u)
        eu = tuple(1 if k == u else 0 for k in range(2 * d))
        for v in range(u, 2 * d):
            ev = tuple(1 if k == v else 0 for k in range(2 * d))
            if _pairing(ju, J.col(v), d) != _pairing(eu, ev, d):
                orthogonal = False
                break
        if not orthogonal:
            break
    if verdict and not orthogonal:
        raise OracleDisagreement("gcs on lie algebra",
                                 "block form passed but breaks the pairing")
    return verdict and orthogonal


def is_holomorphic_o(rep: Representation, J, JM, TR, TI) -> bool:
    """(T_I, J, J_M) an ON-structure with T_R = T_I J_M."""
    J, JM, TR, TI = as_matrix(J), as_matrix(JM), as_matrix(TR), as_matrix(TI)
    if not is_module_complex_pair(rep, J, JM):
        raise NotComplexPair("the pair (J, J_M) is not a module complex structure")
    ok = is_on_structure(rep, TI, J, JM)[0] and TR == TI * JM
    if ok:
        if TR != J * TI:
            raise OracleDisagreement("holomorphic o-operator", "T_R != J T_I")
        if not (is_o_operator(rep, TR) and is_o_operator(rep, TI)):
            raise OracleDisagreement("holomorphic o-operator",
                                     "components fail the O-identity")
    return ok


def is_holomorphic_r(g: LieAlgebra, J, rr: Bivector, ri: Bivector) -> bool:
    """PN-structure route vs generalized-complex route; both must agree."""
    J = as_matrix(J)
    if not is_complex_structure(g, J):
        raise NotComplexStructure("J is not a complex structure")
    if rr.dim != g.dim or ri.dim != g.dim:
        raise DimensionMismatch("bivector dimensions do not match the algebra")
    sharp_identity = (r_sharp(rr) == r_sharp(ri) * J.transpose())
    via_pn = is_pn_structure(g, ri, J) and sharp_identity
    zero_sigma = Matrix.zeros(g.dim)
    via_gcs = gcs_lie_check(g, J, ri, zero_sigma) and sharp_identity
    if via_pn != via_gcs:
        raise OracleDisagreement("holomorphic r-matrix",
                                 f"pn={via_pn} gcs={via_gcs}")
    return via_pn

"""Twilled Lie algebras (complementary pairs of subalgebras), the twilled
algebra attached to an O-operator, and (strong) Maurer-Cartan solutions.

Maurer-Cartan residuals are always computed twice: once from the explicit
bilinear formula and once through the Chevalley-Eilenberg differential and the
derived bracket.  The two grids must agree entry for entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .cohomology import Cochain, build_mu2, ce_differential, derived_bracket, one_cocycle_basis
from .errors import (
    DimensionMismatch, NotOOperator, NotStrongMC, NotSubalgebra,
    OracleDisagreement,
)
from .exactla import Matrix, invert, is_zero_vec, vec_add, vec_scale, vec_sub
from .liecore import (
    LieAlgebra, Representation, Subspace, as_matrix, check_complementary,
)
from .onstruct import ONStructure, is_on_structure
from .ooper import ind_bracket_vec, induced_lie, is_o_operator, o_residual


def _unit(n, i):
    return tuple(1 if k == i else 0 for k in range(n))


@dataclass
class TwilledLieAlgebra:
    """A Lie algebra with a chosen splitting into two subalgebras, in block
    coordinates (a first, b second), together with the two mutual actions."""

    total: LieAlgebra
    dim_a: int
    dim_b: int
    a_algebra: LieAlgebra
    b_algebra: LieAlgebra
    action1: Representation   # a acting on b
    action2: Representation   # b acting on a


def _from_block_total(total: LieAlgebra, da: int, db: int) -> TwilledLieAlgebra:
    """Split a block-coordinate Lie algebra on a + b and validate all parts."""
    d = total.dim
    if da + db != d:
        raise DimensionMismatch("block sizes do not add up")
    for i in range(da):
        for j in range(da):
            if any(x != 0 for x in total.c[i][j][da:]):
                raise NotSubalgebra(witness=(i, j), which="a")
    for i in range(db):
        for j in range(db):
            if any(x != 0 for x in total.c[da + i][da + j][:da]):
                raise NotSubalgebra(witness=(i, j), which="b")
    a_alg = LieAlgebra(da, [[list(total.c[i][j][:da]) for j in range(da)]
                            for i in range(da)])
    b_alg = LieAlgebra(db, [[list(total.c[da + i][da + j][da:]) for j in range(db)]
                            for i in range(db)])
    # [x, u] = x .1 u - u .2 x for x in a, u in b
    act1 = []
    for i in range(da):
        act1.append(Matrix.from_cols(
            [total.c[i][da + u][da:] for u in range(db)]) if db else Matrix([]))
    act2 = []
    for u in range(db):
        act2.append(Matrix.from_cols(
            [tuple(-x for x in total.c[i][da + u][:da]) for i in range(da)])
            if da else Matrix([]))
    action1 = Representation(a_alg, db, act1)
    action2 = Representation(b_alg, da, act2)
    return TwilledLieAlgebra(total, da, db, a_alg, b_alg, action1, action2)


def twilled_new(total: LieAlgebra, a: Subspace, b: Subspace) -> TwilledLieAlgebra:
    """Split a Lie algebra along two complementary subalgebras."""
    check_complementary(total.dim, a, b)
    basis = list(a.rref_rows) + list(b.rref_rows)
    P = Matrix.from_cols(basis)
    Pinv = invert(P)
    d = total.dim
    c = [[None] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            c[i][j] = list(Pinv.apply(total.bracket_vec(basis[i], basis[j])))
    return _from_block_total(LieAlgebra(d, c), a.dim(), b.dim())


def swap(tw: TwilledLieAlgebra) -> TwilledLieAlgebra:
    """The same twilled algebra with the two blocks exchanged."""
    da, db = tw.dim_a, tw.dim_b
    d = da + db
    perm = list(range(da, d)) + list(range(da))

    def old(i):
        return perm[i]

    inv = [0] * d
    for newi, oldi in enumerate(perm):
        inv[oldi] = newi
    c = [[[0] * d for _ in range(d)] for _ in range(d)]
    for i in range(d):
        for j in range(d):
            v = tw.total.c[old(i)][old(j)]
            for k, x in enumerate(v):
                c[i][j][inv[k]] = x
    return _from_block_total(LieAlgebra(d, c), db, da)


def bar_action(rep: Representation, T) -> Representation:
    """m bar. x = [T(m), x] + T(x . m): the module Lie algebra M^T acting on g."""
    T = as_matrix(T)
    if not is_o_operator(rep, T):
        raise NotOOperator(o_residual(rep, T))
    g = rep.algebra
    mt = induced_lie(rep, T)
    mats = []
    for j in range(rep.dim_m):
        tm = T.col(j)
        cols = []
        for i in range(g.dim):
            xv = _unit(g.dim, i)
            cols.append(vec_add(g.bracket_vec(tm, xv),
                                T.apply(rep.act(xv, _unit(rep.dim_m, j)))))
        mats.append(Matrix.from_cols(cols))
    return Representation(mt, g.dim, mats)


def twilled_from_o(rep: Representation, T) -> TwilledLieAlgebra:
    """The twilled algebra g joined with M^T along the bar action."""
    T = as_matrix(T)
    if not is_o_operator(rep, T):
        raise NotOOperator(o_residual(rep, T))
    g = rep.algebra
    d, m = g.dim, rep.dim_m
    bar = bar_action(rep, T)
    n = d + m
    c = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i in range(d):
        for j in range(d):
            for k, v in enumerate(g.c[i][j]):
                c[i][j][k] = v
    for i in range(d):
        for b in range(m):
            gpart = vec_scale(-1, bar.action[b].col(i))
            mpart = rep.act_basis(i, _unit(m, b))
            for k, v in enumerate(gpart):
                c[i][d + b][k] = v
                c[d + b][i][k] = -v
            for k, v in enumerate(mpart):
                c[i][d + b][d + k] = v
                c[d + b][i][d + k] = -v
    for a in range(m):
        for b in range(m):
            br = ind_bracket_vec(rep, T, _unit(m, a), _unit(m, b))
            for k, v in enumerate(br):
                c[d + a][d + b][d + k] = v
    return _from_block_total(LieAlgebra(n, c), d, m)


def _omega_matrix(tw: TwilledLieAlgebra, omega) -> Matrix:
    omega = as_matrix(omega)
    if omega.shape() != (tw.dim_b, tw.dim_a):
        raise DimensionMismatch(
            f"solution candidate must map a to b, got {omega.shape()}")
    return omega


def mc_residual(tw: TwilledLieAlgebra, omega) -> dict:
    """Explicit Maurer-Cartan residual per a-basis pair."""
    omega = _omega_matrix(tw, omega)
    out = {}
    da = tw.dim_a
    for i in range(da):
        for j in range(i + 1, da):
            oi, oj = omega.col(i), omega.col(j)
            ei, ej = _unit(da, i), _unit(da, j)
            lhs = vec_add(tw.b_algebra.bracket_vec(oi, oj),
                          vec_sub(tw.action1.act(ei, oj), tw.action1.act(ej, oi)))
            inner = vec_sub(tw.action2.act(oi, ej), tw.action2.act(oj, ei))
            rhs = vec_add(omega.apply(inner), omega.apply(tw.a_algebra.c[i][j]))
            out[(i, j)] = vec_sub(lhs, rhs)
    return out


def cocycle_residual(tw: TwilledLieAlgebra, omega) -> dict:
    """Defect of Omega([x,y]) = x .1 Omega(y) - y .1 Omega(x) per pair,
    oriented as the Chevalley-Eilenberg differential."""
    omega = _omega_matrix(tw, omega)
    out = {}
    da = tw.dim_a
    for i in range(da):
        for j in range(i + 1, da):
            acted = vec_sub(tw.action1.act(_unit(da, i), omega.col(j)),
                            tw.action1.act(_unit(da, j), omega.col(i)))
            out[(i, j)] = vec_sub(acted, omega.apply(tw.a_algebra.c[i][j]))
    return out


def quadratic_residual(tw: TwilledLieAlgebra, omega) -> dict:
    """Residual of [Om x, Om y] = Omega(Om x .2 y - Om y .2 x) per pair."""
    omega = _omega_matrix(tw, omega)
    out = {}
    da = tw.dim_a
    for i in range(da):
        for j in range(i + 1, da):
            oi, oj = omega.col(i), omega.col(j)
            lhs = tw.b_algebra.bracket_vec(oi, oj)
            inner = vec_sub(tw.action2.act(oi, _unit(da, j)),
                            tw.action2.act(oj, _unit(da, i)))
            out[(i, j)] = vec_sub(lhs, omega.apply(inner))
    return out


def _cohomology_grids(tw: TwilledLieAlgebra, omega: Matrix):
    """(d_CE Omega, [Omega, Omega]_{mu2}) as per-pair grids via cohomology."""
    oc = Cochain.from_linmap(omega)
    dce = ce_differential(tw.action1, oc)
    mu2 = build_mu2(tw.dim_a, tw.dim_b, tw.b_algebra, tw.action2)
    der = derived_bracket(mu2, oc, oc, tw.dim_a, tw.dim_b)
    da = tw.dim_a
    grid_d = {(i, j): dce.value((i, j))
              for i in range(da) for j in range(i + 1, da)}
    grid_q = {(i, j): der.value((i, j))
              for i in range(da) for j in range(i + 1, da)}
    return grid_d, grid_q


def mc_check(tw: TwilledLieAlgebra, omega):
    """Maurer-Cartan verdict with per-pair defects, oracle-checked."""
    omega = _omega_matrix(tw, omega)
    direct = mc_residual(tw, omega)
    grid_d, grid_q = _cohomology_grids(tw, omega)
    half = Fraction(1, 2)
    for key, val in direct.items():
        abstract = vec_add(grid_d[key], vec_scale(half, grid_q[key]))
        if abstract != val:
            raise OracleDisagreement("maurer-cartan residual",
                                     f"pair {key}: explicit {val} vs derived {abstract}")
    return all(is_zero_vec(v) for v in direct.values()), direct


def strong_mc_check(tw: TwilledLieAlgebra, omega):
    """Strong Maurer-Cartan verdict: cocycle and quadratic parts vanish
    separately; both parts oracle-checked against the cohomology route."""
    omega = _omega_matrix(tw, omega)
    lin = cocycle_residual(tw, omega)
    quad = quadratic_residual(tw, omega)
    grid_d, grid_q = _cohomology_grids(tw, omega)
    for key in lin:
        if grid_d[key] != lin[key]:
            raise OracleDisagreement("strong mc cocycle residual", f"pair {key}")
        if grid_q[key] != vec_scale(2, quad[key]):
            raise OracleDisagreement("strong mc quadratic residual", f"pair {key}")
    verdict = all(is_zero_vec(v) for v in lin.values()) and \
        all(is_zero_vec(v) for v in quad.values())
    defects = {k: (lin[k], quad[k]) for k in lin}
    return verdict, defects


def find_strong_mc(rep: Representation, T, coeffs=(-2, -1, 0, 1, 2), limit=None):
    """Strong Maurer-Cartan solutions on the twilled algebra of an O-operator,
    found by solving the linear cocycle equation and filtering the quadratic
    one over small integer combinations of the kernel basis."""
    T = as_matrix(T)
    tw = twilled_from_o(rep, T)
    basis = one_cocycle_basis(rep)
    found = []
    seen = set()
    for combo in product(coeffs, repeat=len(basis)):
        omega = Matrix.zeros(rep.dim_m, rep.algebra.dim)
        for cf, base in zip(combo, basis):
            if cf:
                omega = omega + base.scale(cf)
        if omega.entries in seen:
            continue
        seen.add(omega.entries)
        if all(is_zero_vec(v) for v in quadratic_residual(tw, omega).values()):
            ok, _ = strong_mc_check(tw, omega)
            if not ok:
                raise OracleDisagreement("strong mc search",
                                         "filtered candidate failed the full check")
            found.append(omega)
            if limit is not None and len(found) >= limit:
                break
    return found


@dataclass
class OmegaStructures:
    """The structures induced by a strong Maurer-Cartan solution."""

    twilled: TwilledLieAlgebra
    bar_rep: Representation
    g_omega: LieAlgebra
    action_omega: Representation
    big_bracket: LieAlgebra


def omega_structures(rep: Representation, T, omega) -> OmegaStructures:
    """The deformed algebra on g, its module structure on M, and the big
    bracket on g + M induced by a strong Maurer-Cartan solution."""
    T = as_matrix(T)
    tw = twilled_from_o(rep, T)
    omega = _omega_matrix(tw, omega)
    ok, defects = strong_mc_check(tw, omega)
    if not ok:
        raise NotStrongMC(defects)
    g = rep.algebra
    d, m = g.dim, rep.dim_m
    bar = bar_action(rep, T)
    if not is_o_operator(bar, omega):
        raise OracleDisagreement("omega structures",
                                 "strong MC solution is not an O-operator over M^T")
    g_omega = induced_lie(bar, omega)
    mt = bar.algebra
    mats = []
    for i in range(d):
        cols = []
        for j in range(m):
            cols.append(vec_add(mt.bracket_vec(omega.col(i), _unit(m, j)),
                                omega.apply(bar.action[j].col(i))))
        mats.append(Matrix.from_cols(cols))
    action_omega = Representation(g_omega, m, mats)
    n = d + m
    c = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i in range(d):
        for j in range(d):
            for k, v in enumerate(g_omega.c[i][j]):
                c[i][j][k] = v
    for i in range(d):
        for b in range(m):
            gpart = vec_scale(-1, bar.action[b].col(i))
            mpart = action_omega.action[i].col(b)
            for k, v in enumerate(gpart):
                c[i][d + b][k] = v
                c[d + b][i][k] = -v
            for k, v in enumerate(mpart):
                c[i][d + b][d + k] = v
                c[d + b][i][d + k] = -v
    for a in range(m):
        for b in range(m):
            br = ind_bracket_vec(rep, T, _unit(m, a), _unit(m, b))
            for k, v in enumerate(br):
                c[d + a][d + b][d + k] = v
    big = LieAlgebra(n, c)
    # the swapped splitting M^T join g^Omega carries T as a strong MC solution
    swapped = swap(_from_block_total(big, d, m))
    ok, _ = strong_mc_check(swapped, T)
    if not ok:
        raise OracleDisagreement("omega structures",
                                 "T fails the strong MC equation on the swapped algebra")
    if not is_o_operator(action_omega, T):
        raise OracleDisagreement("omega structures",
                                 "T fails the O-identity over the deformed action")
    return OmegaStructures(tw, bar, g_omega, action_omega, big)


def on_from_strong_mc(rep: Representation, T, omega) -> ONStructure:
    """(T, N = T Omega, S = Omega T) from a strong Maurer-Cartan solution."""
    T = as_matrix(T)
    tw = twilled_from_o(rep, T)
    omega = _omega_matrix(tw, omega)
    ok, defects = strong_mc_check(tw, omega)
    if not ok:
        raise NotStrongMC(defects)
    return ONStructure(rep, T, T * omega, omega * T)


def strong_mc_from_on(rep: Representation, T, N, S) -> Matrix:
    """Omega = T^{-1} N = S T^{-1} for an ON-structure with invertible T."""
    T, N, S = as_matrix(T), as_matrix(N), as_matrix(S)
    ok, report = is_on_structure(rep, T, N, S)
    if not ok:
        from .errors import NotONStructure
        raise NotONStructure(report)
    tinv = invert(T)
    omega = tinv * N
    if omega != S * tinv:
        raise OracleDisagreement("strong mc from on", "T^{-1} N != S T^{-1}")
    tw = twilled_from_o(rep, T)
    ok, defects = strong_mc_check(tw, omega)
    if not ok:
        raise OracleDisagreement("strong mc from on",
                                 f"induced solution failed the strong check: {defects}")
    return omega

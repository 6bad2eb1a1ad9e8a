"""Nijenhuis operators and structures, infinitesimal deformations of modules,
ON-structures with their compatible hierarchies, and PN-structures.

Nijenhuis structures and PN-structures are double-checked against their
semi-direct / coadjoint characterizations; a mismatch between the two routes
aborts, since sign conventions are the main hazard in this corner.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import (
    DimensionMismatch, JacobiViolation, NotAntisymmetric, NotCompatible,
    NotNijenhuis, NotNijenhuisStructure, NotONStructure, NotPN,
    OracleDisagreement,
)
from .exactla import Matrix, invert, is_zero_vec, vec_add, vec_sub
from .liecore import (
    LieAlgebra, Representation, as_matrix, coadjoint, direct_sum_map,
    dual_rep, semidirect,
)
from .ooper import (
    Bivector, are_compatible, bivector_from_sharp, compatibility_defect,
    ind_bracket_vec, is_o_operator, is_r_matrix, r_sharp,
)


def _unit(n, i):
    return tuple(1 if k == i else 0 for k in range(n))


def is_nijenhuis(g: LieAlgebra, N):
    """[Nx, Ny] = N([Nx, y] + [x, Ny] - N[x, y]) on all basis pairs."""
    N = as_matrix(N)
    if N.shape() != (g.dim, g.dim):
        raise DimensionMismatch("Nijenhuis candidate must be an endomorphism")
    for i in range(g.dim):
        ni = N.col(i)
        for j in range(i + 1, g.dim):
            nj = N.col(j)
            ei, ej = _unit(g.dim, i), _unit(g.dim, j)
            lhs = g.bracket_vec(ni, nj)
            inner = vec_sub(vec_add(g.bracket_vec(ni, ej), g.bracket_vec(ei, nj)),
                            N.apply(g.c[i][j]))
            if lhs != N.apply(inner):
                return False, (i, j, vec_sub(lhs, N.apply(inner)))
    return True, None


def deformed_tensor(g_c, dim, N: Matrix):
    """Structure tensor of [x,y]_N = [Nx,y] + [x,Ny] - N[x,y] over any bracket tensor."""
    c = [[None] * dim for _ in range(dim)]
    cols = [N.col(i) for i in range(dim)]

    def bracket(x, y):
        out = [0] * dim
        for a, xa in enumerate(x):
            if xa:
                row = g_c[a]
                for b, yb in enumerate(y):
                    if yb:
                        for k, v in enumerate(row[b]):
                            if v:
                                out[k] += xa * yb * v
        return tuple(out)

    for i in range(dim):
        for j in range(dim):
            ei, ej = _unit(dim, i), _unit(dim, j)
            v = vec_sub(vec_add(bracket(cols[i], ej), bracket(ei, cols[j])),
                        N.apply(g_c[i][j]))
            c[i][j] = list(v)
    return c


def deformed_bracket(g: LieAlgebra, N) -> LieAlgebra:
    """The Lie algebra (g, [.,.]_N) of a Nijenhuis operator."""
    N = as_matrix(N)
    ok, defect = is_nijenhuis(g, N)
    if not ok:
        raise NotNijenhuis(defect)
    out = LieAlgebra(g.dim, deformed_tensor(g.c, g.dim, N))
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            if N.apply(out.c[i][j]) != g.bracket_vec(N.col(i), N.col(j)):
                raise OracleDisagreement("deformed bracket",
                                         "N is not a morphism onto the original bracket")
    return out


def nijenhuis_power_props(g: LieAlgebra, N, kmax: int) -> dict:
    """Power properties: N^k Nijenhuis, iterated deformations collapse, and
    random linear combinations of deformed brackets satisfy Jacobi."""
    N = as_matrix(N)
    ok, defect = is_nijenhuis(g, N)
    if not ok:
        raise NotNijenhuis(defect)
    powers = [Matrix.identity(g.dim)]
    for _ in range(kmax):
        powers.append(powers[-1] * N)
    report = {"powers_nijenhuis": True, "iterated_deformation_coincides": True,
              "combinations_jacobi": True}
    tensors = {}
    for k in range(kmax + 1):
        if not is_nijenhuis(g, powers[k])[0]:
            report["powers_nijenhuis"] = False
        tensors[k] = deformed_tensor(g.c, g.dim, powers[k])
    rng = random.Random(51)
    for k in range(kmax + 1):
        for l in range(kmax + 1):
            if k + l <= kmax:
                iterated = deformed_tensor(tensors[k], g.dim, powers[l])
                if iterated != tensors[k + l]:
                    report["iterated_deformation_coincides"] = False
            for _ in range(3):
                mu, lam = rng.randint(1, 5), rng.randint(1, 5)
                combo = [[[mu * a + lam * b for a, b in zip(tensors[k][i][j], tensors[l][i][j])]
                          for j in range(g.dim)] for i in range(g.dim)]
                try:
                    LieAlgebra(g.dim, combo)
                except JacobiViolation:
                    report["combinations_jacobi"] = False
    return report


@dataclass
class DeformationData:
    """Linear coefficient of a one-parameter deformation of a module."""

    bracket1: tuple   # dim^3 tensor, skew in the first two slots
    action1: tuple    # one matrix per algebra basis vector

    @staticmethod
    def build(dim, dim_m, bracket1, action1):
        c = tuple(tuple(tuple(x for x in bracket1[i][j]) for j in range(dim))
                  for i in range(dim))
        mats = tuple(a if isinstance(a, Matrix) else Matrix(a) for a in action1)
        if len(mats) != dim or any(m.shape() != (dim_m, dim_m) for m in mats):
            raise DimensionMismatch("deformation action shape mismatch")
        return DeformationData(c, mats)


def is_infinitesimal_deformation(rep: Representation, d: DeformationData):
    """The four coefficient conditions, checked in order; returns
    (verdict, name of the first failed condition or None)."""
    g = rep.algebra
    dim, m = g.dim, rep.dim_m
    c1 = d.bracket1

    def br1(x, y):
        out = [0] * dim
        for a, xa in enumerate(x):
            if xa:
                for b, yb in enumerate(y):
                    if yb:
                        for k, v in enumerate(c1[a][b]):
                            if v:
                                out[k] += xa * yb * v
        return tuple(out)

    for i in range(dim):
        for j in range(dim):
            if tuple(c1[i][j]) != tuple(-x for x in c1[j][i]):
                return False, "bracket1_skew"
    for i in range(dim):
        for j in range(i + 1, dim):
            for k in range(j + 1, dim):
                ei, ej, ek = _unit(dim, i), _unit(dim, j), _unit(dim, k)
                total = vec_add(
                    vec_add(g.bracket_vec(ei, br1(ej, ek)),
                            g.bracket_vec(ej, br1(ek, ei))),
                    g.bracket_vec(ek, br1(ei, ej)))
                total = vec_add(total, vec_add(
                    vec_add(br1(ei, g.c[j][k]), br1(ej, g.c[k][i])),
                    br1(ek, g.c[i][j])))
                if not is_zero_vec(total):
                    return False, "two_cocycle"
    for i in range(dim):
        for j in range(i + 1, dim):
            for k in range(j + 1, dim):
                ei, ej, ek = _unit(dim, i), _unit(dim, j), _unit(dim, k)
                total = vec_add(
                    vec_add(br1(ei, br1(ej, ek)), br1(ej, br1(ek, ei))),
                    br1(ek, br1(ei, ej)))
                if not is_zero_vec(total):
                    return False, "bracket1_jacobi"

    def act1(x, mm):
        out = [0] * m
        for a, xa in enumerate(x):
            if xa:
                col = d.action1[a].apply(mm)
                for k, v in enumerate(col):
                    if v:
                        out[k] += xa * v
        return tuple(out)

    for i in range(dim):
        for j in range(i + 1, dim):
            ei, ej = _unit(dim, i), _unit(dim, j)
            for t in range(m):
                mt = _unit(m, t)
                lhs = act1(br1(ei, ej), mt)
                rhs = vec_sub(act1(ei, act1(ej, mt)), act1(ej, act1(ei, mt)))
                if lhs != rhs:
                    return False, "action1_rep"
    for i in range(dim):
        for j in range(i + 1, dim):
            ei, ej = _unit(dim, i), _unit(dim, j)
            for t in range(m):
                mt = _unit(m, t)
                lhs = vec_add(act1(g.c[i][j], mt), rep.act(br1(ei, ej), mt))
                rhs = vec_add(
                    vec_sub(rep.act(ei, act1(ej, mt)), rep.act(ej, act1(ei, mt))),
                    vec_sub(act1(ei, rep.act(ej, mt)), act1(ej, rep.act(ei, mt))))
                if lhs != rhs:
                    return False, "mixed_module"
    return True, None


def deformation_pair_defect(rep: Representation, N: Matrix, S: Matrix):
    """Defect of N(x).S(m) = S(Nx.m + x.Sm - S(x.m)) on basis pairs."""
    g = rep.algebra
    for i in range(g.dim):
        ni = N.col(i)
        for t in range(rep.dim_m):
            mt = _unit(rep.dim_m, t)
            st = S.col(t)
            lhs = rep.act(ni, st)
            rhs = S.apply(vec_sub(vec_add(rep.act(ni, mt), rep.act(_unit(g.dim, i), st)),
                                  S.apply(rep.act(_unit(g.dim, i), mt))))
            if lhs != rhs:
                return (i, t, vec_sub(lhs, rhs))
    return None


def trivial_deformation_from(rep: Representation, N, S) -> DeformationData:
    """The trivial deformation generated by a Nijenhuis operator N and an S
    compatible with it on the module side."""
    N, S = as_matrix(N), as_matrix(S)
    g = rep.algebra
    ok, defect = is_nijenhuis(g, N)
    if not ok:
        raise NotNijenhuis(defect)
    bad = deformation_pair_defect(rep, N, S)
    if bad is not None:
        raise NotNijenhuisStructure(
            f"pair fails the deformation compatibility identity at {bad}")
    bracket1 = deformed_tensor(g.c, g.dim, N)
    action1 = [rep.rho(N.col(i)) + rep.action[i] * S - S * rep.action[i]
               for i in range(g.dim)]
    d = DeformationData.build(g.dim, rep.dim_m, bracket1, action1)
    ok, which = is_infinitesimal_deformation(rep, d)
    if not ok:
        raise OracleDisagreement("trivial deformation", f"condition {which} failed")
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            if N.apply(d.bracket1[i][j]) != g.bracket_vec(N.col(i), N.col(j)):
                raise OracleDisagreement("trivial deformation", "triviality (8)")
    for i in range(g.dim):
        lhs = S * d.action1[i]
        rhs = rep.rho(N.col(i)) * S
        if lhs != rhs:
            raise OracleDisagreement("trivial deformation", "triviality (10)")
    return d


def nijenhuis_structure_defect(rep: Representation, N: Matrix, S: Matrix):
    """Defect of N(x).S(m) = S(Nx.m) + x.S^2 m - S(x.Sm) on basis pairs."""
    g = rep.algebra
    s2 = S * S
    for i in range(g.dim):
        ni = N.col(i)
        ei = _unit(g.dim, i)
        for t in range(rep.dim_m):
            mt = _unit(rep.dim_m, t)
            lhs = rep.act(ni, S.col(t))
            rhs = vec_sub(vec_add(S.apply(rep.act(ni, mt)), rep.act(ei, s2.col(t))),
                          S.apply(rep.act(ei, S.col(t))))
            if lhs != rhs:
                return (i, t, vec_sub(lhs, rhs))
    return None


def is_nijenhuis_structure(rep: Representation, N, S) -> bool:
    """Direct identity check against the dual semi-direct Nijenhuis lift."""
    N, S = as_matrix(N), as_matrix(S)
    direct = is_nijenhuis(rep.algebra, N)[0] and \
        nijenhuis_structure_defect(rep, N, S) is None
    sd = semidirect(dual_rep(rep))
    lifted = direct_sum_map(N, S.transpose())
    oracle = is_nijenhuis(sd, lifted)[0]
    if direct != oracle:
        raise OracleDisagreement("nijenhuis structure",
                                 f"direct={direct} semidirect={oracle}")
    return direct


def tilde_action(rep: Representation, N, S) -> Representation:
    """x ~. m = N(x).m - x.S(m) + S(x.m) as a module over (g, [.,.]_N)."""
    N, S = as_matrix(N), as_matrix(S)
    if not is_nijenhuis_structure(rep, N, S):
        raise NotNijenhuisStructure("tilde action needs a Nijenhuis structure")
    deformed = deformed_bracket(rep.algebra, N)
    mats = [rep.rho(N.col(i)) - rep.action[i] * S + S * rep.action[i]
            for i in range(rep.algebra.dim)]
    return Representation(deformed, rep.dim_m, mats)


def deformed_module_bracket(rep: Representation, T: Matrix, S: Matrix, m_idx, n_idx):
    """[m, n]^T_S = [Sm, n]^T + [m, Sn]^T - S([m, n]^T) on basis indices."""
    m = rep.dim_m
    em, en = _unit(m, m_idx), _unit(m, n_idx)
    return vec_sub(
        vec_add(ind_bracket_vec(rep, T, S.col(m_idx), en),
                ind_bracket_vec(rep, T, em, S.col(n_idx))),
        S.apply(ind_bracket_vec(rep, T, em, en)))


def is_on_structure(rep: Representation, T, N, S):
    """Clause-by-clause ON-structure verdict with a defect report."""
    T, N, S = as_matrix(T), as_matrix(N), as_matrix(S)
    report = {}
    report["o_operator"] = is_o_operator(rep, T)
    report["nijenhuis_structure"] = is_nijenhuis_structure(rep, N, S)
    report["intertwine"] = (N * T == T * S)
    nt = N * T
    m = rep.dim_m
    brackets_ok = True
    for i in range(m):
        for j in range(i + 1, m):
            lhs = ind_bracket_vec(rep, nt, _unit(m, i), _unit(m, j))
            if lhs != deformed_module_bracket(rep, T, S, i, j):
                brackets_ok = False
                break
        if not brackets_ok:
            break
    report["bracket_equality"] = brackets_ok
    verdict = all(report.values())
    if verdict:
        tilde = tilde_action(rep, N, S)
        for i in range(m):
            for j in range(i + 1, m):
                ei, ej = _unit(m, i), _unit(m, j)
                via_tilde = vec_sub(tilde.act(T.col(i), ej), tilde.act(T.col(j), ei))
                if via_tilde != deformed_module_bracket(rep, T, S, i, j):
                    raise OracleDisagreement("on structure",
                                             "tilde bracket disagrees with S-deformed bracket")
        report["tilde_bracket_agrees"] = True
    return verdict, report


@dataclass(frozen=True)
class ONStructure:
    """A validated ON-structure (T, N, S) on a module."""

    rep: Representation
    T: Matrix
    N: Matrix
    S: Matrix

    def __post_init__(self):
        ok, report = is_on_structure(self.rep, self.T, self.N, self.S)
        if not ok:
            raise NotONStructure(report)


def hierarchy(rep: Representation, T, N, S, kmax: int):
    """T_k = N^k T = T S^k for k <= kmax, with every theorem-backed identity
    (operators, pairwise compatibility, deformed-bracket relations) verified."""
    T, N, S = as_matrix(T), as_matrix(N), as_matrix(S)
    ok, report = is_on_structure(rep, T, N, S)
    if not ok:
        raise NotONStructure(report)
    g = rep.algebra
    m = rep.dim_m
    npow = [Matrix.identity(g.dim)]
    spow = [Matrix.identity(m)]
    for _ in range(kmax):
        npow.append(npow[-1] * N)
        spow.append(spow[-1] * S)
    ts = []
    for k in range(kmax + 1):
        tk = npow[k] * T
        if tk != T * spow[k]:
            raise OracleDisagreement("hierarchy", f"N^{k} T != T S^{k}")
        if not is_o_operator(rep, tk):
            raise OracleDisagreement("hierarchy", f"T_{k} failed the O-identity")
        ts.append(tk)
    for k in range(kmax + 1):
        for l in range(k + 1, kmax + 1):
            if not are_compatible(rep, ts[k], ts[l]):
                raise OracleDisagreement("hierarchy", f"T_{k} and T_{l} incompatible")
    # deformed-bracket identities for k + l <= kmax
    for k in range(kmax + 1):
        for l in range(kmax + 1 - k):
            nl = npow[l]
            for i in range(m):
                for j in range(i + 1, m):
                    ei, ej = _unit(m, i), _unit(m, j)
                    skl = deformed_module_bracket(rep, T, spow[k + l], i, j)
                    lhs = ts[k].apply(skl)
                    a = ts[k].col(i)
                    b = ts[k].col(j)
                    rhs = vec_sub(
                        vec_add(g.bracket_vec(nl.apply(a), b),
                                g.bracket_vec(a, nl.apply(b))),
                        nl.apply(g.bracket_vec(a, b)))
                    if lhs != rhs:
                        raise OracleDisagreement(
                            "hierarchy", f"bracket identity (k={k}, l={l}) failed")
                    via_tkl = ind_bracket_vec(rep, ts[k + l], ei, ej)
                    if via_tkl != skl:
                        raise OracleDisagreement(
                            "hierarchy", f"operator bracket (k+l={k + l}) != S-deformed")
                    # the form the compatibility argument rests on: the
                    # T_{k+l}-bracket is the S^l-deformation of the T_k one
                    via_gen = vec_sub(
                        vec_add(ind_bracket_vec(rep, ts[k], spow[l].col(i), ej),
                                ind_bracket_vec(rep, ts[k], ei, spow[l].col(j))),
                        spow[l].apply(ind_bracket_vec(rep, ts[k], ei, ej)))
                    if via_tkl != via_gen:
                        raise OracleDisagreement(
                            "hierarchy", f"deformation identity (k={k}, l={l}) failed")
    return ts


def on_from_compatible_pair(rep: Representation, T1, T2) -> ONStructure:
    """(T2, T1 T2^{-1}, T2^{-1} T1) from a compatible pair with T2 invertible."""
    T1, T2 = as_matrix(T1), as_matrix(T2)
    if not are_compatible(rep, T1, T2):
        raise NotCompatible(compatibility_defect(rep, T1, T2))
    t2inv = invert(T2)
    return ONStructure(rep, T2, T1 * t2inv, t2inv * T1)


def is_pn_structure(g: LieAlgebra, r: Bivector, N) -> bool:
    """Direct PN clauses against the coadjoint ON-structure characterization."""
    N = as_matrix(N)
    rsh = r_sharp(r)
    co = coadjoint(g)
    direct = is_r_matrix(g, r) and is_nijenhuis(g, N)[0] and N * rsh == rsh * N.transpose()
    if direct:
        nstar = N.transpose()
        nrsh = N * rsh
        for i in range(g.dim):
            for j in range(i + 1, g.dim):
                lhs = ind_bracket_vec(co, nrsh, _unit(g.dim, i), _unit(g.dim, j))
                if lhs != deformed_module_bracket(co, rsh, nstar, i, j):
                    direct = False
                    break
            if not direct:
                break
    oracle = is_on_structure(co, rsh, N, N.transpose())[0]
    if direct != oracle:
        raise OracleDisagreement("pn structure", f"direct={direct} coadjoint_on={oracle}")
    return direct


def pn_hierarchy(g: LieAlgebra, r: Bivector, N, kmax: int):
    """Bivectors r_k with (r_k)^sharp = N^k r^sharp, all classical r-matrices
    and pairwise compatible."""
    N = as_matrix(N)
    if not is_pn_structure(g, r, N):
        raise NotPN("input pair is not a PN-structure")
    out = []
    sharp = r_sharp(r)
    acc = Matrix.identity(g.dim)
    for k in range(kmax + 1):
        mk = acc * sharp
        if not mk.is_antisymmetric():
            raise NotAntisymmetric(f"N^{k} r_sharp is not induced by a bivector")
        rk = bivector_from_sharp(mk)
        if not is_r_matrix(g, rk):
            raise OracleDisagreement("pn hierarchy", f"r_{k} is not an r-matrix")
        out.append(rk)
        acc = acc * N
    for a in range(len(out)):
        for b in range(a + 1, len(out)):
            if not is_r_matrix(g, out[a].add(out[b])):
                raise OracleDisagreement("pn hierarchy",
                                         f"r_{a} + r_{b} is not an r-matrix")
    return out

import itertools
import random

import pytest

from lieop.errors import (
    InvalidGCS, NotComplexPair, NotComplexStructure, NotOOperator, Singular,
)
from lieop.exactla import Matrix, invert, is_zero_vec
from lieop.liecore import (
    LieAlgebra, Subspace, adjoint, coadjoint, is_subalgebra, semidirect,
    trivial_rep,
)
from lieop.ooper import Bivector, bivector_from_sharp, o_residual
from lieop.gcsholo import (
    GCSModule, gcs_check_components, gcs_check_direct, gcs_from_complex,
    gcs_from_invertible_o, gcs_lie_check, gcs_oracle, is_complex_structure,
    is_holomorphic_o, is_holomorphic_r, is_module_complex_pair, opposite_gcs,
)


def aff1():
    return LieAlgebra.from_brackets(2, {(0, 1): (0, 1)})


def ab(n):
    return LieAlgebra(n, [[[0] * n for _ in range(n)] for _ in range(n)])


K = Matrix([[0, -1], [1, 0]])
TINV = Matrix([[0, -1], [1, 0]])


def test_direct_examples():
    triv = trivial_rep(ab(2), 2)
    T = Matrix([[1, 1], [0, 1]])
    assert gcs_check_direct(triv, Matrix.zeros(2), T, -invert(T), Matrix.zeros(2))
    z = Matrix.zeros(2)
    assert not gcs_check_direct(triv, z, z, z, z)
    co = coadjoint(aff1())
    j = gcs_from_invertible_o(co, TINV)
    assert gcs_check_direct(co, j.N, j.T, j.sigma, j.S)


def test_components_match_direct_on_examples():
    co = coadjoint(aff1())
    j = gcs_from_invertible_o(co, TINV)
    assert gcs_oracle(co, j.N, j.T, j.sigma, j.S)
    z = Matrix.zeros(2)
    assert gcs_oracle(co, z, z, z, z) is False
    triv = trivial_rep(ab(2), 2)
    T = Matrix([[1, 1], [0, 1]])
    assert gcs_oracle(triv, z, T, -invert(T), z)


def test_identity56_certifies_o_operator_and_graph():
    co = coadjoint(aff1())
    j = gcs_from_invertible_o(co, TINV)
    assert all(is_zero_vec(v) for v in o_residual(co, j.T).values())
    # Gr((T, S)) = {(Tm, Sm)} is a subalgebra of the semi-direct product
    sd = semidirect(co)
    basis = [tuple(j.T.col(b)) + tuple(j.S.col(b)) for b in range(2)]
    assert is_subalgebra(sd, Subspace(4, basis))[0]


def test_report_mode_names_failed_identities():
    co = coadjoint(aff1())
    z = Matrix.zeros(2)
    ok, failed = gcs_check_components(co, z, z, z, z, report=True)
    assert not ok and 53 in failed and 55 in failed
    ok, defects = gcs_check_direct(co, z, z, z, z, report=True)
    assert not ok and defects["almost_complex"]


def test_oracle_random_agreement():
    rep = adjoint(aff1())
    rng = random.Random(7)
    for _ in range(3000):
        mats = [tuple(tuple(rng.randint(-1, 1) for _ in range(2)) for _ in range(2))
                for _ in range(4)]
        gcs_oracle(rep, *mats)


def test_oracle_agreement_rectangular_dims():
    # dim g = 2, dim M = 3: adjoint extended by a trivial line
    g = aff1()
    adj = adjoint(g)
    mats = []
    for a in adj.action:
        rows = [list(a.row(0)) + [0], list(a.row(1)) + [0], [0, 0, 0]]
        mats.append(Matrix(rows))
    from lieop.liecore import Representation
    rep = Representation(g, 3, mats)
    rng = random.Random(23)
    for _ in range(400):
        n = tuple(tuple(rng.randint(-1, 1) for _ in range(2)) for _ in range(2))
        t = tuple(tuple(rng.randint(-1, 1) for _ in range(3)) for _ in range(2))
        sg = tuple(tuple(rng.randint(-1, 1) for _ in range(2)) for _ in range(3))
        s = tuple(tuple(rng.randint(-1, 1) for _ in range(3)) for _ in range(3))
        gcs_oracle(rep, n, t, sg, s)


def test_opposite():
    co = coadjoint(aff1())
    j = gcs_from_invertible_o(co, TINV)
    opp = opposite_gcs(j)
    assert opp.T == -j.T and opp.sigma == -j.sigma
    assert opp.N == j.N and opp.S == j.S
    back = opposite_gcs(opp)
    assert (back.N, back.T, back.sigma, back.S) == (j.N, j.T, j.sigma, j.S)
    triv = trivial_rep(ab(2), 2)
    cj = gcs_from_complex(triv, K, K)
    copp = opposite_gcs(cj)
    assert (copp.N, copp.T, copp.sigma, copp.S) == (cj.N, cj.T, cj.sigma, cj.S)


def test_gcs_from_invertible_o_guards():
    co = coadjoint(aff1())
    with pytest.raises(Singular):
        gcs_from_invertible_o(co, Matrix.zeros(2))
    rep = adjoint(aff1())
    with pytest.raises(NotOOperator):
        gcs_from_invertible_o(rep, Matrix.identity(2))
    with pytest.raises(InvalidGCS):
        GCSModule(co, Matrix.identity(2), Matrix.zeros(2), Matrix.zeros(2),
                  Matrix.zeros(2))


def test_complex_structures():
    assert is_complex_structure(ab(2), K)
    assert is_complex_structure(aff1(), K)
    one = LieAlgebra(1, [[[0]]])
    for v in (-2, -1, 0, 1, 2):
        assert not is_complex_structure(one, Matrix([[v]]))
    assert not is_complex_structure(ab(2), Matrix.identity(2))


def test_module_complex_pairs():
    triv = trivial_rep(ab(2), 2)
    assert is_module_complex_pair(triv, K, K)
    assert is_module_complex_pair(triv, K, -K)
    assert not is_module_complex_pair(triv, K, Matrix.identity(2))
    co = coadjoint(aff1())
    assert is_module_complex_pair(co, K, K)
    j = gcs_from_complex(co, K, K)
    assert gcs_check_direct(co, j.N, j.T, j.sigma, j.S)


def test_module_complex_pair_oracle_sweep():
    co = coadjoint(aff1())
    for f in itertools.product((-1, 0, 1), repeat=8):
        i_mat = Matrix([f[0:2], f[2:4]])
        im_mat = Matrix([f[4:6], f[6:8]])
        is_module_complex_pair(co, i_mat, im_mat)  # assertion is oracle agreement


def test_gcs_lie_check():
    g = ab(2)
    r = Bivector.from_pairs(2, {(0, 1): 1})
    sig = Matrix([[0, 1], [-1, 0]])
    assert gcs_lie_check(g, Matrix.zeros(2), r, sig)
    assert gcs_lie_check(g, K, Bivector.from_pairs(2, {}), Matrix.zeros(2))
    assert not gcs_lie_check(g, Matrix.zeros(2), Bivector.from_pairs(2, {}),
                             Matrix.zeros(2))
    # wrong scaling breaks J^2 = -id
    assert not gcs_lie_check(g, Matrix.zeros(2), r.scale(2), sig)


def test_holomorphic_o():
    triv = trivial_rep(ab(2), 2)
    assert is_holomorphic_o(triv, K, K, Matrix.zeros(2), Matrix.zeros(2))
    # any equivariant T_I works over the trivial module
    count = 0
    for f in itertools.product((-1, 0, 1), repeat=4):
        ti = Matrix([f[0:2], f[2:4]])
        if K * ti == ti * K:
            assert is_holomorphic_o(triv, K, K, ti * K, ti)
            count += 1
    assert count > 3
    assert not is_holomorphic_o(triv, K, K, Matrix.identity(2), Matrix.identity(2))
    with pytest.raises(NotComplexPair):
        is_holomorphic_o(triv, K, Matrix.identity(2), Matrix.zeros(2), Matrix.zeros(2))


def test_holomorphic_o_clauses_are_independent():
    # (K, K) on the coadjoint module is a complex pair but not a Nijenhuis
    # structure, so no (T_R, T_I) over it is holomorphic, not even zero
    from lieop.onstruct import is_nijenhuis_structure
    co = coadjoint(aff1())
    assert is_module_complex_pair(co, K, K)
    assert not is_nijenhuis_structure(co, K, K)
    assert not is_holomorphic_o(co, K, K, Matrix.zeros(2), Matrix.zeros(2))


def test_holomorphic_r():
    g = aff1()
    zero2 = Bivector.from_pairs(2, {})
    assert is_holomorphic_r(g, K, zero2, zero2)
    assert not is_holomorphic_r(g, K, Bivector.from_pairs(2, {(0, 1): 1}), zero2)
    with pytest.raises(NotComplexStructure):
        is_holomorphic_r(g, Matrix.identity(2), zero2, zero2)


def test_holomorphic_r_nontrivial_abelian4():
    g = ab(4)
    j4 = Matrix([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
    assert is_complex_structure(g, j4)
    sharp_i = Matrix([[0, 0, 1, 0], [0, 0, 0, -1], [-1, 0, 0, 0], [0, 1, 0, 0]])
    ri = bivector_from_sharp(sharp_i)
    rr = bivector_from_sharp(sharp_i * j4.transpose())
    assert is_holomorphic_r(g, j4, rr, ri)
    # breaking the sharp relation flips the verdict
    assert not is_holomorphic_r(g, j4, ri, ri)


def test_holomorphic_r_exhaustive_ab2():
    g = ab(2)
    js = [Matrix([[0, -1], [1, 0]]), Matrix([[0, 1], [-1, 0]])]
    for j in js:
        assert is_complex_structure(g, j)
        for a, b in itertools.product((-1, 0, 1), repeat=2):
            rr = Bivector.from_pairs(2, {(0, 1): a})
            ri = Bivector.from_pairs(2, {(0, 1): b})
            verdict = is_holomorphic_r(g, j, rr, ri)
            # on ab2 the intertwining forces r_I = 0, hence r_R = 0
            assert verdict == (a == 0 and b == 0)

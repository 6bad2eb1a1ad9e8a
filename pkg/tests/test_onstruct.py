import itertools
import random

import pytest

from lieop.errors import (
    NotNijenhuis, NotNijenhuisStructure, NotONStructure, NotPN, Singular,
)
from lieop.exactla import Matrix
from lieop.liecore import LieAlgebra, adjoint, coadjoint
from lieop.ooper import Bivector, is_o_operator, is_r_matrix
from lieop.onstruct import (
    DeformationData, ONStructure, deformed_bracket, hierarchy,
    is_infinitesimal_deformation, is_nijenhuis, is_nijenhuis_structure,
    is_on_structure, is_pn_structure, nijenhuis_power_props,
    on_from_compatible_pair, pn_hierarchy, tilde_action,
    trivial_deformation_from,
)


def aff1():
    return LieAlgebra.from_brackets(2, {(0, 1): (0, 1)})


def h3():
    return LieAlgebra.from_brackets(3, {(0, 1): (0, 0, 1)})


def sl2():
    return LieAlgebra.from_brackets(3, {
        (0, 1): (0, 2, 0), (0, 2): (0, 0, -2), (1, 2): (1, 0, 0)})


AFF1_N = Matrix([[1, 0], [0, 0]])
COADJ_T2 = Matrix([[0, -1], [1, 0]])
COADJ_T1 = Matrix([[0, 0], [0, 1]])


def test_is_nijenhuis_basics():
    g = aff1()
    assert is_nijenhuis(g, Matrix.identity(2))[0]
    assert is_nijenhuis(g, Matrix.zeros(2))[0]
    assert is_nijenhuis(g, AFF1_N)[0]
    ok, defect = is_nijenhuis(sl2(), Matrix.diag((2, 1, 1)))
    assert not ok and defect is not None


def test_deformed_bracket():
    g = aff1()
    assert deformed_bracket(g, Matrix.identity(2)).bracket_tensor_equal(g)
    assert deformed_bracket(g, Matrix.zeros(2)).is_abelian()
    dn = deformed_bracket(g, AFF1_N)
    assert dn.bracket_vec((1, 0), (0, 1)) == (0, 1)
    with pytest.raises(NotNijenhuis):
        deformed_bracket(sl2(), Matrix.diag((2, 1, 1)))


def test_power_props():
    for g, n in ((aff1(), Matrix.identity(2)),
                 (aff1(), Matrix.zeros(2)),
                 (aff1(), AFF1_N),
                 (h3(), Matrix.diag((2, 1, 2))),
                 (sl2(), Matrix.diag((1, 1, 2)))):
        rpt = nijenhuis_power_props(g, n, 3)
        assert all(rpt.values()), (g, n, rpt)


def test_infinitesimal_deformation_zero_and_doubling():
    rep = adjoint(h3())
    zero = DeformationData.build(3, 3, [[[0] * 3] * 3] * 3,
                                 [Matrix.zeros(3)] * 3)
    assert is_infinitesimal_deformation(rep, zero)[0]
    doubling = DeformationData.build(
        3, 3, [[list(rep.algebra.c[i][j]) for j in range(3)] for i in range(3)],
        list(rep.action))
    assert is_infinitesimal_deformation(rep, doubling)[0]


def test_infinitesimal_deformation_rejects_junk():
    rep = adjoint(h3())
    # [e2,e3]_1 = e2 breaks the cocycle condition: the cyclic sum picks up [e1,e2]
    cocycle_bad = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    cocycle_bad[1][2] = [0, 1, 0]
    cocycle_bad[2][1] = [0, -1, 0]
    d = DeformationData.build(3, 3, cocycle_bad, [Matrix.zeros(3)] * 3)
    ok, which = is_infinitesimal_deformation(rep, d)
    assert not ok and which == "two_cocycle"
    # [e1,e2]_1 = e1 passes the brackets but not the mixed module condition
    mixed_bad = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    mixed_bad[0][1] = [1, 0, 0]
    mixed_bad[1][0] = [-1, 0, 0]
    d2 = DeformationData.build(3, 3, mixed_bad, [Matrix.zeros(3)] * 3)
    ok, which = is_infinitesimal_deformation(rep, d2)
    assert not ok and which == "mixed_module"


def test_trivial_deformation_from():
    rep = adjoint(aff1())
    d = trivial_deformation_from(rep, Matrix.identity(2), Matrix.identity(2))
    assert d.bracket1 == rep.algebra.c
    assert list(d.action1) == list(rep.action)
    dz = trivial_deformation_from(rep, Matrix.zeros(2), Matrix.zeros(2))
    assert all(m.is_zero() for m in dz.action1)
    s = Matrix([[1, 0], [-1, 1]])
    d2 = trivial_deformation_from(rep, AFF1_N, s)
    assert is_infinitesimal_deformation(rep, d2)[0]
    with pytest.raises(NotNijenhuisStructure):
        trivial_deformation_from(rep, AFF1_N, Matrix([[0, 1], [1, 0]]))


def test_nijenhuis_structure_examples():
    rep = adjoint(aff1())
    assert is_nijenhuis_structure(rep, Matrix.identity(2), Matrix.identity(2))
    # scalar N pairs with itself on any module
    assert is_nijenhuis_structure(rep, Matrix.diag((2, 2)), Matrix.diag((2, 2)))
    # (N, N) on the adjoint is NOT automatic, even for Nijenhuis N
    assert not is_nijenhuis_structure(rep, AFF1_N, AFF1_N)
    # (N, N^T) on the coadjoint module holds for every Nijenhuis operator
    for g, n in ((aff1(), AFF1_N), (h3(), Matrix.diag((2, 1, 2))),
                 (sl2(), Matrix.diag((1, 1, 2)))):
        assert is_nijenhuis_structure(coadjoint(g), n, n.transpose())


def test_nijenhuis_structure_powers():
    # the pairs (N^i, S^i) inherit the structure; property-tested, not assumed
    cases = [
        (adjoint(aff1()), AFF1_N, Matrix([[1, 0], [1, 1]])),
        (coadjoint(h3()), Matrix.diag((2, 1, 2)), Matrix.diag((2, 1, 2))),
        (coadjoint(sl2()), Matrix.diag((1, 1, 2)), Matrix.diag((1, 1, 2))),
    ]
    for rep, n, s in cases:
        assert is_nijenhuis_structure(rep, n, s)
        npow, spow = n, s
        for _ in range(3):
            npow = npow * n
            spow = spow * s
            assert is_nijenhuis_structure(rep, npow, spow)


def test_nijenhuis_structure_oracle_agreement_random():
    rep = adjoint(aff1())
    rng = random.Random(11)
    for _ in range(200):
        n = Matrix([[rng.randint(-1, 1) for _ in range(2)] for _ in range(2)])
        s = Matrix([[rng.randint(-1, 1) for _ in range(2)] for _ in range(2)])
        is_nijenhuis_structure(rep, n, s)  # raises on oracle disagreement


def test_tilde_action():
    rep = adjoint(aff1())
    t = tilde_action(rep, Matrix.identity(2), Matrix.zeros(2))
    assert list(t.action) == list(rep.action)
    tz = tilde_action(rep, Matrix.zeros(2), Matrix.zeros(2))
    assert all(m.is_zero() for m in tz.action)
    assert tz.algebra.is_abelian()
    with pytest.raises(NotNijenhuisStructure):
        tilde_action(rep, AFF1_N, AFF1_N)


def test_on_structure_examples():
    co = coadjoint(aff1())
    assert is_on_structure(co, COADJ_T2, Matrix.identity(2), Matrix.identity(2))[0]
    rep = adjoint(aff1())
    assert is_on_structure(rep, Matrix.zeros(2), Matrix.identity(2),
                           Matrix.identity(2))[0]
    on = on_from_compatible_pair(co, COADJ_T1, COADJ_T2)
    assert is_on_structure(co, on.T, on.N, on.S)[0]
    ok, report = is_on_structure(co, COADJ_T2, Matrix.diag((1, 2)), Matrix.diag((1, 2)))
    assert not ok and not report["intertwine"] or not ok
    with pytest.raises(NotONStructure):
        ONStructure(co, COADJ_T2, Matrix.diag((1, 2)), Matrix.diag((2, 1)))


def test_on_from_compatible_pair_trivial():
    co = coadjoint(aff1())
    on0 = on_from_compatible_pair(co, Matrix.zeros(2), COADJ_T2)
    assert on0.N.is_zero() and on0.S.is_zero()
    on1 = on_from_compatible_pair(co, COADJ_T2, COADJ_T2)
    assert on1.N.is_identity() and on1.S.is_identity()
    with pytest.raises(Singular):
        on_from_compatible_pair(co, COADJ_T2, Matrix.zeros(2))


def test_theorem_consequences_for_on():
    # T an O-operator for the tilde action over the deformed algebra,
    # N T an O-operator, T and N T compatible
    from lieop.ooper import are_compatible, o_residual
    from lieop.exactla import is_zero_vec
    cases = [
        (coadjoint(aff1()), on_from_compatible_pair(
            coadjoint(aff1()), COADJ_T1, COADJ_T2)),
        (adjoint(h3()), on_from_compatible_pair(
            adjoint(h3()),
            Matrix([[-1, -1, 0], [-1, 0, 0], [-1, 0, 1]]),
            Matrix([[-1, -1, 0], [-1, 0, 0], [-1, -1, 1]]))),
    ]
    for rep, on in cases:
        tilde = tilde_action(rep, on.N, on.S)
        assert all(is_zero_vec(v) for v in o_residual(tilde, on.T).values())
        assert is_o_operator(rep, on.N * on.T)
        assert are_compatible(rep, on.T, on.N * on.T)


def test_hierarchy_trivial_and_fixture():
    co = coadjoint(aff1())
    ts = hierarchy(co, COADJ_T2, Matrix.identity(2), Matrix.identity(2), 3)
    assert all(t == COADJ_T2 for t in ts)
    rep = adjoint(aff1())
    tz = hierarchy(rep, Matrix.zeros(2), Matrix.identity(2), Matrix.identity(2), 3)
    assert all(t.is_zero() for t in tz)
    on = on_from_compatible_pair(co, COADJ_T1, COADJ_T2)
    ts = hierarchy(co, on.T, on.N, on.S, 3)
    assert len(ts) == 4
    assert all(is_o_operator(co, t) for t in ts)


def test_hierarchy_on_h3():
    rep = adjoint(h3())
    t2 = Matrix([[-1, -1, 0], [-1, 0, 0], [-1, -1, 1]])
    t1 = Matrix([[-1, -1, 0], [-1, 0, 0], [-1, 0, 1]])
    on = on_from_compatible_pair(rep, t1, t2)
    ts = hierarchy(rep, on.T, on.N, on.S, 3)
    assert len(ts) == 4


def test_pn_structure():
    g = h3()
    r = Bivector.from_pairs(3, {(0, 2): 1})
    assert is_pn_structure(g, Bivector.from_pairs(3, {}), Matrix.diag((2, 1, 2)))
    assert is_pn_structure(g, r, Matrix.identity(3))
    assert is_pn_structure(g, r, Matrix.diag((2, 1, 2)))
    assert not is_pn_structure(g, r, Matrix.diag((2, 1, 1)))


def test_pn_structure_oracle_sweep():
    g = aff1()
    idx = [(0, 1)]
    for val in (-1, 0, 1):
        r = Bivector.from_pairs(2, dict(zip(idx, [val])))
        for flat in itertools.product((-1, 0, 1), repeat=4):
            n = Matrix([flat[0:2], flat[2:4]])
            is_pn_structure(g, r, n)  # oracle agreement is the assertion


def test_pn_hierarchy():
    g = h3()
    r = Bivector.from_pairs(3, {(0, 2): 1})
    rs = pn_hierarchy(g, r, Matrix.identity(3), 3)
    assert all(rk == r for rk in rs)
    zs = pn_hierarchy(g, Bivector.from_pairs(3, {}), Matrix.diag((2, 1, 2)), 3)
    assert all(z.is_zero() for z in zs)
    rs = pn_hierarchy(g, r, Matrix.diag((2, 1, 2)), 3)
    assert len(rs) == 4
    assert rs[1].pairs() == {(0, 2): 2}
    assert rs[2].pairs() == {(0, 2): 4}
    assert all(is_r_matrix(g, rk) for rk in rs)
    with pytest.raises(NotPN):
        pn_hierarchy(g, r, Matrix.diag((2, 1, 1)), 2)

"""The shipped fixture library: small Lie algebras, modules over them, and at
least one validated instance of every structure kind the checker knows.

Everything here was found by linear solving plus small-coefficient filtering
and is re-validated by the test suite on every run.  `bundle()` produces the
JSON workspace document the command line tool consumes.
"""

from __future__ import annotations

import json

from .cli import (
    bivector_entries_to_json, lie_algebra_to_json, matrix_to_json,
    triples_to_json, vector_to_json,
)
from .exactla import Matrix
from .liecore import LieAlgebra, Representation, adjoint, coadjoint, trivial_rep
from .onstruct import on_from_compatible_pair, trivial_deformation_from
from .ooper import Bivector, bivector_from_sharp, pre_lie_from_o
from .twilled import twilled_from_o


def ab(n) -> LieAlgebra:
    return LieAlgebra(n, [[[0] * n for _ in range(n)] for _ in range(n)])


def aff1() -> LieAlgebra:
    """[e1, e2] = e2."""
    return LieAlgebra.from_brackets(2, {(0, 1): (0, 1)})


def h3() -> LieAlgebra:
    """Heisenberg: [e1, e2] = e3."""
    return LieAlgebra.from_brackets(3, {(0, 1): (0, 0, 1)})


def sl2() -> LieAlgebra:
    """[h, e] = 2e, [h, f] = -2f, [e, f] = h in the basis (h, e, f)."""
    return LieAlgebra.from_brackets(3, {
        (0, 1): (0, 2, 0), (0, 2): (0, 0, -2), (1, 2): (1, 0, 0)})


def h3_rep2(g=None) -> Representation:
    """A two-dimensional module over the Heisenberg algebra."""
    g = g or h3()
    return Representation(g, 2, [Matrix([[0, 1], [0, 0]]),
                                 Matrix.zeros(2), Matrix.zeros(2)])


ROT = Matrix([[0, -1], [1, 0]])

AFF1_ADJ_T = Matrix([[0, 0], [1, 0]])
AFF1_COADJ_T1 = Matrix([[0, 0], [0, 1]])
AFF1_COADJ_T2 = Matrix([[0, -1], [1, 0]])
H3_ADJ_T = Matrix([[0, 0, 0], [1, 0, 0], [0, 0, 0]])
H3_ADJ_T1 = Matrix([[-1, -1, 0], [-1, 0, 0], [-1, 0, 1]])
H3_ADJ_T2 = Matrix([[-1, -1, 0], [-1, 0, 0], [-1, -1, 1]])
H3_COADJ_T = Matrix([[0, 0, -1], [0, 0, -1], [0, -1, -1]])
SL2_COADJ_T = Matrix([[-1, -1, -1], [-1, -1, -1], [-1, -1, -1]])

AFF1_N = Matrix([[1, 0], [0, 0]])
H3_N = Matrix.diag((2, 1, 2))
SL2_N = Matrix.diag((1, 1, 2))

AFF1_NS_S = Matrix([[1, 0], [1, 1]])           # Eq-(20) partner for AFF1_N
AFF1_DEFORM_S = Matrix([[1, 0], [-1, 1]])      # Eq-(15) partner for AFF1_N

AFF1_ADJ_B = Matrix([[0, 0], [1, 0]])          # gauge cocycle on the adjoint
AFF1_COADJ_B = Matrix([[1, 0], [0, 0]])        # gauge cocycle on the coadjoint

AFF1_ADJ_OMEGA = Matrix([[0, 0], [-2, -2]])    # strong MC solution for AFF1_ADJ_T

J4 = Matrix([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
HOLO4_SHARP_I = Matrix([[0, 0, 1, 0], [0, 0, 0, -1],
                        [-1, 0, 0, 0], [0, 1, 0, 0]])


def standard_fixtures():
    """Live objects for tests: algebras, reps, and structure instances."""
    algebras = {"ab2": ab(2), "ab4": ab(4), "aff1": aff1(), "h3": h3(), "sl2": sl2()}
    reps = {
        "ab2_triv2": trivial_rep(algebras["ab2"], 2),
        "aff1_adj": adjoint(algebras["aff1"]),
        "aff1_coadj": coadjoint(algebras["aff1"]),
        "aff1_triv2": trivial_rep(algebras["aff1"], 2),
        "h3_adj": adjoint(algebras["h3"]),
        "h3_coadj": coadjoint(algebras["h3"]),
        "h3_rep2": h3_rep2(algebras["h3"]),
        "sl2_adj": adjoint(algebras["sl2"]),
        "sl2_coadj": coadjoint(algebras["sl2"]),
    }
    o_operators = {
        "aff1_adj_T": ("aff1_adj", AFF1_ADJ_T),
        "aff1_coadj_T1": ("aff1_coadj", AFF1_COADJ_T1),
        "aff1_coadj_T2": ("aff1_coadj", AFF1_COADJ_T2),
        "h3_adj_T": ("h3_adj", H3_ADJ_T),
        "h3_adj_T1": ("h3_adj", H3_ADJ_T1),
        "h3_adj_T2": ("h3_adj", H3_ADJ_T2),
        "h3_coadj_T": ("h3_coadj", H3_COADJ_T),
        "sl2_coadj_T": ("sl2_coadj", SL2_COADJ_T),
    }
    return algebras, reps, o_operators


def bundle() -> dict:
    """The JSON workspace document shipping every fixture kind."""
    algebras, reps, o_ops = standard_fixtures()
    objects = {}
    for name, g in algebras.items():
        objects[name] = lie_algebra_to_json(g)
    rep_algebra = {"ab2_triv2": "ab2", "aff1_adj": "aff1", "aff1_coadj": "aff1",
                   "aff1_triv2": "aff1", "h3_adj": "h3", "h3_coadj": "h3",
                   "h3_rep2": "h3", "sl2_adj": "sl2", "sl2_coadj": "sl2"}
    for name, rep in reps.items():
        objects[name] = {"kind": "representation", "algebra_ref": rep_algebra[name],
                         "dim": rep.dim_m,
                         "actions": [matrix_to_json(a) for a in rep.action]}
    for name, (rep_name, t) in o_ops.items():
        objects[name] = {"kind": "o_operator", "rep_ref": rep_name,
                         "matrix": matrix_to_json(t)}

    objects["aff1_r"] = {"kind": "bivector", "algebra_ref": "aff1", "dim": 2,
                         "entries": bivector_entries_to_json(
                             Bivector.from_pairs(2, {(0, 1): 1}))}
    objects["h3_r"] = {"kind": "bivector", "algebra_ref": "h3", "dim": 3,
                       "entries": bivector_entries_to_json(
                           Bivector.from_pairs(3, {(0, 2): 1}))}
    objects["sl2_r"] = {"kind": "bivector", "algebra_ref": "sl2", "dim": 3,
                        "entries": bivector_entries_to_json(
                            Bivector.from_pairs(3, {(0, 1): 1}))}

    objects["aff1_adj_B"] = {"kind": "linmap", "matrix": matrix_to_json(AFF1_ADJ_B)}
    objects["aff1_coadj_B"] = {"kind": "linmap", "matrix": matrix_to_json(AFF1_COADJ_B)}

    objects["aff1_N"] = {"kind": "nijenhuis", "algebra_ref": "aff1",
                         "matrix": matrix_to_json(AFF1_N)}
    objects["h3_N"] = {"kind": "nijenhuis", "algebra_ref": "h3",
                       "matrix": matrix_to_json(H3_N)}
    objects["sl2_N"] = {"kind": "nijenhuis", "algebra_ref": "sl2",
                        "matrix": matrix_to_json(SL2_N)}

    objects["aff1_ns"] = {"kind": "nijenhuis_structure", "rep_ref": "aff1_adj",
                          "n": matrix_to_json(AFF1_N),
                          "s": matrix_to_json(AFF1_NS_S)}
    objects["h3_ns"] = {"kind": "nijenhuis_structure", "rep_ref": "h3_coadj",
                        "n": matrix_to_json(H3_N),
                        "s": matrix_to_json(H3_N.transpose())}

    on_aff1 = on_from_compatible_pair(reps["aff1_coadj"], AFF1_COADJ_T1, AFF1_COADJ_T2)
    on_h3 = on_from_compatible_pair(reps["h3_adj"], H3_ADJ_T1, H3_ADJ_T2)
    objects["aff1_on"] = {"kind": "on_structure", "rep_ref": "aff1_coadj",
                          "t": matrix_to_json(on_aff1.T),
                          "n": matrix_to_json(on_aff1.N),
                          "s": matrix_to_json(on_aff1.S)}
    objects["h3_on"] = {"kind": "on_structure", "rep_ref": "h3_adj",
                        "t": matrix_to_json(on_h3.T),
                        "n": matrix_to_json(on_h3.N),
                        "s": matrix_to_json(on_h3.S)}
    objects["aff1_on_id"] = {"kind": "on_structure", "rep_ref": "aff1_adj",
                             "t": matrix_to_json(AFF1_ADJ_T),
                             "n": matrix_to_json(Matrix.identity(2)),
                             "s": matrix_to_json(Matrix.identity(2))}

    objects["h3_pn"] = {"kind": "pn_structure", "algebra_ref": "h3",
                        "r": bivector_entries_to_json(Bivector.from_pairs(3, {(0, 2): 1})),
                        "n": matrix_to_json(H3_N)}

    prelie = pre_lie_from_o(reps["aff1_coadj"], AFF1_COADJ_T2)
    objects["aff1_prelie"] = {"kind": "pre_lie", "dim": 2,
                              "products": triples_to_json(2, prelie.p)}

    deform = trivial_deformation_from(reps["aff1_adj"], AFF1_N, AFF1_DEFORM_S)
    objects["aff1_deform"] = {
        "kind": "deformation", "rep_ref": "aff1_adj",
        "bracket1": triples_to_json(2, deform.bracket1),
        "action1": [matrix_to_json(m) for m in deform.action1]}

    tw = twilled_from_o(reps["aff1_adj"], AFF1_ADJ_T)
    objects["aff1_tw_total"] = lie_algebra_to_json(tw.total)
    ident4 = Matrix.identity(4)
    objects["aff1_tw"] = {
        "kind": "twilled", "total_ref": "aff1_tw_total",
        "a_basis": [vector_to_json(ident4.row(i)) for i in range(2)],
        "b_basis": [vector_to_json(ident4.row(2 + i)) for i in range(2)]}
    objects["h3_tw"] = {
        "kind": "twilled", "total_ref": "h3",
        "a_basis": [vector_to_json((1, 0, 0)), vector_to_json((0, 0, 1))],
        "b_basis": [vector_to_json((0, 1, 0))]}

    objects["aff1_mc"] = {"kind": "mc_solution", "twilled_ref": "aff1_tw",
                          "omega": matrix_to_json(AFF1_ADJ_OMEGA)}

    objects["aff1_gcs"] = {
        "kind": "gcs_module", "rep_ref": "aff1_coadj",
        "n": matrix_to_json(Matrix.zeros(2)),
        "t": matrix_to_json(AFF1_COADJ_T2),
        "sigma": matrix_to_json(Matrix([[0, -1], [1, 0]])),
        "s": matrix_to_json(Matrix.zeros(2))}
    objects["ab2_gcs"] = {
        "kind": "gcs_module", "rep_ref": "ab2_triv2",
        "n": matrix_to_json(ROT),
        "t": matrix_to_json(Matrix.zeros(2)),
        "sigma": matrix_to_json(Matrix.zeros(2)),
        "s": matrix_to_json(-ROT)}

    objects["ab2_gcslie"] = {
        "kind": "gcs_lie", "algebra_ref": "ab2",
        "n": matrix_to_json(Matrix.zeros(2)),
        "r": bivector_entries_to_json(Bivector.from_pairs(2, {(0, 1): 1})),
        "sigma2": bivector_entries_to_json(Bivector.from_pairs(2, {(0, 1): 1}))}
    objects["ab2_gcslie_cx"] = {
        "kind": "gcs_lie", "algebra_ref": "ab2",
        "n": matrix_to_json(ROT), "r": [], "sigma2": []}

    objects["ab2_cx"] = {"kind": "complex_pair", "rep_ref": "ab2_triv2",
                         "i": matrix_to_json(ROT), "i_m": matrix_to_json(ROT)}
    objects["aff1_cx"] = {"kind": "complex_pair", "rep_ref": "aff1_coadj",
                          "i": matrix_to_json(ROT), "i_m": matrix_to_json(ROT)}

    objects["ab2_holo_o"] = {
        "kind": "holo_o", "rep_ref": "ab2_triv2",
        "j": matrix_to_json(ROT), "j_m": matrix_to_json(ROT),
        "t_r": matrix_to_json(ROT), "t_i": matrix_to_json(Matrix.identity(2))}

    ri = bivector_from_sharp(HOLO4_SHARP_I)
    rr = bivector_from_sharp(HOLO4_SHARP_I * J4.transpose())
    objects["ab4_holo_r"] = {
        "kind": "holo_r", "algebra_ref": "ab4", "j": matrix_to_json(J4),
        "r_r": bivector_entries_to_json(rr),
        "r_i": bivector_entries_to_json(ri)}

    objects["h3_center"] = {"kind": "subspace", "ambient": 3,
                            "basis": [vector_to_json((0, 0, 1))]}
    objects["h3_sub"] = {"kind": "subspace", "ambient": 3,
                         "basis": [vector_to_json((1, 0, 0)), vector_to_json((0, 0, 1))]}
    objects["h3_submod"] = {"kind": "subspace", "ambient": 3,
                            "basis": [vector_to_json((0, 1, 0)), vector_to_json((0, 0, 1))]}
    objects["h3_full"] = {"kind": "subspace", "ambient": 3,
                          "basis": [vector_to_json(v) for v in Matrix.identity(3).entries]}
    objects["h3_zero"] = {"kind": "subspace", "ambient": 3, "basis": []}

    objects["h3_cochain"] = {"kind": "cochain", "degree": 2, "source_dim": 3,
                             "target_dim": 3,
                             "values": [[[0, 1], vector_to_json((0, 0, 1))]]}
    return {"objects": objects}


def bundle_json() -> str:
    return json.dumps(bundle(), sort_keys=True, separators=(",", ":")) + "\n"


def write_bundle(path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(bundle_json())

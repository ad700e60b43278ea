import numpy as np
import pytest

from etmaps.etclass import ALL_CLASSES, EtClass, basic_map, classify, omega_act
from etmaps.flagmap import are_isomorphic
from etmaps.groupzoo import alternating, load_fixture, psl2, symmetric
from etmaps.parent import (
    GeneratorTuple,
    TransferError,
    TupleError,
    build_map,
    class_spec,
    forbidden_automorphism,
    forbidden_automorphism_exists,
    gamma_inverse,
    gamma_normal_form,
    is_strongly_real,
    load_tuple,
    omega_transform_tuple,
    save_tuple,
    transfer_witness,
    trivial_tuple,
    tuple_from_dict,
    validate_tuple,
)
from etmaps.permcore import PermGroup, Permutation
from etmaps.search import search_class_tuples
from conftest import A7_PAIR, TRIPLES, perms


def first_witness(G, T, **kw):
    res = search_class_tuples(G, T, "budgeted", seed=1, limit=20000, stop_at_first=True, **kw)
    assert res.witness is not None
    return validate_tuple(res.witness, G)


# ---- the parent group Gamma -----------------------------------------------------

def test_gamma_normal_form():
    # r0 r2 = r2 r0 and all generators are involutions
    assert gamma_normal_form("02") == gamma_normal_form("20")
    assert gamma_normal_form("11") == gamma_normal_form("")
    assert gamma_normal_form("0120") != gamma_normal_form("12")
    w = "01210"
    assert gamma_normal_form(w + gamma_inverse(w)) == gamma_normal_form("")


@pytest.mark.parametrize("T", ALL_CLASSES)
def test_trivial_group_rebuilds_basic_map(T):
    assert build_map(trivial_tuple(T)) == basic_map(T)


def test_class3_forbidden_patterns_are_double_transpositions():
    pats = class_spec("3").forbidden
    perms_ = sorted(tuple(k for k, _ in p) for p in pats)
    assert perms_ == [(1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)]
    assert class_spec("1").forbidden == ()


# ---- validation ----------------------------------------------------------------------

def test_a6_triple_valid(A6):
    t = validate_tuple(GeneratorTuple("2", perms(TRIPLES[6], 6)), A6)
    assert t.validated
    assert forbidden_automorphism(t, A6) is None


def test_a7_pair_valid():
    A7 = alternating(7)
    t = validate_tuple(GeneratorTuple("5", perms(A7_PAIR, 7)), A7)
    assert not forbidden_automorphism_exists(t, A7)


def test_relation_errors(A5):
    a, b, c = (Permutation.from_cycles(x, 5) for x in ("(1,2)(3,4)", "(1,3)(2,5)", "(2,3)(4,5)"))
    # r0 r2 of order > 2
    assert (a * c).order() > 2
    with pytest.raises(TupleError) as exc:
        validate_tuple(GeneratorTuple("1", (a, b, c)), A5)
    assert exc.value.relation
    with pytest.raises(TupleError) as exc:
        validate_tuple(GeneratorTuple("2", (a, b)), A5)
    assert exc.value.relation == "arity"
    with pytest.raises(TupleError) as exc:
        validate_tuple(GeneratorTuple("2", (a, a, a)), A5)
    assert exc.value.relation == "generation"
    g = Permutation.from_cycles("(1,2,3)", 5)
    with pytest.raises(TupleError):
        validate_tuple(GeneratorTuple("2", (g, a, b)), A5)


def test_class1_has_no_forbidden_automorphism(A5):
    t = first_witness(A5, "1")
    assert not forbidden_automorphism_exists(t, A5)


@pytest.mark.parametrize("q", [5, 7, 8])
def test_psl2_pairs_always_forbidden(q):
    G = psl2(q)
    res = search_class_tuples(G, "5", "budgeted", seed=q, limit=300, max_witnesses=0)
    assert res.generating > 0 and res.admissible == 0


# ---- maps from tuples ---------------------------------------------------------------------

def test_a5_mazurov_map(A5):
    t = first_witness(A5, "1")
    M = build_map(t, A5)
    assert M.flag_count == 60 and M.is_regular()
    assert classify(M) == EtClass.ONE


def test_a7_class5_map():
    A7 = alternating(7)
    M = build_map(GeneratorTuple("5", perms(A7_PAIR, 7)), A7)
    assert M.flag_count == 4 * 2520
    assert classify(M) == EtClass.FIVE
    assert M.automorphism_order() == 2520


@pytest.mark.parametrize("T, n", [("1", 5), ("2", 6), ("3", 6), ("4", 6), ("4P", 6), ("5*", 7), ("2Pex", 8),
                                  ("2*", 6)])
def test_roundtrip_alternating(T, n):
    G = alternating(n)
    t = first_witness(G, T)
    M = build_map(t, G)
    assert M.automorphism_order() == G.order()
    assert classify(M) == t.cls


def test_forbidden_tuple_classifies_elsewhere():
    S3 = symmetric(3)
    t = GeneratorTuple("2Pex", (Permutation.from_cycles("(1,2,3)", 3), Permutation.from_cycles("(1,2)", 3)))
    t = validate_tuple(t, S3)
    assert forbidden_automorphism_exists(t, S3)
    M = build_map(t, S3)
    assert classify(M) != EtClass.TWO_P_EX
    assert M.is_regular()


# ---- Omega relabelling --------------------------------------------------------------------

def test_omega_transform(A6):
    t = validate_tuple(GeneratorTuple("2", perms(TRIPLES[6], 6)), A6)
    d = omega_transform_tuple(t, "D")
    assert d.cls == EtClass.TWO_STAR
    assert omega_transform_tuple(d, "D") == t
    assert are_isomorphic(build_map(d, A6), build_map(t, A6).dual())


def test_omega_transform_petrie_chiral():
    A8 = alternating(8)
    t = first_witness(A8, "2Pex")
    p = omega_transform_tuple(t, "P")
    assert p.cls == EtClass.TWO_STAR_EX
    assert are_isomorphic(build_map(p, A8), build_map(t, A8).petrie())
    assert classify(build_map(p, A8)) == EtClass.TWO_STAR_EX


# ---- transfers ----------------------------------------------------------------------------

def test_transfer_mazurov_to_class2(A5):
    t = first_witness(A5, "1")
    u = transfer_witness(t, "2", A5)
    s1, s2, s3 = u.images
    assert (s1 * s3).order() <= 2 and (s2 * s3).order() > 2
    assert classify(build_map(u, A5)) == EtClass.TWO


def test_transfer_chiral_a8_to_class5():
    A8 = alternating(8)
    t = first_witness(A8, "2*ex")
    u = transfer_witness(t, "5", A8)
    assert u.cls == EtClass.FIVE
    assert classify(build_map(u, A8)) == EtClass.FIVE


def test_transfer_chiral_m11_to_class2():
    M11 = load_fixture("M11")
    t = first_witness(M11, "2Pex")
    x = t.images[0]
    assert is_strongly_real(M11, x) is not None
    u = transfer_witness(t, "2", M11)
    assert u.validated and not forbidden_automorphism_exists(u, M11)


@pytest.mark.parametrize("target", ["2*", "3", "4", "4P"])
def test_transfer_results_validate(A6, target):
    t = validate_tuple(GeneratorTuple("2", perms(TRIPLES[6], 6)), A6)
    u = transfer_witness(t, target, A6)
    assert u.cls == EtClass.parse(target)
    assert validate_tuple(u, A6).validated
    assert not forbidden_automorphism_exists(u, A6)


def test_transfer_refuses_unknown_route(A6):
    t = validate_tuple(GeneratorTuple("2", perms(TRIPLES[6], 6)), A6)
    with pytest.raises(TransferError):
        transfer_witness(t, "1", A6)


def test_strongly_real():
    A4 = alternating(4)
    x = Permutation.from_cycles("(1,2,3)", 4)
    assert is_strongly_real(A4, x) is None
    inv = Permutation.from_cycles("(1,2)(3,4)", 4)
    a = is_strongly_real(A4, inv)
    assert a is not None and a * inv * a == inv
    A7 = alternating(7)
    b = Permutation.from_cycles("(1,2,3)(4,5)(6,7)", 7)
    a = is_strongly_real(A7, b)
    assert a is not None and a * b * a == b.inverse()
    # U3(3) has a single class of elements of order 6 and none is inverted by an involution
    U = load_fixture("U3_3")
    table = U.element_table()
    six = np.flatnonzero(table.orders == 6)
    assert len(np.unique(table.conjugacy_labels[six])) == 1
    assert is_strongly_real(U, table.perm(int(six[0]))) is None


# ---- I/O -------------------------------------------------------------------------------------

def test_tuple_file_roundtrip(tmp_path, A6):
    t = GeneratorTuple("2", perms(TRIPLES[6], 6))
    path = tmp_path / "t.json"
    save_tuple(t, path, group_name="A6")
    assert load_tuple(path) == t
    doc = {"class": "2", "generators": list(TRIPLES[6]), "degree": 6}
    assert tuple_from_dict(doc) == t

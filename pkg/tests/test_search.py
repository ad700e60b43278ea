import json
import math

import numpy as np
import pytest

from etmaps.etclass import EtClass
from etmaps.groupzoo import alternating, psl2
from etmaps.parent import GeneratorTuple, forbidden_automorphism_exists, validate_tuple
from etmaps.permcore import PermGroup, Permutation
from etmaps.search import (
    InfeasibleSearch,
    Verdict,
    count_maps_up_to_iso,
    enumerate_mazurov_triples,
    exhaustive_work,
    jordan_certificate,
    jordan_witness,
    mazurov_count,
    expected_membership,
    search_class_tuples,
    table_report,
    verify_table_row,
    verify_witness,
)
from conftest import TRIPLES, perms

# m(A5): generating involution triples with r0 r2 = r2 r0, by exhaustive enumeration
M_A5 = 360


def test_mazurov_counts(A5, A6):
    assert mazurov_count(A6) == 0
    assert mazurov_count(psl2(7)) == 0
    assert mazurov_count(A5) == M_A5
    assert sum(1 for _ in enumerate_mazurov_triples(A5)) == M_A5


def test_mazurov_count_invariant_under_relabelling(A5):
    rng = np.random.default_rng(11)
    for _ in range(2):
        g = Permutation(rng.permutation(5))
        H = PermGroup([x.conjugate(g) for x in A5.generators], 5)
        assert mazurov_count(H) == M_A5


def test_maps_up_to_isomorphism(A5, A6):
    assert count_maps_up_to_iso(A6, "1", enumerate_mazurov_triples(A6)) == 0
    n = count_maps_up_to_iso(A5, "1", enumerate_mazurov_triples(A5), aut_order=120)
    assert n * 120 == M_A5
    trivial = PermGroup([], 1)
    one = [(Permutation.identity(1),) * 3]
    assert count_maps_up_to_iso(trivial, "1", one) == 1


def test_a7_chiral_pairs_all_inverted():
    A7 = alternating(7)
    res = search_class_tuples(A7, "2Pex", "exhaustive")
    assert res.complete and res.generating_total > 0 and res.admissible_total == 0


def test_psl2_5_class5_empty():
    res = search_class_tuples(psl2(5), "5", "exhaustive")
    assert res.complete and res.admissible_total == 0


def test_a6_class2_triple_found(A6):
    res = search_class_tuples(A6, "2", "exhaustive", stop_at_first=True)
    assert res.witness is not None
    t = validate_tuple(GeneratorTuple("2", perms(TRIPLES[6], 6)), A6)
    assert not forbidden_automorphism_exists(t, A6)


@pytest.mark.parametrize("G, T", [(psl2(7), "1"), (alternating(7), "2Pex"), (psl2(8), "5")])
def test_verdict_stable_under_reversed_order(G, T):
    fwd = search_class_tuples(G, T, "exhaustive")
    rev = search_class_tuples(G, T, "exhaustive", reverse=True)
    assert (fwd.generating_total, fwd.admissible_total) == (rev.generating_total, rev.admissible_total)


def test_budgeted_is_reproducible(A6):
    a = search_class_tuples(A6, "4", "budgeted", seed=5, limit=200, max_witnesses=3)
    b = search_class_tuples(A6, "4", "budgeted", seed=5, limit=200, max_witnesses=3)
    assert a.witnesses == b.witnesses and a.admissible == b.admissible
    json.dumps(a.to_dict())


def test_infeasible_exhaustive_refused(A6):
    with pytest.raises(InfeasibleSearch) as exc:
        search_class_tuples(A6, "3", "exhaustive", work_limit=10)
    assert exc.value.work > 10
    tuples, work = exhaustive_work(A6, "3")
    assert work > 10 and tuples > 0


# ---- Jordan -------------------------------------------------------------------

@pytest.mark.parametrize("n", [6, 7, 8])
def test_jordan_on_triples(n):
    H = PermGroup(perms(TRIPLES[n], n), n)
    assert jordan_certificate(H)
    assert H.order() in (math.factorial(n) // 2, math.factorial(n))


def test_jordan_a8_via_five_cycle():
    H = PermGroup(perms(TRIPLES[8], 8), 8)
    w = jordan_witness(H)
    s1, s2, s3 = perms(TRIPLES[8], 8)
    assert sorted(len(c) for c in (s2 * s3).cycles() if len(c) > 1) == [5]
    assert w is not None and len(w.fixed_points()) >= 3


def test_jordan_a6_three_cycle():
    s1, s2, s3 = perms(TRIPLES[6], 6)
    assert (s2 * s3).to_cycle_string() == "(2,6,3)"
    assert len((s2 * s3).fixed_points()) == 3


def test_jordan_cyclic_false():
    C7 = PermGroup([Permutation(list(range(1, 7)) + [0])], 7)
    assert not jordan_certificate(C7)


# ---- table rows ------------------------------------------------------------------

@pytest.mark.parametrize("group, T, verdict", [("A6", "1", Verdict.NOT_REALIZED), ("U3_3", "4", Verdict.REALIZED),
                                               ("U3_3", "2", Verdict.NOT_REALIZED), ("A5", "2ex", Verdict.NOT_REALIZED),
                                               ("M11", "3", Verdict.REALIZED)])
def test_verify_table_row(group, T, verdict):
    v = verify_table_row(group, T)
    assert v.verdict == verdict and v.agrees
    if verdict == Verdict.REALIZED:
        assert v.roundtrip["ok"] and v.witness.cls == EtClass.parse(T)
    text, doc = table_report([v])
    assert group in text and doc["cells"][0]["verdict"] == str(verdict)
    json.dumps(doc)


def test_expected_membership():
    assert not expected_membership("U3_3", "2*")
    assert expected_membership("U3_3", "5P")
    assert not expected_membership("psl2_11", "5")
    assert expected_membership("A8", "2*ex")


def test_verify_witness_fields(A6):
    out = verify_witness(GeneratorTuple("2", perms(TRIPLES[6], 6)), A6)
    assert out["ok"] and out["aut_order"] == 360 and out["classified"] == "2"

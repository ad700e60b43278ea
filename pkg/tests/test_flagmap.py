import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from etmaps.etclass import basic_map
from etmaps.flagmap import FlagMap, MapError, are_isomorphic, build_map, map_isomorphism
from etmaps.groupzoo import alternating
from etmaps.parent import GeneratorTuple, build_map as build_from_tuple
from etmaps.search import search_class_tuples
from conftest import TRIPLES, map_fixture, perms


def one_flag():
    return FlagMap([0], [0], [0])


def partition(part):
    return sorted(tuple(sorted(x)) for x in part)


FIXTURES = ("tetrahedron", "hemi_icosahedron", "path3")


def all_fixture_maps():
    return [map_fixture(n) for n in FIXTURES] + [basic_map(T) for T in ("1", "2", "2*", "3", "4P", "5")]


# ---- construction -------------------------------------------------------------

def test_one_flag_map():
    M = one_flag()
    assert M.flag_count == 1
    assert M.cells.counts() == (1, 1, 1)
    assert M.has_boundary()
    with pytest.raises(MapError):
        M.surface()


def test_presentation_enforced():
    # r0 = (0 1), r2 = (1 2): r0 r2 has order 3
    with pytest.raises(MapError) as exc:
        FlagMap([1, 0, 2], [0, 1, 2], [0, 2, 1])
    assert exc.value.relation


def test_non_involution_rejected():
    with pytest.raises(MapError):
        FlagMap([1, 2, 0], [0, 1, 2], [0, 1, 2])


def test_disconnected_rejected():
    with pytest.raises(MapError) as exc:
        FlagMap([1, 0, 3, 2], [0, 1, 2, 3], [0, 1, 2, 3])
    assert "component" in str(exc.value)


def test_declared_flag_count():
    with pytest.raises(MapError):
        build_map(3, [1, 0], [0, 1], [0, 1])


# ---- cells and surfaces ----------------------------------------------------------

def test_tetrahedron(tetrahedron):
    M = tetrahedron
    assert M.flag_count == 24
    assert M.cells.counts() == (4, 6, 4)
    assert M.euler_characteristic() == 2
    assert M.is_orientable() and not M.has_boundary()
    s = M.surface()
    assert s.orientable and s.value == 0 and str(s) == "genus 0"
    assert M.automorphism_order() == 24 and M.is_regular()


def test_hemi_icosahedron(hemi_icosahedron):
    M = hemi_icosahedron
    assert M.cells.counts() == (6, 15, 10)
    assert M.euler_characteristic() == 1
    assert not M.is_orientable()
    s = M.surface()
    assert not s.orientable and str(s) == "crosscap 1"


def test_class2_basic_map():
    M = basic_map("2")
    assert M.flag_count == 2
    assert list(M.r0) == [1, 0] and list(M.r1) == [0, 1] and list(M.r2) == [0, 1]
    assert M.cells.counts() == (2, 1, 1)


def test_edge_orbits_bounded():
    for M in all_fixture_maps():
        assert max(len(e) for e in M.cells.edges) <= 4


# ---- operations ----------------------------------------------------------------------

@pytest.mark.parametrize("M", all_fixture_maps(), ids=lambda m: m.name or "map")
def test_dual_and_petrie_are_involutions(M):
    assert M.dual().dual() == M
    assert M.petrie().petrie() == M
    assert partition(M.petrie().cells.faces) == partition(M.cells.petrie_polygons)
    assert partition(M.dual().cells.vertices) == partition(M.cells.faces)
    assert M.dual().euler_characteristic() == M.euler_characteristic()


def test_petrie_orientability_and_bipartite(tetrahedron):
    # K4 is not bipartite, so the Petrie dual of the tetrahedron is non-orientable
    assert tetrahedron.is_orientable() and not tetrahedron.petrie().is_orientable()
    cube_like = basic_map("2")  # a single edge with two distinct ends: bipartite
    assert cube_like.petrie().is_orientable() == cube_like.is_orientable()


def test_isomorphism(tetrahedron):
    assert are_isomorphic(tetrahedron, tetrahedron)
    phi = map_isomorphism(tetrahedron, tetrahedron.dual())
    assert phi is not None
    D = tetrahedron.dual()
    for a, b in zip(tetrahedron.gens, D.gens):
        assert np.array_equal(phi[a], b[phi])
    assert not are_isomorphic(basic_map("2"), basic_map("2*"))


@settings(max_examples=15, deadline=None)
@given(st.permutations(list(range(24))), st.permutations(list(range(24))))
def test_isomorphism_is_equivalence(p1, p2, ):
    M = map_fixture("tetrahedron")

    def relabel(M, p):
        p = np.asarray(p)
        inv = np.argsort(p)
        return FlagMap(*(p[r[inv]] for r in M.gens))

    M1, M2 = relabel(M, p1), relabel(M, p2)
    assert are_isomorphic(M, M1) and are_isomorphic(M1, M)
    assert are_isomorphic(M1, M2)
    assert not are_isomorphic(M1, M.petrie())


# ---- automorphisms -----------------------------------------------------------------

def test_automorphism_groups(tetrahedron, A5):
    assert one_flag().automorphism_order() == 1
    A = tetrahedron.automorphism_group()
    assert A.order() == 24 and A.is_transitive()
    res = search_class_tuples(A5, "1", "exhaustive", stop_at_first=True)
    M = build_from_tuple(res.witness, A5)
    assert M.flag_count == 60 and M.automorphism_order() == 60


@pytest.mark.parametrize("M", all_fixture_maps(), ids=lambda m: m.name or "map")
def test_aut_semiregular_and_divides(M):
    A = M.automorphism_group()
    for g in A.generators:
        if not g.is_identity():
            assert not g.fixed_points()
    assert M.flag_count % M.automorphism_order() == 0
    assert (M.automorphism_order() == M.flag_count) == M.is_regular()


def test_quotients(tetrahedron, A6):
    Q = tetrahedron.quotient()
    assert Q.flag_count == 1
    path = map_fixture("path3")
    # end-to-end reflection and the flip across the path
    assert path.automorphism_order() == 4
    trivial = FlagMap([0, 2, 1, 3, 4, 5], [1, 0, 4, 5, 2, 3], [0, 1, 2, 3, 5, 4])
    assert trivial.automorphism_order() == 1 and trivial.quotient() == trivial
    M = build_from_tuple(GeneratorTuple("2", perms(TRIPLES[6], 6)), A6)
    Q = M.quotient()
    assert Q.flag_count == 2 and are_isomorphic(Q, basic_map("2"))


def test_quotient_labels_canonical(tetrahedron):
    Q = map_fixture("path3").quotient()
    # orbit labels are ordered by smallest member
    labels = map_fixture("path3").automorphism_labels()
    firsts = [int(np.flatnonzero(labels == k)[0]) for k in range(Q.flag_count)]
    assert firsts == sorted(firsts)

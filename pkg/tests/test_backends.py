import json
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from etmaps import _kernels as K

pytestmark = pytest.mark.skipif(not K.HAVE_NUMBA, reason="numba not installed")


@st.composite
def action_maps(draw, max_n=40):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, 3))
    seed = draw(st.integers(0, 2 ** 32 - 1))
    rng = np.random.default_rng(seed)
    return np.stack([rng.permutation(n) for _ in range(k)]).astype(np.int64)


@settings(max_examples=80, deadline=None)
@given(action_maps(), st.data())
def test_closure_and_orbits_agree(maps, data):
    n = maps.shape[1]
    start = data.draw(st.integers(0, n - 1))
    limit = data.draw(st.integers(0, n))
    assert np.array_equal(K.closure_mask_numba(maps, start), K.closure_mask_numpy(maps, start))
    assert K.closure_exceeds_numba(maps, start, limit) == K.closure_exceeds_numpy(maps, start, limit)
    assert np.array_equal(K.orbit_labels_numba(maps), K.orbit_labels_numpy(maps))


@settings(max_examples=80, deadline=None)
@given(action_maps(max_n=12), st.data())
def test_extension_agrees(src, data):
    n = src.shape[1]
    # a relabelled copy always admits an extension; a random target usually not
    p = np.random.default_rng(data.draw(st.integers(0, 1000))).permutation(n)
    inv = np.argsort(p)
    dst = p[src[:, inv]]
    for target in (dst, np.roll(src, 1, axis=0)):
        a = data.draw(st.integers(0, n - 1))
        b = data.draw(st.integers(0, n - 1))
        ok1, phi1 = K.extend_equivariant_numba(src, target, a, b)
        ok2, phi2 = K.extend_equivariant_numpy(src, target, a, b)
        assert bool(ok1) == bool(ok2)
        if ok1:
            assert np.array_equal(phi1, phi2)


@settings(max_examples=40, deadline=None)
@given(action_maps(max_n=30))
def test_element_orders_agree(maps):
    assert np.array_equal(K.element_orders_numba(maps), K.element_orders_numpy(maps))


def test_backend_switch_end_to_end():
    code = ("import json; from etmaps import _kernels; from etmaps.groupzoo import alternating, psl2;"
            "from etmaps.search import mazurov_count, search_class_tuples;"
            "r = search_class_tuples(psl2(8), '5', 'exhaustive');"
            "print(json.dumps([_kernels.backend(), mazurov_count(alternating(5)), r.generating_total, r.admissible_total]))")
    out = {}
    for flag in ("1", "0"):
        env = dict(os.environ, ETMAPS_NUMBA=flag)
        res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        out[flag] = json.loads(res.stdout)
    assert out["1"][0] == "numba" and out["0"][0] == "numpy"
    assert out["1"][1:] == out["0"][1:]

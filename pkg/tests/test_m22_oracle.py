"""Brute-force check of the M22 structure constants in a genuine M22.

M24 is generated by x -> x+1, x -> 2x, x -> -1/x on the projective line over
GF(23) together with the map fixing 0 and infinity that sends x to x^3/9 on
squares and 9x^3 on non-squares.  M22 is the stabiliser of infinity and 0.
"""

import pytest

from etmaps.chartab import brute_force_count, builtin_table, frobenius_count, match_classes
from etmaps.permcore import PermGroup, Permutation

INF = 23
SQUARES = {x * x % 23 for x in range(1, 23)}


def _perm(f):
    return Permutation([f(x) for x in range(24)])


def _m24_generators():
    def shift(x):
        return INF if x == INF else (x + 1) % 23

    def double(x):
        return INF if x == INF else 2 * x % 23

    def flip(x):
        if x == INF:
            return 0
        return INF if x == 0 else -pow(x, -1, 23) % 23

    def delta(x):
        if x in (0, INF):
            return x
        return x ** 3 * pow(9, -1, 23) % 23 if x in SQUARES else 9 * x ** 3 % 23

    return [_perm(f) for f in (shift, double, flip, delta)]


@pytest.fixture(scope="module")
def m22():
    M24 = PermGroup(_m24_generators(), 24)
    assert M24.order() == 244823040
    H = M24.stabilizer(INF).stabilizer(0)
    G = PermGroup(list(H.generators), 24, name="M22")
    assert G.order() == 443520
    return G


@pytest.mark.slow
@pytest.mark.parametrize("c", ["7A", "7B"])
def test_m22_structure_constant_brute_force(m22, c):
    tab = builtin_table("M22")
    classes = match_classes(tab, m22)
    n = frobenius_count(tab, "2A", "6A", c)
    assert n == brute_force_count(m22, "2A", "6A", c, classes=classes) == 12 * m22.order()

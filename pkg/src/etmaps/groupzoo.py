"""Concrete groups: alternating and symmetric groups, PSL(2,q) and
PGammaL(2,q) on the projective line, and verified permutation fixtures."""

from __future__ import annotations

import json
import math
from functools import lru_cache
from importlib import resources

import numpy as np

from .fields import FieldError, field_of_order, prime_power
from .permcore import (
    GroupError,
    PermGroup,
    Permutation,
    _kernels,
    as_perm,
)


def symmetric(n):
    if not 1 <= n <= 16:
        raise GroupError("symmetric(n) supports 1 <= n <= 16")
    if n == 1:
        return PermGroup([], 1, name="S1")
    gens = [Permutation.from_cycles("(1,2)", n)]
    if n > 2:
        gens.append(Permutation.from_cycles("(" + ",".join(map(str, range(1, n + 1))) + ")", n))
    return PermGroup(gens, n, name=f"S{n}")


def alternating(n):
    if not 1 <= n <= 16:
        raise GroupError("alternating(n) supports 1 <= n <= 16")
    if n < 3:
        return PermGroup([], n, name=f"A{n}")
    gens = [Permutation.from_cycles(f"(1,2,{k})", n) for k in range(3, n + 1)]
    return PermGroup(gens, n, name=f"A{n}")


# ---------------------------------------------------------------------------
# projective line
# ---------------------------------------------------------------------------

class ProjectiveLine:
    """Points of PG(1, q): index ``x`` is ``(x : 1)``, index ``q`` is ``(1 : 0)``.

    Points are row vectors and matrices act on the right, matching the
    permutation convention.
    """

    def __init__(self, q):
        self.F = field_of_order(q)
        self.q = q
        self.size = q + 1

    def normalize(self, a, b):
        F = self.F
        if b == 0:
            if a == 0:
                raise FieldError("zero vector is not a projective point")
            return self.q
        return F.div(a, b)

    def vector(self, point):
        return (1, 0) if point == self.q else (point, 1)

    def matrix_perm(self, M):
        """Permutation of the points induced by ``v -> v M``."""
        F = self.F
        (m00, m01), (m10, m11) = M
        det = F.sub(F.mul(m00, m11), F.mul(m01, m10))
        if det == 0:
            raise FieldError("singular matrix")
        images = []
        for pt in range(self.size):
            a, b = self.vector(pt)
            x = F.add(F.mul(a, m00), F.mul(b, m10))
            y = F.add(F.mul(a, m01), F.mul(b, m11))
            images.append(self.normalize(x, y))
        return Permutation(images)

    def frobenius_perm(self):
        F = self.F
        return Permutation([self.q if pt == self.q else F.frobenius(pt) for pt in range(self.size)])

    def int_matrix(self, rows):
        """Embed an integer matrix (entries reduced mod p)."""
        F = self.F
        return tuple(tuple(F.from_int(int(v)) for v in row) for row in rows)

    def int_matrix_perm(self, rows):
        return self.matrix_perm(self.int_matrix(rows))


def _check_q(q):
    if prime_power(q) is None:
        raise GroupError(f"{q} is not a prime power")


def psl2(q):
    """PSL(2, q) on the ``q + 1`` points of the projective line."""
    _check_q(q)
    line = ProjectiveLine(q)
    F = line.F
    one, zero = 1, 0
    lam = F.gen
    gens = [line.matrix_perm(((zero, one), (F.neg(one), zero)))]
    basis = [F.pow(lam, i) for i in range(F.e)] if F.e > 1 else [one]
    for a in basis:
        gens.append(line.matrix_perm(((one, a), (zero, one))))
    if F.q > 3:
        gens.append(line.matrix_perm(((lam, zero), (zero, F.inv(lam)))))
    order = q * (q * q - 1) // math.gcd(2, q - 1)
    G = PermGroup(gens, q + 1, name=f"L2({q})")
    G.line = line
    G.expected_order = order
    return G


def pgammal2(q):
    """PGammaL(2, q): PGL(2, q) extended by the field automorphisms."""
    _check_q(q)
    if q > 2 ** 10:
        raise GroupError("pgammal2 supports q <= 1024")
    line = ProjectiveLine(q)
    F = line.F
    gens = list(psl2(q).generators)
    if F.q > 2:
        gens.append(line.matrix_perm(((F.gen, 0), (0, 1))))
    if F.e > 1:
        gens.append(line.frobenius_perm())
    G = PermGroup(gens, q + 1, name=f"PGammaL2({q})")
    G.line = line
    G.expected_order = F.e * q * (q * q - 1)
    return G


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------

FIXTURE_NAMES = ("M11", "U3_3", "U3_3_aut", "L3_2")


class FixtureError(GroupError):
    pass


def _data_path(*parts):
    return resources.files("etmaps").joinpath("data", *parts)


def fixture_document(name):
    path = _data_path("groups", f"{name}.json")
    if not path.is_file():
        raise FixtureError(f"unknown fixture {name!r}")
    return json.loads(path.read_text())


@lru_cache(maxsize=None)
def load_fixture(name):
    """Load a permutation fixture and revalidate it.

    The stabilizer-chain order must equal the asserted order; groups whose
    document says ``"simple": true`` must also be primitive and perfect.
    """
    if name not in FIXTURE_NAMES:
        raise FixtureError(f"unknown fixture {name!r}; expected one of {FIXTURE_NAMES}")
    doc = fixture_document(name)
    n = int(doc["degree"])
    gens = [Permutation.from_cycles(g, n) if isinstance(g, str) else Permutation(g) for g in doc["generators"]]
    G = PermGroup(gens, n, name=doc.get("name") or name)
    asserted = int(doc["asserted_order"])
    if G.order() != asserted:
        raise FixtureError(f"fixture {name}: computed order {G.order()} != asserted {asserted}")
    if doc.get("simple"):
        primitive, _ = G.is_primitive()
        if not primitive or not G.is_perfect():
            raise FixtureError(f"fixture {name} fails the simplicity spot-check")
    G.provenance = doc.get("provenance", "")
    return G


def count_elements_of_order(G, k, bound=None):
    table = G.element_table() if bound is None else G.element_table(bound)
    return int(np.sum(table.orders == k))


# ---------------------------------------------------------------------------
# roster
# ---------------------------------------------------------------------------

def group_by_name(name):
    """Resolve roster names such as ``A6``, ``psl2_11``, ``M11`` or ``U3_3``."""
    key = name.strip()
    if key in FIXTURE_NAMES:
        return load_fixture(key)
    if key[:1] in "AS" and key[1:].isdigit():
        n = int(key[1:])
        return alternating(n) if key[0] == "A" else symmetric(n)
    low = key.lower().replace("(", "_").replace(")", "")
    if low.startswith("l2_"):
        low = "ps" + low
    if low.startswith("psl2_") and low[5:].isdigit():
        return psl2(int(low[5:]))
    if low.startswith("pgammal2_") and low[9:].isdigit():
        return pgammal2(int(low[9:]))
    raise FixtureError(f"unknown group name {name!r}")


# ---------------------------------------------------------------------------
# L2(7) subgroups and coset actions
# ---------------------------------------------------------------------------

def find_l27_subgroup(G, rng=None, tries=200_000):
    """Locate a subgroup isomorphic to L2(7) by random search for a pair
    ``(a, b)`` with ``a^2 = b^3 = (ab)^7 = [a,b]^4 = 1`` generating a
    subgroup of order 168.  Returns the generating pair as permutations."""
    rng = np.random.default_rng(0) if rng is None else rng
    table = G.element_table()
    inv = np.flatnonzero(table.orders == 2)
    thr = np.flatnonzero(table.orders == 3)
    for _ in range(tries):
        a = int(inv[rng.integers(len(inv))])
        b = int(thr[rng.integers(len(thr))])
        ab = table.multiply(a, b)
        if table.orders[ab] != 7:
            continue
        comm = table.multiply(table.multiply(a, table.inverses[b]), table.multiply(a, b))
        if table.orders[comm] != 4:
            continue
        if table.subgroup_order([a, b]) == 168:
            return table.perm(a), table.perm(b)
    raise GroupError("no L2(7) subgroup found")


def coset_action(G, H_gens):
    """Action of ``G`` on the right cosets of ``H = <H_gens>``.

    Returns ``(action_group, coset_labels)``; coset 0 is ``H`` itself and
    ``coset_labels[i]`` is the coset of element ``i`` of the element table.
    """
    table = G.element_table()
    h = [table.index(as_perm(x, G.degree)) for x in H_gens]
    # right cosets Hg are orbits of left multiplication by H
    labels = _kernels.orbit_labels(np.stack([table.left_map(k) for k in h]))
    ncos = int(labels.max()) + 1
    reps = np.full(ncos, -1, dtype=np.int64)
    for i in range(table.size - 1, -1, -1):
        reps[labels[i]] = i
    gens = []
    for g in G.generators:
        rm = table.right_map(table.index(g))
        gens.append(Permutation(labels[rm[reps]]))
    return PermGroup(gens, ncos, name=f"{G.name or 'G'} on cosets", order=None), labels

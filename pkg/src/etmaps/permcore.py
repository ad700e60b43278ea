"""Permutations and permutation groups.

Convention: permutations act on the right.  ``p * q`` (also ``compose(p, q)``)
applies ``p`` first and then ``q``, so ``(p * q)[x] == q[p[x]]``.  Points are
labelled ``0 .. n-1``; cycle notation in strings is 1-based, as in the
literature.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

import numpy as np

from . import _kernels

# brute-force bound for enumerating all elements of a group
DEFAULT_ENUMERATION_BOUND = 500_000


class GroupError(ValueError):
    """Invalid group data or a request the group cannot satisfy."""


class BoundExceeded(GroupError):
    """A brute-force operation was asked to run beyond its configured bound."""


# ---------------------------------------------------------------------------
# Permutation
# ---------------------------------------------------------------------------

class Permutation:
    """An immutable bijection of ``{0, .., n-1}`` stored as an image tuple."""

    __slots__ = ("images", "_hash")

    def __init__(self, images, check=True):
        images = tuple(int(i) for i in images)
        if check and sorted(images) != list(range(len(images))):
            raise GroupError(f"not a permutation: {images!r}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, n):
        return cls(range(n), check=False)

    @classmethod
    def from_cycles(cls, text, n):
        """Parse 1-based cycle notation such as ``"(1,2)(3,4,5)"``."""
        images = list(range(n))
        for cycle in parse_cycles(text):
            pts = [c - 1 for c in cycle]
            if any(p < 0 or p >= n for p in pts):
                raise GroupError(f"cycle {cycle} out of range for degree {n}")
            if len(set(pts)) != len(pts):
                raise GroupError(f"repeated point in cycle {cycle}")
            perm = list(range(n))
            for a, b in zip(pts, pts[1:] + pts[:1]):
                perm[a] = b
            images = [perm[i] for i in images]
        return cls(images)

    @property
    def degree(self):
        return len(self.images)

    def __len__(self):
        return len(self.images)

    def __getitem__(self, i):
        return self.images[i]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return self._hash

    def __mul__(self, other):
        return compose(self, other)

    def __invert__(self):
        return self.inverse()

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self):
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv, check=False)

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self):
        """Non-trivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for i in range(len(self.images)):
            if i in seen:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self):
        return sorted((len(c) for c in self.cycles()), reverse=True)

    def order(self):
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def fixed_points(self):
        return [i for i, j in enumerate(self.images) if i == j]

    def conjugate(self, g):
        """``g^-1 * self * g``."""
        return g.inverse() * self * g

    def to_cycle_string(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(str(p + 1) for p in c) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation({self.to_cycle_string()}, n={self.degree})"

    def array(self):
        return np.asarray(self.images, dtype=np.int64)


def compose(p, q):
    """Apply ``p`` then ``q``."""
    if len(p.images) != len(q.images):
        raise GroupError(f"degree mismatch: {len(p.images)} vs {len(q.images)}")
    qi = q.images
    return Permutation([qi[i] for i in p.images], check=False)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text):
    """Split cycle notation into lists of integers (no offset applied)."""
    text = text.strip()
    if not re.fullmatch(r"(\s*\([^()]*\)\s*)*", text):
        raise GroupError(f"cannot parse cycle notation {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(text):
        body = body.strip()
        if body:
            cycles.append([int(t) for t in re.split(r"[\s,]+", body)])
    return cycles


def as_perm(x, n=None):
    """Coerce images, cycle strings or permutations to a :class:`Permutation`."""
    if isinstance(x, Permutation):
        return x
    if isinstance(x, str):
        if n is None:
            raise GroupError("degree needed to parse cycle notation")
        return Permutation.from_cycles(x, n)
    return Permutation(x)


# ---------------------------------------------------------------------------
# Stabilizer chain
# ---------------------------------------------------------------------------

@dataclass
class StabilizerChain:
    """Base points and transversals; ``transversals[l]`` maps each point of the
    basic orbit of ``base[l]`` to an element carrying ``base[l]`` there."""

    degree: int
    base: list
    transversals: list = field(repr=False)
    strong_generators: list = field(repr=False)

    @property
    def order(self):
        return math.prod(len(t) for t in self.transversals)

    def sift(self, g, start=0):
        for level in range(start, len(self.base)):
            x = g[self.base[level]]
            u = self.transversals[level].get(x)
            if u is None:
                return g, level
            g = g * u.inverse()
        return g, len(self.base)

    def contains(self, g):
        h, _ = self.sift(g)
        return h.is_identity()

    def random_element(self, rng):
        """Uniform: one transversal element per level, deepest level first."""
        g = Permutation.identity(self.degree)
        for trans in reversed(self.transversals):
            us = list(trans.values())
            g = g * us[int(rng.integers(len(us)))]
        return g


class ChainOrderExceeded(Exception):
    pass


def _orbit_transversal(point, gens, n):
    trans = {point: Permutation.identity(n)}
    queue = [point]
    for x in queue:
        ux = trans[x]
        for s in gens:
            y = s[x]
            if y not in trans:
                trans[y] = ux * s
                queue.append(y)
    return trans


def schreier_sims(generators, degree, order_limit=None):
    """Deterministic Schreier-Sims.

    New base points are always the smallest point moved by the element that
    required them, so the result depends only on the generator list.  If
    ``order_limit`` is given, :class:`ChainOrderExceeded` is raised as soon as
    the partial chain certifies an order above it.
    """
    strong = [g for g in generators if not g.is_identity()]
    base = []
    for g in strong:
        if all(g[b] == b for b in base):
            base.append(next(i for i in range(degree) if g[i] != i))

    def level_gens(level):
        prefix = base[:level]
        return [s for s in strong if all(s[b] == b for b in prefix)]

    trans = [_orbit_transversal(base[l], level_gens(l), degree) for l in range(len(base))]

    def check_limit():
        if order_limit is not None and math.prod(len(t) for t in trans) > order_limit:
            raise ChainOrderExceeded

    check_limit()
    i = len(base) - 1
    while i >= 0:
        restart = False
        gens = level_gens(i)
        for x, ux in list(trans[i].items()):
            for s in gens:
                h = ux * s * trans[i][s[x]].inverse()
                if h.is_identity():
                    continue
                chain = StabilizerChain(degree, base, trans, strong)
                h2, j = chain.sift(h, i + 1)
                if h2.is_identity():
                    continue
                if j == len(base):
                    base.append(next(p for p in range(degree) if h2[p] != p))
                    trans.append(None)
                strong.append(h2)
                for l in range(0, j + 1):
                    trans[l] = _orbit_transversal(base[l], level_gens(l), degree)
                check_limit()
                i = j
                restart = True
                break
            if restart:
                break
        if not restart:
            i -= 1
    return StabilizerChain(degree, base, trans, strong)


# ---------------------------------------------------------------------------
# Element tables
# ---------------------------------------------------------------------------

class ElementTable:
    """All elements of a group as rows of an integer array, with vectorised
    lookup of an element's index from its images of the base points.

    Row 0 is the identity.  ``right_map(k)[i]`` is the index of
    ``element(i) * element(k)``.
    """

    def __init__(self, chain, generators=(), cache_entries=60_000_000):
        n = chain.degree
        rows = np.arange(n, dtype=np.int64)[None, :]
        for trans in reversed(chain.transversals):
            us = [u.array() for u in trans.values()]
            # G_l = union over u of G_{l+1} u
            rows = np.concatenate([u[rows] for u in us], axis=0)
        ident = np.arange(n)
        first = np.flatnonzero(np.all(rows == ident, axis=1))[0]
        if first:
            rows[[0, first]] = rows[[first, 0]]
        self.degree = n
        self.elements = rows
        self.size = rows.shape[0]
        self.base = np.asarray(chain.base if chain.base else [0], dtype=np.int64)
        self._radix = n ** np.arange(len(self.base), dtype=np.int64)
        if len(self.base) * math.log2(max(n, 2)) > 62:
            raise GroupError("base too long for integer keys")
        keys = self._keys(rows[:, self.base])
        self._order = np.argsort(keys, kind="stable")
        self._sorted_keys = keys[self._order]
        if np.any(np.diff(self._sorted_keys) == 0):
            raise GroupError("duplicate elements in table (corrupt chain)")
        self._cache = {}
        self._cache_limit = max(16, cache_entries // max(self.size, 1))
        self._full = None
        self._generator_indices = [self.index(g) for g in generators]

    def _keys(self, base_images):
        return base_images.astype(np.int64) @ self._radix

    def indices_from_base_images(self, base_images):
        keys = self._keys(np.atleast_2d(base_images))
        pos = np.searchsorted(self._sorted_keys, keys)
        pos = np.minimum(pos, self.size - 1)
        if np.any(self._sorted_keys[pos] != keys):
            raise GroupError("element not in group")
        return self._order[pos]

    def index(self, perm):
        arr = np.asarray(perm.images if isinstance(perm, Permutation) else perm, dtype=np.int64)
        idx = int(self.indices_from_base_images(arr[self.base][None, :])[0])
        if not np.array_equal(self.elements[idx], arr):
            raise GroupError("element not in group")
        return idx

    def contains(self, perm):
        try:
            self.index(perm)
        except GroupError:
            return False
        return True

    def perm(self, idx):
        return Permutation(self.elements[idx], check=False)

    def right_map(self, k):
        """Index map of right multiplication by element ``k``."""
        k = int(k)
        if self._full is not None:
            return self._full[k]
        m = self._cache.get(k)
        if m is None:
            g = self.elements[k]
            m = self.indices_from_base_images(g[self.elements[:, self.base]])
            if len(self._cache) >= self._cache_limit:
                self._cache.pop(next(iter(self._cache)))
            self._cache[k] = m
        return m

    def right_maps(self, ks):
        return np.stack([self.right_map(k) for k in ks]) if len(ks) else np.zeros((0, self.size), np.int64)

    def left_map(self, k, subset=None):
        """Index map of left multiplication by element ``k`` (restricted to the
        element indices ``subset`` if given)."""
        g = self.elements[int(k)]
        rows = self.elements if subset is None else self.elements[subset]
        return self.indices_from_base_images(rows[:, g[self.base]])

    def conjugation_map(self, k):
        """Index map of ``x -> g^-1 x g`` for ``g = element(k)``."""
        g = self.elements[int(k)]
        ginv = np.argsort(g)
        return self.indices_from_base_images(g[self.elements[:, ginv[self.base]]])

    def build_full_table(self):
        if self._full is None:
            self._full = np.stack([self.right_map(k) for k in range(self.size)])
        return self._full

    def multiply(self, i, j):
        return int(self.right_map(j)[i])

    @cached_property
    def inverses(self):
        inv_rows = np.argsort(self.elements, axis=1)
        return self.indices_from_base_images(inv_rows[:, self.base])

    @cached_property
    def orders(self):
        return _kernels.element_orders(self.elements)

    def involutions(self, include_identity=False):
        idx = np.flatnonzero(self.orders == 2)
        if include_identity:
            idx = np.concatenate([[0], idx])
        return idx

    def subgroup_order(self, ks):
        """Order of the subgroup generated by the elements with indices ``ks``."""
        if len(ks) == 0:
            return 1
        return _kernels.closure_size(self.right_maps(ks), 0)

    def generates(self, ks):
        """A subgroup with more than half the elements is the whole group."""
        if len(ks) == 0:
            return self.size == 1
        return self.size == 1 or _kernels.closure_exceeds(self.right_maps(ks), 0, self.size // 2)

    @cached_property
    def conjugacy_labels(self):
        gens = self._generator_indices
        maps = np.stack([self.conjugation_map(k) for k in gens]) if gens else np.zeros((0, self.size), np.int64)
        return _kernels.orbit_labels(maps)


# ---------------------------------------------------------------------------
# PermGroup
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConjugacyClass:
    representative: Permutation
    size: int
    element_order: int
    indices: np.ndarray = field(repr=False, compare=False)


class PermGroup:
    """A permutation group given by generators.

    The stabilizer chain, element table and derived data are computed lazily
    and cached; the object is otherwise immutable.
    """

    def __init__(self, generators, degree=None, name=None, order=None):
        gens = [as_perm(g, degree) for g in generators]
        if degree is None:
            if not gens:
                raise GroupError("degree required for a group without generators")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise GroupError(f"generator of degree {g.degree} in group of degree {degree}")
        self.degree = int(degree)
        self.generators = tuple(gens)
        self.name = name
        self._known_order = order

    def __repr__(self):
        label = self.name or "PermGroup"
        return f"<{label} degree={self.degree} gens={len(self.generators)}>"

    @cached_property
    def chain(self):
        return schreier_sims(list(self.generators), self.degree)

    def order(self):
        if self._known_order is not None:
            return self._known_order
        return self.chain.order

    def contains(self, g):
        g = as_perm(g, self.degree)
        if g.degree != self.degree:
            return False
        return self.chain.contains(g)

    def identity(self):
        return Permutation.identity(self.degree)

    def generator_arrays(self):
        if not self.generators:
            return np.zeros((0, self.degree), dtype=np.int64)
        return np.stack([g.array() for g in self.generators])

    def orbits(self, points=None):
        """Orbits as sorted tuples, listed by smallest member."""
        labels = _kernels.orbit_labels(self.generator_arrays())
        groups = {}
        for p in range(self.degree):
            groups.setdefault(int(labels[p]), []).append(p)
        orbs = [tuple(v) for _, v in sorted(groups.items())]
        if points is not None:
            pts = set(points)
            orbs = [o for o in orbs if pts & set(o)]
        return orbs

    def orbit(self, point):
        mask = _kernels.closure_mask(self.generator_arrays(), point) if self.generators else None
        if mask is None:
            return (point,)
        return tuple(int(p) for p in np.flatnonzero(mask))

    def is_transitive(self):
        return len(self.orbits()) == 1

    def stabilizer(self, point):
        """Point stabilizer, generated by the Schreier generators of the orbit."""
        gens = list(self.generators)
        trans = _orbit_transversal(point, gens, self.degree)
        schreier = set()
        for x, ux in trans.items():
            for g in gens:
                h = ux * g * trans[g[x]].inverse()
                if not h.is_identity():
                    schreier.add(h)
        H = PermGroup(sorted(schreier, key=lambda h: h.images), self.degree,
                      order=self.order() // len(trans))
        if len(H.generators) > 4:
            H = PermGroup(H.reduced_generators(), self.degree, order=H.order())
        return H

    def is_primitive(self):
        """``(True, None)`` or ``(False, blocks)`` with a non-trivial block
        system of smallest block size."""
        if not self.is_transitive():
            raise GroupError("primitivity is only defined for transitive groups")
        n = self.degree
        if n <= 2:
            return True, None
        best = None
        for x in range(1, n):
            blocks = minimal_block_system(self.generators, n, 0, x)
            if len(blocks) > 1 and (best is None or len(blocks[0]) < len(best[0])):
                best = blocks
                if len(best[0]) == 2:
                    break
        return (best is None), best

    def element_table(self, bound=DEFAULT_ENUMERATION_BOUND):
        if self.order() > bound:
            raise BoundExceeded(f"group order {self.order()} exceeds enumeration bound {bound}")
        return self._table

    @cached_property
    def _table(self):
        return ElementTable(self.chain, self.generators)

    def elements(self, bound=DEFAULT_ENUMERATION_BOUND):
        table = self.element_table(bound)
        return [table.perm(i) for i in range(table.size)]

    def conjugacy_classes(self, bound=DEFAULT_ENUMERATION_BOUND):
        return element_conjugacy_classes(self, bound)

    def is_perfect(self):
        """Whether the group equals its derived subgroup (normal closure of
        generator commutators)."""
        gens = self.generators
        comms = [a.inverse() * b.inverse() * a * b for a in gens for b in gens]
        closure = normal_closure(comms, gens, self.degree)
        return closure.order() == self.order()

    def random_element(self, rng):
        """Uniform random element, drawn from the stabilizer chain."""
        return self.chain.random_element(rng)

    def reduced_generators(self, rng=None, tries=20):
        """A short random generating list (two or three elements usually
        suffice), falling back to the given generators."""
        rng = np.random.default_rng(0) if rng is None else rng
        target = self.order()
        for k in (2, 2, 3, 3, 4):
            for _ in range(tries // 5):
                cand = [self.random_element(rng) for _ in range(k)]
                if schreier_sims(cand, self.degree).order == target:
                    return cand
        return list(self.generators)

    def to_dict(self):
        return {
            "degree": self.degree,
            "generators": [list(g.images) for g in self.generators],
            "name": self.name or "",
        }


def normal_closure(elements, gens, degree):
    """Smallest subgroup containing ``elements`` and normalised by ``gens``."""
    current = [e for e in elements if not e.is_identity()]
    group = PermGroup(current, degree)
    changed = True
    while changed:
        changed = False
        for h in list(group.generators):
            for g in gens:
                c = h.conjugate(g)
                if not group.contains(c):
                    group = PermGroup(list(group.generators) + [c], degree)
                    changed = True
    return group


def minimal_block_system(gens, n, a, b):
    """Finest block system in which ``a`` and ``b`` share a block (Atkinson)."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        if rx < ry:
            rx, ry = ry, rx
        parent[rx] = ry
        return True

    union(a, b)
    queue = [(a, b)]
    while queue:
        x, y = queue.pop()
        for g in gens:
            gx, gy = g[x], g[y]
            if find(gx) != find(gy):
                union(gx, gy)
                queue.append((gx, gy))
    blocks = {}
    for p in range(n):
        blocks.setdefault(find(p), []).append(p)
    return sorted((tuple(v) for v in blocks.values()), key=lambda blk: blk[0])


# ---------------------------------------------------------------------------
# group-level operations
# ---------------------------------------------------------------------------

def group_order(G):
    return G.order()


def orbits(G, points=None):
    return G.orbits(points)


def is_primitive(G):
    return G.is_primitive()


def centralizer_in_sym(B):
    """Centraliser of a transitive group in the symmetric group on its points.

    Elements are found by fixing point 0 and trying each candidate image;
    a candidate either extends uniquely along the generators or fails.  One
    candidate per orbit of the centraliser found so far is enough, so the
    number of attempts is small.  The result is semiregular, so its order is
    the length of the orbit of 0.
    """
    if not B.is_transitive():
        raise GroupError("centralizer_in_sym requires a transitive group")
    found, labels = centralizer_search(B.generator_arrays())
    gens = [Permutation(phi, check=False) for phi in found]
    orbit_len = int(np.sum(labels == labels[0]))
    return PermGroup(gens, B.degree, order=orbit_len)


def centralizer_search(maps, signature=None):
    """Generators (as image arrays) of the centraliser of the transitive
    group generated by ``maps``, and its orbit labels on the points.

    ``signature`` is an optional per-point invariant array that any
    centralising element must preserve; it only prunes candidates.
    """
    n = maps.shape[1]
    ok_sig = np.ones(n, dtype=bool) if signature is None else np.all(signature == signature[0], axis=-1) if signature.ndim > 1 else signature == signature[0]
    found = []
    failed = []
    labels = np.arange(n)
    while True:
        blocked = {int(labels[0])} | {int(labels[f]) for f in failed}
        uniq, first = np.unique(labels, return_index=True)
        cands = [int(i) for lab, i in zip(uniq, first) if int(lab) not in blocked and ok_sig[i]]
        if not cands:
            break
        for cand in cands:
            ok, phi = _kernels.extend_equivariant(maps, maps, 0, cand)
            if ok:
                found.append(phi)
                labels = _kernels.orbit_labels(np.stack(found))
                break
            failed.append(cand)
        else:
            break
    return found, labels


def cycle_length_signature(perms):
    """Per point, the length of its cycle under each permutation in ``perms``."""
    cols = []
    for p in perms:
        lab = _kernels.orbit_labels(np.asarray(p)[None, :])
        cols.append(np.bincount(lab)[lab])
    return np.stack(cols, axis=1)


def extends_to_automorphism(G, src, dst, bound=DEFAULT_ENUMERATION_BOUND):
    """Whether some automorphism of ``G`` sends ``src[i]`` to ``dst[i]`` for all i.

    ``src`` must generate ``G``.  The assignment is propagated along the
    Cayley graph of ``src``; it is a well defined homomorphism exactly when
    the diagonal subgroup generated by the pairs ``(src[i], dst[i])`` has
    order ``|G|``, and an automorphism when ``dst`` also generates ``G``.
    """
    table = G.element_table(bound)
    s = [table.index(as_perm(x, G.degree)) for x in src]
    d = [table.index(as_perm(x, G.degree)) for x in dst]
    return extends_indices(table, s, d, check_generation=True)


def extends_indices(table, s, d, check_generation=False):
    if len(s) != len(d):
        raise GroupError("source and target tuples differ in length")
    src = table.right_maps(s)
    if check_generation and _kernels.closure_size(src, 0) != table.size:
        raise GroupError("source tuple does not generate the group")
    dst = table.right_maps(d)
    ok, phi = _kernels.extend_equivariant(src, dst, 0, 0)
    if not ok:
        return False
    return len(np.unique(phi)) == table.size


def extends_to_automorphism_diagonal(G, src, dst):
    """Independent route: order of the diagonal subgroup of ``G x G``."""
    n = G.degree
    src = [as_perm(x, n) for x in src]
    dst = [as_perm(x, n) for x in dst]
    if PermGroup(src, n).order() != G.order():
        raise GroupError("source tuple does not generate the group")
    if PermGroup(dst, n).order() != G.order():
        return False
    diag = [Permutation(list(a.images) + [n + i for i in b.images]) for a, b in zip(src, dst)]
    try:
        chain = schreier_sims(diag, 2 * n, order_limit=G.order())
    except ChainOrderExceeded:
        return False
    return chain.order == G.order()


def find_isomorphism(G, H, src, bound=DEFAULT_ENUMERATION_BOUND):
    """Search for a tuple in ``H`` onto which ``src`` (generating ``G``)
    extends as an isomorphism.  Returns the image tuple or ``None``."""
    tg = G.element_table(bound)
    th = H.element_table(bound)
    if tg.size != th.size:
        return None
    s = [tg.index(as_perm(x, G.degree)) for x in src]
    src_maps = tg.right_maps(s)
    if _kernels.closure_size(src_maps, 0) != tg.size:
        raise GroupError("source tuple does not generate G")
    candidates = [np.flatnonzero(th.orders == tg.orders[k]) for k in s]

    def rec(prefix):
        if len(prefix) == len(s):
            ok, phi = _kernels.extend_equivariant(src_maps, th.right_maps(prefix), 0, 0)
            if ok and len(np.unique(phi)) == th.size:
                return prefix
            return None
        for c in candidates[len(prefix)]:
            if not prefix:
                # first image only up to conjugacy in H
                if th.conjugacy_labels[c] in seen_first:
                    continue
                seen_first.add(th.conjugacy_labels[c])
            res = rec(prefix + [int(c)])
            if res is not None:
                return res
        return None

    seen_first = set()
    res = rec([])
    return None if res is None else [th.perm(i) for i in res]


def element_conjugacy_classes(G, bound=DEFAULT_ENUMERATION_BOUND):
    """Conjugacy classes, ordered by element order then size then smallest index."""
    table = G.element_table(bound)
    labels = table.conjugacy_labels
    classes = []
    for lab in np.unique(labels):
        idx = np.flatnonzero(labels == lab)
        classes.append(ConjugacyClass(table.perm(idx[0]), len(idx), int(table.orders[idx[0]]), idx))
    classes.sort(key=lambda c: (c.element_order, c.size, int(c.indices[0])))
    return classes


# ---------------------------------------------------------------------------
# file format
# ---------------------------------------------------------------------------

def group_from_dict(doc):
    n = int(doc["degree"])
    gens = []
    for g in doc["generators"]:
        gens.append(Permutation.from_cycles(g, n) if isinstance(g, str) else Permutation(g))
    for g in gens:
        if g.degree != n:
            raise GroupError("generator degree does not match declared degree")
    return PermGroup(gens, n, name=doc.get("name") or None)


def load_group(path):
    return group_from_dict(json.loads(Path(path).read_text()))


def save_group(G, path):
    Path(path).write_text(json.dumps(G.to_dict()) + "\n")

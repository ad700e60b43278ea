"""Hot inner loops over integer action tables.

Every kernel works on *action maps*: an ``(k, n)`` integer array whose row
``i`` sends point ``p`` to ``maps[i, p]``.  Points may be the points of a
permutation domain, the flags of a map, or the indices of an element table
(where a row is right multiplication by one group element).

Each kernel has a numba ``@njit`` implementation and a pure-numpy fallback
with identical results.  The fallback is used when numba is unavailable or
when the environment variable ``ETMAPS_NUMBA`` is set to ``0``.
"""

from __future__ import annotations

import os

import numpy as np

INDEX = np.int64


def _numba_requested():
    return os.environ.get("ETMAPS_NUMBA", "1").strip().lower() not in ("0", "false", "no", "off")


try:
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False


# ---------------------------------------------------------------------------
# pure numpy implementations
# ---------------------------------------------------------------------------

def closure_mask_numpy(maps, start):
    """Boolean mask of the orbit of ``start`` under the maps."""
    n = maps.shape[1]
    seen = np.zeros(n, dtype=np.bool_)
    seen[start] = True
    frontier = np.array([start], dtype=INDEX)
    while frontier.size:
        nxt = np.unique(maps[:, frontier].ravel())
        nxt = nxt[~seen[nxt]]
        seen[nxt] = True
        frontier = nxt
    return seen


def closure_exceeds_numpy(maps, start, limit):
    """Whether the orbit of ``start`` has more than ``limit`` points."""
    n = maps.shape[1]
    seen = np.zeros(n, dtype=np.bool_)
    seen[start] = True
    count = 1
    frontier = np.array([start], dtype=INDEX)
    while frontier.size:
        if count > limit:
            return True
        nxt = np.unique(maps[:, frontier].ravel())
        nxt = nxt[~seen[nxt]]
        seen[nxt] = True
        count += nxt.size
        frontier = nxt
    return count > limit


def orbit_labels_numpy(maps):
    """Label each point by the index of its orbit; orbits are numbered in
    order of their smallest member."""
    n = maps.shape[1]
    # min-propagation along both directions of every edge, then pointer jumping
    label = np.arange(n, dtype=INDEX)
    while True:
        old = label.copy()
        for row in maps:
            np.minimum.at(label, row, label.copy())
            label = np.minimum(label, label[row])
        label = label[label]
        if np.array_equal(label, old):
            break
    _, canon = np.unique(label, return_inverse=True)
    return canon.astype(INDEX)


def extend_equivariant_numpy(src, dst, a, b):
    """Try to extend ``a -> b`` to a map phi with phi[src[i][p]] == dst[i][phi[p]].

    Returns ``(ok, phi)``.  ``phi`` is defined (>= 0) on the orbit of ``a``.
    """
    n1 = src.shape[1]
    phi = np.full(n1, -1, dtype=INDEX)
    phi[a] = b
    frontier = np.array([a], dtype=INDEX)
    while frontier.size:
        new_pts = []
        for i in range(src.shape[0]):
            v = src[i, frontier]
            w = dst[i, phi[frontier]]
            known = phi[v] >= 0
            if np.any(phi[v[known]] != w[known]):
                return False, phi
            v_new, w_new = v[~known], w[~known]
            phi[v_new] = w_new
            # duplicate targets within one sweep must agree
            if np.any(phi[v_new] != w_new):
                return False, phi
            new_pts.append(v_new)
        frontier = np.unique(np.concatenate(new_pts)) if new_pts else frontier[:0]
    return True, phi


def element_orders_numpy(table):
    """Order of each permutation row of ``table`` (shape ``(N, n)``)."""
    N, n = table.shape
    orders = np.zeros(N, dtype=INDEX)
    ident = np.arange(n)
    power = table.copy()
    k = 1
    pending = np.ones(N, dtype=np.bool_)
    while pending.any():
        done = pending & np.all(power == ident, axis=1)
        orders[done] = k
        pending &= ~done
        if not pending.any():
            break
        power = np.take_along_axis(table, power, axis=1)
        k += 1
    return orders


# ---------------------------------------------------------------------------
# numba implementations
# ---------------------------------------------------------------------------

if HAVE_NUMBA:

    @njit(cache=True)
    def closure_mask_numba(maps, start):
        k, n = maps.shape
        seen = np.zeros(n, dtype=np.bool_)
        queue = np.empty(n, dtype=np.int64)
        seen[start] = True
        queue[0] = start
        head, tail = 0, 1
        while head < tail:
            p = queue[head]
            head += 1
            for i in range(k):
                q = maps[i, p]
                if not seen[q]:
                    seen[q] = True
                    queue[tail] = q
                    tail += 1
        return seen

    @njit(cache=True)
    def closure_exceeds_numba(maps, start, limit):
        k, n = maps.shape
        seen = np.zeros(n, dtype=np.bool_)
        queue = np.empty(n, dtype=np.int64)
        seen[start] = True
        queue[0] = start
        head, tail = 0, 1
        while head < tail:
            if tail > limit:
                return True
            p = queue[head]
            head += 1
            for i in range(k):
                q = maps[i, p]
                if not seen[q]:
                    seen[q] = True
                    queue[tail] = q
                    tail += 1
        return tail > limit

    @njit(cache=True)
    def orbit_labels_numba(maps):
        k, n = maps.shape
        label = np.full(n, -1, dtype=np.int64)
        queue = np.empty(n, dtype=np.int64)
        current = 0
        for s in range(n):
            if label[s] >= 0:
                continue
            label[s] = current
            queue[0] = s
            head, tail = 0, 1
            while head < tail:
                p = queue[head]
                head += 1
                for i in range(k):
                    q = maps[i, p]
                    if label[q] < 0:
                        label[q] = current
                        queue[tail] = q
                        tail += 1
            current += 1
        return label

    @njit(cache=True)
    def extend_equivariant_numba(src, dst, a, b):
        k, n1 = src.shape
        phi = np.full(n1, -1, dtype=np.int64)
        queue = np.empty(n1, dtype=np.int64)
        phi[a] = b
        queue[0] = a
        head, tail = 0, 1
        while head < tail:
            p = queue[head]
            head += 1
            fp = phi[p]
            for i in range(k):
                v = src[i, p]
                w = dst[i, fp]
                if phi[v] < 0:
                    phi[v] = w
                    queue[tail] = v
                    tail += 1
                elif phi[v] != w:
                    return False, phi
        return True, phi

    @njit(cache=True)
    def element_orders_numba(table):
        N, n = table.shape
        orders = np.zeros(N, dtype=np.int64)
        seen = np.zeros(n, dtype=np.bool_)
        for r in range(N):
            seen[:] = False
            acc = 1
            for s in range(n):
                if seen[s]:
                    continue
                length = 0
                p = s
                while not seen[p]:
                    seen[p] = True
                    p = table[r, p]
                    length += 1
                x, y = acc, length
                while y:
                    x, y = y, x % y
                acc = acc // x * length
            orders[r] = acc
        return orders


def _pick(name):
    if HAVE_NUMBA and _numba_requested():
        return globals()[name + "_numba"]
    return globals()[name + "_numpy"]


def backend():
    """Name of the active backend: ``"numba"`` or ``"numpy"``."""
    return "numba" if HAVE_NUMBA and _numba_requested() else "numpy"


def closure_mask(maps, start):
    return _pick("closure_mask")(np.ascontiguousarray(maps, dtype=INDEX), int(start))


def closure_size(maps, start=0):
    return int(closure_mask(maps, start).sum())


def closure_exceeds(maps, start, limit):
    return bool(_pick("closure_exceeds")(np.ascontiguousarray(maps, dtype=INDEX), int(start), int(limit)))


def orbit_labels(maps):
    maps = np.ascontiguousarray(maps, dtype=INDEX)
    if maps.shape[0] == 0:
        return np.arange(maps.shape[1], dtype=INDEX)
    return _pick("orbit_labels")(maps)


def extend_equivariant(src, dst, a, b):
    ok, phi = _pick("extend_equivariant")(
        np.ascontiguousarray(src, dtype=INDEX), np.ascontiguousarray(dst, dtype=INDEX), int(a), int(b))
    return bool(ok), phi


def element_orders(table):
    return _pick("element_orders")(np.ascontiguousarray(table, dtype=INDEX))

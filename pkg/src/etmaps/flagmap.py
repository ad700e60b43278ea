"""Maps as flag systems.

A map with ``n`` flags is three involutions ``r0, r1, r2`` of the flag set
with ``r0 r2 = r2 r0``; fixed points are allowed (free edges and boundary).
Vertices, edges and faces are the orbits of ``<r1, r2>``, ``<r0, r2>`` and
``<r0, r1>``.  Automorphisms are the permutations commuting with all three.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np

from . import _kernels
from .permcore import PermGroup, Permutation, centralizer_search, cycle_length_signature


class MapError(ValueError):
    """Invalid flag data: a violated relation (with a witness flag) or a
    disconnected flag system."""

    def __init__(self, message, relation=None, witness=None):
        super().__init__(message)
        self.relation = relation
        self.witness = witness


@dataclass(frozen=True)
class SurfaceType:
    orientable: bool
    value: int

    @property
    def kind(self):
        return "genus" if self.orientable else "crosscap"

    def __str__(self):
        return f"{self.kind} {self.value}"


@dataclass(frozen=True)
class Cells:
    vertices: list
    edges: list
    faces: list
    petrie_polygons: list

    def counts(self):
        return len(self.vertices), len(self.edges), len(self.faces)


def _partition(labels):
    groups = {}
    for p, lab in enumerate(labels.tolist()):
        groups.setdefault(lab, []).append(p)
    return [tuple(v) for _, v in sorted(groups.items())]


class FlagMap:
    """An immutable, validated, connected flag system."""

    def __init__(self, r0, r1, r2, name=None, validate=True):
        arrs = []
        for r in (r0, r1, r2):
            a = np.array(r.images if isinstance(r, Permutation) else r, dtype=np.int64)
            a.setflags(write=False)
            arrs.append(a)
        object.__setattr__(self, "r0", arrs[0])
        object.__setattr__(self, "r1", arrs[1])
        object.__setattr__(self, "r2", arrs[2])
        object.__setattr__(self, "name", name)
        if validate:
            self._validate()

    def __setattr__(self, key, value):
        raise AttributeError("FlagMap is immutable")

    @property
    def flag_count(self):
        return int(self.r0.shape[0])

    def __len__(self):
        return self.flag_count

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<FlagMap{label} flags={self.flag_count}>"

    def __eq__(self, other):
        if not isinstance(other, FlagMap):
            return NotImplemented
        return all(np.array_equal(a, b) for a, b in zip(self.gens, other.gens))

    def __hash__(self):
        return hash(tuple(bytes(r.tobytes()) for r in self.gens))

    @property
    def gens(self):
        return (self.r0, self.r1, self.r2)

    def _validate(self):
        n = len(self.r0)
        if n == 0:
            raise MapError("a map needs at least one flag")
        ident = np.arange(n)
        for i, r in enumerate(self.gens):
            if r.shape != (n,):
                raise MapError(f"r{i} has length {r.shape[0]}, expected {n}", relation=f"r{i}")
            if r.min() < 0 or r.max() >= n or len(np.unique(r)) != n:
                raise MapError(f"r{i} is not a permutation of the flags", relation=f"r{i}")
            bad = np.flatnonzero(r[r] != ident)
            if bad.size:
                raise MapError(f"r{i}^2 != 1 at flag {bad[0]}", relation=f"r{i}^2", witness=int(bad[0]))
        t = self.r2[self.r0]
        bad = np.flatnonzero(t[t] != ident)
        if bad.size:
            raise MapError(f"(r0 r2)^2 != 1 at flag {bad[0]}", relation="(r0r2)^2", witness=int(bad[0]))
        reach = _kernels.closure_mask(self.maps, 0)
        if not reach.all():
            ncomp = int(_kernels.orbit_labels(self.maps).max()) + 1
            raise MapError(f"flag system has {ncomp} connected components", relation="connected",
                           witness=int(np.flatnonzero(~reach)[0]))

    @cached_property
    def maps(self):
        return np.stack(self.gens)

    def monodromy_group(self):
        return PermGroup([Permutation(r, check=False) for r in self.gens], self.flag_count)

    # ---- cells and topology ------------------------------------------------

    def _orbit_partition(self, *perms):
        return _partition(_kernels.orbit_labels(np.stack(perms)))

    @cached_property
    def cells(self):
        return Cells(
            vertices=self._orbit_partition(self.r1, self.r2),
            edges=self._orbit_partition(self.r0, self.r2),
            faces=self._orbit_partition(self.r0, self.r1),
            petrie_polygons=self._orbit_partition(self.r2[self.r0], self.r1),
        )

    def euler_characteristic(self):
        v, e, f = self.cells.counts()
        return v - e + f

    def has_boundary(self):
        ident = np.arange(self.flag_count)
        return any(bool(np.any(r == ident)) for r in self.gens)

    def is_orientable(self):
        """Whether the flag graph (edges ``p -- p r_i`` for ``p r_i != p``) is bipartite."""
        n = self.flag_count
        colour = np.full(n, -1, dtype=np.int64)
        colour[0] = 0
        queue = [0]
        for p in queue:
            for r in self.gens:
                q = int(r[p])
                if q == p:
                    continue
                if colour[q] < 0:
                    colour[q] = 1 - colour[p]
                    queue.append(q)
                elif colour[q] == colour[p]:
                    return False
        return True

    def surface(self):
        if self.has_boundary():
            raise MapError("genus is undefined for a map with boundary", relation="boundary")
        chi = self.euler_characteristic()
        if self.is_orientable():
            return SurfaceType(True, (2 - chi) // 2)
        return SurfaceType(False, 2 - chi)

    # ---- operations --------------------------------------------------------

    def dual(self):
        return FlagMap(self.r2, self.r1, self.r0, name=_derived(self.name, "D"))

    def petrie(self):
        return FlagMap(self.r2[self.r0], self.r1, self.r2, name=_derived(self.name, "P"))

    @cached_property
    def _automorphisms(self):
        sig = cycle_length_signature([self.r0[self.r1], self.r1[self.r2], self.r0[self.r1][self.r2]])
        return centralizer_search(self.maps, sig)

    def automorphism_labels(self):
        """Orbit labels of the automorphism group on the flags."""
        return self._automorphisms[1]

    def automorphism_order(self):
        labels = self._automorphisms[1]
        return int(np.sum(labels == labels[0]))

    def automorphism_group(self):
        found, _ = self._automorphisms
        gens = [Permutation(phi, check=False) for phi in found]
        return PermGroup(gens, self.flag_count, order=self.automorphism_order())

    def is_regular(self):
        return self.automorphism_order() == self.flag_count

    def quotient(self):
        labels = self.automorphism_labels()
        _, reps = np.unique(labels, return_index=True)
        rs = [labels[r[reps]] for r in self.gens]
        return FlagMap(*rs, name=_derived(self.name, "/Aut"))

    def signature(self):
        """Cheap isomorphism invariant used as a dedup prefilter."""
        c = self.cells
        sizes = tuple(tuple(sorted(len(x) for x in part)) for part in (c.vertices, c.edges, c.faces, c.petrie_polygons))
        return (self.flag_count, sizes, self.euler_characteristic(), self.is_orientable())

    def to_dict(self):
        return {
            "flags": self.flag_count,
            "r0": self.r0.tolist(),
            "r1": self.r1.tolist(),
            "r2": self.r2.tolist(),
            "name": self.name or "",
        }


def _derived(name, op):
    return f"{op}({name})" if name else None


# ---------------------------------------------------------------------------
# functional interface
# ---------------------------------------------------------------------------

def build_map(n, r0, r1, r2, name=None):
    fm = FlagMap(r0, r1, r2, name=name)
    if fm.flag_count != n:
        raise MapError(f"declared {n} flags but generators have length {fm.flag_count}")
    return fm


def cells(M):
    return M.cells


def euler_characteristic(M):
    return M.euler_characteristic()


def genus_or_crosscap(M):
    return M.surface()


def is_orientable(M):
    return M.is_orientable()


def has_boundary(M):
    return M.has_boundary()


def dual(M):
    return M.dual()


def petrie(M):
    return M.petrie()


def automorphism_group(M):
    return M.automorphism_group()


def quotient_by_automorphisms(M):
    return M.quotient()


def map_isomorphism(M1, M2):
    """A flag bijection conjugating ``(r0, r1, r2)`` of ``M1`` to that of
    ``M2``, as an image array, or ``None``."""
    if M1.flag_count != M2.flag_count:
        return None
    labels = M2.automorphism_labels()
    _, reps = np.unique(labels, return_index=True)
    for cand in reps:
        ok, phi = _kernels.extend_equivariant(M1.maps, M2.maps, 0, int(cand))
        if ok and phi.min() >= 0 and len(np.unique(phi)) == M1.flag_count:
            return phi
    return None


def are_isomorphic(M1, M2):
    return map_isomorphism(M1, M2) is not None


def map_from_dict(doc):
    n = int(doc["flags"])
    return build_map(n, doc["r0"], doc["r1"], doc["r2"], name=doc.get("name") or None)


def load_map(path):
    return map_from_dict(json.loads(Path(path).read_text()))


def save_map(M, path):
    Path(path).write_text(json.dumps(M.to_dict()) + "\n")

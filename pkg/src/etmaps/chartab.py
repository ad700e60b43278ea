"""Character tables and the Frobenius count of solutions of ``abc = 1``.

Tables are fixture data, revalidated on every load.  An independent
brute-force count over a permutation group serves as the oracle.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

import numpy as np

from .permcore import GroupError

ROUNDING_TOLERANCE = 1e-3
ORTHOGONALITY_TOLERANCE = 1e-6
BRUTE_FORCE_BOUND = 10 ** 8

# group names accepted by table_for_group, keyed to table files
TABLE_ALIASES = {
    "A5": "A5", "psl2_5": "A5", "L2(5)": "A5",
    "A6": "A6", "psl2_9": "A6", "L2(9)": "A6",
    "psl2_7": "L2_7", "L2(7)": "L2_7", "L3_2": "L2_7", "L3(2)": "L2_7",
    "M11": "M11", "M22": "M22",
}


class CharacterTableError(ValueError):
    pass


@dataclass(frozen=True)
class ClassInfo:
    label: str
    size: int
    element_order: int


class CharacterTable:
    def __init__(self, group, order, classes, values):
        self.group = group
        self.order = int(order)
        self.classes = tuple(classes)
        self.values = np.asarray(values, dtype=np.complex128)
        self._index = {c.label: i for i, c in enumerate(self.classes)}
        self.validate()

    @property
    def labels(self):
        return [c.label for c in self.classes]

    @property
    def sizes(self):
        return np.array([c.size for c in self.classes], dtype=np.int64)

    @property
    def degrees(self):
        return self.values[:, 0].real

    def class_index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise CharacterTableError(f"unknown class {label!r} in table of {self.group}") from None

    def validate(self):
        k = len(self.classes)
        if self.values.shape != (k, k):
            raise CharacterTableError(f"{self.group}: table is {self.values.shape}, expected {k} x {k}")
        first = self.classes[0]
        if first.size != 1 or first.element_order != 1:
            raise CharacterTableError(f"{self.group}: first class must be the identity")
        if int(self.sizes.sum()) != self.order:
            raise CharacterTableError(f"{self.group}: class sizes sum to {int(self.sizes.sum())}, not {self.order}")
        for c in self.classes:
            if self.order % c.size:
                raise CharacterTableError(f"{self.group}: class {c.label} size {c.size} does not divide |G|")
        deg = self.values[:, 0]
        if np.any(np.abs(deg.imag) > 1e-9) or np.any(np.abs(deg.real - np.round(deg.real)) > 1e-9):
            raise CharacterTableError(f"{self.group}: degrees must be integers")
        if int(np.round(deg.real).astype(np.int64) @ np.round(deg.real).astype(np.int64)) != self.order:
            raise CharacterTableError(f"{self.group}: sum of squared degrees != |G|")
        gram = (self.values * self.sizes) @ self.values.conj().T
        err = np.abs(gram - self.order * np.eye(k)).max()
        if err > ORTHOGONALITY_TOLERANCE * self.order:
            raise CharacterTableError(f"{self.group}: row orthogonality fails (max error {err:.3g})")

    def column_orthogonality_error(self):
        """Largest deviation from ``sum_chi chi(a) conj chi(b) = |C_G(a)| delta``."""
        gram = self.values.conj().T @ self.values
        cent = self.order / self.sizes
        return float(np.abs(gram - np.diag(cent)).max())

    def is_automorphism(self, perm):
        """Whether permuting columns by ``perm`` maps the set of rows to itself."""
        moved = self.values[:, perm]
        used = np.zeros(len(self.values), dtype=bool)
        for r in moved:
            d = np.abs(self.values - r).max(axis=1)
            hit = np.flatnonzero((d < 1e-8) & ~used)
            if hit.size == 0:
                return False
            used[hit[0]] = True
        return True

    def to_dict(self):
        return {
            "group": self.group,
            "order": self.order,
            "classes": [{"label": c.label, "size": c.size, "element_order": c.element_order} for c in self.classes],
            "characters": [[{"re": repr(float(v.real)), "im": repr(float(v.imag))} for v in r] for r in self.values],
        }


def table_from_dict(doc):
    try:
        classes = [ClassInfo(str(c["label"]), int(c["size"]), int(c["element_order"])) for c in doc["classes"]]
        values = [[complex(float(v["re"]), float(v["im"])) for v in r] for r in doc["characters"]]
        return CharacterTable(doc["group"], int(doc["order"]), classes, values)
    except (KeyError, TypeError) as exc:
        raise CharacterTableError(f"malformed character table: {exc}") from exc


def load_character_table(path):
    return table_from_dict(json.loads(Path(path).read_text()))


@lru_cache(maxsize=None)
def builtin_table(name):
    key = TABLE_ALIASES.get(name, name)
    path = resources.files("etmaps").joinpath("data", "chartabs", f"{key}.json")
    if not path.is_file():
        raise CharacterTableError(f"no character table for {name!r}")
    return table_from_dict(json.loads(path.read_text()))


def frobenius_value(tab, A, B, C):
    """The unrounded Frobenius expression."""
    ia, ib, ic = (tab.class_index(x) for x in (A, B, C))
    chi = tab.values
    s = np.sum(chi[:, ia] * chi[:, ib] * chi[:, ic] / chi[:, 0])
    sizes = tab.sizes
    # keep the integer prefactor exact-ish by dividing last
    return complex(s) * (int(sizes[ia]) * int(sizes[ib]) * int(sizes[ic])) / tab.order


def frobenius_count(tab, A, B, C):
    """Number of ``(a, b, c)`` with ``abc = 1``, ``a in A``, ``b in B``, ``c in C``."""
    v = frobenius_value(tab, A, B, C)
    n = round(v.real)
    resid = max(abs(v.real - n), abs(v.imag))
    if resid >= ROUNDING_TOLERANCE:
        raise CharacterTableError(f"Frobenius count for ({A},{B},{C}) is {v}, residual {resid:.3g}")
    return int(n)


# ---------------------------------------------------------------------------
# matching table classes to the classes of a permutation group
# ---------------------------------------------------------------------------

def match_classes(tab, G):
    """Map each table label to the element indices of one conjugacy class of
    ``G``.  Classes are matched on (element order, size); where several
    classes share both, every permutation of the tied columns must be an
    automorphism of the table, so that no count depends on the choice."""
    table = G.element_table()
    if table.size != tab.order:
        raise CharacterTableError(f"|G| = {table.size} but the table is for order {tab.order}")
    labels = table.conjugacy_labels
    orders = table.orders
    ncls = int(labels.max()) + 1
    sizes = np.bincount(labels, minlength=ncls)
    reps = np.full(ncls, -1, dtype=np.int64)
    for i in range(table.size - 1, -1, -1):
        reps[labels[i]] = i
    group_key = {}
    for k in range(ncls):
        group_key.setdefault((int(orders[reps[k]]), int(sizes[k])), []).append(k)
    table_key = {}
    for i, c in enumerate(tab.classes):
        table_key.setdefault((c.element_order, c.size), []).append(i)
    if sorted((k, len(v)) for k, v in group_key.items()) != sorted((k, len(v)) for k, v in table_key.items()):
        raise CharacterTableError("class (order, size) census of the group disagrees with the table")
    out = {}
    for key, cols in table_key.items():
        if len(cols) > 1:
            for perm in itertools.permutations(cols):
                full = np.arange(len(tab.classes))
                full[list(cols)] = perm
                if not tab.is_automorphism(full):
                    raise CharacterTableError(f"tied classes {[tab.classes[i].label for i in cols]} are not "
                                              "interchangeable; cannot match them by order and size")
        for col, k in zip(cols, sorted(group_key[key])):
            out[tab.classes[col].label] = np.flatnonzero(labels == k)
    return out


def brute_force_count(G, A, B, C, classes=None, tab=None):
    """Exact count of ``(a, b)`` with ``a in A``, ``b in B`` and
    ``(ab)^-1 in C``.  ``A, B, C`` are labels (resolved through ``classes``
    or a table) or explicit arrays of element indices."""
    table = G.element_table()
    if classes is None and any(isinstance(x, str) for x in (A, B, C)):
        classes = match_classes(tab if tab is not None else builtin_table(G.name), G)
    sets = [np.asarray(classes[x] if isinstance(x, str) else x, dtype=np.int64) for x in (A, B, C)]
    a_set, b_set, c_set = sets
    if len(a_set) * len(b_set) > BRUTE_FORCE_BOUND:
        raise CharacterTableError(f"|A||B| = {len(a_set) * len(b_set)} exceeds {BRUTE_FORCE_BOUND}")
    in_c = np.zeros(table.size, dtype=bool)
    in_c[c_set] = True
    inv = table.inverses
    total = 0
    for a in a_set.tolist():
        prod = table.left_map(a, b_set)
        total += int(np.count_nonzero(in_c[inv[prod]]))
    return total


def table_for_group(name):
    return builtin_table(name)

"""The fourteen edge-transitive classes and their classification.

Classes are grouped into six rows, the orbits of the duality group
``<D, P>`` (isomorphic to S3).  ``D`` swaps the first two classes of a
three-class row and ``P`` swaps the last two; the singleton rows ``1`` and
``3`` are fixed.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache


class EtClass(str, Enum):
    ONE = "1"
    TWO = "2"
    TWO_STAR = "2*"
    TWO_P = "2P"
    TWO_EX = "2ex"
    TWO_STAR_EX = "2*ex"
    TWO_P_EX = "2Pex"
    THREE = "3"
    FOUR = "4"
    FOUR_STAR = "4*"
    FOUR_P = "4P"
    FIVE = "5"
    FIVE_STAR = "5*"
    FIVE_P = "5P"

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, label):
        if isinstance(label, cls):
            return label
        text = str(label).strip()
        for member in cls:
            if member.value == text or member.name == text.upper():
                return member
        raise ValueError(f"unknown edge-transitive class {label!r}")

    @property
    def row(self):
        """Orbit row index, 1..6."""
        return _ROW_OF[self][0]

    @property
    def sigma(self):
        """Position tag inside the row: ``""``, ``"*"`` or ``"P"``."""
        return ("", "*", "P")[_ROW_OF[self][1]]

    @property
    def row_members(self):
        return ROWS[self.row - 1]


ROWS = (
    (EtClass.ONE,),
    (EtClass.TWO, EtClass.TWO_STAR, EtClass.TWO_P),
    (EtClass.TWO_EX, EtClass.TWO_STAR_EX, EtClass.TWO_P_EX),
    (EtClass.THREE,),
    (EtClass.FOUR, EtClass.FOUR_STAR, EtClass.FOUR_P),
    (EtClass.FIVE, EtClass.FIVE_STAR, EtClass.FIVE_P),
)

_ROW_OF = {c: (r + 1, k) for r, row in enumerate(ROWS) for k, c in enumerate(row)}

ALL_CLASSES = tuple(c for row in ROWS for c in row)

# representative of each row for which parent-group presentations are given
REPRESENTATIVES = (EtClass.ONE, EtClass.TWO, EtClass.TWO_P_EX, EtClass.THREE, EtClass.FOUR, EtClass.FIVE)


def omega_act(op, T):
    """Image of class ``T`` under a word in ``D`` and ``P`` (applied left to right)."""
    T = EtClass.parse(T)
    for letter in op.upper():
        row = T.row_members
        if len(row) == 1:
            continue
        k = _ROW_OF[T][1]
        if letter == "D":
            k = {0: 1, 1: 0, 2: 2}[k]
        elif letter == "P":
            k = {0: 0, 1: 2, 2: 1}[k]
        else:
            raise ValueError(f"unknown duality letter {letter!r}")
        T = row[k]
    return T


def omega_word_from(rep, T):
    """A word ``w`` in D, P with ``omega_act(w, rep) == T`` (shortest, D before P)."""
    for w in ("", "D", "P", "DP", "PD", "DPD"):
        if omega_act(w, rep) == T:
            return w
    raise ValueError(f"{T} is not in the row of {rep}")


def row_representative(T):
    T = EtClass.parse(T)
    return REPRESENTATIVES[T.row - 1]


# ---------------------------------------------------------------------------
# basic maps and classification
# ---------------------------------------------------------------------------

class ClassificationError(ValueError):
    pass


class NotEdgeTransitive(ClassificationError):
    pass


@lru_cache(maxsize=None)
def basic_map(T):
    """The one-edge map of class ``T``: the parent-group coset action."""
    from .parent import build_map, trivial_tuple

    T = EtClass.parse(T)
    return build_map(trivial_tuple(T), None)


def is_edge_transitive(M):
    return len(M.quotient().cells.edges) == 1


def classify(M):
    """Class of an edge-transitive map, read off from its quotient by the
    automorphism group."""
    from .flagmap import are_isomorphic

    Q = M.quotient()
    if len(Q.cells.edges) != 1:
        raise NotEdgeTransitive(f"map is not edge-transitive ({len(Q.cells.edges)} edge orbits)")
    for T in ALL_CLASSES:
        B = basic_map(T)
        if B.flag_count == Q.flag_count and are_isomorphic(Q, B):
            return T
    raise ClassificationError("quotient matches no basic map")  # pragma: no cover

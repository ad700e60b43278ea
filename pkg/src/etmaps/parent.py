"""Parent groups of the edge-transitive classes and maps built from
generator tuples.

The universal group ``Gamma = <R0, R1, R2 | R_i^2, (R0 R2)^2>`` is the free
product ``V4 * C2`` with ``V4 = <R0, R2>``.  A class ``T`` is determined by a
subgroup ``N(T)`` of ``Gamma`` containing the kernel of the action on the
basic one-edge map.  A map of class ``T`` with automorphism group ``G``
corresponds to an epimorphism ``N(T) -> G`` whose kernel is not normalised
by the relevant part of ``Gamma``, which in practice means: a generator
tuple of ``G`` satisfying the relations of ``N(T)`` that is not sent by any
automorphism of ``G`` to one of a few fixed rearrangements.

Words in ``Gamma`` are strings over ``"012"`` read left to right (``"01"``
is ``R0`` then ``R1``); conjugation is ``x^g = g^-1 x g``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

import numpy as np

from .etclass import EtClass, omega_act, omega_word_from, row_representative
from .flagmap import FlagMap
from .permcore import GroupError, PermGroup, Permutation, as_perm, extends_indices


class TupleError(ValueError):
    """A tuple fails the relations or the generation condition of its class."""

    def __init__(self, message, relation=None):
        super().__init__(message)
        self.relation = relation


class TransferError(ValueError):
    """The hypotheses of a transfer fail for the given input."""


# ---------------------------------------------------------------------------
# Gamma
# ---------------------------------------------------------------------------

_R1 = 4  # syllable code for R1; V4 syllables are masks 1 (R0), 2 (R2), 3 (R0R2)
_SYLLABLE_WORD = {1: "0", 2: "2", 3: "02", _R1: "1"}


def gamma_normal_form(word):
    """Reduced form of a word as a tuple of syllables alternating between a
    nontrivial V4 mask and ``R1``."""
    out = []
    for ch in word:
        if ch == "1":
            if out and out[-1] == _R1:
                out.pop()
            else:
                out.append(_R1)
            continue
        m = 1 if ch == "0" else 2 if ch == "2" else None
        if m is None:
            raise ValueError(f"bad letter {ch!r} in word {word!r}")
        if out and out[-1] != _R1:
            m ^= out.pop()
            if m:
                out.append(m)
        else:
            out.append(m)
    return tuple(out)


def gamma_word(nf):
    return "".join(_SYLLABLE_WORD[s] for s in nf)


def gamma_inverse(word):
    return word[::-1]


def omega_word(op, word):
    """Apply the outer automorphisms ``D`` (``R0 <-> R2``) and ``P``
    (``R0 -> R0 R2``) letter by letter."""
    for letter in op.upper():
        if letter == "D":
            word = word.translate(str.maketrans("02", "20"))
        elif letter == "P":
            word = word.replace("0", "02")
        else:
            raise ValueError(f"unknown duality letter {letter!r}")
    return gamma_word(gamma_normal_form(word))


def evaluate_on_points(perms, word, point):
    for ch in word:
        point = int(perms[int(ch)][point])
    return point


# ---------------------------------------------------------------------------
# class data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClassSpec:
    """Presentation data of ``N(T)`` for one class."""

    cls: EtClass
    names: tuple          # generator names, e.g. ("s1", "s2", "s")
    words: tuple          # Gamma words of the generators
    involutory: tuple     # whether each generator squares to 1
    extra_relations: tuple  # further relator words in generator indices
    forbidden: tuple      # patterns: tuples of (generator index, exponent)
    basic: tuple          # (r0, r1, r2) of the basic map as image tuples

    @property
    def arity(self):
        return len(self.words)


_ID2, _SW2 = (0, 1), (1, 0)
_V_R0, _V_R2 = (1, 0, 3, 2), (2, 3, 0, 1)

_REPRESENTATIVE_DATA = {
    EtClass.ONE: dict(
        names=("r0", "r1", "r2"), words=("0", "1", "2"), involutory=(True, True, True),
        extra_relations=(((0, 1), (2, 1), (0, 1), (2, 1)),), forbidden=(),
        basic=((0,), (0,), (0,))),
    EtClass.TWO: dict(
        names=("s1", "s2", "s3"), words=("1", "010", "2"), involutory=(True, True, True),
        extra_relations=(), forbidden=(((1, 1), (0, 1), (2, 1)),),
        basic=(_SW2, _ID2, _ID2)),
    EtClass.TWO_P_EX: dict(
        names=("x", "y"), words=("12", "02"), involutory=(False, True),
        extra_relations=(), forbidden=(((0, -1), (1, 1)),),
        basic=(_SW2, _SW2, _SW2)),
    EtClass.THREE: dict(
        names=("s0", "s1", "s2", "s3"), words=("1", "010", "212", "20102"),
        involutory=(True, True, True, True), extra_relations=(),
        forbidden=(((1, 1), (0, 1), (3, 1), (2, 1)),
                   ((2, 1), (3, 1), (0, 1), (1, 1)),
                   ((3, 1), (2, 1), (1, 1), (0, 1))),
        basic=(_V_R0, (0, 1, 2, 3), _V_R2)),
    EtClass.FOUR: dict(
        names=("s1", "s2", "s"), words=("1", "212", "0120"), involutory=(True, True, False),
        extra_relations=(), forbidden=(((1, 1), (0, 1), (2, -1)),),
        basic=(_V_R0, (0, 3, 2, 1), _V_R2)),
    EtClass.FIVE: dict(
        names=("s", "s'"), words=("12", "0120"), involutory=(False, False),
        extra_relations=(),
        forbidden=(((0, -1), (1, -1)), ((1, 1), (0, 1)), ((1, -1), (0, -1))),
        basic=(_V_R0, _V_R2, _V_R2)),
}


def _omega_basic(op, basic):
    r0, r1, r2 = (np.asarray(r) for r in basic)
    for letter in op:
        if letter == "D":
            r0, r2 = r2, r0
        else:
            r0 = r2[r0]
    return tuple(tuple(int(v) for v in r) for r in (r0, r1, r2))


@lru_cache(maxsize=None)
def class_spec(T):
    T = EtClass.parse(T)
    rep = row_representative(T)
    data = _REPRESENTATIVE_DATA[rep]
    op = omega_word_from(rep, T)
    return ClassSpec(
        cls=T,
        names=data["names"],
        words=tuple(omega_word(op, w) for w in data["words"]),
        involutory=data["involutory"],
        extra_relations=data["extra_relations"],
        forbidden=data["forbidden"],
        basic=_omega_basic(op, data["basic"]),
    )


@dataclass(frozen=True)
class Rewrite:
    """Coset data of ``N(T)`` in ``Gamma``.

    ``transversal[j]`` is a word in ``<R0, R2>`` carrying coset 0 to coset
    ``j``; for each coset ``j`` and letter ``i``, ``t_j R_i = n t_k`` with
    ``k = target[j][i]`` and ``n = schreier[j][i]`` a word in the
    generators of ``N(T)`` (pairs ``(index, exponent)``).
    """

    transversal: tuple
    target: tuple
    schreier: tuple


def _express_in_generators(spec, wanted, max_len=6):
    found = {gamma_normal_form(""): ()}
    letters = []
    for k, w in enumerate(spec.words):
        letters.append(((k, 1), w))
        if not spec.involutory[k]:
            letters.append(((k, -1), gamma_inverse(w)))
    frontier = [((), "")]
    remaining = set(wanted) - set(found)
    for _ in range(max_len):
        if not remaining:
            break
        nxt = []
        for seq, word in frontier:
            for letter, w in letters:
                cand = gamma_word(gamma_normal_form(word + w))
                nf = gamma_normal_form(cand)
                if nf not in found:
                    found[nf] = seq + (letter,)
                    remaining.discard(nf)
                    nxt.append((seq + (letter,), cand))
        frontier = nxt
    if remaining:
        raise GroupError(f"could not rewrite {len(remaining)} Schreier elements for class {spec.cls}")
    return found


@lru_cache(maxsize=None)
def rewrite_table(T):
    spec = class_spec(T)
    basic = [np.asarray(r) for r in spec.basic]
    k = len(basic[0])
    transversal = [None] * k
    for w in ("", "0", "2", "02"):
        j = evaluate_on_points(basic, w, 0)
        if transversal[j] is None:
            transversal[j] = w
    if any(t is None for t in transversal):
        raise GroupError(f"basic map of class {T} is not V4-transitive")
    target, raw = [], []
    for j, t in enumerate(transversal):
        row_t, row_n = [], []
        for i in "012":
            w = t + i
            jj = evaluate_on_points(basic, w, 0)
            row_t.append(jj)
            row_n.append(gamma_normal_form(w + gamma_inverse(transversal[jj])))
        target.append(tuple(row_t))
        raw.append(row_n)
    found = _express_in_generators(spec, {nf for row in raw for nf in row})
    schreier = tuple(tuple(found[nf] for nf in row) for row in raw)
    return Rewrite(tuple(transversal), tuple(target), schreier)


# ---------------------------------------------------------------------------
# generator tuples
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GeneratorTuple:
    cls: EtClass
    images: tuple
    validated: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "cls", EtClass.parse(self.cls))
        object.__setattr__(self, "images", tuple(as_perm(x) for x in self.images))

    @property
    def degree(self):
        return self.images[0].degree if self.images else 1

    def named(self):
        return dict(zip(class_spec(self.cls).names, self.images))

    def to_dict(self, group_name=None):
        return {
            "class": str(self.cls),
            "group": group_name or "",
            "degree": self.degree,
            "images": [g.images for g in self.images],
        }


def trivial_tuple(T):
    spec = class_spec(T)
    return GeneratorTuple(T, tuple(Permutation.identity(1) for _ in range(spec.arity)))


def _word_value(images, word, degree):
    out = Permutation.identity(degree)
    for k, e in word:
        out = out * (images[k] if e > 0 else ~images[k])
    return out


def validate_tuple(t, G):
    """Check relations and generation; return the tuple marked validated."""
    spec = class_spec(t.cls)
    if len(t.images) != spec.arity:
        raise TupleError(f"class {t.cls} expects {spec.arity} generators {spec.names}, got {len(t.images)}",
                         relation="arity")
    n = G.degree
    for name, g in zip(spec.names, t.images):
        if g.degree != n:
            raise TupleError(f"{name} has degree {g.degree}, group has degree {n}", relation="degree")
        if not G.contains(g):
            raise TupleError(f"{name} is not an element of the group", relation="membership")
    for name, g, inv in zip(spec.names, t.images, spec.involutory):
        if inv and not (g * g).is_identity():
            raise TupleError(f"{name}^2 != 1", relation=f"{name}^2")
    for rel in spec.extra_relations:
        if not _word_value(t.images, rel, n).is_identity():
            text = "".join(spec.names[k] for k, _ in rel)
            raise TupleError(f"relation ({text}) = 1 fails", relation=text)
    H = PermGroup(list(t.images), n)
    if H.order() != G.order():
        raise TupleError(f"tuple generates a subgroup of order {H.order()}, not {G.order()}",
                         relation="generation")
    return GeneratorTuple(t.cls, t.images, validated=True)


def pattern_images(t, pattern):
    return [t.images[k] if e > 0 else ~t.images[k] for k, e in pattern]


def forbidden_automorphism(t, G):
    """The first forbidden rearrangement of ``t`` reachable by an
    automorphism of ``G``, or ``None``."""
    spec = class_spec(t.cls)
    table = G.element_table()
    src = [table.index(g) for g in t.images]
    for pattern in spec.forbidden:
        dst = [table.index(g) for g in pattern_images(t, pattern)]
        if extends_indices(table, src, dst):
            return pattern
    return None


def forbidden_automorphism_exists(t, G):
    return forbidden_automorphism(t, G) is not None


def forbidden_indices(table, T, idx):
    """Index-space variant used by the searches; ``idx`` must generate."""
    spec = class_spec(T)
    inv = table.inverses
    for pattern in spec.forbidden:
        dst = [int(idx[k]) if e > 0 else int(inv[idx[k]]) for k, e in pattern]
        if extends_indices(table, list(map(int, idx)), dst):
            return True
    return False


# ---------------------------------------------------------------------------
# maps from tuples
# ---------------------------------------------------------------------------

def build_map(t, G=None, name=None):
    """The map of class ``t.cls`` with flags ``coset x G``.

    Flag ``(j, g)`` has index ``j |G| + g``; ``(j, g) R_i = (k, g theta(n))``
    where ``t_j R_i = n t_k``.  With ``G`` omitted the group generated by
    the images is used.
    """
    spec = class_spec(t.cls)
    rw = rewrite_table(t.cls)
    if G is None:
        G = PermGroup(list(t.images), t.degree)
    table = G.element_table()
    N = table.size
    k = len(rw.transversal)
    rs = [np.empty(k * N, dtype=np.int64) for _ in range(3)]
    for j in range(k):
        for i in range(3):
            h = table.index(_word_value(t.images, rw.schreier[j][i], G.degree))
            rs[i][j * N:(j + 1) * N] = rw.target[j][i] * N + table.right_map(h)
    return FlagMap(*rs, name=name or f"{t.cls} map of order {N}")


def basic_map_perms(T):
    return class_spec(T).basic


# ---------------------------------------------------------------------------
# transfers between classes
# ---------------------------------------------------------------------------

def omega_transform_tuple(t, op):
    """Tuple of class ``op(T)`` with the same images (the generators of
    ``N(op T)`` are the images of those of ``N(T)`` under ``op``)."""
    return GeneratorTuple(omega_act(op, t.cls), t.images, validated=t.validated)


def is_strongly_real(G, x):
    """An involution inverting ``x`` by conjugation, or ``None``."""
    x = as_perm(x, G.degree)
    xi = ~x
    table = G.element_table()
    for a in table.involutions():
        g = table.perm(a)
        if g * x * g == xi:
            return g
    return None


def _direct_transfer(src, dst, images, G):
    S, D = src, dst
    if S == EtClass.ONE and D in (EtClass.TWO, EtClass.THREE):
        r0, r1, r2 = images
        if (r1 * r2).order() <= 2:
            r0, r2 = r2, r0
            if (r1 * r2).order() <= 2:
                raise TransferError("both r0r1 and r1r2 have order <= 2: the group is not non-abelian")
        return (r0, r1, r2) if D == EtClass.TWO else (r1, r2, r0, r2)
    if S == EtClass.ONE and D == EtClass.FOUR:
        return tuple(images)
    if S == EtClass.TWO and D == EtClass.THREE:
        s1, s2, s3 = images
        return (s3, s1, s2, s3)
    if S == EtClass.TWO and D == EtClass.FOUR:
        return tuple(images)
    if S == EtClass.TWO_P_EX and D == EtClass.FIVE:
        return tuple(images)
    if S == EtClass.TWO_P_EX and D == EtClass.FOUR:
        x, y = images
        return (y, y, x)
    if S == EtClass.TWO_P_EX and D == EtClass.TWO:
        x, y = images
        a = is_strongly_real(G, x)
        if a is None:
            raise TransferError("x is not strongly real")
        return (a, a * x, y)
    return None


def transfer_witness(t, to, G):
    """Derive a tuple of class ``to`` from a validated tuple ``t``.

    Classes in the same row are reached by relabelling.  Otherwise the tuple
    is moved to its row representative, transferred there, and relabelled
    onto ``to``.  The result is revalidated and checked against the
    forbidden patterns; a failure raises :class:`TransferError`.
    """
    to = EtClass.parse(to)
    t = validate_tuple(t, G) if not t.validated else t
    if to.row == t.cls.row:
        return omega_transform_tuple(t, omega_word_from(t.cls, to))
    src_rep, dst_rep = row_representative(t.cls), row_representative(to)
    base = omega_transform_tuple(t, omega_word_from(t.cls, src_rep))
    images = _direct_transfer(src_rep, dst_rep, base.images, G)
    if images is None:
        raise TransferError(f"no transfer from class {t.cls} to class {to}")
    out = GeneratorTuple(dst_rep, images)
    try:
        out = validate_tuple(out, G)
    except TupleError as exc:
        raise TransferError(f"transferred tuple is invalid: {exc}") from exc
    if forbidden_automorphism_exists(out, G):
        raise TransferError("transferred tuple admits a forbidden automorphism")
    return omega_transform_tuple(out, omega_word_from(dst_rep, to))


# ---------------------------------------------------------------------------
# I/O
# ---------------------------------------------------------------------------

def tuple_from_dict(doc):
    items = doc.get("images", doc.get("generators"))
    n = int(doc.get("degree") or (len(items[0]) if items and not isinstance(items[0], str) else 0))
    gens = [Permutation.from_cycles(g, n) if isinstance(g, str) else Permutation(g) for g in items]
    return GeneratorTuple(doc["class"], tuple(gens))


def load_tuple(path):
    return tuple_from_dict(json.loads(Path(path).read_text()))


def save_tuple(t, path, group_name=None):
    Path(path).write_text(json.dumps(t.to_dict(group_name)) + "\n")

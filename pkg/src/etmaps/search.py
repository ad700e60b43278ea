"""Searches for class-realising generator tuples in small groups.

Exhaustive searches fix the first slot to one representative of each
conjugacy class (weighting by the class size), since conjugation preserves
both generation and the forbidden-automorphism condition.  Budgeted
searches draw tuples from a seeded generator and can only prove existence.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import math
import time
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

import numpy as np

from . import __version__
from .fields import prime_factors
from .etclass import ALL_CLASSES, EtClass, classify, is_edge_transitive, row_representative
from .flagmap import are_isomorphic
from .groupzoo import group_by_name
from .parent import (
    GeneratorTuple,
    build_map,
    class_spec,
    forbidden_automorphism_exists,
    forbidden_indices,
    omega_transform_tuple,
    omega_word_from,
    validate_tuple,
)
from .permcore import DEFAULT_ENUMERATION_BOUND, GroupError, PermGroup, Permutation

MAZUROV_BOUND = 25_000
DEFAULT_BUDGET = 20_000
# exhaustive searches are refused above this many (tuple x group element) steps
EXHAUSTIVE_WORK_LIMIT = 4 * 10 ** 9


class SearchError(ValueError):
    pass


class InfeasibleSearch(SearchError):
    def __init__(self, message, work):
        super().__init__(message)
        self.work = work


class Verdict(str, Enum):
    REALIZED = "REALIZED"
    NOT_REALIZED = "NOT_REALIZED"
    OUT_OF_SCOPE = "OUT_OF_SCOPE"

    def __str__(self):
        return self.value


# ---------------------------------------------------------------------------
# domains
# ---------------------------------------------------------------------------

def _table(G):
    if G.order() > DEFAULT_ENUMERATION_BOUND:
        raise SearchError(f"|G| = {G.order()} exceeds the enumeration bound {DEFAULT_ENUMERATION_BOUND}")
    return G.element_table()


def _involution_domain(table):
    return table.involutions(include_identity=True)


def _class_reps(table, domain):
    """Representatives (smallest index) of the conjugacy classes meeting
    ``domain``, with class sizes."""
    labels = table.conjugacy_labels[domain]
    uniq, first, counts = np.unique(labels, return_index=True, return_counts=True)
    return domain[first], counts


def _commuting(table, a, candidates):
    conj = table.conjugation_map(a)
    return candidates[conj[candidates] == candidates]


def slot_domains(table, T):
    spec = class_spec(T)
    inv = _involution_domain(table)
    everything = np.arange(table.size, dtype=np.int64)
    return [inv if flag else everything for flag in spec.involutory]


def exhaustive_work(G, T):
    """``(tuples, steps)``: tuples visited by an exhaustive search and the
    rough cost in group-element steps."""
    table = _table(G)
    T = EtClass.parse(T)
    doms = slot_domains(table, T)
    reps, _ = _class_reps(table, doms[0])
    if T == EtClass.ONE:
        tuples = sum(len(_commuting(table, int(r), doms[2])) for r in reps) * len(doms[1])
    else:
        tuples = len(reps) * math.prod(len(d) for d in doms[1:])
    return tuples, tuples * table.size


# ---------------------------------------------------------------------------
# results
# ---------------------------------------------------------------------------

@dataclass
class SearchResult:
    group: str
    cls: EtClass
    mode: str
    seed: int | None = None
    visited: int = 0
    generating: int = 0
    admissible: int = 0
    # exact counts over all tuples (exhaustive runs only)
    generating_total: int = 0
    admissible_total: int = 0
    complete: bool = False
    witnesses: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def witness(self):
        return self.witnesses[0] if self.witnesses else None

    def to_dict(self):
        return {
            "group": self.group,
            "class": str(self.cls),
            "mode": self.mode,
            "seed": self.seed,
            "visited": self.visited,
            "generating": self.generating,
            "admissible": self.admissible,
            "generating_total": self.generating_total if self.complete else None,
            "admissible_total": self.admissible_total if self.complete else None,
            "complete": self.complete,
            "witnesses": [[g.images for g in w.images] for w in self.witnesses],
            "elapsed": round(self.elapsed, 3),
        }


def _tuple_of(table, T, idx):
    return GeneratorTuple(T, tuple(table.perm(int(i)) for i in idx))


def _check(table, T, idx, has_patterns):
    """``(generates, admissible)`` for an index tuple."""
    if not table.generates(list(idx)):
        return False, False
    if not has_patterns:
        return True, True
    return True, not forbidden_indices(table, T, idx)


def iter_exhaustive(G, T, reverse=False):
    """Yield ``(index tuple, weight, generates, admissible)`` over all tuples
    with the first slot restricted to class representatives."""
    table = _table(G)
    T = EtClass.parse(T)
    spec = class_spec(T)
    doms = slot_domains(table, T)
    if reverse:
        doms = [d[::-1] for d in doms]
    reps, sizes = _class_reps(table, doms[0])
    has_patterns = bool(spec.forbidden)
    for r, w in zip(reps.tolist(), sizes.tolist()):
        if T == EtClass.ONE:
            rest = ((r1, r2) for r2 in _commuting(table, r, doms[2]).tolist() for r1 in doms[1].tolist())
        else:
            rest = itertools.product(*(d.tolist() for d in doms[1:]))
        for tail in rest:
            idx = (r,) + tuple(tail)
            gen, ok = _check(table, T, idx, has_patterns)
            yield idx, w, gen, ok


def _sample(table, T, doms, rng):
    idx = [int(d[rng.integers(len(d))]) for d in doms]
    if T == EtClass.ONE:
        com = _commuting(table, idx[0], doms[2])
        idx[2] = int(com[rng.integers(len(com))])
    return tuple(idx)


def search_class_tuples(G, T, mode="exhaustive", seed=0, limit=DEFAULT_BUDGET, stop_at_first=False,
                        max_witnesses=1, reverse=False, work_limit=EXHAUSTIVE_WORK_LIMIT):
    """Search ``G`` for tuples of class ``T`` without forbidden automorphisms.

    ``mode`` is ``"exhaustive"`` (complete enumeration up to conjugacy,
    exact weighted counts) or ``"budgeted"`` (``limit`` seeded random draws).
    """
    T = EtClass.parse(T)
    table = _table(G)
    res = SearchResult(group=G.name or "G", cls=T, mode=mode)
    t0 = time.perf_counter()
    if mode == "exhaustive":
        tuples, work = exhaustive_work(G, T)
        if work > work_limit:
            raise InfeasibleSearch(f"exhaustive search of {G.name} for class {T} needs ~{work:.3g} steps", work)
        for idx, w, gen, ok in iter_exhaustive(G, T, reverse=reverse):
            res.visited += 1
            res.generating += gen
            res.generating_total += w * gen
            res.admissible += ok
            res.admissible_total += w * ok
            if ok and len(res.witnesses) < max_witnesses:
                res.witnesses.append(_tuple_of(table, T, idx))
            if ok and stop_at_first:
                break
        else:
            res.complete = True
    elif mode == "budgeted":
        rng = np.random.default_rng(seed)
        res.seed = seed
        doms = slot_domains(table, T)
        has_patterns = bool(class_spec(T).forbidden)
        for _ in range(limit):
            idx = _sample(table, T, doms, rng)
            gen, ok = _check(table, T, idx, has_patterns)
            res.visited += 1
            res.generating += gen
            res.admissible += ok
            if ok:
                if len(res.witnesses) < max_witnesses:
                    res.witnesses.append(_tuple_of(table, T, idx))
                if stop_at_first:
                    break
    else:
        raise SearchError(f"unknown search mode {mode!r}")
    res.elapsed = time.perf_counter() - t0
    return res


# ---------------------------------------------------------------------------
# class 1 counts
# ---------------------------------------------------------------------------

def enumerate_mazurov_triples(G, bound=MAZUROV_BOUND):
    """All generating triples ``(r0, r1, r2)`` of elements of order dividing 2
    with ``r0 r2 = r2 r0``, as permutations."""
    if G.order() > bound:
        raise SearchError(f"|G| = {G.order()} exceeds the Mazurov enumeration bound {bound}")
    table = _table(G)
    inv = _involution_domain(table)
    for r0 in inv.tolist():
        for r2 in _commuting(table, r0, inv).tolist():
            for r1 in inv.tolist():
                if table.generates([r0, r1, r2]):
                    yield tuple(table.perm(k) for k in (r0, r1, r2))


def mazurov_count(G, bound=MAZUROV_BOUND):
    """m(G), counted over class representatives of ``r0``."""
    if G.order() > bound:
        raise SearchError(f"|G| = {G.order()} exceeds the Mazurov enumeration bound {bound}")
    res = search_class_tuples(G, EtClass.ONE, mode="exhaustive", max_witnesses=0)
    return res.admissible_total


def count_maps_up_to_iso(G, T, tuples, aut_order=None):
    """n(G): isomorphism classes among the maps built from ``tuples`` (which
    must be a complete enumeration).  For class 1 with ``aut_order`` given,
    ``n * aut_order`` is checked against the number of tuples."""
    T = EtClass.parse(T)
    buckets = {}
    m = 0
    for t in tuples:
        m += 1
        if not isinstance(t, GeneratorTuple):
            t = GeneratorTuple(T, tuple(t))
        M = build_map(t, G)
        bucket = buckets.setdefault(M.signature(), [])
        if not any(are_isomorphic(M, other) for other in bucket):
            bucket.append(M)
    n = sum(len(b) for b in buckets.values())
    if T == EtClass.ONE and aut_order is not None and n * aut_order != m:
        raise SearchError(f"n(G) * |Aut G| = {n * aut_order} != m(G) = {m}")
    return n


# ---------------------------------------------------------------------------
# Jordan certificate
# ---------------------------------------------------------------------------

def _prime_cycle_power(g, n):
    """A power of ``g`` that is a single p-cycle (p prime) with at least
    three fixed points, or ``None``."""
    order = g.order()
    for p in prime_factors(order):
        h = g ** (order // p)
        moved = [c for c in h.cycles() if len(c) > 1]
        if len(moved) == 1 and n - p >= 3:
            return h
    return None


def jordan_witness(H, tries=4000, seed=0):
    """An element of ``H`` that is a prime cycle with at least three fixed
    points, if ``H`` is primitive and one is found; else ``None``."""
    if not H.is_transitive():
        raise SearchError("jordan_certificate needs a transitive group")
    primitive, _ = H.is_primitive()
    if not primitive:
        return None
    n = H.degree
    gens = list(H.generators)
    candidates = list(gens)
    candidates += [a * b for a in gens for b in gens if a is not b]
    candidates += [a * b * c for a in gens for b in gens for c in gens]
    for g in candidates:
        w = _prime_cycle_power(g, n)
        if w is not None:
            return w
    rng = np.random.default_rng(seed)
    g = Permutation.identity(n)
    for _ in range(tries):
        g = g * gens[rng.integers(len(gens))]
        w = _prime_cycle_power(g, n)
        if w is not None:
            return w
    return None


def jordan_certificate(H):
    """True when ``H`` is primitive and contains a prime cycle fixing at
    least three points, which forces ``H`` to contain the alternating group."""
    return jordan_witness(H) is not None


# ---------------------------------------------------------------------------
# witnesses and table rows
# ---------------------------------------------------------------------------

def verify_witness(t, G):
    """Full roundtrip for a tuple: validation, forbidden check, map
    construction, edge-transitivity, classification and |Aut| = |G|."""
    out = {"valid": False, "forbidden_free": False, "edge_transitive": False,
           "classified": None, "aut_order": None}
    t = validate_tuple(t, G)
    out["valid"] = True
    out["forbidden_free"] = not forbidden_automorphism_exists(t, G)
    M = build_map(t, G)
    out["flags"] = M.flag_count
    out["edge_transitive"] = is_edge_transitive(M)
    if out["edge_transitive"]:
        out["classified"] = str(classify(M))
    out["aut_order"] = M.automorphism_order()
    out["ok"] = (out["forbidden_free"] and out["edge_transitive"] and out["classified"] == str(t.cls)
                 and out["aut_order"] == G.order())
    return out


# groups in the roster and the families they belong to, for reading off the
# expected verdicts
ROSTER_FAMILIES = {
    "A5": {"L2"},
    "psl2_5": {"L2"},
    "A6": {"L2", "A6"},
    "psl2_9": {"L2", "A6"},
    "A7": {"A7"},
    "A8": {"L4_2e"},
    "psl2_7": {"L2", "L3"},
    "L3_2": {"L2", "L3"},
    "psl2_8": {"L2"},
    "psl2_11": {"L2"},
    "psl2_13": {"L2"},
    "M11": {"M11"},
    "U3_3": {"U3", "U3_3"},
}

# exceptions per orbit row
ROW_EXCEPTIONS = {
    1: {"L3", "U3", "L4_2e", "U4_2e", "U4_3", "U5_2", "A6", "A7", "M11", "M22", "M23", "McL"},
    2: {"U3_3"},
    3: {"L2", "L3", "U3", "A7"},
    4: set(),
    5: set(),
    6: {"L2"},
}

DEFAULT_ROSTER = ("A5", "A6", "A7", "A8", "psl2_7", "psl2_8", "psl2_9", "psl2_11", "M11", "U3_3")
EXTENDED_ROSTER = DEFAULT_ROSTER + ("psl2_5", "psl2_13", "L3_2")


def expected_membership(group_name, T):
    """Expected membership of the group in the class according to the table."""
    fams = ROSTER_FAMILIES.get(group_name)
    if fams is None:
        raise SearchError(f"{group_name!r} is not in the roster")
    return not (fams & ROW_EXCEPTIONS[EtClass.parse(T).row])


@dataclass
class RowVerdict:
    group: str
    cls: EtClass
    verdict: Verdict
    expected_realized: bool
    witness: GeneratorTuple | None = None
    roundtrip: dict | None = None
    search: list = field(default_factory=list)
    reason: str = ""
    count: int | None = None

    @property
    def agrees(self):
        if self.verdict == Verdict.OUT_OF_SCOPE:
            return True
        return (self.verdict == Verdict.REALIZED) == self.expected_realized

    def to_dict(self):
        return {
            "group": self.group,
            "class": str(self.cls),
            "verdict": str(self.verdict),
            "expected": "REALIZED" if self.expected_realized else "NOT_REALIZED",
            "agrees": self.agrees,
            "count": self.count,
            "witness": [g.images for g in self.witness.images] if self.witness else None,
            "roundtrip": self.roundtrip,
            "reason": self.reason,
            "searches": [s.to_dict() for s in self.search],
        }


def resolve_group(group):
    if isinstance(group, PermGroup):
        return group
    G = group_by_name(group)
    if G.name is None:
        G.name = group
    return G


@lru_cache(maxsize=None)
def _row_search(group_name, row, seed, budget, work_limit):
    G = resolve_group(group_name)
    T = row_representative(ALL_CLASSES_BY_ROW[row][0])
    runs = []
    tuples, work = exhaustive_work(G, T)
    if tuples <= budget and work <= work_limit:
        res = search_class_tuples(G, T, "exhaustive", stop_at_first=(T != EtClass.ONE), work_limit=work_limit)
        runs.append(res)
    else:
        res = search_class_tuples(G, T, "budgeted", seed=seed, limit=budget, stop_at_first=True)
        runs.append(res)
        if res.witness is None and work <= work_limit:
            runs.append(search_class_tuples(G, T, "exhaustive", stop_at_first=True, work_limit=work_limit))
    return G, T, runs, work


ALL_CLASSES_BY_ROW = {c.row: c.row_members for c in ALL_CLASSES}


def verify_table_row(group, T, seed=0, budget=DEFAULT_BUDGET, work_limit=EXHAUSTIVE_WORK_LIMIT, roundtrip=True):
    """Verdict for one (group, class) cell.

    The search runs on the row representative; a witness is moved to ``T``
    by relabelling and then, if ``roundtrip`` is set, checked end to end.
    """
    T = EtClass.parse(T)
    name = group if isinstance(group, str) else (group.name or "G")
    expected = expected_membership(name, T)
    G, rep, runs, work = _row_search(name, T.row, seed, budget, work_limit)
    last = runs[-1]
    out = RowVerdict(group=name, cls=T, verdict=Verdict.OUT_OF_SCOPE, expected_realized=expected, search=runs)
    found = next((r.witness for r in runs if r.witness is not None), None)
    if found is not None:
        w = omega_transform_tuple(validate_tuple(found, G), omega_word_from(rep, T))
        out.witness = w
        out.verdict = Verdict.REALIZED
        if roundtrip:
            out.roundtrip = verify_witness(w, G)
            if not out.roundtrip["ok"]:
                raise SearchError(f"witness for ({name}, {T}) fails the roundtrip: {out.roundtrip}")
    elif last.mode == "exhaustive" and last.complete:
        out.verdict = Verdict.NOT_REALIZED
        out.reason = (f"exhaustive: {last.visited} tuples up to conjugacy, {last.generating_total} generating, "
                      f"none admissible")
    else:
        out.reason = f"budget exhausted and exhaustive search needs ~{work:.3g} steps"
    if rep == EtClass.ONE and last.mode == "exhaustive" and last.complete:
        out.count = last.admissible_total
    return out


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

def group_digest(G):
    doc = json.dumps({"degree": G.degree, "generators": [list(g.images) for g in G.generators]})
    return hashlib.sha256(doc.encode()).hexdigest()[:16]


def _row_job(args):
    name, row, seed, budget, work_limit, roundtrip = args
    out = []
    for T in ALL_CLASSES_BY_ROW[row]:
        out.append(verify_table_row(name, T, seed=seed, budget=budget, work_limit=work_limit, roundtrip=roundtrip))
    return name, row, out


def verify_table(roster=DEFAULT_ROSTER, seed=0, budget=DEFAULT_BUDGET, work_limit=EXHAUSTIVE_WORK_LIMIT,
                 jobs=1, roundtrip=True):
    """Run every (group, class) cell; returns the list of row verdicts in
    roster order."""
    work = [(name, row, seed, budget, work_limit, roundtrip) for name in roster for row in range(1, 7)]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_row_job, work))
    else:
        results = [_row_job(w) for w in work]
    key = {(n, r): v for n, r, v in results}
    return [v for name in roster for row in range(1, 7) for v in key[(name, row)]]


def table_report(verdicts, seed=0, elapsed=None):
    lines = []
    for v in verdicts:
        mark = "ok" if v.agrees else "CONTRADICTION"
        extra = f" m={v.count}" if v.count is not None else ""
        lines.append(f"{v.group:8s} {str(v.cls):5s} {str(v.verdict):13s} expected="
                     f"{'REALIZED' if v.expected_realized else 'NOT_REALIZED':13s} {mark}{extra}")
    doc = {
        "tool": "etmaps",
        "version": __version__,
        "seed": seed,
        "elapsed": None if elapsed is None else round(elapsed, 3),
        "digests": {},
        "cells": [v.to_dict() for v in verdicts],
    }
    for v in verdicts:
        if v.group not in doc["digests"]:
            doc["digests"][v.group] = group_digest(resolve_group(v.group))
    return "\n".join(lines), doc

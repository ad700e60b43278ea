"""Write the map fixtures under src/etmaps/data/maps.

Each map is the flag action built from a generator tuple, so the files are
reproducible from the tuples listed here.
"""

import json
from pathlib import Path

import numpy as np

from etmaps.flagmap import FlagMap
from etmaps.groupzoo import alternating, symmetric
from etmaps.parent import GeneratorTuple, build_map
from etmaps.permcore import Permutation
from etmaps.search import search_class_tuples

OUT = Path(__file__).resolve().parents[1] / "src" / "etmaps" / "data" / "maps"


def cyc(text, n):
    return Permutation.from_cycles(text, n)


def hemi_icosahedron():
    # A5 triple with (r0 r1)^3 = (r1 r2)^5 = 1: K6 embedded in the projective plane
    A5 = alternating(5)
    res = search_class_tuples(A5, "1", "exhaustive", max_witnesses=400)
    for t in res.witnesses:
        r0, r1, r2 = t.images
        if (r0 * r1).order() == 3 and (r1 * r2).order() == 5:
            return build_map(t, A5, name="K6 in the projective plane")
    raise RuntimeError("no (3,5) triple in A5")


def two_edge_orbits():
    # the path v0-v1-v2-v3 on a disc: the reflection swaps the end edges
    # but fixes the middle one, so there are two edge orbits
    n = 12
    r0, r1, r2 = (np.arange(n) for _ in range(3))
    # edge k has flags 4k..4k+3: (end a, side +), (end a, side -), (end b, +), (end b, -)
    for k in range(3):
        b = 4 * k
        r0[[b, b + 2]] = [b + 2, b]
        r0[[b + 1, b + 3]] = [b + 3, b + 1]
        r2[[b, b + 1]] = [b + 1, b]
        r2[[b + 2, b + 3]] = [b + 3, b + 2]
    # r1 turns around a vertex from one edge to the next
    for k in range(2):
        a, c = 4 * k + 2, 4 * (k + 1)
        r1[[a, c]] = [c, a]
        r1[[a + 1, c + 1]] = [c + 1, a + 1]
    return FlagMap(r0, r1, r2, name="path with three edges")


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    S4 = symmetric(4)
    tet = build_map(GeneratorTuple("1", (cyc("(1,2)", 4), cyc("(2,3)", 4), cyc("(3,4)", 4))), S4, name="tetrahedron")
    A7 = alternating(7)
    a7 = build_map(GeneratorTuple("5", (cyc("(1,2,3,4,5)", 7), cyc("(1,6,7)(2,4,5)", 7))), A7, name="A7 class 5")
    maps = {"tetrahedron": tet, "hemi_icosahedron": hemi_icosahedron(), "a7_class5": a7,
            "path3": two_edge_orbits()}
    for name, M in maps.items():
        (OUT / f"{name}.json").write_text(json.dumps(M.to_dict()) + "\n")
        print("wrote", name, M.flag_count)
    # two disjoint copies of the tetrahedron: rejected by the loader
    n = tet.flag_count
    doc = {"flags": 2 * n, "name": "two tetrahedra",
           **{k: tet.to_dict()[k] + [x + n for x in tet.to_dict()[k]] for k in ("r0", "r1", "r2")}}
    (OUT / "disconnected.json").write_text(json.dumps(doc) + "\n")
    print("wrote disconnected", 2 * n)


if __name__ == "__main__":
    main()

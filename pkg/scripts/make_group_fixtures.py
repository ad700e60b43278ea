"""Regenerate the permutation fixtures in src/etmaps/data/groups.

U3(3) is built once here from the unitary group SU(3, 3) acting on the 28
isotropic points of the Hermitian form x1*y3^3 + x2*y2^3 + x3*y1^3 over
GF(9); U3(3).2 adds the field automorphism.  L3(2) acts on the 7 points of
PG(2, 2).  The loader revalidates every fixture, so these files are data,
not trusted input.
"""

import itertools
import json
from pathlib import Path

from etmaps.fields import finite_field
from etmaps.permcore import PermGroup, Permutation

OUT = Path(__file__).resolve().parents[1] / "src" / "etmaps" / "data" / "groups"


def projective_points(F, dim):
    pts = []
    for v in itertools.product(range(F.q), repeat=dim):
        if any(v):
            lead = next(x for x in v if x)
            if lead == 1:
                pts.append(v)
    return pts


def normalize(F, v):
    lead = next(x for x in v if x)
    inv = F.inv(lead)
    return tuple(F.mul(inv, x) for x in v)


def act(F, v, M):
    n = len(v)
    return tuple(_dot(F, [v[i] for i in range(n)], [M[i][j] for i in range(n)]) for j in range(n))


def _dot(F, a, b):
    s = 0
    for x, y in zip(a, b):
        s = F.add(s, F.mul(x, y))
    return s


def perm_on(F, points, M, frob=False):
    index = {p: i for i, p in enumerate(points)}
    images = []
    for p in points:
        v = tuple(F.frobenius(x) for x in p) if frob else act(F, p, M)
        images.append(index[normalize(F, v)])
    return Permutation(images)


def u33():
    F = finite_field(3, 2)
    conj = F.frobenius

    def herm(x, y):
        return _dot(F, x, [conj(y[2]), conj(y[1]), conj(y[0])])

    pts = [p for p in projective_points(F, 3) if herm(p, p) == 0]
    assert len(pts) == 28

    def unitary(M):
        rows = [tuple(r) for r in M]
        for i in range(3):
            for j in range(3):
                want = 1 if i + j == 2 else 0
                if herm(rows[i], rows[j]) != want:
                    return False
        return True

    gens = []
    for a, b, c in itertools.product(range(9), repeat=3):
        upper = [[1, a, b], [0, 1, c], [0, 0, 1]]
        lower = [[1, 0, 0], [a, 1, 0], [b, c, 1]]
        for M in (upper, lower):
            if (a or b or c) and unitary(M):
                gens.append(perm_on(F, pts, M))
    # keep a short generating subset
    chosen = []
    for g in gens:
        trial = PermGroup(chosen + [g], 28)
        if not chosen or trial.order() > PermGroup(chosen, 28).order():
            chosen.append(g)
        if PermGroup(chosen, 28).order() == 6048:
            break
    G = PermGroup(chosen, 28)
    assert G.order() == 6048, G.order()
    frob = perm_on(F, pts, None, frob=True)
    return chosen, frob


def l32():
    F = finite_field(2, 1)
    pts = projective_points(F, 3)
    A = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
    B = [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    gens = [perm_on(F, pts, A), perm_on(F, pts, B)]
    assert PermGroup(gens, 7).order() == 168
    return gens


def write(name, gens, degree, order, provenance, simple):
    doc = {
        "name": name,
        "degree": degree,
        "generators": [g.to_cycle_string() for g in gens],
        "asserted_order": order,
        "simple": simple,
        "provenance": provenance,
    }
    (OUT / f"{name}.json").write_text(json.dumps(doc, indent=1) + "\n")


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    write("M11", [Permutation.from_cycles("(2,10)(4,11)(5,7)(8,9)", 11),
                  Permutation.from_cycles("(1,4,3,8)(2,5,6,9)", 11)],
          11, 7920, "standard generators of M11 on 11 points (published generator tables)", True)
    gens, frob = u33()
    write("U3_3", gens, 28, 6048,
          "SU(3,3) unitriangular generators acting on the 28 isotropic points of the Hermitian unital over GF(9)",
          True)
    write("U3_3_aut", gens + [frob], 28, 12096,
          "U3_3 extended by the field automorphism of GF(9) acting on coordinates", False)
    write("L3_2", l32(), 7, 168, "GL(3,2) acting on the 7 points of PG(2,2)", True)


if __name__ == "__main__":
    main()

import json
from importlib import resources

import pytest

from etmaps.flagmap import map_from_dict
from etmaps.groupzoo import alternating
from etmaps.permcore import Permutation

# explicit triples and the chiral pair from the alternating-group construction
TRIPLES = {
    6: ("(1,2)(3,4)", "(2,6)(4,5)", "(2,3)(4,5)"),
    7: ("(1,2)(3,4)", "(2,6)(5,7)", "(2,3)(4,5)"),
    8: ("(1,2)(3,4)(5,6)(7,8)", "(1,3)(4,6)", "(3,4)(6,7)"),
}
# orders of s1 s2, s1 s3, s2 s3
TRIPLE_ORDERS = {6: (3, 5, 3), 7: (6, 5, 3), 8: (6, 4, 5)}
A7_PAIR = ("(1,2,3,4,5)", "(1,6,7)(2,4,5)")
L27_MATRICES = ([[0, 1], [-1, 0]], [[0, 2], [3, 0]], [[1, 3], [-3, -1]])


def perms(cycles, n):
    return tuple(Permutation.from_cycles(c, n) for c in cycles)


def map_fixture(name):
    path = resources.files("etmaps").joinpath("data", "maps", f"{name}.json")
    return map_from_dict(json.loads(path.read_text()))


def map_fixture_path(name):
    return str(resources.files("etmaps").joinpath("data", "maps", f"{name}.json"))


@pytest.fixture(scope="session")
def tetrahedron():
    return map_fixture("tetrahedron")


@pytest.fixture(scope="session")
def hemi_icosahedron():
    return map_fixture("hemi_icosahedron")


@pytest.fixture(scope="session")
def a7_class5_map():
    return map_fixture("a7_class5")


@pytest.fixture(scope="session")
def A5():
    return alternating(5)


@pytest.fixture(scope="session")
def A6():
    return alternating(6)


# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE = {}


def record(number, ok, detail):
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE[number] = line
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[k])

import os

import pytest

from pentacage.graph import FullereneGraph, planar_dual

# Small plane graphs with hand-checked rotation systems.  The icosahedron is
# the workhorse: its planar dual is the dodecahedron, the smallest fullerene.

TETRAHEDRON = (
    (1, 2, 3),
    (0, 3, 2),
    (0, 1, 3),
    (0, 2, 1),
)

CUBE = (
    (1, 4, 3),
    (2, 5, 0),
    (3, 6, 1),
    (0, 7, 2),
    (5, 7, 0),
    (6, 4, 1),
    (7, 5, 2),
    (4, 6, 3),
)

ICOSAHEDRON = (
    (1, 2, 3, 4, 5),
    (0, 5, 6, 7, 2),
    (0, 1, 7, 8, 3),
    (0, 2, 8, 9, 4),
    (0, 3, 9, 10, 5),
    (0, 4, 10, 6, 1),
    (1, 5, 10, 11, 7),
    (1, 6, 11, 8, 2),
    (2, 7, 11, 9, 3),
    (3, 8, 11, 10, 4),
    (4, 9, 11, 6, 5),
    (6, 10, 9, 8, 7),
)


@pytest.fixture(scope="session")
def dodecahedron() -> FullereneGraph:
    return FullereneGraph(planar_dual(ICOSAHEDRON))


def pytest_collection_modifyitems(config, items):
    if os.environ.get("PENTACAGE_RUN_SLOW") == "1":
        return
    skip = pytest.mark.skip(reason="slow gate; set PENTACAGE_RUN_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)

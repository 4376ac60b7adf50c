"""Goldberg (5,0) inflation, (6,6) tubes, separating-cycle witnesses, cycle
lifting, and cluster reinstatement (the hole-refill search)."""

import json
from importlib import resources

import pytest

from pentacage.clusters import (
    cluster_distance,
    pentagon_clusters,
    pip,
    separation_number,
)
from pentacage.generate import generate_isomers
from pentacage.inflate import (
    InflationError,
    SeedTableMissError,
    goldberg_5_0,
    inflate_preserving_clusters,
    lift_hexagon_cycle,
    reinstate_cluster,
    seed_fullerene_for_partition,
    separating_cycle_witnesses,
    tube_fullerene_6_6,
    _excise_into,
    _hole_fillings,
    _rebuild_graph,
)
from pentacage.spiral import spiral_id
from pentacage.symmetry import automorphisms, point_group


@pytest.fixture(scope="module")
def c20():
    return generate_isomers(20)[0]

@pytest.fixture(scope="module")
def g40_8():
    return generate_isomers(40)[7]


def oriented_iso(a, b):
    """True when some rotation-respecting bijection maps ``a`` onto ``b``.

    Unlike spiral ids this distinguishes a chiral graph from its mirror:
    the neighbour fans are matched in the same cyclic direction.
    """
    if a.n != b.n:
        return False
    ra, rb = a.rotations, b.rotations
    ia = [{u: i for i, u in enumerate(row)} for row in ra]
    ib = [{u: i for i, u in enumerate(row)} for row in rb]
    u0, v0 = 0, ra[0][0]
    for x in range(b.n):
        for y in rb[x]:
            m = {u0: x}
            stack = [(u0, v0, x, y)]
            ok = True
            while stack and ok:
                u, v, p, q = stack.pop()
                if v in m:
                    ok = m[v] == q
                    continue
                m[v] = q
                for k in (1, 2):
                    stack.append((v, ra[v][(ia[v][u] + k) % 3],
                                  q, rb[q][(ib[q][p] + k) % 3]))
            if ok and len(m) == a.n:
                if all({m[w] for w in ra[u]} == set(rb[m[u]]) for u in m):
                    return True
    return False


# ---------------------------------------------------------------------------
# Goldberg (5,0) inflation
# ---------------------------------------------------------------------------


def test_inflation_multiplies_counts_by_25(c20):
    child, fmap = goldberg_5_0(c20)
    assert child.n == 25 * c20.n == 500
    assert child.face_count == 252
    assert sum(f.is_pentagon for f in child.faces) == 12
    assert len(fmap.parent) == child.face_count
    assert all(fmap.parent[fmap.centre[p.id]] == p.id for p in c20.faces)
    assert fmap.parent_graph is c20
    assert fmap.child is child


def test_inflation_isolates_pentagons(c20):
    child, _ = goldberg_5_0(c20)
    assert pip(child) == (1,) * 12
    # every pentagon pair in C20 is adjacent, and adjacent parents land at
    # dual distance exactly five in the child
    assert separation_number(child) == 5


def test_adjacent_parents_land_at_distance_five(g40_8):
    child, _ = goldberg_5_0(g40_8)
    assert pip(child) == (1,) * 12
    assert separation_number(child) == 5


def test_inflation_keeps_icosahedral_symmetry(c20):
    child, _ = goldberg_5_0(c20)
    assert point_group(c20) == point_group(child) == "Ih"
    assert automorphisms(child).order == 120


def test_inflation_map_partitions_child_faces(c20):
    child, fmap = goldberg_5_0(c20)
    owned = [f for fs in fmap.children.values() for f in fs]
    assert len(owned) == len(set(owned)) == child.face_count
    for parent_face in c20.faces:
        centre = fmap.centre[parent_face.id]
        assert child.faces[centre].size == parent_face.size
        assert centre in fmap.children[parent_face.id]
    assert fmap.descendants(range(c20.face_count)) == frozenset(
        range(child.face_count)
    )


def test_pentagon_descendants_form_collar_rings(c20):
    child, fmap = goldberg_5_0(c20)
    centre = fmap.centre[0]
    dist = child.face_distances_from(centre)
    rings = {}
    for f in fmap.descendants([0]):
        rings[dist[f]] = rings.get(dist[f], 0) + 1
    # centre pentagon, a collar of five, then ten, then the tie-broken rim
    assert rings == {0: 1, 1: 5, 2: 10, 3: 10}


def test_hexagon_descendants_form_collar_rings():
    g = generate_isomers(30)[0]
    child, fmap = goldberg_5_0(g)
    hexparent = next(f.id for f in g.faces if not f.is_pentagon)
    centre = fmap.centre[hexparent]
    dist = child.face_distances_from(centre)
    rings = {}
    for f in fmap.descendants([hexparent]):
        rings[dist[f]] = rings.get(dist[f], 0) + 1
    assert rings == {0: 1, 1: 6, 2: 12, 3: 8}


# ---------------------------------------------------------------------------
# (6,6) nanotube family
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("rings", range(1, 7))
def test_tube_family(rings):
    t = tube_fullerene_6_6(rings)
    assert t.n == 20 + 10 * rings
    assert pip(t) == (6, 6)
    assert separation_number(t) == rings + 1


def test_tube_separations_strictly_increase():
    seps = [separation_number(tube_fullerene_6_6(j)) for j in range(1, 7)]
    assert seps == sorted(set(seps))


def test_shortest_tube_is_a_known_isomer():
    assert spiral_id(tube_fullerene_6_6(1)) == "30:1"


@pytest.mark.parametrize("rings", [0, -3])
def test_tube_needs_at_least_one_ring(rings):
    with pytest.raises(ValueError):
        tube_fullerene_6_6(rings)


# ---------------------------------------------------------------------------
# separating hexagon cycles and their lifts
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("rings", [1, 2, 3, 4])
def test_tube_witness_rings(rings):
    t = tube_fullerene_6_6(rings)
    c1, c2 = pentagon_clusters(t)
    witnesses = separating_cycle_witnesses(t, c1, c2)
    assert len(witnesses) == rings
    assert len(witnesses) < cluster_distance(t, c1, c2)
    for w in witnesses:
        w.validate(t)
        assert len(w) == 5
        side1, side2 = w.sides(t)
        assert side1 | side2 | set(w.faces) == set(range(t.face_count))
        assert (c1 <= side1) != (c1 <= side2)
        assert (c2 <= side1) != (c2 <= side2)
        assert (c1 <= side1) == (c2 <= side2)


def test_lift_triples_a_witness():
    t = tube_fullerene_6_6(1)
    c1, c2 = pentagon_clusters(t)
    w = separating_cycle_witnesses(t, c1, c2)[0]
    child, fmap = goldberg_5_0(t)
    lifted = lift_hexagon_cycle(w, fmap)
    assert len(lifted) == 3
    assert [len(c) for c in lifted] == [25, 25, 25]
    used = [set(c.faces) for c in lifted]
    assert not (used[0] & used[1] or used[0] & used[2] or used[1] & used[2])
    inner = fmap.descendants(w.sides(t)[0])
    for c in lifted:
        c.validate(child)
        s1, s2 = c.sides(child)
        assert inner <= s1 or inner <= s2


def test_lift_iterates():
    t = tube_fullerene_6_6(1)
    c1, c2 = pentagon_clusters(t)
    w = separating_cycle_witnesses(t, c1, c2)[0]
    child, fmap = goldberg_5_0(t)
    grandchild, fmap2 = goldberg_5_0(child)
    pieces = []
    for c in lift_hexagon_cycle(w, fmap):
        pieces.extend(lift_hexagon_cycle(c, fmap2))
    assert len(pieces) == 9
    seen = set()
    for c in pieces:
        c.validate(grandchild)
        assert not seen & set(c.faces)
        seen.update(c.faces)


# ---------------------------------------------------------------------------
# hole refills
# ---------------------------------------------------------------------------


def test_refill_enumeration_recovers_the_excised_graph():
    # cut a 7-face flower out of the chiral 28:1 and enumerate refills:
    # hexagon-greedy completions come first (bigger graphs), then the two
    # pentagon-dense ones that restore n=28 — the original and its mirror
    g = generate_isomers(28)[0]
    region = {0} | set(g.face_adjacency[0])
    rot = [list(r) for r in g.rotations]
    bnd, pending = _excise_into(g, region, rot)
    assert 2 * len(pending) + 6 - len(bnd) == 5  # five pentagons were cut out
    rebuilt = []
    fillings = _hole_fillings(rot, bnd, pending, 4 * len(region) + 24)
    for _ in range(7):
        next(fillings)
        rebuilt.append(_rebuild_graph([list(r) if r else None for r in rot]))
    fillings.close()
    assert [spiral_id(h) for h in rebuilt] == [
        "38:4", "34:4", "32:4", "30:2", "30:3", "28:1", "28:1",
    ]
    twins = rebuilt[5:]
    assert [oriented_iso(g, h) for h in twins] == [True, False], (
        "one refill must be the original graph, the other its enantiomer"
    )


def test_reinstate_two_cluster(g40_8):
    _, fmap = goldberg_5_0(g40_8)
    two = next(c for c in pentagon_clusters(g40_8) if len(c) == 2)
    r = reinstate_cluster(fmap, two)
    assert r.n == 1016
    assert pip(r) == (2,) + (1,) * 10
    assert separation_number(r) == 5


def test_reinstate_five_cluster(g40_8):
    _, fmap = goldberg_5_0(g40_8)
    five = next(c for c in pentagon_clusters(g40_8) if len(c) == 5)
    r = reinstate_cluster(fmap, five)
    assert r.n == 1480
    assert pip(r) == (5,) + (1,) * 7
    assert separation_number(r) == 5


def test_reinstate_rejects_foreign_face_sets(g40_8):
    _, fmap = goldberg_5_0(g40_8)
    with pytest.raises(InflationError):
        reinstate_cluster(fmap, frozenset({0, 1}))


# ---------------------------------------------------------------------------
# the full pipeline
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "parts,n1,s1",
    [
        ((2, 2, 2, 2, 2, 2), 1346, 12),
        ((5, 4, 2, 1), 1940, 13),
        ((3, 3, 3, 3), 1192, 18),
    ],
)
def test_inflate_preserving_clusters_one_round(parts, n1, s1):
    seed = seed_fullerene_for_partition(parts)
    assert pip(seed) == parts
    big = inflate_preserving_clusters(seed, rounds=1)
    assert pip(big) == parts
    assert big.n == n1
    assert separation_number(big) == s1


@pytest.mark.slow
@pytest.mark.parametrize(
    "parts,n2,s2",
    [
        ((2, 2, 2, 2, 2, 2), 33746, 66),
        ((5, 4, 2, 1), 49140, 66),
        ((3, 3, 3, 3), 29992, 98),
    ],
)
def test_inflate_preserving_clusters_two_rounds(parts, n2, s2):
    seed = seed_fullerene_for_partition(parts)
    big = inflate_preserving_clusters(seed, rounds=2)
    assert pip(big) == parts
    assert big.n == n2
    assert separation_number(big) == s2


def test_zero_rounds_is_the_identity(g40_8):
    assert inflate_preserving_clusters(g40_8, rounds=0) is g40_8


def test_pipeline_rejects_big_clusters(c20):
    with pytest.raises(InflationError, match="largest cluster"):
        inflate_preserving_clusters(c20)
    with pytest.raises(InflationError, match="largest cluster"):
        inflate_preserving_clusters(tube_fullerene_6_6(2))


# ---------------------------------------------------------------------------
# bundled seed table
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "parts,n",
    [
        ((3, 3, 3, 3), 40),
        ((5, 4, 2, 1), 44),
        ((2, 2, 2, 2, 2, 2), 50),
        ((1,) * 12, 60),
        ((5,) + (1,) * 7, 1480),  # beyond the scan horizon; constructed
    ],
)
def test_seed_table_serves_key_partitions(parts, n):
    seed = seed_fullerene_for_partition(parts)
    assert seed.n == n
    assert pip(seed) == parts


def test_seed_table_order_is_irrelevant():
    a = seed_fullerene_for_partition((1, 2, 4, 5))
    b = seed_fullerene_for_partition((5, 4, 2, 1))
    assert a is b


def test_every_bundled_seed_revalidates():
    manifest = json.loads(
        resources.files("pentacage").joinpath("data/seeds.json").read_text()
    )
    for text in manifest["partitions"]:
        parts = tuple(int(p) for p in text.split(","))
        seed = seed_fullerene_for_partition(parts)
        assert pip(seed) == parts
        assert max(parts) <= 5


def test_seed_table_covers_every_small_part_partition():
    def partitions(rest, cap):
        if rest == 0:
            yield ()
        for p in range(min(cap, rest), 0, -1):
            for tail in partitions(rest - p, p):
                yield (p,) + tail

    served = list(partitions(12, 5))
    assert len(served) == 47
    for parts in served:
        assert pip(seed_fullerene_for_partition(parts)) == parts


def test_seed_table_misses_are_loud():
    with pytest.raises(SeedTableMissError):
        seed_fullerene_for_partition((6, 6))
    with pytest.raises(SeedTableMissError):
        seed_fullerene_for_partition((7, 5))
    assert issubclass(SeedTableMissError, LookupError)


def test_seed_table_rejects_non_partitions():
    with pytest.raises(ValueError):
        seed_fullerene_for_partition((5, 4, 4))
    with pytest.raises(ValueError):
        seed_fullerene_for_partition((12, 0))

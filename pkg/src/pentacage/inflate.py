"""Goldberg inflation, hexagon-cycle separators, and nanotube witnesses.

The (5,0) Goldberg operation is carried out on the dual triangulation:
every triangle is subdivided into 25 lattice triangles and the result is
dualised back, which multiplies the vertex count by 25, keeps every
symmetry, isolates all pentagons, and leaves images of formerly adjacent
pentagons at face distance exactly five.  An :class:`InflationMap` records
which old face every new face descends from, so cluster regions can be cut
out of the inflated graph and refilled with a patch that restores the old
cluster -- the combination grows every separation number by a factor of at
least three per round without changing the partition.

Nanotube fullerenes with two six-pentagon caps are built directly as
rotation systems; their hexagon rings are the canonical examples of
separating cycles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .graph import (
    FullereneGraph,
    PENTAGON,
    Rotations,
    planar_dual,
    trace_faces,
)


class InflationError(RuntimeError):
    """An internal invariant of the inflation construction failed."""


# ---------------------------------------------------------------------------
# lattice subdivision of the dual triangulation
# ---------------------------------------------------------------------------


def _subdivide_triangulation(rot: Rotations, scale: int):
    """Subdivide every triangle of a triangulation into ``scale**2`` cells.

    Works in barycentric lattice coordinates per triangle chart: corners keep
    their ids, each edge gains ``scale - 1`` points shared by both charts,
    and each triangle gains its interior points.  Small triangles inherit the
    chart orientation, so the rotation system of the refined triangulation
    can be read off the face-tracing successor relation.

    Returns ``(rotations, owner, edge_points)`` where ``owner[v]`` is the
    original vertex whose lattice cell the point ``v`` falls in (ties on the
    cell boundary go to the smaller id) and ``edge_points[(p, q)]`` lists the
    subdivision points of edge p-q ordered from p.
    """
    n = len(rot)
    triangles = trace_faces(rot)
    if any(len(t) != 3 for t in triangles):
        raise InflationError("not a triangulation")

    next_id = n
    edge_base: dict[tuple[int, int], int] = {}
    for p, neigh in enumerate(rot):
        for q in neigh:
            if p < q:
                edge_base[(p, q)] = next_id
                next_id += scale - 1

    def edge_point(p: int, q: int, i: int) -> int:
        # the point at lattice distance i from p on edge p-q
        if p < q:
            return edge_base[(p, q)] + i - 1
        return edge_base[(q, p)] + (scale - i) - 1

    owner = list(range(n))
    owner.extend([-1] * (len(edge_base) * (scale - 1)))
    for (p, q), base in edge_base.items():
        for i in range(1, scale):
            if 2 * i != scale:
                owner[base + i - 1] = p if 2 * i < scale else q
            else:
                owner[base + i - 1] = min(p, q)

    interior: dict[tuple[int, int, int, int], int] = {}
    for t, (va, vb, vc) in enumerate(triangles):
        for a in range(1, scale):
            for b in range(1, scale - a):
                c = scale - a - b
                if c < 1:
                    continue
                interior[(t, a, b, c)] = next_id
                m = max(a, b, c)
                owner.append(min(v for v, x in ((va, a), (vb, b), (vc, c)) if x == m))
                next_id += 1

    prev_at: list[dict[int, int]] = [{} for _ in range(next_id)]

    def add_cell(x: int, y: int, z: int) -> None:
        # oriented boundary x -> y -> z -> x
        prev_at[y][x] = z
        prev_at[z][y] = x
        prev_at[x][z] = y

    for t, (va, vb, vc) in enumerate(triangles):

        def gid(a: int, b: int, c: int) -> int:
            if a == scale:
                return va
            if b == scale:
                return vb
            if c == scale:
                return vc
            if c == 0:
                return edge_point(va, vb, b)
            if a == 0:
                return edge_point(vb, vc, c)
            return edge_point(vc, va, a)

        for a in range(scale):
            for b in range(scale - a):
                c = scale - 1 - a - b
                up = (
                    interior.get((t, a + 1, b, c)) or gid(a + 1, b, c),
                    interior.get((t, a, b + 1, c)) or gid(a, b + 1, c),
                    interior.get((t, a, b, c + 1)) or gid(a, b, c + 1),
                )
                add_cell(*up)
        for a in range(scale - 1):
            for b in range(scale - 1 - a):
                c = scale - 2 - a - b
                down = (
                    interior.get((t, a, b + 1, c + 1)) or gid(a, b + 1, c + 1),
                    interior.get((t, a + 1, b, c + 1)) or gid(a + 1, b, c + 1),
                    interior.get((t, a + 1, b + 1, c)) or gid(a + 1, b + 1, c),
                )
                add_cell(*down)

    refined: list[tuple[int, ...]] = []
    for v, pm in enumerate(prev_at):
        start = next(iter(pm))
        orbit = [start]
        x = pm[start]
        while x != start:
            orbit.append(x)
            x = pm[x]
        if len(orbit) != len(pm):
            raise InflationError(f"refined vertex {v} has a disconnected star")
        refined.append(tuple(reversed(orbit)))

    edge_points: dict[tuple[int, int], tuple[int, ...]] = {}
    for p, q in edge_base:
        seq = tuple(edge_point(p, q, i) for i in range(1, scale))
        edge_points[(p, q)] = seq
        edge_points[(q, p)] = tuple(reversed(seq))
    return refined, owner, edge_points


# ---------------------------------------------------------------------------
# the Goldberg (5,0) operation
# ---------------------------------------------------------------------------


@dataclass(eq=False)
class InflationMap:
    """Descent record of a Goldberg inflation.

    ``parent[f]`` is the face of the original graph that face ``f`` of the
    inflated graph descends from.  Every original face owns the new face at
    its centre (its only pentagon when the original was one) plus a connected
    collar of hexagons; new faces sitting exactly on an old edge midline are
    assigned to the smaller-id endpoint.
    """

    parent_graph: FullereneGraph
    child: FullereneGraph
    parent: tuple[int, ...]
    centre: dict[int, int]
    edge_children: dict[tuple[int, int], tuple[int, ...]] = field(repr=False)

    @cached_property
    def children(self) -> dict[int, tuple[int, ...]]:
        table: dict[int, list[int]] = {f.id: [] for f in self.parent_graph.faces}
        for f, p in enumerate(self.parent):
            table[p].append(f)
        return {p: tuple(fs) for p, fs in table.items()}

    def descendants(self, faces) -> frozenset[int]:
        """All inflated faces whose parent lies in ``faces``."""
        wanted = set(faces)
        return frozenset(f for f, p in enumerate(self.parent) if p in wanted)


def _goldberg(g: FullereneGraph, scale: int) -> tuple[FullereneGraph, InflationMap]:
    refined, owner, edge_points = _subdivide_triangulation(g.dual(), scale)
    child = FullereneGraph(planar_dual(refined))
    if child.n != scale * scale * g.n:
        raise InflationError("inflation changed the vertex count incorrectly")

    # faces of the child are vertices of the refined triangulation; recover
    # the correspondence through the triangles around each face
    cells = trace_faces(refined)
    site_of = []
    for face in child.faces:
        t0, t1, t2 = face.vertices[:3]
        common = set(cells[t0]) & set(cells[t1]) & set(cells[t2])
        if len(common) != 1:
            raise InflationError("face/site correspondence is ambiguous")
        site_of.append(common.pop())
    face_of = [-1] * len(refined)
    for f, s in enumerate(site_of):
        face_of[s] = f

    parent = tuple(owner[s] for s in site_of)
    centre = {p: face_of[p] for p in range(g.face_count)}
    children_of_edges = {
        pq: tuple(face_of[s] for s in seq) for pq, seq in edge_points.items()
    }
    fmap = InflationMap(g, child, parent, centre, children_of_edges)

    for p in g.pentagon_ids:
        if not child.faces[centre[p]].is_pentagon:
            raise InflationError("a pentagon centre failed to stay pentagonal")
    for f in child.pentagon_ids:
        if not g.faces[parent[f]].is_pentagon:
            raise InflationError("a new pentagon descends from a hexagon")
        if scale > 1 and any(
            child.faces[h].is_pentagon for h in child.face_adjacency[f]
        ):
            raise InflationError("inflation left two pentagons adjacent")
    return child, fmap


def goldberg_5_0(g: FullereneGraph) -> tuple[FullereneGraph, InflationMap]:
    """The Goldberg (5,0) inflation of ``g``.

    Returns the 25-fold larger fullerene together with the
    :class:`InflationMap` that records face descent.  All twelve pentagons
    of the result are isolated, and pentagons that were adjacent in ``g``
    end up at face distance exactly five.
    """
    return _goldberg(g, 5)


# ---------------------------------------------------------------------------
# nanotube witnesses
# ---------------------------------------------------------------------------


def tube_fullerene_6_6(rings: int) -> FullereneGraph:
    """A fullerene with two six-pentagon caps and ``rings`` hexagon rings.

    The caps are five-fold flowers (a pentagon surrounded by five pentagons)
    joined by a zigzag tube of ``rings`` rings of five hexagons, giving
    ``20 + 10 * rings`` vertices.  Every added ring pushes the two pentagon
    clusters one step further apart, so the family realises unbounded
    separation for the partition (6, 6).

    Raises:
        ValueError: for ``rings < 1`` (with no ring the caps fuse into a
            single twelve-pentagon cluster).
    """
    if rings < 1:
        raise ValueError("at least one hexagon ring is needed to keep the caps apart")
    j = rings

    def ring(t: int, p: int) -> int:
        return 5 + 10 * (t - 1) + p % 10

    bottom0 = 5 + 10 * (j + 1)
    rot: list[tuple[int, int, int]] = []
    for i in range(5):  # top cap pentagon
        rot.append(((i + 1) % 5, (i - 1) % 5, ring(1, 2 * i)))
    for t in range(1, j + 2):
        up = (t + 1) % 2  # parity of the indices bonded toward the top cap
        for p in range(10):
            if p % 2 == up:
                above = p // 2 if t == 1 else ring(t - 1, p)
                rot.append((above, ring(t, p - 1), ring(t, p + 1)))
            else:
                below = (
                    ring(t + 1, p) if t <= j else bottom0 + p // 2
                )
                rot.append((ring(t, p - 1), below, ring(t, p + 1)))
    d = (j + 1) % 2
    for i in range(5):  # bottom cap pentagon
        rot.append(
            (
                bottom0 + (i - 1) % 5,
                bottom0 + (i + 1) % 5,
                ring(j + 1, 2 * i + d),
            )
        )
    return FullereneGraph(rot)


# ---------------------------------------------------------------------------
# hexagon cycles and separation witnesses
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HexagonCycle:
    """A closed chain of distinct hexagons that separates the sphere.

    Consecutive faces (including last to first) share an edge, and deleting
    the chain from the face-adjacency graph leaves exactly two connected
    components: the inside and the outside.
    """

    faces: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.faces)

    def validate(self, g: FullereneGraph) -> None:
        fs = self.faces
        if len(set(fs)) != len(fs) or len(fs) < 3:
            raise ValueError("a hexagon cycle needs at least three distinct faces")
        for f in fs:
            if g.faces[f].is_pentagon:
                raise ValueError(f"face {f} is a pentagon")
        for a, b in zip(fs, fs[1:] + fs[:1]):
            if b not in g.face_adjacency[a]:
                raise ValueError(f"consecutive faces {a}, {b} share no edge")
        self.sides(g)

    def sides(self, g: FullereneGraph) -> tuple[frozenset[int], frozenset[int]]:
        """The two face sets the cycle separates, smaller first id first."""
        cut = set(self.faces)
        comps = []
        seen = set(cut)
        for f0 in range(g.face_count):
            if f0 in seen:
                continue
            comp = {f0}
            stack = [f0]
            seen.add(f0)
            while stack:
                f = stack.pop()
                for h in g.face_adjacency[f]:
                    if h not in seen:
                        seen.add(h)
                        comp.add(h)
                        stack.append(h)
            comps.append(frozenset(comp))
        if len(comps) != 2:
            raise ValueError(f"cycle splits the faces into {len(comps)} parts, not 2")
        comps.sort(key=min)
        return comps[0], comps[1]


def separating_cycle_witnesses(g, c1, c2) -> list[HexagonCycle]:
    """Pairwise disjoint hexagon cycles separating cluster ``c1`` from ``c2``.

    Walks the distance layers around ``c1`` and keeps every layer that forms
    a single clean hexagon ring with the two clusters on opposite sides.  By
    the Jordan argument the number of such cycles can never exceed the
    cluster distance, and for tube-like graphs every layer qualifies.
    """
    if c1 == c2:
        raise ValueError("need two distinct clusters")
    dist = min(min(g.face_distances_from(a)[b] for b in c2) for a in c1)
    from collections import deque

    layer_of = [-1] * g.face_count
    queue = deque()
    for f in c1:
        layer_of[f] = 0
        queue.append(f)
    while queue:
        f = queue.popleft()
        for h in g.face_adjacency[f]:
            if layer_of[h] < 0:
                layer_of[h] = layer_of[f] + 1
                queue.append(h)

    witnesses = []
    for r in range(1, dist):
        layer = [f for f in range(g.face_count) if layer_of[f] == r]
        if any(g.faces[f].is_pentagon for f in layer):
            continue
        inside = {f: [h for h in g.face_adjacency[f] if layer_of[h] == r] for f in layer}
        if any(len(v) != 2 for v in inside.values()):
            continue
        start = min(layer)
        walk = [start]
        prev, cur = None, start
        while True:
            a, b = inside[cur]
            nxt = b if a == prev else a
            if nxt == start:
                break
            walk.append(nxt)
            prev, cur = cur, nxt
        if len(walk) != len(layer):
            continue
        cycle = HexagonCycle(tuple(walk))
        try:
            lo, hi = cycle.sides(g)
        except ValueError:
            continue
        if (c1 <= lo and c2 <= hi) or (c1 <= hi and c2 <= lo):
            witnesses.append(cycle)
    return witnesses


def _offset_cycle(g: FullereneGraph, walk: tuple[int, ...]) -> tuple[int, ...]:
    """The closed chain of faces flanking ``walk`` on one rotational side."""
    out: list[int] = []
    L = len(walk)
    for i, cur in enumerate(walk):
        ring = g.face_adjacency[cur]
        k = len(ring)
        j = (ring.index(walk[(i - 1) % L]) - 1) % k
        stop = ring.index(walk[(i + 1) % L])
        while j != stop:
            if not out or out[-1] != ring[j]:
                out.append(ring[j])
            j = (j - 1) % k
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return tuple(out)


def lift_hexagon_cycle(
    cycle: HexagonCycle, fmap: InflationMap
) -> tuple[HexagonCycle, HexagonCycle, HexagonCycle]:
    """Three disjoint hexagon cycles of the inflation tracking ``cycle``.

    The middle one runs through the centres of the old cycle's faces and the
    subdivision faces of their shared edges; the other two flank it one step
    to either side.  Every inflated face descending from an inside face of
    the old cycle lies inside all three.
    """
    cycle.validate(fmap.parent_graph)
    fs = cycle.faces
    central: list[int] = []
    for i, h in enumerate(fs):
        central.append(fmap.centre[h])
        central.extend(fmap.edge_children[(h, fs[(i + 1) % len(fs)])])
    middle = tuple(central)
    lifted = (
        HexagonCycle(_offset_cycle(fmap.child, middle)),
        HexagonCycle(middle),
        HexagonCycle(_offset_cycle(fmap.child, tuple(reversed(middle)))),
    )
    for c in lifted:
        c.validate(fmap.child)
    if len(set(lifted[0].faces) | set(lifted[1].faces) | set(lifted[2].faces)) != sum(
        len(c) for c in lifted
    ):
        raise InflationError("lifted cycles overlap")
    return lifted


# ---------------------------------------------------------------------------
# excising a disk of faces and refilling the hole
# ---------------------------------------------------------------------------


class ReinstatementError(InflationError):
    """No admissible refill of an excised disk was found."""


def _region_boundary(g: FullereneGraph, region) -> list[int]:
    """Boundary vertices of a disk of faces, in cyclic walk order."""
    succ = {}
    n_darts = 0
    for f in region:
        cyc = g.faces[f].vertices
        for u, v in zip(cyc, cyc[1:] + cyc[:1]):
            if g.face_at(v, u) not in region:
                if u in succ:
                    raise InflationError("face region is pinched at a vertex")
                succ[u] = v
                n_darts += 1
    if not succ:
        raise InflationError("face region has no boundary")
    start = min(succ)
    walk = [start]
    v = succ[start]
    while v != start:
        walk.append(v)
        v = succ[v]
    if len(walk) != n_darts:
        raise InflationError("face region boundary is not a single cycle")
    return walk


def _excise_into(g: FullereneGraph, region, rot) -> tuple[list[int], dict[int, int]]:
    """Cut a disk of faces out of the mutable rotation table ``rot``.

    Interior vertices are tombstoned with ``None`` rows; rim vertices that
    lose their third edge get a ``None`` in the freed rotation slot, and the
    returned dict maps each of them to that slot so a refill can route a new
    edge through exactly the gap the old one left.
    """
    bnd = _region_boundary(g, region)
    pending: dict[int, int] = {}
    for v in range(g.n):
        orig = g.rotations[v]
        k = sum(g.face_at(v, u) in region for u in orig)
        if k == 0:
            continue
        if rot[v] is None or None in rot[v]:
            raise InflationError("excised regions touch each other")
        if k == 3:
            rot[v] = None
        elif k == 2:
            (i,) = [
                i
                for i, u in enumerate(orig)
                if g.face_at(v, u) in region and g.face_at(u, v) in region
            ]
            pending[v] = i
            rot[v][i] = None
    if set(pending) - set(bnd):
        raise InflationError("pending slot off the rim")
    return bnd, pending


def _hole_fillings(rot, bnd0, pending, budget_hi, one_cluster_only=False):
    """Enumerate ways to pave a boundary-walled hole with pentagons/hexagons.

    Depth-first with hexagons tried before pentagons, so the pentagons of
    early refills sit deep in the pave where they neighbour each other.  Each
    yield hands out the list of new face cycles while ``rot`` momentarily
    describes the completed refill; the caller must copy whatever it wants to
    keep before advancing, because advancing backtracks.
    """

    def lower_bound(length: int) -> int:
        return max(0, -(-(length - 6) // 4)) + 1

    faces: list[tuple[int, ...]] = []

    def dfs(bnd, budget):
        L = len(bnd)
        if L < 5:
            return
        unsat = sum(1 for v in bnd if v in pending)
        q_rem = 2 * unsat + 6 - L
        rem = budget - len(faces)
        if q_rem < 0 or q_rem > rem:
            return
        if unsat == 0:
            if L in (5, 6) and rem >= 1:
                faces.append(tuple(bnd))
                yield list(faces)
                faces.pop()
            return
        if len(faces) + lower_bound(L) > budget:
            return
        # pentagons paved so far must still be able to grow into one cluster:
        # a component with no edge left on the hole boundary is sealed off
        pents = [c for c in faces if len(c) == 5] if one_cluster_only else []
        if pents:
            bnd_edges = {
                frozenset((bnd[i - 1], bnd[i])) for i in range(L)
            }
            comp = list(range(len(pents)))

            def find(i):
                while comp[i] != i:
                    comp[i] = comp[comp[i]]
                    i = comp[i]
                return i

            pedges = [
                {frozenset((c[i - 1], c[i])) for i in range(len(c))} for c in pents
            ]
            for i in range(len(pents)):
                for j in range(i + 1, len(pents)):
                    if pedges[i] & pedges[j]:
                        comp[find(i)] = find(j)
            roots = {find(i) for i in range(len(pents))}
            if q_rem == 0 and len(roots) > 1:
                return
            if q_rem > 0:
                for r_ in roots:
                    if not any(
                        e in bnd_edges
                        for i in range(len(pents))
                        if find(i) == r_
                        for e in pedges[i]
                    ):
                        return
        # the longest maximal run of saturated vertices, with its two
        # unsaturated flanks, must be covered by a single face
        sat = [v not in pending for v in bnd]
        best_r, best_st = 0, 0
        for st in range(L):
            if sat[st] and not sat[st - 1]:
                r = 1
                while sat[(st + r) % L]:
                    r += 1
                if r > best_r:
                    best_r, best_st = r, st
        r = best_r
        if r >= 5 or r >= L - 1:
            return
        i0 = (best_st - 1) % L if r else 0
        idxs = [(i0 + t) % L for t in range(r + 2)]
        fL, fR = bnd[idxs[0]], bnd[idxs[-1]]
        between = [bnd[i] for i in idxs[1:-1]]
        rest = [bnd[(i0 + r + 2 + t) % L] for t in range(L - r - 2)]
        slotL, slotR = pending[fL], pending[fR]
        for s in (6, 5):
            if s < r + 2:
                continue
            k = s - r - 2
            base = len(rot)
            new = list(range(base, base + k))
            del pending[fL], pending[fR]
            if k == 0:
                rot[fL][slotL] = fR
                rot[fR][slotR] = fL
            else:
                rot[fL][slotL] = new[-1]
                rot[fR][slotR] = new[0]
                for t, m in enumerate(new):
                    nxt = fL if t == k - 1 else new[t + 1]
                    prv = fR if t == 0 else new[t - 1]
                    rot.append([nxt, prv, None])
                    pending[m] = 2
            faces.append((fL, *between, fR, *new))
            yield from dfs([fL] + new[::-1] + [fR] + rest, budget)
            faces.pop()
            del rot[base:]
            for m in new:
                del pending[m]
            rot[fL][slotL] = None
            rot[fR][slotR] = None
            pending[fL] = slotL
            pending[fR] = slotR

    yield from dfs(list(bnd0), budget_hi)


def _one_cluster(face_cycles, want: int) -> bool:
    """Do the pentagons among these face cycles form one cluster of ``want``?"""
    pents = [c for c in face_cycles if len(c) == 5]
    if len(pents) != want:
        return False
    edges = [
        {frozenset((c[i], c[(i + 1) % len(c)])) for i in range(len(c))} for c in pents
    ]
    comp = list(range(want))

    def find(i):
        while comp[i] != i:
            comp[i] = comp[comp[i]]
            i = comp[i]
        return i

    for i in range(want):
        for j in range(i + 1, want):
            if edges[i] & edges[j]:
                comp[find(i)] = find(j)
    return len({find(i) for i in range(want)}) == 1


def _rebuild_graph(rot) -> FullereneGraph:
    alive = [v for v, row in enumerate(rot) if row is not None]
    remap = {v: i for i, v in enumerate(alive)}
    rows = []
    for v in alive:
        if None in rot[v]:
            raise ReinstatementError("refill left an open rotation slot")
        rows.append(tuple(remap[u] for u in rot[v]))
    return FullereneGraph(tuple(rows))


def _refill_as_cluster(rot, bnd, pending, region_size: int, want: int) -> None:
    """Pave one hole so its new pentagons form a single cluster of ``want``.

    Leaves ``rot`` holding the accepted refill.  The pentagon count of any
    refill is pinned by the hole itself (an Euler count over the boundary),
    so a mismatch with ``want`` fails fast instead of searching.

    The face budget must exceed the depth of the all-hexagon pave the search
    descends first (it narrows the hole to a cone whose tip is where the
    pentagons can finally sit together); that depth varies with the hole's
    shape, so on exhaustion the budget is doubled a couple of times before
    giving up.
    """
    forced = 2 * len(pending) + 6 - len(bnd)
    if forced != want:
        raise ReinstatementError(
            f"hole admits exactly {forced} pentagons, cluster needs {want}"
        )
    budget = 6 * region_size + 24
    for _ in range(3):
        gen = _hole_fillings(rot, bnd, pending, budget, one_cluster_only=True)
        for faces in gen:
            if _one_cluster(faces, want):
                gen.close()  # freeze the refill: closing skips backtracking
                return
        budget *= 2  # exhausted: rot is restored, retry with more room
    raise ReinstatementError(
        f"no refill with a single {want}-cluster within {budget // 2} faces"
    )


def _reinstate_descendant_disks(fmap: InflationMap, clusters) -> FullereneGraph:
    g = fmap.child
    regions = []
    for c in clusters:
        if not 2 <= len(c) <= 5:
            raise InflationError(
                "only clusters of two to five pentagons can be rebuilt"
            )
        if any(not fmap.parent_graph.faces[f].is_pentagon for f in c):
            raise InflationError("cluster contains a non-pentagon face")
        regions.append(fmap.descendants(c))
    rot = [list(r) for r in g.rotations]
    holes = [_excise_into(g, reg, rot) for reg in regions]
    for (bnd, pending), c, reg in zip(holes, clusters, regions):
        _refill_as_cluster(rot, bnd, pending, len(reg), len(c))
    return _rebuild_graph(rot)


def reinstate_cluster(fmap: InflationMap, cluster) -> FullereneGraph:
    """Undo the inflation's break-up of one pentagon cluster.

    Excises the faces of ``fmap.child`` that descend from the given cluster
    of ``fmap.parent_graph`` (a frozenset of two to five mutually adjacent
    pentagons) and paves the hole with a patch whose pentagons form a single
    cluster of the same size again.  All other faces keep their geometry, so
    the widened moats the inflation built around the cluster survive.
    """
    from .clusters import pentagon_clusters

    cluster = frozenset(cluster)
    if cluster not in {frozenset(c) for c in pentagon_clusters(fmap.parent_graph)}:
        raise InflationError("not a pentagon cluster of the donor graph")
    return _reinstate_descendant_disks(fmap, [cluster])


def inflate_preserving_clusters(g: FullereneGraph, rounds: int = 1) -> FullereneGraph:
    """Grow ``g`` 25-fold per round without changing its cluster partition.

    Each round inflates and then rebuilds every cluster of two or more
    pentagons inside its own descendant disk.  Pairwise face distances grow
    roughly fivefold per round while every cluster keeps its size, so the
    separation number of the result can be driven as high as wanted.  Only
    graphs whose largest cluster has at most five pentagons qualify.
    """
    from .clusters import pentagon_clusters, pip

    if rounds < 0:
        raise ValueError("rounds must be non-negative")
    want = pip(g)
    if want[0] > 5:
        raise InflationError(
            f"largest cluster has {want[0]} pentagons; only sizes up to five "
            "can be rebuilt after inflation"
        )
    cur = g
    for _ in range(rounds):
        child, fmap = goldberg_5_0(cur)
        grouped = [c for c in pentagon_clusters(cur) if len(c) >= 2]
        cur = _reinstate_descendant_disks(fmap, grouped) if grouped else child
        if pip(cur) != want:
            raise InflationError("refill changed the cluster partition")
    return cur


# ---------------------------------------------------------------------------
# bundled seed table
# ---------------------------------------------------------------------------


class SeedTableMissError(LookupError):
    """The bundled seed table has no fullerene for that partition."""


_seed_cache: dict[tuple[int, ...], FullereneGraph] = {}
_seed_manifest: dict | None = None


def _load_seed_table() -> dict:
    global _seed_manifest
    if _seed_manifest is None:
        import hashlib
        import json
        from importlib.resources import files

        data = files("pentacage") / "data"
        manifest = json.loads((data / "seeds.json").read_text())
        raw = (data / "seeds.pc").read_bytes()
        digest = hashlib.sha256(raw).hexdigest()
        if digest != manifest["sha256"]:
            raise InflationError("seed table is corrupt (checksum mismatch)")
        from io import BytesIO

        from .planarcode import read_fullerenes

        graphs = list(read_fullerenes(BytesIO(raw)))
        if len(graphs) != len(manifest["partitions"]):
            raise InflationError("seed table is corrupt (record count mismatch)")
        manifest["graphs"] = graphs
        _seed_manifest = manifest
    return _seed_manifest


def seed_fullerene_for_partition(parts) -> FullereneGraph:
    """A catalogued fullerene whose cluster partition equals ``parts``.

    The bundled table holds one witness for every partition with all cluster
    sizes at most five — the partitions :func:`inflate_preserving_clusters`
    can grow without bound.  Most are the smallest such fullerene, found by
    exhaustive scan from n=20 upward; partitions whose smallest members lie
    beyond the scan horizon carry a constructed witness instead (inflate a
    scanned donor, rebuild the needed clusters), marked ``origin`` in the
    manifest.  Raises SeedTableMissError for partitions outside the table.
    """
    from .clusters import pip, pip_text

    key = tuple(sorted(parts, reverse=True))
    if sum(key) != 12 or any(p <= 0 for p in key):
        raise ValueError(f"{parts!r} is not a partition of 12")
    if key in _seed_cache:
        return _seed_cache[key]
    table = _load_seed_table()
    entry = table["partitions"].get(pip_text(key))
    if entry is None:
        raise SeedTableMissError(
            f"no seed for partition {pip_text(key)} (table covers cluster "
            f"sizes up to five, scanned through n={table['n_max']})"
        )
    g = table["graphs"][entry["index"]]
    if g.n != entry["n"] or pip(g) != key:
        raise InflationError("seed table is corrupt (record mismatch)")
    _seed_cache[key] = g
    return g

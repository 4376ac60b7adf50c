"""Plane graphs as rotation systems, and fullerene graphs in particular.

A plane (embedded) graph is stored purely combinatorially: for every vertex,
the cyclic clockwise order of its neighbours.  Faces are never stored as
primary data -- they are traced from the rotation system, so the embedding
and the face list can never disagree.

A fullerene graph is a plane cubic graph whose faces are pentagons and
hexagons only.  Euler's formula then forces exactly 12 pentagons,
e = 3n/2 and f = n/2 + 2; n is even, at least 20, and never 22.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

#: Largest vertex count the toolkit handles (two-byte vertex ids on disk).
MAX_VERTICES = 65534

PENTAGON = 5
HEXAGON = 6


class GraphError(Exception):
    """Base class for combinatorial-embedding failures."""


class InvalidRotationSystemError(GraphError):
    """The neighbour lists do not describe a plane (genus-0) embedding."""


class NotAFullereneError(GraphError):
    """A valid plane graph that is not a fullerene graph."""


Rotations = Sequence[Sequence[int]]


# ---------------------------------------------------------------------------
# rotation-system primitives
# ---------------------------------------------------------------------------


def validate_rotation_system(rotations: Rotations) -> None:
    """Check that ``rotations`` is a connected spherical embedding.

    Verifies simple-graph structure (no loops, no repeated neighbours,
    symmetric adjacency) and the Euler relation v - e + f = 2, which for a
    face-traced rotation system holds exactly when the embedding is a
    connected genus-0 map.

    Raises:
        InvalidRotationSystemError: on the first violated condition.
    """
    n = len(rotations)
    if n == 0:
        raise InvalidRotationSystemError("empty graph")
    degree_sum = 0
    for u, neigh in enumerate(rotations):
        if len(neigh) < 2:
            raise InvalidRotationSystemError(f"vertex {u} has degree {len(neigh)} < 2")
        seen = set()
        for v in neigh:
            if not 0 <= v < n:
                raise InvalidRotationSystemError(f"vertex {u} lists unknown neighbour {v}")
            if v == u:
                raise InvalidRotationSystemError(f"loop at vertex {u}")
            if v in seen:
                raise InvalidRotationSystemError(f"repeated edge {u}-{v}")
            seen.add(v)
        degree_sum += len(neigh)
    neighbour_sets = [set(neigh) for neigh in rotations]
    for u, neigh in enumerate(rotations):
        for v in neigh:
            if u not in neighbour_sets[v]:
                raise InvalidRotationSystemError(f"edge {u}-{v} is not symmetric")
    e = degree_sum // 2
    f = len(trace_faces(rotations))
    if n - e + f != 2:
        raise InvalidRotationSystemError(
            f"not a connected sphere embedding: v={n} e={e} f={f}, v-e+f={n - e + f}"
        )


def trace_faces(rotations: Rotations) -> list[tuple[int, ...]]:
    """Trace all faces of a rotation system.

    From the directed edge (u, v) the face continues with (v, w) where w
    immediately precedes u in the rotation at v.  Faces are listed in the
    order their smallest directed edge is visited (vertices in order, each
    rotation in stored order), which makes face ids deterministic.

    Returns:
        A list of faces, each a tuple of vertices in boundary order.
    """
    index_of = [
        {v: i for i, v in enumerate(neigh)} for neigh in rotations
    ]
    seen: set[tuple[int, int]] = set()
    faces: list[tuple[int, ...]] = []
    for u0, neigh in enumerate(rotations):
        for v0 in neigh:
            if (u0, v0) in seen:
                continue
            walk = []
            u, v = u0, v0
            while (u, v) not in seen:
                seen.add((u, v))
                walk.append(u)
                nxt = rotations[v]
                w = nxt[index_of[v][u] - 1]
                u, v = v, w
            if (u, v) != (u0, v0):
                raise InvalidRotationSystemError(
                    f"face trace starting at ({u0},{v0}) re-entered at ({u},{v})"
                )
            faces.append(tuple(walk))
    return faces


def planar_dual(rotations: Rotations) -> list[list[int]]:
    """Rotation system of the planar dual.

    Dual vertex i is face i of :func:`trace_faces`; its rotation lists the
    faces met across the primal face's edges in boundary-walk order.  Applying
    the construction twice returns a graph isomorphic to the original.
    """
    faces = trace_faces(rotations)
    face_at: dict[tuple[int, int], int] = {}
    for fid, cycle in enumerate(faces):
        for i, u in enumerate(cycle):
            face_at[(u, cycle[(i + 1) % len(cycle)])] = fid
    dual: list[list[int]] = []
    for cycle in faces:
        k = len(cycle)
        dual.append([face_at[(cycle[(i + 1) % k], cycle[i])] for i in range(k)])
    return dual


# ---------------------------------------------------------------------------
# faces and fullerenes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Face:
    """One face of a plane graph: its id and vertex cycle."""

    id: int
    vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def is_pentagon(self) -> bool:
        return len(self.vertices) == PENTAGON


class FullereneGraph:
    """An immutable fullerene graph.

    Construction validates the rotation system and the fullerene conditions;
    everything derived (faces, dual adjacency, face distances) is computed
    lazily and cached, so instances are safe to share between threads.
    """

    def __init__(self, rotations: Rotations):
        rotations = tuple(tuple(neigh) for neigh in rotations)
        validate_rotation_system(rotations)
        n = len(rotations)
        if n > MAX_VERTICES:
            raise NotAFullereneError(f"{n} vertices exceeds the supported {MAX_VERTICES}")
        if any(len(neigh) != 3 for neigh in rotations):
            raise NotAFullereneError("fullerene graphs are cubic")
        faces = trace_faces(rotations)
        bad = [len(c) for c in faces if len(c) not in (PENTAGON, HEXAGON)]
        if bad:
            raise NotAFullereneError(f"face sizes {sorted(set(bad))} outside {{5, 6}}")
        pentagons = sum(1 for c in faces if len(c) == PENTAGON)
        if pentagons != 12:
            raise NotAFullereneError(f"{pentagons} pentagons, expected 12")
        if n < 20 or n % 2 or n == 22:
            raise NotAFullereneError(f"no fullerene graph on {n} vertices")
        self.rotations: tuple[tuple[int, ...], ...] = rotations
        self.faces: tuple[Face, ...] = tuple(
            Face(i, cycle) for i, cycle in enumerate(faces)
        )
        self._face_at: dict[tuple[int, int], int] | None = None
        self._face_adjacency: list[tuple[int, ...]] | None = None
        self._dist_cache: dict[int, list[int]] = {}

    # -- basic counts -------------------------------------------------------

    @property
    def n(self) -> int:
        """Number of vertices."""
        return len(self.rotations)

    @property
    def face_count(self) -> int:
        return len(self.faces)

    @cached_property
    def pentagon_ids(self) -> tuple[int, ...]:
        return tuple(f.id for f in self.faces if f.is_pentagon)

    # -- incidence lookups --------------------------------------------------

    def face_at(self, u: int, v: int) -> int:
        """Id of the face containing the directed edge (u, v)."""
        if self._face_at is None:
            table: dict[tuple[int, int], int] = {}
            for face in self.faces:
                cycle = face.vertices
                k = len(cycle)
                for i, a in enumerate(cycle):
                    table[(a, cycle[(i + 1) % k])] = face.id
            self._face_at = table
        return self._face_at[(u, v)]

    @property
    def face_adjacency(self) -> list[tuple[int, ...]]:
        """For each face, the neighbouring faces in boundary-walk order.

        This is the rotation system of the dual triangulation.
        """
        if self._face_adjacency is None:
            adj = []
            for face in self.faces:
                cycle = face.vertices
                k = len(cycle)
                adj.append(
                    tuple(
                        self.face_at(cycle[(i + 1) % k], cycle[i]) for i in range(k)
                    )
                )
            self._face_adjacency = adj
        return self._face_adjacency

    def dual(self) -> list[tuple[int, ...]]:
        """Rotation system of the dual triangulation (faces become vertices)."""
        return list(self.face_adjacency)

    # -- metric on faces ----------------------------------------------------

    def face_distances_from(self, source: int) -> list[int]:
        """BFS distances from ``source`` to every face of the dual graph."""
        cached = self._dist_cache.get(source)
        if cached is not None:
            return cached
        adj = self.face_adjacency
        dist = [-1] * len(adj)
        dist[source] = 0
        queue = deque([source])
        while queue:
            a = queue.popleft()
            d = dist[a] + 1
            for b in adj[a]:
                if dist[b] < 0:
                    dist[b] = d
                    queue.append(b)
        self._dist_cache[source] = dist
        return dist

    def face_distance(self, a: int, b: int) -> int:
        """Length of a shortest face path (dual distance) between faces a, b."""
        return self.face_distances_from(a)[b]

    # -- misc ---------------------------------------------------------------

    def edges(self) -> Iterable[tuple[int, int]]:
        """Undirected edges as ordered pairs (u < v)."""
        for u, neigh in enumerate(self.rotations):
            for v in neigh:
                if u < v:
                    yield (u, v)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"FullereneGraph(n={self.n}, faces={self.face_count})"

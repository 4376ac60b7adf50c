"""Pentagon clusters: detection, partition arithmetic, separation numbers,
shape signatures, and the classification of all 77 partitions of 12.

A cluster is a maximal set of pentagons connected through shared edges.  In
a cubic plane graph two faces sharing a vertex always share an edge, so
cluster regions are honest disks and everything here can lean on the patch
machinery.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cache
from typing import Iterable, Sequence

from .graph import FullereneGraph, trace_faces
from .patches import (
    Patch,
    PatchError,
    enumerate_patches,
    max_degree3_run,
    tube_parameters,
    validate_patch,
)
from .spiral import canonical_spiral

PentagonCluster = frozenset  # of pentagon face ids


# ---------------------------------------------------------------------------
# clusters and the partition they induce
# ---------------------------------------------------------------------------


def pentagon_clusters(g: FullereneGraph) -> list[PentagonCluster]:
    """Maximal edge-connected sets of pentagons, largest first.

    The twelve pentagons are partitioned; ties in size break towards the
    cluster containing the smallest face id, so the order is reproducible.
    """
    pent = set(g.pentagon_ids)
    adj = g.face_adjacency
    seen: set[int] = set()
    clusters = []
    for start in g.pentagon_ids:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            a = stack.pop()
            for b in adj[a]:
                if b in pent and b not in comp:
                    comp.add(b)
                    stack.append(b)
        seen |= comp
        clusters.append(frozenset(comp))
    clusters.sort(key=lambda c: (-len(c), min(c)))
    return clusters


def pip(g: FullereneGraph) -> tuple[int, ...]:
    """The pentagonal incidence partition: cluster sizes, non-increasing."""
    return tuple(len(c) for c in pentagon_clusters(g))


def pip_text(parts: Iterable[int]) -> str:
    return ",".join(str(p) for p in parts)


def parse_pip(text: str) -> tuple[int, ...]:
    """Parse "7,3,2"-style partition text, normalising the order."""
    try:
        parts = tuple(sorted((int(p) for p in text.split(",")), reverse=True))
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    if sum(parts) != 12 or any(p <= 0 for p in parts):
        raise ValueError(f"{text!r} is not a partition of 12")
    return parts


def hog_keyword(parts: Iterable[int]) -> str:
    """Search keyword naming a partition, e.g. "pentagon_cluster_9_3"."""
    return "pentagon_cluster_" + "_".join(str(p) for p in parts)


def cluster_distance(g: FullereneGraph, c1: PentagonCluster, c2: PentagonCluster) -> int:
    """Minimum face distance between pentagons of two distinct clusters."""
    if set(c1) == set(c2):
        raise ValueError("cluster distance needs two distinct clusters")
    best = g.face_count
    for a in c1:
        dist = g.face_distances_from(a)
        for b in c2:
            if dist[b] < best:
                best = dist[b]
    return best


def separation_number(g: FullereneGraph) -> int | None:
    """Minimum pairwise cluster distance; None when there is one cluster."""
    clusters = pentagon_clusters(g)
    if len(clusters) < 2:
        return None
    best = g.face_count
    for i, c1 in enumerate(clusters):
        for c2 in clusters[i + 1:]:
            d = cluster_distance(g, c1, c2)
            if d < best:
                best = d
    return best


# ---------------------------------------------------------------------------
# carving face sets out of a fullerene as patches
# ---------------------------------------------------------------------------


def _cyclic_min(cycle: Sequence[int]) -> tuple[int, ...]:
    t = tuple(cycle)
    return min(t[i:] + t[:i] for i in range(len(t)))


def faces_to_patch(g: FullereneGraph, face_ids: Iterable[int]) -> Patch:
    """The sub-patch of ``g`` spanned by an edge-connected set of faces.

    Keeps an edge exactly when one of its two sides is a listed face, so
    the interior faces of the result are the listed faces and nothing else.
    Raises PatchError when the face set is not a disk.
    """
    wanted = frozenset(face_ids)
    verts = sorted({v for fid in wanted for v in g.faces[fid].vertices})
    dense = {v: i for i, v in enumerate(verts)}
    rots = []
    for v in verts:
        row = tuple(
            dense[u]
            for u in g.rotations[v]
            if g.face_at(v, u) in wanted or g.face_at(u, v) in wanted
        )
        rots.append(row)
    interior = {
        _cyclic_min(tuple(dense[v] for v in g.faces[fid].vertices)) for fid in wanted
    }
    outer = [c for c in trace_faces(tuple(rots)) if _cyclic_min(c) not in interior]
    if len(outer) != 1:
        raise PatchError(f"face set bounds {len(outer)} holes, not a disk")
    patch = Patch(tuple(rots), tuple(reversed(outer[0])))
    validate_patch(patch)
    return patch


def complement(g: FullereneGraph, cluster: PentagonCluster) -> list[Patch]:
    """The components of everything outside one cluster, each as a patch.

    C20's single cluster covers the sphere, so its complement is empty; a
    six-ring cluster walls off its central hexagon, giving two components.
    """
    rest = set(range(g.face_count)) - set(cluster)
    return [faces_to_patch(g, comp) for comp in _face_components(g, rest)]


def _face_components(g: FullereneGraph, faces: set[int]) -> list[frozenset[int]]:
    adj = g.face_adjacency
    out = []
    left = set(faces)
    while left:
        start = min(left)
        comp = {start}
        stack = [start]
        while stack:
            a = stack.pop()
            for b in adj[a]:
                if b in left and b not in comp:
                    comp.add(b)
                    stack.append(b)
        left -= comp
        out.append(frozenset(comp))
    out.sort(key=lambda c: (-len(c), min(c)))
    return out


# ---------------------------------------------------------------------------
# shape signatures and the six-pentagon catalog
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClusterSignature:
    """Isomorphism-invariant identity of a closed cluster shape."""

    kind: str  # "patch", or "sphere" when the cluster covers every face
    code: tuple[int, ...]


def closed_cluster_faces(g: FullereneGraph, cluster: PentagonCluster) -> frozenset[int]:
    """The cluster plus whatever it walls in (the ring's central hexagon);
    only the largest complement component is left outside."""
    comps = _face_components(g, set(range(g.face_count)) - set(cluster))
    closed = set(cluster)
    for comp in comps[1:]:
        closed |= comp
    return frozenset(closed)


def cluster_signature(g: FullereneGraph, cluster: PentagonCluster) -> ClusterSignature:
    closed = closed_cluster_faces(g, cluster)
    if len(closed) == g.face_count:
        return ClusterSignature("sphere", canonical_spiral(g).positions)
    return ClusterSignature("patch", faces_to_patch(g, closed).canonical)


def ring_cluster_patch() -> Patch:
    """Six pentagons closed around a central hexagon.

    The one six-pentagon cluster whose patch has two boundaries open; with
    the hexagon filled in it becomes an ordinary disk.  Vertices: hexagon
    0-5, outer corners 6-11, outer midpoints 12-17.
    """
    rots = []
    for i in range(6):
        rots.append(((i + 1) % 6, (i - 1) % 6, 6 + i))
    for i in range(6):
        rots.append((i, 12 + (i - 1) % 6, 12 + i))
    for i in range(6):
        rots.append((6 + i, 6 + (i + 1) % 6))
    boundary = []
    for i in range(6):
        boundary += [6 + i, 12 + i]
    patch = Patch(tuple(rots), tuple(boundary))
    validate_patch(patch)
    return patch


@dataclass(frozen=True)
class CatalogEntry:
    patch: Patch
    signature: ClusterSignature
    tube: tuple[int, int]
    ring: bool


# tube parameters of the 18 six-pentagon cluster shapes: twelve distinct
# values, (6,0) four times, (4,3)/(5,2)/(6,1) twice each
_T6_MULTISET = Counter(
    {
        (6, 0): 4,
        (4, 3): 2,
        (5, 2): 2,
        (6, 1): 2,
        (5, 0): 1,
        (3, 3): 1,
        (4, 2): 1,
        (5, 1): 1,
        (7, 0): 1,
        (4, 4): 1,
        (5, 3): 1,
        (6, 2): 1,
    }
)


@cache
def six_cluster_catalog() -> tuple[CatalogEntry, ...]:
    """All 18 closed six-pentagon cluster shapes with their tube parameters.

    Seventeen come from exhaustive six-pentagon patch enumeration; the
    eighteenth is the ring.  One enumerated shape is discarded: five
    consecutive degree-3 boundary vertices would force a face of seven or
    more sides on the outside, which no fullerene has.
    """
    entries = []
    for p in enumerate_patches(6, 0):
        if max_degree3_run(p.boundary_word) > 4:
            continue
        entries.append(
            CatalogEntry(
                p,
                ClusterSignature("patch", p.canonical),
                tuple(tube_parameters(p.boundary_word)),
                False,
            )
        )
    ring = ring_cluster_patch()
    entries.append(
        CatalogEntry(
            ring,
            ClusterSignature("patch", ring.canonical),
            tuple(tube_parameters(ring.boundary_word)),
            True,
        )
    )
    entries.sort(key=lambda e: (e.tube, e.signature.code))
    if len(entries) != 18 or len({e.signature for e in entries}) != 18:
        raise RuntimeError("six-pentagon cluster catalog is corrupted")
    if Counter(e.tube for e in entries) != _T6_MULTISET:
        raise RuntimeError("six-pentagon catalog tube parameters are corrupted")
    return tuple(entries)


def tube_parameters_of_6_cluster(sig: ClusterSignature) -> tuple[int, int]:
    """(l, m) for one of the 18 catalog signatures."""
    for entry in six_cluster_catalog():
        if entry.signature == sig:
            return entry.tube
    raise ValueError("signature is not a six-pentagon cluster shape")


# ---------------------------------------------------------------------------
# classification of the 77 partitions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PartitionClass:
    """Which of the four fates a partition of 12 has as a PIP.

    letter an in {"a", "b", "c", "d"}; count is the number of fullerenes
    realizing the partition, present exactly for the finite class b.
    """

    letter: str
    label: str
    count: int | None = None


_IMPOSSIBLE = frozenset(
    {
        (9, 2, 1),
        (9, 1, 1, 1),
        (8, 3, 1),
        (8, 2, 2),
        (8, 2, 1, 1),
        (8, 1, 1, 1, 1),
        (7, 3, 1, 1),
        (7, 2, 2, 1),
        (7, 2, 1, 1, 1),
        (7, 1, 1, 1, 1, 1),
        (6, 3, 1, 1, 1),
        (6, 2, 2, 2),
        (6, 2, 2, 1, 1),
        (6, 2, 1, 1, 1, 1),
        (6, 1, 1, 1, 1, 1, 1),
    }
)

_FINITE = {
    (12,): 41,
    (11, 1): 2,
    (10, 2): 1,
    (10, 1, 1): 1,
    (9, 3): 2,
    (8, 4): 16,
    (7, 5): 69,
    (7, 4, 1): 12,
    (7, 3, 2): 1,
}

_BOUNDED = frozenset({(6, 5, 1), (6, 4, 2), (6, 4, 1, 1), (6, 3, 3), (6, 3, 2, 1)})


def classify_partition(parts: Iterable[int]) -> PartitionClass:
    """Class of a partition of 12 as a PIP: impossible, finite (with its
    fullerene count), realizable with bounded separation only, or
    realizable with unbounded separation."""
    p = tuple(sorted(parts, reverse=True))
    if sum(p) != 12 or any(x <= 0 for x in p):
        raise ValueError(f"{p} is not a partition of 12")
    if p in _IMPOSSIBLE:
        return PartitionClass("a", "impossible")
    if p in _FINITE:
        return PartitionClass("b", "finite", _FINITE[p])
    if p in _BOUNDED:
        return PartitionClass("c", "infinite, bounded separation")
    # everything with largest part below 6 is unbounded, as is (6,6)
    return PartitionClass("d", "infinite, unbounded separation")

"""Pentagon/hexagon disk patches: bounds, enumeration, merging.

A patch is a 2-connected plane graph whose interior faces are pentagons and
hexagons, with interior vertices of degree 3 and boundary vertices of degree
2 or 3.  Patches with p pentagons satisfy d2 - d3 = 6 - p along the boundary,
so for p < 6 the boundary has more degree-2 than degree-3 vertices.

Two independent routes to the same facts live here on purpose: closed-form
minimum-boundary/maximum-hexagon formulas, and an exhaustive generator that
builds every patch with a given face census by gluing faces onto the rim.
The test suite plays them against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .graph import HEXAGON, PENTAGON, trace_faces

_MERGE_SAFETY_CAP = 100_000


class PatchError(Exception):
    """A graph that violates the patch invariants."""


class MergeError(PatchError):
    """Patches that cannot be merged (six or more pentagons in total)."""


# ---------------------------------------------------------------------------
# closed-form bounds
# ---------------------------------------------------------------------------


def _ceil_sqrt(x: int) -> int:
    r = math.isqrt(x)
    return r if r * r == x else r + 1


def min_boundary_length(p: int, h: int) -> int:
    """Smallest possible boundary length of a patch with p pentagons, h hexagons.

    The bound is tight for every (p, h); parity follows d2 - d3 = 6 - p, so
    the boundary is even for even p and odd for odd p.  Defined for p <= 5
    (six pentagons admit arbitrarily long tubes, so no such bound exists).
    """
    if not 0 <= p <= 5:
        raise ValueError(f"minimum boundary length is only defined for 0 <= p <= 5, got {p}")
    if h < 0 or (p == 0 and h == 0):
        raise ValueError(f"no patch with p={p}, h={h}")
    if p % 2 == 0:
        target = (48 * h - 12, None, 32 * h + 64, None, 16 * h + 100, None)[p]
        b = _ceil_sqrt(target)
        return b if b % 2 == 0 else b + 1
    target = (None, 40 * h + 25, None, 24 * h + 81, None, 8 * h + 113)[p]
    b = _ceil_sqrt(target)
    return b if b % 2 == 1 else b + 1


def max_hexagons_in_patch(p: int, b: int) -> int:
    """Largest h such that some patch with p pentagons has boundary length b or less."""
    if not 0 <= p <= 5:
        raise ValueError(f"defined for 0 <= p <= 5, got {p}")
    e = b if (b - p) % 2 == 0 else b - 1  # largest usable length of correct parity
    num, den = (
        (e * e + 12, 48),
        (e * e - 25, 40),
        (e * e - 64, 32),
        (e * e - 81, 24),
        (e * e - 100, 16),
        (e * e - 113, 8),
    )[p]
    h = num // den
    if h < 0 or (p == 0 and h < 1):
        raise ValueError(f"no patch with {p} pentagons fits inside boundary length {b}")
    return h


def max_hexagons_with_cluster(k: int) -> int:
    """Most hexagons a fullerene can have when k >= 7 pentagons form one cluster.

    A connected cluster of k pentagons has at least k-1 internal edges, so its
    boundary -- which is also the total boundary of the complement patches --
    is at most 5k - 2(k-1) = 3k + 2.  Merging complement components only adds
    hexagons, so the single-patch bound applies.
    """
    if not 7 <= k <= 12:
        raise ValueError(f"cluster bound is for 7 <= k <= 12, got {k}")
    return max_hexagons_in_patch(12 - k, 3 * k + 2)


def max_vertices_with_big_cluster() -> int:
    """Largest vertex count of any fullerene with a pentagon cluster of size >= 7."""
    return max(2 * (10 + max_hexagons_with_cluster(k)) for k in range(7, 13))


# ---------------------------------------------------------------------------
# patches as plane graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Patch:
    """An immutable patch: rotations plus the boundary cycle.

    The boundary is oriented with the interior on the right; each vertex's
    rotation is its clockwise neighbour order.  Equality (`same_shape`) is by
    canonical code, which identifies reflections.
    """

    rotations: tuple[tuple[int, ...], ...]
    boundary: tuple[int, ...]

    @property
    def boundary_length(self) -> int:
        return len(self.boundary)

    @cached_property
    def boundary_word(self) -> tuple[int, ...]:
        return tuple(len(self.rotations[v]) for v in self.boundary)

    @cached_property
    def face_sizes(self) -> tuple[int, ...]:
        """Interior face sizes, ascending."""
        faces = _interior_faces(self.rotations, self.boundary)
        return tuple(sorted(len(c) for c in faces))

    @property
    def pentagons(self) -> int:
        return sum(1 for s in self.face_sizes if s == PENTAGON)

    @property
    def hexagons(self) -> int:
        return sum(1 for s in self.face_sizes if s == HEXAGON)

    @cached_property
    def canonical(self) -> tuple[int, ...]:
        return canonical_patch_code(self.rotations, self.boundary)

    def same_shape(self, other: "Patch") -> bool:
        return self.canonical == other.canonical


def _interior_faces(
    rotations: Sequence[Sequence[int]], boundary: Sequence[int]
) -> list[tuple[int, ...]]:
    faces = trace_faces(rotations)
    rim = set(boundary)
    L = len(boundary)
    outer = [
        i
        for i, c in enumerate(faces)
        if len(c) == L and set(c) == rim and _is_rotation(tuple(reversed(c)), tuple(boundary))
    ]
    if len(outer) != 1:
        raise PatchError("boundary cycle does not trace the outer face")
    return [c for i, c in enumerate(faces) if i != outer[0]]


def _is_rotation(a: tuple, b: tuple) -> bool:
    return len(a) == len(b) and (len(a) == 0 or a in {b[i:] + b[:i] for i in range(len(b))})


def validate_patch(patch: Patch) -> None:
    """Raise PatchError unless ``patch`` satisfies every patch invariant."""
    rots = patch.rotations
    n = len(rots)
    bset = set(patch.boundary)
    if len(bset) != len(patch.boundary):
        raise PatchError("boundary cycle revisits a vertex")
    for v, neigh in enumerate(rots):
        d = len(neigh)
        if v in bset:
            if d not in (2, 3):
                raise PatchError(f"boundary vertex {v} has degree {d}")
        elif d != 3:
            raise PatchError(f"interior vertex {v} has degree {d}")
    for i, v in enumerate(patch.boundary):
        w = patch.boundary[(i + 1) % len(patch.boundary)]
        if w not in rots[v]:
            raise PatchError(f"boundary step {v}-{w} is not an edge")
    seen = set()
    for c in _interior_faces(rots, patch.boundary):
        if len(c) not in (PENTAGON, HEXAGON):
            raise PatchError(f"interior face of size {len(c)}")
        seen.update(c)
    if seen != set(range(n)):
        raise PatchError("stray vertices outside all interior faces")


# ---------------------------------------------------------------------------
# canonical codes
# ---------------------------------------------------------------------------


def canonical_patch_code(
    rotations: Sequence[Sequence[int]], boundary: Sequence[int]
) -> tuple[int, ...]:
    """Canonical form of a patch, identifying rotations and reflections.

    The code is the minimum, over all directed boundary edges as roots (both
    directions, with matching chirality), of a breadth-first labelling that
    lists every vertex's neighbours in rotation order starting from its
    discovery edge.
    """
    L = len(boundary)
    best: tuple[int, ...] | None = None
    for i in range(L):
        u, v = boundary[i], boundary[(i + 1) % L]
        for root_u, root_v, chi in ((u, v, 1), (v, u, -1)):
            code = _bfs_code(rotations, root_u, root_v, chi)
            if best is None or code < best:
                best = code
    assert best is not None
    return best


def _bfs_code(
    rotations: Sequence[Sequence[int]], root_u: int, root_v: int, chi: int
) -> tuple[int, ...]:
    label = {root_u: 0, root_v: 1}
    order = [root_u, root_v]
    entry = {root_u: root_v, root_v: root_u}
    out: list[int] = []
    k = 0
    while k < len(order):
        u = order[k]
        k += 1
        rot = rotations[u]
        d = len(rot)
        start = rot.index(entry[u])
        for step in range(1, d):
            w = rot[(start + chi * step) % d]
            if w not in label:
                label[w] = len(order)
                order.append(w)
                entry[w] = u
            out.append(label[w])
        out.append(-1)
    return tuple(out)


# ---------------------------------------------------------------------------
# building patches by gluing faces onto the rim
# ---------------------------------------------------------------------------


class _Builder:
    """Mutable patch under construction."""

    def __init__(self, size: int):
        self.rots: list[list[int]] = [
            [(i + 1) % size, (i - 1) % size] for i in range(size)
        ]
        self.boundary: list[int] = list(range(size))
        self.sizes: list[int] = [size]

    @classmethod
    def from_patch(cls, patch: Patch) -> "_Builder":
        b = cls.__new__(cls)
        b.rots = [list(r) for r in patch.rotations]
        b.boundary = list(patch.boundary)
        b.sizes = list(patch.face_sizes)
        return b

    def degree(self, v: int) -> int:
        return len(self.rots[v])

    def word(self) -> list[int]:
        return [self.degree(v) for v in self.boundary]

    def sites(self) -> list[tuple[int, int]]:
        """Glue sites: (boundary index of the left flank, run length).

        A site is a maximal run of degree-3 boundary vertices (possibly
        empty) between two degree-2 vertices; a face glued there covers
        run+1 boundary edges.
        """
        w = self.word()
        L = len(w)
        twos = [i for i in range(L) if w[i] == 2]
        if not twos:
            return []
        out = []
        for a, i in enumerate(twos):
            j = twos[(a + 1) % len(twos)]
            run = (j - i - 1) % L
            out.append((i, run))
        return out

    def glue(self, site_index: int, run: int, size: int) -> bool:
        """Glue a face of ``size`` along run+1 edges starting at boundary
        index ``site_index``.  Returns False (state unchanged) when the glue
        is geometrically impossible."""
        L = len(self.boundary)
        r = run + 1
        new_edges = size - r
        if new_edges < 1 or r > L - 1:
            return False
        v0 = self.boundary[site_index]
        vr = self.boundary[(site_index + r) % L]
        if self.degree(v0) != 2 or self.degree(vr) != 2:
            return False
        for k in range(1, r):
            if self.degree(self.boundary[(site_index + k) % L]) != 3:
                return False
        if new_edges == 1 and vr in self.rots[v0]:
            return False  # would create a parallel edge
        base = len(self.rots)
        path = [base + k for k in range(new_edges - 1)]  # w_1 .. w_{s-r-1}
        for k, w in enumerate(path):
            ahead = path[k - 1] if k > 0 else vr
            behind = path[k + 1] if k + 1 < len(path) else v0
            self.rots.append([ahead, behind])
        first_new = path[-1] if path else vr  # neighbour of v0 on the new face
        last_new = path[0] if path else v0  # neighbour of vr on the new face
        ahead_v0 = self.boundary[(site_index + 1) % L]
        self.rots[v0].insert(self.rots[v0].index(ahead_v0), first_new)
        behind_vr = self.boundary[(site_index + r - 1) % L]
        self.rots[vr].insert(self.rots[vr].index(behind_vr) + 1, last_new)
        seg = [self.boundary[(site_index + k) % L] for k in range(r + 1)]
        rest = [self.boundary[(site_index + r + k) % L] for k in range(1, L - r)]
        self.boundary = [seg[0], *reversed(path), seg[-1], *rest]
        self.sizes.append(size)
        return True

    def patch(self) -> Patch:
        return Patch(
            tuple(tuple(r) for r in self.rots),
            tuple(self.boundary),
        )


def single_face_patch(size: int) -> Patch:
    return _Builder(size).patch()


def enumerate_patches(p: int, h: int) -> list[Patch]:
    """Every patch with exactly p pentagons and h hexagons, up to isomorphism.

    Exhaustive by an ear argument: every patch with at least two faces has a
    face whose removal leaves a patch (a boundary face meeting the rim in one
    contiguous edge run), so breadth-first growth from single faces with
    canonical-form deduplication reaches every shape.
    """
    if p < 0 or h < 0 or p + h == 0:
        raise ValueError("need a non-empty face census")
    level: dict[tuple[int, ...], Patch] = {}
    for size, budget in ((PENTAGON, p), (HEXAGON, h)):
        if budget:
            start = single_face_patch(size)
            level[start.canonical] = start
    for _ in range(p + h - 1):
        nxt: dict[tuple[int, ...], Patch] = {}
        for patch in level.values():
            np_, nh = patch.pentagons, patch.hexagons
            allowed = []
            if np_ < p:
                allowed.append(PENTAGON)
            if nh < h:
                allowed.append(HEXAGON)
            builder = _Builder.from_patch(patch)
            for site_index, run in builder.sites():
                for size in allowed:
                    work = _Builder.from_patch(patch)
                    if not work.glue(site_index, run, size):
                        continue
                    cand = work.patch()
                    nxt.setdefault(cand.canonical, cand)
        level = nxt
    out = [q for q in level.values() if q.pentagons == p and q.hexagons == h]
    for q in out:
        validate_patch(q)
    return out


# ---------------------------------------------------------------------------
# merging (the disconnected-complement lemma)
# ---------------------------------------------------------------------------


def _first_22_edge(builder: _Builder) -> int:
    w = builder.word()
    L = len(w)
    for i in range(L):
        if w[i] == 2 and w[(i + 1) % L] == 2:
            return i
    raise MergeError("no boundary edge with two degree-2 endpoints")


def merge_patches(patches: Sequence[Patch]) -> Patch:
    """Merge patches into one with the same pentagons, more hexagons, and
    boundary length equal to the sum of the inputs' boundary lengths.

    Works only when the total pentagon count is below six.  Each pairwise
    step glues along an edge whose endpoints both have degree 2 (dropping
    the boundary length by 2), then repeatedly adds a hexagon at the first
    shortest maximal run of degree-3 boundary vertices until the boundary
    regains the exact sum.
    """
    if not patches:
        raise MergeError("nothing to merge")
    total_p = sum(q.pentagons for q in patches)
    if total_p >= 6:
        raise MergeError(f"{total_p} pentagons in total; merging needs fewer than 6")
    for q in patches:
        validate_patch(q)
    acc = patches[0]
    for q in patches[1:]:
        acc = _merge_two(acc, q)
    return acc


def _merge_two(a: Patch, b: Patch) -> Patch:
    target = a.boundary_length + b.boundary_length
    pa = _Builder.from_patch(a)
    ia = _first_22_edge(pa)
    ib_patch = _Builder.from_patch(b)
    ib = _first_22_edge(ib_patch)

    # bring b's vertices into a's id space
    off = len(pa.rots)
    for neigh in ib_patch.rots:
        pa.rots.append([u + off for u in neigh])
    bnd_b = [v + off for v in ib_patch.boundary]
    La, Lb = len(pa.boundary), len(bnd_b)
    x1, y1 = pa.boundary[ia], pa.boundary[(ia + 1) % La]
    x2, y2 = bnd_b[ib], bnd_b[(ib + 1) % Lb]

    # identify x1 with y2 and y1 with x2 (boundaries run in opposite senses)
    def redirect(old: int, new: int) -> None:
        for v, neigh in enumerate(pa.rots):
            pa.rots[v] = [new if u == old else u for u in neigh]

    # x1 keeps its id; collect y2's extra neighbour (its boundary successor in b)
    z = bnd_b[(ib + 2) % Lb]  # y2's ahead
    w = bnd_b[(ib - 1) % Lb]  # x2's behind
    redirect(y2, x1)
    redirect(x2, y1)
    # rebuild the two seam rotations explicitly: clockwise [ahead, shared, behind]
    behind_x1 = pa.boundary[(ia - 1) % La]
    ahead_y1 = pa.boundary[(ia + 2) % La]
    pa.rots[x1] = [z, y1, behind_x1]
    pa.rots[y1] = [ahead_y1, x1, w]
    pa.rots[y2] = []
    pa.rots[x2] = []

    # merged rim: y1 .. x1 along a's boundary, then z .. w along b's
    seg_a = [pa.boundary[(ia + 1 + k) % La] for k in range(La)]
    seg_b = [bnd_b[(ib + 2 + k) % Lb] for k in range(Lb - 2)]
    pa.boundary = seg_a + seg_b
    pa.sizes = list(a.face_sizes) + list(b.face_sizes)

    merged = _compact(pa)
    result = _grow_back(merged, target)
    out = result.patch()
    validate_patch(out)
    if out.boundary_length != target:
        raise PatchError("merge did not restore the boundary sum")
    return out


def _compact(builder: _Builder) -> _Builder:
    """Drop empty rotation slots left by vertex identification."""
    alive = [v for v, neigh in enumerate(builder.rots) if neigh]
    remap = {v: i for i, v in enumerate(alive)}
    out = _Builder.__new__(_Builder)
    out.rots = [[remap[u] for u in builder.rots[v]] for v in alive]
    out.boundary = [remap[v] for v in builder.boundary]
    out.sizes = list(builder.sizes)
    return out


def max_degree3_run(word: Sequence[int]) -> int:
    """Longest cyclic run of degree-3 vertices in a boundary word.

    A run of five or more needs a face of size seven or more on its far
    side, so such a patch never embeds in a fullerene.
    """
    w = list(word)
    if 2 not in w:
        return len(w)
    k = w.index(2)
    w = w[k:] + w[:k]
    best = cur = 0
    for d in w:
        cur = cur + 1 if d == 3 else 0
        best = max(best, cur)
    return best


def boundary_code(word: Sequence[int]) -> tuple[int, ...]:
    """Canonical form of a cyclic boundary word: least rotation of the word
    or its reversal."""
    w = tuple(word)
    L = len(w)
    if L == 0:
        return w
    cands = [w[i:] + w[:i] for i in range(L)]
    r = tuple(reversed(w))
    cands += [r[i:] + r[:i] for i in range(L)]
    return min(cands)


# unit steps of the six hex-lattice directions, in the (e1, e2) basis
# (e2 is e1 rotated by 60 degrees)
_HEX_STEPS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))


def tube_parameters(word: Sequence[int]) -> tuple[int, int]:
    """Chiral indices (l, m) of the tube a closed boundary word wraps around.

    Walks the word on the hexagonal lattice, turning by +60 degrees at each
    degree-2 vertex and -60 at each degree-3 vertex.  Only balanced words
    (equally many 2s and 3s -- six-pentagon clusters) describe a translation;
    its displacement, reduced modulo the lattice's twelve point symmetries to
    l >= m >= 0, classifies the tube.
    """
    w = list(word)
    if any(d not in (2, 3) for d in w):
        raise ValueError("boundary word must consist of degrees 2 and 3")
    if w.count(2) != w.count(3):
        raise ValueError("unbalanced boundary word does not close up to a translation")
    direction = 0
    a = b = 0
    for d in w:
        da, db = _HEX_STEPS[direction]
        a += da
        b += db
        direction = (direction + (1 if d == 2 else -1)) % 6
    if (2 * a + b) % 3 or (b - a) % 3:
        raise ValueError("boundary walk does not land on the tube lattice")
    l, m = (2 * a + b) // 3, (b - a) // 3
    images = set()
    for _ in range(6):
        l, m = -m, l + m  # rotate by 60 degrees
        images.add((l, m))
        images.add((m, l))  # reflection
    good = sorted(p for p in images if p[0] >= p[1] >= 0)
    if not good:
        raise ValueError("no canonical representative for tube displacement")
    return good[0]


def _grow_back(builder: _Builder, target: int) -> _Builder:
    for _ in range(_MERGE_SAFETY_CAP):
        if len(builder.boundary) == target:
            return builder
        sites = [(run, i) for i, run in builder.sites() if run >= 1]
        if not sites:
            raise PatchError("no degree-3 run to grow a hexagon at")
        run, site = min(sites)
        if run > 3:
            raise PatchError("shortest degree-3 run exceeds 3; not a p<6 patch")
        if not builder.glue(site, run, HEXAGON):
            raise PatchError("hexagon glue unexpectedly failed while growing back")
    raise PatchError("merge failed to converge")

"""Automorphism groups of embedded fullerenes and point-group naming.

An automorphism is determined by where it sends one root directed edge and
whether it preserves or reverses the rotation system, so the whole group
falls out of at most 6e propagation attempts.  Naming needs nothing beyond
the group itself: the rotation order, the largest rotation order of any
element, and how the orientation-reversing involutions sit (mirrors fix
cells on their circle, the inversion fixes nothing).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .graph import FullereneGraph


class SymmetryError(RuntimeError):
    """An internal classification invariant failed (never expected)."""


@dataclass(frozen=True)
class Automorphism:
    perm: tuple[int, ...]
    orientation: int  # +1 preserves the rotation system, -1 reverses it

    @property
    def order(self) -> int:
        return _perm_order(self.perm)


@dataclass(frozen=True)
class AutomorphismGroup:
    elements: tuple[Automorphism, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def rotation_order(self) -> int:
        return sum(1 for a in self.elements if a.orientation == 1)

    @property
    def rotations(self) -> tuple[Automorphism, ...]:
        return tuple(a for a in self.elements if a.orientation == 1)

    @property
    def reversing(self) -> tuple[Automorphism, ...]:
        return tuple(a for a in self.elements if a.orientation == -1)


def _perm_order(p: tuple[int, ...]) -> int:
    seen = [False] * len(p)
    order = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        v = start
        while not seen[v]:
            seen[v] = True
            v = p[v]
            length += 1
        order = lcm(order, length)
    return order


def _extend(rot, idx, u0: int, v0: int, x: int, y: int, sigma: int):
    """Grow the map u0->x, v0->y through the rotation system; None on clash."""
    n = len(rot)
    p = [-1] * n
    hit = [False] * n
    p[u0] = x
    hit[x] = True
    if p[v0] == -1:
        if hit[y]:
            return None
        p[v0] = y
        hit[y] = True
    elif p[v0] != y:
        return None
    stack = [(u0, v0), (v0, u0)]
    while stack:
        v, u = stack.pop()
        j0 = idx[v][u]
        j1 = idx[p[v]].get(p[u])
        if j1 is None:
            return None
        for k in (1, 2):
            w = rot[v][(j0 + k) % 3]
            w2 = rot[p[v]][(j1 + sigma * k) % 3]
            if p[w] == -1:
                if hit[w2]:
                    return None
                p[w] = w2
                hit[w2] = True
                stack.append((w, v))
            elif p[w] != w2:
                return None
    return tuple(p)


def automorphisms(g: FullereneGraph) -> AutomorphismGroup:
    """The full automorphism group of the embedded graph.

    Every element either preserves all rotations or reverses all of them,
    and is pinned by the image of one directed edge — standard rigidity,
    asserted here by insisting that only the identity fixes the root dart.
    """
    rot = g.rotations
    idx = [{u: i for i, u in enumerate(row)} for row in rot]
    u0, v0 = 0, rot[0][0]
    elems = []
    for x in range(g.n):
        for y in rot[x]:
            for sigma in (1, -1):
                p = _extend(rot, idx, u0, v0, x, y, sigma)
                if p is not None:
                    elems.append(Automorphism(p, sigma))
    identity = tuple(range(g.n))
    fixers = [a for a in elems if a.perm[u0] == u0 and a.perm[v0] == v0 and a.orientation == 1]
    if len(fixers) != 1 or fixers[0].perm != identity:
        raise SymmetryError("a non-identity automorphism fixes the root directed edge")
    group = AutomorphismGroup(tuple(elems))
    for a in group.rotations:
        if a.perm != identity and _fixed_cells(g, a) != 2:
            raise SymmetryError("rotation without exactly two fixed sites")
    if group.order % group.rotation_order or group.order // group.rotation_order > 2:
        raise SymmetryError("reversing elements do not form a single coset")
    return group


def _fixed_cells(g: FullereneGraph, a: Automorphism) -> int:
    """Fixed vertices + fixed edges + fixed faces (axis/mirror sites)."""
    p = a.perm
    count = sum(1 for v in range(g.n) if p[v] == v)
    for u, v in g.edges():
        if (p[u] == u and p[v] == v) or (p[u] == v and p[v] == u):
            if p[u] != u:
                count += 1  # ends swapped: the midpoint alone is fixed
            # an edge fixed pointwise contributes via its two vertices
    for face in g.faces:
        v0, v1 = face.vertices[0], face.vertices[1]
        img = g.face_at(p[v0], p[v1]) if a.orientation == 1 else g.face_at(p[v1], p[v0])
        if img == face.id:
            count += 1
    return count


def _has_fixed_cell(g: FullereneGraph, a: Automorphism) -> bool:
    p = a.perm
    if any(p[v] == v for v in range(g.n)):
        return True
    if any(p[u] == v and p[v] == u for u, v in g.edges()):
        return True
    for face in g.faces:
        v0, v1 = face.vertices[0], face.vertices[1]
        img = g.face_at(p[v0], p[v1]) if a.orientation == 1 else g.face_at(p[v1], p[v0])
        if img == face.id:
            return True
    return False


_CHIRAL = {1: "C1", 2: "C2", 3: "C3", 4: "D2", 6: "D3", 10: "D5", 60: "I"}


def point_group(g: FullereneGraph) -> str:
    """Point-group name (one of the 28 a fullerene can have), e.g. "D5d"."""
    group = automorphisms(g)
    r = group.rotation_order
    max_rot = max(a.order for a in group.rotations)
    if group.order == r:
        if r == 12:
            return "D6" if max_rot == 6 else "T"
        name = _CHIRAL.get(r)
        if name is None:
            raise SymmetryError(f"no chiral fullerene group of order {r}")
        return name

    involutions = [a for a in group.reversing if a.order == 2]
    mirrors = sum(1 for a in involutions if _has_fixed_cell(g, a))
    inversion = len(involutions) - mirrors
    if inversion > 1:
        raise SymmetryError("more than one inversion")
    inv = bool(inversion)
    name = _name_achiral(r, max_rot, mirrors, inv)
    if name is None:
        raise SymmetryError(
            f"unrecognised reversing structure: r={r} mirrors={mirrors} inversion={inv}"
        )
    return name


def _name_achiral(r: int, max_rot: int, mirrors: int, inv: bool) -> str | None:
    if r == 1:
        if mirrors == 1 and not inv:
            return "Cs"
        if mirrors == 0 and inv:
            return "Ci"
    elif r == 2:
        if mirrors == 2 and not inv:
            return "C2v"
        if mirrors == 1 and inv:
            return "C2h"
        if mirrors == 0 and not inv:
            return "S4"
    elif r == 3:
        if mirrors == 3 and not inv:
            return "C3v"
        if mirrors == 1 and not inv:
            return "C3h"
        if mirrors == 0 and inv:
            return "S6"
    elif r == 4:
        if mirrors == 3 and inv:
            return "D2h"
        if mirrors == 2 and not inv:
            return "D2d"
    elif r == 6:
        if mirrors == 4 and not inv:
            return "D3h"
        if mirrors == 3 and inv:
            return "D3d"
    elif r == 10:
        if mirrors == 6 and not inv:
            return "D5h"
        if mirrors == 5 and inv:
            return "D5d"
    elif r == 12 and max_rot == 3:
        if mirrors == 6 and not inv:
            return "Td"
        if mirrors == 3 and inv:
            return "Th"
    elif r == 12:
        if mirrors == 7 and inv:
            return "D6h"
        if mirrors == 6 and not inv:
            return "D6d"
    elif r == 60:
        return "Ih"
    return None

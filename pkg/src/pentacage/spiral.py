"""Face spirals: winding a pentagon/hexagon sequence into a fullerene and back.

A spiral orders the faces so that each face shares an edge with its
predecessor and with the earliest placed face that still has unused edge
slots.  A fullerene is encoded by the 12 positions (1-based) of the
pentagons in that order.  Winding builds the dual triangulation node by
node around an open rim; unwinding replays the same process on an existing
graph, with each next face dictated by the embedding, to extract every
spiral the graph admits.  The canonical spiral is the lexicographically
smallest position tuple over all starts and both orientations.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from .graph import HEXAGON, PENTAGON, FullereneGraph, planar_dual


class SpiralWindingError(Exception):
    """A face-size sequence that does not wind into a closed sphere."""

    def __init__(self, step: int, reason: str):
        self.step = step
        self.reason = reason
        super().__init__(f"winding failed at face {step + 1}: {reason}")


class UnspirallableError(Exception):
    """The graph admits no face spiral from any start."""


@dataclass(frozen=True)
class SpiralCode:
    """A fullerene spiral: vertex count plus 1-based pentagon positions."""

    n: int
    positions: tuple[int, ...]

    def __post_init__(self):
        if self.n < 20 or self.n % 2 or self.n == 22:
            raise ValueError(f"no fullerene on {self.n} vertices")
        p = self.positions
        if len(p) != 12:
            raise ValueError("a spiral names exactly 12 pentagon positions")
        if any(b <= a for a, b in zip(p, p[1:])) or p[0] < 1 or p[-1] > self.face_count:
            raise ValueError(f"positions must increase within 1..{self.face_count}")

    @property
    def face_count(self) -> int:
        return self.n // 2 + 2

    def sizes(self) -> tuple[int, ...]:
        pent = set(self.positions)
        return tuple(
            PENTAGON if j in pent else HEXAGON for j in range(1, self.face_count + 1)
        )

    def text(self) -> str:
        return f"{self.n}: " + " ".join(str(p) for p in self.positions)

    @classmethod
    def from_text(cls, line: str) -> "SpiralCode":
        head, _, rest = line.partition(":")
        try:
            n = int(head.strip())
            positions = tuple(int(tok) for tok in rest.split())
        except ValueError as exc:
            raise ValueError(f"unparseable spiral {line!r}") from exc
        return cls(n, positions)


# ---------------------------------------------------------------------------
# the rim engine
# ---------------------------------------------------------------------------


class _RimFail(Exception):
    """Internal: the current (un)winding attempt is dead."""


class _Rim:
    """Open rim of a partially wound dual triangulation.

    Nodes are caller-chosen ids (placement index when winding, host face id
    when unwinding).  The rim is a doubly-linked cycle; each node records the
    neighbours it acquires on each side so that its full rotation can be
    reassembled once the sphere closes:  arrivals while the node serves as
    rim head land on one side, arrivals while it serves as tail on the other.
    """

    def __init__(self, capacity: int):
        self.deg = [0] * capacity
        self.cur = [0] * capacity
        self.nxt = [0] * capacity
        self.prv = [0] * capacity
        self.pre: list[list[int]] = [[] for _ in range(capacity)]
        self.core: list[list[int]] = [[] for _ in range(capacity)]
        self.post: list[list[int]] = [[] for _ in range(capacity)]
        self.head = -1
        self.placed = 0

    def _connect_post(self, y: int, x: int) -> None:
        self.post[y].append(x)
        self.cur[y] += 1
        self.cur[x] += 1

    def _connect_pre(self, y: int, x: int) -> None:
        self.pre[y].append(x)
        self.cur[y] += 1
        self.cur[x] += 1

    def _unlink(self, y: int) -> None:
        self.nxt[self.prv[y]] = self.nxt[y]
        self.prv[self.nxt[y]] = self.prv[y]

    def place(self, x: int, d: int, *, final: bool) -> list[int]:
        """Attach node ``x`` of degree ``d`` across the current seam.

        Returns the arc: the previously placed nodes x became adjacent to,
        in rim order.  Raises _RimFail when the spiral step is impossible.
        """
        self.deg[x] = d
        self.cur[x] = 0
        if self.placed == 0:
            self.nxt[x] = self.prv[x] = x
            self.head = x
            self.placed = 1
            return []
        if final:
            return self._close(x, d)
        if self.placed == 1:
            h = self.head
            self._connect_post(h, x)
            self.core[x] = [h]
            self.nxt[h] = self.prv[h] = x
            self.nxt[x] = self.prv[x] = h
            self.head = x
            self.placed = 2
            return [h]

        h = self.head
        t = self.nxt[h]
        if h == t:
            raise _RimFail("rim collapsed before the last face")
        arc: deque[int] = deque()
        self._connect_post(h, x)
        arc.append(h)
        self._connect_pre(t, x)
        arc.append(t)
        # absorb saturated rim nodes, extending the seam arc on both sides
        while True:
            if t is not None and self.cur[t] == self.deg[t]:
                nxt_t = self.nxt[t]
                self._unlink(t)
                if nxt_t == t or nxt_t == h:
                    t = None
                else:
                    if self.cur[x] >= d:
                        raise _RimFail("face too small for its seam")
                    t = nxt_t
                    self._connect_pre(t, x)
                    arc.append(t)
                continue
            if h is not None and self.cur[h] == self.deg[h]:
                prv_h = self.prv[h]
                self._unlink(h)
                if prv_h == h or prv_h == t:
                    h = None
                else:
                    if self.cur[x] >= d:
                        raise _RimFail("face too small for its seam")
                    h = prv_h
                    self._connect_post(h, x)
                    arc.appendleft(h)
                continue
            break
        if self.cur[x] >= d:
            raise _RimFail("face saturated on placement")
        if h is None and t is None:
            self.nxt[x] = self.prv[x] = x
        elif h is None:
            self.nxt[t] = self.prv[t] = x
            self.nxt[x] = self.prv[x] = t
        elif t is None:
            self.nxt[h] = self.prv[h] = x
            self.nxt[x] = self.prv[x] = h
        else:
            self.nxt[h] = x
            self.prv[x] = h
            self.nxt[x] = t
            self.prv[t] = x
        self.head = x
        self.core[x] = list(arc)
        self.placed += 1
        return self.core[x]

    def _close(self, x: int, d: int) -> list[int]:
        h = self.head
        rim = [h]
        y = self.nxt[h]
        while y != h:
            rim.append(y)
            y = self.nxt[y]
        if len(rim) != d:
            raise _RimFail(f"closing face needs rim of {d}, found {len(rim)}")
        for y in rim:
            self._connect_post(y, x)
            if self.cur[y] != self.deg[y]:
                raise _RimFail("rim node not saturated by the closing face")
        self.core[x] = rim
        self.head = -1
        self.placed += 1
        return rim

    def rotations(self) -> list[list[int]]:
        out = []
        for y in range(self.placed):
            rot = list(reversed(self.pre[y])) + self.core[y] + self.post[y]
            if len(rot) != self.deg[y]:
                raise _RimFail(f"node {y} ended with degree {len(rot)} != {self.deg[y]}")
            out.append(rot)
        return out


# ---------------------------------------------------------------------------
# winding
# ---------------------------------------------------------------------------


def wind_dual(sizes: Sequence[int]) -> list[list[int]]:
    """Wind a face-size sequence into the rotation system of its dual.

    Raises:
        SpiralWindingError: when the sequence does not close into a sphere.
    """
    f = len(sizes)
    rim = _Rim(f)
    for j, d in enumerate(sizes):
        try:
            rim.place(j, d, final=(j == f - 1))
        except _RimFail as exc:
            raise SpiralWindingError(j, str(exc)) from None
    return rim.rotations()


def wind_from_spiral(code: SpiralCode) -> FullereneGraph:
    """Build the fullerene graph a spiral describes."""
    dual = wind_dual(code.sizes())
    return FullereneGraph(planar_dual(dual))


# ---------------------------------------------------------------------------
# unwinding
# ---------------------------------------------------------------------------


def _unwind(
    adj: Sequence[Sequence[int]],
    adj_sets: Sequence[frozenset[int]],
    degs: Sequence[int],
    f0: int,
    f1: int,
    sigma: int,
    ref: tuple[int, ...] | None,
    index_of: Sequence[dict[int, int]] | None = None,
) -> tuple[int, ...] | None:
    """Replay one spiral start on a host graph.

    ``adj`` is the host's dual rotation system, ``sigma`` the orientation
    (+1/-1) used to pick the outer apex of each seam.  Returns the pentagon
    position tuple, or None when the start fails or provably cannot beat
    ``ref`` (a lexicographic reference used for early abort).
    """
    f = len(adj)
    rim = _Rim(f)
    placed = [False] * f
    placed_deg = [0] * f
    if index_of is None:
        index_of = [{v: i for i, v in enumerate(row)} for row in adj]

    positions: list[int] = []
    improving = ref is None

    def note_placed(x: int) -> bool:
        # returns False when the partial spiral can no longer beat ref
        nonlocal improving
        placed[x] = True
        for z in adj[x]:
            placed_deg[z] += 1
        pos = rim.placed  # 1-based position of x in the spiral
        if degs[x] == PENTAGON:
            k = len(positions)
            positions.append(pos)
            if not improving:
                assert ref is not None
                if pos < ref[k]:
                    improving = True
                elif pos > ref[k]:
                    return False
                elif k == 11:
                    return False  # completes equal to ref: not an improvement
        else:
            k = len(positions)
            if not improving:
                assert ref is not None
                if k < 12 and pos >= ref[k]:
                    return False
        return True

    try:
        rim.place(f0, degs[f0], final=False)
        if not note_placed(f0):
            return None
        arc = rim.place(f1, degs[f1], final=False)
        if arc != [f0] or not note_placed(f1):
            return None
        h, t = f1, f0
        for step in range(2, f):
            # the next face is the outer apex of the seam edge (head, tail)
            row = adj[h]
            x = row[(index_of[h][t] + sigma) % len(row)]
            if placed[x]:
                return None
            arc = rim.place(x, degs[x], final=(step == f - 1))
            # the seam arc must be exactly the host edges into the placed disk
            if rim.cur[x] != placed_deg[x]:
                return None
            ok = True
            for y in arc:
                if y not in adj_sets[x]:
                    ok = False
                    break
            if not ok:
                return None
            if not note_placed(x):
                return None
            if step < f - 1:
                h, t = x, rim.nxt[x]
    except _RimFail:
        return None
    if len(positions) != 12:
        return None
    return tuple(positions)


def all_spirals(g: FullereneGraph) -> Iterator[tuple[int, ...]]:
    """Yield the pentagon positions of every successful spiral start."""
    adj = g.face_adjacency
    adj_sets = [frozenset(row) for row in adj]
    degs = [f.size for f in g.faces]
    for f0 in range(len(adj)):
        for f1 in adj[f0]:
            for sigma in (1, -1):
                s = _unwind(adj, adj_sets, degs, f0, f1, sigma, None)
                if s is not None:
                    yield s


def canonical_spiral(g: FullereneGraph) -> SpiralCode:
    """Lexicographically smallest spiral of ``g`` over all starts.

    Starts at pentagons are tried first: any success pins position 1 to a
    pentagon, which no hexagon start can beat.  Raises UnspirallableError
    when no start at all succeeds.
    """
    adj = g.face_adjacency
    adj_sets = [frozenset(row) for row in adj]
    degs = [f.size for f in g.faces]
    best: tuple[int, ...] | None = None
    for phase in (PENTAGON, HEXAGON):
        for f0 in range(len(adj)):
            if degs[f0] != phase:
                continue
            for f1 in adj[f0]:
                for sigma in (1, -1):
                    s = _unwind(adj, adj_sets, degs, f0, f1, sigma, best)
                    if s is not None and (best is None or s < best):
                        best = s
        if best is not None:
            break
    if best is None:
        raise UnspirallableError(f"no spiral from any start (n={g.n})")
    return SpiralCode(g.n, best)


def spiral_id(g: FullereneGraph) -> str:
    """Atlas-style id ``"n:rank"`` of ``g`` among all isomers of its size."""
    from .generate import spiral_rank  # local import: generate depends on us

    return f"{g.n}:{spiral_rank(g)}"

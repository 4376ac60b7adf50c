"""Exhaustive fullerene generation by depth-first spiral winding.

The search walks face-size sequences in lexicographic order (pentagon
before hexagon), sharing one incrementally wound rim whose every mutation
is journaled so branches can be unwound exactly.  A branch dies when the
rim mechanics reject the face, when the pentagon/hexagon budget runs out,
or when the open rim can no longer bound a patch holding the remaining
faces.  A completed sequence is kept only if no other start on the freshly
wound sphere yields a lexicographically smaller spiral, so each isomer is
emitted exactly once, in canonical order.
"""

from __future__ import annotations

import bisect
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Sequence

from .graph import HEXAGON, PENTAGON, FullereneGraph, planar_dual
from .patches import min_boundary_length
from .spiral import SpiralCode, _unwind, canonical_spiral, wind_from_spiral

# journal opcodes
_DEG, _CUR, _NXT, _PRV, _PRE, _POST, _CORE, _HEAD, _PLACED, _ACCT = range(10)


class _UndoRim:
    """The winding rim, with every mutation journaled for exact rollback.

    Mirrors the one-shot rim in :mod:`pentacage.spiral`; a placement that
    returns False leaves its partial writes in the journal, so callers must
    roll back to their mark on failure as well as on backtrack.
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
        self.sum_deg = 0
        self.n_conn = 0

    def slack(self) -> int:
        """Open edge slots on the rim = boundary length of the unfilled disk."""
        return self.sum_deg - 2 * self.n_conn

    def rollback(self, log: list, mark: int) -> None:
        while len(log) > mark:
            op = log.pop()
            kind = op[0]
            if kind == _CUR:
                self.cur[op[1]] = op[2]
            elif kind == _NXT:
                self.nxt[op[1]] = op[2]
            elif kind == _PRV:
                self.prv[op[1]] = op[2]
            elif kind == _PRE:
                self.pre[op[1]].pop()
            elif kind == _POST:
                self.post[op[1]].pop()
            elif kind == _CORE:
                self.core[op[1]] = []
            elif kind == _DEG:
                self.deg[op[1]] = op[2]
            elif kind == _HEAD:
                self.head = op[1]
            elif kind == _PLACED:
                self.placed = op[1]
            else:
                self.sum_deg, self.n_conn = op[1], op[2]

    def _cpost(self, y: int, x: int, log: list) -> None:
        log.append((_POST, y))
        log.append((_CUR, y, self.cur[y]))
        log.append((_CUR, x, self.cur[x]))
        self.post[y].append(x)
        self.cur[y] += 1
        self.cur[x] += 1
        self.n_conn += 1

    def _cpre(self, y: int, x: int, log: list) -> None:
        log.append((_PRE, y))
        log.append((_CUR, y, self.cur[y]))
        log.append((_CUR, x, self.cur[x]))
        self.pre[y].append(x)
        self.cur[y] += 1
        self.cur[x] += 1
        self.n_conn += 1

    def _unlink(self, y: int, log: list) -> None:
        p, q = self.prv[y], self.nxt[y]
        log.append((_NXT, p, self.nxt[p]))
        log.append((_PRV, q, self.prv[q]))
        self.nxt[p] = q
        self.prv[q] = p

    def _set_link(self, a: int, b: int, log: list) -> None:
        log.append((_NXT, a, self.nxt[a]))
        log.append((_PRV, b, self.prv[b]))
        self.nxt[a] = b
        self.prv[b] = a

    def place(self, x: int, d: int, final: bool, log: list) -> bool:
        log.append((_ACCT, self.sum_deg, self.n_conn))
        self.sum_deg += d
        log.append((_DEG, x, self.deg[x]))
        self.deg[x] = d
        log.append((_CUR, x, self.cur[x]))
        self.cur[x] = 0
        log.append((_PLACED, self.placed))
        if self.placed == 0:
            self._set_link(x, x, log)
            log.append((_HEAD, self.head))
            self.head = x
            self.placed = 1
            return True
        if final:
            return self._close(x, d, log)
        if self.placed == 1:
            h = self.head
            self._cpost(h, x, log)
            log.append((_CORE, x))
            self.core[x] = [h]
            self._set_link(h, x, log)
            self._set_link(x, h, log)
            log.append((_HEAD, self.head))
            self.head = x
            self.placed = 2
            return True

        h = self.head
        t = self.nxt[h]
        if h == t:
            return False  # rim collapsed before the last face
        arc: deque[int] = deque()
        self._cpost(h, x, log)
        arc.append(h)
        self._cpre(t, x, log)
        arc.append(t)
        while True:
            if t is not None and self.cur[t] == self.deg[t]:
                nxt_t = self.nxt[t]
                self._unlink(t, log)
                if nxt_t == t or nxt_t == h:
                    t = None
                else:
                    if self.cur[x] >= d:
                        return False  # face too small for its seam
                    t = nxt_t
                    self._cpre(t, x, log)
                    arc.append(t)
                continue
            if h is not None and self.cur[h] == self.deg[h]:
                prv_h = self.prv[h]
                self._unlink(h, log)
                if prv_h == h or prv_h == t:
                    h = None
                else:
                    if self.cur[x] >= d:
                        return False
                    h = prv_h
                    self._cpost(h, x, log)
                    arc.appendleft(h)
                continue
            break
        if self.cur[x] >= d:
            return False  # face saturated on placement
        if h is None and t is None:
            self._set_link(x, x, log)
        elif h is None:
            self._set_link(t, x, log)
            self._set_link(x, t, log)
        elif t is None:
            self._set_link(h, x, log)
            self._set_link(x, h, log)
        else:
            self._set_link(h, x, log)
            self._set_link(x, t, log)
        log.append((_HEAD, self.head))
        self.head = x
        log.append((_CORE, x))
        self.core[x] = list(arc)
        self.placed += 1
        return True

    def _close(self, x: int, d: int, log: list) -> bool:
        h = self.head
        rim_nodes = [h]
        y = self.nxt[h]
        while y != h:
            rim_nodes.append(y)
            if len(rim_nodes) > d:
                return False
            y = self.nxt[y]
        if len(rim_nodes) != d:
            return False
        for y in rim_nodes:
            self._cpost(y, x, log)
            if self.cur[y] != self.deg[y]:
                return False
        log.append((_CORE, x))
        self.core[x] = rim_nodes
        log.append((_HEAD, self.head))
        self.head = -1
        self.placed += 1
        return True

    def rotations(self) -> list[list[int]]:
        out = []
        for y in range(self.placed):
            rot = list(reversed(self.pre[y]))
            rot.extend(self.core[y])
            rot.extend(self.post[y])
            if len(rot) != self.deg[y]:
                raise RuntimeError(f"node {y}: degree {len(rot)} != {self.deg[y]}")
            out.append(rot)
        return out


class _Search:
    """One depth-first sweep over all spirals of a fixed vertex count."""

    def __init__(self, n: int):
        self.n = n
        self.f = n // 2 + 2
        self.rim = _UndoRim(self.f)
        self.log: list = []
        self.positions: list[int] = []
        self.out: list[tuple[tuple[int, ...], list[list[int]]]] = []
        # tight window for the boundary of the still-unfilled disk
        self.bmin = [
            [
                0 if (q, h) == (0, 0) else min_boundary_length(q, h)
                for h in range(self.f + 1)
            ]
            for q in range(6)
        ]

    def run(self, prefix: Sequence[int] = ()) -> list[tuple[tuple[int, ...], list[list[int]]]]:
        pents_left = 12
        for t, d in enumerate(prefix):
            if not self.rim.place(t, d, t == self.f - 1, self.log):
                return self.out
            if d == PENTAGON:
                self.positions.append(t + 1)
                pents_left -= 1
        self._descend(len(prefix), pents_left)
        return self.out

    def _descend(self, t: int, pents_left: int) -> None:
        f = self.f
        faces_left = f - t
        final = t == f - 1
        for d in (PENTAGON, HEXAGON):
            if d == PENTAGON:
                if pents_left == 0:
                    continue
            elif faces_left <= pents_left:
                continue
            mark = len(self.log)
            if self.rim.place(t, d, final, self.log):
                if d == PENTAGON:
                    self.positions.append(t + 1)
                if final:
                    self._emit()
                else:
                    q_rem = pents_left - (d == PENTAGON)
                    h_rem = faces_left - 1 - q_rem
                    s = self.rim.slack()
                    if s <= 3 * q_rem + 4 * h_rem + 2 and (
                        q_rem > 5 or s >= self.bmin[q_rem][h_rem]
                    ):
                        self._descend(t + 1, q_rem)
                if d == PENTAGON:
                    self.positions.pop()
            self.rim.rollback(self.log, mark)

    def _emit(self) -> None:
        adj = self.rim.rotations()
        ref = tuple(self.positions)
        if _is_canonical(adj, ref):
            self.out.append((ref, adj))


def _is_canonical(adj: list[list[int]], ref: tuple[int, ...]) -> bool:
    """True when no spiral start on the wound sphere beats ``ref``."""
    degs = [len(row) for row in adj]
    adj_sets = [frozenset(row) for row in adj]
    index_of = [{v: i for i, v in enumerate(row)} for row in adj]
    for phase in (PENTAGON, HEXAGON):
        for f0 in range(len(adj)):
            if degs[f0] != phase:
                continue
            for f1 in adj[f0]:
                for sigma in (1, -1):
                    if _unwind(adj, adj_sets, degs, f0, f1, sigma, ref, index_of) is not None:
                        return False
    return True


def _positions_python(n: int, jobs: int = 1) -> list[tuple[tuple[int, ...], list[list[int]]]]:
    f = n // 2 + 2
    if jobs <= 1:
        return _Search(n).run()
    firsts = list(range(1, f - 10))  # position of the first pentagon
    def task(p1: int):
        prefix = (HEXAGON,) * (p1 - 1) + (PENTAGON,)
        return _Search(n).run(prefix)
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        chunks = list(pool.map(task, firsts))
    out: list[tuple[tuple[int, ...], list[list[int]]]] = []
    for chunk in chunks:
        out.extend(chunk)
    return out


def _bmin_table(f: int):
    import numpy as np

    bmin = np.zeros((6, f + 1), dtype=np.int32)
    for q in range(6):
        for h in range(f + 1):
            if (q, h) != (0, 0):
                bmin[q, h] = min_boundary_length(q, h)
    return bmin


def _positions_numba(n: int, jobs: int = 1) -> list[tuple[int, ...]]:
    import numpy as np

    from . import _kernel

    f = n // 2 + 2
    bmin = _bmin_table(f)
    if jobs <= 1:
        rows = _kernel.sweep(f, np.empty(0, dtype=np.int32), bmin)
        return [tuple(int(v) for v in row) for row in rows]
    # the kernel releases the GIL, so p1-partitioned sweeps run in parallel;
    # blocks are lexicographically contiguous, so concatenation stays sorted
    def task(p1: int):
        prefix = np.array((HEXAGON,) * (p1 - 1) + (PENTAGON,), dtype=np.int32)
        return _kernel.sweep(f, prefix, bmin)

    with ThreadPoolExecutor(max_workers=jobs) as pool:
        chunks = list(pool.map(task, range(1, f - 10)))
    out: list[tuple[int, ...]] = []
    for rows in chunks:
        out.extend(tuple(int(v) for v in row) for row in rows)
    return out


def _have_kernel() -> bool:
    try:
        from . import _kernel  # noqa: F401
    except ImportError:
        return False
    return True


def _positions(n: int, jobs: int = 1, backend: str = "auto") -> list[tuple[int, ...]]:
    if backend == "auto":
        backend = "numba" if _have_kernel() else "python"
    if backend == "numba":
        return _positions_numba(n, jobs)
    if backend == "python":
        return [ref for ref, _ in _positions_python(n, jobs)]
    raise ValueError(f"unknown backend {backend!r}")


_SPIRAL_CACHE: dict[int, tuple[SpiralCode, ...]] = {}


def generate_spirals(n: int, *, jobs: int = 1, backend: str = "auto") -> tuple[SpiralCode, ...]:
    """Canonical spirals of every fullerene on ``n`` vertices, ascending.

    The result is the atlas order for that vertex count: the isomer with
    spiral rank r is ``generate_spirals(n)[r - 1]``.  n = 22 yields an
    empty tuple; other invalid orders raise ValueError.
    """
    if n % 2 or n < 20:
        raise ValueError(f"no fullerene has {n} vertices")
    if n == 22:
        return ()
    got = _SPIRAL_CACHE.get(n)
    if got is None:
        got = tuple(SpiralCode(n, ref) for ref in _positions(n, jobs, backend))
        _SPIRAL_CACHE[n] = got
    return got


def generate_isomers(n: int, *, jobs: int = 1) -> list[FullereneGraph]:
    """Every fullerene on ``n`` vertices, in spiral-rank order."""
    return [wind_from_spiral(code) for code in generate_spirals(n, jobs=jobs)]


def isomer_count(n: int) -> int:
    return len(generate_spirals(n))


def census(ns: Iterable[int], *, jobs: int = 1) -> dict[tuple[int, ...], list[tuple[int, int]]]:
    """Partition census: PIP -> [(n, rank), ...] over the given orders.

    Ranks are 1-based atlas positions, so entries double as spiral ids.
    """
    from .clusters import pip

    table: dict[tuple[int, ...], list[tuple[int, int]]] = {}
    for n in ns:
        for rank, g in enumerate(generate_isomers(n, jobs=jobs), start=1):
            table.setdefault(pip(g), []).append((n, rank))
    return table


def spiral_rank(g: FullereneGraph) -> int:
    """1-based rank of ``g``'s canonical spiral among all isomers of its size."""
    code = canonical_spiral(g)
    table = [c.positions for c in generate_spirals(g.n)]
    i = bisect.bisect_left(table, code.positions)
    if i == len(table) or table[i] != code.positions:
        raise RuntimeError(f"spiral {code.text()} missing from its own atlas")
    return i + 1

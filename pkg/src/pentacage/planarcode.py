"""Reading and writing plane graphs in the planar_code stream format.

The format is the one used by the plantri/fullgen family of generators:
an ASCII header ``>>planar_code<<`` followed by binary records.  Each record
is the vertex count, then for every vertex its neighbour list in rotation
order, each list terminated by a zero.  Vertices are 1-based on disk.

Graphs with more than 255 vertices use the wide variant: a single zero byte
opens the record and every number (including the vertex count) is a two-byte
little-endian integer.  The reader detects this per record; the writer
switches automatically and can be forced with ``wide=True``.

Byte-for-byte round-tripping is guaranteed because rotations are kept in
file order throughout.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import BinaryIO, Iterable, Iterator, TextIO

from .graph import MAX_VERTICES, FullereneGraph, Rotations

HEADER = b">>planar_code<<"


class PlanarCodeError(Exception):
    """Malformed planar_code input."""


# ---------------------------------------------------------------------------
# binary records
# ---------------------------------------------------------------------------


def _read_exact(stream: BinaryIO, k: int) -> bytes:
    data = stream.read(k)
    if len(data) != k:
        raise PlanarCodeError(f"truncated stream: wanted {k} bytes, got {len(data)}")
    return data


def _read_number(stream: BinaryIO, wide: bool) -> int:
    if wide:
        raw = _read_exact(stream, 2)
        return raw[0] | (raw[1] << 8)
    return _read_exact(stream, 1)[0]


def read_planar_code(stream: BinaryIO) -> Iterator[list[list[int]]]:
    """Yield rotation systems from a planar_code stream.

    The header is optional so that concatenated or headerless streams are
    accepted.  Iteration stops cleanly at end of stream; anything else that
    cuts a record short raises :class:`PlanarCodeError`.
    """
    first = stream.read(len(HEADER))
    if first != HEADER:
        # No header: the bytes already belong to the first record.
        buffered = first
        stream = _Prepended(buffered, stream)  # type: ignore[assignment]
    while True:
        lead = stream.read(1)
        if not lead:
            return
        wide = lead[0] == 0
        if wide:
            n = _read_number(stream, True)
        else:
            n = lead[0]
        if n == 0:
            raise PlanarCodeError("record with zero vertices")
        rotations: list[list[int]] = []
        for _ in range(n):
            neigh: list[int] = []
            while True:
                x = _read_number(stream, wide)
                if x == 0:
                    break
                if x > n:
                    raise PlanarCodeError(f"neighbour {x} out of range for n={n}")
                neigh.append(x - 1)
            rotations.append(neigh)
        yield rotations


class _Prepended:
    """Minimal read-only wrapper pushing already-consumed bytes back."""

    def __init__(self, head: bytes, stream: BinaryIO):
        self._head = head
        self._stream = stream

    def read(self, k: int = -1) -> bytes:
        if k < 0:
            out, self._head = self._head, b""
            return out + self._stream.read()
        out = self._head[:k]
        self._head = self._head[k:]
        if len(out) < k:
            out += self._stream.read(k - len(out))
        return out


def read_fullerenes(stream: BinaryIO) -> Iterator[FullereneGraph]:
    """Yield validated fullerene graphs from a planar_code stream."""
    for rotations in read_planar_code(stream):
        yield FullereneGraph(rotations)


def _encode_record(rotations: Rotations, wide: bool) -> bytes:
    n = len(rotations)
    if n > MAX_VERTICES:
        raise PlanarCodeError(f"{n} vertices exceeds the two-byte limit {MAX_VERTICES}")
    wide = wide or n > 255
    out = bytearray()
    if wide:
        out.append(0)
        numbers: list[int] = [n]
    else:
        numbers = [n]
    for neigh in rotations:
        numbers.extend(v + 1 for v in neigh)
        numbers.append(0)
    if wide:
        for x in numbers:
            out.append(x & 0xFF)
            out.append(x >> 8)
    else:
        out.extend(numbers)
    return bytes(out)


def write_planar_code(
    stream: BinaryIO,
    graphs: Iterable[FullereneGraph | Rotations],
    *,
    wide: bool = False,
    header: bool = True,
) -> int:
    """Write graphs as planar_code records; returns the number written.

    Accepts fullerene graphs or bare rotation systems.  ``wide=True`` forces
    two-byte numbers on every record; otherwise records switch individually
    when they exceed 255 vertices.
    """
    if header:
        stream.write(HEADER)
    count = 0
    for g in graphs:
        rotations = g.rotations if isinstance(g, FullereneGraph) else g
        stream.write(_encode_record(rotations, wide))
        count += 1
    return count


# ---------------------------------------------------------------------------
# analysis records
# ---------------------------------------------------------------------------

_MISSING = "-"


@dataclass(frozen=True)
class AnalysisRecord:
    """One classified isomer, as emitted by the CLI.

    Fields appear in this order in both the TSV and JSON forms.  ``spiral_id``
    is the Atlas-style ``"n:rank"`` string, or None when the isomer list for
    that vertex count was not enumerated.  ``separation`` is None for graphs
    whose pentagons form a single cluster.
    """

    n: int
    spiral_id: str | None
    pip: tuple[int, ...]
    separation: int | None
    group: str
    hog_keyword: str

    def pip_string(self) -> str:
        return ",".join(str(p) for p in self.pip)

    def to_tsv(self) -> str:
        return "\t".join(
            (
                str(self.n),
                self.spiral_id if self.spiral_id is not None else _MISSING,
                self.pip_string(),
                str(self.separation) if self.separation is not None else _MISSING,
                self.group,
                self.hog_keyword,
            )
        )

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "spiral_id": self.spiral_id,
                "pip": list(self.pip),
                "separation": self.separation,
                "group": self.group,
                "hog_keyword": self.hog_keyword,
            },
            separators=(",", ":"),
        )


def write_records(
    stream: TextIO, records: Iterable[AnalysisRecord], fmt: str = "tsv"
) -> int:
    """Write analysis records one per line; returns the number written."""
    if fmt not in ("tsv", "json"):
        raise ValueError(f"unknown record format {fmt!r}")
    count = 0
    for rec in records:
        stream.write(rec.to_tsv() if fmt == "tsv" else rec.to_json())
        stream.write("\n")
        count += 1
    return count

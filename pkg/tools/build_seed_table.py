"""Rebuild the bundled seed table (src/pentacage/data/seeds.{pc,json}).

Scans complete isomer lists from n=20 upward and keeps the first fullerene
seen for every cluster partition whose largest part is at most five — the
partitions the cluster-preserving inflation accepts.  Partitions the scan
never reaches (their smallest members lie beyond the scan horizon) are then
constructed: inflate a scanned donor that has the needed cluster sizes and
rebuild exactly those clusters, which isolates every other pentagon.  Such
entries carry an ``origin`` note in the manifest instead of a ``rank``.

Usage:

    python3 tools/build_seed_table.py [N_MAX]
    python3 tools/build_seed_table.py --extend   # keep the scan, redo the rest
"""

from __future__ import annotations

import hashlib
import json
import sys
from collections import Counter
from io import BytesIO
from pathlib import Path

from pentacage.clusters import pentagon_clusters, pip, pip_text
from pentacage.generate import generate_isomers
from pentacage.inflate import _reinstate_descendant_disks, goldberg_5_0
from pentacage.planarcode import read_fullerenes, write_planar_code

DATA = Path(__file__).resolve().parent.parent / "src" / "pentacage" / "data"


def small_part_partitions() -> list[tuple[int, ...]]:
    """Every partition of 12 with all parts at most five."""
    out = []

    def rec(rest: int, cap: int, acc: tuple[int, ...]) -> None:
        if rest == 0:
            out.append(acc)
            return
        for p in range(min(cap, rest), 0, -1):
            rec(rest - p, p, acc + (p,))

    rec(12, 5, ())
    return out


def scan(n_max: int, entries: dict[str, dict], graphs: list) -> None:
    for n in range(20, n_max + 2, 2):
        if n == 22:
            continue
        for rank, g in enumerate(generate_isomers(n), start=1):
            parts = pip(g)
            key = pip_text(parts)
            if parts[0] > 5 or key in entries:
                continue
            entries[key] = {"n": n, "rank": rank, "index": len(graphs)}
            graphs.append(g)
            print(f"{key:>24}  first at {n}:{rank}", file=sys.stderr)


def construct_missing(entries: dict[str, dict], graphs: list) -> None:
    donors = sorted(
        (e["n"], e.get("rank", 0), key) for key, e in entries.items() if "rank" in e
    )
    for target in small_part_partitions():
        key = pip_text(target)
        if key in entries:
            continue
        need = Counter(p for p in target if p >= 2)
        for n, rank, donor_key in donors:
            have = Counter(p for p in (int(x) for x in donor_key.split(",")) if p >= 2)
            if need - have:
                continue
            donor = graphs[entries[donor_key]["index"]]
            child, fmap = goldberg_5_0(donor)
            chosen, pool = [], Counter(need)
            for c in pentagon_clusters(donor):
                if pool[len(c)] > 0:
                    chosen.append(c)
                    pool[len(c)] -= 1
            big = _reinstate_descendant_disks(fmap, chosen)
            if pip(big) != target:
                raise RuntimeError(f"construction for {key} came out as {pip(big)}")
            entries[key] = {
                "n": big.n,
                "index": len(graphs),
                "origin": f"reinstated from {n}:{rank}",
            }
            graphs.append(big)
            print(f"{key:>24}  built from {n}:{rank} at n={big.n}", file=sys.stderr)
            break
        else:
            print(f"{key:>24}  NOT COVERED", file=sys.stderr)


def main() -> None:
    entries: dict[str, dict] = {}
    graphs: list = []
    if "--extend" in sys.argv:
        old = json.loads((DATA / "seeds.json").read_text())
        with open(DATA / "seeds.pc", "rb") as f:
            stored = list(read_fullerenes(f))
        n_max = old["n_max"]
        for key, e in sorted(old["partitions"].items()):
            if "rank" not in e:
                continue  # rebuilt below, against the current engine
            entries[key] = {"n": e["n"], "rank": e["rank"], "index": len(graphs)}
            graphs.append(stored[e["index"]])
    else:
        n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 64
        scan(n_max, entries, graphs)

    construct_missing(entries, graphs)

    buf = BytesIO()
    write_planar_code(buf, graphs)
    raw = buf.getvalue()
    manifest = {
        "n_max": n_max,
        "sha256": hashlib.sha256(raw).hexdigest(),
        "partitions": dict(sorted(entries.items())),
    }
    DATA.mkdir(parents=True, exist_ok=True)
    (DATA / "seeds.pc").write_bytes(raw)
    (DATA / "seeds.json").write_text(json.dumps(manifest, indent=1) + "\n")
    print(f"{len(graphs)} seeds, {len(raw)} bytes", file=sys.stderr)


if __name__ == "__main__":
    main()

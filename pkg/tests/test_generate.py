"""Generator tests: the depth-first sweep against the brute-force oracle,
frozen atlas counts, canonicity of everything emitted, and agreement
between the pure-python search and the compiled kernel."""

import pytest

from pentacage.generate import (
    _positions,
    generate_isomers,
    generate_spirals,
    isomer_count,
    spiral_rank,
)
from pentacage.spiral import canonical_spiral, wind_from_spiral

from oracles import brute_force_isomers

# isomer counts nobody disputes; the slow tail re-derives the same numbers
# the acceptance sweep leans on
COUNTS = {
    20: 1, 24: 1, 26: 1, 28: 2, 30: 3, 32: 6, 34: 6, 36: 15,
    38: 17, 40: 40, 42: 45, 44: 89,
}
COUNTS_SLOW = {
    46: 116, 48: 199, 50: 271, 52: 437, 54: 580, 56: 924,
    58: 1205, 60: 1812, 62: 2385, 64: 3465,
}


@pytest.mark.parametrize("n", [20, 24, 26, 28, 30])
def test_matches_brute_force(n):
    oracle = brute_force_isomers(n)
    atlas = generate_spirals(n)
    assert {c.positions for c in atlas} == set(oracle)


@pytest.mark.parametrize("n,count", sorted(COUNTS.items()))
def test_frozen_counts(n, count):
    assert isomer_count(n) == count


@pytest.mark.slow
@pytest.mark.parametrize("n,count", sorted(COUNTS_SLOW.items()))
def test_frozen_counts_slow(n, count):
    assert isomer_count(n) == count


def test_atlas_is_sorted_and_unique():
    for n in (36, 40, 44):
        pos = [c.positions for c in generate_spirals(n)]
        assert pos == sorted(pos)
        assert len(pos) == len(set(pos))


def test_everything_emitted_is_canonical():
    for code in generate_spirals(40):
        g = wind_from_spiral(code)
        assert canonical_spiral(g).positions == code.positions


def test_spiral_rank_inverts_the_atlas():
    isomers = generate_isomers(40)
    assert len(isomers) == 40
    for i, g in enumerate(isomers):
        assert spiral_rank(g) == i + 1


def test_no_22_vertex_fullerene():
    assert generate_spirals(22) == ()
    assert isomer_count(22) == 0


@pytest.mark.parametrize("n", [18, 19, 21, 33])
def test_invalid_orders_raise(n):
    with pytest.raises(ValueError):
        generate_spirals(n)


@pytest.mark.parametrize("n", [28, 34, 38])
def test_backends_agree(n):
    assert _positions(n, backend="python") == _positions(n, backend="numba")


def test_parallel_partition_agrees():
    assert _positions(42, jobs=3) == _positions(42, jobs=1)

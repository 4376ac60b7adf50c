"""Patch bounds, exhaustive enumeration, merging, tube parameters."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pentacage.patches import (
    MergeError,
    Patch,
    PatchError,
    _Builder,
    boundary_code,
    canonical_patch_code,
    enumerate_patches,
    max_degree3_run,
    max_hexagons_in_patch,
    max_hexagons_with_cluster,
    max_vertices_with_big_cluster,
    merge_patches,
    min_boundary_length,
    single_face_patch,
    tube_parameters,
    validate_patch,
)

# smallest boundary for p pentagons / h hexagons; all of these are attained
MIN_BOUNDARY = {
    (0, 1): 6, (0, 2): 10, (0, 3): 12, (0, 4): 14,
    (1, 0): 5, (1, 1): 9, (1, 2): 11, (1, 3): 13, (1, 4): 15,
    (2, 0): 8, (2, 1): 10, (2, 2): 12, (2, 3): 14, (2, 4): 14,
    (3, 0): 9,
    (4, 0): 10,
    (5, 0): 11,
}


def test_min_boundary_frozen_table():
    for (p, h), b in MIN_BOUNDARY.items():
        assert min_boundary_length(p, h) == b, (p, h)


def test_min_boundary_rejects_out_of_range():
    with pytest.raises(ValueError):
        min_boundary_length(6, 0)
    with pytest.raises(ValueError):
        min_boundary_length(-1, 3)
    with pytest.raises(ValueError):
        min_boundary_length(0, 0)


@given(st.integers(0, 5), st.integers(0, 60))
def test_min_boundary_parity_and_monotone(p, h):
    if p == 0 and h == 0:
        return
    b = min_boundary_length(p, h)
    assert b % 2 == p % 2
    assert min_boundary_length(p, h + 1) >= b


@given(st.integers(0, 5), st.integers(5, 40))
def test_max_hexagons_inverts_min_boundary(p, b):
    try:
        h = max_hexagons_in_patch(p, b)
    except ValueError:
        assert min_boundary_length(p, 1 if p == 0 else 0) > b
        return
    assert min_boundary_length(p, h) <= b
    assert min_boundary_length(p, h + 1) > b


def test_cluster_hexagon_budget():
    assert [max_hexagons_with_cluster(k) for k in range(7, 13)] == [52, 36, 31, 30, 30, 30]
    assert max_vertices_with_big_cluster() == 124
    with pytest.raises(ValueError):
        max_hexagons_with_cluster(6)
    with pytest.raises(ValueError):
        max_hexagons_with_cluster(13)


# ---------------------------------------------------------------------------
# exhaustive enumeration against the closed forms
# ---------------------------------------------------------------------------


def test_enumeration_attains_every_bound():
    for (p, h), expect in MIN_BOUNDARY.items():
        if p > 2:
            continue  # singles are covered below; keep the loop quick
        shapes = enumerate_patches(p, h)
        assert shapes, (p, h)
        assert min(q.boundary_length for q in shapes) == expect, (p, h)


def test_single_face_bounds_attained():
    for p, expect in ((3, 9), (4, 10), (5, 11)):
        shapes = enumerate_patches(p, 0)
        assert min(q.boundary_length for q in shapes) == expect


def test_polyhex_counts():
    # simply connected hexagon-only patches, up to reflection: OEIS A000228
    assert [len(enumerate_patches(0, h)) for h in (1, 2, 3, 4)] == [1, 1, 3, 7]


def test_smallest_patches_are_unique():
    assert len(enumerate_patches(1, 0)) == 1
    assert len(enumerate_patches(2, 0)) == 1
    fused = enumerate_patches(2, 0)[0]
    assert boundary_code(fused.boundary_word) == (2, 2, 2, 3, 2, 2, 2, 3)


def test_six_pentagon_patches():
    shapes = enumerate_patches(6, 0)
    assert len(shapes) == 18
    assert all(q.pentagons == 6 and q.hexagons == 0 for q in shapes)
    # boundary words of six-pentagon patches balance 2s against 3s
    for q in shapes:
        w = q.boundary_word
        assert list(w).count(2) == list(w).count(3)
    # exactly one shape demands a face of size >= 7 outside it, so exactly
    # seventeen six-pentagon clusters can occur inside a fullerene
    dead = [q for q in shapes if max_degree3_run(q.boundary_word) >= 5]
    assert len(dead) == 1
    assert tube_parameters(dead[0].boundary_word) == (6, 0)


# ---------------------------------------------------------------------------
# patch mechanics
# ---------------------------------------------------------------------------


def test_single_face_patch_shape():
    q = single_face_patch(5)
    validate_patch(q)
    assert q.boundary_length == 5
    assert q.face_sizes == (5,)
    assert q.boundary_word == (2, 2, 2, 2, 2)


def test_canonical_code_ignores_boundary_phase():
    q = enumerate_patches(2, 1)[0]
    k = 3
    shifted = Patch(q.rotations, q.boundary[k:] + q.boundary[:k])
    assert shifted.canonical == q.canonical


def test_canonical_code_separates_shapes():
    codes = {q.canonical for q in enumerate_patches(0, 4)}
    assert len(codes) == 7


def test_validate_rejects_bad_interior_degree():
    q = enumerate_patches(1, 1)[0]
    rots = [list(r) for r in q.rotations]
    rots[q.boundary[0]] = rots[q.boundary[0]][:1]
    with pytest.raises(PatchError):
        validate_patch(Patch(tuple(tuple(r) for r in rots), q.boundary))


# ---------------------------------------------------------------------------
# merging
# ---------------------------------------------------------------------------


def _random_patch(rng: random.Random, p_budget: int, extra_faces: int) -> Patch:
    start_pent = p_budget > 0 and rng.random() < 0.5
    b = _Builder(5 if start_pent else 6)
    p_used = 1 if start_pent else 0
    for _ in range(extra_faces):
        sites = b.sites()
        rng.shuffle(sites)
        for site, run in sites:
            size = 5 if (p_used < p_budget and rng.random() < 0.4) else 6
            if b.glue(site, run, size):
                if size == 5:
                    p_used += 1
                break
    return b.patch()


def test_merge_pair_properties():
    rng = random.Random(20240817)
    for _ in range(40):
        pa = _random_patch(rng, rng.randint(0, 3), rng.randint(0, 4))
        pb = _random_patch(rng, rng.randint(0, 2), rng.randint(0, 4))
        if pa.pentagons + pb.pentagons >= 6:
            continue
        merged = merge_patches([pa, pb])
        validate_patch(merged)
        assert merged.pentagons == pa.pentagons + pb.pentagons
        assert merged.hexagons > pa.hexagons + pb.hexagons
        assert merged.boundary_length == pa.boundary_length + pb.boundary_length


def test_merge_three_patches():
    rng = random.Random(11)
    parts = [_random_patch(rng, 1, 3) for _ in range(3)]
    if sum(q.pentagons for q in parts) >= 6:
        parts = [_random_patch(rng, 0, 3) for _ in range(3)]
    merged = merge_patches(parts)
    assert merged.boundary_length == sum(q.boundary_length for q in parts)
    assert merged.pentagons == sum(q.pentagons for q in parts)


def test_merge_refuses_six_pentagons():
    three = enumerate_patches(3, 0)[0]
    with pytest.raises(MergeError):
        merge_patches([three, three])


# ---------------------------------------------------------------------------
# tube parameters
# ---------------------------------------------------------------------------


def test_flower_word_wraps_a_5_0_tube():
    assert tube_parameters((2, 3) * 5) == (5, 0)


def test_tube_parameters_ignore_phase_and_direction():
    word = (2, 3) * 5
    got = tube_parameters(word)
    for k in range(len(word)):
        assert tube_parameters(word[k:] + word[:k]) == got
    assert tube_parameters(tuple(reversed(word))) == got


def test_tube_parameters_reject_unbalanced_words():
    with pytest.raises(ValueError):
        tube_parameters((2, 2, 3))
    with pytest.raises(ValueError):
        tube_parameters((2, 4, 3, 2))


def test_flower_is_among_the_seventeen():
    params = sorted(tube_parameters(q.boundary_word) for q in enumerate_patches(6, 0))
    assert (5, 0) in params

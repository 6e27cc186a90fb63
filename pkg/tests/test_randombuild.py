"""Randomized circuit search: determinism, soundness, oracle checks."""

import itertools
import random
from collections import Counter

import pytest

from railgrid.assembly import is_constructible
from railgrid.circuit import Circuit, canonical_full
from railgrid.grid import LEGAL_SIGNED, STEPS, signed_turn
from railgrid.randombuild import (RandomParams, build_random, close_suffix,
                                  path_centers, random_prefix)
from railgrid.sweep import SweepSpec, sweep


def test_params_validation():
    RandomParams(r=2, s=2, q=1, R=3)
    for bad in (dict(r=0, s=1, q=1, R=1), dict(r=1, s=0, q=1, R=1),
                dict(r=1, s=1, q=0, R=1), dict(r=1, s=1, q=1, R=0)):
        with pytest.raises(ValueError):
            RandomParams(**bad)
    assert RandomParams(r=12, s=5, q=18, R=8).n == 17


def test_single_piece_prefix():
    headings = random_prefix(1, random.Random(1))
    assert len(headings) == 1
    end = path_centers(headings)[-1]
    assert max(abs(end[0]), abs(end[1])) == 1


def test_prefix_determinism():
    a = random_prefix(9, random.Random(42))
    b = random_prefix(9, random.Random(42))
    assert a == b


def test_prefix_turn_frequencies():
    """Over 10^4 draws, each legal turn appears with frequency 1/5 within
    0.02 (the draws are uniform and independent)."""
    rng = random.Random(7)
    counts = Counter()
    total = 0
    for _ in range(10_000):
        hs = random_prefix(9, rng)
        for a, b in zip(hs, hs[1:]):
            counts[signed_turn(a, b)] += 1
            total += 1
    for k in LEGAL_SIGNED:
        assert abs(counts[k] / total - 0.2) < 0.02


def test_prefix_turns_always_legal():
    rng = random.Random(3)
    for _ in range(200):
        hs = random_prefix(6, rng)
        for a, b in zip(hs, hs[1:]):
            assert signed_turn(a, b) in LEGAL_SIGNED


def test_forced_single_completion():
    # three sides of the square loop leave exactly one closing piece
    prefix = (0, 2, 4)
    out = close_suffix(prefix, 1)
    assert out == [(0, 2, 4, 6)]


def test_unreachable_endpoint_gives_empty():
    prefix = (0, 0, 0)  # endpoint (3, 0): farther than 2 king moves
    assert close_suffix(prefix, 2) == []


def test_close_suffix_matches_naive_path_oracle():
    """All 4-step completions from (2, 0), versus brute enumeration."""
    prefix = (0, 0)  # two straights east, endpoint (2, 0)
    got = set(close_suffix(prefix, 4))
    naive = set()
    for word in itertools.product(LEGAL_SIGNED, repeat=4):
        headings = list(prefix)
        for k in word:
            headings.append((headings[-1] + k) % 8)
        end = path_centers(tuple(headings))[-1]
        if end != (0, 0):
            continue
        if signed_turn(headings[-1], headings[0]) not in LEGAL_SIGNED:
            continue
        naive.add(tuple(headings))
    assert got == naive


def test_completions_close_into_circuits():
    for headings in close_suffix((0, 2, 4), 1) + close_suffix((0, 0), 4):
        centers = tuple(path_centers(headings)[:-1])
        c = Circuit(centers)
        assert sum(c.turns) % 8 == 0


def test_build_random_deterministic():
    params = RandomParams(r=5, s=4, q=60, R=4, seed=11)
    a = build_random(params, copies_cap=4)
    b = build_random(params, copies_cap=4)
    assert [c.centers for c in a] == [c.centers for c in b]


def test_build_random_soundness():
    params = RandomParams(r=9, s=4, q=40, R=4, seed=5)
    for c in build_random(params, copies_cap=4):
        assert c.n == 13
        assert sum(c.turns) % 8 == 0
        assert max(c.inventory().piece_types().values()) <= 4
        assert is_constructible(c)


def test_build_random_subset_of_exhaustive():
    """Every N = 9 find belongs to the exhaustive constructible set."""
    _, full = sweep(SweepSpec(9), budget=None)
    exhaustive = {canonical_full(c.codes) for c in full.values()
                  if is_constructible(c)}
    params = RandomParams(r=5, s=4, q=300, R=3, seed=2)
    found = build_random(params)
    assert found, "expected the randomized search to find something"
    for c in found:
        assert canonical_full(c.codes) in exhaustive


def test_no_duplicates_across_prefixes():
    params = RandomParams(r=5, s=4, q=300, R=3, seed=2)
    keys = [canonical_full(c.codes) for c in build_random(params)]
    assert len(keys) == len(set(keys))


def test_tiny_box_filters_everything():
    params = RandomParams(r=12, s=5, q=30, R=1, seed=9)
    assert build_random(params) == []


def test_paper_scale_example():
    params = RandomParams(r=12, s=5, q=18, R=8, seed=7)
    found = build_random(params, copies_cap=4)
    for c in found:
        assert c.n == 17
        assert is_constructible(c)
        assert max(c.inventory().piece_types().values()) <= 4

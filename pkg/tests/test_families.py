"""Built-in families and corpus generators."""

from __future__ import annotations

from random import Random

import pytest

from quivergrass.families import (
    catenoid_representations,
    complexes_chain_string,
    complexes_instance,
    degflag_instance,
    dimension_vectors_upto,
    random_catenoid_instance,
)
from quivergrass.reps import dimension_vector, is_catenoid
from quivergrass.schubert import build_frame, enumerate_fixed_points


def test_degflag_structure():
    M, e = degflag_instance(2)
    assert M.summands == (((1, 1), 1), ((1, 2), 2), ((2, 2), 1))
    assert e == (1, 2)
    assert dimension_vector(M) == (3, 3)
    M3, e3 = degflag_instance(3)
    assert e3 == (1, 2, 3)
    assert dimension_vector(M3) == (4, 4, 4)
    assert M3.total_summands == 6


def test_complexes_structure():
    M, e = complexes_instance(1)
    assert M.summands == (((1, 1), 2),)
    M3, e3 = complexes_instance(3)
    assert M3.summands == (((1, 1), 1), ((1, 2), 1), ((2, 3), 1), ((3, 3), 1))
    assert dimension_vector(M3) == (2, 2, 2)
    assert e3 == (1, 1, 1)


def test_complexes_chain_strings_avoid_adjacent_ones():
    for n in range(1, 7):
        frame = build_frame(*complexes_instance(n))
        chains = enumerate_fixed_points(frame)
        strings = [complexes_chain_string(K) for K in chains]
        assert len(set(strings)) == len(strings)
        assert all("11" not in s for s in strings)


def test_catenoid_representations_are_catenoid_and_distinct():
    seen = set()
    for M in catenoid_representations(3, 4):
        assert M.n == 3
        assert M.total_summands <= 4
        assert is_catenoid(M)
        assert M.summands not in seen
        seen.add(M.summands)
    # forced sanity on the count of the empty and singleton layers
    singles = [M for M in seen if sum(m for _, m in M) == 1]
    assert len(singles) == 6  # intervals of [1,3]
    assert () in seen


def test_dimension_vectors_upto():
    assert list(dimension_vectors_upto((1, 2))) == [
        (0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2),
    ]


def test_random_catenoid_instance_is_valid():
    rng = Random(11)
    for _ in range(50):
        M, e = random_catenoid_instance(rng, 5, 6)
        assert is_catenoid(M)
        d = dimension_vector(M)
        assert all(0 <= x <= y for x, y in zip(e, d))

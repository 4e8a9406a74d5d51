import random

import pytest
from hypothesis import given, settings, strategies as st

from multisubset import (
    ClassicalBackend,
    PipelineStats,
    StrassenBackend,
    SubMatrix,
    make_backend,
    make_ring,
)


def _random_block(ring, rows, cols, rng):
    entries = [[ring.sample(rng) for _ in cols] for _ in rows]
    return SubMatrix(rows=list(rows), cols=list(cols), entries=entries)


def test_submatrix_validation():
    with pytest.raises(ValueError):
        SubMatrix(rows=[1, 2], cols=[0], entries=[[5]])
    with pytest.raises(ValueError):
        SubMatrix(rows=[1], cols=[0, 3], entries=[[5]])


def test_make_backend():
    assert isinstance(make_backend("classical"), ClassicalBackend)
    assert isinstance(make_backend("strassen"), StrassenBackend)
    with pytest.raises(ValueError):
        make_backend("galactic")


def test_classical_small(modp):
    a = SubMatrix(rows=[0, 1], cols=[0, 1, 2], entries=[[1, 2, 3], [4, 5, 6]])
    b = SubMatrix(rows=[0], cols=[0, 1, 2], entries=[[7, 8, 9]])
    out = ClassicalBackend().multiply(modp, a, b)
    # inner products with rows of b (columns are shared)
    assert out == [[1 * 7 + 2 * 8 + 3 * 9], [4 * 7 + 5 * 8 + 6 * 9]]


def test_classical_mul_count(modp):
    rng = random.Random(0)
    a = _random_block(modp, list(range(3)), list(range(5)), rng)
    b = _random_block(modp, list(range(4)), list(range(5)), rng)
    stats = PipelineStats()
    ClassicalBackend().multiply(modp, a, b, stats)
    assert stats.rmm_muls == 3 * 5 * 4


def test_column_mismatch_rejected(modp):
    a = SubMatrix(rows=[0], cols=[0, 1], entries=[[1, 2]])
    b = SubMatrix(rows=[0], cols=[0, 2], entries=[[1, 2]])
    for backend in (ClassicalBackend(), StrassenBackend()):
        with pytest.raises(ValueError):
            backend.multiply(modp, a, b)


@settings(max_examples=30, deadline=None)
@given(
    r1=st.integers(min_value=0, max_value=9),
    c=st.integers(min_value=1, max_value=9),
    r2=st.integers(min_value=0, max_value=9),
    seed=st.integers(0, 2**31),
)
def test_strassen_matches_classical(r1, c, r2, seed):
    ring = make_ring("modp")
    rng = random.Random(seed)
    a = _random_block(ring, list(range(r1)), list(range(c)), rng)
    b = _random_block(ring, list(range(r2)), list(range(c)), rng)
    classical = ClassicalBackend().multiply(ring, a, b)
    strassen = StrassenBackend(base_size=2).multiply(ring, a, b)
    assert strassen == classical


def test_strassen_recursion_actually_recurses(modp):
    # With base_size=1 every level uses the seven-product split, so the
    # multiplication count for an 8x8 square is 7^3.
    rng = random.Random(1)
    idx = list(range(8))
    a = _random_block(modp, idx, idx, rng)
    b = _random_block(modp, idx, idx, rng)
    stats = PipelineStats()
    out = StrassenBackend(base_size=1).multiply(modp, a, b, stats)
    assert stats.rmm_muls == 7**3
    assert out == ClassicalBackend().multiply(modp, a, b)


def test_strassen_empty_rows(modp):
    a = SubMatrix(rows=[], cols=[0, 1], entries=[])
    b = SubMatrix(rows=[3], cols=[0, 1], entries=[[1, 2]])
    assert StrassenBackend().multiply(modp, a, b) == []
    assert StrassenBackend().multiply(modp, b, a) == [[]]

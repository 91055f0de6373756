import random
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import traceless
from slorbits.exact_algebra import RingMatrix, char_poly, inverse
from slorbits.invariants import trace_invariants
from slorbits.sl_basis import (
    BlockSpec,
    NotTracelessError,
    SlMatrix,
    basis_e,
    block_matrix,
    classify,
    random_invertible,
    random_sl,
    s_involution,
    s_unit,
    sl_basis,
)


def test_slmatrix_rejects_trace():
    with pytest.raises(NotTracelessError) as err:
        SlMatrix([[1, 0], [0, 1]])
    assert err.value.trace == 2


def test_basis_size_and_trace():
    for n in (2, 3, 4):
        b = sl_basis(n)
        assert len(b) == n * n - 1
        assert all(M.trace() == 0 for M in b)


def test_basis_e_bounds():
    with pytest.raises(IndexError):
        basis_e(0, 1, 3)


def test_block_matrix_char_poly():
    M = block_matrix(BlockSpec((2, -2), ((0, 1),)))
    # roots 2, -2, +-i
    assert char_poly(M).coeffs == (-4, 0, -3, 0, 1)
    assert str(classify(M)) == "Generic(2,1)"


def test_blockspec_validation():
    with pytest.raises(ValueError):
        BlockSpec((), ((1, 0),))
    with pytest.raises(NotTracelessError):
        BlockSpec((1, 1))


def test_classify_examples():
    assert str(classify(RingMatrix.diag([1, -1]))) == "Generic(2,0)"
    assert not classify(basis_e(1, 4, 4)).generic
    assert not classify(RingMatrix.diag([1, -1, 1, -1])).generic


@given(traceless(3))
def test_s_involution_is_an_antiautomorphism(rows):
    X = RingMatrix(rows)
    Y = basis_e(1, 2, 3) + basis_e(3, 1, 3)
    assert s_involution(s_involution(X)) == X
    assert s_involution(X * Y) == s_involution(Y) * s_involution(X)
    assert s_involution(X).trace() == X.trace()


def test_s_unit():
    assert s_unit(1, 2, 4) == (3, 4)
    assert s_involution(basis_e(1, 2, 4)) == basis_e(3, 4, 4)


def test_classify_and_invariants_are_conjugation_invariant():
    rng = random.Random(7)
    for _ in range(20):
        xi = random_sl(rng, 4)
        g = random_invertible(rng, 4)
        conj = g * xi * inverse(g)
        assert classify(conj) == classify(xi)
        assert trace_invariants(conj) == trace_invariants(xi)


def test_random_sl_traceless():
    rng = random.Random(0)
    assert all(random_sl(rng, 5).trace() == Fraction(0) for _ in range(10))

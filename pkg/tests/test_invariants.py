from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import rationals, traceless
from slorbits.exact_algebra import DimensionMismatchError, RingMatrix, UPoly, char_poly, inverse, trace_power
from slorbits.invariants import (
    InvariantVector,
    NewtonCoeffs,
    Verdict,
    almost_separate,
    coeffs_to_power_sums,
    conjugating_element,
    power_sums_to_coeffs,
    same_char_poly,
    trace_invariants,
)
from slorbits.sl_basis import BlockSpec, basis_e, block_matrix


def test_invariant_vector():
    inv = trace_invariants(RingMatrix.diag([1, -1]))
    assert inv == InvariantVector(2, (Fraction(2),))
    assert inv.T(1) == 0
    with pytest.raises(ValueError):
        InvariantVector(3, (1,))


@given(st.lists(rationals, min_size=1, max_size=6))
def test_newton_round_trip(roots):
    p = [sum(r ** k for r in roots) for k in range(1, len(roots) + 1)]
    c = power_sums_to_coeffs(p)
    assert c == NewtonCoeffs.from_poly(UPoly.from_roots(roots))
    assert list(coeffs_to_power_sums(c)) == p
    assert c.poly() == UPoly.from_roots(roots)


@given(traceless(4))
def test_char_poly_from_traces(rows):
    M = RingMatrix(rows)
    assert power_sums_to_coeffs([trace_power(M, k) for k in range(1, 5)]).poly() == char_poly(M)


def test_verdicts():
    xi = RingMatrix.diag([1, 2, -3])
    g = RingMatrix([[1, 1, 0], [0, 1, 0], [0, 2, 1]])
    assert almost_separate(xi, g * xi * inverse(g)) == Verdict.SINGLE_ORBIT
    assert almost_separate(xi, RingMatrix.diag([1, 3, -4])) == Verdict.DIFFERENT
    a = block_matrix(BlockSpec((), ((1, 1), (-1, 2))))
    b = block_matrix(BlockSpec((), ((1, -1), (-1, 2))))
    assert almost_separate(a, b) == Verdict.POSSIBLE_PAIR
    assert almost_separate(basis_e(1, 2, 3), xi) == Verdict.NOT_GENERIC
    with pytest.raises(DimensionMismatchError):
        almost_separate(xi, RingMatrix.diag([1, -1]))


def test_same_char_poly_and_conjugator():
    xi = RingMatrix.diag([1, 2, -3])
    g = RingMatrix([[2, 1, 0], [0, 1, 1], [1, 0, 1]])
    other = g * xi * inverse(g)
    assert same_char_poly(xi, other)
    h = conjugating_element(xi, other)
    assert h * xi * inverse(h) == other
    assert conjugating_element(xi, RingMatrix.diag([1, 3, -4])) is None

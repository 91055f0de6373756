from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import rationals, square_matrices
from slorbits.exact_algebra import (
    DegenerateInputError,
    DimensionMismatchError,
    MPoly,
    RingMatrix,
    UPoly,
    char_poly,
    char_poly_by_minors,
    commutator,
    count_real_roots,
    det_expansion,
    det_leibniz,
    fmt_rational,
    inverse,
    nullspace,
    parse_rational,
    rank_exact,
    rational_roots,
    rational_sqrt,
    squarefree,
    sturm_count_between,
    symbols,
    trace_power,
)

x, y, z = symbols("a0", "a1", "lam")


def test_fmt_and_parse_roundtrip():
    for q in (Fraction(0), Fraction(-7, 3), Fraction(12), Fraction(1, 1000)):
        assert parse_rational(fmt_rational(q)) == q
    assert fmt_rational(Fraction(6, 3)) == "2"
    with pytest.raises(TypeError):
        parse_rational(True)


def test_rational_sqrt():
    assert rational_sqrt(Fraction(49, 25)) == Fraction(7, 5)
    assert rational_sqrt(2) is None
    assert rational_sqrt(-1) is None


polys = st.lists(st.tuples(rationals, st.integers(0, 2), st.integers(0, 2)), max_size=4).map(
    lambda ts: sum((x ** i * y ** j * c for c, i, j in ts), MPoly.const(0)))


@given(polys, polys, polys)
def test_mpoly_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p - p == MPoly.const(0)


@given(polys, rationals, rationals)
def test_subs_is_a_homomorphism(p, a, b):
    vals = {"a0": a, "a1": b}
    assert (p * p + p).evaluate(vals) == p.evaluate(vals) ** 2 + p.evaluate(vals)


def test_mpoly_display_and_degree():
    p = (x + y) ** 2 - x * 3
    assert p.total_degree() == 2
    assert p.degree("a0") == 2
    assert str(MPoly.const(0)) == "0"
    assert p.coeff("a0", 2) == MPoly.const(1)


def test_upoly_division_and_gcd():
    p = UPoly.from_roots([1, 2, 2])
    q, r = p.divmod(UPoly.from_roots([2]))
    assert r.is_zero() and q == UPoly.from_roots([1, 2])
    assert not squarefree(p)
    assert squarefree(UPoly.from_roots([1, 2, 3]))
    assert sorted(rational_roots(p)) == [1, 2]


def test_sturm_counts():
    p = UPoly.from_roots([-2, Fraction(1, 2), 3]) * UPoly([1, 0, 1])
    assert count_real_roots(p) == 3
    assert sturm_count_between(p, 0, 4) == 2
    with pytest.raises(DegenerateInputError):
        count_real_roots(UPoly([]))


@given(square_matrices(3))
def test_char_poly_methods_agree(rows):
    M = RingMatrix(rows)
    cp = char_poly(M)
    assert cp.to_mpoly("X") == char_poly_by_minors(M)
    assert det_expansion(M) == det_leibniz(M) == (-1) ** 3 * cp[0]


@given(square_matrices(3))
def test_cayley_hamilton(rows):
    M = RingMatrix(rows)
    acc = RingMatrix.zeros(3)
    for k, c in enumerate(char_poly(M).coeffs):
        acc = acc + (M ** k).scale(c)
    assert acc.is_zero()


@given(square_matrices(3), square_matrices(3))
def test_trace_of_commutator_vanishes(a, b):
    assert commutator(RingMatrix(a), RingMatrix(b)).trace() == 0


def test_rank_nullspace_inverse():
    rows = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    assert rank_exact(rows) == 2
    (v,) = nullspace(rows, 3)
    assert all(sum(Fraction(r[j]) * v[j] for j in range(3)) == 0 for r in rows)
    M = RingMatrix([[2, 1], [1, 1]])
    assert M * inverse(M) == RingMatrix.identity(2)
    with pytest.raises(ZeroDivisionError):
        inverse(RingMatrix(rows))


def test_matrix_errors():
    with pytest.raises(DegenerateInputError):
        RingMatrix([])
    with pytest.raises(DimensionMismatchError):
        RingMatrix.identity(2) + RingMatrix.identity(3)
    with pytest.raises(ValueError):
        trace_power(RingMatrix.identity(2), 0)


def test_symbolic_char_poly():
    M = RingMatrix([[x, 1], [0, -x]])
    assert char_poly(M).to_mpoly("lam") == z * z - x * x

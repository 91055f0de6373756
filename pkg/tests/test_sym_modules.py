import random
from fractions import Fraction

import pytest

from slorbits.exact_algebra import RingMatrix, commutator
from slorbits.sl_basis import random_sl
from slorbits.sym_modules import (
    S2_NAMES,
    S3_NAMES,
    SymTensor,
    ad_on_tensor,
    decomposition_report,
    dim_sym,
    in_sl_power,
    is_highest_weight,
    paper_dim_formulas,
    paper_vector,
    proportional,
    s_on_tensor,
    vector_label,
    weight_of,
    weyl_dim,
)


def random_tensor(rng, k, n, terms=3):
    t = SymTensor.zero(k, n)
    for _ in range(terms):
        mono = tuple(sorted((rng.randint(1, n), rng.randint(1, n)) for _ in range(k)))
        t = t + SymTensor(k, n, {mono: Fraction(rng.randint(-3, 3))})
    return t


@pytest.mark.parametrize("n", [3, 4])
def test_ad_is_a_lie_homomorphism(n):
    rng = random.Random(n)
    for k in (1, 2, 3):
        for _ in range(5):
            X, Y = random_sl(rng, n), random_sl(rng, n)
            t = random_tensor(rng, k, n)
            lhs = ad_on_tensor(X, ad_on_tensor(Y, t)) - ad_on_tensor(Y, ad_on_tensor(X, t))
            assert lhs == ad_on_tensor(commutator(X, Y), t)


def test_symmetric_product_commutes():
    a, b = SymTensor.unit(1, 2, 3), SymTensor.unit(2, 1, 3)
    assert a * b == b * a
    assert (a * b).k == 2


def test_weyl_and_sym_dims():
    assert weyl_dim((1, 0, 1), 4) == 15
    assert weyl_dim((0, 0, 0), 4) == 1
    assert dim_sym(2, 3) == 36
    assert dim_sym(3, 4) == 680


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8])
def test_s2_decomposition_balances(n):
    rep = decomposition_report(2, n)
    assert rep.ok
    assert rep.total == n * n * (n * n - 1) // 2
    formulas = paper_dim_formulas(n)
    assert all(formulas[c.name] == c.dim for c in rep.constituents)
    assert len(rep.constituents) == (3 if n == 3 else 4)


def test_s3_decomposition():
    rep = decomposition_report(3, 4)
    assert rep.ok and rep.total == 680
    assert sorted((c.dim for c in rep.constituents), reverse=True) == [300, 175, 84, 45, 45, 15, 15, 1]


@pytest.mark.parametrize("name,n", [(nm, n) for n in (4, 5) for nm in S2_NAMES] + [(nm, 4) for nm in S3_NAMES])
def test_highest_weight_vectors(name, n):
    v = paper_vector(name, n)
    assert is_highest_weight(v)
    assert weight_of(v).fundamental == vector_label(name, n)
    assert in_sl_power(v)


def test_printed_w101_vectors_are_not_highest_weight():
    # the corrected ones are covered above
    assert not is_highest_weight(paper_vector("w101", verbatim=True))
    assert not is_highest_weight(paper_vector("w101p", verbatim=True))


def test_s_involution_swaps_dual_labels():
    c = proportional(s_on_tensor(paper_vector("w210")), paper_vector("w012"))
    assert c is not None and c != 0


def test_in_sl_power_rejects_identity_part():
    n = 3
    ident = sum((SymTensor.unit(i, i, n) for i in range(1, n + 1)), SymTensor.zero(1, n))
    assert not in_sl_power(ident)
    assert in_sl_power(SymTensor.from_matrix(RingMatrix.diag([1, -1, 0])))


def test_unknown_decomposition():
    with pytest.raises(ValueError):
        decomposition_report(3, 5)

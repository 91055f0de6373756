import random
from fractions import Fraction

import pytest

from slorbits.exact_algebra import MPoly, RingMatrix, commutator, inverse
from slorbits.overalgebra import (
    CoadPoint,
    InadmissibleParameterError,
    LinearSystem,
    NotNilpotentError,
    OveralgebraSpec,
    OverElement,
    PhiCoefficients,
    SpecMismatchError,
    admissible_parameters,
    bracket,
    coad_infinitesimal,
    coad_trivial_is_static,
    counterexample_family,
    degree2_member,
    degree3_member,
    elimination_degree2,
    elimination_degree3,
    exp_nilpotent,
    extract_constraints,
    family_report,
    monomial_basis,
    pairing,
    phi_degree_n,
    semidefinite_kernel,
    zeta,
)
from slorbits.sl_basis import basis_e, random_invertible, random_sl
from slorbits.sym_modules import SymTensor

SPEC = OveralgebraSpec(3, 2)


def rand_tensor(rng, k, n=3):
    t = SymTensor.zero(k, n)
    for _ in range(3):
        m = tuple(sorted((rng.randint(1, n), rng.randint(1, n)) for _ in range(k)))
        t = t + SymTensor(k, n, {m: Fraction(rng.randint(-3, 3))})
    return t


def rand_element(rng):
    return OverElement(SPEC, random_sl(rng, 3), {1: rand_tensor(rng, 1), 2: rand_tensor(rng, 2)})


def rand_point(rng):
    f = {d: {m: Fraction(rng.randint(-3, 3)) for m in monomial_basis(d, 3)} for d in (1, 2)}
    return CoadPoint(SPEC, random_sl(rng, 3), f)


def test_bracket_jacobi_and_abelian_v():
    rng = random.Random(1)
    for _ in range(4):
        x, y, z = rand_element(rng), rand_element(rng), rand_element(rng)
        jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
        assert jac.X.is_zero() and not jac.u
    u = OverElement(SPEC, RingMatrix.zeros(3), {2: rand_tensor(rng, 2)})
    v = OverElement(SPEC, RingMatrix.zeros(3), {1: rand_tensor(rng, 1)})
    b = bracket(u, v)
    assert b.X.is_zero() and not b.u
    X, Y = random_sl(rng, 3), random_sl(rng, 3)
    assert bracket(OverElement(SPEC, X), OverElement(SPEC, Y)) == OverElement(SPEC, commutator(X, Y))


def test_coadjoint_duality():
    rng = random.Random(2)
    for _ in range(4):
        x, y, pt = rand_element(rng), rand_element(rng), rand_point(rng)
        assert pairing(coad_infinitesimal(x, pt), y) + pairing(pt, bracket(x, y)) == 0


def test_coadjoint_restricts_to_classical():
    rng = random.Random(3)
    pt = rand_point(rng)
    X = random_sl(rng, 3)
    assert coad_infinitesimal(OverElement(SPEC, X), pt).xi == commutator(X, pt.xi)


def test_spec_mismatch():
    other = OverElement(OveralgebraSpec(3, 1), RingMatrix.zeros(3))
    with pytest.raises(SpecMismatchError):
        bracket(other, OverElement(SPEC, RingMatrix.zeros(3)))
    with pytest.raises(SpecMismatchError):
        OverElement(OveralgebraSpec(3, 1), RingMatrix.zeros(3), {2: rand_tensor(random.Random(0), 2)})
    with pytest.raises(ValueError):
        OveralgebraSpec(1, 1)


def test_phi_degree_n():
    pt = phi_degree_n(RingMatrix.diag([1, -1]))
    assert pt.f == {2: 2}
    rng = random.Random(4)
    xi = random_sl(rng, 4)
    g = random_invertible(rng, 4)
    assert phi_degree_n(g * xi * inverse(g)).f == phi_degree_n(xi).f
    x = OverElement(pt.spec, RingMatrix([[0, 1], [0, 0]]))
    assert coad_trivial_is_static(x, pt)


def test_exp_nilpotent():
    spec = OveralgebraSpec(2, 1)
    g, tr = exp_nilpotent(OverElement(spec, basis_e(1, 2, 2), {1: SymTensor.unit(2, 1, 2)}))
    assert g == RingMatrix([[1, 1], [0, 1]])
    expect = SymTensor.linear(2, {(2, 1): 1, (1, 1): Fraction(1, 2), (2, 2): Fraction(-1, 2), (1, 2): Fraction(-1, 3)})
    assert tr[1] == expect
    u = SymTensor.unit(1, 2, 2)
    g, tr = exp_nilpotent(OverElement(spec, RingMatrix.zeros(2), {1: u}))
    assert g == RingMatrix.identity(2) and tr[1] == u
    with pytest.raises(NotNilpotentError):
        exp_nilpotent(OverElement(spec, RingMatrix.diag([1, -1])))


def test_zeta_zero_coefficients():
    rng = random.Random(6)
    xi, X = random_sl(rng, 4), random_sl(rng, 4)
    for kind in ("degree1", "degree2", "degree3"):
        assert zeta(xi, X, PhiCoefficients(), kind) == xi


def test_semidefinite_kernel():
    a, b = MPoly.var("a1"), MPoly.var("a2")
    assert semidefinite_kernel((a + b) ** 2 * 16) is not None
    assert semidefinite_kernel(a * a - b * b) is None
    assert semidefinite_kernel(a * b) is None
    ls = LinearSystem(("a1", "a2"))
    ex = extract_constraints([-(a + b * 2) ** 2 - b * b * 9], ls)
    assert not ex.residual and ls.free() == []


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_degree2_elimination(n):
    for mode in ("sequential", "joint"):
        r = elimination_degree2(n, mode)
        assert r.identities_ok and r.solution_ok
        assert r.system.free() == ["a4"]


def test_degree2_zero_input_has_no_constraints():
    r = elimination_degree2(4, "joint", PhiCoefficients())
    assert r.system.constraints() == [] and r.identities_ok


def test_degree3_elimination_solution():
    r = elimination_degree3("joint")
    assert r.solution_ok
    assert r.system.free() == ["c8"]
    # the second test's printed identity reproduces; the first, third and fourth do not
    assert [s.identity_holds for s in r.steps] == [False, True, False, False, None, None]
    assert elimination_degree3("joint", PhiCoefficients()).system.constraints() == []


def test_families():
    m = degree3_member(Fraction(24, 25))
    assert (m.extras["p"], m.extras["q"]) == (Fraction(7, 5), Fraction(1, 5))
    assert (m.T2, m.T3) == (4, 0)
    assert not degree3_member(0).in_omega
    assert degree2_member(1).det == 0
    with pytest.raises(InadmissibleParameterError):
        counterexample_family("degree3", Fraction(1, 2))
    with pytest.raises(InadmissibleParameterError):
        degree2_member(Fraction(1, 2))
    assert family_report("degree2", admissible_parameters("degree2", 6)).ok
    r = family_report("degree3", [0] + admissible_parameters("degree3", 6))
    assert r.ok and r.boundary == [0]

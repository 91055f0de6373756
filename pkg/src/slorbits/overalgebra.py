"""Semidirect products sl(n) x| S_1 + ... + S_p, their coadjoint action, the
degree n section built from trace invariants, and the coefficient
elimination for degree 2 and degree 3 sections."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial
from typing import Mapping, Sequence

from .exact_algebra import (
    MPoly,
    RingMatrix,
    UPoly,
    _is_zero,
    char_poly,
    commutator,
    count_real_roots,
    fmt_rational,
    rational_roots,
    rational_sqrt,
    row_reduce,
    squarefree,
)
from .intertwiners import transport_closed
from .invariants import Verdict, almost_separate, trace_invariants
from .sl_basis import classify, unit_combination
from .sym_modules import SymTensor, ad_on_tensor, ad_unit


# ---------------------------------------------------------------------------
# the semidirect product

@dataclass(frozen=True)
class OveralgebraSpec:
    n: int
    p: int
    representation: str = "symmetric"  # or "trivial": V = R^(p-1), g acting by 0

    def __post_init__(self):
        if self.n < 2 or self.p < 1:
            raise ValueError("need n >= 2 and p >= 1")
        if self.representation not in ("symmetric", "trivial"):
            raise ValueError(f"unknown representation {self.representation!r}")


class SpecMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class OverElement:
    spec: OveralgebraSpec
    X: RingMatrix
    u: Mapping = field(default_factory=dict)  # degree -> SymTensor

    def __post_init__(self):
        if self.X.n != self.spec.n:
            raise SpecMismatchError("matrix size does not match n")
        for d, t in self.u.items():
            if not (1 <= d <= self.spec.p) or t.k != d or t.n != self.spec.n:
                raise SpecMismatchError(f"bad component in degree {d}")
        object.__setattr__(self, "u", {d: t for d, t in self.u.items() if not t.is_zero()})

    def __eq__(self, other):
        if not isinstance(other, OverElement):
            return NotImplemented
        return self.spec == other.spec and self.X == other.X and self.u == other.u

    def __add__(self, other):
        _same_spec(self, other)
        u = dict(self.u)
        for d, t in other.u.items():
            u[d] = u[d] + t if d in u else t
        return OverElement(self.spec, self.X + other.X, u)

    def scale(self, c):
        return OverElement(self.spec, self.X.scale(c), {d: t.scale(c) for d, t in self.u.items()})


def _same_spec(x, y):
    if x.spec != y.spec:
        raise SpecMismatchError("elements of different overalgebras")


def bracket(x: OverElement, y: OverElement) -> OverElement:
    """([X, X'], pi'(X) u' - pi'(X') u)."""
    _same_spec(x, y)
    u = {}
    for d in set(x.u) | set(y.u):
        t = SymTensor.zero(d, x.spec.n)
        if d in y.u:
            t = t + ad_on_tensor(x.X, y.u[d])
        if d in x.u:
            t = t - ad_on_tensor(y.X, x.u[d])
        u[d] = t
    return OverElement(x.spec, commutator(x.X, y.X), u)


def monomial_basis(k: int, n: int) -> list:
    units = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    return list(combinations_with_replacement(units, k))


@dataclass(frozen=True)
class CoadPoint:
    """(xi, f): f maps a degree to a dense dual vector {monomial: value}
    (symmetric representation) or to a scalar (trivial representation)."""

    spec: OveralgebraSpec
    xi: RingMatrix
    f: Mapping = field(default_factory=dict)

    def value(self, d: int, t: SymTensor):
        fd = self.f.get(d, {})
        acc = 0
        for m, c in t.items():
            v = fd.get(m, 0)
            if not _is_zero(v):
                acc = acc + v * c
        return acc


def pairing(pt: CoadPoint, y: OverElement):
    """<(xi, f), (Y, w)> = Tr(xi Y) + f(w)."""
    if pt.spec != y.spec:
        raise SpecMismatchError("point and element live in different overalgebras")
    acc = (pt.xi * y.X).trace()
    if pt.spec.representation == "symmetric":
        for d, t in y.u.items():
            acc = acc + pt.value(d, t)
    return acc


def transport_dense(u: SymTensor, fd: Mapping, n: int) -> RingMatrix:
    """tpsi_u(f) with f a dense dual vector: entry (b, a) is f(ad_{e_ab} u)."""
    rows = [[0] * n for _ in range(n)]
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            acc = 0
            for m, c in ad_unit(a, b, u).items():
                v = fd.get(m, 0)
                if not _is_zero(v):
                    acc = acc + v * c
            rows[b - 1][a - 1] = acc
    return RingMatrix(rows)


def coad_infinitesimal(x: OverElement, pt: CoadPoint) -> CoadPoint:
    """Coad'(X, u)(xi, f) = ([X, xi] + tpsi_u(f), -t pi'(X) f)."""
    if x.spec != pt.spec:
        raise SpecMismatchError("point and element live in different overalgebras")
    n = x.spec.n
    g_part = commutator(x.X, pt.xi)
    if x.spec.representation == "trivial":
        # sl(n) acts by zero on the trivial summands: g sees no transport
        # through pi' and nothing moves in V*
        return CoadPoint(x.spec, g_part, dict(pt.f))
    for d, t in x.u.items():
        g_part = g_part + transport_dense(t, pt.f.get(d, {}), n)
    new_f = {}
    for d in pt.f:
        fd = {}
        for m in monomial_basis(d, n):
            img = ad_on_tensor(x.X, SymTensor(d, n, {m: 1}))
            acc = 0
            for mm, c in img.items():
                v = pt.f[d].get(mm, 0)
                if not _is_zero(v):
                    acc = acc + v * c
            if not _is_zero(acc):
                fd[m] = -acc
        new_f[d] = fd
    return CoadPoint(x.spec, g_part, new_f)


def phi_degree_n(xi: RingMatrix) -> CoadPoint:
    """(xi, (T_2(xi), ..., T_n(xi))) in sl(n) x| R^(n-1)."""
    inv = trace_invariants(xi)
    spec = OveralgebraSpec(xi.n, xi.n, "trivial")
    return CoadPoint(spec, xi, {k: inv.T(k) for k in range(2, xi.n + 1)})


def coad_trivial_is_static(x: OverElement, pt: CoadPoint) -> bool:
    """For the trivial representation the V* part never moves."""
    return coad_infinitesimal(x, pt).f == pt.f


class NotNilpotentError(ValueError):
    pass


def exp_nilpotent(x: OverElement):
    """(exp X, sum_m pi'(X)^m u / (m+1)!) for nilpotent X; both series end."""
    n = x.spec.n
    if not (x.X ** n).is_zero():
        raise NotNilpotentError("exp_nilpotent needs a nilpotent X")
    g = RingMatrix.identity(n)
    P = RingMatrix.identity(n)
    for m in range(1, n):
        P = P * x.X
        g = g + P.scale(Fraction(1, factorial(m)))
    trans = {}
    for d, t in x.u.items():
        acc = t
        term = t
        m = 0
        # pi'(X) is nilpotent on S^d; its index is at most d(2n-2)+1
        while True:
            m += 1
            term = ad_on_tensor(x.X, term)
            if term.is_zero():
                break
            if m > d * (2 * n - 2) + 1:
                raise NotNilpotentError("action did not terminate")
            acc = acc + term.scale(Fraction(1, factorial(m + 1)))
        trans[d] = acc
    return g, trans


# ---------------------------------------------------------------------------
# phi coefficients and zeta

A_VARS = ("a0", "a1", "a2", "a3", "a4")
C_VARS = tuple(f"c{i}" for i in range(1, 9))


@dataclass(frozen=True)
class PhiCoefficients:
    a0: object = 0
    a: tuple = (0, 0, 0, 0)
    c: tuple = (0,) * 8

    @classmethod
    def symbolic(cls, n: int | None = None) -> "PhiCoefficients":
        a = tuple(MPoly.var(f"a{i}") for i in range(1, 5))
        if n == 3:
            a = (a[0], 0, a[2], a[3])  # P2 is not in the basis for n = 3
        return cls(MPoly.var("a0"), a, tuple(MPoly.var(v) for v in C_VARS))

    def mapping(self, kind: str) -> dict:
        if kind == "degree1":
            return {"P0": self.a0}
        if kind == "degree2":
            return {f"P{i + 1}": v for i, v in enumerate(self.a)}
        if kind == "degree3":
            return {f"P{i + 1}": v for i, v in enumerate(self.c)}
        raise ValueError(f"unknown kind {kind!r}")

    def bindings(self) -> dict:
        """Variable name -> value for every entry that is not its own symbol."""
        names = ("a0", "a1", "a2", "a3", "a4") + C_VARS
        out = {}
        for name, x in zip(names, (self.a0, *self.a, *self.c)):
            if not (isinstance(x, MPoly) and x == MPoly.var(name)):
                out[name] = x
        return out

    def substitute(self, values: Mapping) -> "PhiCoefficients":
        def s(x):
            return x.subs(values) if isinstance(x, MPoly) else x
        return PhiCoefficients(s(self.a0), tuple(s(x) for x in self.a), tuple(s(x) for x in self.c))


def zeta(xi: RingMatrix, X: RingMatrix, coeffs: PhiCoefficients, kind: str) -> RingMatrix:
    """xi + tpsi_v(phi(xi)) with v = X (degree 1), X.X or X.X.X."""
    return xi + transport_closed(kind, X, xi, coeffs.mapping(kind))


LAM = "lam"


def det_minus_lambda(M: RingMatrix) -> MPoly:
    """det(M - lam I) = (-1)^n C_M(lam) as a polynomial in lam."""
    cp = char_poly(M)
    p = MPoly.const(0)
    lam = MPoly.var(LAM)
    for c in reversed(cp.coeffs):
        p = p * lam + MPoly.lift(c)
    return p if M.n % 2 == 0 else -p


# ---------------------------------------------------------------------------
# constraint solving

class LinearSystem:
    """Affine constraints sum c_v v + c_0 = 0 kept in reduced echelon form."""

    def __init__(self, variables: Sequence[str]):
        self.vars = tuple(variables)
        self.rows: list = []
        self.pivots: list = []
        self.inconsistent = False

    def _vec(self, p: MPoly) -> list:
        vec = [Fraction(0)] * (len(self.vars) + 1)
        for m, c in p.items():
            if not m:
                vec[-1] += c
            else:
                (v, e), = m
                vec[self.vars.index(v)] += c
        return vec

    def add(self, p: MPoly) -> bool:
        """Add a linear constraint; True if it was new."""
        rows = self.rows + [self._vec(p)]
        rref, piv = row_reduce(rows)
        if len(self.vars) in piv:
            self.inconsistent = True
        changed = len(rref) > len(self.rows)
        self.rows, self.pivots = rref, piv
        return changed

    def substitution(self) -> dict:
        out = {}
        for row, pc in zip(self.rows, self.pivots):
            if pc == len(self.vars):
                continue
            expr = MPoly.const(-row[-1])
            for j, v in enumerate(self.vars):
                if j != pc and row[j]:
                    expr = expr - MPoly.var(v) * row[j]
            out[self.vars[pc]] = expr
        return out

    def reduce(self, p: MPoly) -> MPoly:
        return p.subs(self.substitution()) if self.rows else p

    def constraints(self) -> list:
        """Human-readable 'var = value' lines."""
        sub = self.substitution()
        return [f"{v} = {sub[v]}" for v in self.vars if v in sub]

    def free(self) -> list:
        sub = self.substitution()
        return [v for v in self.vars if v not in sub]


def _is_linear(p: MPoly) -> bool:
    return p.total_degree() == 1 and all(len(m) <= 1 and all(e == 1 for _, e in m) for m, _ in p.items())


def _quadratic_form(p: MPoly):
    """Symmetric matrix of a homogeneous quadratic, or None."""
    if p.total_degree() != 2 or p.homogeneous_part(2) != p:
        return None
    vs = list(p.variables())
    Q = [[Fraction(0)] * len(vs) for _ in vs]
    for m, c in p.items():
        if len(m) == 1:
            (v, _), = m
            i = vs.index(v)
            Q[i][i] += c
        else:
            (v, _), (w, _) = m
            i, j = vs.index(v), vs.index(w)
            Q[i][j] += c / 2
            Q[j][i] += c / 2
    return vs, Q


def semidefinite_kernel(p: MPoly):
    """For a semidefinite quadratic form q, the linear forms l_i with
    q = sum d_i l_i^2 and all d_i of one sign, so q = 0 iff all l_i = 0.
    Returns None when q is not a semidefinite quadratic form."""
    qf = _quadratic_form(p)
    if qf is None:
        return None
    vs, Q = qf
    m = len(vs)
    Q = [row[:] for row in Q]
    forms, signs = [], set()
    for i in range(m):
        d = Q[i][i]
        if d == 0:
            if any(Q[i][j] != 0 for j in range(i + 1, m)):
                return None  # zero diagonal with a cross term: indefinite
            continue
        signs.add(d > 0)
        row = [Q[i][j] / d for j in range(m)]
        forms.append(sum((MPoly.var(vs[j]) * row[j] for j in range(i, m) if row[j]), MPoly.const(0)))
        for r in range(i + 1, m):
            f = Q[r][i]
            if f:
                for c in range(i, m):
                    Q[r][c] -= f * Q[i][c] / d
    if len(signs) > 1:
        return None
    return forms


def _univariate_real_roots(p: MPoly):
    """Real roots of a univariate polynomial if they are all rational, else None."""
    (v,) = p.variables()
    up = UPoly([c.constant_value() for c in p.coefficients_in(v)])
    roots = rational_roots(up)
    q = up
    for r in roots:
        while q.degree > 0 and q(r) == 0:
            q = q.divmod(UPoly([-r, 1]))[0]
    if q.degree > 0:
        from .exact_algebra import upoly_gcd
        sf = q.divmod(upoly_gcd(q, q.derivative()))[0] if not squarefree(q) else q
        if count_real_roots(sf) > 0:
            return None
    return v, roots


@dataclass
class Extraction:
    added: list = field(default_factory=list)  # (equation, constraint, reason)
    residual: list = field(default_factory=list)


def extract_constraints(equations: Sequence[MPoly], system: LinearSystem) -> Extraction:
    """Turn real polynomial equations into linear constraints where forced."""
    ex = Extraction()
    changed = True
    while changed:
        changed = False
        residual = []
        for eq in equations:
            r = system.reduce(eq)
            if r.is_zero():
                continue
            if _is_linear(r) or (r.is_constant()):
                if system.add(r):
                    ex.added.append((eq, r, "linear"))
                    changed = True
                continue
            kern = semidefinite_kernel(r)
            if kern is not None:
                for lf in kern:
                    if system.add(lf):
                        ex.added.append((eq, lf, "semidefinite quadratic"))
                        changed = True
                continue
            if len(r.variables()) == 1:
                got = _univariate_real_roots(r)
                if got is not None and len(got[1]) == 1:
                    v, (root,) = got
                    lf = MPoly.var(v) - root
                    if system.add(lf):
                        ex.added.append((eq, lf, "unique real root"))
                        changed = True
                    continue
            residual.append(r)
        ex.residual = residual
    return ex


# ---------------------------------------------------------------------------
# elimination engines

@dataclass
class PsiCheck:
    label: str
    computed: RingMatrix
    displayed: RingMatrix

    @property
    def matches(self) -> bool:
        lift = lambda M: M.map(MPoly.lift)  # noqa: E731
        return lift(self.computed) == lift(self.displayed)


@dataclass
class EliminationStep:
    label: str
    kind: str
    xi: RingMatrix
    X: RingMatrix
    assumed: dict  # coefficients set to zero before computing, as the printed proof does
    zeta: RingMatrix = None
    det: MPoly = None
    displayed: MPoly | None = None
    psi_checks: list = field(default_factory=list)
    equations: list = field(default_factory=list)
    added: list = field(default_factory=list)
    residual: list = field(default_factory=list)
    assumption_justified: bool | None = None

    @property
    def identity_holds(self) -> bool | None:
        if self.displayed is None:
            return None
        return self.det == self.displayed


@dataclass
class EliminationReport:
    name: str
    n: int
    mode: str
    steps: list
    system: LinearSystem
    expected_zero: tuple
    expected_free: tuple

    @property
    def solution(self) -> dict:
        return self.system.substitution()

    @property
    def solution_ok(self) -> bool:
        sub = self.solution
        zero_ok = all(v in sub and sub[v].is_zero() for v in self.expected_zero)
        free_ok = all(v not in sub for v in self.expected_free)
        return zero_ok and free_ok and not self.system.inconsistent

    @property
    def identities_ok(self) -> bool:
        return all(s.identity_holds is not False for s in self.steps)

    @property
    def ok(self) -> bool:
        return self.solution_ok and self.identities_ok


def _equations(xi: RingMatrix, z: RingMatrix) -> list:
    """Coefficients (in lam) of C_zeta - C_xi."""
    diff = char_poly(z) - char_poly(xi)
    return [MPoly.lift(c) for c in diff.coeffs if not _is_zero(c)]


def _mat(n, terms) -> RingMatrix:
    return unit_combination({(i, j): c for c, i, j in terms}, n)


def _lam():
    return MPoly.var(LAM)


def _run_step(step: EliminationStep, coeffs: PhiCoefficients, system: LinearSystem, mode: str,
              displayed: MPoly | None = None, psi_displays: Sequence = ()):
    """The displayed identity is always checked under the step's stated
    assumptions.  Mode "sequential" also extracts from that zeta; mode "joint"
    extracts from the unrestricted zeta and lets the accumulated linear
    system do the reducing."""
    sub = system.substitution()
    step.assumption_justified = all(v in sub and sub[v].is_zero() for v in step.assumed)
    step.zeta = zeta(step.xi, step.X, coeffs.substitute(step.assumed), step.kind)
    step.det = det_minus_lambda(step.zeta)
    if displayed is not None:
        step.displayed = displayed.subs(coeffs.bindings())
    for label, computed_fn, shown in psi_displays:
        shown = shown.map(lambda e: MPoly.lift(e).subs(coeffs.bindings()))
        step.psi_checks.append(PsiCheck(label, computed_fn(), shown))
    z = step.zeta if mode == "sequential" else zeta(step.xi, step.X, coeffs, step.kind)
    step.equations = _equations(step.xi, z)
    ex = extract_constraints(step.equations, system)
    step.added = ex.added
    step.residual = ex.residual


def _closed(kind, X, xi, name):
    from .intertwiners import closed_forms
    return lambda: closed_forms(kind, X, xi)[name]


def elimination_degree2(n: int, mode: str = "sequential", coeffs: PhiCoefficients | None = None) -> EliminationReport:
    """The four tests forcing a0 = a1 = a2 = a3 = 0 in degree 2."""
    if n < 3:
        raise ValueError("elimination_degree2 needs n >= 3")
    if mode not in ("sequential", "joint"):
        raise ValueError(f"unknown mode {mode!r}")
    coeffs = coeffs if coeffs is not None else PhiCoefficients.symbolic(n)
    lam, a0, a1, a2, a3 = _lam(), *(MPoly.var(v) for v in ("a0", "a1", "a2", "a3"))
    m = lambda terms: _mat(n, terms)  # noqa: E731
    vars_ = ("a0", "a1", "a3", "a4") if n == 3 else A_VARS
    system = LinearSystem(vars_)
    steps = []
    diag4 = m([(-1, 1, 1), (-1, 2, 2), (1, n - 1, n - 1), (1, n, n)]) if n > 3 else None

    # 1: v = U in sl(n)
    if n > 3:
        U, xi = m([(1, n, 1), (1, n - 1, 2)]), m([(1, 1, n), (1, 2, n - 1)])
        disp = (-lam) ** (n - 4) * (lam * lam - a0 * a0) ** 2
        zeta_disp = xi + diag4.scale(a0)
    else:
        # the four-unit choice is not traceless when n = 3; use e31, e13
        U, xi = m([(1, 3, 1)]), m([(1, 1, 3)])
        disp, zeta_disp = None, None
    st = EliminationStep("a0 test", "degree1", xi, U, {})
    checks = [("zeta", lambda: zeta(xi, U, coeffs.substitute({}), "degree1"), zeta_disp)] if zeta_disp else []
    _run_step(st, coeffs, system, mode, disp, checks)
    steps.append(st)

    # 2: xi = e1n, X = en1
    xi, X = m([(1, 1, n)]), m([(1, n, 1)])
    if n > 3:
        disp = (-lam) ** (n - 2) * (lam * lam - (a1 * 4 + a2 * 4) ** 2)
        psi_disp = diag4.scale(a1 * 4 + a2 * 4)
    else:
        disp = -lam * (lam * lam - (a1 * 4) ** 2)
        psi_disp = m([(1, 3, 3), (-1, 2, 2)]).scale(a1 * 4)
    st = EliminationStep("xi = e1n, X = en1", "degree2", xi, X, {"a0": 0})
    _run_step(st, coeffs, system, mode, disp,
              [("tpsi", lambda: transport_closed("degree2", X, xi, coeffs.mapping("degree2")), psi_disp)])
    steps.append(st)

    # 3: rank two nilpotent pair (n > 3)
    if n > 3:
        xi = m([(1, 1, n), (1, 2, n - 1)])
        X = xi.transpose()
        disp = (-lam) ** (n - 4) * (lam * lam - (a1 * 4 + a2 * 8) ** 2) ** 2
        st = EliminationStep("xi = e1n + e2(n-1), X = xi^t", "degree2", xi, X, {"a0": 0})
        _run_step(st, coeffs, system, mode, disp,
                  [("tpsi", lambda: transport_closed("degree2", X, xi, coeffs.mapping("degree2")),
                    diag4.scale(a1 * 4 + a2 * 8))])
        steps.append(st)

    # 4: xi = e1(n-1) + e(n-1)n
    xi = m([(1, 1, n - 1), (1, n - 1, n)])
    X = xi.transpose()
    disp = (-lam) ** (n - 2) * (lam * lam - (a3 * 4) ** 2)
    assumed = {"a0": 0, "a1": 0} if n == 3 else {"a0": 0, "a1": 0, "a2": 0}
    st = EliminationStep("xi = e1(n-1) + e(n-1)n, X = xi^t", "degree2", xi, X, assumed)
    _run_step(st, coeffs, system, mode, disp,
              [("tpsi", lambda: transport_closed("degree2", X, xi, coeffs.substitute(assumed).mapping("degree2")),
                m([(-1, 1, 1), (1, n, n)]).scale(a3 * 4))])
    steps.append(st)

    zero = ("a0", "a1", "a3") if n == 3 else ("a0", "a1", "a2", "a3")
    return EliminationReport("degree 2", n, mode, steps, system, zero, ("a4",))


def elimination_degree3(mode: str = "sequential", coeffs: PhiCoefficients | None = None) -> EliminationReport:
    """The six tests on sl(4) forcing c1 = ... = c7 = 0 in degree 3."""
    if mode not in ("sequential", "joint"):
        raise ValueError(f"unknown mode {mode!r}")
    n = 4
    coeffs = coeffs if coeffs is not None else PhiCoefficients.symbolic(4)
    lam = _lam()
    c = {v: MPoly.var(v) for v in C_VARS}
    m = lambda terms: _mat(n, terms)  # noqa: E731
    d14 = m([(1, 1, 1), (-1, 4, 4)])
    system = LinearSystem(C_VARS)
    steps = []

    def run(label, xi, X, assumed, disp, psi):
        st = EliminationStep(label, "degree3", xi, X, assumed)
        checks = [(f"tpsi {name}", _closed("degree3", X, xi, name), shown) for name, shown in psi]
        _run_step(st, coeffs, system, mode, disp, checks)
        steps.append(st)

    xi = m([(1, 1, 4)])
    run("xi = e14, X = e14 + e41", xi, m([(1, 1, 4), (1, 4, 1)]), {},
        lam ** 2 * (lam ** 2 - (c["c6"] - c["c4"]) ** 2 * 9),
        [("P4", d14.scale(-3)), ("P6", d14.scale(3))])
    run("xi = e14, X = e14 - e41", xi, m([(1, 1, 4), (-1, 4, 1)]), {},
        lam ** 2 * (lam ** 2 - (c["c6"] + c["c4"]) ** 2 * 9),
        [("P4", d14.scale(3)), ("P6", d14.scale(3))])
    xi = m([(1, 1, 3), (1, 3, 4)])
    c2, c3 = c["c2"], c["c3"]
    run("xi = e13 + e34, X = xi^t", xi, xi.transpose(), {"c4": 0, "c6": 0},
        -lam * (c2 + c3 * 2 - lam) * (c2 - c3 - lam) * (-c2 * 2 - c3 - lam),
        [("P2", m([(1, 1, 1), (1, 3, 3), (-2, 4, 4)])), ("P3", m([(2, 1, 1), (-1, 3, 3), (-1, 4, 4)]))])
    shown = xi + m([(c2 + c3 * 2, 1, 1), (c2 - c3, 3, 3), (-(c2 * 2 + c3), 4, 4)])
    steps[-1].psi_checks.append(PsiCheck("zeta", steps[-1].zeta, shown.map(
        lambda e: MPoly.lift(e).subs(coeffs.bindings()))))
    xi = m([(1, 1, 3), (1, 1, 4), (1, 3, 4)])
    c7 = c["c7"]
    run("xi = e13 + e14 + e34, X = xi^t", xi, xi.transpose(), {"c2": 0, "c3": 0, "c4": 0, "c6": 0},
        -lam * (-lam ** 3 + lam * (c7 ** 2 * 5 + c7) + c7 ** 3 * 2 + c7 ** 2 + c7 * 2),
        [("P7", m([(2, 1, 1), (1, 1, 3), (1, 3, 1), (-1, 3, 4), (-1, 4, 3), (-2, 4, 4)]))])
    xi = m([(1, 1, 2), (1, 2, 3), (1, 3, 4)])
    run("xi = e12 + e23 + e34, X = xi^t", xi, xi.transpose(),
        {"c2": 0, "c3": 0, "c4": 0, "c6": 0, "c7": 0}, None, [("P1", d14)])
    run("xi = e12 + e23 + e34, X = e14 + e41", xi, m([(1, 1, 4), (1, 4, 1)]),
        {"c1": 0, "c2": 0, "c3": 0, "c4": 0, "c6": 0, "c7": 0}, None, [("P5", d14.scale(2))])

    return EliminationReport("degree 3", 4, mode, steps, system, C_VARS[:7], ("c8",))


# ---------------------------------------------------------------------------
# families with equal surviving invariants

class InadmissibleParameterError(ValueError):
    pass


@dataclass
class FamilyMember:
    kind: str
    t: Fraction
    xi: RingMatrix
    in_omega: bool
    genericity: str
    T2: Fraction
    T3: Fraction
    det: Fraction
    det_formula: Fraction
    det_formula_alt: Fraction | None = None
    extras: dict = field(default_factory=dict)


def degree2_member(t, tail: Sequence = (3, -3)) -> FamilyMember:
    """diag((t+u)/2, (t-u)/2, -t, c_4, ..., c_n) with u = sqrt(4 - 3t^2)."""
    t = Fraction(t)
    u = rational_sqrt(4 - 3 * t * t)
    if u is None:
        raise InadmissibleParameterError(f"4 - 3t^2 is not a rational square at t = {fmt_rational(t)}")
    tail = tuple(Fraction(x) for x in tail)
    if sum(tail) != 0:
        raise InadmissibleParameterError("tail must have trace zero")
    if any(abs(x) <= 2 for x in tail):
        raise InadmissibleParameterError("tail entries must satisfy |c| > 2")
    xi = RingMatrix.diag([(t + u) / 2, (t - u) / 2, -t, *tail])
    inv = trace_invariants(xi)
    prod = Fraction(1)
    for x in tail:
        prod *= x
    cls = classify(xi)
    d = _det_diag(xi)
    return FamilyMember("degree2", t, xi, cls.generic, str(cls), inv.T(2), inv.T(3), d,
                        t * (1 - t * t) * prod, extras={"u": u, "T2_formula": 2 + sum(x * x for x in tail)})


def degree3_member(t) -> FamilyMember:
    """diag(p, -p, q, -q) with p = sqrt(1+t), q = sqrt(1-t)."""
    t = Fraction(t)
    p, q = rational_sqrt(1 + t), rational_sqrt(1 - t)
    if p is None or q is None:
        raise InadmissibleParameterError(f"1 +- t not both rational squares at t = {fmt_rational(t)}")
    xi = RingMatrix.diag([p, -p, q, -q])
    inv = trace_invariants(xi)
    cls = classify(xi)
    return FamilyMember("degree3", t, xi, cls.generic, str(cls), inv.T(2), inv.T(3), _det_diag(xi),
                        1 - t * t, det_formula_alt=(1 - t * t) ** 2, extras={"p": p, "q": q})


def _det_diag(xi):
    d = Fraction(1)
    for i in range(xi.n):
        d *= xi[i, i]
    return d


def degree2_parameter(k) -> Fraction:
    """Points of 3t^2 + u^2 = 4 on the line of slope k through (1, 1)."""
    k = Fraction(k)
    return (k * k - 2 * k - 3) / (k * k + 3)


def degree3_parameter(k) -> Fraction:
    """t = p^2 - 1 for the point of p^2 + q^2 = 2 on the line of slope k through (1, 1)."""
    k = Fraction(k)
    p = (k * k - 2 * k - 1) / (k * k + 1)
    return p * p - 1


def admissible_parameters(kind: str, count: int) -> list:
    """The first ``count`` distinct admissible t from slopes k = 0, 1, -1, 2, -2, ...
    For degree 3 the boundary points t = 0, +-1 (outside Omega) are skipped."""
    gen = degree2_parameter if kind == "degree2" else degree3_parameter
    out: list = []
    k = 0
    while len(out) < count:
        for slope in ((k,) if k == 0 else (k, -k)):
            t = gen(slope)
            cands = (t,) if kind == "degree2" else (t, -t)
            for c in cands:
                if c not in out and len(out) < count:
                    if kind == "degree3" and c in (-1, 0, 1):
                        continue
                    out.append(c)
        k += 1
    return out


def counterexample_family(kind: str, t, tail: Sequence = (3, -3)) -> FamilyMember:
    if kind == "degree2":
        return degree2_member(t, tail)
    if kind == "degree3":
        return degree3_member(t)
    raise ValueError(f"unknown family {kind!r}")


@dataclass
class FamilyReport:
    kind: str
    members: list
    boundary: list  # admissible t whose xi_t falls outside Omega
    invariants_constant: bool
    det_varies: bool
    det_formula_ok: bool
    pairwise_different: bool
    phi_images_agree: bool

    @property
    def ok(self) -> bool:
        return (len(self.members) >= 2 and self.invariants_constant and self.det_varies and self.det_formula_ok
                and self.pairwise_different and self.phi_images_agree)


def family_report(kind: str, ts: Sequence, tail: Sequence = (3, -3)) -> FamilyReport:
    everything = [counterexample_family(kind, t, tail) for t in ts]
    members = [mb for mb in everything if mb.in_omega]
    boundary = [mb.t for mb in everything if not mb.in_omega]
    if kind == "degree2":
        const = all(mb.T2 == mb.extras["T2_formula"] for mb in members)
        surviving = [(mb.T2,) for mb in members]
    else:
        const = all(mb.T2 == 4 and mb.T3 == 0 for mb in members)
        surviving = [(mb.T2, mb.T3) for mb in members]
    formula_ok = all(mb.det == mb.det_formula for mb in everything)
    diff = all(almost_separate(a.xi, b.xi) == Verdict.DIFFERENT
               for i, a in enumerate(members) for b in members[i + 1:] if a.det != b.det)
    return FamilyReport(kind, members, boundary, const, len({mb.det for mb in members}) > 1, formula_ok,
                        diff, len(set(surviving)) == 1)

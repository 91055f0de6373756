"""Symmetric powers S^k(gl(n)) spanned by products of matrix units, with the
adjoint action, weights, highest weight checks, and the explicit vectors of
the S^2(sl(n)) and S^3(sl(4)) decompositions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Mapping

from .exact_algebra import DimensionMismatchError, MPoly, RingMatrix, _is_zero, lift_scalar
from .sl_basis import s_unit

Unit = tuple  # (i, j), 1-based
Mono = tuple  # sorted tuple of units


class NotAWeightVector(ValueError):
    pass


class DecompositionError(AssertionError):
    pass


def _clean(d: dict) -> dict:
    return {m: c for m, c in d.items() if not _is_zero(c)}


class SymTensor:
    """Element of S^k(gl(n)) as {sorted tuple of units: coefficient}."""

    __slots__ = ("k", "n", "_terms", "_hash")

    def __init__(self, k: int, n: int, terms: Mapping | None = None):
        self.k, self.n = k, n
        out: dict = {}
        for mono, c in (terms or {}).items():
            if len(mono) != k:
                raise ValueError(f"monomial {mono} has degree {len(mono)}, expected {k}")
            for i, j in mono:
                if not (1 <= i <= n and 1 <= j <= n):
                    raise IndexError(f"unit e_{i}{j} out of range for n={n}")
            key = tuple(sorted(mono))
            out[key] = out.get(key, 0) + lift_scalar(c)
        self._terms = _clean(out)
        self._hash = None

    @classmethod
    def _raw(cls, k, n, terms):
        obj = cls.__new__(cls)
        obj.k, obj.n, obj._terms, obj._hash = k, n, _clean(terms), None
        return obj

    # -- constructors
    @classmethod
    def zero(cls, k: int, n: int) -> "SymTensor":
        return cls._raw(k, n, {})

    @classmethod
    def one(cls, n: int) -> "SymTensor":
        return cls._raw(0, n, {(): Fraction(1)})

    @classmethod
    def unit(cls, i: int, j: int, n: int) -> "SymTensor":
        return cls(1, n, {((i, j),): 1})

    @classmethod
    def linear(cls, n: int, coeffs: Mapping) -> "SymTensor":
        """Degree one tensor sum c * e_ij from {(i, j): c}."""
        return cls(1, n, {((i, j),): c for (i, j), c in coeffs.items()})

    @classmethod
    def from_matrix(cls, M: RingMatrix) -> "SymTensor":
        n = M.n
        return cls(1, n, {((i + 1, j + 1),): M[i, j] for i in range(n) for j in range(n) if not _is_zero(M[i, j])})

    # -- access
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self):
        return self._terms.keys()

    def coeff(self, mono) -> object:
        return self._terms.get(tuple(sorted(mono)), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    # -- arithmetic
    def _compat(self, other):
        if not isinstance(other, SymTensor):
            raise TypeError("expected a SymTensor")
        if other.n != self.n:
            raise DimensionMismatchError(f"n={self.n} vs n={other.n}")

    def __add__(self, other):
        self._compat(other)
        if self.k != other.k and self._terms and other._terms:
            raise ValueError(f"degree {self.k} + degree {other.k}")
        k = self.k if self._terms else other.k
        d = dict(self._terms)
        for m, c in other._terms.items():
            d[m] = d.get(m, 0) + c
        return SymTensor._raw(k, self.n, d)

    def __neg__(self):
        return SymTensor._raw(self.k, self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SymTensor":
        c = lift_scalar(c)
        return SymTensor._raw(self.k, self.n, {m: c * v for m, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, SymTensor):
            return self.scale(other)
        self._compat(other)
        d: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(sorted(m1 + m2))
                d[m] = d.get(m, 0) + c1 * c2
        return SymTensor._raw(self.k + other.k, self.n, d)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, SymTensor):
            return NotImplemented
        if self.n != other.n:
            return False
        if self.k != other.k and (self._terms or other._terms):
            return False
        return (self - other).is_zero() if self.k == other.k else True

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.k, self.n, frozenset(self._terms.items())))
        return self._hash

    def map_units(self, f: Callable[[Unit], Unit]) -> "SymTensor":
        d: dict = {}
        for m, c in self._terms.items():
            key = tuple(sorted(f(u) for u in m))
            d[key] = d.get(key, 0) + c
        return SymTensor._raw(self.k, self.n, d)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for m in sorted(self._terms):
            c = self._terms[m]
            mono = "·".join(f"e{i}{j}" for i, j in m) or "1"
            parts.append(f"({c})*{mono}" if isinstance(c, MPoly) else f"{c}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"SymTensor(k={self.k}, n={self.n}, {len(self._terms)} terms)"


def E(i: int, j: int, n: int) -> SymTensor:
    return SymTensor.unit(i, j, n)


def sym_product(*factors: SymTensor) -> SymTensor:
    out = SymTensor.one(factors[0].n)
    for f in factors:
        out = out * f
    return out


def total(tensors: Iterable[SymTensor]) -> SymTensor:
    tensors = list(tensors)
    out = tensors[0]
    for t in tensors[1:]:
        out = out + t
    return out


# ---------------------------------------------------------------------------
# adjoint action

def ad_unit(a: int, b: int, t: SymTensor) -> SymTensor:
    """Leibniz action of e_ab, using [e_ab, e_ij] = d_bi e_aj - d_ja e_ib."""
    d: dict = {}
    for mono, c in t.items():
        for r, (i, j) in enumerate(mono):
            if b == i or j == a:
                rest = mono[:r] + mono[r + 1:]
                if b == i:
                    key = tuple(sorted(rest + ((a, j),)))
                    d[key] = d.get(key, 0) + c
                if j == a:
                    key = tuple(sorted(rest + ((i, b),)))
                    d[key] = d.get(key, 0) - c
    return SymTensor._raw(t.k, t.n, d)


def ad_on_tensor(X, t: SymTensor) -> SymTensor:
    """ad_X on S^k by the Leibniz rule; X is a matrix or a unit pair (i, j)."""
    if isinstance(X, tuple):
        a, b = X
        if not (1 <= a <= t.n and 1 <= b <= t.n):
            raise IndexError(f"unit e_{a}{b} out of range for n={t.n}")
        return ad_unit(a, b, t)
    if X.n != t.n:
        raise DimensionMismatchError(f"matrix n={X.n}, tensor n={t.n}")
    out = SymTensor.zero(t.k, t.n)
    for a in range(X.n):
        for b in range(X.n):
            c = X[a, b]
            if not _is_zero(c):
                out = out + ad_unit(a + 1, b + 1, t).scale(c)
    return out


def h_matrix(i: int, n: int) -> RingMatrix:
    return RingMatrix([[(1 if r == c == i - 1 else -1 if r == c == i else 0) for c in range(n)] for r in range(n)])


# ---------------------------------------------------------------------------
# weights

@dataclass(frozen=True)
class Weight:
    L: tuple  # coordinates on L_1..L_n, summing to zero
    fundamental: tuple  # a_i = lambda_i - lambda_(i+1)

    @classmethod
    def from_L(cls, L) -> "Weight":
        L = tuple(L)
        return cls(L, tuple(L[i] - L[i + 1] for i in range(len(L) - 1)))


def mono_weight(mono: Mono, n: int) -> tuple:
    L = [0] * n
    for i, j in mono:
        L[i - 1] += 1
        L[j - 1] -= 1
    return tuple(L)


def _ratio(s: SymTensor, t: SymTensor):
    """c with s = c t, or None (t nonzero)."""
    if s.is_zero():
        return Fraction(0)
    if set(s.monomials()) != set(t.monomials()):
        return None
    m0 = next(iter(t.monomials()))
    c0 = s.coeff(m0)
    t0 = t.coeff(m0)
    for m in t.monomials():
        if not _is_zero(s.coeff(m) * t0 - c0 * t.coeff(m)):
            return None
    if isinstance(c0, MPoly) or isinstance(t0, MPoly):
        return None
    return Fraction(c0) / Fraction(t0)


def proportional(s: SymTensor, t: SymTensor):
    """Nonzero c with s = c t, else None."""
    if t.is_zero() or s.is_zero():
        return None
    r = _ratio(s, t)
    return r if r else None


def weight_of(t: SymTensor) -> Weight:
    if t.is_zero():
        raise NotAWeightVector("zero tensor")
    fund = []
    for i in range(1, t.n):
        r = _ratio(ad_on_tensor(h_matrix(i, t.n), t), t)
        if r is None or r.denominator != 1:
            raise NotAWeightVector(f"not an eigenvector of h_{i}")
        fund.append(int(r))
    # L-coordinates read off any monomial; all agree once the h_i test passed
    L = mono_weight(next(iter(t.monomials())), t.n)
    w = Weight.from_L(L)
    assert w.fundamental == tuple(fund)
    return w


def is_highest_weight(t: SymTensor) -> bool:
    if t.is_zero():
        raise ValueError("is_highest_weight() of the zero tensor")
    for i in range(1, t.n):
        if not ad_unit(i, i + 1, t).is_zero():
            return False
    try:
        weight_of(t)
    except NotAWeightVector:
        return False
    return True


def trace_contraction(t: SymTensor) -> SymTensor:
    """The derivation replacing one factor by its trace.  Its kernel is S(sl(n))."""
    d: dict = {}
    for mono, c in t.items():
        for r, (i, j) in enumerate(mono):
            if i == j:
                key = mono[:r] + mono[r + 1:]
                d[key] = d.get(key, 0) + c
    return SymTensor._raw(t.k - 1, t.n, d)


def in_sl_power(t: SymTensor) -> bool:
    return t.k == 0 or trace_contraction(t).is_zero()


def s_on_tensor(t: SymTensor) -> SymTensor:
    n = t.n
    return t.map_units(lambda u: s_unit(u[0], u[1], n))


# ---------------------------------------------------------------------------
# dimensions

def weyl_dim(label, n: int | None = None) -> int:
    a = tuple(label)
    n = len(a) + 1 if n is None else n
    if len(a) != n - 1 or any(x < 0 for x in a):
        raise ValueError(f"bad label {a} for sl({n})")
    num = Fraction(1)
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            num *= Fraction(sum(a[i - 1:j - 1]) + j - i, j - i)
    assert num.denominator == 1
    return int(num)


def dim_sym(k: int, n: int) -> int:
    if k < 1:
        raise ValueError("dim_sym needs k >= 1")
    return comb(n * n - 1 + k - 1, k)


# ---------------------------------------------------------------------------
# the explicit vectors

S2_NAMES = ("v2002", "v0110", "v1001", "v0000")
S3_NAMES = ("w303", "w121", "w202", "w210", "w012", "w101", "w101p", "w000")


def _d(n, *pairs):
    """Degree one diagonal combination from (coefficient, index) pairs."""
    return SymTensor.linear(n, {(i, i): c for c, i in pairs})


def e_prime(i: int, j: int, n: int = 4) -> SymTensor:
    """e'_ij = sum_k e_ik e_kj - 1/2 (sum_k e_kk) e_ij, a copy of sl(n) in S^2."""
    out = total(E(i, k, n) * E(k, j, n) for k in range(1, n + 1))
    ident = SymTensor.linear(n, {(k, k): 1 for k in range(1, n + 1)})
    return out - (ident * E(i, j, n)).scale(Fraction(1, 2))


def e_prime_linear(t: SymTensor) -> SymTensor:
    """Extend e_ij -> e'_ij linearly to degree one tensors."""
    out = SymTensor.zero(2, t.n)
    for (u,), c in t.items():
        out = out + e_prime(u[0], u[1], t.n).scale(c)
    return out


def _v_labels(name: str, n: int) -> tuple:
    a = [0] * (n - 1)
    if name == "v2002":
        a[0] += 2
        a[-1] += 2
    elif name == "v0110":
        a[1] += 1
        a[n - 3] += 1
    elif name == "v1001":
        a[0] += 1
        a[-1] += 1
    return tuple(a)


LABELS_S3 = {
    "w303": (3, 0, 3), "w121": (1, 2, 1), "w202": (2, 0, 2), "w210": (2, 1, 0),
    "w012": (0, 1, 2), "w101": (1, 0, 1), "w101p": (1, 0, 1), "w000": (0, 0, 0),
}


def vector_label(name: str, n: int) -> tuple:
    if name in LABELS_S3:
        return LABELS_S3[name]
    if name in S2_NAMES:
        return _v_labels(name, n)
    raise KeyError(f"unknown vector {name!r}")


def _v2(name: str, n: int) -> SymTensor:
    if n < 3:
        raise ValueError(f"{name} needs n >= 3")
    if name == "v2002":
        return E(1, n, n) * E(1, n, n)
    if name == "v0110":
        if n < 4:
            raise ValueError("v0110 needs n >= 4")
        return E(2, n, n) * E(1, n - 1, n) - E(2, n - 1, n) * E(1, n, n)
    if name == "v1001":
        a = total(E(1, i, n) * E(i, n, n) for i in range(1, n + 1))
        b = total(E(j, j, n) * E(1, n, n) for j in range(1, n + 1))
        return a - b.scale(Fraction(2, n))
    if name == "v0000":
        off = total(E(i, j, n) * E(j, i, n) for i in range(1, n + 1) for j in range(i + 1, n + 1))
        dg = total(_d(n, (1, i), (-1, j)) * _d(n, (1, i), (-1, j))
                   for i in range(1, n + 1) for j in range(i + 1, n + 1))
        return off.scale(2 * n) + dg
    raise KeyError(name)


def _v101(n=4) -> SymTensor:
    return (E(1, 2, n) * E(2, 4, n) + E(1, 3, n) * E(3, 4, n)
            + (_d(n, (1, 1), (-1, 2), (-1, 3), (1, 4)) * E(1, 4, n)).scale(Fraction(1, 2)))


def _w3(name: str, verbatim: bool) -> SymTensor:
    n = 4
    e = lambda i, j: E(i, j, n)  # noqa: E731
    if name == "w303":
        return e(1, 4) * e(1, 4) * e(1, 4)
    if name == "w121":
        return e(2, 4) * e(1, 3) * e(1, 4) - e(2, 3) * e(1, 4) * e(1, 4)
    if name == "w202":
        return _v101() * e(1, 4)
    if name == "w210":
        return (e(1, 2) * e(2, 4) * e(1, 3) - e(1, 2) * e(2, 3) * e(1, 4) - e(1, 4) * e(4, 3) * e(1, 4)
                + e(1, 3) * e(3, 4) * e(1, 3) + _d(n, (1, 4), (-1, 3)) * e(1, 3) * e(1, 4))
    if name == "w012":
        return (e(3, 4) * e(1, 3) * e(2, 4) - e(3, 4) * e(2, 3) * e(1, 4) - e(1, 4) * e(2, 1) * e(1, 4)
                + e(2, 4) * e(1, 2) * e(2, 4) + _d(n, (1, 1), (-1, 2)) * e(2, 4) * e(1, 4))
    if name == "w101":
        pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (3, 4)]
        if not verbatim:
            pairs.append((2, 4))  # dropped from the printed list; v0000 . e14 needs it
        t = total(e(a, b) * e(b, a) * e(1, 4) for a, b in pairs).scale(8)
        t = t + total(e(a, a) * e(a, a) * e(1, 4) for a in range(1, 5)).scale(3)
        t = t - total(e(a, a) * e(b, b) * e(1, 4) for a in range(1, 5) for b in range(a + 1, 5)).scale(2)
        return t
    if name == "w101p":
        if verbatim:
            d12 = _d(n, (1, 1), (-1, 2))
            d34 = _d(n, (1, 3), (-1, 4))
            inner = (e(1, 2) * e(2, 4)).scale(2) + (e(1, 3) * e(3, 4)).scale(2) + d12 * e(1, 4) - d34 * e(1, 4)
            return ((e(1, 2) * ((e(2, 3) * e(3, 4)).scale(2) + (e(2, 1) * e(1, 4)).scale(2)
                                 + _d(n, (1, 2), (-1, 1)) * e(2, 4) - d34 * e(2, 4))).scale(2)
                    + (e(1, 3) * ((e(3, 2) * e(2, 4)).scale(2) + (e(3, 1) * e(1, 4)).scale(2)
                                   + _d(n, (1, 3), (-1, 1)) * e(3, 4) + _d(n, (1, 4), (-1, 2)) * e(3, 4))).scale(2)
                    + d12 * inner - d34 * inner)
        # substitute e -> e' in each factor of v101 in turn
        terms = [(Fraction(1), e(1, 2), e(2, 4)), (Fraction(1), e(1, 3), e(3, 4)),
                 (Fraction(1, 2), _d(n, (1, 1), (-1, 2), (-1, 3), (1, 4)), e(1, 4))]
        return total((e_prime_linear(a) * b + e_prime_linear(b) * a).scale(c) for c, a, b in terms)
    if name == "w000":
        out = SymTensor.zero(3, n)
        for a in range(1, 5):
            for b in range(a + 1, 5):
                out = out + (e(a, b) * e_prime(b, a) + e(b, a) * e_prime(a, b)).scale(4)
                out = out + _d(n, (1, a), (-1, b)) * (e_prime(a, a) - e_prime(b, b))
        return out
    raise KeyError(name)


def paper_vector(name: str, n: int = 4, verbatim: bool = False) -> SymTensor:
    """The named highest weight vector.

    ``verbatim=True`` returns w101 and w101p exactly as printed (neither is
    annihilated by the raising operators); the default returns the repaired
    vectors.  All other names are the same either way.
    """
    if name in S2_NAMES:
        return _v2(name, n)
    if name in S3_NAMES:
        if n != 4:
            raise ValueError(f"{name} is defined for n = 4 only")
        return _w3(name, verbatim)
    raise KeyError(f"unknown vector {name!r}")


# ---------------------------------------------------------------------------
# decomposition accounting

@dataclass(frozen=True)
class Constituent:
    name: str
    label: tuple
    dim: int
    highest_weight: bool
    weight_matches: bool
    in_sl_power: bool


@dataclass(frozen=True)
class DecompositionReport:
    k: int
    n: int
    constituents: tuple
    total: int
    dim_sym: int
    excluded: tuple = ()

    @property
    def balanced(self) -> bool:
        return self.total == self.dim_sym

    @property
    def ok(self) -> bool:
        return self.balanced and all(
            c.highest_weight and c.weight_matches and c.in_sl_power for c in self.constituents)


S3_CONSTITUENTS = ("w303", "w121", "w202", "w101", "w210", "w012", "w101p", "w000")


def decomposition_report(k: int, n: int, strict: bool = True) -> DecompositionReport:
    if k == 2 and 3 <= n <= 8:
        names = ["v2002"] + (["v0110"] if n > 3 else []) + ["v1001", "v0000"]
        excluded = (("v0110", "absent at n = 3; its dimension formula gives 0"),) if n == 3 else ()
    elif (k, n) == (3, 4):
        names = list(S3_CONSTITUENTS)
        excluded = ()
    else:
        raise ValueError(f"no decomposition on record for (k, n) = ({k}, {n})")
    parts = []
    for name in names:
        v = paper_vector(name, n)
        label = vector_label(name, n)
        hw = is_highest_weight(v)
        wm = hw and weight_of(v).fundamental == label
        parts.append(Constituent(name, label, weyl_dim(label, n), hw, wm, in_sl_power(v)))
    rep = DecompositionReport(k, n, tuple(parts), sum(c.dim for c in parts), dim_sym(k, n), excluded)
    if strict and not rep.ok:
        raise DecompositionError(f"decomposition check failed: {rep}")
    return rep


def paper_dim_formulas(n: int) -> dict:
    """The closed forms quoted for S^2(sl(n)) constituents."""
    return {
        "v2002": Fraction(n * n * (n - 1) * (n + 3), 4),
        "v0110": Fraction(n * n * (n + 1) * (n - 3), 4),
        "v1001": Fraction(n * n - 1),
        "v0000": Fraction(1),
    }

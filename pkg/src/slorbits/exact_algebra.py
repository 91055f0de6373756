"""Exact scalars, sparse multivariate polynomials, square matrices over a
commutative ring, and univariate polynomials over Q.

Everything here is immutable.  Matrix entries may be ``int``, ``Fraction`` or
``MPoly``; they only need ``+``, ``-``, ``*`` and comparison with 0.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import permutations
from typing import Callable, Iterable, Iterator, Mapping, Sequence

Rational = Fraction


class DegenerateInputError(ValueError):
    """Zero polynomial, empty matrix and the like."""


class DimensionMismatchError(ValueError):
    pass


class NotSquarefreeError(ValueError):
    pass


# ---------------------------------------------------------------------------
# rationals

def fmt_rational(q) -> str:
    """Serialize as ``p/q``, dropping ``/1``."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s) -> Fraction:
    if isinstance(s, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    if isinstance(s, str):
        return Fraction(s.strip())
    raise TypeError(f"cannot read a rational from {s!r}")


def rational_sqrt(q) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    q = Fraction(q)
    if q < 0:
        return None
    a, b = q.numerator, q.denominator
    ra, rb = math.isqrt(a), math.isqrt(b)
    if ra * ra == a and rb * rb == b:
        return Fraction(ra, rb)
    return None


def _is_zero(x) -> bool:
    if isinstance(x, MPoly):
        return x.is_zero()
    return x == 0


# ---------------------------------------------------------------------------
# multivariate polynomials

# fixed variable order; anything else sorts after these, by name
VAR_ORDER = ("lam", "t", "u", "k", "s",
             "a0", "a1", "a2", "a3", "a4",
             "c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8")
_VAR_RANK = {v: i for i, v in enumerate(VAR_ORDER)}


def _var_key(name: str):
    return (_VAR_RANK.get(name, len(VAR_ORDER)), name)


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items(), key=lambda ve: _var_key(ve[0])))


class MPoly:
    """Sparse polynomial with rational coefficients.

    Monomials are tuples of ``(variable, exponent)`` pairs sorted in the fixed
    variable order, so equal polynomials have equal term dicts.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c:
                    key = tuple(sorted(((v, e) for v, e in mono if e), key=lambda ve: _var_key(ve[0])))
                    clean[key] = clean.get(key, Fraction(0)) + c
                    if not clean[key]:
                        del clean[key]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "MPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def var(cls, name: str) -> "MPoly":
        return cls._raw({((name, 1),): Fraction(1)})

    @classmethod
    def const(cls, c) -> "MPoly":
        c = Fraction(c)
        return cls._raw({(): c} if c else {})

    @staticmethod
    def lift(x) -> "MPoly":
        if isinstance(x, MPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return MPoly.const(x)
        raise TypeError(f"cannot lift {type(x).__name__} to MPoly")

    # -- inspection
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not m for m in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((), Fraction(0))

    def variables(self) -> tuple:
        vs = {v for m in self._terms for v, _ in m}
        return tuple(sorted(vs, key=_var_key))

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e for _, e in m) for m in self._terms)

    def degree(self, var: str) -> int:
        if not self._terms:
            return -1
        return max(dict(m).get(var, 0) for m in self._terms)

    def coeff(self, var: str, k: int) -> "MPoly":
        """Coefficient of ``var**k`` as a polynomial in the other variables."""
        out = {}
        for m, c in self._terms.items():
            d = dict(m)
            if d.get(var, 0) == k:
                d.pop(var, None)
                out[tuple(sorted(d.items(), key=lambda ve: _var_key(ve[0])))] = c
        return MPoly._raw(out)

    def coefficients_in(self, var: str) -> list:
        """Coefficients in ``var``, lowest degree first."""
        return [self.coeff(var, k) for k in range(self.degree(var) + 1)]

    def homogeneous_part(self, deg: int) -> "MPoly":
        return MPoly._raw({m: c for m, c in self._terms.items() if sum(e for _, e in m) == deg})

    # -- arithmetic
    def __add__(self, other):
        if not isinstance(other, MPoly):
            if isinstance(other, (int, Fraction)):
                other = MPoly.const(other)
            else:
                return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return MPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            if isinstance(other, (int, Fraction)):
                other = MPoly.const(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return MPoly._raw({})
            return MPoly._raw({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, MPoly):
            return NotImplemented
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return MPoly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == MPoly.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- substitution
    def subs(self, values: Mapping[str, object]) -> "MPoly":
        """Substitute variables by rationals or polynomials."""
        out = MPoly._raw({})
        for m, c in self._terms.items():
            term = MPoly.const(c)
            rest = []
            for v, e in m:
                if v in values:
                    term = term * (MPoly.lift(values[v]) ** e)
                else:
                    rest.append((v, e))
            if rest:
                term = term * MPoly._raw({tuple(rest): Fraction(1)})
            out = out + term
        return out

    def evaluate(self, values: Mapping[str, object]) -> Fraction:
        p = self.subs(values)
        return p.constant_value()

    # -- display
    def _sorted_terms(self):
        order = self.variables()

        def key(item):
            m, _ = item
            d = dict(m)
            return (-sum(d.values()), tuple(-d.get(v, 0) for v in order))

        return sorted(self._terms.items(), key=key)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for m, c in self._sorted_terms():
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            if not mono:
                body = fmt_rational(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{fmt_rational(abs(c))}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"MPoly({self})"


def symbols(*names: str):
    out = tuple(MPoly.var(n) for n in names)
    return out[0] if len(out) == 1 else out


def lift_scalar(x):
    """Turn an int into a Fraction; leave Fractions and MPolys alone."""
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    return x


# ---------------------------------------------------------------------------
# univariate polynomials

class UPoly:
    """Univariate polynomial; coefficients stored lowest degree first.

    Coefficients are normally Fractions.  ``char_poly`` may also produce a
    UPoly with MPoly coefficients; field operations (division, gcd, Sturm)
    require Fractions.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [lift_scalar(c) for c in coeffs]
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> "UPoly":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "UPoly":
        p = cls([1])
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lc(self):
        if not self.coeffs:
            raise DegenerateInputError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = other if isinstance(other, UPoly) else UPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = other if isinstance(other, UPoly) else UPoly([other])
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UPoly):
            return UPoly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        r = UPoly([1])
        for _ in range(k):
            r = r * self
        return r

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UPoly":
        return UPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def divmod(self, other: "UPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        dq = other.degree
        lc = Fraction(other.lc())
        q = [Fraction(0)] * max(len(rem) - dq, 1)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] / lc
            if c:
                q[i - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return UPoly(q), UPoly(rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "UPoly":
        lc = Fraction(self.lc())
        return UPoly([Fraction(c) / lc for c in self.coeffs])

    def primitive(self) -> "UPoly":
        """Scale by a positive rational so the coefficients are coprime integers."""
        if self.is_zero():
            return self
        den = math.lcm(*(Fraction(c).denominator for c in self.coeffs))
        ints = [int(Fraction(c) * den) for c in self.coeffs]
        g = math.gcd(*ints)
        return UPoly([Fraction(v, g) for v in ints])

    def to_mpoly(self, var: str = "lam") -> MPoly:
        x = MPoly.var(var)
        acc = MPoly.const(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    @classmethod
    def from_mpoly(cls, p: MPoly, var: str) -> "UPoly":
        cs = []
        for c in p.coefficients_in(var):
            cs.append(c.constant_value() if c.is_constant() else c)
        return cls(cs)

    def __str__(self):
        return str(self.to_mpoly("X")) if all(isinstance(c, (int, Fraction)) for c in self.coeffs) \
            else " + ".join(f"({c})*X^{i}" for i, c in enumerate(self.coeffs) if not _is_zero(c)) or "0"

    def __repr__(self):
        return f"UPoly({[fmt_rational(c) if isinstance(c, (int, Fraction)) else str(c) for c in self.coeffs]})"


def upoly_gcd(p: UPoly, q: UPoly) -> UPoly:
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def squarefree(p: UPoly) -> bool:
    """True iff gcd(p, p') is a nonzero constant."""
    if p.is_zero():
        raise DegenerateInputError("squarefree() of the zero polynomial")
    return upoly_gcd(p, p.derivative()).degree == 0


def sturm_sequence(p: UPoly) -> list:
    """Sturm chain built from signed pseudo-remainders made primitive."""
    seq = [p.primitive(), p.derivative().primitive()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append((-r).primitive())
    return [s for s in seq if not s.is_zero()]


def _sign_changes(values) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: UPoly) -> int:
    """Number of distinct real roots of a squarefree polynomial."""
    if p.is_zero():
        raise DegenerateInputError("count_real_roots() of the zero polynomial")
    if not squarefree(p):
        raise NotSquarefreeError("count_real_roots() needs a squarefree polynomial")
    if p.degree == 0:
        return 0
    seq = sturm_sequence(p)
    at_pos = [s.lc() for s in seq]
    at_neg = [s.lc() * (-1) ** s.degree for s in seq]
    return _sign_changes(at_neg) - _sign_changes(at_pos)


def sturm_count_between(p: UPoly, a, b) -> int:
    """Distinct real roots in the half-open interval (a, b]."""
    seq = sturm_sequence(p)
    return _sign_changes([s(a) for s in seq]) - _sign_changes([s(b) for s in seq])


# ---------------------------------------------------------------------------
# matrices

class RingMatrix:
    """Immutable square matrix.  Indices are 0-based in code."""

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n == 0:
            raise DegenerateInputError("0x0 matrix")
        if any(len(r) != n for r in rows):
            raise DimensionMismatchError("matrix is not square")
        self.n = n
        self.rows = rows
        self._hash = None

    # -- constructors
    @classmethod
    def zeros(cls, n: int) -> "RingMatrix":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "RingMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, values: Sequence) -> "RingMatrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_function(cls, n: int, f: Callable[[int, int], object]) -> "RingMatrix":
        return cls([[f(i, j) for j in range(n)] for i in range(n)])

    # -- access
    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self) -> Iterator:
        for r in self.rows:
            yield from r

    def map(self, f) -> "RingMatrix":
        return RingMatrix([[f(x) for x in r] for r in self.rows])

    def to_lists(self) -> list:
        return [list(r) for r in self.rows]

    # -- arithmetic
    def _check(self, other):
        if not isinstance(other, RingMatrix):
            raise TypeError("expected a RingMatrix")
        if other.n != self.n:
            raise DimensionMismatchError(f"{self.n}x{self.n} vs {other.n}x{other.n}")

    def __add__(self, other):
        self._check(other)
        return RingMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._check(other)
        return RingMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return RingMatrix([[-a for a in r] for r in self.rows])

    def scale(self, c) -> "RingMatrix":
        return RingMatrix([[c * a for a in r] for r in self.rows])

    def __mul__(self, other):
        if not isinstance(other, RingMatrix):
            return self.scale(other)
        self._check(other)
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for col in cols:
                acc = 0
                for a, b in zip(r, col):
                    if not _is_zero(a) and not _is_zero(b):
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return RingMatrix(out)

    def __rmul__(self, c):
        return self.scale(c)

    def __matmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative matrix power")
        r = RingMatrix.identity(self.n)
        for _ in range(k):
            r = r * self
        return r

    def trace(self):
        acc = 0
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    def transpose(self) -> "RingMatrix":
        return RingMatrix(list(zip(*self.rows)))

    @property
    def T(self) -> "RingMatrix":
        return self.transpose()

    def is_zero(self) -> bool:
        return all(_is_zero(x) for x in self.entries())

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.n == other.n and all(
            _is_zero(a - b) for a, b in zip(self.entries(), other.entries()))

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(lift_scalar(x) for x in self.entries()))
        return self._hash

    def __repr__(self):
        body = "; ".join(", ".join(_fmt_entry(x) for x in r) for r in self.rows)
        return f"RingMatrix([{body}])"


def _fmt_entry(x) -> str:
    if isinstance(x, (int, Fraction)):
        return fmt_rational(x)
    return str(x)


def commutator(A: RingMatrix, B: RingMatrix) -> RingMatrix:
    A._check(B)
    return A * B - B * A


def trace_power(M: RingMatrix, k: int):
    if not isinstance(k, int) or k < 1:
        raise ValueError("trace_power needs k >= 1")
    return (M ** k).trace()


def char_poly(M: RingMatrix) -> UPoly:
    """Monic (-1)^n det(M - X I) by the Faddeev-LeVerrier recurrence."""
    n = M.n
    coeffs = [None] * (n + 1)
    coeffs[n] = Fraction(1)
    I = RingMatrix.identity(n)
    Mk = RingMatrix.zeros(n)
    for k in range(1, n + 1):
        Mk = M * Mk + I.scale(coeffs[n - k + 1])
        coeffs[n - k] = (M * Mk).trace() * Fraction(-1, k)
    return UPoly(coeffs)


def det_expansion(M: RingMatrix):
    """Determinant by cofactor expansion (test oracle; small n only)."""
    def rec(rows, cols):
        if len(rows) == 1:
            return M[rows[0], cols[0]]
        acc = 0
        r0 = rows[0]
        for idx, c in enumerate(cols):
            a = M[r0, c]
            if _is_zero(a):
                continue
            sub = rec(rows[1:], cols[:idx] + cols[idx + 1:])
            term = a * sub
            acc = acc + (term if idx % 2 == 0 else -term)
        return acc
    return rec(tuple(range(M.n)), tuple(range(M.n)))


def det_leibniz(M: RingMatrix):
    """Determinant by the permutation sum (another independent oracle)."""
    n = M.n
    acc = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = 1
        for i in range(n):
            prod = prod * M[i, perm[i]]
        acc = acc + (prod if inv % 2 == 0 else -prod)
    return acc


def char_poly_by_minors(M: RingMatrix) -> MPoly:
    """(-1)^n det(M - X I) via cofactor expansion, as a polynomial in ``X``."""
    X = MPoly.var("X")
    A = RingMatrix([[MPoly.lift(M[i, j]) - (X if i == j else 0) for j in range(M.n)] for i in range(M.n)])
    d = MPoly.lift(det_expansion(A))
    return d if M.n % 2 == 0 else -d


def rank_exact(rows: Sequence[Sequence]) -> int:
    """Rank of a rational matrix (any shape) by fraction-free elimination."""
    if isinstance(rows, RingMatrix):
        rows = rows.to_lists()
    mat = []
    for r in rows:
        fr = [Fraction(x) for x in r]
        den = math.lcm(*(x.denominator for x in fr)) if fr else 1
        mat.append([int(x * den) for x in fr])
    if not mat or not mat[0]:
        return 0
    m, ncols = len(mat), len(mat[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((r for r in range(rank, m) if mat[r][col] != 0), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        p = mat[rank][col]
        for r in range(rank + 1, m):
            a = mat[r][col]
            # Bareiss step: exact division by the previous pivot
            mat[r] = [(p * x - a * y) // prev for x, y in zip(mat[r], mat[rank])]
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def row_reduce(rows: Sequence[Sequence]) -> tuple:
    """Reduced row echelon form over Q; returns (rref rows, pivot columns)."""
    mat = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    ncols = len(mat[0]) if mat else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    return mat[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list:
    """Basis of the right kernel over Q."""
    if ncols is None:
        ncols = len(rows[0])
    rref, pivots = row_reduce(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(rref, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def inverse(M: RingMatrix) -> RingMatrix:
    n = M.n
    aug = [[Fraction(M[i, j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    rref, pivots = row_reduce(aug)
    if pivots[:n] != list(range(n)) or len(rref) < n:
        raise ZeroDivisionError("matrix is singular")
    return RingMatrix([r[n:] for r in rref[:n]])


def rational_roots(p: UPoly) -> list:
    """Distinct rational roots of a polynomial with rational coefficients."""
    if p.is_zero():
        raise DegenerateInputError("rational_roots() of the zero polynomial")
    q = p.primitive()
    roots = []
    low = 0
    while q[low] == 0:
        low += 1
    if low:
        roots.append(Fraction(0))
        q = UPoly(q.coeffs[low:])
    if q.degree < 1:
        return roots
    a0, an = int(q[0]), int(q.lc())

    def divisors(v):
        v = abs(v)
        small = [d for d in range(1, math.isqrt(v) + 1) if v % d == 0]
        return sorted(set(small + [v // d for d in small]))

    for num in divisors(a0):
        for den in divisors(an):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand not in roots and q(cand) == 0:
                    roots.append(cand)
    return sorted(roots)

"""Trace-form intertwiners S^k -> (S^k)*, their pairings with tensors, the
pairing matrices for S^3(sl(4)), and the transport map tpsi_v.

Pairing conventions.  A form is a sum of products of trace words in slots
x1..xk (the dual arguments) and X1..Xk.  On monomials the pairing averages
(``scale="mean"``) or sums (``scale="sum"``) the form over all placements of
the factors into the slots.  Forms written out already symmetric (the
degree 1 and 2 ones) are always averaged, which for them is plain
substitution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Mapping, Sequence

from .exact_algebra import RingMatrix, _is_zero, commutator, rank_exact
from .sl_basis import basis_e, sl_basis
from .sym_modules import (
    S3_NAMES,
    SymTensor,
    ad_unit,
    paper_vector,
)


# ---------------------------------------------------------------------------
# forms

@dataclass(frozen=True)
class TraceForm:
    name: str
    k: int
    terms: tuple  # ((coeff, (word, word, ...)), ...); a word is a tuple of slot names
    symmetrize: bool = True

    def __post_init__(self):
        slots = {f"x{i}" for i in range(1, self.k + 1)} | {f"X{i}" for i in range(1, self.k + 1)}
        for _, words in self.terms:
            used = [s for w in words for s in w]
            if sorted(used) != sorted(slots):
                raise ValueError(f"{self.name}: every slot must appear exactly once per term")

    def __str__(self):
        def w(word):
            return "Tr(" + "".join(word) + ")"
        return " + ".join(("" if c == 1 else f"{c}*") + "".join(w(x) for x in words) for c, words in self.terms)


def _form(name, k, *terms, symmetrize=True):
    out = []
    for t in terms:
        if isinstance(t[0], (int, Fraction)):
            c, words = t[0], t[1:]
        else:
            c, words = 1, t
        out.append((c, tuple(tuple(w.split()) for w in words)))
    return TraceForm(name, k, tuple(out), symmetrize)


P0 = _form("P0", 1, ("x1 X1",), symmetrize=False)

P_DEG2 = {
    "P1": _form("P1", 2, ("x1 X1 x2 X2",), ("x1 X2 x2 X1",), symmetrize=False),
    "P2": _form("P2", 2, ("x1 X1", "x2 X2"), ("x1 X2", "x2 X1"), symmetrize=False),
    "P3": _form("P3", 2, ("x1 x2 X1 X2",), ("x1 x2 X2 X1",), ("x2 x1 X1 X2",), ("x2 x1 X2 X1",), symmetrize=False),
    "P4": _form("P4", 2, ("x1 x2", "X1 X2"), symmetrize=False),
}

_T_WORDS = {
    1: ("x1 x2 x3 X1 X2 X3",),
    2: ("x1 x2 X1 x3 X2 X3",),
    3: ("x1 x2 X1 X2 x3 X3",),
    4: ("x1 X1 x2 X2 x3 X3",),
    5: ("x1 x2 x3 X1", "X2 X3"),
    6: ("x1 x2 X1 X2", "x3 X3"),
    7: ("x1 X1 X2 X3", "x2 x3"),
    8: ("x1 X1 x2 X2", "x3 X3"),
    9: ("x1 x2 x3", "X1 X2 X3"),
    10: ("x1 x2 X1", "x3 X2 X3"),
    11: ("x1 x2", "x3 X1", "X2 X3"),
    12: ("x1 X1", "x2 X2", "x3 X3"),
}

T_FORMS = {f"T{j}": _form(f"T{j}", 3, words) for j, words in _T_WORDS.items()}

# the degree 3 basis takes the columns 1, 2, 3, 4, 5, 8, 10, 9 of the T list
P3_COLUMNS = (1, 2, 3, 4, 5, 8, 10, 9)
P_DEG3 = {f"P{i + 1}": _form(f"P{i + 1}", 3, _T_WORDS[j]) for i, j in enumerate(P3_COLUMNS)}


def basis_forms(k: int, n: int | None = None) -> dict:
    """Intertwiner basis used for phi in degree k (P2 is dropped for n = 3)."""
    if k == 1:
        return {"P0": P0}
    if k == 2:
        if n == 3:
            return {k_: v for k_, v in P_DEG2.items() if k_ != "P2"}
        return dict(P_DEG2)
    if k == 3:
        return dict(P_DEG3)
    raise ValueError(f"no trace forms for degree {k}")


# ---------------------------------------------------------------------------
# evaluation

def _placements(factors: Sequence, same) -> list:
    """Distinct orderings of ``factors`` with their multiplicities."""
    k = len(factors)
    # class index of each factor, so equal factors are interchangeable
    cls = []
    reps = []
    for f in factors:
        for idx, r in enumerate(reps):
            if same(f, r):
                cls.append(idx)
                break
        else:
            reps.append(f)
            cls.append(len(reps) - 1)
    counts: dict = {}
    for p in permutations(range(k)):
        key = tuple(cls[i] for i in p)
        if key not in counts:
            counts[key] = [p, 0]
        counts[key][1] += 1
    return [(tuple(factors[i] for i in p), mult) for p, mult in counts.values()]


def _unit_word(word, slot) -> int:
    first = slot[word[0]]
    cur = first[1]
    for s in word[1:]:
        i, j = slot[s]
        if i != cur:
            return 0
        cur = j
    return 1 if cur == first[0] else 0


def _matrix_word(word, slot):
    M = slot[word[0]]
    for s in word[1:]:
        M = M * slot[s]
    return M.trace()


def _term_value(words, slot, word_fn):
    v = 1
    for w in words:
        x = word_fn(w, slot)
        if _is_zero(x):
            return 0
        v = v * x
    return v


def _weight(form: TraceForm, scale: str) -> Fraction:
    k = form.k
    if not form.symmetrize or scale == "mean":
        return Fraction(1, factorial(k) ** 2)
    if scale == "sum":
        return Fraction(1)
    raise ValueError(f"unknown scale {scale!r}")


def _pair_factors(forms: Sequence[TraceForm], xs: Sequence, Xs: Sequence, word_fn, same, scale,
                  placements_x=None) -> list:
    k = len(xs)
    out = [0] * len(forms)
    px = placements_x if placements_x is not None else _placements(xs, same)
    pX = _placements(Xs, same)
    for ax, mx in px:
        for aX, mX in pX:
            slot = {f"x{i + 1}": ax[i] for i in range(k)}
            slot.update({f"X{i + 1}": aX[i] for i in range(k)})
            mult = mx * mX
            for idx, form in enumerate(forms):
                acc = 0
                for c, words in form.terms:
                    v = _term_value(words, slot, word_fn)
                    if not _is_zero(v):
                        acc = acc + c * v
                if not _is_zero(acc):
                    out[idx] = out[idx] + mult * acc
    if scale == "raw":
        return out
    return [o * _weight(f, scale) for o, f in zip(out, forms)]


def _same_unit(a, b):
    return a == b


def _same_matrix(a, b):
    return a is b or a == b


def eval_forms(forms: Sequence[TraceForm], s: SymTensor, t: SymTensor, scale: str = "mean") -> list:
    """<P(s), t> for several forms at once (s, t over matrix-unit monomials)."""
    for f in forms:
        if f.k != s.k or f.k != t.k:
            raise ValueError(f"degree mismatch: form {f.name} has degree {f.k}, tensors {s.k}, {t.k}")
    totals = [0] * len(forms)
    cache: dict = {}
    for m, c in s.items():
        for m2, d in t.items():
            key = (m, m2)
            if key not in cache:
                cache[key] = _pair_factors(forms, m, m2, _unit_word, _same_unit, scale)
            vals = cache[key]
            for i, v in enumerate(vals):
                if not _is_zero(v):
                    totals[i] = totals[i] + c * d * v
    return [Fraction(x) if isinstance(x, int) else x for x in totals]


def eval_form(P: TraceForm, s: SymTensor, t: SymTensor, scale: str = "mean"):
    return eval_forms([P], s, t, scale)[0]


def eval_form_matrices(P: TraceForm, xs: Sequence[RingMatrix], Xs: Sequence[RingMatrix], scale: str = "mean"):
    """The pairing of the symmetric products xs[0]...xs[k-1] and Xs[0]...Xs[k-1]."""
    if len(xs) != P.k or len(Xs) != P.k:
        raise ValueError("degree mismatch")
    return _pair_factors([P], list(xs), list(Xs), _matrix_word, _same_matrix, scale)[0]


def dual_transpose(t: SymTensor) -> SymTensor:
    """Transpose every factor: (e_i1j1 ... e_ikjk)^t = e_j1i1 ... e_jkik."""
    return t.map_units(lambda u: (u[1], u[0]))


# ---------------------------------------------------------------------------
# pairing matrices

PAPER_M = (
    (0, 0, 0, 36, 0, 0, 0, 36, 0, 0, 0, 36),
    (0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 12),
    (0, 1, 1, 3, 0, 1, 0, 4, 0, 1, 0, 6),
    (0, 0, 4, 0, 0, 4, 0, 4, 0, 0, 0, 6),
    (0, 1, 0, 0, 0, 1, 0, 2, 0, 0, 0, 6),
    (1, 1, 2, 0, 2, 3, 2, 2, 0, 0, 4, 6),
    (1, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 6),
    (3, 0, 0, 0, 0, 3, 0, 0, 9, 0, 0, 6),
)

PAPER_N = (
    (0, 0, 0, 36, 0, 36, 0, 0),
    (0, 0, 0, 0, 0, 4, 0, 0),
    (0, 1, 1, 3, 0, 4, 1, 0),
    (0, 0, 4, 0, 0, 4, 0, 0),
    (0, 1, 0, 0, 0, 2, 0, 0),
    (1, 1, 2, 0, 2, 2, 0, 0),
    (1, 0, 0, 0, 0, 0, 0, 0),
    (3, 0, 0, 0, 0, 0, 0, 9),
)

# row order of the pairing matrix
ROW_VECTORS = S3_NAMES


@dataclass(frozen=True)
class PairingMatrix:
    row_names: tuple
    col_names: tuple
    entries: tuple
    scale: str = "sum"

    def rank(self) -> int:
        return rank_exact(self.entries)

    def columns(self, cols: Sequence[int], names: Sequence[str] | None = None) -> "PairingMatrix":
        """Sub-matrix from 1-based column indices."""
        entries = tuple(tuple(r[c - 1] for c in cols) for r in self.entries)
        names = tuple(names) if names else tuple(self.col_names[c - 1] for c in cols)
        return PairingMatrix(self.row_names, names, entries, self.scale)

    def mismatches(self, expected: Sequence[Sequence]) -> list:
        """(row, column, got, expected), 1-based, for every differing entry."""
        out = []
        for i, (r, e) in enumerate(zip(self.entries, expected)):
            for j, (a, b) in enumerate(zip(r, e)):
                if a != b:
                    out.append((i + 1, j + 1, a, Fraction(b)))
        return out


def build_M(scale: str = "sum", verbatim: bool = False, vectors: Mapping | None = None) -> PairingMatrix:
    """Entries <T_j(w), w^t> for the eight S^3(sl(4)) highest weight vectors."""
    forms = [T_FORMS[f"T{j}"] for j in range(1, 13)]
    rows = []
    for name in ROW_VECTORS:
        w = vectors[name] if vectors else paper_vector(name, 4, verbatim=verbatim)
        rows.append(tuple(eval_forms(forms, w, dual_transpose(w), scale)))
    return PairingMatrix(ROW_VECTORS, tuple(f.name for f in forms), tuple(rows), scale)


def build_N(M: PairingMatrix | None = None) -> PairingMatrix:
    M = M if M is not None else build_M()
    return M.columns(P3_COLUMNS, names=tuple(P_DEG3))


def paper_pairing_matrix() -> PairingMatrix:
    return PairingMatrix(ROW_VECTORS, tuple(T_FORMS), tuple(tuple(Fraction(x) for x in r) for r in PAPER_M))


# ---------------------------------------------------------------------------
# S^2 evaluation table

def sl_square_basis(n: int) -> list:
    """Products b_i . b_j (i <= j) of the sl(n) basis, as tensors."""
    basis = [SymTensor.from_matrix(b) for b in sl_basis(n)]
    return [basis[i] * basis[j] for i in range(len(basis)) for j in range(i, len(basis))]


def functional_on(P: TraceForm, v: SymTensor, tests: Sequence[SymTensor], scale: str = "mean") -> list:
    return [eval_form(P, v, t, scale) for t in tests]


@dataclass(frozen=True)
class TableEntry:
    statement: str
    computed: object
    expected: object  # a value, "zero", "nonzero", or None when no value is stated

    @property
    def ok(self) -> bool:
        if self.expected == "zero":
            return self.computed == 0
        if self.expected == "nonzero":
            return self.computed != 0
        if self.expected is None:
            return True
        return self.computed == self.expected


def s2_evaluation_table(n: int) -> list:
    """The four facts separating P1..P4 on the S^2(sl(n)) highest weight vectors.

    "P(v) = 0" is tested against every product of two sl(n) basis elements;
    ``computed`` is then the number of test tensors with a nonzero pairing.
    """
    tests = sl_square_basis(n)
    P = P_DEG2
    E = lambda i, j: SymTensor.unit(i, j, n)  # noqa: E731
    out = []

    def vanish(name, vname):
        v = paper_vector(vname, n)
        nz = sum(1 for x in functional_on(P[name], v, tests) if x != 0)
        out.append(TableEntry(f"{name}({vname}) = 0", nz, "zero"))

    v = paper_vector("v2002", n)
    for name in ("P2", "P3", "P4"):
        vanish(name, "v2002")
    out.append(TableEntry(f"<P1(v2002), e{n}1.e{n}1> = 1",
                          eval_form(P["P1"], v, E(n, 1) * E(n, 1)), Fraction(1)))
    if n > 3:
        v = paper_vector("v0110", n)
        for name in ("P3", "P4"):
            vanish(name, "v0110")
        out.append(TableEntry(f"<P2(v0110), e{n}2.e{n - 1}1> = 4",
                              eval_form(P["P2"], v, E(n, 2) * E(n - 1, 1)), Fraction(4)))
    v = paper_vector("v1001", n)
    vanish("P4", "v1001")
    out.append(TableEntry(f"<P3(v1001), e{n}2.e21> != 0",
                          eval_form(P["P3"], v, E(n, 2) * E(2, 1)), "nonzero"))
    v = paper_vector("v0000", n)
    nz = sum(1 for x in functional_on(P["P4"], v, tests) if x != 0)
    out.append(TableEntry("P4(v0000) != 0", nz, "nonzero"))
    return out


def s2_intertwiner_rank(n: int, names: Sequence[str] = ("P1", "P2", "P3", "P4")) -> int:
    """Rank of the given forms as maps S^2(sl(n)) -> S^2(sl(n))*, read off
    their values on each highest weight vector against all test tensors."""
    tests = sl_square_basis(n)
    vnames = ["v2002"] + (["v0110"] if n > 3 else []) + ["v1001", "v0000"]
    rows = []
    for name in names:
        row = []
        for vn in vnames:
            row += functional_on(P_DEG2[name], paper_vector(vn, n), tests)
        rows.append(row)
    return rank_exact(rows)


# ---------------------------------------------------------------------------
# transport

@dataclass(frozen=True)
class FormFunctional:
    """f = sum_j coeff_j P_j(xi . ... . xi), a functional on S^k."""

    xi: RingMatrix
    terms: tuple  # ((coeff, TraceForm), ...)
    scale: str = "mean"

    @property
    def k(self) -> int:
        return self.terms[0][1].k

    def __call__(self, v) -> object:
        xs = [self.xi] * self.k
        acc = 0
        for coeff, factors in _factor_sum(v):
            for c, form in self.terms:
                val = eval_form_matrices(form, xs, list(factors), self.scale)
                if not _is_zero(val):
                    acc = acc + coeff * c * val
        return acc


def _factor_sum(v) -> list:
    """Normalize a tensor to [(coeff, (matrix, ...)), ...]."""
    if isinstance(v, SymTensor):
        n = v.n
        return [(c, tuple(basis_e(i, j, n) for i, j in m)) for m, c in v.items()]
    return list(v)


def ad_factor_sum(Y: RingMatrix, v) -> list:
    """Leibniz action of ad_Y on a sum of symmetric products of matrices."""
    out = []
    for c, factors in _factor_sum(v):
        for r in range(len(factors)):
            new = factors[:r] + (commutator(Y, factors[r]),) + factors[r + 1:]
            if not any(f.is_zero() for f in new):
                out.append((c, new))
    return out


class TransportError(AssertionError):
    pass


def _is_rational_matrix(M: RingMatrix) -> bool:
    return all(isinstance(x, (int, Fraction)) for x in M.entries())


def _to_int(M: RingMatrix):
    """(integer rows, d) with M = rows / d."""
    d = math.lcm(*(Fraction(x).denominator for x in M.entries()))
    return tuple(tuple(int(Fraction(x) * d) for x in r) for r in M.rows), d


def _imul(A, B):
    cols = tuple(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in A)


def _iword(word, slot):
    M = slot[word[0]]
    for s in word[1:-1]:
        M = _imul(M, slot[s])
    if len(word) == 1:
        return sum(M[i][i] for i in range(len(M)))
    Z = slot[word[-1]]
    n = len(M)
    return sum(M[i][j] * Z[j][i] for i in range(n) for j in range(n))


def _iunit_bracket(a, b, M):
    """[e_ab, M] on integer rows (0-based a, b)."""
    n = len(M)
    rows = [[0] * n for _ in range(n)]
    for j in range(n):
        rows[a][j] += M[b][j]
    for i in range(n):
        rows[i][b] -= M[i][a]
    return tuple(tuple(r) for r in rows)


def _oracle_int(v, f: "FormFunctional") -> RingMatrix:
    n, k = f.xi.n, f.k
    xi_i, dxi = _to_int(f.xi)
    terms = []
    for c, factors in _factor_sum(v):
        conv = [_to_int(M) for M in factors]
        den = 1
        for _, d in conv:
            den *= d
        terms.append((Fraction(c) / den, tuple(m for m, _ in conv)))
    forms = [P for _, P in f.terms]
    weights = [Fraction(cf) * _weight(P, f.scale) / dxi ** k for cf, P in f.terms]
    xs = [xi_i] * k
    px = _placements(xs, _same_matrix)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            acc = Fraction(0)
            for c, factors in terms:
                for r in range(len(factors)):
                    A = _iunit_bracket(a, b, factors[r])
                    if not any(any(row) for row in A):
                        continue
                    Xs = factors[:r] + (A,) + factors[r + 1:]
                    vals = _pair_factors(forms, xs, Xs, _iword, _same_matrix, "raw", placements_x=px)
                    for val, w in zip(vals, weights):
                        if val:
                            acc += c * w * val
            rows[b][a] = acc
    return RingMatrix(rows)


def transport_oracle(v, f: FormFunctional) -> RingMatrix:
    """eta with Tr(eta Y) = f(ad_Y v) for all Y, read off the matrix units.

    The trace of eta equals f(ad_I v) = 0; a nonzero trace is reported as an
    internal error, never projected away.
    """
    n = f.xi.n
    rows = [[0] * n for _ in range(n)]
    if not isinstance(v, SymTensor) and _is_rational_matrix(f.xi) and all(
            _is_rational_matrix(M) for _, fs in v for M in fs) and all(
            isinstance(c, (int, Fraction)) for c, _ in f.terms):
        eta = _oracle_int(v, f)
    elif isinstance(v, SymTensor):
        # exact unit arithmetic for the action, matrices only for the pairing
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                rows[b - 1][a - 1] = f(ad_unit(a, b, v))
        eta = RingMatrix(rows)
    else:
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                rows[b - 1][a - 1] = f(ad_factor_sum(basis_e(a, b, n), v))
        eta = RingMatrix(rows)
    tr = eta.trace()
    if not _is_zero(tr):
        raise TransportError(f"transport has trace {tr}")
    return eta


def power_tensor(X: RingMatrix, k: int) -> list:
    """X . X ... X (k factors) as a factor sum."""
    return [(1, (X,) * k)]


def oracle_forms(kind: str, X: RingMatrix, xi: RingMatrix, n: int | None = None) -> dict:
    """tpsi_v(P(xi^k)) for each basis form, by the oracle, with v = X^k."""
    k = _KIND_DEGREE[kind]
    v = power_tensor(X, k)
    return {name: transport_oracle(v, FormFunctional(xi, ((1, P),)))
            for name, P in basis_forms(k, None).items()}


_KIND_DEGREE = {"degree1": 1, "degree2": 2, "degree3": 3}


def closed_forms(kind: str, X: RingMatrix, xi: RingMatrix) -> dict:
    """The closed expressions of tpsi_v(P_j(xi^k)) for v = X^k."""
    br = commutator
    if kind == "degree1":
        return {"P0": br(X, xi)}
    if kind == "degree2":
        X2, x2 = X * X, xi * xi
        return {
            "P1": br(X, xi * X * xi).scale(4),
            "P2": br(X, xi).scale(4 * (xi * X).trace()),
            "P3": br(X2, x2).scale(4),
            "P4": RingMatrix.zeros(X.n),
        }
    if kind == "degree3":
        X2, x2 = X * X, xi * xi
        X3, x3 = X2 * X, x2 * xi
        return {
            "P1": br(X3, x3),
            "P2": br(X2 * x2 * X, xi) + br(X * xi * X2, x2),
            "P3": br(X2 * xi * X, x2) + br(X * x2 * X2, xi),
            "P4": br(X * xi * X * xi * X, xi).scale(3),
            "P5": br(X, x3).scale(X2.trace()),
            "P6": br(X * xi * X, xi).scale(2 * (xi * X).trace()) + br(X, xi).scale((xi * X * xi * X).trace()),
            "P7": br(X, x2).scale((xi * X2).trace()) + br(X2, xi).scale((x2 * X).trace()),
            "P8": RingMatrix.zeros(X.n),
        }
    raise ValueError(f"unknown kind {kind!r}")


def transport_closed(kind: str, X: RingMatrix, xi: RingMatrix, coeffs: Mapping) -> RingMatrix:
    """sum_j coeffs[P_j] * closed_j; missing coefficients count as zero."""
    forms = closed_forms(kind, X, xi)
    out = RingMatrix.zeros(X.n)
    for name, M in forms.items():
        c = coeffs.get(name, 0)
        if not _is_zero(c):
            out = out + M.scale(c)
    return out


@dataclass
class CrossCheck:
    kind: str
    agree: dict = field(default_factory=dict)
    closed: dict = field(default_factory=dict)
    oracle: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.agree.values())


def closed_vs_oracle(X: RingMatrix, xi: RingMatrix, kind: str) -> CrossCheck:
    closed = closed_forms(kind, X, xi)
    oracle = oracle_forms(kind, X, xi)
    agree = {name: closed[name] == oracle[name] for name in closed}
    return CrossCheck(kind, agree, closed, oracle)

"""sl(n) as traceless matrices: matrix units, real block forms, the
reflection across the second diagonal, and genericity classes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact_algebra import (
    RingMatrix,
    _is_zero,
    char_poly,
    count_real_roots,
    parse_rational,
    rank_exact,
    squarefree,
)


class NotTracelessError(ValueError):
    def __init__(self, trace):
        super().__init__(f"matrix has trace {trace}, expected 0")
        self.trace = trace


class SlMatrix(RingMatrix):
    """A RingMatrix whose trace is exactly zero."""

    __slots__ = ()

    def __init__(self, rows):
        super().__init__(rows.rows if isinstance(rows, RingMatrix) else rows)
        tr = self.trace()
        if not _is_zero(tr):
            raise NotTracelessError(tr)


def as_sl(M) -> SlMatrix:
    return M if isinstance(M, SlMatrix) else SlMatrix(M)


def basis_e(i: int, j: int, n: int) -> RingMatrix:
    """Matrix unit e_ij (1-based).  Diagonal units are not traceless."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"e_{i}{j} out of range for n={n}")
    return RingMatrix([[1 if (r == i - 1 and c == j - 1) else 0 for c in range(n)] for r in range(n)])


def unit_combination(terms, n: int) -> RingMatrix:
    """Sum of c * e_ij over ``terms`` given as {(i, j): c} or [(c, i, j), ...]."""
    rows = [[0] * n for _ in range(n)]
    items = terms.items() if isinstance(terms, dict) else (((i, j), c) for c, i, j in terms)
    for (i, j), c in items:
        rows[i - 1][j - 1] = rows[i - 1][j - 1] + c
    return RingMatrix(rows)


def sl_basis(n: int) -> list:
    """Off-diagonal units followed by h_i = e_ii - e_(i+1)(i+1)."""
    out = [basis_e(i, j, n) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    out += [basis_e(i, i, n) - basis_e(i + 1, i + 1, n) for i in range(1, n)]
    return out


@dataclass(frozen=True)
class BlockSpec:
    real_eigs: tuple = ()
    complex_blocks: tuple = ()

    def __post_init__(self):
        reals = tuple(parse_rational(c) for c in self.real_eigs)
        blocks = tuple((parse_rational(a), parse_rational(b)) for a, b in self.complex_blocks)
        object.__setattr__(self, "real_eigs", reals)
        object.__setattr__(self, "complex_blocks", blocks)
        if self.n == 0:
            raise ValueError("empty block spec")
        if any(b == 0 for _, b in blocks):
            raise ValueError("complex block with b = 0")
        tr = sum(reals, Fraction(0)) + 2 * sum((a for a, _ in blocks), Fraction(0))
        if tr != 0:
            raise NotTracelessError(tr)

    @property
    def r(self) -> int:
        return len(self.real_eigs)

    @property
    def s(self) -> int:
        return len(self.complex_blocks)

    @property
    def n(self) -> int:
        return self.r + 2 * self.s


def block_matrix(spec: BlockSpec) -> SlMatrix:
    """diag(c_1..c_r) followed by 2x2 blocks [[a, b], [-b, a]]."""
    n = spec.n
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i, c in enumerate(spec.real_eigs):
        rows[i][i] = c
    off = spec.r
    for k, (a, b) in enumerate(spec.complex_blocks):
        p = off + 2 * k
        rows[p][p], rows[p][p + 1] = a, b
        rows[p + 1][p], rows[p + 1][p + 1] = -b, a
    return SlMatrix(rows)


def s_involution(X: RingMatrix) -> RingMatrix:
    """Reflection across the second diagonal: x^s_ij = x_(n+1-j)(n+1-i)."""
    n = X.n
    out = RingMatrix([[X[n - 1 - j, n - 1 - i] for j in range(n)] for i in range(n)])
    return SlMatrix(out) if isinstance(X, SlMatrix) else out


def s_unit(i: int, j: int, n: int) -> tuple:
    return (n + 1 - j, n + 1 - i)


@dataclass(frozen=True)
class GenericityClass:
    tag: str  # "Generic" or "NotGeneric"
    r: int | None = None
    s: int | None = None

    @property
    def generic(self) -> bool:
        return self.tag == "Generic"

    def __str__(self):
        return f"Generic({self.r},{self.s})" if self.generic else "NotGeneric"


def classify(xi: RingMatrix) -> GenericityClass:
    """Omega membership for a rational traceless matrix."""
    as_sl(xi)
    p = char_poly(xi)
    if not squarefree(p):
        return GenericityClass("NotGeneric")
    r = count_real_roots(p)
    return GenericityClass("Generic", r, (xi.n - r) // 2)


def random_rational_matrix(rng, n: int, lo: int = -3, hi: int = 3, dens: Sequence[int] = (1, 2, 3)) -> RingMatrix:
    return RingMatrix([[Fraction(rng.randint(lo, hi), rng.choice(dens)) for _ in range(n)] for _ in range(n)])


def random_sl(rng, n: int, **kw) -> SlMatrix:
    M = random_rational_matrix(rng, n, **kw)
    tr = M.trace()
    rows = M.to_lists()
    rows[n - 1][n - 1] -= tr
    return SlMatrix(rows)


def random_invertible(rng, n: int, **kw) -> RingMatrix:
    while True:
        g = random_rational_matrix(rng, n, **kw)
        if rank_exact(g) == n:
            return g

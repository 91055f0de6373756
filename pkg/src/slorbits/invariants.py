"""Trace invariants, Newton identities, and the almost-separation test."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .exact_algebra import (
    DimensionMismatchError,
    RingMatrix,
    UPoly,
    char_poly,
    inverse,
    nullspace,
    rational_roots,
)
from .sl_basis import as_sl, classify


@dataclass(frozen=True)
class InvariantVector:
    """T_2 .. T_n of a traceless matrix (T_1 = 0 is implicit)."""

    n: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} invariants, got {len(self.values)}")

    def T(self, k: int):
        if k == 1:
            return Fraction(0)
        return self.values[k - 2]


@dataclass(frozen=True)
class NewtonCoeffs:
    """alpha_0 .. alpha_(n-1) with C(X) = X^n + sum_k (-1)^k alpha_(n-k) X^(n-k).

    So alpha_(n-k) is the k-th elementary symmetric function of the roots.
    """

    alphas: tuple

    @property
    def n(self) -> int:
        return len(self.alphas)

    def elementary(self, k: int):
        if k == 0:
            return Fraction(1)
        return self.alphas[self.n - k]

    def poly(self) -> UPoly:
        n = self.n
        cs = [Fraction(0)] * (n + 1)
        cs[n] = Fraction(1)
        for k in range(1, n + 1):
            cs[n - k] = (-1) ** k * self.elementary(k)
        return UPoly(cs)

    @classmethod
    def from_poly(cls, p: UPoly) -> "NewtonCoeffs":
        n = p.degree
        if p.lc() != 1:
            raise ValueError("expected a monic polynomial")
        return cls(tuple((-1) ** (n - i) * p[i] for i in range(n)))


def trace_invariants(xi: RingMatrix) -> InvariantVector:
    as_sl(xi)
    vals = []
    P = xi
    for _ in range(2, xi.n + 1):
        P = P * xi
        vals.append(P.trace())
    return InvariantVector(xi.n, tuple(vals))


def power_sums_to_coeffs(p: Sequence, n: int | None = None) -> NewtonCoeffs:
    """Newton: k e_k = sum_{i=1..k} (-1)^(i-1) e_(k-i) p_i."""
    n = len(p) if n is None else n
    if len(p) < n:
        raise ValueError(f"need {n} power sums, got {len(p)}")
    e = [Fraction(1)]
    for k in range(1, n + 1):
        acc = Fraction(0)
        for i in range(1, k + 1):
            term = e[k - i] * p[i - 1]
            acc = acc + term if i % 2 == 1 else acc - term
        e.append(acc * Fraction(1, k))
    return NewtonCoeffs(tuple(e[n - i] for i in range(n)))


def coeffs_to_power_sums(c: NewtonCoeffs) -> tuple:
    """p_k = sum_{i=1..k-1} (-1)^(i-1) e_i p_(k-i) + (-1)^(k-1) k e_k."""
    n = c.n
    p = []
    for k in range(1, n + 1):
        acc = (-1) ** (k - 1) * k * c.elementary(k)
        for i in range(1, k):
            term = c.elementary(i) * p[k - i - 1]
            acc = acc + term if i % 2 == 1 else acc - term
        p.append(acc)
    return tuple(p)


def _same_n(a: RingMatrix, b: RingMatrix):
    if a.n != b.n:
        raise DimensionMismatchError(f"n={a.n} vs n={b.n}")


def same_char_poly(xi: RingMatrix, xi2: RingMatrix) -> bool:
    _same_n(xi, xi2)
    return trace_invariants(xi) == trace_invariants(xi2)


class Verdict(str, Enum):
    DIFFERENT = "Different"
    SINGLE_ORBIT = "SameInvariants_SingleOrbit"
    POSSIBLE_PAIR = "SameInvariants_PossiblePair"
    NOT_GENERIC = "NotGeneric"


def almost_separate(xi: RingMatrix, xi2: RingMatrix) -> Verdict:
    _same_n(xi, xi2)
    c1, c2 = classify(xi), classify(xi2)
    if not (c1.generic and c2.generic):
        return Verdict.NOT_GENERIC
    if trace_invariants(xi) != trace_invariants(xi2):
        return Verdict.DIFFERENT
    return Verdict.SINGLE_ORBIT if c1.r > 0 else Verdict.POSSIBLE_PAIR


def conjugating_element(xi: RingMatrix, xi2: RingMatrix) -> RingMatrix | None:
    """g with g xi g^-1 = xi2, when both have the same n distinct rational
    eigenvalues; None otherwise."""
    _same_n(xi, xi2)
    n = xi.n
    p = char_poly(xi)
    if p != char_poly(xi2):
        return None
    roots = rational_roots(p)
    if len(roots) != n:
        return None

    def eigvecs(M):
        cols = []
        for r in roots:
            rows = [[M[i, j] - (r if i == j else 0) for j in range(n)] for i in range(n)]
            cols.append(nullspace(rows, n)[0])
        return RingMatrix([[cols[j][i] for j in range(n)] for i in range(n)])

    V1, V2 = eigvecs(xi), eigvecs(xi2)
    return V2 * inverse(V1)

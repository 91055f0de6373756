"""Exact computations on coadjoint orbits of sl(n, R) and their overalgebras."""

from .exact_algebra import MPoly, RingMatrix, UPoly, char_poly, fmt_rational, parse_rational, rank_exact
from .invariants import Verdict, almost_separate, trace_invariants
from .sl_basis import BlockSpec, SlMatrix, block_matrix, classify

__version__ = "0.1.0"

__all__ = [
    "BlockSpec",
    "MPoly",
    "RingMatrix",
    "SlMatrix",
    "UPoly",
    "Verdict",
    "almost_separate",
    "block_matrix",
    "char_poly",
    "classify",
    "fmt_rational",
    "parse_rational",
    "rank_exact",
    "trace_invariants",
]

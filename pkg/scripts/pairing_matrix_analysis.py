"""Compare the literal pairing matrix M with the printed one, and test the
reading in which each printed row pairs a single monomial of the vector
with its own transpose."""

import argparse
from fractions import Fraction

from slorbits.exact_algebra import fmt_rational
from slorbits.intertwiners import PAPER_M, T_FORMS, build_M, build_N, dual_transpose, eval_forms, paper_pairing_matrix
from slorbits.sym_modules import SymTensor, paper_vector

FORMS = [T_FORMS[f"T{j}"] for j in range(1, 13)]


def probe_rows(name):
    """(monomial, row) for every monomial of the vector, paired with its own transpose."""
    w = paper_vector(name, 4)
    out = []
    for mono in sorted(w.terms):
        s = SymTensor(3, 4, {mono: 1})
        out.append((mono, eval_forms(FORMS, s, dual_transpose(s), "sum")))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--scale", default="sum", choices=["sum", "mean"])
    args = ap.parse_args()

    M = build_M(args.scale)
    print(f"literal M ({args.scale} over slot placements), rank {M.rank()}, rank N {build_N(M).rank()}")
    print(f"printed M rank {paper_pairing_matrix().rank()}")
    for name, got, shown in zip(M.row_names, M.entries, PAPER_M):
        flag = "==" if tuple(got) == tuple(Fraction(x) for x in shown) else "!="
        print(f"  {name:6} {flag} {[fmt_rational(x) for x in got]}")
        if flag == "!=":
            print(f"  {'':6}    printed {list(shown)}")

    print("\nsingle-monomial reading (sum scale):")
    total = 0
    for name, shown in zip(M.row_names, PAPER_M):
        best = max(probe_rows(name), key=lambda mr: sum(a == b for a, b in zip(mr[1], shown)))
        hits = sum(a == b for a, b in zip(best[1], shown))
        total += hits
        misses = [f"T{j + 1}: {fmt_rational(a)} vs {b}" for j, (a, b) in enumerate(zip(best[1], shown)) if a != b]
        mono = ".".join(f"e{i}{j}" for i, j in best[0])
        print(f"  {name:6} best monomial {mono:14} {hits}/12  {'; '.join(misses)}")
    print(f"  total {total}/96")


if __name__ == "__main__":
    main()

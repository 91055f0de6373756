"""Tabulate the two families of generic matrices whose surviving invariants
agree while their determinants differ."""

import argparse

from slorbits.exact_algebra import fmt_rational as fr
from slorbits.overalgebra import admissible_parameters, family_report


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=8)
    ap.add_argument("--tail", type=int, nargs="*", default=[3, -3])
    args = ap.parse_args()

    rep = family_report("degree2", admissible_parameters("degree2", args.count), args.tail)
    print(f"degree 2, tail {args.tail}")
    print(f"{'t':>10} {'u':>8} {'T2':>5} {'det':>14} {'t(1-t^2)prod c':>16}  class")
    for m in rep.members:
        print(f"{fr(m.t):>10} {fr(m.extras['u']):>8} {fr(m.T2):>5} {fr(m.det):>14} {fr(m.det_formula):>16}  {m.genericity}")

    ts = [0] + admissible_parameters("degree3", args.count)
    rep = family_report("degree3", ts)
    print("\ndegree 3")
    print(f"{'t':>10} {'p':>8} {'q':>8} {'T2':>3} {'T3':>3} {'det':>16} {'(1-t^2)^2':>20}")
    for m in rep.members:
        print(f"{fr(m.t):>10} {fr(m.extras['p']):>8} {fr(m.extras['q']):>8} {fr(m.T2):>3} {fr(m.T3):>3} "
              f"{fr(m.det):>16} {fr(m.det_formula_alt):>20}")
    print(f"outside Omega: {[fr(t) for t in rep.boundary]}")
    print(f"report ok: {rep.ok}")


if __name__ == "__main__":
    main()

"""Print the coefficient elimination for the degree 2 and degree 3 sections,
step by step, in either mode."""

import argparse

from slorbits.overalgebra import elimination_degree2, elimination_degree3


def dump(rep):
    print(f"== {rep.name}, n = {rep.n}, mode {rep.mode}")
    for i, st in enumerate(rep.steps, 1):
        held = {True: "holds", False: "FAILS", None: "not printed"}[st.identity_holds]
        print(f"  {i}. {st.label}  (assumes {sorted(st.assumed) or 'nothing'})")
        print(f"     det(zeta - lam I) = {st.det}")
        if st.displayed is not None:
            print(f"     printed identity {held}: {st.displayed}")
        for pc in st.psi_checks:
            print(f"     {pc.label}: {'matches' if pc.matches else 'differs from'} the printed matrix")
        for _, c, why in st.added:
            print(f"     => {c} = 0   [{why}]")
        for r in st.residual:
            print(f"     unresolved: {r} = 0")
    print(f"  solution: {rep.system.constraints()}  free: {rep.system.free()}  ok: {rep.solution_ok}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--degree", type=int, choices=[2, 3], default=None)
    ap.add_argument("--mode", choices=["sequential", "joint"], default="joint")
    ap.add_argument("--n", type=int, nargs="*", default=[3, 4, 5, 6])
    args = ap.parse_args()
    if args.degree in (None, 2):
        for n in args.n:
            dump(elimination_degree2(n, args.mode))
    if args.degree in (None, 3):
        dump(elimination_degree3(args.mode))


if __name__ == "__main__":
    main()

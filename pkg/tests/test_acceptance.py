"""Acceptance criteria 1-10, all at exact tolerance.

Each criterion prints one line ``criterion N: PASS|FAIL (seconds) detail``.
Run directly with ``python tests/test_acceptance.py`` for the summary alone.
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from slorbits import intertwiners as itw  # noqa: E402
from slorbits import overalgebra as ova  # noqa: E402
from slorbits.exact_algebra import (  # noqa: E402
    RingMatrix,
    UPoly,
    char_poly,
    commutator,
    count_real_roots,
    inverse,
    sturm_count_between,
    trace_power,
)
from slorbits.invariants import (  # noqa: E402
    NewtonCoeffs,
    Verdict,
    almost_separate,
    coeffs_to_power_sums,
    power_sums_to_coeffs,
    trace_invariants,
)
from slorbits.sl_basis import classify, random_invertible, random_sl  # noqa: E402
from slorbits.sym_modules import (  # noqa: E402
    S2_NAMES,
    S3_NAMES,
    SymTensor,
    ad_on_tensor,
    decomposition_report,
    is_highest_weight,
    paper_vector,
    proportional,
    s_on_tensor,
    vector_label,
    weight_of,
)


def criterion_1():
    M = itw.build_M()
    mism = M.mismatches(itw.PAPER_M)
    rM, rN = M.rank(), itw.build_N(M).rank()
    ok = not mism and rM == 8 and rN == 8
    rows = sorted({r for r, *_ in mism})
    return ok, f"{96 - len(mism)}/96 entries equal (rows {rows} differ), rank M = {rM}, rank N = {rN}", 10


def criterion_2():
    notes = []
    ok = True
    for n in range(3, 9):
        r = decomposition_report(2, n, strict=False)
        ok &= r.ok and len(r.constituents) == (3 if n == 3 else 4)
        notes.append(f"n={n}: {r.total}/{r.dim_sym}")
    r = decomposition_report(3, 4, strict=False)
    dims = sorted((c.dim for c in r.constituents), reverse=True)
    ok &= r.ok and r.total == 680 and dims == [300, 175, 84, 45, 45, 15, 15, 1]
    notes.append(f"S^3(sl(4)): {dims} = {r.total}")
    return ok, "; ".join(notes), 5


def criterion_3():
    bad = []
    cases = [(nm, n) for n in (4, 5) for nm in S2_NAMES] + [(nm, 4) for nm in S3_NAMES]
    for name, n in cases:
        v = paper_vector(name, n)
        if not (is_highest_weight(v) and weight_of(v).fundamental == vector_label(name, n)):
            bad.append(f"{name}@{n}")
    c = proportional(s_on_tensor(paper_vector("w210")), paper_vector("w012"))
    ok = not bad and c is not None
    return ok, f"{len(cases) - len(bad)}/{len(cases)} vectors check, s(w210) = {c} * w012", 5


def criterion_4():
    rng = random.Random(20240601)
    bad = 0
    for _ in range(1000):
        m = rng.randint(1, 6)
        roots = [Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(m)]
        p = [sum(r ** k for r in roots) for k in range(1, m + 1)]
        c = power_sums_to_coeffs(p)
        bad += c != NewtonCoeffs.from_poly(UPoly.from_roots(roots)) or list(coeffs_to_power_sums(c)) != p
    bad_m = 0
    for _ in range(500):
        n = rng.randint(2, 6)
        M = random_sl(rng, n)
        bad_m += power_sums_to_coeffs([trace_power(M, k) for k in range(1, n + 1)]).poly() != char_poly(M)
    return bad == 0 and bad_m == 0, f"round trip failures {bad}/1000, char poly failures {bad_m}/500", 30


def criterion_5():
    rng = random.Random(5)
    bad = {}
    p4_nonzero = 0
    for kind, n in (("degree2", 4), ("degree3", 4), ("degree2", 5)):
        for _ in range(200):
            cc = itw.closed_vs_oracle(random_sl(rng, n), random_sl(rng, n), kind)
            for name, agree in cc.agree.items():
                if not agree:
                    bad[(kind, n, name)] = bad.get((kind, n, name), 0) + 1
            if kind == "degree2":
                p4_nonzero += not cc.oracle["P4"].is_zero()
    ok = not bad and p4_nonzero == 0
    return ok, f"disagreements {bad or 'none'}, nonzero P4 transports {p4_nonzero}", 60


def criterion_6():
    notes, ok = [], True
    for n in (3, 4, 5, 6):
        r = ova.elimination_degree2(n)
        shown = [s.identity_holds for s in r.steps if s.displayed is not None]
        ok &= r.ok and all(shown)
        notes.append(f"n={n}: {sum(shown)}/{len(shown)} identities, {r.system.constraints()} free {r.system.free()}")
    return ok, "; ".join(notes), 30


def criterion_7():
    r = ova.elimination_degree3("joint")
    shown = [(i + 1, s.identity_holds) for i, s in enumerate(r.steps) if s.displayed is not None]
    failing = [i for i, h in shown if not h]
    ok = r.solution_ok and not failing
    return ok, (f"printed identities failing at steps {failing}; solution "
                f"{r.system.constraints()} free {r.system.free()}"), 30


def criterion_8():
    d2 = ova.family_report("degree2", ova.admissible_parameters("degree2", 6), (3, -3))
    d3 = ova.family_report("degree3", ova.admissible_parameters("degree3", 6))
    ok = d2.ok and d3.ok and len(d2.members) >= 5 and len(d3.members) >= 5
    return ok, (f"degree2: {len(d2.members)} members, T2 {d2.members[0].T2}, "
                f"{len({m.det for m in d2.members})} det values; degree3: {len(d3.members)} members, "
                f"{len({m.det for m in d3.members})} det values"), 10


def criterion_9():
    bad = []
    for n in (4, 5):
        for e in itw.s2_evaluation_table(n):
            if not e.ok:
                bad.append(f"n={n} {e.statement}: got {e.computed}")
    return not bad, "; ".join(bad) or "all facts reproduce", 5


def _sturm_case(rng):
    """A squarefree polynomial with a known set of real roots."""
    roots = sorted({Fraction(rng.randint(-12, 12), rng.randint(1, 4)) for _ in range(rng.randint(0, 5))})
    p = UPoly.from_roots(roots)
    for _ in range(rng.randint(0, 2)):
        # x^2 + b x + c with b^2 < 4c: no real roots
        b = Fraction(rng.randint(-5, 5))
        c = b * b / 4 + Fraction(rng.randint(1, 9), rng.randint(1, 3))
        p = p * UPoly([c, b, 1])
    if p.degree == 0:
        p = UPoly([1, 0, 1])
    return p.primitive() * rng.choice((1, -1, 3)), roots


def criterion_10():
    rng = random.Random(10)
    hom_bad = 0
    for n in (3, 4):
        for k in (1, 2, 3):
            for _ in range(6):
                X, Y = random_sl(rng, n), random_sl(rng, n)
                t = SymTensor.zero(k, n)
                for _ in range(3):
                    m = tuple(sorted((rng.randint(1, n), rng.randint(1, n)) for _ in range(k)))
                    t = t + SymTensor(k, n, {m: Fraction(rng.randint(-4, 4), rng.randint(1, 3))})
                lhs = ad_on_tensor(X, ad_on_tensor(Y, t)) - ad_on_tensor(Y, ad_on_tensor(X, t))
                hom_bad += lhs != ad_on_tensor(commutator(X, Y), t)
    inv_bad = 0
    for _ in range(30):
        n = rng.randint(2, 5)
        xi, g = random_sl(rng, n), random_invertible(rng, n)
        conj = g * xi * inverse(g)
        inv_bad += classify(conj) != classify(xi) or trace_invariants(conj) != trace_invariants(xi)
    sturm_bad = 0
    for _ in range(200):
        p, roots = _sturm_case(rng)
        a = Fraction(rng.randint(-15, 15), rng.randint(1, 3))
        b = a + Fraction(rng.randint(0, 20), rng.randint(1, 3))
        inside = sum(1 for r in roots if a < r <= b)
        sturm_bad += count_real_roots(p) != len(roots) or sturm_count_between(p, a, b) != inside
    ok = hom_bad == 0 and inv_bad == 0 and sturm_bad == 0
    return ok, f"homomorphism failures {hom_bad}/36, conjugation {inv_bad}/30, Sturm {sturm_bad}/200", 60


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def run(i: int):
    t0 = time.perf_counter()
    ok, detail, budget = CRITERIA[i - 1]()
    dt = time.perf_counter() - t0
    ok = ok and dt < budget
    line = f"criterion {i}: {'PASS' if ok else 'FAIL'} ({dt:.1f}s, budget {budget}s) {detail}"
    return ok, line


@pytest.mark.parametrize("i", range(1, 11))
def test_criterion(i, capsys):
    ok, line = run(i)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [run(i) for i in range(1, 11)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)

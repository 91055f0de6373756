"""Command line front end: named verification suites with text or JSON reports."""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import intertwiners as itw
from . import overalgebra as ova
from .exact_algebra import (
    DimensionMismatchError,
    RingMatrix,
    UPoly,
    char_poly,
    fmt_rational,
    inverse,
    parse_rational,
    trace_power,
)
from .invariants import (
    NewtonCoeffs,
    Verdict,
    almost_separate,
    coeffs_to_power_sums,
    power_sums_to_coeffs,
    trace_invariants,
)
from .sl_basis import BlockSpec, NotTracelessError, block_matrix, classify, random_invertible, random_sl
from .sym_modules import (
    S2_NAMES,
    S3_NAMES,
    decomposition_report,
    is_highest_weight,
    paper_dim_formulas,
    paper_vector,
    proportional,
    s_on_tensor,
    vector_label,
    weight_of,
)

SCHEMA_VERSION = "1"
SUITES = ("newton", "dims", "hwv", "pairing-matrix", "transport", "eliminate-deg2",
          "eliminate-deg3", "counterexample", "separate")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# reports

def show(x) -> str:
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, (int, Fraction)):
        return fmt_rational(x)
    if isinstance(x, RingMatrix):
        return "[" + "; ".join(", ".join(show(e) for e in row) for row in x.to_lists()) + "]"
    if isinstance(x, UPoly):
        return str(x.to_mpoly("X"))
    if isinstance(x, (list, tuple)):
        return "(" + ", ".join(show(e) for e in x) + ")"
    if x is None:
        return "-"
    return str(x)


@dataclass
class Step:
    description: str
    status: str  # pass, fail or info
    computed: str = ""
    expected: str = ""
    anchor: str = ""


@dataclass
class Report:
    suite: str
    steps: list = field(default_factory=list)
    options: dict = field(default_factory=dict)

    @property
    def overall(self) -> str:
        return "fail" if any(s.status == "fail" for s in self.steps) else "pass"

    @property
    def exit_code(self) -> int:
        return 0 if self.overall == "pass" else 1

    def check(self, description, ok, computed="", expected="", anchor=""):
        self.steps.append(Step(description, "pass" if ok else "fail", show(computed), show(expected), anchor))
        return ok

    def info(self, description, computed="", expected="", anchor=""):
        self.steps.append(Step(description, "info", show(computed), show(expected), anchor))

    def to_dict(self) -> dict:
        return {"schema_version": SCHEMA_VERSION, "suite": self.suite, "overall": self.overall,
                "options": self.options, "steps": [asdict(s) for s in self.steps]}

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {d.get('schema_version')!r}")
        return cls(d["suite"], [Step(**s) for s in d["steps"]], dict(d.get("options", {})))

    def render(self) -> str:
        lines = [f"suite: {self.suite}"]
        for s in self.steps:
            lines.append(f"  [{s.status.upper():4}] {s.description}")
            if s.computed:
                lines.append(f"         computed: {s.computed}")
            if s.expected:
                lines.append(f"         expected: {s.expected}")
            if s.anchor:
                lines.append(f"         anchor:   {s.anchor}")
        lines.append(f"overall: {self.overall.upper()}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# suites

def suite_newton(opts) -> Report:
    rep = Report("newton")
    rng = random.Random(opts.seed)
    nmax = opts.n or 6
    samples = opts.samples or 1000
    bad = 0
    for _ in range(samples):
        m = rng.randint(1, nmax)
        roots = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(m)]
        p = [sum(r ** k for r in roots) for k in range(1, m + 1)]
        c = power_sums_to_coeffs(p)
        if c != NewtonCoeffs.from_poly(UPoly.from_roots(roots)) or list(coeffs_to_power_sums(c)) != p:
            bad += 1
    rep.check(f"power sums <-> coefficients round trip on {samples} random spectra (n <= {nmax})",
              bad == 0, f"{bad} failures", "0 failures", "Newton identities")
    bad = 0
    msamples = max(1, samples // 2)
    for _ in range(msamples):
        n = rng.randint(2, nmax)
        M = random_sl(rng, n)
        recon = power_sums_to_coeffs([trace_power(M, k) for k in range(1, n + 1)]).poly()
        if recon != char_poly(M):
            bad += 1
    rep.check(f"char_poly equals Newton reconstruction from traces on {msamples} traceless matrices",
              bad == 0, f"{bad} failures", "0 failures", "characteristic polynomial from T_2..T_n")
    return rep


def suite_dims(opts) -> Report:
    rep = Report("dims")
    ns = [opts.n] if opts.n else list(range(3, 9))
    for n in ns:
        if not 3 <= n <= 8:
            raise UsageError("dims covers 3 <= n <= 8")
        r = decomposition_report(2, n, strict=False)
        dims = [c.dim for c in r.constituents]
        formulas = paper_dim_formulas(n)
        rep.check(f"S^2(sl({n})) constituents {[c.name for c in r.constituents]} balance",
                  r.balanced, f"{'+'.join(map(str, dims))} = {r.total}", r.dim_sym, "S^2(sl(n)) decomposition")
        rep.check(f"S^2(sl({n})) Weyl dimensions match the closed forms",
                  all(formulas[c.name] == c.dim for c in r.constituents),
                  dims, [formulas[c.name] for c in r.constituents], "S^2(sl(n)) dimension formulas")
        for name, why in r.excluded:
            rep.info(f"{name} excluded: {why}", formulas[name], 0)
    if opts.n in (None, 4):
        r = decomposition_report(3, 4, strict=False)
        dims = [c.dim for c in r.constituents]
        rep.check("S^3(sl(4)) constituents balance", r.balanced,
                  f"{'+'.join(map(str, dims))} = {r.total}", r.dim_sym, "S^3(sl(4)) decomposition")
        rep.check("S^3(sl(4)) multiset of dimensions", sorted(dims) == sorted([300, 175, 84, 45, 45, 15, 15, 1]),
                  sorted(dims, reverse=True), (300, 175, 84, 45, 45, 15, 15, 1))
    return rep


def suite_hwv(opts) -> Report:
    rep = Report("hwv")
    cases = [(nm, n) for n in (4, 5) for nm in S2_NAMES] + [(nm, 4) for nm in S3_NAMES]
    for name, n in cases:
        v = paper_vector(name, n)
        hw = is_highest_weight(v)
        w = weight_of(v).fundamental if hw else None
        rep.check(f"{name} at n = {n} is a highest weight vector of weight {show(vector_label(name, n))}",
                  hw and w == vector_label(name, n), w, vector_label(name, n), "highest weight vectors")
    c = proportional(s_on_tensor(paper_vector("w210")), paper_vector("w012"))
    rep.check("s(w210) is proportional to w012", c is not None, c, "nonzero ratio", "s-involution")
    for name in ("w101", "w101p"):
        v = paper_vector(name, verbatim=True)
        rep.info(f"{name} as printed is a highest weight vector", is_highest_weight(v))
    return rep


def suite_pairing(opts) -> Report:
    rep = Report("pairing-matrix")
    M = itw.build_M()
    paper = itw.paper_pairing_matrix()
    mism = M.mismatches(itw.PAPER_M)
    for i, name in enumerate(M.row_names):
        bad = [f"T{c}: {fmt_rational(g)} vs {fmt_rational(e)}" for r, c, g, e in mism if r == i + 1]
        rep.check(f"row {name}: <T_j({name}), {name}^t>, j = 1..12", not bad, M.entries[i], itw.PAPER_M[i],
                  "S^3(sl(4)) pairing matrix M")
    N = itw.build_N(M)
    rep.check("rank M", M.rank() == 8, M.rank(), 8, "rank of the pairing matrix")
    rep.check("rank N (columns P1..P8)", N.rank() == 8, N.rank(), 8, "rank of the pairing matrix")
    rep.info("rank of the printed matrix", paper.rank(), 8)
    rep.info("entrywise mismatches against the printed matrix", len(mism), 0)
    return rep


def suite_transport(opts) -> Report:
    rep = Report("transport")
    rng = random.Random(opts.seed)
    samples = opts.samples or 200
    settings = [("degree1", opts.n or 4), ("degree2", opts.n or 4), ("degree3", opts.n or 4)]
    if not opts.n:
        settings.append(("degree2", 5))
    for kind, n in settings:
        if kind == "degree3" and n != 4:
            continue
        bad = {}
        p4_zero = True
        for _ in range(samples):
            xi, X = random_sl(rng, n), random_sl(rng, n)
            cc = itw.closed_vs_oracle(X, xi, kind)
            for name, ok in cc.agree.items():
                bad[name] = bad.get(name, 0) + (not ok)
            if kind == "degree2" and not cc.oracle["P4"].is_zero():
                p4_zero = False
        rep.check(f"{kind}, n = {n}: closed form = oracle on {samples} random pairs, forms {sorted(bad)}",
                  not any(bad.values()), {k: v for k, v in bad.items() if v} or "no disagreements",
                  "no disagreements", "transport closed forms")
        if kind == "degree2":
            rep.check(f"n = {n}: tpsi_(X.X)(P4(xi.xi)) = 0 on every sample", p4_zero, p4_zero, True,
                      "trivial constituent transport")
    return rep


def _elim_steps(rep: Report, report: ova.EliminationReport, tag: str):
    for st in report.steps:
        anchor = f"{report.name} elimination"
        if st.displayed is None:
            rep.info(f"{tag}{st.label}: det(zeta - lam I) (no printed identity)", st.det)
        else:
            rep.check(f"{tag}{st.label}: printed det(zeta - lam I)", st.identity_holds, st.det, st.displayed, anchor)
        for pc in st.psi_checks:
            rep.info(f"{tag}{st.label}: printed {pc.label} {'matches' if pc.matches else 'differs'}",
                     pc.computed, pc.displayed)
        if st.added:
            rep.info(f"{tag}{st.label}: constraints", [f"{c} = 0 ({why})" for _, c, why in st.added])
        if st.residual:
            rep.info(f"{tag}{st.label}: unresolved equations", [f"{r} = 0" for r in st.residual])


def _solution_step(rep: Report, report: ova.EliminationReport, label: str, gate: bool = True):
    expected = [f"{v} = 0" for v in report.expected_zero] + [f"{v} free" for v in report.expected_free]
    got = report.system.constraints() + [f"{v} free" for v in report.system.free()]
    if gate:
        rep.check(label, report.solution_ok, got, expected, f"{report.name} solution set")
    else:
        rep.info(label, got, expected)


def suite_deg2(opts) -> Report:
    rep = Report("eliminate-deg2")
    for n in ([opts.n] if opts.n else [3, 4, 5, 6]):
        if n < 3:
            raise UsageError("eliminate-deg2 needs n >= 3")
        r = ova.elimination_degree2(n, "sequential")
        _elim_steps(rep, r, f"n = {n}, ")
        _solution_step(rep, r, f"n = {n}: solution set (real radicals of square factors)")
    return rep


def suite_deg3(opts) -> Report:
    rep = Report("eliminate-deg3")
    joint = ova.elimination_degree3("joint")
    _elim_steps(rep, joint, "")
    _solution_step(rep, joint, "solution set from all six tests taken jointly")
    _solution_step(rep, ova.elimination_degree3("sequential"),
                   "solution set when each test assumes the earlier conclusions as printed", gate=False)
    return rep


def degree2_tail(n: int) -> tuple:
    """Entries c_4..c_n with |c| > 2 and zero sum: pairs (3, -3), and
    (3, 3, -6) when the count is odd."""
    m = n - 3
    if m < 2:
        raise UsageError("the degree 2 family needs n >= 5")
    tail = []
    if m % 2:
        tail += [3, 3, -6]
        m -= 3
    tail += [3, -3] * (m // 2)
    return tuple(tail)


def suite_counterexample(opts) -> Report:
    rep = Report("counterexample")
    count = opts.samples or 6
    n = opts.n or 5
    tail = degree2_tail(n)
    for kind, ts in (("degree2", ova.admissible_parameters("degree2", count)),
                     ("degree3", [Fraction(0)] + ova.admissible_parameters("degree3", count))):
        fr = ova.family_report(kind, ts, tail)
        where = f"n = {n}, tail {show(tail)}" if kind == "degree2" else "n = 4"
        anchor = f"{kind} family"
        rep.info(f"{kind} ({where}): admissible t", ts)
        if fr.boundary:
            rep.info(f"{kind}: boundary t outside Omega (repeated eigenvalues)", fr.boundary)
        rep.check(f"{kind}: all remaining members lie in Omega", len(fr.members) >= 2,
                  [m.genericity for m in fr.members], "Generic", anchor)
        if kind == "degree2":
            T2 = 2 + sum(c * c for c in tail)
            rep.check(f"{kind}: T2 constant = 2 + sum c_k^2", fr.invariants_constant,
                      sorted({m.T2 for m in fr.members}), [T2], anchor)
            rep.check(f"{kind}: det = t(1 - t^2) prod c_k", fr.det_formula_ok,
                      [m.det for m in fr.members], [m.det_formula for m in fr.members], anchor)
        else:
            rep.check(f"{kind}: T2 = 4 and T3 = 0 for every member", fr.invariants_constant,
                      sorted({(m.T2, m.T3) for m in fr.members}), [(4, 0)], anchor)
            rep.check(f"{kind}: det = 1 - t^2", fr.det_formula_ok,
                      [m.det for m in fr.members], [m.det_formula for m in fr.members], anchor)
            rep.info(f"{kind}: the alternative (1 - t^2)^2", [m.det_formula_alt for m in fr.members])
        rep.check(f"{kind}: det not constant", fr.det_varies, sorted({m.det for m in fr.members}),
                  "at least two values", anchor)
        rep.check(f"{kind}: almost_separate gives Different across distinct det", fr.pairwise_different,
                  fr.pairwise_different, True, anchor)
        rep.check(f"{kind}: the surviving invariants (the phi-image) agree", fr.phi_images_agree,
                  fr.phi_images_agree, True, anchor)
    return rep


def suite_separate(opts) -> Report:
    rep = Report("separate")
    rng = random.Random(opts.seed)
    samples = opts.samples or 20
    n = opts.n or 4
    single = diff = inv = 0
    for _ in range(samples):
        # distinct real spectrum with trace zero
        while True:
            reals = [Fraction(rng.randint(-20, 20), rng.randint(1, 3)) for _ in range(n - 1)]
            reals.append(-sum(reals))
            if len(set(reals)) == n:
                break
        xi = RingMatrix.diag(reals)
        g = random_invertible(rng, n)
        conj = g * xi * inverse(g)
        single += almost_separate(xi, conj) == Verdict.SINGLE_ORBIT
        inv += trace_invariants(conj) == trace_invariants(xi) and classify(conj) == classify(xi)
        shifted = [r + (1 if i == 0 else 0) - (1 if i == n - 1 else 0) for i, r in enumerate(reals)]
        v = almost_separate(xi, RingMatrix.diag(shifted))
        if len(set(shifted)) < n:
            diff += v == Verdict.NOT_GENERIC
        elif sorted(shifted) == sorted(reals):
            diff += v == Verdict.SINGLE_ORBIT
        else:
            diff += v == Verdict.DIFFERENT
    rep.check("conjugate generic pairs: SameInvariants_SingleOrbit", single == samples,
              single, samples, "generic orbits with a real eigenvalue")
    rep.check("conjugation leaves classify and trace_invariants unchanged", inv == samples, inv, samples)
    rep.check("shifted spectra get the verdict their spectra dictate", diff == samples, diff, samples)
    if n % 2 == 0:
        blocks = [(Fraction(k), Fraction(k + 1)) for k in range(n // 2)]
        shift = sum(a for a, _ in blocks) / (n // 2)
        blocks = [(a - shift, b) for a, b in blocks]
        xi = block_matrix(BlockSpec((), tuple(blocks)))
        flipped = block_matrix(BlockSpec((), tuple((a, -b) for a, b in blocks)))
        v = almost_separate(xi, flipped)
        rep.check(f"all-complex pair, n = {n}: SameInvariants_PossiblePair", v == Verdict.POSSIBLE_PAIR,
                  v.value, Verdict.POSSIBLE_PAIR.value, "generic orbits without real eigenvalues")
    e = RingMatrix.from_function(n, lambda i, j: 1 if (i, j) == (0, n - 1) else 0)
    v = almost_separate(e, e)
    rep.check("nilpotent e_1n: NotGeneric", v == Verdict.NOT_GENERIC, v.value, Verdict.NOT_GENERIC.value)
    return rep


SUITE_FUNCS: dict = {
    "newton": suite_newton,
    "dims": suite_dims,
    "hwv": suite_hwv,
    "pairing-matrix": suite_pairing,
    "transport": suite_transport,
    "eliminate-deg2": suite_deg2,
    "eliminate-deg3": suite_deg3,
    "counterexample": suite_counterexample,
    "separate": suite_separate,
}


def run_suite(name: str, n=None, samples=None, seed=0) -> Report:
    opts = argparse.Namespace(n=n, samples=samples, seed=seed)
    rep = SUITE_FUNCS[name](opts)
    rep.options = {"n": n, "samples": samples, "seed": seed}
    return rep


# ---------------------------------------------------------------------------
# matrix files

def load_matrix(path: str) -> RingMatrix:
    """{"n": int, "entries": [["p/q", ...], ...]}"""
    try:
        with open(path) as fh:
            doc = json.load(fh)
        n = doc["n"]
        rows = [[parse_rational(e) for e in row] for row in doc["entries"]]
    except (OSError, ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        raise UsageError(f"{path}: cannot read matrix: {exc}") from exc
    if not isinstance(n, int) or len(rows) != n or any(len(r) != n for r in rows):
        raise UsageError(f"{path}: expected an {n} x {n} matrix")
    return RingMatrix(rows)


def dump_matrix(M: RingMatrix) -> dict:
    return {"n": M.n, "entries": [[fmt_rational(e) for e in row] for row in M.to_lists()]}


def cmd_invariants(path: str) -> Report:
    xi = load_matrix(path)
    tr = xi.trace()
    if tr != 0:
        raise UsageError(f"{path}: matrix is not traceless (trace = {fmt_rational(tr)})")
    rep = Report("invariants", options={"file": path})
    inv = trace_invariants(xi)
    for k in range(2, xi.n + 1):
        rep.info(f"T{k}", inv.T(k))
    rep.info("characteristic polynomial", char_poly(xi))
    rep.info("genericity class", str(classify(xi)))
    return rep


def cmd_separate(a: str, b: str) -> Report:
    xa, xb = load_matrix(a), load_matrix(b)
    rep = Report("separate-pair", options={"a": a, "b": b})
    try:
        for path, M in ((a, xa), (b, xb)):
            if M.trace() != 0:
                raise UsageError(f"{path}: matrix is not traceless (trace = {fmt_rational(M.trace())})")
        verdict = almost_separate(xa, xb)
    except DimensionMismatchError as exc:
        raise UsageError(f"dimension mismatch: {exc}") from exc
    rep.info("invariants of a", trace_invariants(xa).values)
    rep.info("invariants of b", trace_invariants(xb).values)
    rep.info("classes", (str(classify(xa)), str(classify(xb))))
    rep.info("verdict", verdict.value)
    return rep


# ---------------------------------------------------------------------------
# entry point

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="slorbits", description="Exact checks on sl(n) orbits and overalgebras.")
    sub = ap.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--n", type=int, default=None)
    v.add_argument("--samples", type=int, default=None)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--json", action="store_true")
    i = sub.add_parser("invariants", help="T_2..T_n, char poly and class of a matrix file")
    i.add_argument("file")
    i.add_argument("--json", action="store_true")
    s = sub.add_parser("separate", help="almost-separation verdict for two matrix files")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--json", action="store_true")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "verify":
            if args.samples is not None and args.samples < 1:
                raise UsageError("--samples must be positive")
            rep = run_suite(args.suite, args.n, args.samples, args.seed)
        elif args.command == "invariants":
            rep = cmd_invariants(args.file)
        else:
            rep = cmd_separate(args.a, args.b)
    except (UsageError, NotTracelessError) as exc:
        ap.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(rep.to_dict(), indent=2))
    else:
        print(rep.render())
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())

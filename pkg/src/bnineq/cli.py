"""Command-line entry point: verify, case, oracle, search subcommands.

Exit codes: 0 all checks pass, 1 at least one finding, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import harness
from . import operator as bn
from . import search as xs
from . import verify as vf
from .norms import binomial_norm, lp_norm, one_plus_z_norm, wallis_one_plus_z
from .poly import Polynomial, from_roots
from .sampling import InequalityInstance


def parse_complex(text: str) -> complex:
    """Accepts forms like '1', '-2.5', 'i', '2i', '1+2i', '-1.5-0.3i'."""
    t = text.strip().replace("i", "j")
    if t in ("j", "+j"):
        t = "1j"
    if t == "-j":
        t = "-1j"
    try:
        return complex(t)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"cannot parse complex number {text!r}") from e


def parse_p(text: str) -> float:
    if text.strip().lower() == "inf":
        return math.inf
    p = float(text)
    if p < 0:
        raise argparse.ArgumentTypeError("p must be nonnegative")
    return p


def _add_common(sp: argparse.ArgumentParser):
    sp.add_argument("--seed", type=int, default=0, help="master seed")
    sp.add_argument("--out", type=str, default=None, help="output path (JSONL / JSON)")
    sp.add_argument("--workers", type=int,
                    default=int(os.environ.get("BN_INEQ_WORKERS", "1")),
                    help="worker processes for trial fan-out")
    sp.add_argument("--tol", type=float, default=None,
                    help="relative slack tolerance override")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bnineq",
                                 description="Numerical verification of Lp polynomial "
                                             "inequalities on the unit circle")
    sub = ap.add_subparsers(dest="command", required=True)

    vp = sub.add_parser("verify", help="run randomized suites for selected statements")
    vp.add_argument("--statements", type=str, required=True,
                    help="comma-separated statement ids, e.g. t1,t2,l1")
    vp.add_argument("--trials", type=int, default=100)
    vp.add_argument("--degrees", type=str, default="1,8", help="lo,hi degree range")
    _add_common(vp)

    cp = sub.add_parser("case", help="check one explicit instance (t1 and t2 reports)")
    cp.add_argument("--poly", type=str, required=True,
                    help="comma-separated coefficients, ascending powers (a+bi syntax)")
    cp.add_argument("--lambda", dest="lambdas", type=str, required=True,
                    help="lambda0,lambda1,lambda2")
    cp.add_argument("--R", type=float, required=True)
    cp.add_argument("--r", type=float, required=True)
    cp.add_argument("--alpha", type=parse_complex, default=0j)
    cp.add_argument("--beta", type=parse_complex, default=0j)
    cp.add_argument("--delta", type=parse_complex, default=0j)
    cp.add_argument("--p", type=parse_p, default=2.0)
    _add_common(cp)

    op = sub.add_parser("oracle", help="run the norm cross-check battery")
    _add_common(op)

    sp = sub.add_parser("search", help="sharpness / counterexample search")
    sp.add_argument("--statement", type=str, required=True, choices=["t1", "t2", "c1", "c2"])
    sp.add_argument("--degree", type=int, default=4)
    sp.add_argument("--restarts", type=int, default=50)
    sp.add_argument("--budget", type=int, default=2000)
    sp.add_argument("--p", type=parse_p, default=2.0)
    _add_common(sp)
    return ap


def _write(out_path: str | None, text: str):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args) -> int:
    try:
        lo, hi = (int(x) for x in args.degrees.split(","))
        config = harness.RunConfig(statements=tuple(args.statements.split(",")),
                                   trials=args.trials, degree_lo=lo, degree_hi=hi,
                                   master_seed=args.seed, workers=args.workers,
                                   tol=args.tol)
    except ValueError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    records = harness.run_suite(config)
    _write(args.out, harness.to_jsonl(records))
    summary = harness.summarize(records)
    print(f"{'statement':<24}{'trials':>8}{'fail':>6}{'min slack':>14}{'median':>14}",
          file=sys.stderr)
    for sid, s in summary.items():
        print(f"{sid:<24}{s['trials']:>8}{s['failures']:>6}"
              f"{s['min_slack']:>14.3e}{s['median_slack']:>14.3e}", file=sys.stderr)
    return 0 if all(s["failures"] == 0 for s in summary.values()) else 1


def cmd_case(args) -> int:
    try:
        coeffs = [parse_complex(c) for c in args.poly.split(",")]
        lams = [parse_complex(c) for c in args.lambdas.split(",")]
        if len(lams) != 3:
            raise ValueError("need exactly three lambda values")
        n = len(coeffs) - 1
        P = Polynomial(tuple(coeffs), n)
        if P.is_zero():
            raise ValueError("invariant violated: zero polynomial")
        op = bn.BnOperator(lams[0], lams[1], lams[2], n)
        if not bn.is_admissible(op):
            raise ValueError("invariant violated: operator is not admissible")
        params = bn.PhiParams(args.R, args.r, args.alpha, args.beta)
        if abs(args.delta) > 1 + 1e-12:
            raise ValueError("invariant violated: need |delta| <= 1")
        inst = InequalityInstance(P, op, params, args.delta, args.p, args.seed)
        reports = [vf.check_theorem1(inst), vf.check_theorem2(inst)]
    except (ValueError, argparse.ArgumentTypeError) as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    text = harness.to_jsonl([r.to_jsonable() for r in reports])
    _write(args.out, text)
    return 0 if all(r.passed for r in reports) else 1


def cmd_oracle(args) -> int:
    lines, ok = [], True

    def record(name, got, want, tol):
        nonlocal ok
        err = abs(got - want)
        good = err <= tol * max(abs(want), 1.0)
        ok = ok and good
        lines.append({"oracle": name, "value": got, "expected": want,
                      "abs_err": err, "tol": tol, "pass": good})

    rng = np.random.default_rng(args.seed)
    # quadrature vs the Wallis closed form for ||1+z||_p
    for p in (0.5, 1.0, 2.0, 3.0, 4.0):
        q = binomial_norm(1.0, 1.0, p).value
        record(f"one_plus_z_quadrature_p={p}", q, wallis_one_plus_z(p), 1e-9)
    # Parseval spot checks at p = 2
    record("parseval_1_plus_z", lp_norm(Polynomial((1, 1), 1), 2.0).value, math.sqrt(2), 1e-10)
    coeffs = rng.normal(size=5) + 1j * rng.normal(size=5)
    record("parseval_random_deg4", lp_norm(Polynomial(tuple(coeffs), 4), 2.0).value,
           float(np.sqrt(np.sum(np.abs(coeffs) ** 2))), 1e-10)
    # Jensen geometric means
    nv = lp_norm(Polynomial((2, 1), 1), 0.0)
    record("jensen_z_plus_2", nv.value, 2.0, 1e-10)
    record("jensen_vs_log_quadrature_z_plus_2", nv.err_estimate, 0.0, 1e-4)
    # degree-collapse identity
    for _ in range(5):
        A = rng.normal() + 1j * rng.normal()
        B = rng.normal() + 1j * rng.normal()
        npow = int(rng.integers(2, 9))
        p = float(rng.choice([0.5, 1.0, 2.0, 4.0]))
        coeffs = [B] + [0j] * (npow - 1) + [A]
        full = lp_norm(Polynomial(tuple(coeffs), npow), p).value
        record(f"degree_collapse_n={npow}_p={p}", full, binomial_norm(A, B, p).value, 1e-8)
    # star modulus identity on the circle
    P = Polynomial(tuple(rng.normal(size=6) + 1j * rng.normal(size=6)), 5)
    record("star_invariance_p=1.7", lp_norm(P.conj_reciprocal(), 1.7).value,
           lp_norm(P, 1.7).value, 1e-9)
    text = harness.to_jsonl(lines)
    _write(args.out, text)
    for rec in lines:
        status = "ok " if rec["pass"] else "FAIL"
        print(f"{status} {rec['oracle']}: |err| = {rec['abs_err']:.3e} (tol {rec['tol']:g})",
              file=sys.stderr)
    return 0 if ok else 1


def cmd_search(args) -> int:
    res = xs.sharpness_certify(args.statement, args.degree, [args.p],
                               args.restarts, args.budget, rng_seed=args.seed)
    doc = res.to_jsonable()
    doc["counterexample"] = res.best_ratio > 1 + xs.COUNTEREXAMPLE_TOL
    _write(args.out, json.dumps(doc, sort_keys=True) + "\n")
    if args.out:
        with open(args.out + ".trace.jsonl", "w") as fh:
            for i, r in res.trace:
                fh.write(json.dumps({"eval": i, "ratio": r}) + "\n")
    print(f"best_ratio = {res.best_ratio:.9f} after {res.evals} evals", file=sys.stderr)
    return 0 if res.best_ratio <= 1 + xs.COUNTEREXAMPLE_TOL else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"verify": cmd_verify, "case": cmd_case,
               "oracle": cmd_oracle, "search": cmd_search}[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())

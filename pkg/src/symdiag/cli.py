"""JSON-lines command-line front end.

Three subcommands: ``solve`` streams decompositions, ``verify`` checks the
closed-form results against the Jacobi oracle, ``bench`` compares
closed-form and Jacobi throughput on a seeded random matrix stream.

Input records are one JSON object per line with keys a11, a22, a12 for a
2x2 matrix, plus a33, a13, a23 for a 3x3, and an optional id.  All floats
are serialized with 17 significant digits so output is byte-reproducible.
"""

import argparse
import json
import sys
import time

import numpy as np

from .core import NonFiniteInput, SymMat2, SymMat3
from .eig2 import diagonalize2
from .eig3 import diagonalize3, euler_angles
from .oracle import jacobi_eigen, residuals


class ParseError(ValueError):
    """A malformed input record (bad JSON, wrong keys, non-finite values)."""


_KEYS2 = ("a11", "a22", "a12")
_KEYS3 = ("a11", "a22", "a33", "a12", "a13", "a23")


def _fmt(x):
    return format(float(x), ".17g")


def _dumps(obj):
    """Deterministic JSON with floats at 17 significant digits."""
    if isinstance(obj, dict):
        items = ", ".join(f"{json.dumps(k)}: {_dumps(v)}" for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_dumps(v) for v in obj) + "]"
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        return _fmt(obj)
    return json.dumps(obj)


def parse_record(line):
    """One MatrixRecord from a JSON line; raises ParseError on anything bad."""
    try:
        data = json.loads(line)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from e
    if not isinstance(data, dict):
        raise ParseError("record must be a JSON object")
    rec_id = data.get("id")
    if rec_id is not None and not isinstance(rec_id, str):
        raise ParseError("id must be a string")
    keys = set(data) - {"id"}
    if keys == set(_KEYS3):
        dim, names = 3, _KEYS3
    elif keys == set(_KEYS2):
        dim, names = 2, _KEYS2
    else:
        raise ParseError(f"unexpected keys {sorted(keys)}; want "
                         f"{list(_KEYS2)} or {list(_KEYS3)}")
    comps = []
    for k in names:
        v = data[k]
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise ParseError(f"{k} must be a number")
        comps.append(float(v))
    try:
        mat = SymMat2(*comps) if dim == 2 else SymMat3(*comps)
    except NonFiniteInput as e:
        raise ParseError(str(e)) from e
    return rec_id, dim, mat


def solve_record(rec_id, dim, mat, corrupt=False):
    """One ResultRecord dict for a parsed matrix."""
    if dim == 2:
        dec = diagonalize2(mat)
        eig = [dec.lambda1, dec.lambda2]
        angles = [dec.phi]
        euler = [dec.phi]
        branch = None
    else:
        dec = diagonalize3(mat)
        eig = list(dec.lambdas)
        angles = list(dec.angles.as_tuple())
        euler = list(euler_angles(dec).as_tuple())
        branch = dec.branch.value
    if corrupt:
        # test hook: break the decomposition so verify reports failures
        d = dec.d.copy()
        d[0, 0] += 1e-3
        object.__setattr__(dec, "d", d)
    recon, ortho, eigvec = residuals(mat, dec)
    return {
        "id": rec_id,
        "dim": dim,
        "eigenvalues": eig,
        "eigenvalues_sorted": sorted(eig, reverse=True),
        "angles": angles,
        "euler_angles": euler,
        "eigenvectors": [list(dec.d[:, i]) for i in range(dim)],
        "branch": branch,
        "residuals": {"recon_rel": recon, "ortho": ortho,
                      "max_eigvec_res": max(eigvec)},
    }, dec


def cmd_solve(in_stream, out_stream):
    """Stream MatrixRecords to ResultRecords, order preserved.

    Malformed records yield an inline error entry and processing continues.
    Exit code 0 if any record succeeded (or the stream was empty), 2 if all
    records failed.
    """
    n_ok = n_fail = 0
    for line in in_stream:
        line = line.strip()
        if not line:
            continue
        try:
            rec_id, dim, mat = parse_record(line)
            result, _ = solve_record(rec_id, dim, mat)
            n_ok += 1
        except ParseError as e:
            result = {"id": None, "error": str(e)}
            n_fail += 1
        out_stream.write(_dumps(result) + "\n")
    return 0 if n_ok > 0 or n_fail == 0 else 2


def cmd_verify(in_stream, out_stream, tol, corrupt=False):
    """Check every record against the Jacobi oracle and report a summary.

    A record passes when the sorted-eigenvalue deviation from Jacobi and the
    reconstruction residual are both at most tol.  Exit code 0 iff all pass.
    """
    n = n_pass = n_fail = n_near_tie = 0
    max_dev = 0.0
    max_recon = 0.0
    for line in in_stream:
        line = line.strip()
        if not line:
            continue
        rec_id, dim, mat = parse_record(line)
        result, dec = solve_record(rec_id, dim, mat, corrupt=corrupt)
        jac = jacobi_eigen(mat)
        dev = float(np.max(np.abs(
            np.sort(jac.eigenvalues) - np.sort(result["eigenvalues"]))))
        recon, _, _ = residuals(mat, dec)
        max_dev = max(max_dev, dev)
        max_recon = max(max_recon, recon)
        if dim == 3 and dec.report.near_tie:
            n_near_tie += 1
        n += 1
        if dev <= tol and recon <= tol:
            n_pass += 1
        else:
            n_fail += 1
    summary = {"records": n, "pass": n_pass, "fail": n_fail, "tol": tol,
               "max_eigenvalue_deviation": max_dev,
               "max_recon_residual": max_recon,
               "near_tie_warnings": n_near_tie}
    out_stream.write(_dumps(summary) + "\n")
    return 0 if n_fail == 0 else 1


def random_symmetric_stream(n, seed):
    """Deterministic stream of SymMat3 with entries uniform in [-1, 1]."""
    rng = np.random.default_rng(seed)
    for _ in range(n):
        a11, a22, a33, a12, a13, a23 = rng.uniform(-1.0, 1.0, 6)
        yield SymMat3(a11, a22, a33, a12, a13, a23)


def cmd_bench(out_stream, n, seed):
    """Per-matrix latency of closed-form vs Jacobi on the same matrix stream."""
    mats = list(random_symmetric_stream(n, seed))

    def time_loop(fn):
        lat = np.empty(len(mats))
        for i, m in enumerate(mats):
            t0 = time.perf_counter()
            fn(m)
            lat[i] = time.perf_counter() - t0
        return lat

    lat_cf = time_loop(diagonalize3)
    lat_j = time_loop(lambda m: jacobi_eigen(m, tol=1e-13))
    med_cf = float(np.median(lat_cf))
    med_j = float(np.median(lat_j))
    report = {
        "n": n,
        "seed": seed,
        "closed_form": {"median_us": med_cf * 1e6,
                        "p99_us": float(np.percentile(lat_cf, 99)) * 1e6,
                        "total_s": float(np.sum(lat_cf))},
        "jacobi": {"median_us": med_j * 1e6,
                   "p99_us": float(np.percentile(lat_j, 99)) * 1e6,
                   "total_s": float(np.sum(lat_j))},
        "throughput_ratio_closed_over_jacobi": med_j / med_cf,
    }
    out_stream.write(_dumps(report) + "\n")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="symdiag",
        description="Closed-form diagonalization of 2x2/3x3 real symmetric "
                    "matrices (JSON-lines in, JSON-lines out).")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="diagonalize a stream of matrices")
    p_solve.add_argument("--input", default="-", help="input path (default stdin)")
    p_solve.add_argument("--output", default="-", help="output path (default stdout)")

    p_verify = sub.add_parser("verify", help="check solutions against the Jacobi oracle")
    p_verify.add_argument("--input", default="-", help="input path (default stdin)")
    p_verify.add_argument("--tol", type=float, required=True,
                          help="pass/fail tolerance")
    p_verify.add_argument("--self-test-corrupt", action="store_true",
                          help=argparse.SUPPRESS)

    p_bench = sub.add_parser("bench", help="closed-form vs Jacobi throughput")
    p_bench.add_argument("--n", type=int, required=True, help="matrix count")
    p_bench.add_argument("--seed", type=int, required=True, help="stream seed")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "solve":
            fin = sys.stdin if args.input == "-" else open(args.input)
            fout = sys.stdout if args.output == "-" else open(args.output, "w")
            try:
                return cmd_solve(fin, fout)
            finally:
                if fin is not sys.stdin:
                    fin.close()
                if fout is not sys.stdout:
                    fout.close()
        if args.command == "verify":
            if args.tol <= 0.0:
                print("error: --tol must be positive", file=sys.stderr)
                return 2
            fin = sys.stdin if args.input == "-" else open(args.input)
            try:
                return cmd_verify(fin, sys.stdout, args.tol,
                                  corrupt=args.self_test_corrupt)
            finally:
                if fin is not sys.stdin:
                    fin.close()
        if args.command == "bench":
            if args.n < 1:
                print("error: --n must be at least 1", file=sys.stderr)
                return 2
            return cmd_bench(sys.stdout, args.n, args.seed)
        raise AssertionError(f"unknown command {args.command}")
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 copositive / valid certificate, 1 not copositive / invalid
certificate, 2 usage or parse error, 3 certificate requested for a
copositive matrix, 4 the two minimizers disagree (--paranoid).
"""
import argparse
import sys
import time

from .certificate import BOUND_FACTOR_SQ, DYADIC, FIXED, certify_noncopositive, minimize, verify_certificate
from .core import encoding_length, gamma_threshold
from .errors import CopositiveInputError, CopositivityError, DimensionLimitError, ParseError
from .families import KINDS, embed, paper_stated_length, random_instance, remark_b_matrix
from .fileio import fraction_str, read_matrix, read_vector, render_report, serialize_matrix, serialize_vector

EXIT_COPOSITIVE = 0
EXIT_NOT_COPOSITIVE = 1
EXIT_USAGE = 2
EXIT_NO_CERTIFICATE = 3
EXIT_DISAGREEMENT = 4


class Disagreement(Exception):
    pass


def _solve(M, args):
    result = minimize(M, args.method, args.max_n)
    if args.paranoid:
        other = minimize(M, "oracle" if args.method == "lcp" else "lcp", args.max_n)
        if other.gamma != result.gamma:
            raise Disagreement(f"{result.method} gamma {result.gamma} != {other.method} gamma {other.gamma}")
    return result


def _base_report(M, result, started):
    stats = encoding_length(M)
    thr = gamma_threshold(stats.L)
    return {
        "verdict": "copositive" if result.gamma == 0 else "not-copositive",
        "gamma": fraction_str(result.gamma),
        "L": stats.L,
        "d": stats.d,
        "n": stats.n,
        "gamma_threshold": fraction_str(thr),
        "gap_ok": result.gamma == 0 or result.gamma <= thr,
        "argmin": [fraction_str(t) for t in result.argmin],
        "method": result.method,
        "elapsed_us": int((time.perf_counter() - started) * 1e6),
    }


def cmd_check(args) -> int:
    started = time.perf_counter()
    M = read_matrix(args.matrix)
    result = _solve(M, args)
    report = _base_report(M, result, started)
    if args.paranoid:
        report["cross_checked"] = True
    sys.stdout.write(render_report(report, args.format))
    return EXIT_COPOSITIVE if result.gamma == 0 else EXIT_NOT_COPOSITIVE


def cmd_certify(args) -> int:
    started = time.perf_counter()
    M = read_matrix(args.matrix)
    result = _solve(M, args)
    try:
        cert = certify_noncopositive(M, args.scheme, result=result)
    except CopositiveInputError as exc:
        report = _base_report(M, result, started)
        report["error"] = str(exc)
        sys.stdout.write(render_report(report, args.format))
        return EXIT_NO_CERTIFICATE
    report = _base_report(M, result, started)
    bits, L = cert.measured_bits, cert.L
    report.update({
        "certificate": [fraction_str(t) for t in cert.y],
        "value": fraction_str(cert.value),
        "scheme": cert.scheme,
        "spacing_denominator": cert.spacing_denominator,
        "measured_bits": bits,
        "bound_ok": cert.bound_bits_ok,
        "bits_le_17L^{3/2}": bits * bits <= BOUND_FACTOR_SQ[FIXED] * L ** 3,
        "bits_le_10L^{3/2}": bits * bits <= BOUND_FACTOR_SQ[DYADIC] * L ** 3,
    })
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(serialize_vector(cert.y))
    sys.stdout.write(render_report(report, args.format))
    return EXIT_NOT_COPOSITIVE


def cmd_verify(args) -> int:
    M = read_matrix(args.matrix)
    y = read_vector(args.vector)
    res = verify_certificate(M, y)
    report = {"valid": res.valid, "value": fraction_str(res.value), "reason": res.reason}
    sys.stdout.write(render_report(report, args.format))
    return EXIT_COPOSITIVE if res.valid else EXIT_NOT_COPOSITIVE


def cmd_gen(args) -> int:
    if args.kind == "remark-b":
        if args.k is None or args.k < 1:
            raise ParseError("remark-b needs --k >= 1")
        M = remark_b_matrix(args.k)
        comment = f"remark-b k={args.k}"
    elif args.kind == "embed":
        if args.k is None or args.k < 1 or args.n is None or args.n < 2:
            raise ParseError("embed needs --k >= 1 and --n >= 2")
        M = embed(remark_b_matrix(args.k), args.n)
        comment = f"embed k={args.k} n={args.n}"
    else:
        if args.n is None or args.n < 1 or args.bound < 1:
            raise ParseError("random needs --n >= 1 and --bound >= 1")
        M = random_instance(args.random_kind, args.n, args.bound, args.seed)
        comment = f"random kind={args.random_kind} n={args.n} bound={args.bound} seed={args.seed}"
    text = serialize_matrix(M, comment)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.audit:
        audit = {"L_strict": encoding_length(M).L}
        if args.kind in ("remark-b", "embed"):
            audit["L_paper"] = paper_stated_length(args.k, M.n)
        sys.stderr.write(render_report(audit, "plain"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="copocert", description="Exact copositivity checks and certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    def solver_flags(p):
        p.add_argument("matrix")
        p.add_argument("--method", choices=("lcp", "oracle"), default="lcp")
        p.add_argument("--paranoid", action="store_true", help="run both minimizers and require agreement")
        p.add_argument("--max-n", type=int, default=None, help="enumeration dimension limit")
        p.add_argument("--format", choices=("plain", "json"), default="plain")

    p = sub.add_parser("check", help="decide copositivity")
    solver_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("certify", help="construct a certificate of non-copositivity")
    solver_flags(p)
    p.add_argument("--scheme", choices=(FIXED, DYADIC), default=FIXED)
    p.add_argument("--out", help="write the certificate vector to this file")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="check a certificate vector")
    p.add_argument("matrix")
    p.add_argument("vector")
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a matrix file")
    p.add_argument("kind", choices=("remark-b", "embed", "random"))
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--kind", dest="random_kind", choices=KINDS, default="symmetric")
    p.add_argument("--bound", type=int, default=9)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--out")
    p.add_argument("--audit", action="store_true", help="print strict and stated encoding lengths to stderr")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Disagreement as exc:
        print(f"error: minimizers disagree: {exc}", file=sys.stderr)
        return EXIT_DISAGREEMENT
    except (CopositivityError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

"""Command-line front end.

Exit status: 0 on success (whatever the verdict), 2 for unreadable or
invalid input, 3 when an internal cross-check fails.
"""

import argparse
import json
import os
import sys

from .autom import DiagonalAutomorphism, conjugate
from .darboux import (
    InvariantViolation,
    as_weight_solution,
    certify_darboux_free,
    constants_basis_inhomogeneous,
    eliminate_cofactors,
    constants_levels,
)
from .derivation import is_normal, wd
from .exactnum import zeta_pow
from .exprparse import ParseError
from .grading import find_symmetry_weights, standard_degree
from .specio import SpecError, automorphism_from_spec, derivation_from_spec, read_json

THREADS_ENV = "DARBOUXCERT_THREADS"


def _emit(args, data, text_lines):
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        for line in text_lines:
            print(line)


def _bool(b):
    return "true" if b else "false"


def cmd_wd(args, d):
    beta = d.exponent_matrix()
    w, normal = wd(beta), is_normal(beta)
    _emit(args, {"w_d": w, "normal": normal}, [f"w_d = {w}, normal = {_bool(normal)}"])


def _symmetry_rows(d, m):
    s = standard_degree(d)
    rows = []
    for sol in find_symmetry_weights(d.exponent_matrix(), m):
        entry = {"weights": list(sol.weights.weights), "shift": sol.shift,
                 "trivial": sol.is_trivial(), "eliminates": None, "elimination": None}
        if s == 1:
            rep = eliminate_cofactors(d, sol)
            entry["eliminates"] = rep.forced_zero
            entry["elimination"] = rep.flags()
        rows.append(entry)
    return s, rows


def cmd_symmetry(args, d):
    m = args.modulus
    s, rows = _symmetry_rows(d, m)
    lines = [f"{len(rows)} symmetry solutions modulo {m} (standard degree {s})"]
    for r in rows:
        tags = []
        if r["trivial"]:
            tags.append("trivial")
        if r["eliminates"] is None:
            tags.append("elimination n/a")
        elif r["eliminates"]:
            tags.append("eliminates Λ")
        else:
            kept = [v for v, ok in r["elimination"].items() if not ok]
            tags.append("keeps " + ",".join(kept))
        w = ", ".join(str(v) for v in r["weights"])
        lines.append(f"({w}; c={r['shift']})  {'  '.join(tags)}")
    _emit(args, {"modulus": m, "standard_degree": s, "solutions": rows}, lines)


def _automorphism(args, d):
    if args.automorphism:
        sigma = automorphism_from_spec(read_json(args.automorphism))
    elif args.weights:
        sigma = DiagonalAutomorphism.from_weights(args.weights, args.modulus)
    else:
        raise SpecError("conjugate needs --automorphism or --weights")
    if len(sigma) != d.ctx.arity:
        raise SpecError(f"automorphism has {len(sigma)} scalars for {d.ctx.arity} variables")
    return sigma


def cmd_conjugate(args, d):
    sigma = _automorphism(args, d)
    conj = conjugate(sigma, d)
    power = next((c for c in range(8) if conj == d.scale(zeta_pow(c))), None)
    lines = [f"sigma = ({', '.join(sigma.scalar_strings())})"]
    lines += [f"sigma^-1 d sigma ({v}) = {img}" for v, img in zip(d.ctx.names, conj.images)]
    lines.append(f"sigma^-1 d sigma = ({zeta_pow(power)}) * d" if power is not None
                 else "sigma^-1 d sigma is not a root-of-unity multiple of d")
    data = {"scalars": sigma.scalar_strings(), "images": conj.image_strings(),
            "eps_power": power}
    _emit(args, data, lines)


def cmd_constants(args, d):
    N = args.max_degree if args.max_degree is not None else 8
    if standard_degree(d) is None:
        basis = constants_basis_inhomogeneous(d, N)
        data = {"max_degree": N, "inhomogeneous": True, "basis": [str(b) for b in basis]}
        lines = [f"degree <= {N}: nullity {len(basis)}"] + [f"  {b}" for b in basis]
        _emit(args, data, lines)
        return
    levels = constants_levels(d, range(1, N + 1), args.threads, args.oracle_check)
    data = {"max_degree": N, "levels": [
        {"degree": p, "columns": ncols, "nullity": len(basis), "basis": [str(b) for b in basis]}
        for p, ncols, basis, _ in levels]}
    lines = []
    for p, ncols, basis, _ in levels:
        lines.append(f"degree {p}: columns {ncols}, nullity {len(basis)}")
        lines += [f"  {b}" for b in basis]
    _emit(args, data, lines)


def cmd_certify(args, d):
    D = args.max_degree if args.max_degree is not None else 2
    symmetry = None
    if args.weights is not None:
        if args.shift is None:
            raise SpecError("--weights with certify also needs --shift")
        symmetry = as_weight_solution(args.weights, args.shift, args.modulus)
    cert = certify_darboux_free(d, D, args.modulus, threads=args.threads,
                                oracle_check=args.oracle_check, symmetry=symmetry,
                                timings=args.timings)
    text = cert.to_json()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    if args.format == "json":
        sys.stdout.write(text)
        return
    print(f"verdict: {cert.verdict.value}")
    print(f"standard degree: {cert.standard_degree}")
    if cert.symmetry:
        w = ", ".join(str(v) for v in cert.symmetry["weights"])
        print(f"symmetry: ({w}; c={cert.symmetry['shift']}) mod {cert.symmetry['modulus']}")
    if cert.elimination is not None:
        flags = ", ".join(f"{v}={_bool(ok)}" for v, ok in cert.elimination.items())
        print(f"cofactor eliminated: {flags}")
    for row in cert.nullities:
        print(f"degree {row['degree']}: columns {row['columns']}, nullity {row['nullity']}")
    if cert.witness:
        print(f"witness: f = {cert.witness['f']}, cofactor = {cert.witness['cofactor']}")
    if cert.darboux_free_degree_bound is not None:
        print(f"no Darboux polynomial of degree <= {cert.darboux_free_degree_bound}")
    for note in cert.notes:
        print(f"note: {note}")


COMMANDS = {
    "wd": cmd_wd,
    "symmetry": cmd_symmetry,
    "conjugate": cmd_conjugate,
    "constants": cmd_constants,
    "certify": cmd_certify,
}


def _int_list(text):
    try:
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", required=True, help="derivation spec (JSON), '-' for stdin")
    common.add_argument("--max-degree", type=_nonneg, default=None,
                        help="N for constants (default 8), D for certify (default 2)")
    common.add_argument("--modulus", type=int, default=8)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--threads", type=int, default=None)
    common.add_argument("--oracle-check", action="store_true",
                        help="cross-check small systems against dense elimination")

    parser = argparse.ArgumentParser(prog="darbouxcert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("wd", parents=[common], help="w_d and normality")
    sub.add_parser("symmetry", parents=[common], help="diagonal symmetries modulo m")
    p = sub.add_parser("conjugate", parents=[common], help="conjugate d by an automorphism")
    p.add_argument("--automorphism", help="automorphism spec (JSON)")
    p.add_argument("--weights", type=_int_list, help="weights, realised as z8^(8/m*w)")
    sub.add_parser("constants", parents=[common], help="polynomial constants by degree")
    p = sub.add_parser("certify", parents=[common], help="bounded-degree Darboux-free certificate")
    p.add_argument("--output", "-o", help="also write the certificate JSON here")
    p.add_argument("--weights", type=_int_list, help="pin the symmetry weights")
    p.add_argument("--shift", type=int, help="shift c of the pinned symmetry")
    p.add_argument("--timings", action="store_true", help="add wall-clock seconds per degree")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.threads is None:
        args.threads = int(os.environ.get(THREADS_ENV, "1"))
    if args.modulus < 2:
        print("error: --modulus must be at least 2", file=sys.stderr)
        return 2
    try:
        d = derivation_from_spec(read_json(args.input))
        COMMANDS[args.command](args, d)
    except InvariantViolation as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 3
    except (ParseError, SpecError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

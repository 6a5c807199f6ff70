"""Command-line front end.

Subcommands::

    conika design build   --kind sic|mub|basis|sic-depol|mub-depol|fiducial --d N --out FILE
    conika design certify --in FILE|builtin:NAME
    conika concurrence    --design SPEC --state SPEC
    conika invariance     --design SPEC --state SPEC --trials N
    conika witness report --design SPEC
    conika werner scan    --d N --design SPEC --step 0.01

A design SPEC is a POVM JSON file or ``builtin:sic``, ``builtin:mub``,
``builtin:basis``, ``builtin:sic-depol:t=0.5``, ``builtin:mub-depol:t=0.5``
(dimension from ``--d``). A state SPEC is a state JSON file or
``builtin:phi-plus``, ``builtin:product``, ``builtin:random:seed=N``.

Exit status: 0 success, 1 domain error, 2 usage error.
"""
import argparse
import math
import os
import sys

import numpy as np

from . import designs, serialize
from .certifier import certify, rank_profile
from .entanglement import (
    BipartiteState,
    concurrence_oracle,
    design_concurrence,
    local_unitary_orbit_norms,
    probability_vector,
)
from .errors import ConikaError
from .linalg import DEFAULT_TOL, max_entangled_state
from .witnesses import witness_report, werner_scan

TOL_ENV = "CONIKA_TOL"


class UsageError(Exception):
    pass


def default_tol():
    raw = os.environ.get(TOL_ENV)
    if raw is None:
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise UsageError(f"{TOL_ENV}={raw!r} is not a number") from None
    if not tol > 0:
        raise UsageError(f"{TOL_ENV} must be positive")
    return tol


def positive_float(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _builtin_params(rest):
    params = {}
    for part in rest:
        key, sep, value = part.partition("=")
        if not sep:
            raise ConikaError(f"builtin parameter {part!r} is not key=value")
        params[key] = value
    return params


def resolve_design(spec, d):
    if spec.startswith("builtin:"):
        name, *rest = spec[len("builtin:"):].split(":")
        params = _builtin_params(rest)
        return build_design(name, d, float(params.get("t", 1.0)))
    return serialize.povm_from_json(serialize.load_file(spec))


def build_design(kind, d, t=1.0, fiducial=None):
    if kind == "sic":
        return designs.sic_povm(d)
    if kind == "mub":
        return designs.mub_full_set(d)
    if kind == "basis":
        return designs.basis_povm(d)
    if kind == "sic-depol":
        return designs.depolarize(designs.sic_povm(d), t)
    if kind == "mub-depol":
        return designs.depolarize(designs.mub_full_set(d), t)
    if kind == "fiducial":
        if fiducial is None:
            raise ConikaError("--kind fiducial needs --fiducial FILE")
        state = serialize.load_file(fiducial)
        vec = serialize.matrix_from_json(state).ravel()
        return designs.sic_from_fiducial(vec)
    raise ConikaError(f"unknown design kind {kind!r}")


def resolve_state(spec, d):
    if spec.startswith("builtin:"):
        name, *rest = spec[len("builtin:"):].split(":")
        params = _builtin_params(rest)
        if name == "phi-plus":
            return BipartiteState.from_vector(max_entangled_state(d), d)
        if name == "product":
            v = np.zeros(d * d, dtype=np.complex128)
            v[0] = 1.0
            return BipartiteState.from_vector(v, d)
        if name == "random":
            return BipartiteState.random(d, int(params.get("seed", 0)))
        raise ConikaError(f"unknown builtin state {name!r}")
    return serialize.state_from_json(serialize.load_file(spec))


def emit(payload, fmt, text_lines=None):
    if fmt == "json":
        sys.stdout.write(serialize.dumps(payload))
    else:
        lines = text_lines if text_lines is not None else [f"{k}: {v}" for k, v in payload.items()]
        sys.stdout.write("\n".join(lines) + "\n")


def certificate_text(cert):
    return [
        f"k_s: {cert.k_s!r}",
        f"k_a: {cert.k_a!r}",
        f"k_plus  = (k_s + k_a)/2: {cert.k_plus!r}",
        f"k_minus = (k_s - k_a)/2: {cert.k_minus!r}",
        f"k_s + k_a (unhalved): {cert.k_sum!r}",
        f"k_s - k_a (unhalved): {cert.k_diff!r}",
        f"design_residual: {cert.design_residual:.3e}",
        f"povm_residual: {cert.povm_residual:.3e}",
        f"is_conical_design: {cert.is_conical_design}",
        f"is_projective_design: {cert.is_projective_design}",
    ]


def cmd_design_build(args):
    povm = build_design(args.kind, args.d, args.t, args.fiducial)
    serialize.write_file(args.out, serialize.povm_to_json(povm))
    emit({"out": args.out, "dim": povm.dim, "elements": len(povm), "label": povm.label}, args.format)


def cmd_design_certify(args):
    povm = resolve_design(args.input, args.d)
    cert = certify(povm, args.tol)
    payload = cert.to_dict()
    if args.ranks:
        payload["ranks"] = rank_profile(povm, args.tol)
    emit(payload, args.format, certificate_text(cert))


def cmd_concurrence(args):
    povm = resolve_design(args.design, args.d)
    state = resolve_state(args.state, povm.dim)
    cert = certify(povm, args.tol)
    table = probability_vector(povm, state)
    formula = design_concurrence(cert, table.norm, args.tol)
    oracle = concurrence_oracle(state)
    emit(
        {
            "pnorm": table.norm,
            "concurrence": formula,
            "oracle": oracle,
            "difference": abs(formula - oracle),
        },
        args.format,
    )


def cmd_invariance(args):
    povm = resolve_design(args.design, args.d)
    state = resolve_state(args.state, povm.dim)
    norms = local_unitary_orbit_norms(povm, state, args.trials, args.seed)
    emit(
        {
            "trials": args.trials,
            "seed": args.seed,
            "min": float(norms.min()),
            "max": float(norms.max()),
            "spread": float(norms.max() - norms.min()),
            "invariant": bool(norms.max() - norms.min() <= args.tol),
        },
        args.format,
    )


def cmd_witness_report(args):
    povm = resolve_design(args.design, args.d)
    cert = certify(povm, args.tol)
    report = witness_report(cert, povm.dim, povm=povm, restarts=args.restarts, iters=args.iters, seed=args.seed)
    emit(report.to_dict(), args.format)


def cmd_werner_scan(args):
    povm = resolve_design(args.design, args.d)
    cert = certify(povm, args.tol)
    rows = werner_scan(cert, povm.dim, args.step)
    first_linear = next((r["p"] for r in rows if r["below"]), None)
    first_quadratic = next((r["p"] for r in rows if r["detected"]), None)
    payload = {
        "d": povm.dim,
        "design": args.design,
        "first_linear_detection": first_linear,
        "first_quadratic_detection": first_quadratic,
        "rows": rows,
    }
    header = f"{'p':>6} {'Tr(rho N)':>14} {'below':>6} {'quad-lhs':>14} {'quad-bound':>14} {'detected':>9}"
    lines = [header] + [
        f"{r['p']:6.2f} {r['tr_rho_N']:14.10f} {str(r['below']):>6} "
        f"{r['quadratic_lhs']:14.10f} {r['quadratic_bound']:14.10f} {str(r['detected']):>9}"
        for r in rows
    ]
    lines.append(f"first linear-below detection: {first_linear}")
    lines.append(f"first quadratic detection: {first_quadratic}")
    emit(payload, args.format, lines)


def build_parser(tol):
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=positive_float, default=tol, help=f"tolerance (default {tol:g}, env {TOL_ENV})")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--d", type=int, default=2, help="dimension for builtin designs and states")

    parser = argparse.ArgumentParser(prog="conika", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    design = sub.add_parser("design").add_subparsers(dest="action", required=True)
    p = design.add_parser("build", parents=[common])
    p.add_argument("--kind", required=True, choices=("sic", "mub", "basis", "sic-depol", "mub-depol", "fiducial"))
    p.add_argument("--t", type=float, default=1.0, help="smearing parameter for *-depol kinds")
    p.add_argument("--fiducial", help="ComplexMatrix JSON file holding the fiducial vector")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_design_build)

    p = design.add_parser("certify", parents=[common])
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--ranks", action="store_true", help="include element ranks")
    p.set_defaults(func=cmd_design_certify)

    p = sub.add_parser("concurrence", parents=[common])
    p.add_argument("--design", required=True)
    p.add_argument("--state", required=True)
    p.set_defaults(func=cmd_concurrence)

    p = sub.add_parser("invariance", parents=[common])
    p.add_argument("--design", required=True)
    p.add_argument("--state", required=True)
    p.add_argument("--trials", type=int, default=50)
    p.set_defaults(func=cmd_invariance)

    witness = sub.add_parser("witness").add_subparsers(dest="action", required=True)
    p = witness.add_parser("report", parents=[common])
    p.add_argument("--design", required=True)
    p.add_argument("--restarts", type=int, default=32)
    p.add_argument("--iters", type=int, default=200)
    p.set_defaults(func=cmd_witness_report)

    werner = sub.add_parser("werner").add_subparsers(dest="action", required=True)
    p = werner.add_parser("scan", parents=[common])
    p.add_argument("--design", required=True)
    p.add_argument("--step", type=positive_float, default=0.01)
    p.set_defaults(func=cmd_werner_scan)
    return parser


def run(argv=None):
    try:
        tol = default_tol()
    except UsageError as exc:
        print(f"conika: error: {exc}", file=sys.stderr)
        return 2
    parser = build_parser(tol)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except FileNotFoundError as exc:
        print(f"conika: error: no such file: {exc.filename}", file=sys.stderr)
        return 1
    except (ConikaError, OSError, ValueError) as exc:
        print(f"conika: error: {exc}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

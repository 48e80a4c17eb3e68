"""Command-line front end.

Subcommands: entropy-two-state, fig1-sweep, purity cat|thermal,
oracle-compare. Output goes to stdout as CSV (17-significant-digit,
locale-independent) or JSON Lines; warnings and diagnostics to stderr.

Exit codes: 0 success, 2 usage or validation error, 3 Fock cutoff
exceeded, 4 purity-inequality violation, 5 comparison failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .coherent import TwoStateMixtureSpec, validate_mixture
from .errors import CatmixError, CutoffExceeded, DegenerateCatState
from .fock import partial_trace
from .oracle import (
    DEFAULT_COMPARE_TOL,
    cat_mixture_fock,
    cat_mode_cutoffs,
    fock_entropy,
    suite_cases,
    two_state_fock,
)
from .purity import (
    CatSeparableSpec,
    ThermalMixtureSpec,
    purity_gap_cat,
    purity_gap_thermal,
    purity_triple_cat,
    purity_triple_thermal,
)
from .replica import entropy_closed
from .twomode import (
    CatMixtureSpec,
    DEFAULT_GRID_MAX,
    DEFAULT_GRID_MIN,
    DEFAULT_GRID_POINTS,
    default_grid,
    reduced_entropy,
    validate_cat_mixture,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CUTOFF = 3
EXIT_INEQUALITY = 4
EXIT_COMPARE = 5

LN2 = math.log(2.0)


def _fmt(x) -> str:
    """Fixed 17-significant-digit CSV number formatting."""
    if x is None:
        return ""
    return format(float(x), ".17g")


def emit_records(records: list[dict], as_json: bool, out) -> None:
    """Write OutputRecords as JSON Lines or CSV with a header row.

    JSON keeps the nested `inputs` map; CSV flattens input keys into
    columns (union over the stream, blank where absent).
    """
    if as_json:
        for rec in records:
            out.write(json.dumps(rec) + "\n")
        return
    input_keys: list[str] = []
    tail_keys: list[str] = []
    for rec in records:
        for key in rec.get("inputs", {}):
            if key not in input_keys:
                input_keys.append(key)
        for key in rec:
            if key not in ("quantity", "inputs") and key not in tail_keys:
                tail_keys.append(key)
    out.write(",".join(["quantity"] + input_keys + tail_keys) + "\n")
    for rec in records:
        row = [rec["quantity"]]
        inputs = rec.get("inputs", {})
        for key in input_keys:
            val = inputs.get(key)
            row.append("" if val is None else
                       str(val) if isinstance(val, (str, int)) else _fmt(val))
        for key in tail_keys:
            val = rec.get(key)
            if isinstance(val, bool):
                row.append(str(val).lower())
            elif isinstance(val, (str, int)):
                row.append(str(val))
            else:
                row.append(_fmt(val))
        out.write(",".join(row) + "\n")


def _record(quantity: str, inputs: dict, value: float, oracle_value=None) -> dict:
    rec = {"quantity": quantity, "inputs": inputs, "value": value}
    if oracle_value is not None:
        rec["oracle_value"] = oracle_value
        rec["abs_diff"] = abs(value - oracle_value)
    return rec


def cmd_entropy_two_state(args) -> int:
    spec = validate_mixture(
        TwoStateMixtureSpec(
            args.a,
            args.b,
            complex(args.c_re, args.c_im),
            complex(args.alpha_re, args.alpha_im),
            complex(args.beta_re, args.beta_im),
        )
    )
    unit = LN2 if args.bits else 1.0
    value = entropy_closed(spec) / unit
    oracle_value = None
    if args.oracle:
        oracle_value = fock_entropy(two_state_fock(spec)) / unit
    inputs = {
        "a": args.a,
        "b": args.b,
        "c_re": args.c_re,
        "c_im": args.c_im,
        "alpha_re": args.alpha_re,
        "alpha_im": args.alpha_im,
        "beta_re": args.beta_re,
        "beta_im": args.beta_im,
    }
    quantity = "entropy_two_state_bits" if args.bits else "entropy_two_state"
    emit_records([_record(quantity, inputs, value, oracle_value)], args.json, sys.stdout)
    return EXIT_OK


def cmd_fig1_sweep(args) -> int:
    ratios = [float(r) for r in args.ratios.split(",") if r]
    if not ratios or any(r <= 0.0 for r in ratios):
        raise CatmixError("ratios must be positive, got %r" % args.ratios)
    if abs(args.a + args.b - 1.0) > 1e-12:
        raise CatmixError("weights must satisfy a + b = 1")
    grid = default_grid(args.grid_min, args.grid_max, args.points)
    with_oracle = args.oracle_every > 0
    as_json = args.format == "json"
    out = sys.stdout
    header = ["ratio", "abs_alpha1", "entropy_nats"]
    if with_oracle:
        header += ["oracle_entropy", "abs_diff"]
    if not as_json:
        out.write(",".join(header) + "\n")
    row_index = 0
    for ratio in ratios:
        for g in grid:
            try:
                spec = validate_cat_mixture(CatMixtureSpec(args.a, args.b, g, ratio * g))
                value = reduced_entropy(spec, 1)
            except DegenerateCatState as exc:
                print("warning: skipping ratio=%g |alpha1|=%g: %s" % (ratio, g, exc),
                      file=sys.stderr)
                continue
            row_index += 1
            oracle_value = None
            if with_oracle and row_index % args.oracle_every == 0:
                rho = cat_mixture_fock(spec, cat_mode_cutoffs(spec))
                oracle_value = fock_entropy(partial_trace(rho, 1))
            if as_json:
                rec = {"ratio": ratio, "abs_alpha1": g, "entropy_nats": value}
                if oracle_value is not None:
                    rec["oracle_entropy"] = oracle_value
                    rec["abs_diff"] = abs(value - oracle_value)
                out.write(json.dumps(rec) + "\n")
            else:
                row = [_fmt(ratio), _fmt(g), _fmt(value)]
                if with_oracle:
                    if oracle_value is None:
                        row += ["", ""]
                    else:
                        row += [_fmt(oracle_value), _fmt(abs(value - oracle_value))]
                out.write(",".join(row) + "\n")
    return EXIT_OK


def cmd_purity(args) -> int:
    if args.case == "cat":
        spec = CatSeparableSpec(
            args.a,
            args.b,
            complex(args.alpha1_re, args.alpha1_im),
            complex(args.alpha2_re, args.alpha2_im),
        )
        triple = purity_triple_cat(spec)
        gap = purity_gap_cat(spec)
        inputs = {
            "a": args.a,
            "b": args.b,
            "alpha1_re": args.alpha1_re,
            "alpha1_im": args.alpha1_im,
            "alpha2_re": args.alpha2_re,
            "alpha2_im": args.alpha2_im,
        }
        prefix = "purity_cat"
    else:
        spec = ThermalMixtureSpec(
            complex(args.alpha1_re, args.alpha1_im),
            complex(args.alpha2_re, args.alpha2_im),
            args.mean_photons,
        )
        triple = purity_triple_thermal(spec)
        gap = purity_gap_thermal(spec)
        inputs = {
            "mean_photons": args.mean_photons,
            "alpha1_re": args.alpha1_re,
            "alpha1_im": args.alpha1_im,
            "alpha2_re": args.alpha2_re,
            "alpha2_im": args.alpha2_im,
        }
        prefix = "purity_thermal"
    records = [
        _record(prefix + "_mu12", inputs, triple.mu12),
        _record(prefix + "_mu1", inputs, triple.mu1),
        _record(prefix + "_mu2", inputs, triple.mu2),
        _record(prefix + "_gap", inputs, gap),
    ]
    emit_records(records, args.json, sys.stdout)
    if gap < 0.0:
        print("error: purity inequality violated: gap = %.17g" % gap, file=sys.stderr)
        return EXIT_INEQUALITY
    return EXIT_OK


def cmd_oracle_compare(args) -> int:
    cases = suite_cases(args.suite)
    records = []
    failures = 0
    max_diff = 0.0
    for case in cases:
        rec = _record(case.quantity, case.inputs, float(case.value), float(case.oracle_value))
        rec["pass"] = bool(case.abs_diff <= args.tol)
        records.append(rec)
        max_diff = max(max_diff, case.abs_diff)
        if case.abs_diff > args.tol:
            failures += 1
            print(
                "error: %s %s: |diff| = %.3e > %g"
                % (case.quantity, case.inputs, case.abs_diff, args.tol),
                file=sys.stderr,
            )
    summary = {
        "quantity": "summary",
        "suite": args.suite,
        "cases": len(cases),
        "failures": failures,
        "max_abs_diff": float(max_diff),
        "tol": args.tol,
        "pass": failures == 0,
    }
    emit_records(records + [summary], args.json, sys.stdout)
    return EXIT_OK if failures == 0 else EXIT_COMPARE


def _add_complex_flags(parser, name: str) -> None:
    parser.add_argument("--%s-re" % name, type=float, default=0.0)
    parser.add_argument("--%s-im" % name, type=float, default=0.0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catmix",
        description="Entropies and purity inequalities of coherent-state "
        "mixtures, with brute-force Fock-space cross checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("entropy-two-state", help="entropy of a rank-2 coherent mixture")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    _add_complex_flags(p, "c")
    _add_complex_flags(p, "alpha")
    _add_complex_flags(p, "beta")
    p.add_argument("--bits", action="store_true", help="report in bits instead of nats")
    p.add_argument("--oracle", action="store_true", help="also run the Fock oracle")
    p.add_argument("--json", action="store_true", help="emit JSON Lines")
    p.set_defaults(func=cmd_entropy_two_state)

    p = sub.add_parser("fig1-sweep", help="reduced-entropy sweep over |alpha1|")
    p.add_argument("--ratios", default="0.5,1,2", help="comma-separated |alpha2|/|alpha1|")
    p.add_argument("--grid-min", type=float, default=DEFAULT_GRID_MIN)
    p.add_argument("--grid-max", type=float, default=DEFAULT_GRID_MAX)
    p.add_argument("--points", type=int, default=DEFAULT_GRID_POINTS)
    p.add_argument("--a", type=float, default=0.5)
    p.add_argument("--b", type=float, default=0.5)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument(
        "--oracle-every",
        type=int,
        default=0,
        metavar="K",
        help="add Fock-oracle columns on every K-th row",
    )
    p.set_defaults(func=cmd_fig1_sweep)

    p = sub.add_parser("purity", help="purity parameters and inequality gap")
    purity_sub = p.add_subparsers(dest="case", required=True)
    pc = purity_sub.add_parser("cat", help="separable two-branch coherent mixture")
    pc.add_argument("--a", type=float, required=True)
    pc.add_argument("--b", type=float, required=True)
    _add_complex_flags(pc, "alpha1")
    _add_complex_flags(pc, "alpha2")
    pc.add_argument("--json", action="store_true")
    pc.set_defaults(func=cmd_purity)
    pt = purity_sub.add_parser("thermal", help="coherent/thermal mixture")
    pt.add_argument("--mean-photons", type=float, required=True)
    _add_complex_flags(pt, "alpha1")
    _add_complex_flags(pt, "alpha2")
    pt.add_argument("--json", action="store_true")
    pt.set_defaults(func=cmd_purity)

    p = sub.add_parser("oracle-compare", help="closed form vs brute force")
    p.add_argument("--suite", choices=("quick", "full"), default="quick")
    p.add_argument("--tol", type=float, default=DEFAULT_COMPARE_TOL)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle_compare)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CutoffExceeded as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_CUTOFF
    except (CatmixError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

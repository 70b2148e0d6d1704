"""Batch command-line surface.

Five subcommands over JSON files: ``identities`` (anticommutativity / Lie /
Malcev verdicts), ``cybe`` (Yang-Baxter residual plus the matrix-form and
determinant/trace cross-checks), ``double`` (build a comultiplication, run
the full bialgebra battery on its Drinfeld double, optionally export the
doubled algebra), ``classify`` (staged triangular or semisimple pipeline),
and ``invariants`` (centralizer of the tensor square).

Machine-readable JSON goes to standard output, a one-line summary to
standard error.  Exit code 0 means the run completed (failures are
reported inside the JSON); exit code 2 means bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .algebra import (
    CheckReport,
    algebra_from_dict,
    basis_element,
    check_anticommutative,
    check_lie,
    check_malcev,
    save_algebra,
    tensor_centralizer,
)
from .bialgebra import (
    coboundary_delta,
    compat1_sweep,
    compat2_sweep,
    comultiplication_from_dict,
    drinfeld_double,
    dual_malcev_report,
    form_q_report,
    is_malcev_bialgebra,
)
from .linalg import format_rational
from .malcev7 import (
    pipeline_semisimple_from_tensor,
    pipeline_triangular_from_tensor,
)
from .serialize import jsonable, report_jsonable
from .tensors import (
    cybe_matrix_residual,
    cybe_residual,
    det_trace_residual,
    gamma_matrices,
    tau,
    tensor2_from_dict,
    um_residual,
)

__all__ = ["main", "build_parser"]


class InputError(Exception):
    """Bad command input: missing file, malformed JSON, shape mismatch."""


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputError(f"{path}: file not found")
    except IsADirectoryError:
        raise InputError(f"{path}: is a directory")
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}")


def _load_algebra(path: str):
    data = _load_json(path)
    try:
        return algebra_from_dict(data)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise InputError(f"{path}: not a valid algebra file: {exc}")


def _load_tensor(path: str):
    data = _load_json(path)
    try:
        return tensor2_from_dict(data)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise InputError(f"{path}: not a valid tensor file: {exc}")


def _load_delta(path: str):
    data = _load_json(path)
    try:
        return comultiplication_from_dict(data)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise InputError(f"{path}: not a valid comultiplication file: {exc}")


# ---------------------------------------------------------------------------
# subcommands


def cmd_identities(args) -> tuple[dict, str]:
    alg = _load_algebra(args.algebra)
    anti = check_anticommutative(alg)
    if anti.ok:
        lie = check_lie(alg)
        mal = check_malcev(alg, samples=args.samples, seed=args.seed)
    else:
        # both identity families presuppose anticommutativity
        tagged = CheckReport(
            ok=False, witness=dict(anti.witness, kind="not-anticommutative")
        )
        lie = tagged
        mal = tagged
    witnesses = {}
    if not anti.ok:
        witnesses["anticommutative"] = anti.witness
    if not lie.ok:
        witnesses["lie"] = lie.witness
    if not mal.ok:
        witnesses["malcev"] = mal.witness
    report = {
        "anticommutative": anti.ok,
        "lie": lie.ok,
        "malcev": mal.ok,
        "witnesses": jsonable(witnesses),
    }
    summary = (
        f"identities: anticommutative={anti.ok} lie={lie.ok} malcev={mal.ok}"
    )
    return report, summary


def cmd_cybe(args) -> tuple[dict, str]:
    alg = _load_algebra(args.algebra)
    t = _load_tensor(args.tensor)
    if t.dim != alg.dim:
        raise InputError(
            f"dimension mismatch: algebra has dim {alg.dim}, tensor has dim {t.dim}"
        )
    residual = cybe_residual(alg, t)
    gammas = gamma_matrices(alg)
    lam = t.matrix()
    matrix_form = cybe_matrix_residual(lam, gammas)
    dt = det_trace_residual(lam, gammas)
    report = {
        "is_solution": residual.is_zero(),
        "nonzero_components": [
            [i, j, k, format_rational(c)] for i, j, k, c in residual.entries()
        ],
        "matrix_form": {
            "is_zero": matrix_form.is_zero(),
            "nonzero_components": [
                [i, j, k, format_rational(c)] for i, j, k, c in matrix_form.entries()
            ],
        },
        "det_trace": {
            "determinant": format_rational(dt.determinant),
            "values": [format_rational(v) for v in dt.values],
            "is_zero": dt.is_zero(),
        },
        "zero_sets_agree": residual.is_zero() == matrix_form.is_zero(),
    }
    summary = (
        f"cybe: is_solution={report['is_solution']} "
        f"matrix_form_zero={matrix_form.is_zero()} "
        f"det_trace_zero={dt.is_zero()}"
    )
    return report, summary


def cmd_double(args) -> tuple[dict, str]:
    alg = _load_algebra(args.algebra)
    r = None
    if args.delta is not None:
        delta = _load_delta(args.delta)
    else:
        if args.coboundary is None:
            raise InputError("--coboundary is required with --tensor")
        r = _load_tensor(args.tensor)
        if r.dim != alg.dim:
            raise InputError(
                f"dimension mismatch: algebra has dim {alg.dim}, tensor has dim {r.dim}"
            )
        delta = coboundary_delta(alg, r)
        if args.coboundary == "-1":
            delta = delta.scaled(-1)
    if delta.dim != alg.dim:
        raise InputError(
            f"dimension mismatch: algebra has dim {alg.dim}, "
            f"comultiplication has dim {delta.dim}"
        )
    dd = drinfeld_double(alg, delta)
    bial = is_malcev_bialgebra(
        alg, delta, samples=args.samples, seed=args.seed, double=dd
    )
    dual = dual_malcev_report(delta, samples=args.samples, seed=args.seed)
    c1 = compat1_sweep(alg, delta)
    c2 = compat2_sweep(alg, delta)
    pairing = form_q_report(dd)
    report = {
        "bialgebra": bial.ok,
        "checks": jsonable(bial.checks),
        "witness": jsonable(bial.witness),
        "dual_malcev": report_jsonable(dual),
        "compat1": report_jsonable(c1),
        "compat2": report_jsonable(c2),
        "pairing": report_jsonable(pairing),
        "equivalence_agrees": bial.ok == (dual.ok and c1.ok and c2.ok),
    }
    if r is not None and tau(r).add(r).is_zero():
        vanishes = True
        witness = None
        for a in range(alg.dim):
            ea = basis_element(alg, a)
            for b in range(alg.dim):
                res = um_residual(
                    alg, r, ea, basis_element(alg, b), slot_variant=args.slot_variant
                )
                if not res.is_zero():
                    vanishes = False
                    witness = {"indices": (a, b), "first_entry": res.entries()[0]}
                    break
            if not vanishes:
                break
        report["coboundary_obstruction"] = {
            "variant": args.slot_variant,
            "vanishes": vanishes,
            "witness": jsonable(witness),
        }
    if args.export is not None:
        save_algebra(dd.algebra, args.export)
        report["export"] = args.export
    summary = (
        f"double: bialgebra={bial.ok} dual_malcev={dual.ok} "
        f"compat1={c1.ok} compat2={c2.ok} agreement={report['equivalence_agrees']}"
    )
    return report, summary


def cmd_classify(args) -> tuple[dict, str]:
    alg = _load_algebra(args.algebra)
    if alg.dim != 7:
        raise InputError(
            f"classification pipelines require the dimension-7 algebra, got dim {alg.dim}"
        )
    r = _load_tensor(args.tensor)
    if r.dim != alg.dim:
        raise InputError(
            f"dimension mismatch: algebra has dim {alg.dim}, tensor has dim {r.dim}"
        )
    if args.mode == "triangular":
        rep = pipeline_triangular_from_tensor(alg, r, samples=args.samples, seed=args.seed)
    else:
        rep = pipeline_semisimple_from_tensor(alg, r, samples=args.samples, seed=args.seed)
    report = {"mode": args.mode, "ok": rep.ok, "stages": rep.to_jsonable()}
    if rep.ok:
        summary = f"classify[{args.mode}]: ok ({len(rep.stages)} stages)"
    else:
        failed = next(stage.stage for stage in rep.stages if not stage.ok)
        summary = f"classify[{args.mode}]: failed at stage '{failed}'"
    return report, summary


def cmd_invariants(args) -> tuple[dict, str]:
    alg = _load_algebra(args.algebra)
    cent = tensor_centralizer(alg)
    n = alg.dim
    basis = []
    for row in cent.rows():
        entries = []
        for flat, c in enumerate(row):
            if c:
                entries.append([flat // n, flat % n, format_rational(c)])
        basis.append(entries)
    report = {"dimension": cent.dim, "basis": basis}
    summary = f"invariants: centralizer dimension {cent.dim}"
    return report, summary


# ---------------------------------------------------------------------------
# wiring


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="malcevkit",
        description=(
            "Exact verification of nonassociative algebra identities, "
            "Yang-Baxter solutions, and Drinfeld-double bialgebra structure."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_sampling(p):
        p.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
        p.add_argument(
            "--samples", type=int, default=200, help="sample count for sampled checks"
        )

    p = sub.add_parser("identities", help="anticommutative / Lie / Malcev verdicts")
    p.add_argument("algebra", help="algebra JSON file")
    add_sampling(p)
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("cybe", help="Yang-Baxter residual and cross-checks")
    p.add_argument("algebra", help="algebra JSON file")
    p.add_argument("tensor", help="2-tensor JSON file")
    p.set_defaults(func=cmd_cybe)

    p = sub.add_parser("double", help="Drinfeld double bialgebra battery")
    p.add_argument("algebra", help="algebra JSON file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--delta", help="comultiplication JSON file")
    group.add_argument("--tensor", help="2-tensor JSON file (coboundary input)")
    p.add_argument(
        "--coboundary",
        choices=["+1", "-1"],
        help="sign of the coboundary comultiplication built from --tensor",
    )
    p.add_argument(
        "--slot-variant",
        choices=["statement", "proof"],
        default="statement",
        help="slot reading of the coboundary obstruction",
    )
    p.add_argument("--export", help="write the doubled algebra to this path")
    add_sampling(p)
    p.set_defaults(func=cmd_double)

    p = sub.add_parser("classify", help="staged classification pipeline")
    p.add_argument("algebra", help="algebra JSON file (must be dim 7)")
    p.add_argument("tensor", help="2-tensor JSON file")
    p.add_argument(
        "--mode", choices=["triangular", "semisimple"], required=True
    )
    add_sampling(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("invariants", help="centralizer of the tensor square")
    p.add_argument("algebra", help="algebra JSON file")
    p.set_defaults(func=cmd_invariants)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, summary = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(json.dumps(report, sort_keys=True, indent=2))
    print(summary, file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())

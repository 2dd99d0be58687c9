"""Command-line front end: analyze / classify single states, run sample batches.

State files are single JSON documents with keys "a", "b" and exactly one of
"t_diag" (3 values) or "t_full" (9 values, row-major), plus an optional
"normalize" flag.  Floats are emitted with shortest round-trip precision so
reports re-parse bit for bit.

Exit codes: 0 separable, 1 entangled, 2 not a state or usage error,
3 non-generic (verdict from the partial-transpose test only).
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

import numpy as np

from .errors import QubitSepError
from .hs import (
    HSParams,
    eigenvalues_hermitian,
    rho_from_hs,
    tdiag_via_local_rotations,
    tdiag_via_symmetric_rotation,
)
from .normal_form import (
    GENERIC,
    NO_PHYSICAL_BOOST,
    NON_GENERIC_A,
    NON_GENERIC_B,
    NON_GENERIC_C,
    NON_GENERIC_D,
    separability_verdict,
    solve_normal_form,
)
from .pt import (
    SEPARABLE,
    mds_criterion,
    necessity_check,
    partial_transpose_matrix,
    peres_horodecki,
)
from .sampling import FAMILIES, SampleSpec, batch_stats

EXIT_SEPARABLE = 0
EXIT_ENTANGLED = 1
EXIT_ERROR = 2
EXIT_NON_GENERIC = 3

_KIND_LABELS = {
    GENERIC: "Generic",
    NON_GENERIC_A: "NonGenericA",
    NON_GENERIC_B: "NonGenericB",
    NON_GENERIC_C: "NonGenericC",
    NON_GENERIC_D: "NonGenericD",
    NO_PHYSICAL_BOOST: "NoPhysicalBoost",
}


class StateFileError(QubitSepError):
    """A state file is unreadable or malformed; message names the field."""


def _parse_reals(doc, key: str, length: int) -> list[float]:
    if key not in doc:
        raise StateFileError(f"missing field '{key}'")
    value = doc[key]
    if not isinstance(value, list) or len(value) != length:
        raise StateFileError(f"field '{key}' must be a list of {length} numbers")
    out = []
    for entry in value:
        if isinstance(entry, bool) or not isinstance(entry, (int, float)):
            raise StateFileError(f"field '{key}' must contain only numbers")
        x = float(entry)
        if not np.isfinite(x):
            raise StateFileError(f"field '{key}' must be finite")
        out.append(x)
    return out


def load_state_file(path: str) -> tuple[HSParams, bool]:
    """Parse a state file into HSParams plus its normalize flag."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
    except OSError as exc:
        raise StateFileError(f"cannot read state file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise StateFileError(f"state file is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise StateFileError("state file must be a JSON object")
    a = _parse_reals(doc, "a", 3)
    b = _parse_reals(doc, "b", 3)
    has_diag = "t_diag" in doc
    has_full = "t_full" in doc
    if has_diag == has_full:
        raise StateFileError("exactly one of 't_diag' or 't_full' must be present")
    if has_diag:
        params = HSParams.diagonal(a, b, _parse_reals(doc, "t_diag", 3))
    else:
        t = np.array(_parse_reals(doc, "t_full", 9)).reshape(3, 3)
        params = HSParams(a, b, t)
    normalize = doc.get("normalize", False)
    if not isinstance(normalize, bool):
        raise StateFileError("field 'normalize' must be a boolean")
    # Pauli-parameterized input always has unit trace; the flag is accepted
    # for interface stability and has no numeric effect.
    return params, normalize


def _floats(values) -> list[float]:
    return [float(x) for x in np.asarray(values).ravel()]


def _verdict_dict(verdict) -> dict:
    return dataclasses.asdict(verdict)


def _reduce_to_diagonal(params: HSParams, notes: list[str]) -> HSParams:
    if params.is_t_diagonal():
        return params
    if params.is_symmetric() and float(np.abs(params.t - params.t.T).max()) <= 1e-12:
        work, _ = tdiag_via_symmetric_rotation(params)
        notes.append(
            "correlation matrix diagonalized by one shared local rotation "
            "(symmetric state preserved)"
        )
    else:
        work, _, _ = tdiag_via_local_rotations(params)
        notes.append("correlation matrix diagonalized by local rotations")
    return work


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2))
        return
    for key, value in report.items():
        print(f"{key}: {json.dumps(value)}")


def _cmd_analyze(args) -> int:
    try:
        params, _ = load_state_file(args.state_file)
    except StateFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    rho = rho_from_hs(params)
    spectrum = eigenvalues_hermitian(rho)
    psd = float(spectrum.values[0]) >= -args.tol_psd
    report: dict = {
        "input": {
            "a": _floats(params.a),
            "b": _floats(params.b),
            "t": [_floats(row) for row in params.t],
        },
        "psd": psd,
        "eigenvalues_4l": _floats(spectrum.four_lambda),
    }
    if not psd:
        report["error"] = "input is not positive semidefinite; not a state"
        _emit(report, args.format)
        print("error: input is not a valid state", file=sys.stderr)
        return EXIT_ERROR

    pt_spectrum = eigenvalues_hermitian(partial_transpose_matrix(rho, "A"))
    ppt = peres_horodecki(rho, tol=args.tol_verdict)
    report["pt_eigenvalues_4l"] = _floats(pt_spectrum.four_lambda)
    report["ppt_verdict"] = _verdict_dict(ppt)

    notes: list[str] = []
    work = _reduce_to_diagonal(params, notes)
    tdiag = work.t_diagonal()
    if float(np.abs(work.a).max()) <= 1e-12 and float(np.abs(work.b).max()) <= 1e-12:
        notes.append(
            "maximally disordered subsystems: sum|t_i| <= 1 is necessary "
            f"and sufficient (sum = {float(np.abs(tdiag).sum()):.6g})"
        )
    elif not necessity_check(work):
        notes.append(
            "necessary screen failed: sum|t_i| > 1 already implies entangled"
        )
    solve = solve_normal_form(work, beta_limit=args.beta_limit)
    report["classification"] = {
        "kind": _KIND_LABELS[solve.classification.kind],
        "detail": solve.classification.detail,
    }
    if solve.classification.is_generic:
        lorentz = separability_verdict(solve.sigma, tol=args.tol_verdict)
        report["betas"] = _floats(solve.betas)
        report["boost_kind"] = solve.boost_kind
        if solve.axis is not None:
            report["boost_axis"] = solve.axis
        report["sigma"] = {
            "s0": solve.sigma.s0,
            "s": _floats(solve.sigma.s),
        }
        report["tprime"] = _floats(solve.sigma.tprime)
        report["lorentz_sum"] = solve.sigma.tprime_sum
        report["lorentz_verdict"] = _verdict_dict(lorentz)
        report["residuals"] = {
            "polynomial": solve.polynomial_residual,
            "offdiag": solve.offdiag_residual,
        }
    report["criteria_notes"] = notes
    _emit(report, args.format)
    if not solve.classification.is_generic:
        return EXIT_NON_GENERIC
    return EXIT_SEPARABLE if ppt.kind == SEPARABLE else EXIT_ENTANGLED


def _cmd_classify(args) -> int:
    try:
        params, _ = load_state_file(args.state_file)
    except StateFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    work = _reduce_to_diagonal(params, [])
    classification = solve_normal_form(work).classification
    label = _KIND_LABELS[classification.kind]
    if classification.detail:
        print(f"{label}: {classification.detail}")
    else:
        print(label)
    return 0


def _cmd_sample(args) -> int:
    try:
        spec = SampleSpec(
            family=args.family, count=args.count, seed=args.seed, axis=args.axis
        )
    except QubitSepError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    report = batch_stats(spec)
    _emit(dataclasses.asdict(report), args.format)
    return 0 if report.disagree_count == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qubitsep",
        description=(
            "Decide separability of two-qubit density matrices via the "
            "partial-transpose test and the boost normal form of the "
            "correlation matrix."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="full analysis of one state file")
    p_analyze.add_argument("state_file")
    p_analyze.add_argument("--tol-psd", type=float, default=1e-10, dest="tol_psd")
    p_analyze.add_argument(
        "--tol-verdict", type=float, default=1e-10, dest="tol_verdict"
    )
    p_analyze.add_argument(
        "--beta-limit", type=float, default=1e-9, dest="beta_limit"
    )
    p_analyze.add_argument("--format", choices=("json", "text"), default="json")
    p_analyze.set_defaults(func=_cmd_analyze)

    p_classify = sub.add_parser(
        "classify", help="print the generic / non-generic classification"
    )
    p_classify.add_argument("state_file")
    p_classify.set_defaults(func=_cmd_classify)

    p_sample = sub.add_parser(
        "sample", help="batch cross-validation over a random state family"
    )
    p_sample.add_argument("--family", required=True, choices=FAMILIES)
    p_sample.add_argument("--count", type=int, required=True)
    p_sample.add_argument("--seed", type=int, required=True)
    p_sample.add_argument("--axis", type=int, default=1, choices=(1, 2, 3))
    p_sample.add_argument("--format", choices=("json", "text"), default="json")
    p_sample.set_defaults(func=_cmd_sample)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, which matches our error code
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except QubitSepError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: verify structures, dynamics, circuits and families.

Exit status: 0 when every check passes, 1 when a verification fails, 2 on
malformed input or bad arguments.  Reports are canonical JSON (sorted keys,
shortest round-trip floats) and are byte-identical across repeated runs
with the same inputs and seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import linalg, serialize
from .clock import make_clock, verify_strong_complementarity
from .dynamics import (
    hamiltonian,
    spectral_projector,
    spectrum_checks,
    stone_reconstruct,
    time_average,
    validate_dynamic,
)
from .errors import (
    DegenerateError,
    InputFormatError,
    NotASubgroupError,
    OrthogonalEigenstateError,
    QClockError,
)
from .feynman import feynman_check
from .linalg import Tolerance, max_abs_diff
from .reports import Check, Report
from .selftest import run_self_test
from .sync import clock_energy_collapse, internal_time_observable, subsystem_energy_measure

SCHEMA_VERSION = 1

EXIT_PASS = 0
EXIT_CHECK_FAILURE = 1
EXIT_INPUT_ERROR = 2


def _load_json(path: str):
    p = Path(path)
    if not p.is_file():
        raise InputFormatError(path, "file not found")
    try:
        return json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise InputFormatError(path, f"invalid JSON ({exc.msg} at line {exc.lineno})")


def _emit(doc: dict, out: str | None) -> None:
    text = serialize.canonical_dumps(doc)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _report_doc(command: str, report: Report, extra: dict | None = None) -> dict:
    doc = {"schema_version": SCHEMA_VERSION, "command": command}
    doc.update(report.as_dict())
    if extra:
        doc.update(extra)
    return doc


def _cmd_axioms(args) -> tuple[dict, bool]:
    report = verify_strong_complementarity(make_clock(args.N), Tolerance(args.tol))
    return _report_doc("axioms", report, {"N": args.N}), report.passed


def _cmd_dynamic(args) -> tuple[dict, bool]:
    d = serialize.dynamic_from_json(_load_json(args.file), args.tol)
    tol = Tolerance(args.tol)
    axioms = validate_dynamic(d, make_clock(d.N), tol)
    spec = hamiltonian(d)
    spectrum = spectrum_checks(spec, tol)
    ergodic = max_abs_diff(time_average(d), spectral_projector(d, 0))
    stone = max_abs_diff(stone_reconstruct(spec).unitaries, d.unitaries)
    extras = Report(
        title="spectral round trips",
        checks=(
            Check("ergodic_average_is_ground_projector", ergodic, args.tol),
            Check("stone_round_trip", stone, args.tol),
        ),
    )
    merged = Report(
        title=f"dynamic verification (N={d.N}, dim={d.dim})",
        checks=axioms.checks + spectrum.checks + extras.checks,
    )
    ranks = {
        str(E): int(round(float(np.trace(spec.projectors[E]).real)))
        for E in spec.support
    }
    doc = _report_doc(
        "dynamic",
        merged,
        {"N": d.N, "dim": d.dim, "support": list(spec.support), "ranks": ranks},
    )
    return doc, merged.passed


def _cmd_feynman(args) -> tuple[dict, bool]:
    c = serialize.circuit_from_json(_load_json(args.file), args.tol)
    rep = feynman_check(c, Tolerance(args.tol))
    doc = {"schema_version": SCHEMA_VERSION, "command": "feynman"}
    doc.update(rep.as_dict())
    return doc, rep.passed


def _parse_sync_file(doc, tol: float):
    if not isinstance(doc, dict):
        raise InputFormatError("$", "expected a JSON object")
    if "systems" not in doc or not isinstance(doc["systems"], list) or not doc["systems"]:
        raise InputFormatError("systems", "expected a nonempty array")
    if "N" not in doc or not isinstance(doc["N"], int):
        raise InputFormatError("N", "missing or not an integer")
    N = doc["N"]
    chi = doc.get("chi", 0)
    if not isinstance(chi, int) or not (0 <= chi < N):
        raise InputFormatError("chi", f"expected an integer in [0, {N})")
    ds, psis = [], []
    for i, entry in enumerate(doc["systems"]):
        if not isinstance(entry, dict):
            raise InputFormatError(f"systems[{i}]", "expected an object")
        sub = dict(entry)
        sub["N"] = N
        psi_doc = sub.pop("psi", None)
        if psi_doc is None:
            raise InputFormatError(f"systems[{i}].psi", "missing")
        d = serialize.dynamic_from_json(sub, tol)
        psi = serialize.vector_from_json(psi_doc, f"systems[{i}].psi")
        if psi.shape[0] != d.dim:
            raise InputFormatError(f"systems[{i}].psi", f"expected dim {d.dim}")
        ds.append(d)
        psis.append(psi)
    measures = doc.get("measure", [])
    if not isinstance(measures, list):
        raise InputFormatError("measure", "expected an array")
    for i, mdoc in enumerate(measures):
        if (
            not isinstance(mdoc, dict)
            or not isinstance(mdoc.get("system"), int)
            or not isinstance(mdoc.get("energy"), int)
        ):
            raise InputFormatError(
                f"measure[{i}]", "expected {'system': int, 'energy': int}"
            )
        if not (0 <= mdoc["system"] < len(ds)):
            raise InputFormatError(f"measure[{i}].system", "index out of range")
        if not (0 <= mdoc["energy"] < N):
            raise InputFormatError(f"measure[{i}].energy", f"outside [0, {N})")
    return ds, psis, chi, measures


def _cmd_sync(args) -> tuple[dict, bool]:
    ds, psis, chi, measures = _parse_sync_file(_load_json(args.file), args.tol)
    checks = [
        Check(
            "clock_energy_collapse_matches_family",
            clock_energy_collapse(ds, psis, chi).residual,
            args.tol,
        )
    ]
    for i, mdoc in enumerate(measures):
        try:
            res = subsystem_energy_measure(
                ds, psis, chi, mdoc["system"], mdoc["energy"], Tolerance(args.tol)
            )
        except (DegenerateError, OrthogonalEigenstateError) as exc:
            raise InputFormatError(f"measure[{i}]", str(exc))
        checks.append(
            Check(
                f"energy_conservation_measure_{mdoc['system']}_at_{mdoc['energy']}",
                res.residual,
                args.tol,
            )
        )
    report = Report(
        title=f"synchronised family (M={len(ds)}, N={ds[0].N}, chi={chi})",
        checks=tuple(checks),
    )
    return _report_doc("sync", report, {"chi": chi, "M": len(ds)}), report.passed


def _cmd_internal_time(args) -> tuple[dict, bool]:
    d = serialize.dynamic_from_json(_load_json(args.file), args.tol)
    doc = {"schema_version": SCHEMA_VERSION, "command": "internal-time", "N": d.N}
    try:
        desc = internal_time_observable(d, Tolerance(args.tol))
    except DegenerateError:
        doc.update({"nondegenerate": False, "subgroup": False})
        return doc, False
    except NotASubgroupError as exc:
        doc.update(
            {"nondegenerate": True, "subgroup": False, "energies": list(exc.energies)}
        )
        return doc, False
    doc.update(desc.as_dict())
    doc["nondegenerate"] = True
    doc["permutation_error"] = desc.permutation_error
    return doc, True


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qclock",
        description="Verify finite clock structures, dynamics, circuits and families.",
    )
    parser.add_argument("--tol", type=float, default=1e-9, help="absolute tolerance")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomised suites")
    parser.add_argument("--out", type=str, default=None, help="write the report here")
    parser.add_argument(
        "--max-dim",
        type=int,
        default=linalg.DEFAULT_MAX_ENTRIES,
        help="cap on total entries of any tensor",
    )
    parser.add_argument(
        "--self-test",
        action="store_true",
        help="run the seeded randomised property suites",
    )
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("axioms", help="verify the structure laws on C^N")
    p.add_argument("N", type=int)

    for name, helptext in (
        ("dynamic", "validate a dynamic file and its spectrum"),
        ("feynman", "check history states against the composite ground space"),
        ("sync", "check energy conservation for a synchronised family"),
        ("internal-time", "derive the internal clock of a dynamic file"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file", type=str)

    return parser


_DISPATCH = {
    "axioms": _cmd_axioms,
    "dynamic": _cmd_dynamic,
    "feynman": _cmd_feynman,
    "sync": _cmd_sync,
    "internal-time": _cmd_internal_time,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.self_test and args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_INPUT_ERROR
    if args.tol <= 0 or args.tol >= 1:
        print("error: --tol must lie in (0, 1)", file=sys.stderr)
        return EXIT_INPUT_ERROR

    linalg.set_max_entries(args.max_dim)
    try:
        if args.self_test:
            report = run_self_test(seed=args.seed, tol=max(args.tol, 1e-8))
            doc = _report_doc("self-test", report, {"seed": args.seed})
            ok = report.passed
        else:
            doc, ok = _DISPATCH[args.command](args)
        _emit(doc, args.out)
        return EXIT_PASS if ok else EXIT_CHECK_FAILURE
    except InputFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except QClockError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end for the spinor dictionary toolkit.

Exit codes: 0 when every check passes, 1 when a mathematical check fails or a
spinor is degenerate, 2 for usage and input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Sequence

from . import composition as comp
from .clifford import MODEL_NAMES, POLYFORM_MODELS, bilinear, build_model, verify_clifford
from .dictionary import DICTIONARIES, SIDES, check_dictionary, get_dictionary
from .exact_linalg import GaussRational, parse_rational
from .geometry import (
    ORBIT_MODELS,
    DegenerateSpinor,
    annihilator,
    classify_orbit,
    form_str,
    stabilizer,
)
from .polyforms import Polyform
from .report import CRITERIA, full_report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# Dictionary used to read algebra-coordinate spinors for each polyform model.
MODEL_DICTIONARY = {
    "cl4": "c2-h",
    "cl22": "c2-hsplit",
    "cl6": "cl6-h2",
    "cl51": "cl51-h2",
    "cl33": "cl33-hsplit2",
    "cl8": "cl8-o",
    "cl44-real": "cl44-real-o",
    "cl44-complex": "cl44-complex-o",
}


class InputError(ValueError):
    """Bad user input; maps to exit code 2."""


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
    else:
        sys.stdout.write(text + "\n")


def _load_json(spec: str):
    if spec.startswith("@"):
        try:
            spec = Path(spec[1:]).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read {spec[1:]}: {exc}") from exc
    try:
        return json.loads(spec)
    except json.JSONDecodeError as exc:
        raise InputError(f"spinor is not valid JSON: {exc}") from exc


def _scalars(values) -> list:
    try:
        return [parse_rational(v) for v in values]
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad coordinate list {values!r}: {exc}") from exc


def parse_spinor(model, spec: str) -> tuple[list[GaussRational], dict]:
    """Dirac column from polyform JSON or ``{"alg", "re", "im", "side"}`` JSON, plus an echo of both forms."""
    obj = _load_json(spec)
    if not isinstance(obj, dict):
        raise InputError("spinor JSON must be an object")
    try:
        if "alg" in obj:
            psi = _from_algebra(model, obj)
        elif "terms" in obj:
            psi = model.from_polyform(Polyform.from_json(obj))
        else:
            raise InputError('spinor JSON needs either "alg" or "terms"')
    except InputError:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(str(exc)) from exc
    return psi, describe_spinor(model, psi)


def _from_algebra(model, obj: dict) -> list[GaussRational]:
    if model.name not in MODEL_DICTIONARY:
        raise InputError(f"{model.name} has no algebra dictionary; use polyform JSON")
    side = obj.get("side", "plus")
    if side not in SIDES:
        raise InputError(f"side must be one of {sorted(SIDES)}")
    d = get_dictionary(MODEL_DICTIONARY[model.name], side)
    if comp.canonical_kind(obj["alg"]) != d.algebra.kind:
        raise InputError(f"{model.name} spinors are read as {d.algebra.kind} columns, not {obj['alg']}")
    re = _scalars(obj.get("re", []))
    im = _scalars(obj.get("im", [0] * len(re)))
    size = d.algebra.dim * d.copies
    if len(re) != size or len(im) != size:
        raise InputError(f"{model.name} needs {size} algebra coordinates")
    if d.real and any(im):
        raise InputError(f"{d.name} coordinates are real; drop the imaginary part")
    coords = [GaussRational(a, b) for a, b in zip(re, im)]
    dim = d.algebra.dim
    column = [d.algebra.element(coords[k * dim : (k + 1) * dim]) for k in range(d.copies)]
    return model.embed(d.from_algebra(column), d.chirality)


def describe_spinor(model, psi: Sequence[GaussRational]) -> dict:
    out = {"components": [c.to_json() for c in psi]}
    if model.name in POLYFORM_MODELS:
        out["polyform"] = model.to_polyform(psi).to_json()
    sign = model.chirality_of(psi) if model.chirality is not None else 0
    if sign and model.name in MODEL_DICTIONARY:
        d = get_dictionary(MODEL_DICTIONARY[model.name], "plus" if sign > 0 else "minus")
        column = d.to_algebra(model.chiral_part(psi, sign))
        out["algebra"] = {
            "alg": d.algebra.kind,
            "side": d.side,
            "re": [str(c.re) for x in column for c in x.coords],
            "im": [str(c.im) for x in column for c in x.coords],
        }
    return out


# commands ------------------------------------------------------------------


def cmd_verify(args) -> int:
    rep = verify_clifford(build_model(args.model))
    if args.json:
        _emit(canonical_json(rep.to_json()), args.out)
    else:
        failed = [c.name for c in rep.checks if not c.passed]
        lines = [f"{args.model}: {len(rep.checks) - len(failed)}/{len(rep.checks)} checks pass"]
        lines += [f"  FAIL {name}" for name in failed]
        _emit("\n".join(lines), args.out)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_table(args) -> int:
    alg = comp.make_algebra(args.algebra)
    if args.format == "json":
        text = canonical_json(comp.table_json(alg))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([""] + list(alg.labels))
        for lab, row in zip(alg.labels, comp.multiplication_table(alg)):
            writer.writerow([lab] + row)
        text = buf.getvalue().rstrip("\n")
    else:
        text = comp.table_text(alg)
    _emit(text, args.out)
    return EXIT_OK


def cmd_report(args) -> int:
    entries = full_report()
    data = canonical_json([e.to_json() for e in entries])
    try:
        if args.out:
            Path(args.out).write_text(data + "\n", encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot write report: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        for e in entries:
            print(f"{e.status.upper():8s} {e.id}: {e.claim}")
    else:
        sys.stdout.write(data + "\n")
    return EXIT_FAIL if any(e.status == "fail" for e in entries) else EXIT_OK


def _orbit_model(name: str):
    if name not in ORBIT_MODELS:
        raise InputError(f"stabilizers and orbits are computed for {', '.join(ORBIT_MODELS)}")
    return build_model(name)


def cmd_stabilizer(args) -> int:
    model = _orbit_model(args.model)
    psi, echo = parse_spinor(model, args.spinor)
    rep = stabilizer(model, psi)
    payload = {"model": model.name, "spinor": echo, "stabilizer": rep.to_json()}
    if args.json:
        _emit(canonical_json(payload), args.out)
    else:
        _emit(f"stabilizer dimension {rep.dim}" + (f" ({rep.label})" if rep.label else ""), args.out)
    return EXIT_OK


def cmd_classify(args) -> int:
    model = _orbit_model(args.model)
    psi, echo = parse_spinor(model, args.spinor)
    orbit = classify_orbit(model, psi)
    stab = stabilizer(model, psi)
    payload = {"model": model.name, "spinor": echo, "orbit": orbit.to_json(), "stabilizer_dim": stab.dim}
    if args.json:
        _emit(canonical_json(payload), args.out)
    else:
        _emit(f"label {orbit.label}\nstabilizer {stab.dim}", args.out)
    return EXIT_OK


def cmd_annihilator(args) -> int:
    model = build_model(args.model)
    psi, echo = parse_spinor(model, args.spinor)
    rep = annihilator(model, psi)
    payload = {"model": model.name, "spinor": echo, "annihilator": rep.to_json()}
    if args.json:
        _emit(canonical_json(payload), args.out)
    else:
        _emit(f"annihilator dimension {rep.dim}, real index {rep.real_index}, pure {rep.pure}", args.out)
    return EXIT_OK


def cmd_bilinear(args) -> int:
    model = build_model(args.model)
    psi, echo_psi = parse_spinor(model, args.psi)
    phi, echo_phi = parse_spinor(model, args.phi)
    try:
        comps = bilinear(model, args.k, psi, phi)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    payload = {
        "model": model.name,
        "k": args.k,
        "psi": echo_psi,
        "phi": echo_phi,
        "components": [{"indices": list(k), "value": v.to_json()} for k, v in sorted(comps.items())],
        "form": form_str(comps),
    }
    if args.json:
        _emit(canonical_json(payload), args.out)
    else:
        _emit(form_str(comps), args.out)
    return EXIT_OK


def cmd_dict(args) -> int:
    d = get_dictionary(args.name, args.side)
    rep = check_dictionary(args.name)
    payload = {"dictionary": d.to_json(), "checks": rep.to_json()}
    if args.json:
        _emit(canonical_json(payload), args.out)
    else:
        failed = [c.name for c in rep.checks if not c.passed]
        lines = [f"{args.name} ({d.algebra.kind} x {d.copies}): {len(rep.checks) - len(failed)}/{len(rep.checks)} checks pass"]
        lines += [f"  FAIL {name}" for name in failed]
        _emit("\n".join(lines), args.out)
    return EXIT_OK if rep.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spinordict", description="Exact Clifford, composition-algebra and spinor checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, model=True):
        if model:
            sp.add_argument("--model", required=True, choices=MODEL_NAMES)
        sp.add_argument("--json", action="store_true", help="canonical JSON output")
        sp.add_argument("--out", help="write output to this file")

    sp = sub.add_parser("verify", help="check Clifford relations and reality operators of a model")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("table", help="multiplication table of a composition algebra")
    sp.add_argument("--algebra", required=True, choices=sorted(comp.ALIASES))
    sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("report", help=f"run the {len(CRITERIA)} acceptance criteria and write a JSON report")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_report)

    for name, func, text in (
        ("stabilizer", cmd_stabilizer, "stabilizer subalgebra of a Weyl spinor"),
        ("classify", cmd_classify, "orbit label and invariants of a Weyl spinor"),
        ("annihilator", cmd_annihilator, "annihilator subspace and purity of a Weyl spinor"),
    ):
        sp = sub.add_parser(name, help=text)
        common(sp)
        sp.add_argument("--spinor", required=True, help="inline JSON or @file")
        sp.set_defaults(func=func)

    sp = sub.add_parser("bilinear", help="components <psi, G_I1...G_Ik phi>")
    common(sp)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--psi", required=True, help="inline JSON or @file")
    sp.add_argument("--phi", required=True, help="inline JSON or @file")
    sp.set_defaults(func=cmd_bilinear)

    sp = sub.add_parser("dict", help="dump a dictionary and its intertwining checks")
    sp.add_argument("--name", required=True, choices=list(DICTIONARIES))
    sp.add_argument("--side", choices=sorted(SIDES), default="plus")
    common(sp, model=False)
    sp.set_defaults(func=cmd_dict)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegenerateSpinor as exc:
        print(f"degenerate spinor: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

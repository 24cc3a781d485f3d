"""Command-line front end.

Complexes and maps are given either as ``builtin:<name>`` references or as
paths to JSON documents (see ComplexDocument / MapDocument).  Every command
prints a deterministic text report to stdout; ``--json <path>`` additionally
writes the machine-readable document, with coefficients as "num/den" strings.

Exit codes: 0 success, 1 verification failure, 2 parse or reference error,
3 duality failure on the target.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Union

from pydantic import BaseModel, ValidationError

from . import service
from .complexes import ComplexError, MapError
from .fields import FieldError
from .homology import HomologyError
from .lefschetz import DualityError, LefschetzError
from .schemas import (
    ComplexDocument,
    HomologyRequest,
    KnillRequest,
    LefschetzRequest,
    LefschetzResponse,
    MapDocument,
    TransferRequest,
    VerifyRequest,
    WitnessModel,
    WitnessRequest,
    WongRequest,
)

_PARSE_ERRORS = (
    service.RequestError,
    FieldError,
    ComplexError,
    MapError,
    HomologyError,
    ValidationError,
    OSError,
)


class CliError(ValueError):
    pass


def _load_document(path: str, model):
    p = Path(path)
    if not p.is_file():
        raise CliError(
            "%r is not a file (builtin references use the builtin: prefix)" % path
        )
    try:
        return model.model_validate_json(p.read_text())
    except ValidationError as e:
        raise CliError("%s: %s" % (path, e)) from e


def complex_ref(arg: str) -> Union[str, ComplexDocument]:
    if arg.startswith(service.BUILTIN_PREFIX):
        return arg
    return _load_document(arg, ComplexDocument)


def map_ref(arg: str) -> Union[str, MapDocument]:
    if arg.startswith(service.BUILTIN_PREFIX) or arg.startswith("const:"):
        return arg
    return _load_document(arg, MapDocument)


def _write_json(path: Optional[str], model: BaseModel) -> None:
    if path is None:
        return
    payload = json.dumps(model.model_dump(), indent=2, sort_keys=True) + "\n"
    Path(path).write_text(payload)


def _coeffs(values: List[str]) -> str:
    return "(" + ", ".join(values) + ")" if values else "()"


def _witness_lines(w: WitnessModel) -> List[str]:
    if w.status == "witness":
        return [
            "witness: simplex (%s) barycentric (%s), %d simplices checked"
            % (
                ", ".join(str(v) for v in (w.simplex or [])),
                ", ".join(w.barycentric or []),
                w.simplices_checked,
            )
        ]
    return ["disjoint: no common point on any simplex, %d checked" % w.simplices_checked]


def _lefschetz_lines(rep: LefschetzResponse) -> List[str]:
    lines = [
        "coincidence homomorphism over %s" % rep.field,
        "target dimension n=%d" % rep.n,
        "H(X,A) betti: %s" % " ".join(str(b) for b in rep.x_betti),
        "H(M) betti: %s" % " ".join(str(b) for b in rep.m_betti),
        "condition A: %s" % ("true" if rep.condition_a else "false"),
    ]
    for e in rep.entries:
        mark = "  nonzero" if e.nonzero else ""
        lines.append(
            "degree %d index %d -> %s%s" % (e.degree, e.index, _coeffs(e.coefficients), mark)
        )
    lines.append("any nonzero: %s" % ("true" if rep.any_nonzero else "false"))
    if rep.oracle is not None:
        lines.extend(_witness_lines(rep.oracle))
    return lines


def cmd_homology(args) -> int:
    rep = service.homology_report(
        HomologyRequest(complex=complex_ref(args.complex), field=args.field)
    )
    print("complex %s over %s" % (rep.name, rep.field))
    print("betti: %s" % " ".join(str(b) for b in rep.betti))
    print("euler characteristic: %d" % rep.euler)
    print("status: %s" % rep.orientability)
    _write_json(args.json, rep)
    return 0


def cmd_lefschetz(args) -> int:
    rep = service.lefschetz_report(
        LefschetzRequest(
            x=complex_ref(args.x),
            m=complex_ref(args.m),
            f=map_ref(args.f),
            g=map_ref(args.g),
            field=args.field,
            oracle=args.oracle,
        )
    )
    for line in _lefschetz_lines(rep):
        print(line)
    _write_json(args.json, rep)
    return 0


def cmd_transfer(args) -> int:
    rep = service.transfer_report(
        TransferRequest(
            x=complex_ref(args.x),
            m=complex_ref(args.m),
            f=map_ref(args.f),
            degree=args.degree,
            index=args.index,
            field=args.field,
        )
    )
    print(
        "transfer over %s at degree %d index %d (shift %d)"
        % (rep.field, rep.degree, rep.index, rep.shift)
    )
    for k in sorted(rep.blocks, key=int):
        rows = rep.blocks[k]
        if not rows:
            print("block %s: (no target classes)" % k)
            continue
        print("block %s:" % k)
        for row in rows:
            print("  %s" % " ".join(row))
    _write_json(args.json, rep)
    return 0


def cmd_wong(args) -> int:
    rep = service.wong_report(
        WongRequest(
            x=complex_ref(args.x),
            m=complex_ref(args.m),
            psi=map_ref(args.psi),
            index=args.index,
            field=args.field,
        )
    )
    print("evaluation pairing over %s: n=%d index %d" % (rep.field, rep.n, rep.index))
    print("pairing: %s" % rep.pairing)
    _write_json(args.json, rep)
    return 0


def cmd_knill(args) -> int:
    rep = service.knill_report(
        KnillRequest(
            y=complex_ref(args.y),
            m=complex_ref(args.m),
            g=map_ref(args.g),
            degree=args.degree,
            index=args.index,
            field=args.field,
        )
    )
    print(
        "parametrized trace over %s: u at degree %d index %d"
        % (rep.field, rep.parameter_degree, rep.parameter_index)
    )
    print("trace:         %s" % _coeffs(rep.trace))
    print("homomorphism:  %s" % _coeffs(rep.homomorphism))
    print("equal: %s" % ("true" if rep.equal else "false"))
    _write_json(args.json, rep)
    return 0 if rep.equal else 1


def cmd_witness(args) -> int:
    rep = service.witness_report(
        WitnessRequest(
            x=complex_ref(args.x),
            m=complex_ref(args.m),
            f=map_ref(args.f),
            g=map_ref(args.g),
        )
    )
    for line in _witness_lines(rep):
        print(line)
    _write_json(args.json, rep)
    return 0


def cmd_verify(args) -> int:
    rep = service.verify_report(
        VerifyRequest(field=args.field, seed=args.seed, trials=args.trials)
    )
    sys.stdout.write(rep.report)
    _write_json(args.json, rep)
    return 0 if rep.passed else 1


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("lefcoin.api:app", host=args.host, port=args.port)
    return 0


def _add_field(p) -> None:
    p.add_argument("--field", default="q", metavar="q|p:<prime>",
                   help="coefficient field (default: the rationals)")


def _add_json(p) -> None:
    p.add_argument("--json", default=None, metavar="PATH",
                   help="also write the machine-readable report here")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lefcoin",
        description="Exact coincidence homomorphisms on triangulated manifold targets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homology", help="Betti numbers and orientability of a pair")
    p.add_argument("complex", help="builtin:<name> or a complex document path")
    _add_field(p)
    _add_json(p)
    p.set_defaults(run=cmd_homology)

    p = sub.add_parser("lefschetz", help="the coincidence homomorphism on a basis")
    p.add_argument("x", help="source pair (builtin:<name> or path)")
    p.add_argument("m", help="target manifold pair (builtin:<name> or path)")
    p.add_argument("f", help="first map (builtin name or document path)")
    p.add_argument("g", help="second map (builtin name or document path)")
    _add_field(p)
    p.add_argument("--oracle", action="store_true",
                   help="run the exact coincidence search (rationals only)")
    _add_json(p)
    p.set_defaults(run=cmd_lefschetz)

    p = sub.add_parser("transfer", help="the shriek map of f at a basis class")
    p.add_argument("x")
    p.add_argument("m")
    p.add_argument("f")
    p.add_argument("--degree", type=int, required=True, help="degree of the class z")
    p.add_argument("--index", type=int, default=0, help="basis index of z (default 0)")
    _add_field(p)
    _add_json(p)
    p.set_defaults(run=cmd_transfer)

    p = sub.add_parser("wong", help="pair the dual fundamental cocycle with psi_*(z)")
    p.add_argument("x")
    p.add_argument("m")
    p.add_argument("psi", help="the quotient-style map (builtin name or path)")
    p.add_argument("--index", type=int, default=0, help="basis index in degree n")
    _add_field(p)
    _add_json(p)
    p.set_defaults(run=cmd_wong)

    p = sub.add_parser("knill", help="slice-trace identity on a product source")
    p.add_argument("y", help="parameter complex (left factor)")
    p.add_argument("m", help="target manifold pair (right factor)")
    p.add_argument("g", help="map from the product pair to the target")
    p.add_argument("--degree", type=int, default=0, help="degree of the parameter class u")
    p.add_argument("--index", type=int, default=0, help="basis index of u")
    _add_field(p)
    _add_json(p)
    p.set_defaults(run=cmd_knill)

    p = sub.add_parser("witness", help="exact coincidence search for two maps")
    p.add_argument("x")
    p.add_argument("m")
    p.add_argument("f")
    p.add_argument("g")
    _add_json(p)
    p.set_defaults(run=cmd_witness)

    p = sub.add_parser("verify", help="run the invariant suite over the corpus")
    _add_field(p)
    p.add_argument("--seed", type=int, default=0, help="seed for the randomized scenarios")
    p.add_argument("--trials", type=int, default=10,
                   help="random map pairs per scenario (0 = builtins only)")
    _add_json(p)
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(run=cmd_serve)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except DualityError as e:
        print("error: %s" % e, file=sys.stderr)
        return 3
    except CliError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except _PARSE_ERRORS as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except LefschetzError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

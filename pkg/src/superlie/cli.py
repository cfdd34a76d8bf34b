"""Command line interface: ``superlie <command> ...``.

Exit codes: 0 success (or verdict generated), 1 verdict not_generated,
2 invalid input or parameters, 3 internal failure.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence

from .catalog import SWEEP, build
from .errors import BadParameters, ConstructionFailed, DimensionMismatch, OddSpacesNotOneDim, SuperLieError
from .exactlin import format_scalar, parse_scalar
from .genpair import construct_pair, even_part_pair, verify_pair
from .rootsys import weight_table
from .superalgebra import SuperAlgebra, check_structure, closure, dumps, loads

EXIT_OK, EXIT_NOT_GENERATED, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    pass


def _add_target(p: argparse.ArgumentParser, allow_file: bool = True) -> None:
    p.add_argument("target", nargs="*", help="family followed by its integer parameters, e.g. A 1 0")
    p.add_argument("--family")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    if allow_file:
        p.add_argument("--algebra", help="algebra JSON written by 'construct'")
    p.add_argument("-o", "--output", help="write JSON here instead of stdout")


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="superlie", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    _add_target(sub.add_parser("construct", help="structure constants as JSON"), allow_file=False)
    _add_target(sub.add_parser("roots", help="weight spaces, root sets and simple roots"))
    p = sub.add_parser("pair", help="build and certify a generating pair")
    _add_target(p)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--homogeneous", action="store_true", help="odd x with an even separating h")
    mode.add_argument("--even-part", action="store_true", help="generators of the even part only")
    p = sub.add_parser("verify", help="re-run the closure for a certificate or generator file")
    p.add_argument("input", help="certificate JSON (from 'pair') or {'generators': [...]} file")
    _add_target(p)
    p = sub.add_parser("closure", help="subalgebra generated by a list of vectors")
    p.add_argument("--gens", required=True, help="JSON list of coordinate vectors")
    _add_target(p)
    _add_target(sub.add_parser("check", help="validate skew-symmetry, Jacobi and Cartan weights"))
    p = sub.add_parser("sweep", help="construct and certify the standard instance list")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--output")
    return ap


def _params_from(args) -> tuple:
    if args.target:
        family, *rest = args.target
        if args.family or args.m is not None or args.n is not None:
            raise InputError("give the family either positionally or with --family, not both")
        try:
            return family, tuple(int(x) for x in rest)
        except ValueError:
            raise InputError(f"parameters must be integers: {rest}")
    if not args.family:
        raise InputError("no algebra given")
    params = tuple(v for v in (args.m, args.n) if v is not None)
    return args.family, params


def _algebra(args, fallback: Optional[dict] = None) -> SuperAlgebra:
    if getattr(args, "algebra", None):
        return loads(_read(args.algebra))
    if not args.target and not args.family and fallback is not None:
        return build(fallback["family"], *fallback["params"])
    family, params = _params_from(args)
    return build(family, *params)


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise InputError(str(e))


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def _vectors(raw, dim: int) -> List[list]:
    if isinstance(raw, dict):
        raw = raw["generators"]
    vecs = [[parse_scalar(str(c)) for c in v] for v in raw]
    for v in vecs:
        if len(v) != dim:
            raise DimensionMismatch(f"vector of length {len(v)} for an algebra of dim {dim}")
    return vecs


def _sweep_row(item) -> dict:
    family, params = item
    t0 = time.perf_counter()
    L = build(family, *params)
    report = check_structure(L)
    cert = construct_pair(L)
    return {"algebra": L.name, "dim": L.dim, "recipe": cert.recipe, "verdict": cert.verdict,
            "trace": cert.trace, "structure_ok": report.ok, "jacobi": report.jacobi_mode,
            "seconds": round(time.perf_counter() - t0, 3)}


def _run(args) -> int:
    cmd = args.command
    if cmd == "construct":
        _emit(args, dumps(_algebra(args)))
        return EXIT_OK
    if cmd == "roots":
        _emit(args, _json(weight_table(_algebra(args)).to_dict()))
        return EXIT_OK
    if cmd == "check":
        report = check_structure(_algebra(args))
        _emit(args, _json(report.to_dict()))
        return EXIT_OK if report.ok else EXIT_INTERNAL
    if cmd == "pair":
        L = _algebra(args)
        if args.even_part:
            x, y = even_part_pair(L)
            sub = closure(L, [x, y])
            out = {"algebra": L.name, "recipe": "even_part",
                   "generators": [[format_scalar(c) for c in g] for g in (x, y)],
                   "trace": sub.trace, "final_dim": sub.dim}
            _emit(args, _json(out))
            return EXIT_OK
        cert = construct_pair(L, homogeneous=args.homogeneous)
        _emit(args, cert.dumps())
        return EXIT_OK
    if cmd == "verify":
        data = json.loads(_read(args.input))
        fallback = data if isinstance(data, dict) and "family" in data else None
        L = _algebra(args, fallback)
        gens = _vectors(data, L.dim)
        if len(gens) != 2:
            raise InputError("verify expects exactly two generators")
        cert = verify_pair(L, *gens)
        _emit(args, cert.dumps())
        return EXIT_OK if cert.generated else EXIT_NOT_GENERATED
    if cmd == "closure":
        L = _algebra(args)
        gens = _vectors(json.loads(_read(args.gens)), L.dim)
        if not gens:
            raise InputError("empty generator list")
        sub = closure(L, gens)
        _emit(args, _json({"algebra": L.name, "dim": sub.dim, "trace": sub.trace,
                           "basis": [[format_scalar(c) for c in row] for row in sub.basis]}))
        return EXIT_OK
    if cmd == "sweep":
        if args.jobs > 1:
            with ProcessPoolExecutor(args.jobs) as pool:
                rows = list(pool.map(_sweep_row, SWEEP))
        else:
            rows = [_sweep_row(item) for item in SWEEP]
        _emit(args, _json({"instances": rows}))
        ok = all(r["verdict"] == "generated" and r["structure_ok"] for r in rows)
        return EXIT_OK if ok else EXIT_NOT_GENERATED
    raise InputError(f"unknown command {cmd}")  # pragma: no cover


def run(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT
    try:
        return _run(args)
    except (InputError, BadParameters, DimensionMismatch, OddSpacesNotOneDim,
            json.JSONDecodeError, KeyError, ValueError) as e:
        print(f"superlie: error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (ConstructionFailed, SuperLieError) as e:
        print(f"superlie: internal failure: {e}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

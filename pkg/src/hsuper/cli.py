"""Command line surface: file formats, verification commands, and sweeps.

Algebra, cochain, and witness files are UTF-8 JSON with scalar values as
strings and 1-based basis indices.  Exit codes: 0 ok, 2 usage, 3 parse
error, 4 invariant violation, 5 mathematical check failed, 6 no witness.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import sys

from .algebra import (
    HomLieSuperalgebra,
    InvariantError,
    check_hom_jacobi,
    check_multiplicative,
    check_skew,
    is_heisenberg,
    is_lie_superalgebra,
    new_algebra,
    verify_isomorphism,
)
from .catalogs import FAMILY_PARAMS, CatalogId, ConstraintError, catalog
from .cohomology import Cochain, CochainComplex
from .deformations import DeformationError, deform, normalize_heisenberg
from .linalg import Matrix
from .scalars import ScalarParseError, format_scalar, parse_scalar

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_INVARIANT = 4
EXIT_CHECK_FAILED = 5
EXIT_NO_WITNESS = 6


class ParseFileError(ValueError):
    """Malformed file contents (syntax or schema)."""


class CheckFailed(Exception):
    """A mathematical verification did not hold."""


# -- file formats ------------------------------------------------------------


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseFileError(f"{path}: invalid JSON: {exc}") from exc


def _scalar(text, where: str):
    if not isinstance(text, str):
        raise ParseFileError(f"{where}: scalar values must be strings, got {text!r}")
    try:
        return parse_scalar(text)
    except ScalarParseError as exc:
        raise ParseFileError(f"{where}: {exc}") from exc


def _matrix(rows, where: str) -> Matrix:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ParseFileError(f"{where}: expected a list of rows")
    return Matrix(
        [[_scalar(x, f"{where}[{i + 1}][{j + 1}]") for j, x in enumerate(row)] for i, row in enumerate(rows)]
    )


def parse_algebra_file(path: str) -> HomLieSuperalgebra:
    """Read an algebra JSON file and construct the algebra it encodes."""
    data = _load_json(path)
    if not isinstance(data, dict):
        raise ParseFileError(f"{path}: expected a JSON object")
    try:
        parity = data["parity"]
        bracket = data["bracket"]
        alpha = data["alpha"]
    except KeyError as exc:
        raise ParseFileError(f"{path}: missing field {exc}") from exc
    if not isinstance(parity, list) or any(p not in (0, 1) for p in parity):
        raise ParseFileError(f"{path}: parity must be a list of 0/1")
    dim = len(parity)
    entries = []
    for n, rec in enumerate(bracket, start=1):
        where = f"{path}: bracket[{n}]"
        try:
            i, j, coeffs = rec["i"], rec["j"], rec["coeffs"]
        except (TypeError, KeyError) as exc:
            raise ParseFileError(f"{where}: needs fields i, j, coeffs") from exc
        if not (isinstance(i, int) and isinstance(j, int) and 1 <= i <= j <= dim):
            raise InvariantError(f"{where}: indices must satisfy 1 <= i <= j <= {dim}")
        if not isinstance(coeffs, list) or len(coeffs) != dim:
            raise InvariantError(f"{where}: coeffs must have length {dim}")
        entries.append(
            (i - 1, j - 1, [_scalar(c, f"{where}.coeffs[{k + 1}]") for k, c in enumerate(coeffs)])
        )
    return new_algebra(parity, entries, _matrix(alpha, f"{path}: alpha"))


def algebra_to_json(g: HomLieSuperalgebra, name: str) -> dict:
    bracket = []
    for i in range(g.dim):
        for j in range(i, g.dim):
            if any(g.table[i][j]):
                bracket.append(
                    {
                        "i": i + 1,
                        "j": j + 1,
                        "coeffs": [format_scalar(c) for c in g.table[i][j]],
                    }
                )
    return {
        "name": name,
        "parity": list(g.parity),
        "bracket": bracket,
        "alpha": [[format_scalar(g.alpha[i, j]) for j in range(g.dim)] for i in range(g.dim)],
    }


def parse_cochain_file(path: str, g: HomLieSuperalgebra) -> Cochain:
    data = _load_json(path)
    if not isinstance(data, dict):
        raise ParseFileError(f"{path}: expected a JSON object")
    try:
        degree = data["degree"]
        parity = data["parity"]
        raw = data["entries"]
    except KeyError as exc:
        raise ParseFileError(f"{path}: missing field {exc}") from exc
    if parity not in (0, 1):
        raise ParseFileError(f"{path}: parity must be 0 or 1")
    coeffs = {}
    for n, rec in enumerate(raw, start=1):
        where = f"{path}: entries[{n}]"
        try:
            out, idx, coeff = rec["out"], rec["tuple"], rec["coeff"]
        except (TypeError, KeyError) as exc:
            raise ParseFileError(f"{where}: needs fields out, tuple, coeff") from exc
        if not (isinstance(out, int) and 1 <= out <= g.dim):
            raise InvariantError(f"{where}: out must be in 1..{g.dim}")
        if (
            not isinstance(idx, list)
            or len(idx) != degree
            or any(not (isinstance(i, int) and 1 <= i <= g.dim) for i in idx)
            or any(a > b for a, b in zip(idx, idx[1:]))
        ):
            raise InvariantError(f"{where}: tuple must be non-decreasing with {degree} indices in 1..{g.dim}")
        key = (out - 1, tuple(i - 1 for i in idx))
        coeffs[key] = coeffs.get(key, parse_scalar("0")) + _scalar(coeff, where)
    try:
        return Cochain(g, degree, parity, coeffs)
    except ValueError as exc:
        raise InvariantError(f"{path}: {exc}") from exc


def parse_witness_file(path: str) -> Matrix:
    data = _load_json(path)
    if not isinstance(data, dict) or "matrix" not in data:
        raise ParseFileError(f"{path}: expected an object with a 'matrix' field")
    return _matrix(data["matrix"], f"{path}: matrix")


def _print_matrix(m: Matrix, indent: str = "  "):
    for i in range(m.rows):
        print(indent + "[" + ", ".join(format_scalar(x) for x in m.row(i)) + "]")


# -- subcommands -------------------------------------------------------------


def _cmd_check(args) -> int:
    g = parse_algebra_file(args.file)
    homlie = check_skew(g) and check_hom_jacobi(g)
    mult = check_multiplicative(g)
    cert = is_heisenberg(g)
    if cert is None:
        heis = "no"
    else:
        heis = f"ok ({'odd' if cert.generator_parity else 'even'} generator)"
    print(
        f"hom-Lie: {'ok' if homlie else 'FAIL'}; "
        f"multiplicative: {'ok' if mult else 'FAIL'}; "
        f"Heisenberg: {heis}"
    )
    if not (homlie and mult and cert):
        raise CheckFailed("one or more structure checks failed")
    return EXIT_OK


def _cmd_cohomology(args) -> int:
    g = parse_algebra_file(args.file)
    report = CochainComplex(g).cohomology(args.k)
    parities = {"even": (0,), "odd": (1,), None: (0, 1)}[args.parity]
    header = ["k"]
    values = [str(args.k)]
    by_parity = {
        0: (report.z_even, report.b_even, report.h_even, report.representatives_even),
        1: (report.z_odd, report.b_odd, report.h_odd, report.representatives_odd),
    }
    for p in parities:
        tag = "even" if p == 0 else "odd"
        z, b, h, _ = by_parity[p]
        header += [f"dimZ_{tag}", f"dimB_{tag}", f"dimH_{tag}"]
        values += [str(z), str(b), str(h)]
    print(",".join(header))
    print(",".join(values))
    if args.representatives:
        for p in parities:
            for rep in by_parity[p][3]:
                print(repr(rep))
    return EXIT_OK


def _cmd_deform(args) -> int:
    g = parse_algebra_file(args.file)
    phi = parse_cochain_file(args.phi, g)
    t = parse_scalar(args.t)
    deformed = deform(g, phi, t, allow_noncocycle=args.allow_nonintegrable)
    print(json.dumps(algebra_to_json(deformed, "deformed"), indent=2))
    if args.check_lie:
        ok = is_lie_superalgebra(deformed)
        print(f"lie: {'ok' if ok else 'FAIL'}", file=sys.stderr)
        if not ok:
            raise CheckFailed("deformed bracket is not a Lie superalgebra")
    return EXIT_OK


def _cmd_normalize(args) -> int:
    g = parse_algebra_file(args.file)
    result = normalize_heisenberg(g)
    print(f"canonical: {result.canonical}")
    print("witness:")
    _print_matrix(result.witness)
    return EXIT_OK


def _cmd_iso(args) -> int:
    g1 = parse_algebra_file(args.a)
    g2 = parse_algebra_file(args.b)
    p = parse_witness_file(args.witness)
    if not verify_isomorphism(g1, g2, p):
        print("isomorphism: FAIL")
        raise CheckFailed("witness does not certify an isomorphism")
    print("isomorphism: ok")
    return EXIT_OK


def _parse_params(pairs) -> dict:
    params = {}
    for pair in pairs or ():
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise ParseFileError(f"--param expects k=v, got {pair!r}")
        params[key] = parse_scalar(value)
    return params


def _cmd_catalog(args) -> int:
    cid = CatalogId(args.name, _parse_params(args.param))
    g = catalog(cid)
    payload = json.dumps(algebra_to_json(g, str(cid)), indent=2)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)
    return EXIT_OK


SWEEP_COLUMNS = (
    "dimC1e",
    "dimC1o",
    "dimZ1e",
    "dimZ1o",
    "dimH1e",
    "dimH1o",
    "dimC2e",
    "dimC2o",
    "dimZ2e",
    "dimZ2o",
    "dimB2e",
    "dimB2o",
    "dimH2e",
    "dimH2o",
    "trivial_deformations",
)


def sweep_row(family: str, params: dict) -> list[str]:
    g = catalog(CatalogId(family, params))
    cx = CochainComplex(g)
    r1 = cx.cohomology(1)
    r2 = cx.cohomology(2)
    return [
        family,
        *(format_scalar(params[k]) for k in FAMILY_PARAMS[family]),
        str(len(cx.space(1, 0))),
        str(len(cx.space(1, 1))),
        str(r1.z_even),
        str(r1.z_odd),
        str(r1.h_even),
        str(r1.h_odd),
        str(len(cx.space(2, 0))),
        str(len(cx.space(2, 1))),
        str(r2.z_even),
        str(r2.z_odd),
        str(r2.b_even),
        str(r2.b_odd),
        str(r2.h_even),
        str(r2.h_odd),
        "yes" if r2.h_even == 0 else "no",
    ]


def _cmd_sweep(args) -> int:
    family = args.family
    if family not in FAMILY_PARAMS:
        raise ConstraintError(f"unknown catalog family {family!r}")
    names = FAMILY_PARAMS[family]
    grids = {}
    for spec in args.grid:
        key, sep, values = spec.partition("=")
        if not sep or key not in names:
            raise ParseFileError(f"--grid expects one of {names} as k=v1,v2,..., got {spec!r}")
        grids[key] = [parse_scalar(v) for v in values.split(",")]
    missing = [k for k in names if k not in grids]
    if missing:
        raise ParseFileError(f"sweep over {family} needs grids for {missing}")
    rows = []
    for combo in itertools.product(*(grids[k] for k in names)):
        params = dict(zip(names, combo))
        try:
            rows.append(sweep_row(family, params))
        except ConstraintError as exc:
            point = ", ".join(f"{k}={format_scalar(v)}" for k, v in params.items())
            print(f"skipped {family}({point}): {exc}", file=sys.stderr)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["family", *names, *SWEEP_COLUMNS])
        writer.writerows(rows)
    print(f"wrote {len(rows)} rows to {args.out}")
    return EXIT_OK


# -- entry point -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hsuper",
        description="Exact checks, cohomology, and deformations of 3-dimensional "
        "Heisenberg Hom-Lie superalgebras over Q(i).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify axioms, multiplicativity, and the Heisenberg property")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("cohomology", help="report cocycle/coboundary/cohomology dimensions")
    p.add_argument("file")
    p.add_argument("-k", type=int, choices=(1, 2), required=True)
    p.add_argument("--parity", choices=("even", "odd"), default=None)
    p.add_argument("--representatives", action="store_true")
    p.set_defaults(func=_cmd_cohomology)

    p = sub.add_parser("deform", help="apply an even 2-cocycle to the bracket")
    p.add_argument("file")
    p.add_argument("--phi", required=True, metavar="COCHAIN")
    p.add_argument("--t", required=True, metavar="SCALAR")
    p.add_argument("--check-lie", action="store_true")
    p.add_argument("--allow-nonintegrable", action="store_true")
    p.set_defaults(func=_cmd_deform)

    p = sub.add_parser("normalize", help="canonical Heisenberg family and witness")
    p.add_argument("file")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("iso", help="verify an isomorphism witness")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--witness", required=True)
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("catalog", help="emit a named family instance as an algebra file")
    p.add_argument("name")
    p.add_argument("--param", action="append", metavar="K=V")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("sweep", help="CSV of dimension reports over a parameter grid")
    p.add_argument("--family", required=True)
    p.add_argument("--grid", required=True, nargs="+", metavar="K=V1,V2,...")
    p.add_argument("--out", required=True, metavar="CSV")
    p.set_defaults(func=_cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseFileError, ScalarParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DeformationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except InvariantError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except CheckFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except ArithmeticError as exc:
        print(f"error: no witness found: {exc}", file=sys.stderr)
        return EXIT_NO_WITNESS


if __name__ == "__main__":
    sys.exit(main())

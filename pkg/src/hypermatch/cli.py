"""Command-line interface.

Subcommands: construct | matchpoly | rho | me | cospectral | suite.
Exit codes: 0 success (for `cospectral`: the polynomials are equal),
1 checked-and-unequal / suite failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .families import ConstructionSpec
from .hypergraph import HypergraphError, UniformHypergraph
from .matching import matching_polynomial, matching_polynomial_oracle
from .polynomial import PolynomialShapeError
from .spectra import default_tol, spectral_summary
from .suites import SUITES, run_suite


def _load_hypergraph(path: str) -> UniformHypergraph:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise HypergraphError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise HypergraphError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise HypergraphError(f"{path}: expected a JSON object")
    return UniformHypergraph.from_json_dict(data)


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _int_list(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip() != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _int_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}") from exc


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="hypermatch",
        description="Matching polynomials, spectral radius, and matching "
        "energy of r-uniform supertrees; cospectral-family verification.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a named family and print its JSON")
    p.add_argument("--family", required=True, help="LoosePath, T, Q, R, W, or Z")
    p.add_argument("--r", type=int, required=True, help="edge size (>= 2)")
    p.add_argument("--params", type=_int_list, required=True, help="comma-separated integers")
    p.add_argument("-o", "--output", default=None, help="write JSON here instead of stdout")

    p = sub.add_parser("matchpoly", help="matching polynomial of a hypergraph JSON file")
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true", help="use brute-force enumeration")
    p.add_argument("-o", "--output", default=None)

    for name, help_text in (
        ("rho", "spectral radius of a hypergraph JSON file"),
        ("me", "matching energy of a hypergraph JSON file"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file")
        p.add_argument("--tol", type=float, default=None, help="override tolerance (default: HG_TOL or 1e-10)")
        p.add_argument("--summary", action="store_true", help="print the full spectral summary JSON")

    p = sub.add_parser("cospectral", help="compare matching polynomials of two files")
    p.add_argument("lhs")
    p.add_argument("rhs")

    p = sub.add_parser("suite", help="run a deterministic verification suite")
    p.add_argument("--name", required=True, choices=sorted(SUITES))
    p.add_argument("--r", type=_int_list, default=[2, 3, 4, 5], help="edge sizes, e.g. 2,3,4")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=25)
    p.add_argument("--m-max", type=int, default=4)
    p.add_argument("--m-range", type=_int_range, default=(6, 10))
    p.add_argument("--n-range", type=_int_range, default=(6, 10))
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--json", dest="json_path", default=None, help="also write the JSON report here")
    return top


def _cmd_construct(args) -> int:
    spec = ConstructionSpec(args.family, args.r, tuple(args.params))
    built = spec.build()
    payload = built.hg.to_json_dict()
    payload["anchors"] = dict(sorted(built.anchors.items()))
    _emit(json.dumps(payload, indent=2), args.output)
    return 0


def _cmd_matchpoly(args) -> int:
    hg = _load_hypergraph(args.file)
    phi = matching_polynomial_oracle(hg) if args.oracle else matching_polynomial(hg)
    _emit(json.dumps(phi.to_json_dict(), indent=2), args.output)
    return 0


def _cmd_scalar(args, which: str) -> int:
    hg = _load_hypergraph(args.file)
    tol = args.tol if args.tol is not None else default_tol()
    summary = spectral_summary(hg, tol)
    if args.summary:
        print(json.dumps(summary.to_json_dict(), indent=2))
    else:
        value = summary.rho if which == "rho" else summary.me
        print(f"{value:.15g}")
    return 0


def _cmd_cospectral(args) -> int:
    lhs = _load_hypergraph(args.lhs)
    rhs = _load_hypergraph(args.rhs)
    if lhs.edges and rhs.edges and lhs.r != rhs.r:
        raise HypergraphError(f"edge sizes differ: {lhs.r} vs {rhs.r}")
    equal = matching_polynomial(lhs) == matching_polynomial(rhs)
    print("cospectral: matching polynomials are "
          + ("identical" if equal else "different"))
    return 0 if equal else 1


def _cmd_suite(args) -> int:
    kwargs = {"r_list": tuple(args.r), "seed": args.seed, "tol": args.tol}
    if args.name == "coalesce":
        kwargs.update(trials=args.trials, chain_m_max=args.m_max)
    elif args.name == "bridge":
        kwargs.update(trials=args.trials, m_max=args.m_max)
    else:
        kwargs.update(m_range=args.m_range, n_range=args.n_range)
    report = run_suite(args.name, **kwargs)
    print(report.human_table())
    if args.json_path:
        with open(args.json_path, "w") as fh:
            fh.write(report.to_json() + "\n")
    else:
        print(report.to_json())
    return 0 if report.passed else 1


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        if args.command == "construct":
            return _cmd_construct(args)
        if args.command == "matchpoly":
            return _cmd_matchpoly(args)
        if args.command in ("rho", "me"):
            return _cmd_scalar(args, args.command)
        if args.command == "cospectral":
            return _cmd_cospectral(args)
        return _cmd_suite(args)
    except (HypergraphError, PolynomialShapeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: ``liefp <subcommand> ...``.

Exit codes: 0 success (suite: all PASS/SKIPPED), 1 a FAIL or an invalid
ring, 2 unreadable or malformed input, 3 a guard was exceeded and nothing
failed.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import ringio
from .abnormal import enumerate_subrings
from .corpus import FAMILIES, FamilySpec, generate
from .engel import cartan_subring, cartan_subrings, engel_element
from .errors import GuardExceeded, NotApplicable, VerificationFailed
from .frattini import frattini
from .harness import SuiteConfig, default_corpus, load_corpus_dir, verify_suite
from .liering import derived_series, is_nilpotent, is_soluble, lower_central_series, validate

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3


class InputError(Exception):
    pass


def _rows(U) -> list:
    return [list(r) for r in U.basis]


def _emit(doc: dict) -> None:
    print(json.dumps(doc, sort_keys=True))


def _coords(text: str, n: int) -> list[int]:
    try:
        v = [int(c) for c in text.split(",")]
    except ValueError:
        raise InputError(f"bad coordinates {text!r}") from None
    if len(v) != n:
        raise InputError(f"expected {n} coordinates, got {len(v)}")
    return v


def _load(path: str):
    try:
        return ringio.load(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except ringio.RingFormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_valid(path: str):
    g = _load(path)
    v = validate(g)
    if not v:
        raise InputError(f"{path}: invalid ring ({v.kind} at {v.where}: {v.detail})")
    return g


def cmd_validate(args) -> int:
    g = _load(args.file)
    v = validate(g)
    _emit({"name": g.name, "ok": v.ok, "kind": v.kind, "where": list(v.where) if v.where else None,
           "detail": v.detail})
    return EXIT_OK if v else EXIT_FAIL


def cmd_gen(args) -> int:
    try:
        spec = FamilySpec(args.family, args.n, args.p, args.seed)
        g = generate(spec)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.output == "-":
        sys.stdout.write(ringio.dumps(g))
    else:
        ringio.dump(g, args.output)
    return EXIT_OK


def cmd_cartan(args) -> int:
    g = _load_valid(args.file)
    doc = {"name": g.name}
    try:
        doc["cartan"] = _rows(cartan_subring(g, args.guard))
    except (NotApplicable, VerificationFailed) as exc:
        doc["error"] = f"{type(exc).__name__}: {exc}"
    if args.all:
        doc["all_cartan"] = [_rows(U) for U in cartan_subrings(g, args.guard)]
    _emit(doc)
    return EXIT_OK if "error" not in doc else EXIT_FAIL


def cmd_engel(args) -> int:
    g = _load_valid(args.file)
    x = _coords(args.element, g.n)
    E = engel_element(g, x)
    _emit({"name": g.name, "element": [int(a) % g.p for a in x], "engel": _rows(E.space),
           "stabilization_index": E.stabilization_index})
    return EXIT_OK


def cmd_series(args) -> int:
    g = _load_valid(args.file)
    _emit({
        "name": g.name,
        "derived_series": [_rows(U) for U in derived_series(g)],
        "lower_central_series": [_rows(U) for U in lower_central_series(g)],
        "soluble": is_soluble(g),
        "nilpotent": is_nilpotent(g),
    })
    return EXIT_OK


def cmd_subrings(args) -> int:
    g = _load_valid(args.file)
    containing = None
    if args.containing:
        containing = g.span(np.array([_coords(c, g.n) for c in args.containing.split(";")]))
    found = [_rows(U) for U in enumerate_subrings(g, containing, args.guard)]
    _emit({"name": g.name, "count": len(found), "subrings": found})
    return EXIT_OK


def cmd_frattini(args) -> int:
    g = _load_valid(args.file)
    res = frattini(g, args.guard)
    _emit({"name": g.name, "frattini": _rows(res.space), "is_ideal": res.is_ideal,
           "is_nilpotent": res.is_nilpotent, "maximal_subrings": [_rows(M) for M in res.maximal_subrings]})
    return EXIT_OK


def _primes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise InputError(f"bad prime list {text!r}") from None


def cmd_suite(args) -> int:
    try:
        config = SuiteConfig(subspace_guard=args.guard, seed=args.seed)
        if args.corpus == "builtin":
            corpus = default_corpus(_primes(args.primes), args.max_dim, args.seed)
        else:
            corpus = load_corpus_dir(args.corpus)
    except (ValueError, OSError) as exc:
        raise InputError(str(exc)) from None
    report = verify_suite(corpus, config)
    for line in report.lines():
        print(line)
    print(json.dumps(report.counts(), sort_keys=True))
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(report.dumps())
    return report.exit_status


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="liefp", description="Cartan subrings of finite Lie rings over F_p.")
    sp = ap.add_subparsers(dest="command", required=True)

    p = sp.add_parser("validate", help="check the alternating law and Jacobi identity")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sp.add_parser("gen", help="write a ring from a named family")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)

    p = sp.add_parser("cartan", help="find a Cartan subring")
    p.add_argument("file")
    p.add_argument("--all", action="store_true", help="also list every Cartan subring")
    p.add_argument("--guard", type=int, default=200_000)
    p.set_defaults(func=cmd_cartan)

    p = sp.add_parser("engel", help="Engel subring of one element")
    p.add_argument("file")
    p.add_argument("--element", required=True, help="comma-separated coordinates")
    p.set_defaults(func=cmd_engel)

    p = sp.add_parser("series", help="derived and lower central series")
    p.add_argument("file")
    p.set_defaults(func=cmd_series)

    p = sp.add_parser("subrings", help="enumerate subrings")
    p.add_argument("file")
    p.add_argument("--containing", help="semicolon-separated vectors, e.g. '1,0,0;0,1,0'")
    p.add_argument("--guard", type=int, default=200_000)
    p.set_defaults(func=cmd_subrings)

    p = sp.add_parser("frattini", help="maximal subrings and their intersection")
    p.add_argument("file")
    p.add_argument("--guard", type=int, default=200_000)
    p.set_defaults(func=cmd_frattini)

    p = sp.add_parser("suite", help="run the theorem checks over a corpus")
    p.add_argument("--corpus", default="builtin", help="'builtin' or a directory of ring files")
    p.add_argument("--primes", default="3,5,7")
    p.add_argument("--max-dim", type=int, default=3)
    p.add_argument("--guard", type=int, default=200_000)
    p.add_argument("--report")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_suite)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())

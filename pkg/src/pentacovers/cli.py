"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error (including
family side-condition violations).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import modarith as ma
from .construct import (
    FAMILY_NAMES,
    NotApplicable,
    SideConditionError,
    canonical_arc_group,
    canonical_cover_subgroup,
    expected_base,
    family,
    manifest,
)
from .covers import find_dihedral_cover, quotient, verify_symmetric_cover
from .graph import complete_graph, is_connected, regular_valency
from .graphio import read_graph, to_graph6, to_sparse6, write_graph
from .groups import Perm, PermGroup, identify_group, loads_perms
from .symmetry import (
    SymmetryInconsistency,
    are_isomorphic,
    automorphism_group,
    automorphism_group_any,
    is_arc_transitive,
    s_transitivity,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True, choices=FAMILY_NAMES, metavar="NAME",
                   help="family name: " + ", ".join(FAMILY_NAMES))
    p.add_argument("--m", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--e", type=int)
    p.add_argument("--r", type=int, help="override the root of x^4+x^3+x^2+x+1 in Z_m")
    p.add_argument("--lam", type=int, help="override lambda")


def _build(args: argparse.Namespace):
    return family(args.family, args.m, args.p, args.e, args.r, args.lam)


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pentacovers", description="Pentavalent symmetric covers toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a family member and write it as graph6/sparse6")
    _add_family_args(p)
    p.add_argument("--format", choices=["graph6", "sparse6"], default="graph6")
    p.add_argument("-o", "--output", help="output file (default: standard output)")

    p = sub.add_parser("aut", help="automorphism group order, stabilizer and s")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("iso", help="test two graphs for isomorphism")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("solve-eq1", help="roots of x^4+x^3+x^2+x+1 modulo m")
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("quotient", help="quotient graph by a subgroup")
    p.add_argument("file")
    p.add_argument("--subgroup", required=True, help="'canonical' (needs --family) or a file of permutations")
    p.add_argument("--family", choices=FAMILY_NAMES, metavar="NAME")
    p.add_argument("--m", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--e", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--lam", type=int)
    p.add_argument("--format", choices=["graph6", "sparse6"], default="graph6")
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("verify-cover", help="verify a graph file as a symmetric regular cover")
    p.add_argument("cover")
    _add_family_args(p)
    p.add_argument("--json", action="store_true")

    sub.add_parser("catalog", help="list families and their side conditions")

    p = sub.add_parser("acceptance", help="run the acceptance suite")
    p.add_argument("--quick", action="store_true", help="only instances with at most 600 vertices")
    p.add_argument("--only", type=int, nargs="+", metavar="N", help="run only these criteria")
    p.add_argument("--json", action="store_true")
    return parser


def _read(path: str):
    try:
        return read_graph(path)
    except FileNotFoundError:
        raise UsageError(f"no such file: {path}")
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}")


def _transport(group_gens: Sequence[Perm], iso: Perm) -> list[Perm]:
    """Move permutations of the built graph onto a file graph via an isomorphism built -> file."""
    inv = iso.inverse()
    return [inv * g * iso for g in group_gens]


def cmd_build(args) -> int:
    inst = _build(args)
    if args.output:
        write_graph(inst.graph, args.output, args.format)
    else:
        data = to_graph6(inst.graph) if args.format == "graph6" else to_sparse6(inst.graph)
        sys.stdout.write(data.decode() + "\n")
    print(f"{inst.label}: {inst.graph.n} vertices, valency {regular_valency(inst.graph)}", file=sys.stderr)
    return EXIT_OK


def cmd_aut(args) -> int:
    g = _read(args.file)
    aut = automorphism_group(g) if is_connected(g) else automorphism_group_any(g)
    stab = aut.stabilizer()
    label = identify_group(stab) if aut.stabilizer_order <= 10**4 else "unrecognized"
    s = None
    arc = is_arc_transitive(g, aut)
    status = EXIT_OK
    if arc and (regular_valency(g) or 0) >= 2:
        try:
            s = s_transitivity(g, aut)
        except SymmetryInconsistency as exc:
            print(f"inconsistency: {exc}", file=sys.stderr)
            status = EXIT_FAIL
    out = {"vertices": g.n, "order": aut.order, "generators": len(aut.generators),
           "stabilizer_order": aut.stabilizer_order, "stabilizer": label, "arc_transitive": arc, "s": s}
    if args.json:
        print(json.dumps(out, sort_keys=True))
    else:
        print(f"order {aut.order}")
        print(f"generators {len(aut.generators)}")
        print(f"stabilizer {label} (order {aut.stabilizer_order})")
        print(f"arc-transitive {'yes' if arc else 'no'}" + (f", s = {s}" if s is not None else ""))
    return status


def cmd_iso(args) -> int:
    g1, g2 = _read(args.file1), _read(args.file2)
    iso = are_isomorphic(g1, g2)
    if args.json:
        print(json.dumps({"isomorphic": iso is not None, "map": list(iso.images) if iso else None}))
    elif iso is None:
        print("not isomorphic")
    else:
        print("isomorphic")
        print(" ".join(map(str, iso.images)))
    return EXIT_OK


def cmd_solve_eq1(args) -> int:
    if args.m < 1:
        raise UsageError("m must be a positive integer")
    roots = sorted(ma.solve_eq1(args.m))
    print(" ".join(map(str, roots)) if roots else "no solutions")
    return EXIT_OK


def _canonical_on(g, args) -> PermGroup:
    if not args.family:
        raise UsageError("--subgroup canonical needs --family")
    inst = family(args.family, args.m, args.p, args.e, args.r, args.lam)
    N = canonical_cover_subgroup(inst)
    if g == inst.graph:
        return N
    iso = are_isomorphic(inst.graph, g)
    if iso is None:
        raise UsageError(f"the graph in the file is not isomorphic to {inst.label}")
    return PermGroup(g.n, _transport(N.generators, iso))


def cmd_quotient(args) -> int:
    g = _read(args.file)
    if args.subgroup == "canonical":
        N = _canonical_on(g, args)
    else:
        try:
            gens = loads_perms(Path(args.subgroup).read_text())
        except FileNotFoundError:
            raise UsageError(f"no such file: {args.subgroup}")
        N = PermGroup(g.n, gens)
    q, _ = quotient(g, N)
    write_graph(q, args.output, args.format)
    print(f"quotient: {q.n} vertices, valency {regular_valency(q)}")
    return EXIT_OK


def cmd_verify_cover(args) -> int:
    g = _read(args.cover)
    inst = _build(args)
    iso = None if g == inst.graph else are_isomorphic(inst.graph, g)
    if g != inst.graph and iso is None:
        raise UsageError(f"{args.cover} is not isomorphic to {inst.label}")
    if inst.name in ("i12_2", "g48", "g60", "g120"):
        res = find_dihedral_cover(g, g.n // 12, complete_graph(6))
        if res.report is None:
            out = {"checks_passed": False, "fibre_group_source": None,
                   "note": f"no semiregular D_{g.n // 12} with arc-transitive normalizer and quotient K_6"}
            print(json.dumps(out, sort_keys=True) if args.json else out["note"])
            return EXIT_FAIL
        report = res.report
    else:
        try:
            N = canonical_cover_subgroup(inst)
        except NotApplicable as exc:
            raise UsageError(str(exc))
        F = canonical_arc_group(inst, with_beta=False)
        gens_n, gens_f = list(N.generators), list(F.generators)
        if iso is not None:
            gens_n, gens_f = _transport(gens_n, iso), _transport(gens_f, iso)
        report = verify_symmetric_cover(g, PermGroup(g.n, gens_n), expected_base(inst),
                                        supplied=PermGroup(g.n, gens_f))
    if args.json:
        print(report.to_json())
    else:
        for key, value in report.to_dict().items():
            print(f"{key}: {value}")
    return EXIT_OK if report.checks_passed else EXIT_FAIL


def cmd_catalog(args) -> int:
    for name, entry in manifest().items():
        conds = "; ".join(entry.get("conditions", [])) or "no parameters"
        params = ", ".join(entry.get("parameters", []))
        print(f"{name:7s} {entry['title']}")
        print(f"        parameters: {params or '-'}; conditions: {conds}; vertices: {entry['vertices']}")
    return EXIT_OK


def cmd_acceptance(args) -> int:
    from .acceptance import run

    results = run(quick=args.quick, only=set(args.only) if args.only else None,
                  progress=None if args.json else (lambda r: print(r.line(), flush=True)))
    if args.json:
        print(json.dumps([{"criterion": r.number, "title": r.title, "status": r.status, "detail": r.detail,
                           "seconds": round(r.seconds, 3)} for r in results], indent=1))
    else:
        passed = sum(r.passed for r in results)
        failed = sum(r.status == "FAIL" for r in results)
        print(f"{passed} passed, {failed} failed, {len(results) - passed - failed} skipped")
    return EXIT_FAIL if any(r.status == "FAIL" for r in results) else EXIT_OK


COMMANDS = {
    "build": cmd_build, "aut": cmd_aut, "iso": cmd_iso, "solve-eq1": cmd_solve_eq1, "quotient": cmd_quotient,
    "verify-cover": cmd_verify_cover, "catalog": cmd_catalog, "acceptance": cmd_acceptance,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with status 2
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (SideConditionError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

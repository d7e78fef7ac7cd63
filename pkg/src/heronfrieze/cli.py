"""Command-line front end.

Exit codes: 0 verified, 1 a mathematical assertion failed, 2 usage or input
error. All numbers are printed as exact fraction strings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from pathlib import Path
from typing import List, Optional

from .geometry import InputError, Polygon, format_rational, load_polygon, random_polygon
from .grassmannian import coordinate_matrix, evaluate_relation, generate_plucker_relations, relation_to_json
from .grids import (
    build_minor_frieze,
    build_s_subfrieze,
    check_diamond_determinants,
    check_minor_diamonds,
    check_s_diamonds,
    grid_to_json,
    minor_grid_entries,
    plucker_frieze,
    plucker_grid_entries,
    s_grid_entries,
)
from .heronian import build_polygonal_frieze, load_frieze, verify_frieze
from .relations import (
    brute_force_relations,
    canonical_set,
    enumerate_relations,
    relation_to_json as heronian_relation_to_json,
    to_s_relation,
    verify_s_relation,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def thread_count() -> int:
    raw = os.environ.get("FRIEZE_THREADS", "1").strip() or "1"
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"FRIEZE_THREADS must be an integer, got {raw!r}")
    if value < 0:
        raise UsageError("FRIEZE_THREADS must be >= 0")
    return value if value else (os.cpu_count() or 1)


def _emit(args, payload, text_lines: List[str]) -> None:
    if args.format == "text":
        out = "\n".join(text_lines) + "\n"
    else:
        out = json.dumps(payload, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)


def _polygon(args) -> Polygon:
    if not args.polygon:
        raise UsageError("--polygon is required")
    return load_polygon(args.polygon)


def cmd_polygon(args) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    if args.n < 3:
        raise UsageError(f"--n must be at least 3, got {args.n}")
    if args.bound < 1:
        raise UsageError("--bound must be positive")
    P = random_polygon(args.n, args.seed, args.bound)
    data = P.to_json()
    lines = [f"A{i} = ({x}, {y})" for i, (x, y) in enumerate(data["vertices"], 1)]
    _emit(args, data, lines)
    return EXIT_OK


def cmd_frieze_build(args) -> int:
    F = build_polygonal_frieze(_polygon(args))
    data = F.to_json()
    lines = [f"z{e['i']},{e['j']} = {e['value']}" for e in data["z"]]
    lines += [f"S{e['i']},{e['j']},{e['k']} = {e['value']}" for e in data["S"]]
    _emit(args, data, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    if bool(args.polygon) == bool(args.frieze):
        raise UsageError("verify needs exactly one of --polygon or --frieze")
    P = None
    if args.polygon:
        P = load_polygon(args.polygon)
        F = build_polygonal_frieze(P)
    else:
        F = load_frieze(args.frieze)
    report = verify_frieze(F)
    payload = {"n": F.n, "frieze": report.to_json()}
    lines = [f"diamonds checked: {report.diamonds_checked}"]
    lines += [f"FAIL diamond {''.join(map(str, f.label))} {f.equation}: residual {format_rational(f.residual)}"
              for f in report.failures]
    lines += [f"FAIL boundary {b.entry}{b.index} = {format_rational(b.value)}"
              for b in report.boundary_failures]
    ok = report.ok

    if P is not None and P.n >= 4:
        M = coordinate_matrix(P)
        bad = []
        rels = generate_plucker_relations(3, P.n)
        for R in rels:
            v = evaluate_relation(M, R)
            if v != 0:
                bad.append(relation_to_json(R, v))
        payload["plucker_relations"] = {"checked": len(rels), "failures": bad}
        lines.append(f"Plucker relations checked: {len(rels)}, nonzero: {len(bad)}")
        ok = ok and not bad

    if F.n >= 4:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RuntimeWarning)
            hmr = enumerate_relations(F.n)
        bad_s = []
        for R in hmr:
            S = to_s_relation(R)
            res = verify_s_relation(P if P is not None else F, S)
            if res != 0:
                bad_s.append({"i": list(R.i_pair), "j": list(R.j_tuple),
                              "s_terms": S.to_json(), "residual": format_rational(res)})
        payload["s_relations"] = {"checked": len(hmr), "failures": bad_s}
        lines.append(f"S-relations checked: {len(hmr)}, nonzero: {len(bad_s)}")
        ok = ok and not bad_s

    payload["ok"] = ok
    lines.append("verified" if ok else "VERIFICATION FAILED")
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_relations(args) -> int:
    P = load_polygon(args.polygon) if args.polygon else None
    n = args.n
    if n is None:
        if P is None:
            raise UsageError("relations needs --n or --polygon")
        n = P.n
    if P is not None and P.n != n:
        raise UsageError(f"--n {n} does not match polygon order {P.n}")
    if n < 4:
        raise UsageError(f"relations need n >= 4 (no 4-element j-tuple for n={n})")
    rels = enumerate_relations(n)
    M = coordinate_matrix(P) if P is not None else None
    payload = [heronian_relation_to_json(R, P, M) for R in rels]
    lines = []
    for R, item in zip(rels, payload):
        line = f"{R.case_tag} i={R.i_pair} j={R.j_tuple}: {to_s_relation(R)}"
        if "residual" in item:
            line += f"  [residual {item['residual']}]"
        lines.append(line)
    status = EXIT_OK
    if P is not None and any(item["residual"] != "0" or item["minor_residual"] != "0"
                             for item in payload):
        status = EXIT_FAIL
    if args.oracle:
        oracle = brute_force_relations(n)
        if canonical_set(oracle) == canonical_set(rels):
            print(f"oracle: sets identical ({len(rels)} relations)", file=sys.stderr)
        else:
            mine = {r.key for r in rels}
            theirs = {r.key for r in oracle}
            print(f"oracle: sets differ; only enumerated {sorted(mine - theirs)}, "
                  f"only oracle {sorted(theirs - mine)}", file=sys.stderr)
            status = EXIT_FAIL
    _emit(args, payload, lines)
    return status


def cmd_determinants(args) -> int:
    P = _polygon(args)
    variant = args.variant or "plucker"
    workers = thread_count()
    if variant == "plucker":
        k = 3 if args.k is None else args.k
        if k == 3:
            M = coordinate_matrix(P)
        elif k == 2:
            M = coordinate_matrix(P).rows(2, 3)
        else:
            raise UsageError("--k must be 2 or 3 for polygon input")
        size = k + 1 if args.size is None else args.size
        if size < 1:
            raise UsageError("--size must be positive")
        report = check_diamond_determinants(M, k, size, workers=workers)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RuntimeWarning)
            entries = plucker_grid_entries(plucker_frieze(k, P.n), M)
        payload = grid_to_json("plucker", P.n, k, entries, report.to_json())
        ok = report.ok
        lines = [f"anchor {e.anchor} size {e.size}: {format_rational(e.value)}" for e in report.entries]
    elif variant == "minor":
        size = 4 if args.size is None else args.size
        report = check_minor_diamonds(P, size)
        payload = grid_to_json("minor", P.n, 3, minor_grid_entries(build_minor_frieze(P)), report.to_json())
        ok = report.ok
        lines = [f"anchor {e.anchor} size {e.size}: {format_rational(e.value)}" for e in report.entries]
    else:
        if args.size not in (None, 4):
            raise UsageError("S-subfrieze diamonds are 4x4")
        if P.n < 5:
            raise UsageError("S-subfrieze diamonds need n >= 5")
        report = check_s_diamonds(P, variant, workers=workers)
        sub = build_s_subfrieze(build_polygonal_frieze(P), variant)
        payload = grid_to_json(variant, P.n, 3, s_grid_entries(sub), report.to_json())
        ok = report.ok
        lines = [f"anchor {e.anchor}: S-det {format_rational(e.s_det)}, m-det {format_rational(e.m_det)}"
                 f"{'' if e.ok else '  FAIL'}" for e in report.entries]
    lines.append("all asserted determinants vanish" if ok else "NONZERO DETERMINANT")
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {
    "polygon": cmd_polygon,
    "frieze": cmd_frieze_build,
    "verify": cmd_verify,
    "relations": cmd_relations,
    "determinants": cmd_determinants,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--polygon", metavar="PATH")
    common.add_argument("--n", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--size", type=int)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--bound", type=int, default=10)
    common.add_argument("--variant", choices=["s-primary", "s-alternate", "minor", "plucker"])
    common.add_argument("--oracle", action="store_true")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--format", choices=["json", "text"], default="json")

    parser = argparse.ArgumentParser(
        prog="heronfrieze",
        description="Exact Heronian frieze construction and identity verification.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("polygon", parents=[common], help="generate a seeded random polygon")
    sub.add_parser("frieze", parents=[common], help="build the polygonal Heronian frieze")
    v = sub.add_parser("verify", parents=[common], help="verify all frieze identities")
    v.add_argument("--frieze", metavar="PATH", help="verify a frieze JSON file instead of a polygon")
    sub.add_parser("relations", parents=[common], help="enumerate Heronian minor relations")
    sub.add_parser("determinants", parents=[common], help="sweep diamond determinants")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "frieze"):
        args.frieze = None
    try:
        return COMMANDS[args.command](args)
    except (UsageError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

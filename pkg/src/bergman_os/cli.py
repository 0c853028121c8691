"""Command-line interface.

Subcommands: ``fixtures``, ``info``, ``ranks``, ``verify``, ``fan``.
Matroid arguments accept a builtin fixture name or a path to a matroid
JSON file.  Exit codes: 0 all requested checks passed, 1 some check
failed, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import CircuitAxiomViolation, LoopDetected, NotPure
from .fans import (
    build_affine_fan,
    build_bergman_fan,
    check_balanced,
    check_ideal_property,
    fan_statistics,
    fk_lattice,
    load_fan_file,
)
from .fixtures import BUILTIN, ALIASES, get_fixture, load_matroid_file
from .matroids import Matroid
from .orlik_solomon import ORACLE_SIZE_DEFAULT, report_fragments
from .verify import verify_matroid
from .version import __version__

ENV_MAX_ORACLE = "BERGMAN_OS_MAX_ORACLE"


def _default_oracle_size() -> int:
    raw = os.environ.get(ENV_MAX_ORACLE)
    if raw is None:
        return ORACLE_SIZE_DEFAULT
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{ENV_MAX_ORACLE} must be an integer, got {raw!r}")


def _resolve_matroid(spec: str) -> tuple[str, Matroid]:
    key = spec.lower()
    if key in BUILTIN or key in ALIASES:
        return ALIASES.get(key, key), get_fixture(key)
    return load_matroid_file(spec)


def _emit(payload: dict, fmt: str, text_renderer) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        text_renderer(payload)


def _cmd_fixtures(args) -> int:
    rows = []
    for name in BUILTIN:
        m = get_fixture(name)
        rows.append(
            {
                "name": name,
                "ground_size": m.ground_size,
                "rank": m.rank(),
                "circuits": [list(c) for c in m.circuits()],
            }
        )
    payload = {
        "fixtures": rows,
        "aliases": dict(ALIASES),
        "labeling": "elements are 0-based; the written labels of m1 (1..4) and"
                    " m2 (1..6) map to internal labels 0..3 and 0..5 (label i -> i-1)",
    }

    def text(p):
        print(f"{'name':10} {'size':>4} {'rank':>4}  circuits")
        for row in p["fixtures"]:
            circs = " ".join("".join(map(str, c)) for c in row["circuits"])
            print(f"{row['name']:10} {row['ground_size']:>4} {row['rank']:>4}  {circs or '-'}")
        print("aliases:", ", ".join(f"{a} -> {b}" for a, b in p["aliases"].items()))
        print("note:", p["labeling"])

    _emit(payload, args.format, text)
    return 0


def _cmd_info(args) -> int:
    name, matroid = _resolve_matroid(args.matroid)
    affine = build_affine_fan(matroid)
    projective = build_bergman_fan(matroid)
    payload = {
        "name": name,
        "ground_size": matroid.ground_size,
        "rank": matroid.rank(),
        "source": matroid.source,
        "validated": matroid.validated,
        "circuits": [list(c) for c in matroid.circuits()],
        "flats_per_rank": {
            str(k): [list(f.elements) for f in matroid.flats(k)]
            for k in range(matroid.rank() + 1)
        },
        "affine_fan": fan_statistics(affine),
        "bergman_fan": fan_statistics(projective),
    }

    def text(p):
        print(f"matroid {p['name']}: {p['ground_size']} elements, rank {p['rank']},"
              f" source {p['source']}")
        print("circuits:", " ".join("".join(map(str, c)) for c in p["circuits"]) or "-")
        for k, flats in p["flats_per_rank"].items():
            names = " ".join("".join(map(str, f)) if f else "{}" for f in flats)
            print(f"flats rank {k}: {names}")
        for key in ("affine_fan", "bergman_fan"):
            st = p[key]
            print(f"{key}: ambient Z^{st['ambient_rank']}, rays {st['rays']},"
                  f" cones per dim {st['cones_per_dim']},"
                  f" distinct wedges per dim {st['distinct_wedges_per_dim']}")

    _emit(payload, args.format, text)
    return 0


def _cmd_ranks(args) -> int:
    name, matroid = _resolve_matroid(args.matroid)
    affine = build_affine_fan(matroid)
    projective = build_bergman_fan(matroid)
    fragments = report_fragments(matroid)
    for row in fragments:
        k = row["degree"]
        row["fk_affine"] = fk_lattice(affine, k).rank
        row["fk_projective"] = fk_lattice(projective, k).rank
    payload = {"name": name, "degrees": fragments}

    def text(p):
        print(f"graded ranks for {p['name']}")
        header = f"{'k':>2} {'F_k(aff)':>9} {'F_k(proj)':>9} {'OS^k':>6} {'OS0^k':>6} {'ideal0':>6} torsion"
        print(header)
        for row in p["degrees"]:
            tor = ",".join(map(str, row["torsion"])) or "-"
            print(f"{row['degree']:>2} {row['fk_affine']:>9} {row['fk_projective']:>9}"
                  f" {row['os_rank']:>6} {row['os0_rank']:>6} {row['ideal_rank']:>6} {tor}")

    _emit(payload, args.format, text)
    return 0


def _cmd_verify(args) -> int:
    name, matroid = _resolve_matroid(args.matroid)
    report = verify_matroid(
        matroid,
        name,
        lemmas=args.lemmas,
        oracle=args.oracle,
        max_oracle_size=args.max_oracle_size,
        seed=args.seed,
    )
    payload = report.to_dict()

    def text(p):
        print(f"verification of {p['matroid']} "
              f"(artifact {p['artifact_version']}, schema {p['schema_version']})")
        for check in p["checks"]:
            mark = {"pass": "ok", "fail": "FAIL", "skipped": "skip"}[check["status"]]
            line = f"  [{mark:4}] {check['check_id']} ({check['seconds']:.3f}s)"
            if check["status"] == "fail" and "witness" in check["details"]:
                line += f" witness: {check['details']['witness']}"
            if check["status"] == "skipped":
                line += f" ({check['details'].get('reason', '')})"
            print(line)
        print(f"result: {p['status']} in {p['total_seconds']:.3f}s")

    _emit(payload, args.format, text)
    return 0 if report.passed else 1


def _cmd_fan(args) -> int:
    fan = load_fan_file(args.path)
    stats = fan_statistics(fan)
    degrees = []
    for k in range(fan.max_dim() + 1):
        degrees.append({"degree": k, "fk_rank": fk_lattice(fan, k).rank})
    try:
        balanced = check_balanced(fan)
    except NotPure:
        balanced = None
    payload = {
        "fan": stats,
        "degrees": degrees,
        "ideal_property": check_ideal_property(fan),
        "balanced": balanced,
    }

    def text(p):
        st = p["fan"]
        print(f"fan in Z^{st['ambient_rank']}: rays {st['rays']},"
              f" cones per dim {st['cones_per_dim']}")
        for row in p["degrees"]:
            print(f"  F_{row['degree']} rank {row['fk_rank']}")
        print(f"annihilators form a graded ideal: {p['ideal_property']}")
        print("balanced:", "not pure" if p["balanced"] is None else p["balanced"])

    _emit(payload, args.format, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bergman-os",
        description="Exact verification of the Orlik-Solomon / Bergman fan "
                    "correspondence for matroids",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default text)")
    parser.add_argument("--max-oracle-size", type=int, default=None, metavar="N",
                        help=f"ground-size bound for brute-force oracles "
                             f"(default {ORACLE_SIZE_DEFAULT}, or ${ENV_MAX_ORACLE})")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized lemma tests (default 0)")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("fixtures", help="list builtin matroids")

    p_info = sub.add_parser("info", help="flats, circuits, and fan statistics")
    p_info.add_argument("matroid", help="fixture name or matroid JSON path")

    p_ranks = sub.add_parser("ranks", help="homology and Orlik-Solomon ranks per degree")
    p_ranks.add_argument("matroid", help="fixture name or matroid JSON path")

    p_verify = sub.add_parser("verify", help="run the verification battery")
    p_verify.add_argument("matroid", help="fixture name or matroid JSON path")
    p_verify.add_argument("--lemmas", action="store_true",
                          help="also run the lemma/property batteries")
    p_verify.add_argument("--oracle", action="store_true",
                          help="cross-check the main theorem against the "
                               "brute-force ideal oracle")

    p_fan = sub.add_parser("fan", help="homology ranks of a general fan JSON file")
    p_fan.add_argument("path", help="fan JSON path")
    return parser


COMMANDS = {
    "fixtures": _cmd_fixtures,
    "info": _cmd_info,
    "ranks": _cmd_ranks,
    "verify": _cmd_verify,
    "fan": _cmd_fan,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.max_oracle_size is None:
            args.max_oracle_size = _default_oracle_size()
        return COMMANDS[args.command](args)
    except (ValueError, KeyError, LoopDetected, CircuitAxiomViolation, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

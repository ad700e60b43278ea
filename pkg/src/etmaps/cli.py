"""Command-line entry point: ``etmaps classify | search | verify-table | count``.

Every command prints a plain-text report; ``--json PATH`` (``-`` for stdout)
also writes a machine-readable document carrying the tool version, the seed
and sha256 digests of the inputs.

Exit codes: 0 success, 1 internal error, 2 invalid input, 3 domain refusal
(e.g. a map that is not edge-transitive), 4 a verify-table verdict that
contradicts the expected table.
"""

from __future__ import annotations

import argparse
import hashlib
import itertools
import json
import sys
import time
from pathlib import Path

from . import __version__

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT, EXIT_REFUSED, EXIT_CONTRADICTION = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _digest_file(path):
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _emit(doc, target):
    if not target:
        return
    text = json.dumps(doc, indent=1, default=str) + "\n"
    if target == "-":
        sys.stdout.write(text)
    else:
        Path(target).write_text(text)


def _load_group(spec):
    """A group from a JSON file (``degree`` + ``generators``) or a roster name."""
    from .groupzoo import group_by_name
    from .permcore import group_from_dict

    path = Path(spec)
    if path.suffix == ".json" or path.is_file():
        if not path.is_file():
            raise CliError(f"group file {spec} not found", EXIT_INPUT)
        G = group_from_dict(json.loads(path.read_text()))
        if G.name is None:
            G.name = path.stem
        return G, {"group_file": _digest_file(path)}
    from .search import group_digest

    G = group_by_name(spec)
    if G.name is None:
        G.name = spec
    return G, {"group": group_digest(G)}


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_classify(args):
    from .etclass import NotEdgeTransitive, classify
    from .flagmap import load_map

    M = load_map(args.mapfile)
    v, e, f = M.cells.counts()
    chi = M.euler_characteristic()
    try:
        T = classify(M)
    except NotEdgeTransitive as exc:
        raise CliError(f"{args.mapfile}: {exc}", EXIT_REFUSED) from None
    doc = {
        "tool": "etmaps", "version": __version__, "command": "classify",
        "digests": {"map": _digest_file(args.mapfile)},
        "class": str(T), "vertices": v, "edges": e, "faces": f, "euler_characteristic": chi,
        "orientable": M.is_orientable(), "boundary": M.has_boundary(),
        "automorphism_order": M.automorphism_order(), "flags": M.flag_count,
    }
    print(f"class {T}")
    print(f"V={v} E={e} F={f} chi={chi} orientable={'yes' if doc['orientable'] else 'no'} "
          f"boundary={'yes' if doc['boundary'] else 'no'} |Aut|={doc['automorphism_order']}")
    _emit(doc, args.json)
    return EXIT_OK


def cmd_search(args):
    from .etclass import EtClass
    from .parent import save_tuple
    from .search import search_class_tuples

    G, digests = _load_group(args.group)
    T = EtClass.parse(args.cls)
    if args.exhaustive:
        res = search_class_tuples(G, T, "exhaustive", max_witnesses=1, stop_at_first=not args.count and T != EtClass.ONE)
    else:
        res = search_class_tuples(G, T, "budgeted", seed=args.seed, limit=args.budget, stop_at_first=True)
    if res.witness is not None:
        verdict = "REALIZED"
    elif res.complete:
        verdict = "NOT_REALIZED"
    else:
        verdict = "UNDECIDED"
    line = verdict
    if res.complete and not (res.witness is not None and not args.count and T != EtClass.ONE):
        line += f", m={res.admissible_total}"
    print(f"{G.name} class {T}: {line}")
    print(f"mode={res.mode} visited={res.visited} generating={res.generating} "
          f"admissible={res.admissible} elapsed={res.elapsed:.2f}s")
    files = []
    if res.witness is not None:
        print("witness: " + "  ".join(f"{n}={g.to_cycle_string()}" for n, g in res.witness.named().items()))
        if args.out:
            out = Path(args.out)
            out.mkdir(parents=True, exist_ok=True)
            path = out / f"{G.name}_{T.name.lower()}.json"
            save_tuple(res.witness, path, group_name=G.name)
            files.append(str(path))
            print(f"wrote {path}")
    doc = {"tool": "etmaps", "version": __version__, "command": "search", "seed": res.seed,
           "digests": digests, "verdict": verdict, "witness_files": files, **res.to_dict()}
    _emit(doc, args.json)
    return EXIT_OK


def cmd_verify_table(args):
    from .search import DEFAULT_ROSTER, EXTENDED_ROSTER, table_report, verify_table

    roster = DEFAULT_ROSTER if args.roster == "default" else EXTENDED_ROSTER
    if args.groups:
        roster = tuple(args.groups.split(","))
    t0 = time.perf_counter()
    verdicts = verify_table(roster, seed=args.seed, budget=args.budget, jobs=args.jobs,
                            roundtrip=not args.no_roundtrip)
    elapsed = time.perf_counter() - t0
    text, doc = table_report(verdicts, seed=args.seed, elapsed=elapsed)
    print(text)
    bad = [v for v in verdicts if not v.agrees]
    print(f"{len(verdicts)} cells, {len(bad)} contradictions, {elapsed:.1f}s")
    doc["command"] = "verify-table"
    _emit(doc, args.json)
    return EXIT_CONTRADICTION if bad else EXIT_OK


def cmd_count(args):
    from .chartab import brute_force_count, builtin_table, frobenius_count, load_character_table, match_classes

    tab = load_character_table(args.table) if args.table else builtin_table(args.group)
    if args.classes == "all":
        triples = list(itertools.product(tab.labels, repeat=3))
    else:
        parts = [p.strip() for p in args.classes.split(",")]
        if len(parts) != 3:
            raise CliError("--classes takes three labels A,B,C or 'all'", EXIT_INPUT)
        triples = [tuple(parts)]
    G = classes = None
    digests = {"table": hashlib.sha256(json.dumps(tab.to_dict(), sort_keys=True).encode()).hexdigest()}
    if args.oracle:
        G, gd = _load_group(args.group)
        digests.update(gd)
        classes = match_classes(tab, G)
    rows, disagree = [], 0
    for A, B, C in triples:
        n = frobenius_count(tab, A, B, C)
        row = {"classes": [A, B, C], "frobenius": n, "ratio_to_order": n / tab.order}
        msg = f"N({A},{B},{C}) = {n}"
        if args.oracle:
            b = brute_force_count(G, A, B, C, classes=classes)
            row["brute_force"] = b
            row["agrees"] = b == n
            disagree += b != n
            msg += f"  oracle={b} {'agrees' if b == n else 'DISAGREES'}"
        rows.append(row)
        print(msg)
    if args.oracle and len(triples) > 1:
        print(f"{len(triples)} triples, {disagree} disagreements")
    doc = {"tool": "etmaps", "version": __version__, "command": "count", "group": tab.group,
           "order": tab.order, "digests": digests, "counts": rows}
    _emit(doc, args.json)
    return EXIT_INTERNAL if disagree else EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="etmaps", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"etmaps {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify an edge-transitive map file")
    c.add_argument("mapfile")
    c.set_defaults(func=cmd_classify)

    s = sub.add_parser("search", help="search a group for generators of a class")
    s.add_argument("--group", required=True, help="roster name (A6, psl2_11, U3_3, ...) or group JSON file")
    s.add_argument("--class", dest="cls", required=True)
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--budget", type=int, default=None)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", action="store_true", help="exhaustive: run to completion and report m")
    s.add_argument("--out", help="directory for witness tuple files")
    s.set_defaults(func=cmd_search)

    v = sub.add_parser("verify-table", help="run the full group x class grid")
    v.add_argument("--roster", choices=("default", "extended"), default="default")
    v.add_argument("--groups", help="comma-separated roster override")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--budget", type=int, default=None)
    v.add_argument("--no-roundtrip", action="store_true")
    v.set_defaults(func=cmd_verify_table)

    n = sub.add_parser("count", help="Frobenius structure constants")
    n.add_argument("--group", required=True)
    n.add_argument("--classes", required=True, help="A,B,C or 'all'")
    n.add_argument("--table", help="character table JSON (default: built-in table for --group)")
    n.add_argument("--oracle", action="store_true", help="compare with a brute-force count")
    n.set_defaults(func=cmd_count)

    for sp in (c, s, v, n):
        sp.add_argument("--json", help="write the JSON report here ('-' for stdout)")
    return p


def _input_errors():
    from .chartab import CharacterTableError
    from .flagmap import MapError
    from .parent import TupleError
    from .permcore import GroupError

    return (MapError, TupleError, GroupError, CharacterTableError, json.JSONDecodeError, KeyError, OSError, ValueError)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    from .search import DEFAULT_BUDGET, InfeasibleSearch, SearchError
    from .permcore import BoundExceeded

    if getattr(args, "budget", 0) is None:
        args.budget = DEFAULT_BUDGET
    try:
        return args.func(args)
    except CliError as exc:
        print(f"etmaps: {exc}", file=sys.stderr)
        return exc.code
    except (InfeasibleSearch, BoundExceeded) as exc:
        print(f"etmaps: refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except SearchError as exc:
        print(f"etmaps: refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except _input_errors() as exc:
        rel = getattr(exc, "relation", None)
        print(f"etmaps: invalid input: {exc}" + (f" (relation {rel})" if rel else ""), file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # pragma: no cover
        print(f"etmaps: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

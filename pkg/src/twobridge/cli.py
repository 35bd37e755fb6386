"""Command-line front end.

Results go to stdout, diagnostics to stderr.  Exit codes: 0 on success,
1 when a verification or equivalence check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arith import (INFINITY, crossing_number, enumerate_links, make_link,
                    rolfsen_name)
from .diagram import Diagrams, minimal_paths
from .slopes import (m_form, m_form_edgewise, s_form_symbolic, slope_families)
from .tables import emit, verify_corpus


def _parse_pq(text: str):
    try:
        p_str, q_str = text.split("/")
        return make_link(int(p_str), int(q_str))
    except ValueError as exc:
        raise UsageError(str(exc))


class UsageError(Exception):
    pass


def _cmd_slopes(args) -> int:
    link = _parse_pq(args.pq)
    result = slope_families(link)
    for note in result.diagnostics:
        print(f"{link}: {note}", file=sys.stderr)
    sys.stdout.write(emit([result], args.format).decode())
    return 0


def _cmd_enumerate(args) -> int:
    links = enumerate_links(args.max_crossings, args.identify_mirrors)
    for link in links:
        name = rolfsen_name(link)
        print(f"{link}\t{crossing_number(link)}\t{name or '-'}")
    return 0


def _cmd_table(args) -> int:
    results = []
    for link in enumerate_links(args.max_crossings, True):
        result = slope_families(link)
        for note in result.diagnostics:
            print(f"{link}: {note}", file=sys.stderr)
        results.append(result)
    sys.stdout.write(emit(results, args.format).decode())
    return 0


def _cmd_verify(args) -> int:
    report = verify_corpus(args.max_crossings)
    for link, status, missing, extra in report.entries:
        if status != "match":
            print(f"{link}: {status}", file=sys.stderr)
            for key in sorted(missing):
                print(f"  expected but not computed: {key}", file=sys.stderr)
            for key in sorted(extra):
                print(f"  computed but not expected: {key}", file=sys.stderr)
    print(report.summary())
    return 0 if report.ok else 1


def _cmd_paths(args) -> int:
    link = _parse_pq(args.pq)
    diagrams = Diagrams(link)
    cx = diagrams.get({"dt": "Dt", "d1": "D1", "d0": "D0"}[args.diagram])
    paths = minimal_paths(cx, INFINITY, link.fraction())
    if args.format == "json":
        payload = {
            "link": {"p": link.p, "q": link.q},
            "diagram": cx.kind,
            "vertices": [str(v) for v in cx.vertices()],
            "edges": [{"type": e.etype, "tail": str(e.tail),
                       "head": str(e.head), "matrix": str(e.g)}
                      for e in cx.edges],
            "paths": [{"vertices": [str(v) for v in p.vertices()],
                       "edges": [f"{s.edge.etype}{'+' if s.sign > 0 else '-'}"
                                 for s in p.steps]}
                      for p in paths],
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"{len(paths)} minimal paths in {cx.kind} "
              f"from 1/0 to {link.fraction()}")
        for p in paths:
            print(f"  {p}")
    return 0


def _cmd_oracle_check(args) -> int:
    bad = 0
    links = enumerate_links(args.max_crossings, True)
    n_paths = 0
    for link in links:
        diagrams = Diagrams(link)
        target = link.fraction()
        for path in minimal_paths(diagrams.dt, INFINITY, target):
            n_paths += 1
            push, track = m_form(path), m_form_edgewise(path)
            if push != track:
                bad += 1
                print(f"{link}: {path}: {push} != {track}", file=sys.stderr)
        for path in minimal_paths(diagrams.d1, INFINITY, target):
            if "C" not in path.edge_types():
                continue
            n_paths += 1
            push, track = s_form_symbolic(path), m_form_edgewise(path)
            if push != track:
                bad += 1
                print(f"{link}: {path}: {push} != {track}", file=sys.stderr)
    print(f"checked {len(links)} links, {n_paths} paths: "
          f"{'all agree' if bad == 0 else f'{bad} disagreements'}")
    return 0 if bad == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twobridge",
        description="Boundary slopes of 2-bridge links, in exact arithmetic.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("slopes", help="slope families of one link")
    p.add_argument("--pq", required=True, metavar="P/Q")
    p.add_argument("--format", default="text",
                   choices=["text", "json", "csv", "tex"])
    p.set_defaults(func=_cmd_slopes)

    p = sub.add_parser("enumerate", help="list link types by crossing number")
    p.add_argument("--max-crossings", type=int, required=True)
    p.add_argument("--identify-mirrors", action=argparse.BooleanOptionalAction,
                   default=True)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("table", help="slope tables for all links up to a bound")
    p.add_argument("--max-crossings", type=int, required=True)
    p.add_argument("--format", default="text",
                   choices=["text", "json", "csv", "tex"])
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="check computed slopes against the "
                                      "embedded reference tables")
    p.add_argument("--max-crossings", type=int, default=10)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("paths", help="dump minimal edge paths")
    p.add_argument("--pq", required=True, metavar="P/Q")
    p.add_argument("--diagram", default="dt", choices=["dt", "d0", "d1"])
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(func=_cmd_paths)

    p = sub.add_parser("oracle-check", help="compare the two independent "
                                            "slope computations path by path")
    p.add_argument("--max-crossings", type=int, default=10)
    p.set_defaults(func=_cmd_oracle_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

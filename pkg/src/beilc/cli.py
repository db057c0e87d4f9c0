"""Command-line front end.

The input file gives a graph G (edge-list or graph6); the object analyzed is
the binomial edge ideal of the COMPLEMENT of G, matching the orientation of
the closed forms (feed the girth-5 graph, read off the complement's ideal).
`--complement` on `poset`/`cutsets` complements the input first, so those
commands can also target the input's own ideal.  Exit codes: 0 success,
1 input/precondition error, 2 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from .graphs import (
    INFINITE_GIRTH,
    AssumptionError,
    ParseError,
    SubsetBoundError,
    complement,
    complement_cut_sets,
    core_subgraph,
    cut_sets,
    free_edges,
    girth,
    parse_graph,
    subset_limit,
)
from .ideals import associated_primes, build_poset
from .cohomology import decompose, report
from .girth5 import (
    GENERAL,
    INAPPLICABLE,
    classify,
    closed_form_decompose,
    closed_form_poset,
    closed_form_report,
    equivalence_audit,
    symbolic_tags,
    trivial_report,
)
from .topology import validate_char
from . import corpus

SCHEMA_VERSION = 1


def _read_input(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path, fmt):
    return parse_graph(_read_input(path), fmt)


def _girth_value(g):
    gi = girth(g)
    return "infinity" if gi == INFINITE_GIRTH else gi


def _input_echo(g):
    _, vh = core_subgraph(g)
    return {
        "n": g.n,
        "edges": [list(e) for e in sorted(g.edges)],
        "girth": _girth_value(g),
        "core_vertices": sorted(vh),
        "free_edges": [sorted(e) for e in sorted(free_edges(g), key=sorted)],
    }


def _report_payload(rep, char):
    unknown = "unknown"
    return {
        "depth": rep.depth,
        "dimension": rep.dimension,
        "cohen_macaulay": rep.cohen_macaulay,
        "regularity": rep.regularity,
        "cd": rep.cd if rep.cd is not None else unknown,
        "ara_bounds": list(rep.ara_bounds) if rep.ara_bounds is not None else unknown,
        "characteristic": char,
    }


def _decomposition_payload(dec, labels):
    out = {}
    for r in dec.nonzero_degrees():
        out[str(r)] = [
            {
                "label": labels.get(s.prime, s.prime.describe()),
                "killed": sorted(s.prime.killed),
                "blocks": [sorted(b) for b in s.prime.blocks],
                "summand_degree": s.local_degree,
                "multiplicity": s.multiplicity,
            }
            for s in dec.summands[r]
        ]
    return out


def _poset_payload(poset, labels):
    kinds = {}
    for q in poset.elements:
        tag = labels.get(q, q.describe())
        kind = tag.split("_")[0] if tag in labels.values() else "generic"
        kinds[kind] = kinds.get(kind, 0) + 1
    return {"elements": len(poset), "with_top": len(poset) + 1, "kinds": kinds}


def _print_report(payload, fmt, out=None):
    out = out if out is not None else sys.stdout
    if fmt == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
        return
    echo = payload["input"]
    out.write(
        f"input: n={echo['n']}, {len(echo['edges'])} edges, girth {echo['girth']}\n"
    )
    out.write("core vertices: " + (" ".join(map(str, echo["core_vertices"])) or "-") + "\n")
    out.write(
        "free edges: "
        + (" ".join("{%s}" % ",".join(map(str, e)) for e in echo["free_edges"]) or "-")
        + "\n"
    )
    out.write(f"classification: {payload['classification']}\n")
    out.write(f"engine: {payload['engine']}\n")
    if "poset" in payload:
        p = payload["poset"]
        out.write(f"poset: {p['elements']} elements (+ top)\n")
    if "decomposition" in payload:
        out.write("decomposition:\n")
        for r, summands in payload["decomposition"].items():
            terms = " + ".join(
                f"{s['label']} (H^{s['summand_degree']}"
                + (f" x{s['multiplicity']}" if s["multiplicity"] > 1 else "")
                + ")"
                for s in summands
            )
            out.write(f"  H^{r}: {terms}\n")
    rep = payload["report"]
    ara = rep["ara_bounds"]
    ara_text = f"[{ara[0]},{ara[1]}]" if isinstance(ara, list) else ara
    out.write(
        f"report: depth={rep['depth']} dimension={rep['dimension']} "
        f"cohen_macaulay={'yes' if rep['cohen_macaulay'] else 'no'} "
        f"regularity={rep['regularity']} cd={rep['cd']} ara={ara_text}\n"
    )
    if "verdict" in payload:
        out.write(f"verdict: {payload['verdict']}\n")
        for line in payload.get("verdict_details", []):
            out.write(f"  {line}\n")


def cmd_analyze(args):
    g = _load_graph(args.path, args.input_format)
    validate_char(args.char)
    c = classify(g)
    payload = {
        "schema": SCHEMA_VERSION,
        "input": _input_echo(g),
        "classification": c.classification,
        "characteristic": args.char,
        "engine": args.engine,
        "subject": "complement",
    }
    exit_code = 0
    if args.engine == "closed":
        if c.classification == INAPPLICABLE:
            raise AssumptionError(
                f"girth {_girth_value(g)} < 5: the closed engine needs girth >= 5 "
                "(use --engine generic)"
            )
        if c.classification == GENERAL:
            poset = closed_form_poset(c)
            labels = symbolic_tags(c)
            dec = closed_form_decompose(c, args.char)
            rep = closed_form_report(c, args.char)
            payload["poset"] = _poset_payload(poset, labels)
            payload["decomposition"] = _decomposition_payload(dec, labels)
        else:
            rep = trivial_report(c)
        payload["report"] = _report_payload(rep, args.char)
    elif args.engine == "generic":
        target = complement(g)
        poset = build_poset(associated_primes(target))
        dec = decompose(target, args.char, poset=poset)
        rep = report(dec)
        labels = symbolic_tags(c) if c.classification == GENERAL else {}
        payload["poset"] = _poset_payload(poset, labels)
        payload["decomposition"] = _decomposition_payload(dec, labels)
        payload["report"] = _report_payload(rep, args.char)
    else:  # verify
        audit = equivalence_audit(c, chars=(args.char,))
        verdict = audit.verdicts[0]
        labels = symbolic_tags(c)
        poset = closed_form_poset(c)
        dec = closed_form_decompose(c, args.char)
        payload["poset"] = _poset_payload(poset, labels)
        payload["decomposition"] = _decomposition_payload(dec, labels)
        payload["report"] = _report_payload(closed_form_report(c, args.char), args.char)
        payload["verdict"] = "match" if verdict.match else "mismatch"
        payload["verdict_details"] = list(verdict.details)
        if not verdict.match:
            exit_code = 2
    _print_report(payload, args.format)
    return exit_code


def _dot_text(poset, labels):
    names = {q: labels.get(q, q.describe()) for q in poset.elements}
    lines = ["digraph poset {", "  rankdir=BT;"]
    for q in poset.elements:
        lines.append(f'  "{names[q]}";')
    lines.append('  "TOP";')
    edges = []
    for lower, upper in poset.cover_relations():
        uname = "TOP" if upper == "TOP" else names[upper]
        edges.append(f'  "{names[lower]}" -> "{uname}";')
    lines.extend(sorted(edges))
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_poset(args):
    g = _load_graph(args.path, args.input_format)
    if args.complement:
        g = complement(g)
    c = classify(g)
    if c.classification == GENERAL:
        poset = closed_form_poset(c)
        labels = symbolic_tags(c)
    else:
        poset = build_poset(associated_primes(complement(g)))
        labels = {}
    text = _dot_text(poset, labels)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_cutsets(args):
    g = _load_graph(args.path, args.input_format)
    if args.engine == "girth5":
        if not args.complement:
            raise AssumptionError(
                "--engine girth5 computes cut sets of the complement; pass --complement"
            )
        sets = complement_cut_sets(g)
        target_n = g.n
    else:
        target = complement(g) if args.complement else g
        sets = cut_sets(target)
        target_n = target.n
    payload = {
        "schema": SCHEMA_VERSION,
        "n": target_n,
        "of_complement": bool(args.complement),
        "cut_sets": [
            {"vertices": sorted(s.vertices), "components": s.component_count}
            for s in sets
        ],
    }
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for s in sets:
            vs = ",".join(map(str, sorted(s.vertices))) or "-"
            print(f"{{{vs}}} components={s.component_count}")
        print(f"total: {len(sets)} cut sets")
    return 0


def cmd_sweep(args):
    limit = subset_limit()
    if args.nmax > limit:
        print(
            f"error: --nmax {args.nmax} exceeds the enumeration bound n <= {limit}",
            file=sys.stderr,
        )
        return 1
    if args.nmax < 4:
        print("error: --nmax must be at least 4", file=sys.stderr)
        return 1
    chars = tuple(int(c) for c in args.char.split(","))
    for ch in chars:
        validate_char(ch)
    if args.random:
        count_s, seed_s = args.random.split(",")
        result = corpus.sweep(
            nmin=4,
            nmax=args.nmax,
            mode="random",
            count=int(count_s),
            seed=int(seed_s),
            chars=chars,
        )
    else:
        result = corpus.sweep(nmin=4, nmax=args.nmax, mode="exhaustive", chars=chars)
    by_n = {}
    for r in result.records:
        by_n.setdefault(r.n, []).append(r)
    for n in sorted(result.checked_by_n):
        rs = by_n.get(n, [])
        bad = sum(1 for r in rs if not r.match)
        print(f"n={n}: verified {len(rs)} graphs, mismatches {bad}")
    total_bad = len(result.failures)
    print(
        f"TOTAL: verified {result.total} graphs "
        f"(chars {','.join(map(str, chars))}), mismatches {total_bad}"
    )
    if total_bad:
        first = result.failures[0]
        print(f"first mismatch: n={first.n} graph6={first.graph6}")
        for line in first.details[:10]:
            print(f"  {line}")
        return 2
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="beilc",
        description=(
            "Local cohomology of the binomial edge ideal of a graph complement: "
            "decomposition, depth, dimension, regularity, and char-p invariants."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "path", help="input graph file (edge-list or graph6), or '-' for stdin"
    )
    common.add_argument(
        "--input-format",
        choices=["auto", "edge-list", "graph6"],
        default="auto",
        help="input encoding (default: auto-detect)",
    )

    p = sub.add_parser("analyze", parents=[common], help="full homological report")
    p.add_argument("--char", type=int, default=0, help="field characteristic (0 or prime)")
    p.add_argument(
        "--engine",
        choices=["closed", "generic", "verify"],
        default="closed",
        help="closed forms, generic poset engine, or both with comparison",
    )
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("poset", parents=[common], help="Hasse diagram in DOT format")
    p.add_argument("--dot", metavar="OUT", help="write DOT to this file instead of stdout")
    p.add_argument(
        "--complement",
        action="store_true",
        help="complement the input first (targets the input's own ideal)",
    )
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("cutsets", parents=[common], help="cut sets of the input graph")
    p.add_argument(
        "--complement", action="store_true", help="cut sets of the complement instead"
    )
    p.add_argument(
        "--engine",
        choices=["brute", "girth5"],
        default="brute",
        help="brute-force enumeration or the girth-5 closed form (needs --complement)",
    )
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.set_defaults(func=cmd_cutsets)

    p = sub.add_parser("sweep", help="verify closed forms against the generic engine")
    p.add_argument("--nmax", type=int, default=7)
    p.add_argument("--char", default="0,2", help="comma-separated characteristics")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--exhaustive", action="store_true", default=True)
    group.add_argument(
        "--random",
        metavar="COUNT,SEED",
        help="COUNT seeded random graphs per vertex count instead of exhaustion",
    )
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (AssumptionError, SubsetBoundError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line surface.

Subcommands: count, matching, free, construct, formula, search, verify,
report.  All numeric outputs are exact decimal strings; exit status is 0 for
any successful run (DISAGREE reports are data, not errors), 2 for usage
errors, 3 for malformed graph input, and 4 for cap or applicability
violations.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cache as cache_mod
from .constructions import (
    ApplicabilityError,
    NAMED_IDS,
    bipartite_clique_bounds,
    build_named,
    clique_vector_of_expr,
    expr_clique_count,
    hub_expr,
)
from .graphs import (
    Clique,
    ConstructionExpr,
    Cycle,
    Graph6Error,
    GraphLeaf,
    Independent,
    Join,
    Path,
    SizeLimitError,
    Turan,
    Union,
    build_graph,
    decode_graph6,
    encode_graph6,
)
from .harness import (
    check_alon_frankl,
    check_bipartite_bounds,
    check_even_path,
    check_hub_counterexample,
    check_lemma_suite,
    check_nonbipartite_hub,
    check_odd_path,
    check_vertex_clique_floor,
    inspect_structure,
)
from .matching import matching_number, maximum_matching_edges, tutte_berge_witness
from .search import ForbiddenSpec, ex_search, is_admissible

USAGE_ERROR = 2
INPUT_ERROR = 3
CAP_ERROR = 4


class InputError(ValueError):
    pass


# --- shorthand grammar -------------------------------------------------------------

def parse_expr(text: str) -> ConstructionExpr:
    """K5 | I3 | P4 | C6 | T2(5) | g6:<string> | join(...) | union(...)."""
    expr, rest = _parse_one(text.strip())
    if rest.strip():
        raise InputError(f"trailing input after expression: {rest!r}")
    return expr


def _parse_one(text: str) -> tuple[ConstructionExpr, str]:
    text = text.lstrip()
    if not text:
        raise InputError("empty expression")
    lower = text.lower()
    if lower.startswith("g6:"):
        body = text[3:]
        end = 0
        while end < len(body) and body[end] not in ",()":
            end += 1
        return GraphLeaf(decode_graph6(body[:end])), body[end:]
    for name, ctor in (("join", Join), ("union", Union)):
        if lower.startswith(name + "("):
            rest = text[len(name) + 1:]
            parts = []
            while True:
                part, rest = _parse_one(rest)
                parts.append(part)
                rest = rest.lstrip()
                if rest.startswith(","):
                    rest = rest[1:]
                    continue
                if rest.startswith(")"):
                    return ctor(tuple(parts)), rest[1:]
                raise InputError(f"expected ',' or ')' in {name}(...)")
    head = text[0].upper()
    if head == "T":
        k, rest = _read_int(text[1:])
        rest = rest.lstrip()
        if not rest.startswith("("):
            raise InputError("Turan shorthand is T<k>(<n>)")
        m, rest = _read_int(rest[1:])
        if not rest.startswith(")"):
            raise InputError("Turan shorthand is T<k>(<n>)")
        return Turan(k, m), rest[1:]
    ctor = {"K": Clique, "I": Independent, "P": Path, "C": Cycle}.get(head)
    if ctor is None:
        raise InputError(f"unrecognized expression near {text!r}")
    m, rest = _read_int(text[1:])
    return ctor(m), rest


def _read_int(text: str) -> tuple[int, str]:
    end = 0
    while end < len(text) and text[end].isdigit():
        end += 1
    if end == 0:
        raise InputError(f"expected a number near {text!r}")
    return int(text[:end]), text[end:]


def parse_forbid_list(items: list[str], s_flag: int | None) -> ForbiddenSpec:
    """Graph shorthands plus M<k> sugar, which forbids a k-matching (s=k-1)."""
    graphs = []
    bound = s_flag
    for item in items or []:
        stripped = item.strip()
        if stripped and stripped[0].upper() == "M" and stripped[1:].isdigit():
            k = int(stripped[1:])
            if k < 1:
                raise InputError("matching shorthand needs M1 or larger")
            sugar = k - 1
            bound = sugar if bound is None else min(bound, sugar)
            continue
        graphs.append(build_graph(parse_expr(stripped)))
    return ForbiddenSpec(tuple(graphs), bound)


def parse_n_list(text: str) -> list[int]:
    """"7", "5,6,8", or "5..8"."""
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(part) for part in text.split(",") if part.strip()]


# --- subcommands -------------------------------------------------------------------

def _graph_arg(args) -> tuple[ConstructionExpr, "object"]:
    expr = parse_expr(args.graph)
    return expr, build_graph(expr)


def cmd_count(args) -> int:
    # closed-form evaluation; never materializes the expression
    expr = parse_expr(args.graph)
    from .graphs import expr_order

    rmax = args.rmax if args.rmax is not None else min(expr_order(expr), 6)
    vec = clique_vector_of_expr(expr, rmax)
    for r, value in enumerate(vec.counts):
        print(f"N(K_{r})={value}")
    return 0


def cmd_matching(args) -> int:
    _, g = _graph_arg(args)
    print(f"nu={matching_number(g)}")
    if args.witness:
        try:
            witness = tutte_berge_witness(g)
        except SizeLimitError as exc:
            print(f"witness unavailable: {exc}")
        else:
            inside = ",".join(str(v) for v in witness.vertices)
            print(f"witness B={{{inside}}} value={witness.value}")
        pairs = " ".join(f"{u}-{v}" for u, v in maximum_matching_edges(g))
        print(f"matching {pairs}" if pairs else "matching (empty)")
    return 0


def cmd_free(args) -> int:
    _, g = _graph_arg(args)
    spec = parse_forbid_list(args.forbid, args.s)
    verdict = is_admissible(g, spec)
    reasons = []
    if not verdict:
        from .subgraphs import contains

        for h in spec.subgraphs:
            if contains(g, h):
                reasons.append(f"contains {encode_graph6(h)}")
        if spec.matching_bound is not None and matching_number(g) > spec.matching_bound:
            reasons.append(f"nu={matching_number(g)} exceeds s={spec.matching_bound}")
    print("admissible" if verdict else "inadmissible: " + "; ".join(reasons))
    return 0


def cmd_construct(args) -> int:
    expr = build_named(args.id, args.p, args.s, args.n)
    g = build_graph(expr)
    print(encode_graph6(g))
    rmax = args.rmax if args.rmax is not None else 2 * args.p + 2
    vec = clique_vector_of_expr(expr, rmax)
    print("clique-vector " + ",".join(str(c) for c in vec.counts))
    if args.r is not None:
        print(f"N(K_{args.r})={expr_clique_count(expr, args.r)}")
    return 0


def cmd_formula(args) -> int:
    if args.formula == "alon-frankl":
        turan_small = expr_clique_count(Turan(args.k, 2 * args.s + 1), 2)
        hub_edges = expr_clique_count(Turan(args.k - 1, args.s), 2)
        for n in parse_n_list(args.n):
            print(f"n={n} value={max(turan_small, hub_edges + args.s * (n - args.s))}")
    elif args.formula in ("even-path", "odd-path"):
        ids = ("G1", "G2") if args.formula == "even-path" else ("G3", "G4", "G5", "G6")
        for n in parse_n_list(args.n):
            best = None
            parts = []
            for id in ids:
                try:
                    value = expr_clique_count(build_named(id, args.p, args.s, n), args.r)
                except ApplicabilityError:
                    parts.append(f"{id}=n/a")
                    continue
                parts.append(f"{id}={value}")
                best = value if best is None else max(best, value)
            print(f"n={n} max={'undefined' if best is None else best} ({' '.join(parts)})")
    elif args.formula == "bipartite-bounds":
        for n in parse_n_list(args.n):
            lower, upper = bipartite_clique_bounds(args.p, args.q, args.s, args.r, n)
            print(f"n={n} lower={lower} upper={upper}")
    elif args.formula == "hub-gap":
        s = args.k * (2 * args.p - 1) + 1
        hub = build_graph(Union(tuple([Clique(2 * args.p - 1)] * args.k)))
        hub_iso = build_graph(Union(tuple([Clique(2 * args.p - 1)] * args.k + [Clique(1)])))
        for n in parse_n_list(args.n):
            left = expr_clique_count(hub_expr(hub, n - s + 1), args.r)
            right = expr_clique_count(hub_expr(hub_iso, n - s), args.r)
            print(f"n={n} packed={left} with-isolated={right} gap={left - right}")
    return 0


def cmd_search(args) -> int:
    spec = parse_forbid_list(args.forbid, args.s)

    def run() -> dict:
        record = ex_search(
            args.n,
            args.r,
            spec,
            cap=args.cap,
            workers=args.workers,
            split_depth=args.split_depth,
            upper_bound_pruning=args.ub_prune,
        )
        return record.to_json_dict()

    if args.no_cache:
        payload, hit = run(), False
    else:
        path = args.cache or cache_mod.default_cache_path()
        key = cache_mod.search_key(args.n, args.r, spec.sorted_graph6(), spec.matching_bound)
        payload, hit = cache_mod.lookup_or_compute(path, key, run)
    if args.json:
        print(json.dumps(payload))
        return 0
    print(f"value {payload['value']}" + (" (cached)" if hit else ""))
    for line in payload["witnesses"]:
        print(f"witness {line}")
    print(f"nodes {payload['nodes']}")
    return 0


def _require(args, names: list[str]) -> None:
    missing = [
        name for name in names
        if getattr(args, name.replace("-", "_")) in (None, "", [])
    ]
    if missing:
        raise InputError(
            f"check {args.check_id!r} needs --" + ", --".join(missing)
        )


def _run_verify(args):
    check = args.check_id
    if check == "alon-frankl":
        _require(args, ["k", "s", "n"])
        return check_alon_frankl(args.k, args.s, parse_n_list(args.n), cap=args.cap)
    if check == "nonbipartite-hub":
        _require(args, ["forbid", "s", "n"])
        f = build_graph(parse_expr(args.forbid[0]))
        return check_nonbipartite_hub(f, args.r, args.s, parse_n_list(args.n), cap=args.cap)
    if check == "hub-counterexample":
        _require(args, ["p", "k", "n"])
        return check_hub_counterexample(args.p, args.k, parse_n_list(args.n), r=args.r)
    if check == "even-path":
        _require(args, ["p", "s", "n"])
        return check_even_path(args.p, args.s, args.r, parse_n_list(args.n), cap=args.cap)
    if check == "odd-path":
        _require(args, ["p", "s", "n"])
        return check_odd_path(args.p, args.s, args.r, parse_n_list(args.n), cap=args.cap)
    if check == "bipartite-bounds":
        _require(args, ["forbid", "s", "n"])
        f = build_graph(parse_expr(args.forbid[0]))
        return check_bipartite_bounds(f, args.s, args.r, parse_n_list(args.n), cap=args.cap)
    if check == "lemma-suite":
        return check_lemma_suite()
    if check == "vertex-clique-floor":
        _require(args, ["forbid", "n"])
        family = [build_graph(parse_expr(item)) for item in args.forbid]
        return check_vertex_clique_floor(family, args.r, parse_n_list(args.n), cap=args.cap)
    if check == "structure":
        _require(args, ["n-single", "s"])
        spec = parse_forbid_list(args.forbid, args.s)
        record = ex_search(args.n_single, args.r, spec, cap=args.cap)
        return inspect_structure(record, args.s, args.p)
    raise InputError(f"unknown check id {check!r}")


def cmd_verify(args) -> int:
    report = _run_verify(args)
    if isinstance(report.observed, dict):
        expected_map = report.expected if isinstance(report.expected, dict) else {}
        for key in report.observed:
            expected = expected_map.get(key, "-")
            line_status = report.status
            if report.status != "REPORT_ONLY":
                line_status = "AGREE" if expected == report.observed[key] else report.status
            label = f"n={key}" if key.isdigit() else key
            print(f"{report.check_id} {label} expected={expected} observed={report.observed[key]} {line_status}")
    print(f"status {report.status}")
    if report.notes:
        print(f"notes {report.notes}")
    for line in report.witnesses:
        print(f"witness {line}")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as handle:
            json.dump(report.to_json_dict(), handle)
            handle.write("\n")
    return 0


def cmd_report(args) -> int:
    checks = []
    for path in args.inputs:
        with open(path, "r", encoding="utf-8") as handle:
            checks.append(json.load(handle))
    manifest = {"checks": checks}
    if args.json:
        with open(args.json, "w", encoding="utf-8") as handle:
            json.dump(manifest, handle)
            handle.write("\n")
    rows = [("check_id", "n", "expected", "observed", "status")]
    for check in checks:
        expected = check.get("expected")
        observed = check.get("observed")
        if isinstance(observed, dict) and isinstance(expected, dict):
            for key in observed:
                want = expected.get(key, "")
                status = check["status"]
                if status != "REPORT_ONLY" and want == observed[key]:
                    status = "AGREE"
                rows.append((check["check_id"], key, want, str(observed[key]), status))
        else:
            rows.append((check["check_id"], "", str(expected), str(observed), check["status"]))
    csv_text = "\n".join(",".join(_csv_cell(cell) for cell in row) for row in rows) + "\n"
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as handle:
            handle.write(csv_text)
    else:
        sys.stdout.write(csv_text)
    return 0


def _csv_cell(cell: str) -> str:
    text = str(cell)
    if "," in text or '"' in text:
        return '"' + text.replace('"', '""') + '"'
    return text


# --- wiring ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="turanmatch",
        description="Exact clique-maximization toolkit with bounded matching number.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="clique counts of a graph or expression")
    p.add_argument("--graph", required=True, help="expression or g6:<string>")
    p.add_argument("--rmax", type=int)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("matching", help="matching number and witnesses")
    p.add_argument("--graph", required=True)
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_matching)

    p = sub.add_parser("free", help="admissibility against a forbidden family")
    p.add_argument("--graph", required=True)
    p.add_argument("--forbid", action="append", default=[])
    p.add_argument("--s", type=int)
    p.set_defaults(func=cmd_free)

    p = sub.add_parser("construct", help="emit a packaged construction")
    p.add_argument("id", choices=NAMED_IDS)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--rmax", type=int)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("formula", help="closed-form evaluations")
    fsub = p.add_subparsers(dest="formula", required=True)
    f = fsub.add_parser("alon-frankl")
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--s", type=int, required=True)
    f.add_argument("--n", required=True)
    for name in ("even-path", "odd-path"):
        f = fsub.add_parser(name)
        f.add_argument("--p", type=int, required=True)
        f.add_argument("--s", type=int, required=True)
        f.add_argument("--r", type=int, required=True)
        f.add_argument("--n", required=True)
    f = fsub.add_parser("bipartite-bounds")
    f.add_argument("--p", type=int, required=True)
    f.add_argument("--q", type=int, required=True)
    f.add_argument("--s", type=int, required=True)
    f.add_argument("--r", type=int, required=True)
    f.add_argument("--n", required=True)
    f = fsub.add_parser("hub-gap")
    f.add_argument("--p", type=int, required=True)
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--r", type=int, default=3)
    f.add_argument("--n", required=True)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("search", help="exhaustive extremal search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--forbid", action="append", default=[])
    p.add_argument("--s", type=int)
    p.add_argument("--cap", type=int, default=9)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--split-depth", type=int)
    p.add_argument("--ub-prune", action="store_true")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--cache", help="cache file path (default: $TURANMATCH_CACHE)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="run a named claim check")
    p.add_argument(
        "check_id",
        choices=[
            "alon-frankl", "nonbipartite-hub", "hub-counterexample", "even-path",
            "odd-path", "bipartite-bounds", "lemma-suite", "vertex-clique-floor",
            "structure",
        ],
    )
    p.add_argument("--k", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--n", default="")
    p.add_argument("--n-single", type=int)
    p.add_argument("--forbid", action="append", default=[])
    p.add_argument("--cap", type=int, default=9)
    p.add_argument("--json", help="write the report JSON to this path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="aggregate check reports")
    p.add_argument("--inputs", nargs="+", required=True)
    p.add_argument("--json")
    p.add_argument("--csv")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, Graph6Error) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except (SizeLimitError, ApplicabilityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CAP_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())

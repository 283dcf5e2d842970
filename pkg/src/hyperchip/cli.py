"""Command-line interface: ``hyperchip <subcommand> [hypergraph.json] [options]``.

Enumerations print one JSON value per line in a fixed order.  Exit status is
0 on success, 1 on domain errors (bad input, failed audits, size guards) and
2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import counting, digraphs, firing, ideal, parking, trees
from .core import EdgeNode, HypergraphError, SizeGuardError, load_hypergraph


class CommandError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj)


def _parse_ints(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise CommandError(f"expected comma-separated integers, got {text!r}") from None


def _parse_beta(H, text):
    if text is None:
        return None
    out = []
    for token in text.split(","):
        token = token.strip()
        if token in H.index or token == H.sink:
            out.append(token)
        elif token[:1] == "e" and token[1:].isdigit() and 1 <= int(token[1:]) <= len(H.edges):
            out.append(EdgeNode(int(token[1:]) - 1))
        else:
            raise CommandError(f"unknown node {token!r} in --beta (use vertex labels and e1..e{len(H.edges)})")
    return out


def _config_labels(H, mask_set):
    return "{" + ",".join(str(v) for v in H.nonsink if v in mask_set) + "}"


def cmd_validate(args, out):
    H = load_hypergraph(args.hypergraph)
    info = {"vertices": len(H.vertices), "nonsink": H.n, "edges": len(H.edges), "sink": H.sink}
    if args.json:
        print(_dump(info), file=out)
    else:
        print(f"ok: {info['vertices']} vertices ({H.n} nonsink), {info['edges']} edges, sink {H.sink}", file=out)


def cmd_check(args, out):
    H = load_hypergraph(args.hypergraph)
    c = _parse_ints(args.config)
    ok = parking.is_parking_burn(H, c)
    bounded = [] if ok else parking.bounded_sets(H, c)
    if args.json:
        print(_dump({"config": list(c), "parking": ok,
                     "bounded": [[v for v in H.nonsink if v in T] for T in bounded]}), file=out)
    elif ok:
        print("parking function", file=out)
    else:
        print(f"not a parking function; bounded set {_config_labels(H, bounded[0])}", file=out)


def cmd_enumerate(args, out):
    H = load_hypergraph(args.hypergraph)
    for c in parking.enumerate_parking(H):
        print(_dump(list(c)), file=out)


def cmd_maximal(args, out):
    H = load_hypergraph(args.hypergraph)
    for c in parking.maximal_parking(H):
        print(_dump(list(c)), file=out)


def cmd_orientations(args, out):
    H = load_hypergraph(args.hypergraph)
    for o in parking.enumerate_acyclic_orientations(H):
        record = {
            "orientation": {str(EdgeNode(k)): v for k, v in enumerate(o)},
            "config": list(parking.orientation_to_config(H, o)),
        }
        print(_dump(record), file=out)


def cmd_trees(args, out):
    H = load_hypergraph(args.hypergraph)
    beta = _parse_beta(H, args.beta)
    for K in trees.tree_classes(H, max_size=args.max_size):
        print(_dump(K.to_json()), file=out)
        if args.dot:
            print(trees.tree_to_dot(H, trees.class_canonical_tree(H, K, beta)), file=out)


def cmd_bijection(args, out):
    H = load_hypergraph(args.hypergraph)
    beta = _parse_beta(H, args.beta)
    zeros = (0,) * len(H.edges)
    results = []
    seen = set()
    configs = parking.enumerate_parking(H)
    for c in configs:
        _, K = trees.parking_to_tree(H, c, beta)
        back = trees.tree_to_parking(H, trees.class_canonical_tree(H, K, beta), beta)
        ok = back.vertices == c and back.edges == zeros and K not in seen
        seen.add(K)
        results.append(ok)
        print(f"{'pass' if ok else 'FAIL'} {_dump(list(c))} {_dump(K.to_json()['lr'])}", file=out)
    if args.exhaustive:
        count = len(trees.tree_classes(H, max_size=args.max_size))
        ok = count == len(configs)
        results.append(ok)
        print(f"{'pass' if ok else 'FAIL'} classes={count} parking={len(configs)}", file=out)
    failures = results.count(False)
    print(f"{len(results) - failures} passed, {failures} failed", file=out)
    if failures:
        raise CommandError("bijection audit failed")


def _load_script(path):
    with open(path, encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise CommandError(f"firing script is not valid JSON: {exc}") from None


def _choice(H, raw):
    try:
        return {int(k): v for k, v in raw.items()}
    except (AttributeError, ValueError):
        raise CommandError(f"bad choice object {raw!r}; keys are edge indices") from None


def cmd_fire(args, out):
    H = load_hypergraph(args.hypergraph)
    c = _parse_ints(args.config)
    if len(c) != H.n:
        raise CommandError(f"--config has {len(c)} entries, expected {H.n}")
    script = _load_script(args.script)
    if not isinstance(script, list):
        raise CommandError("firing script must be a JSON array")
    print(_dump(list(c)), file=out)
    for step in script:
        if "vertex" in step:
            c = firing.fire_vertex(H, c, step["vertex"], _choice(H, step.get("choice", {})))
        elif "set" in step:
            choices = {v: _choice(H, raw) for v, raw in step["set"].items()}
            c = firing.fire_set(H, c, set(choices), choices)
        else:
            raise CommandError(f"script step needs 'vertex' or 'set': {step!r}")
        print(_dump(list(c)), file=out)


def cmd_cyclings(args, out):
    H = load_hypergraph(args.hypergraph)
    guard = args.max_size if args.max_size is not None else 8
    if args.cover:
        for order, C in digraphs.greedy_cycling_cover(H, max_vertices=guard):
            print(_dump({"order": list(order), "cycling": [list(c) for c in C.orders]}), file=out)
        return
    union = set()
    for order, C, configs in digraphs.cycling_parking_sets(H, sink_first=args.sink_first, max_vertices=guard):
        union.update(configs)
        record = {"order": list(order), "cycling": [list(c) for c in C.orders], "parking": [list(x) for x in configs]}
        print(_dump(record), file=out)
        if args.dot:
            print(digraphs.digraph_from_cycling(H, C).to_dot(), file=out)
    print(_dump({"union": [list(x) for x in sorted(union)]}), file=out)


def cmd_star(args, out):
    H = load_hypergraph(args.hypergraph)
    D = digraphs.star_digraph(H)
    L = digraphs.reduced_laplacian(D)
    record = {
        "digraph": D.to_json(),
        "rows": [str(x) for x in D.nonsink],
        "laplacian": digraphs.matrix_to_json(L),
        "determinant": str(digraphs.laplacian_determinant(L)),
    }
    print(_dump(record), file=out)
    if args.dot:
        print(D.to_dot("star"), file=out)


def _parse_complete(text):
    fields = {}
    for part in text.split(","):
        key, _, value = part.partition("=")
        if key.strip() not in ("n", "d") or not value.strip().isdigit():
            raise CommandError(f"--complete expects n=<int>,d=<int>, got {text!r}")
        fields[key.strip()] = int(value)
    if set(fields) != {"n", "d"}:
        raise CommandError(f"--complete expects n=<int>,d=<int>, got {text!r}")
    return fields["n"], fields["d"]


def cmd_count(args, out):
    if args.bipartite:
        m, n = _parse_ints(args.bipartite)
        print(counting.acyclic_count_complete_bipartite(m, n), file=out)
        return
    if args.complete:
        u = counting.u_vector_complete(*_parse_complete(args.complete))
    else:
        u = _parse_ints(args.u)
    print(counting.steck_count(u), file=out)


def cmd_ideal(args, out):
    H = load_hypergraph(args.hypergraph)
    gens = ideal.cut_ideal_generators(H)
    monos = list(gens.values()) if args.all else ideal.minimal_generators(gens.values())
    for g in monos:
        print(f"{ideal.format_monomial(g)}\t{_dump(list(g))}", file=out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperchip", description="Parking functions and chip-firing on hypergraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("hypergraph", help="JSON file with vertices, edges, sink")
        p.set_defaults(func=func)
        return p

    p = with_file("validate", cmd_validate, "validate a hypergraph file")
    p.add_argument("--json", action="store_true")

    p = with_file("check", cmd_check, "test whether a configuration is an H-parking function")
    p.add_argument("--config", required=True, help="comma-separated chips, e.g. 2,1,0")
    p.add_argument("--json", action="store_true")

    with_file("enumerate", cmd_enumerate, "list all H-parking functions")
    with_file("maximal", cmd_maximal, "list maximal H-parking functions")
    with_file("orientations", cmd_orientations, "list acyclic orientations with unique source at the sink")

    p = with_file("trees", cmd_trees, "list burning-equivalence classes of spanning trees")
    p.add_argument("--beta", help="total order on nodes, e.g. 4,3,2,1,e3,e2,e1")
    p.add_argument("--dot", action="store_true", help="also print canonical representatives as DOT")
    p.add_argument("--max-size", type=int, default=14)

    p = with_file("bijection", cmd_bijection, "audit the parking-function / tree-class bijection")
    p.add_argument("--beta")
    p.add_argument("--exhaustive", action="store_true", help="also count classes by enumerating all trees")
    p.add_argument("--max-size", type=int, default=14)

    p = with_file("fire", cmd_fire, "run a firing script")
    p.add_argument("--config", required=True)
    p.add_argument("--script", required=True, help="JSON array of firing steps")

    p = with_file("cyclings", cmd_cyclings, "parking sets of all vertex-induced cycling digraphs")
    p.add_argument("--sink-first", action="store_true", help="only orders that start at the sink")
    p.add_argument("--cover", action="store_true", help="print a greedy covering set of cyclings")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--max-size", type=int, default=None, help="vertex-count guard (default 8)")

    p = with_file("star", cmd_star, "digraph and Laplacian of a star hypergraph")
    p.add_argument("--dot", action="store_true")

    p = sub.add_parser("count", help="count u-parking functions or acyclic orientations")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--u", help="nondecreasing vector, e.g. 3,5,6,6")
    group.add_argument("--complete", help="complete hypergraph parameters, e.g. n=4,d=3")
    group.add_argument("--bipartite", help="m,n for acyclic orientations of K_{m,n}")
    p.set_defaults(func=cmd_count)

    p = with_file("ideal", cmd_ideal, "cut ideal generators")
    p.add_argument("--all", action="store_true", help="one generator per subset instead of minimal ones")

    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    buffer = []

    class _Collect:
        def write(self, text):
            buffer.append(text)

    try:
        args.func(args, _Collect())
    except SizeGuardError as exc:
        out.write("".join(buffer))
        print(f"hyperchip: {exc}; use --max-size to change the guard", file=sys.stderr)
        return 1
    except (CommandError, HypergraphError, ValueError, OSError) as exc:
        out.write("".join(buffer))
        print(f"hyperchip: {exc}", file=sys.stderr)
        return 1
    out.write("".join(buffer))
    return 0


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()

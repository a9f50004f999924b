"""covex-kl: compute covexillary Kazhdan-Lusztig polynomials.

Subcommands: compute (any or all methods for one input), oracle (the
classical recursion for an arbitrary pair), crosscheck (exhaustive
three-way agreement sweep), tree (DOT export of the labelled tree).

Exit codes: 0 success, 2 invalid input, 3 method mismatch, 4 budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import search, weyl
from .capacity_tree import kl_via_trees, tree_pipeline, tree_to_dot
from .errors import BudgetExceededError, CovexError, InvalidTripleError
from .inductive import kl_via_inductive_pair
from .oracle import kl_oracle, resolve_budget
from .polyq import QPoly
from .triples import Triple, validate_triple, vexillary_from_triple
from .weyl import WeylElement, compose, longest_element, parse_window

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_MISMATCH = 3
EXIT_BUDGET = 4


def parse_triple_text(text: str, lie_type: str, n: int) -> Triple:
    """Parse the ``k=1,3 p=3,4 q=2,5`` mini-language (';' also separates)."""
    fields = {}
    for chunk in text.replace(";", " ").split():
        if "=" not in chunk:
            raise InvalidTripleError([f"cannot parse triple fragment {chunk!r}"])
        name, _, body = chunk.partition("=")
        name = name.strip().lower()
        if name not in ("k", "p", "q"):
            raise InvalidTripleError([f"unknown triple field {name!r}"])
        fields[name] = tuple(int(x) for x in body.replace(",", " ").split())
    missing = {"k", "p", "q"} - set(fields)
    if missing:
        raise InvalidTripleError([f"triple is missing fields {sorted(missing)}"])
    return Triple(lie_type, n, fields["k"], fields["p"], fields["q"])


def _window_element(lie_type: str, n: int, text: str) -> WeylElement:
    return WeylElement.ambient(lie_type, n, parse_window(text))


def _load_request(args):
    if args.input:
        with open(args.input) as fh:
            data = json.load(fh)
        lie_type = data["type"]
        n = int(data["n"])
        t = Triple(lie_type, n, data["k"], data["p"], data["q"])
        v_text = data.get("v")
        v = (WeylElement.ambient(lie_type, n, v_text) if v_text is not None
             else None)
        return t, v
    if not (args.type and args.n and args.triple):
        raise InvalidTripleError(
            ["--type, --n and --triple are required without --input"])
    t = parse_triple_text(args.triple, args.type, args.n)
    v = _window_element(args.type, args.n, args.v) if args.v else None
    return t, v


def _default_v(t: Triple):
    w = vexillary_from_triple(t)
    print("warning: --v not given; defaulting to v = w(tau), so P = 1",
          file=sys.stderr)
    return w


def _methods(requested: str):
    return ("trees", "inductive", "oracle") if requested == "all" else (requested,)


def _run_method(name: str, t: Triple, v: WeylElement):
    if name == "trees":
        return kl_via_trees(t, v)
    if name == "inductive":
        return kl_via_inductive_pair(t, v)
    w0 = longest_element(t.lie_type, t.n)
    w = vexillary_from_triple(t)
    return kl_oracle(compose(w0, v), compose(w0, w))


def cmd_compute(args) -> int:
    t, v = _load_request(args)
    rep = validate_triple(t)
    if not rep.ok:
        for problem in rep.problems:
            print(f"invalid triple: {problem}", file=sys.stderr)
        return EXIT_INVALID
    if v is None:
        v = _default_v(t)
    try:
        pipe = tree_pipeline(t, v)
    except CovexError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID

    results = {}
    skipped = {}
    for name in _methods(args.method):
        try:
            results[name] = _run_method(name, t, v)
        except BudgetExceededError as exc:
            if args.method == "all":
                skipped[name] = str(exc)
            else:
                print(f"budget exceeded: {exc}", file=sys.stderr)
                return EXIT_BUDGET
        except CovexError as exc:
            print(f"{name} failed: {exc}", file=sys.stderr)
            return EXIT_INVALID

    distinct = {str(p) for p in results.values()}
    verdict = "MATCH" if len(distinct) <= 1 else "MISMATCH"

    if args.emit == "dot":
        print(tree_to_dot(pipe.tree))
    elif args.emit == "json":
        print(json.dumps(_json_payload(t, v, pipe, results, skipped, verdict),
                         indent=2))
    else:
        for name in ("trees", "inductive", "oracle"):
            if name in results:
                print(f"{name}: {results[name]}")
            elif name in skipped:
                print(f"{name}: skipped ({skipped[name]})")
        if args.method == "all":
            print(f"verdict: {verdict}")
    if args.method == "all" and verdict == "MISMATCH":
        return EXIT_MISMATCH
    return EXIT_OK


def _json_payload(t, v, pipe, results, skipped, verdict):
    return {
        "type": t.lie_type,
        "n": t.n,
        "k": list(t.k),
        "p": list(t.p),
        "q": list(t.q),
        "v": list(v.window),
        "w_tau": list(pipe.w_tau.window),
        "weak_k": list(pipe.weak_k),
        "h_matrix": {"a": list(pipe.h.a), "b": list(pipe.h.b)},
        "k_matrix": {"a": list(pipe.k.a), "b": list(pipe.k.b)},
        "capacity": list(pipe.cap.c),
        "tree": _tree_shape(pipe.tree),
        "results": {name: {"polynomial": str(p), "coeffs": list(p.coeffs)}
                    for name, p in sorted(results.items())},
        "skipped": dict(sorted(skipped.items())),
        "verdict": verdict,
    }


def _tree_shape(tree):
    def node(e):
        return {
            "bound": e.capacity_bound,
            "plus": e.plus_mark,
            "children": [node(c) for c in e.children],
        }

    return [node(r) for r in tree.roots]


def cmd_oracle(args) -> int:
    v = _window_element(args.type, args.n, args.v)
    w = _window_element(args.type, args.n, args.w)
    try:
        print(kl_oracle(v, w, args.budget))
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CovexError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


def cmd_crosscheck(args) -> int:
    rng = random.Random(args.seed)
    oracle_budget = resolve_budget(args.oracle_budget)
    cases = checked = oracled = mismatches = 0
    first_bad = None
    for n in range(1, args.n_max + 1):
        in_budget = weyl.group_order(args.type, n) <= oracle_budget
        for t in search.valid_triples(args.type, n):
            w = vexillary_from_triple(t)
            for v in search.group_windows_above(t):
                if args.budget is not None and cases >= args.budget:
                    break
                if args.sample is not None and rng.random() > args.sample:
                    continue
                cases += 1
                ptree = kl_via_trees(t, v)
                pind = kl_via_inductive_pair(t, v)
                vals = {"trees": ptree, "inductive": pind}
                if in_budget and w.in_group and v.in_group:
                    w0 = longest_element(t.lie_type, t.n)
                    vals["oracle"] = kl_oracle(compose(w0, v), compose(w0, w))
                    oracled += 1
                if len({str(p) for p in vals.values()}) > 1:
                    mismatches += 1
                    if first_bad is None:
                        first_bad = (t, v, vals)
                checked += 1
    print(f"type {args.type}, n <= {args.n_max}: {checked} cases "
          f"({oracled} with oracle), {mismatches} mismatches")
    if first_bad is not None:
        t, v, vals = first_bad
        print(f"first mismatch: triple [{t}] v={v}")
        for name, p in sorted(vals.items()):
            print(f"  {name}: {p}")
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_tree(args) -> int:
    t, v = _load_request(args)
    rep = validate_triple(t)
    if not rep.ok:
        for problem in rep.problems:
            print(f"invalid triple: {problem}", file=sys.stderr)
        return EXIT_INVALID
    if v is None:
        v = _default_v(t)
    try:
        pipe = tree_pipeline(t, v)
    except CovexError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print(tree_to_dot(pipe.tree))
    return EXIT_OK


def _add_request_args(sub):
    sub.add_argument("--type", choices=("A", "B", "C", "D"))
    sub.add_argument("--n", type=int)
    sub.add_argument("--triple", help='e.g. "k=1,3 p=3,4 q=2,5"')
    sub.add_argument("--v", help='window, e.g. "8,7,6,5,4,3,2,1"')
    sub.add_argument("--input", help="JSON request file (see docs/json-schema.md)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="covex-kl", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="run one or all methods on a triple")
    _add_request_args(c)
    c.add_argument("--method", default="all",
                   choices=("trees", "inductive", "oracle", "all"))
    c.add_argument("--emit", default="text", choices=("text", "json", "dot"))
    c.set_defaults(func=cmd_compute)

    o = sub.add_parser("oracle", help="classical recursion for any pair")
    o.add_argument("--type", required=True, choices=("A", "B", "C", "D"))
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--v", required=True)
    o.add_argument("--w", required=True)
    o.add_argument("--budget", type=int, default=None,
                   help="group-order cap (default 50000 or COVEX_KL_BUDGET)")
    o.set_defaults(func=cmd_oracle)

    x = sub.add_parser("crosscheck", help="exhaustive three-way agreement")
    x.add_argument("--type", required=True, choices=("A", "B", "C", "D"))
    x.add_argument("--n-max", type=int, required=True)
    x.add_argument("--budget", type=int, default=None,
                   help="cap on the number of (triple, v) cases")
    x.add_argument("--oracle-budget", type=int, default=None)
    x.add_argument("--sample", type=float, default=None,
                   help="keep each case with this probability")
    x.add_argument("--seed", type=int, default=0)
    x.set_defaults(func=cmd_crosscheck)

    tr = sub.add_parser("tree", help="emit the labelled tree as DOT")
    _add_request_args(tr)
    tr.set_defaults(func=cmd_tree)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidTripleError as exc:
        for problem in exc.problems:
            print(f"invalid input: {problem}", file=sys.stderr)
        return EXIT_INVALID
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CovexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Exit codes: 0 success, 1 failed verification, 2 bad input or arguments,
3 disconnected graph, 4 enumeration budget exceeded, 5 code/graph mismatch.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from pathlib import Path

from . import codes, invariants, verify
from .errors import BudgetExceeded, DisconnectedGraphError, GraphFormatError
from .evaluation import delta_X, evaluation_code, points_from_graph
from .fields import FieldSpec
from .graphs import Graph, graph_to_dict, incidence_matrix, load_graph

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_DISCONNECTED, EXIT_BUDGET, EXIT_MISMATCH = range(6)


class UsageError(Exception):
    pass


def default_budget() -> int:
    raw = os.environ.get("GHWLAB_BUDGET")
    if raw is None:
        return codes.DEFAULT_BUDGET
    try:
        return int(float(raw))
    except ValueError:
        raise UsageError(f"GHWLAB_BUDGET={raw!r} is not a number") from None


def parse_primes(text: str) -> list[int]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        try:
            p = int(tok)
        except ValueError:
            raise UsageError(f"{tok!r} is not an integer") from None
        try:
            FieldSpec(p)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        out.append(p)
    return out


def _field(p: int) -> FieldSpec:
    try:
        return FieldSpec(p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _read_graph(path: str) -> tuple[Graph, dict]:
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc.strerror}") from None
    G = load_graph(path)
    return G, {"path": path, "sha256": hashlib.sha256(raw).hexdigest()}


def _witness_edges(G: Graph, witness) -> list[list[int]]:
    return [[G.edges[j][0] + 1, G.edges[j][1] + 1] for j in witness]


# -- commands -----------------------------------------------------------------


def cmd_invariants(args) -> tuple[dict, int]:
    G, source = _read_graph(args.graph)
    G.require_connected()
    which = args.which
    r_max = args.rmax
    kw = {"budget": args.budget, "threads": args.threads}
    res: dict = {}
    if which in ("lambda", "all"):
        top = min(r_max, G.s - 1)
        res["lambda"] = [
            {"r": r, "value": x.value, "witness": _witness_edges(G, x.witness)}
            for r, x in enumerate(invariants.lambda_sequence(G, top, **kw), 1)
        ]
    if which in ("upsilon", "all"):
        top = min(r_max, G.s)
        res["upsilon"] = [
            {"r": r, "value": x.value, "witness": _witness_edges(G, x.witness)}
            for r, x in enumerate(invariants.upsilon_sequence(G, top, **kw), 1)
        ]
    if which in ("phi", "all"):
        sub = invariants.edge_biparticity_subsets(G, **kw)
        entry = {"subsets": {"value": sub.value, "witness": _witness_edges(G, sub.witness)}}
        if G.s >= 2:
            val, signs = invariants.edge_biparticity_signs(G)
            entry["signs"] = {"value": val, "signs": list(signs.signs)}
        res["phi"] = entry
    code = EXIT_OK
    if "signs" in res.get("phi", {}) and res["phi"]["signs"]["value"] != res["phi"]["subsets"]["value"]:
        code = EXIT_MISMATCH
    return {"source": source, "graph": graph_to_dict(G), "results": res}, code


def cmd_hierarchy(args) -> tuple[dict, int]:
    G, source = _read_graph(args.graph)
    G.require_connected()
    F = _field(args.p)
    C = codes.from_generator(incidence_matrix(G, F))
    case = verify.theorem_case(G, F.p)
    r_max = C.k if args.rmax is None else args.rmax
    if not (0 <= r_max <= C.k):
        raise UsageError(f"--rmax {r_max} outside [0, {C.k}]")
    res: dict = {"p": F.p, "n": C.n, "k": C.k, "case": case}
    code_vals, code_tags = [], []
    if args.method in ("code", "both"):
        cache: dict = {}
        for r in range(1, r_max + 1):
            d, tag = codes.delta_auto(C, r, budget=args.budget, threads=args.threads, _dual_cache=cache)
            code_vals.append(d)
            code_tags.append(tag)
    graph_vals = []
    if args.method in ("graph", "both"):
        fn = invariants.upsilon_sequence if case == "upsilon" else invariants.lambda_sequence
        graph_vals = [x.value for x in fn(G, r_max, budget=args.budget, threads=args.threads)]
    exit_code = EXIT_OK
    if args.method == "both":
        res["deltas"] = code_vals
        res["methods"] = code_tags
        res["graph"] = graph_vals
        res["agree"] = code_vals == graph_vals
        if not res["agree"]:
            exit_code = EXIT_MISMATCH
    elif args.method == "code":
        res["deltas"] = code_vals
        res["methods"] = code_tags
    else:
        res["deltas"] = graph_vals
        res["methods"] = ["graph"] * len(graph_vals)
    return {"source": source, "graph": graph_to_dict(G), "results": res}, exit_code


def cmd_evcode(args) -> tuple[dict, int]:
    G, source = _read_graph(args.graph)
    G.require_connected()
    F = _field(args.p)
    if args.d < 1:
        raise UsageError("--d must be at least 1")
    X = points_from_graph(G, F)
    C = evaluation_code(X, args.d)
    r_max = C.k if args.rmax is None else args.rmax
    if not (0 <= r_max <= C.k):
        raise UsageError(f"--rmax {r_max} outside [0, {C.k}]")
    deltas = [delta_X(X, args.d, r, budget=args.budget, threads=args.threads) for r in range(1, r_max + 1)]
    res = {"p": F.p, "d": args.d, "n": C.n, "k": C.k, "deltas": deltas}
    return {"source": source, "graph": graph_to_dict(G), "results": res}, EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    fields = parse_primes(args.p)
    rnd = None
    if args.random is not None:
        s_min, s_max, count = args.random
        if s_min < 2 or s_max < s_min or count < 0:
            raise UsageError("--random needs 2 <= S_MIN <= S_MAX and COUNT >= 0")
        rnd = verify.RandomCorpus(s_min, s_max, count, seed=args.seed, prob=args.prob)
    fixtures = tuple(args.fixture_names.split(",")) if args.fixtures else ()
    spec = verify.CorpusSpec(
        fixtures=fixtures,
        random=rnd,
        fields=tuple(fields),
        r_max=args.rmax,
        budget=args.budget,
        fixture_dir=args.fixture_dir,
        threads=args.threads,
    )
    try:
        report = verify.corpus_verify(spec)
    except (KeyError, FileNotFoundError, json.JSONDecodeError) as exc:
        raise UsageError(f"fixture error: {exc}") from None
    ok = report.strictly_passed if args.strict else report.passed
    doc = {"source": {"fixtures": list(fixtures), "seed": args.seed}, "results": report.to_dict(timing=False)}
    return doc, EXIT_OK if ok else EXIT_FAILED


# -- rendering ----------------------------------------------------------------


def _row(label: str, values, width: int) -> str:
    return f"{label:<{width}} | " + " ".join(f"{v:>3}" for v in values)


def render_table(command: str, doc: dict, verbose: bool = False) -> str:
    res = doc["results"]
    lines = []
    if command == "invariants":
        for name in ("lambda", "upsilon"):
            if name in res:
                rows = res[name]
                lines.append(_row("r", [x["r"] for x in rows], 12))
                lines.append(_row(name + "_r", [x["value"] for x in rows], 12))
                for x in rows:
                    lines.append(f"  {name}_{x['r']} witness: {x['witness']}")
        if "phi" in res:
            lines.append(f"phi (subsets) = {res['phi']['subsets']['value']}  witness: {res['phi']['subsets']['witness']}")
            if "signs" in res["phi"]:
                lines.append(f"phi (signs)   = {res['phi']['signs']['value']}  signs: {res['phi']['signs']['signs']}")
    elif command == "hierarchy":
        p = res["p"]
        lines.append(f"[n, k] = [{res['n']}, {res['k']}], p = {p}, case = {res['case']}")
        r = list(range(1, len(res["deltas"]) + 1))
        lines.append(_row("r", r, 16))
        lines.append(_row(f"delta_r(C_{p}(G))", res["deltas"], 16))
        if "graph" in res:
            lines.append(_row("graph invariant", res["graph"], 16))
            lines.append("agree" if res["agree"] else "MISMATCH")
        lines.append("methods: " + " ".join(res["methods"]))
    elif command == "evcode":
        lines.append(f"C_X({res['d']}) over F_{res['p']}: [n, k] = [{res['n']}, {res['k']}]")
        lines.append(_row("r", list(range(1, len(res["deltas"]) + 1)), 12))
        lines.append(_row("delta_X(d,r)", res["deltas"], 12))
    elif command == "verify":
        for rec in res["records"]:
            if rec["status"] != "pass" or verbose:
                lines.append(f"{rec['status'].upper():<5} {rec['check_id']}  expected={rec['expected']} actual={rec['actual']}")
        c = res["counts"]
        lines.append(f"{c['pass']} passed, {c['fail']} failed, {c['skip']} skipped")
        lines.append("ALL PASS" if res["passed"] else "FAILED")
    return "\n".join(lines)


# -- entry point ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--threads", type=int, default=None, help="worker threads (default: CPU count)")
    common.add_argument("--budget", type=float, default=None, help="enumeration budget (env GHWLAB_BUDGET)")

    parser = argparse.ArgumentParser(prog="ghwlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common], help="edge connectivity and biparticity numbers")
    p.add_argument("graph")
    p.add_argument("--rmax", type=int, default=1)
    p.add_argument("--which", choices=("lambda", "upsilon", "phi", "all"), default="all")

    p = sub.add_parser("hierarchy", parents=[common], help="weight hierarchy of the incidence code")
    p.add_argument("graph")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--rmax", type=int, default=None)
    p.add_argument("--method", choices=("graph", "code", "both"), default="both")

    p = sub.add_parser("verify", parents=[common], help="check the theorems on fixtures and random graphs")
    p.add_argument("--fixtures", action="store_true")
    p.add_argument("--fixture-names", default="prism,petersen")
    p.add_argument("--fixture-dir", default=None)
    p.add_argument("--random", nargs=3, type=int, metavar=("S_MIN", "S_MAX", "COUNT"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--prob", type=float, default=0.5)
    p.add_argument("--p", default="2,3")
    p.add_argument("--rmax", type=int, default=None)
    p.add_argument("--strict", action="store_true", help="treat skipped checks as failures")
    p.add_argument("-v", "--verbose", action="store_true")

    p = sub.add_parser("evcode", parents=[common], help="Reed-Muller-type evaluation code of a graph")
    p.add_argument("graph")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--rmax", type=int, default=None)
    return parser


COMMANDS = {
    "invariants": cmd_invariants,
    "hierarchy": cmd_hierarchy,
    "verify": cmd_verify,
    "evcode": cmd_evcode,
}


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        args.budget = default_budget() if args.budget is None else int(args.budget)
        if args.threads is not None and args.threads < 1:
            raise UsageError("--threads must be positive")
        doc, code = COMMANDS[args.command](args)
    except (UsageError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DisconnectedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    out = {"command": argv, **doc, "timing": {"seconds": round(time.perf_counter() - t0, 3)}}
    if args.format == "json":
        print(json.dumps(out, indent=2))
    else:
        print(render_table(args.command, out, verbose=getattr(args, "verbose", False)))
    return code


if __name__ == "__main__":
    sys.exit(main())

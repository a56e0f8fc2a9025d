"""Two-sided checks of the weight-hierarchy/graph-invariant equalities.

Every check computes the code side (subspace enumeration or the dual
hierarchy plus Wei duality) and the graph side (exhaustive deletion search)
independently and records both values.  Checks that would exceed the
enumeration budget are recorded as skipped rather than failed.
"""

from __future__ import annotations

import json
import random
import re
import time
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

from .codes import (
    DEFAULT_BUDGET,
    WeightHierarchy,
    dual,
    from_generator,
    gaussian_binomial,
    ghw,
    hierarchy_bruteforce,
    minimum_distance,
    wei_complete,
)
from .errors import BudgetExceeded
from .evaluation import delta_X, evaluation_code, points_from_graph
from .fields import FieldSpec, rank
from .graphs import Graph, incidence_matrix, load_graph, random_connected_graph
from .invariants import edge_biparticity_subsets, lambda_r, upsilon_r

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass
class CheckRecord:
    check_id: str
    graph_id: str
    p: int | None
    params: dict
    expected: Any
    actual: Any
    status: str
    elapsed: float = 0.0
    note: str = ""

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "check_id": self.check_id,
            "graph_id": self.graph_id,
            "p": self.p,
            "params": self.params,
            "expected": self.expected,
            "actual": self.actual,
            "status": self.status,
        }
        if self.note:
            d["note"] = self.note
        if timing:
            d["elapsed"] = round(self.elapsed, 6)
        return d


def _natural_key(text: str) -> tuple:
    return tuple(int(t) if t.isdigit() else t for t in re.split(r"(\d+)", text))


@dataclass
class VerificationReport:
    records: list[CheckRecord] = field(default_factory=list)

    def extend(self, other: VerificationReport):
        self.records.extend(other.records)

    def sorted(self) -> list[CheckRecord]:
        """Records ordered by check id, with numeric parts compared as numbers."""
        return sorted(self.records, key=lambda r: _natural_key(r.check_id))

    def count(self, status: str) -> int:
        return sum(r.status == status for r in self.records)

    @property
    def passed(self) -> bool:
        """No check failed (skips allowed)."""
        return self.count(FAIL) == 0

    @property
    def strictly_passed(self) -> bool:
        return all(r.status == PASS for r in self.records)

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.sorted() if r.status == FAIL]

    def to_dict(self, timing: bool = False) -> dict:
        return {
            "passed": self.passed,
            "counts": {s: self.count(s) for s in (PASS, FAIL, SKIP)},
            "records": [r.to_dict(timing) for r in self.sorted()],
        }


class _Recorder:
    def __init__(self, graph_id: str, p: int | None):
        self.graph_id = graph_id
        self.p = p
        self.report = VerificationReport()

    def add(self, name: str, params: dict, expected, actual, t0: float, note: str = ""):
        status = PASS if expected == actual else FAIL
        self._push(name, params, expected, actual, status, t0, note)

    def skip(self, name: str, params: dict, note: str, t0: float, expected=None):
        self._push(name, params, expected, None, SKIP, t0, note)

    def _push(self, name, params, expected, actual, status, t0, note):
        suffix = "".join(f"/{k}{v}" for k, v in params.items())
        pid = "" if self.p is None else f"/p{self.p}"
        self.report.records.append(
            CheckRecord(
                f"{self.graph_id}{pid}/{name}{suffix}",
                self.graph_id,
                self.p,
                dict(params),
                expected,
                actual,
                status,
                time.perf_counter() - t0,
                note,
            )
        )


def theorem_case(G: Graph, p: int) -> str:
    """Which graph invariant gives the weights of the incidence code.

    ``"upsilon"`` for a non-bipartite graph in odd characteristic, otherwise
    ``"lambda"`` (characteristic 2, or a bipartite graph).
    """
    return "upsilon" if p != 2 and not G.is_bipartite() else "lambda"


def code_dimension_bound(G: Graph, p: int) -> int:
    return G.s if theorem_case(G, p) == "upsilon" else G.s - 1


class InvariantCache:
    """Graph-side values shared by the checks of one graph across fields."""

    def __init__(self, G: Graph, budget: int, threads: int | None):
        self.G = G
        self.budget = budget
        self.threads = threads
        self._seq: dict[str, list[int]] = {}
        self._capped: set[str] = set()

    def sequence(self, which: str, r_max: int) -> list[int]:
        """The first ``r_max`` values, or fewer if the search ran over budget."""
        have = self._seq.setdefault(which, [])
        fn = upsilon_r if which == "upsilon" else lambda_r
        while len(have) < r_max and which not in self._capped:
            lower = have[-1] + 1 if have else 0
            try:
                res = fn(self.G, len(have) + 1, lower=lower, budget=self.budget, threads=self.threads)
            except BudgetExceeded:
                self._capped.add(which)
                break
            have.append(res.value)
        return have[:r_max]


def _dual_hierarchy(C, budget, threads) -> WeightHierarchy | None:
    D = dual(C)
    try:
        return hierarchy_bruteforce(D, budget=budget, threads=threads)
    except BudgetExceeded:
        return None


def verify_graph(
    G: Graph,
    p: int | FieldSpec,
    r_max: int | None = None,
    budget: int = DEFAULT_BUDGET,
    *,
    graph_id: str = "G",
    golden: dict | None = None,
    threads: int | None = 1,
    cache: InvariantCache | None = None,
) -> VerificationReport:
    """Run the rank, dimension, weight-hierarchy and evaluation-code checks on one graph.

    Args:
        G: a connected graph.
        p: field characteristic.
        r_max: largest r checked; defaults to the code dimension.
        budget: enumeration budget for every exhaustive computation.
        graph_id: label used in check ids.
        golden: optional ``{"code": [...], "dual": [...]}`` expected hierarchies.
        threads: worker count forwarded to the enumerations.
        cache: shared graph-side results (see :class:`InvariantCache`).
    """
    G.require_connected()
    field_ = p if isinstance(p, FieldSpec) else FieldSpec(p)
    p = field_.p
    case = theorem_case(G, p)
    bound = code_dimension_bound(G, p)
    r_max = bound if r_max is None else r_max
    if not (0 <= r_max <= bound):
        raise ValueError(f"r_max={r_max} outside [0, {bound}] for this graph and field")
    cache = cache or InvariantCache(G, budget, threads)
    rec = _Recorder(graph_id, p)

    # rank of the incidence matrix and code dimensions
    t0 = time.perf_counter()
    A = incidence_matrix(G, field_)
    rec.add("rank", {}, bound, rank(A), t0)
    t0 = time.perf_counter()
    C = from_generator(A)
    D = dual(C)
    rec.add("dims", {}, [bound, G.m - bound], [C.k, D.k], t0)

    # code-side hierarchy: enumeration per level when affordable, else Wei duality
    dual_h = None
    dual_tried = False
    code_side: list[int | None] = []
    methods: list[str] = []
    prev = 0
    for r in range(1, min(r_max, C.k) + 1):
        if gaussian_binomial(C.k, r, p) <= budget:
            d, _ = ghw(C, r, budget=budget, floor=prev + 1, threads=threads)
            code_side.append(d)
            methods.append("bruteforce")
            prev = d
            continue
        if not dual_tried:
            dual_h = _dual_hierarchy(C, budget, threads)
            dual_tried = True
        if dual_h is None:
            code_side.append(None)
            methods.append("skipped")
            continue
        d = wei_complete(C.n, C.k, None, dual_h).deltas[r - 1]
        code_side.append(d)
        methods.append("duality")
        prev = d

    t0 = time.perf_counter()
    graph_side = cache.sequence(case, r_max) if r_max else []
    for r in range(1, r_max + 1):
        params = {"r": r}
        d = code_side[r - 1] if r <= len(code_side) else None
        g = graph_side[r - 1] if r <= len(graph_side) else None
        if g is None:
            rec.skip(f"ghw_{case}", params, "graph side over budget", t0)
        elif d is None:
            rec.skip(f"ghw_{case}", params, "code side over budget", t0, expected=g)
        else:
            rec.add(f"ghw_{case}", params, g, d, t0, note=methods[r - 1])
        t0 = time.perf_counter()

    # minimum distance by listing codewords
    t0 = time.perf_counter()
    if r_max >= 1:
        try:
            md = minimum_distance(C, budget=budget)
        except BudgetExceeded as exc:
            rec.skip("min_distance", {}, str(exc), t0)
        else:
            if graph_side:
                rec.add("min_distance", {}, graph_side[0], md, t0)
            else:
                rec.skip("min_distance", {}, "graph side over budget", t0)

    t0 = time.perf_counter()
    known = [d for d in code_side if d is not None]
    rec.add("monotone", {}, True, all(a < b for a, b in zip(known, known[1:])) and all(d >= 1 for d in known), t0)

    # Wei duality: only informative when the primal side was enumerated in full
    t0 = time.perf_counter()
    full_brute = len(code_side) == C.k and all(m == "bruteforce" for m in methods)
    if full_brute:
        if not dual_tried:
            dual_h = _dual_hierarchy(C, budget, threads)
            dual_tried = True
        if dual_h is None:
            rec.skip("wei", {}, "dual hierarchy over budget", t0)
        else:
            rec.add("wei", {}, list(code_side), list(wei_complete(C.n, C.k, None, dual_h).deltas), t0)
    else:
        rec.skip("wei", {}, "primal hierarchy not fully enumerated", t0)

    # degree-2 evaluation code is the whole space
    t0 = time.perf_counter()
    X = points_from_graph(G, field_)
    C2 = evaluation_code(X, 2)
    rec.add("deg2_dim", {}, G.m, C2.k, t0)
    for r in range(1, min(r_max, G.m) + 1):
        t0 = time.perf_counter()
        try:
            rec.add("deg2_ghw", {"r": r}, r, delta_X(X, 2, r, budget=budget, threads=threads), t0)
        except BudgetExceeded as exc:
            rec.skip("deg2_ghw", {"r": r}, str(exc), t0, expected=r)

    if golden:
        t0 = time.perf_counter()
        if "code" in golden:
            want = list(golden["code"])[: len(code_side)]
            got = list(code_side[: len(want)])
            if None in got:
                rec.skip("golden_code", {}, "code side over budget", t0, expected=want)
            else:
                rec.add("golden_code", {}, want, got, t0)
        t0 = time.perf_counter()
        if "dual" in golden:
            if not dual_tried:
                dual_h = _dual_hierarchy(C, budget, threads)
                dual_tried = True
            if dual_h is None:
                rec.skip("golden_dual", {}, "dual hierarchy over budget", t0, expected=list(golden["dual"]))
            else:
                rec.add("golden_dual", {}, list(golden["dual"]), list(dual_h.deltas), t0)
    return rec.report


# -- corpora ----------------------------------------------------------------------


@dataclass(frozen=True)
class RandomCorpus:
    s_min: int
    s_max: int
    count: int
    seed: int = 0
    prob: float = 0.5

    def graphs(self) -> list[tuple[str, Graph]]:
        if self.s_min < 2 or self.s_max < self.s_min:
            raise ValueError("need 2 <= s_min <= s_max")
        rng = random.Random(self.seed)
        out = []
        for i in range(self.count):
            s = rng.randint(self.s_min, self.s_max)
            out.append((f"random{i:03d}", random_connected_graph(s, self.prob, rng)))
        return out


@dataclass(frozen=True)
class CorpusSpec:
    """What to verify.

    ``r_max=None`` means the full code dimension for fixtures and
    ``random_r_max`` for random graphs.
    """

    fixtures: tuple[str, ...] = ()
    random: RandomCorpus | None = None
    fields: tuple[int, ...] = (2, 3)
    r_max: int | None = None
    random_r_max: int = 3
    budget: int = DEFAULT_BUDGET
    fixture_dir: str | None = None
    threads: int | None = 1


def fixture_root(fixture_dir=None):
    if fixture_dir is not None:
        return Path(fixture_dir)
    return resources.files("ghwlab") / "fixtures"


def load_tables(fixture_dir=None) -> dict:
    root = fixture_root(fixture_dir)
    return json.loads((root / "tables.json").read_text(encoding="utf-8"))


def load_fixture(name: str, fixture_dir=None) -> tuple[Graph, dict]:
    """Graph and golden data of a named fixture (``prism``, ``petersen``)."""
    tables = load_tables(fixture_dir)
    if name not in tables:
        raise KeyError(f"unknown fixture {name!r}; have {sorted(tables)}")
    entry = tables[name]
    root = fixture_root(fixture_dir)
    with resources.as_file(root / entry["graph"]) as path:
        G = load_graph(path)
    return G, entry


def _check_invariants(G: Graph, gid: str, golden: dict, cache: InvariantCache) -> VerificationReport:
    rec = _Recorder(gid, None)
    t0 = time.perf_counter()
    if "phi" in golden:
        try:
            phi = edge_biparticity_subsets(G, budget=cache.budget, threads=cache.threads).value
        except BudgetExceeded as exc:
            rec.skip("golden_phi", {}, str(exc), t0, expected=golden["phi"])
        else:
            rec.add("golden_phi", {}, golden["phi"], phi, t0)
    for which in ("upsilon", "lambda"):
        t0 = time.perf_counter()
        if which in golden:
            got = cache.sequence(which, 1)
            if got:
                rec.add(f"golden_{which}", {}, golden[which], got[0], t0)
            else:
                rec.skip(f"golden_{which}", {}, "graph side over budget", t0, expected=golden[which])
    return rec.report


def corpus_verify(spec: CorpusSpec) -> VerificationReport:
    fields = [FieldSpec(p) for p in spec.fields]
    report = VerificationReport()
    items: list[tuple[str, Graph, dict | None, int | None]] = []
    for name in spec.fixtures:
        G, entry = load_fixture(name, spec.fixture_dir)
        items.append((name, G, entry, spec.r_max))
    if spec.random is not None:
        for gid, G in spec.random.graphs():
            items.append((gid, G, None, spec.r_max if spec.r_max is not None else spec.random_r_max))
    for gid, G, entry, r_max in items:
        cache = InvariantCache(G, spec.budget, spec.threads)
        if entry and entry.get("invariants"):
            report.extend(_check_invariants(G, gid, entry["invariants"], cache))
        for F in fields:
            bound = code_dimension_bound(G, F.p)
            r = bound if r_max is None else min(r_max, bound)
            golden = (entry or {}).get("hierarchies", {}).get(str(F.p))
            report.extend(
                verify_graph(G, F, r, spec.budget, graph_id=gid, golden=golden, threads=spec.threads, cache=cache)
            )
    return report

"""Exact min/max search over proper surjective edge t-colorings.

Drives the branch-and-bound kernel: edges are pre-sorted by a static
most-constrained heuristic, the first edge's color range is optionally
halved by the color-reversal symmetry j -> t+1-j (which preserves interval
spectra exactly), and the remaining tree is explored in node-quota chunks so
budgets interrupt cleanly.  With parallel_width > 1 the tree splits into one
subproblem per first-edge color; subproblems share the incumbent bound at
chunk boundaries only, so the shared bound may lag but never regresses, and
the final (status, value) is independent of scheduling.

`enumerate_colorings` is a deliberately separate implementation: a plain
recursive walker in raw edge order with no symmetry reduction, used as a
cross-check route and as the fold API over whole colorings.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable

import numpy as np

from . import backend
from .coloring import EdgeColoring, SpectrumSummary, coloring_from_json, coloring_to_json, summarize
from .graphs import Graph, chromatic_index
from .kernels import (
    MODE_COUNT,
    MODE_FEASIBLE,
    MODE_LINFOREST,
    MODE_MAX,
    MODE_MIN,
    S_BEST,
    S_COUNT,
    S_DONE,
    S_NODES,
    S_SIZE,
    S_VIOL,
    S_WFOUND,
)


class Status(Enum):
    EXACT = "exact"
    BUDGET = "budget"


@dataclass(frozen=True)
class SearchBudget:
    """Limits for one solve; absent fields mean unbounded."""

    max_nodes: int | None = None
    max_seconds: float | None = None
    parallel_width: int | None = None


class BudgetExhausted(RuntimeError):
    """Raised where a caller needs a definite answer and the budget ran out."""

    def __init__(self, message: str, outcome: "SearchOutcome | None" = None):
        super().__init__(message)
        self.outcome = outcome


@dataclass(frozen=True)
class SearchOutcome:
    """Result of one solve.

    With status EXACT, value is the true optimum (or feasibility flag /
    count) and witness, when the mode produces one, achieves it.  With
    status BUDGET, value is only the best bound seen: a reached f for
    maximization (-1 if no complete coloring was reached), an achieved f
    for minimization (|V|+1 if none).
    """

    status: Status
    value: int
    witness: EdgeColoring | None
    nodes_visited: int


def outcome_to_json(o: SearchOutcome) -> dict:
    return {
        "status": o.status.value,
        "value": o.value,
        "witness": coloring_to_json(o.witness) if o.witness is not None else None,
        "nodes": o.nodes_visited,
    }


def outcome_from_json(doc: dict) -> SearchOutcome:
    try:
        status = Status(doc["status"])
        value = int(doc["value"])
        witness = doc.get("witness")
        nodes = int(doc["nodes"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed outcome document: {exc}") from exc
    return SearchOutcome(
        status, value, coloring_from_json(witness) if witness else None, nodes
    )


def _branch_order(g: Graph) -> list[int]:
    # static most-constrained-first: heaviest endpoint degree sums first
    deg = g.degrees()
    def key(e: int):
        u, v = g.edges[e]
        return (-(deg[u] + deg[v]), -max(deg[u], deg[v]), e)
    return sorted(range(g.edge_count), key=key)


def _check_t_range(g: Graph, t: int) -> None:
    chi = chromatic_index(g)
    if not (chi <= t <= g.edge_count):
        raise ValueError(f"t={t} outside [{chi}, {g.edge_count}]")


class _Sub:
    """One first-edge-color subproblem with its private kernel state."""

    __slots__ = (
        "first_lo", "first_hi", "S", "choice", "masks", "cnt",
        "left", "vstate", "witness", "parent", "ideg",
    )

    def __init__(self, first_lo: int, first_hi: int, V: int, E: int, t: int,
                 deg: np.ndarray, sentinel: int):
        self.first_lo = first_lo
        self.first_hi = first_hi
        self.S = np.zeros(S_SIZE, dtype=np.int64)
        self.S[S_BEST] = sentinel
        self.choice = np.zeros(E, dtype=np.int64)
        self.masks = np.zeros(V, dtype=np.int64)
        self.cnt = np.zeros(t + 1, dtype=np.int64)
        self.left = deg.copy()
        self.vstate = np.zeros(V, dtype=np.int64)
        self.witness = np.zeros(E, dtype=np.int64)
        self.parent = np.zeros(V, dtype=np.int64)
        self.ideg = np.zeros(V, dtype=np.int64)

    @property
    def done(self) -> bool:
        return self.S[S_DONE] == 1

    @property
    def nodes(self) -> int:
        return int(self.S[S_NODES])

    @property
    def best(self) -> int:
        return int(self.S[S_BEST])

    @property
    def found(self) -> bool:
        return self.S[S_WFOUND] == 1


@dataclass
class _Raw:
    status: Status
    subs: list[_Sub]
    nodes: int
    order: list[int]


def _solve(g: Graph, t: int, mode: int, req_vertices, budget: SearchBudget,
           reduce_symmetry: bool) -> _Raw:
    E = g.edge_count
    V = g.vertex_count
    if E == 0:
        raise ValueError("search needs at least one edge")
    order = _branch_order(g)
    eu = np.array([g.edges[e][0] for e in order], dtype=np.int64)
    ev = np.array([g.edges[e][1] for e in order], dtype=np.int64)
    deg = np.array(g.degrees(), dtype=np.int64)
    req = np.zeros(V, dtype=np.int64)
    for v in req_vertices:
        req[v] = 1

    if mode == MODE_MAX:
        sentinel = -1
    elif mode == MODE_MIN:
        sentinel = V + 1
    else:
        sentinel = 0

    hi0 = (t + 1) // 2 if reduce_symmetry else t
    width = 1 if budget.parallel_width is None else budget.parallel_width
    if width < 1:
        raise ValueError("parallel_width must be positive")
    if width > 1 and hi0 > 1:
        subs = [_Sub(c, c, V, E, t, deg, sentinel) for c in range(1, hi0 + 1)]
    else:
        subs = [_Sub(1, hi0, V, E, t, deg, sentinel)]

    kernel = backend.active_kernel()
    chunk = backend.chunk_nodes()
    deadline = (
        time.monotonic() + budget.max_seconds
        if budget.max_seconds is not None
        else None
    )
    incumbent = sentinel
    pending = list(subs)
    early_exact = False

    def run_one(sub: _Sub, stop: int, inc: int) -> None:
        kernel(
            eu, ev, deg, t, mode, req, sub.first_lo, sub.first_hi, inc, stop,
            sub.S, sub.choice, sub.masks, sub.cnt, sub.left, sub.vstate,
            sub.witness, sub.parent, sub.ideg,
        )

    pool = ThreadPoolExecutor(max_workers=min(width, len(subs))) if width > 1 else None
    try:
        while pending:
            if deadline is not None and time.monotonic() >= deadline:
                break
            step = chunk
            if budget.max_nodes is not None:
                total = sum(s.nodes for s in subs)
                remaining = budget.max_nodes - total
                if remaining <= 0:
                    break
                step = min(chunk, max(1, remaining // len(pending)))
            stops = [(s, s.nodes + step) for s in pending]
            if pool is not None:
                futures = [pool.submit(run_one, s, stop, incumbent) for s, stop in stops]
                for f in futures:
                    f.result()
            else:
                for s, stop in stops:
                    run_one(s, stop, incumbent)
            if mode == MODE_MAX:
                incumbent = max(incumbent, max(s.best for s in subs))
                if incumbent >= V:
                    early_exact = True
                    break
            elif mode == MODE_MIN:
                incumbent = min(incumbent, min(s.best for s in subs))
                if incumbent <= 0:
                    early_exact = True
                    break
            elif mode in (MODE_FEASIBLE, MODE_LINFOREST):
                if any(s.found for s in subs):
                    early_exact = True
                    break
            pending = [s for s in pending if not s.done]
    finally:
        if pool is not None:
            pool.shutdown(wait=False)

    exact = early_exact or all(s.done for s in subs)
    nodes = sum(s.nodes for s in subs)
    return _Raw(Status.EXACT if exact else Status.BUDGET, subs, nodes, order)


def _map_witness(t: int, order: list[int], kernel_witness: np.ndarray) -> EdgeColoring:
    colors = [0] * len(order)
    for pos, e in enumerate(order):
        colors[e] = int(kernel_witness[pos])
    return EdgeColoring(t, tuple(colors))


def _extremum(g: Graph, t: int, mode: int, budget: SearchBudget | None,
              reduce_symmetry: bool = True) -> SearchOutcome:
    budget = budget or SearchBudget()
    _check_t_range(g, t)
    raw = _solve(g, t, mode, (), budget, reduce_symmetry)
    if mode == MODE_MAX:
        value = max(s.best for s in raw.subs)
    else:
        value = min(s.best for s in raw.subs)
    carriers = sorted(
        (s for s in raw.subs if s.found and s.best == value),
        key=lambda s: s.first_lo,
    )
    witness = _map_witness(t, raw.order, carriers[0].witness) if carriers else None
    if raw.status is Status.EXACT and witness is None:
        raise RuntimeError("validated t-range yielded no coloring; kernel defect")
    return SearchOutcome(raw.status, value, witness, raw.nodes)


def mu1(g: Graph, t: int, budget: SearchBudget | None = None) -> SearchOutcome:
    """Exact minimum of f (interval-spectrum vertex count) over all
    proper surjective t-colorings, with an achieving witness."""
    return _extremum(g, t, MODE_MIN, budget)


def mu2(g: Graph, t: int, budget: SearchBudget | None = None) -> SearchOutcome:
    """Exact maximum of f over all proper surjective t-colorings."""
    return _extremum(g, t, MODE_MAX, budget)


def feasible_interval_on(g: Graph, r, t: int,
                         budget: SearchBudget | None = None) -> SearchOutcome:
    """Decide whether some proper surjective t-coloring is interval on r.

    value 1 with a witness, or value 0 with status EXACT for proven
    infeasibility.  Empty r degenerates to plain existence of a coloring.
    """
    budget = budget or SearchBudget()
    r = frozenset(r)
    for v in r:
        if not (0 <= v < g.vertex_count):
            raise ValueError(f"vertex {v} out of range")
    _check_t_range(g, t)
    return _feasible_raw(g, r, t, budget)


def _feasible_raw(g: Graph, r: frozenset, t: int, budget: SearchBudget) -> SearchOutcome:
    raw = _solve(g, t, MODE_FEASIBLE, r, budget, reduce_symmetry=True)
    hits = sorted((s for s in raw.subs if s.found), key=lambda s: s.first_lo)
    if hits:
        witness = _map_witness(t, raw.order, hits[0].witness)
        return SearchOutcome(Status.EXACT, 1, witness, raw.nodes)
    return SearchOutcome(raw.status, 0, None, raw.nodes)


def has_proper_t_coloring(g: Graph, t: int,
                          budget: SearchBudget | None = None) -> bool:
    """Existence of a proper surjective t-coloring; used to settle the
    chromatic index of non-bipartite graphs.  Raises BudgetExhausted when
    the search cannot finish within budget."""
    if not (1 <= t <= g.edge_count):
        raise ValueError(f"t={t} outside [1, {g.edge_count}]")
    outcome = _feasible_raw(g, frozenset(), t, budget or SearchBudget())
    if outcome.status is Status.BUDGET:
        raise BudgetExhausted(f"existence of a {t}-coloring undecided", outcome)
    return outcome.value == 1


def count_colorings(g: Graph, t: int, budget: SearchBudget | None = None,
                    reduce_symmetry: bool = False) -> SearchOutcome:
    """Count proper surjective t-colorings (all of them by default;
    representatives under color reversal when reduce_symmetry)."""
    budget = budget or SearchBudget()
    _check_t_range(g, t)
    raw = _solve(g, t, MODE_COUNT, (), budget, reduce_symmetry)
    count = sum(int(s.S[S_COUNT]) for s in raw.subs)
    return SearchOutcome(raw.status, count, None, raw.nodes)


def sweep_linear_forest(g: Graph, budget: SearchBudget | None = None) -> SearchOutcome:
    """Sweep every coloring at t = |E| and report the first coloring, if
    any, whose interval-spectrum vertices induce something other than a
    linear forest.  value is the violation count (0 = property holds)."""
    budget = budget or SearchBudget()
    t = g.edge_count
    _check_t_range(g, t)
    raw = _solve(g, t, MODE_LINFOREST, (), budget, reduce_symmetry=False)
    viols = sum(int(s.S[S_VIOL]) for s in raw.subs)
    hits = sorted((s for s in raw.subs if s.found), key=lambda s: s.first_lo)
    witness = _map_witness(t, raw.order, hits[0].witness) if hits else None
    return SearchOutcome(raw.status, viols, witness, raw.nodes)


@dataclass
class WRangeResult:
    """Feasibility of interval-on-r colorings across the whole t-range."""

    outcomes: dict[int, SearchOutcome]
    w: int | None
    W: int | None
    exact: bool
    contiguous: bool | None
    has_i_property: bool | None


def w_range(g: Graph, r, budget: SearchBudget | None = None) -> WRangeResult:
    """Least and greatest t admitting a coloring interval on r, sweeping
    every t in [chromatic index, |E|] and classifying each row."""
    budget = budget or SearchBudget()
    r = frozenset(r)
    chi = chromatic_index(g)
    outcomes: dict[int, SearchOutcome] = {}
    for t in range(chi, g.edge_count + 1):
        outcomes[t] = feasible_interval_on(g, r, t, budget)
    feas = [t for t, o in outcomes.items() if o.status is Status.EXACT and o.value == 1]
    unknown = [t for t, o in outcomes.items() if o.status is Status.BUDGET]
    w = min(feas) if feas else None
    W = max(feas) if feas else None
    exact = not unknown
    if feas:
        has_i = True
    elif unknown:
        has_i = None
    else:
        has_i = False
    contiguous: bool | None
    if not feas:
        contiguous = None
    else:
        inner = range(w, W + 1)
        if any(
            outcomes[t].status is Status.EXACT and outcomes[t].value == 0
            for t in inner
        ):
            contiguous = False
        elif any(outcomes[t].status is Status.BUDGET for t in inner):
            contiguous = None
        else:
            contiguous = True
    if (
        g.part_labels is not None
        and exact
        and feas
        and r in (g.part("X"), g.part("Y"))
    ):
        # parts of a bipartite graph always reach t = |E| and fill the
        # whole range; anything else means the solver itself is broken
        if W != g.edge_count or contiguous is not True:
            raise RuntimeError(
                f"part sweep returned w={w}, W={W}, contiguous={contiguous}; "
                "this contradicts the bipartite part range law"
            )
    return WRangeResult(outcomes, w, W, exact, contiguous, has_i)


@dataclass(frozen=True)
class EnumerationOutcome:
    result: Any
    status: Status
    nodes_visited: int
    colorings_seen: int


def enumerate_colorings(
    g: Graph,
    t: int,
    fold: Callable[[Any, EdgeColoring, SpectrumSummary], Any],
    init: Any,
    budget: SearchBudget | None = None,
) -> EnumerationOutcome:
    """Visit every proper surjective t-coloring in raw edge order.

    Independent of the kernel on purpose: no symmetry reduction, no bound
    pruning, plain recursion.  fold(acc, coloring, summary) must be
    insensitive to visit order.
    """
    budget = budget or SearchBudget()
    _check_t_range(g, t)
    E = g.edge_count
    max_nodes = budget.max_nodes
    deadline = (
        time.monotonic() + budget.max_seconds
        if budget.max_seconds is not None
        else None
    )
    colors = [0] * E
    seen_at: list[set[int]] = [set() for _ in range(g.vertex_count)]
    used = [0] * (t + 1)
    used_total = 0
    state = {"acc": init, "nodes": 0, "seen": 0, "status": Status.EXACT}

    def over_budget() -> bool:
        if max_nodes is not None and state["nodes"] >= max_nodes:
            return True
        if deadline is not None and state["nodes"] % 1024 == 0:
            return time.monotonic() >= deadline
        return False

    def rec(d: int) -> bool:
        nonlocal used_total
        if d == E:
            c = EdgeColoring(t, tuple(colors))
            state["acc"] = fold(state["acc"], c, summarize(g, c))
            state["seen"] += 1
            return True
        u, v = g.edges[d]
        for c in range(1, t + 1):
            if c in seen_at[u] or c in seen_at[v]:
                continue
            state["nodes"] += 1
            if over_budget():
                state["status"] = Status.BUDGET
                return False
            colors[d] = c
            seen_at[u].add(c)
            seen_at[v].add(c)
            used[c] += 1
            if used[c] == 1:
                used_total += 1
            ok = True
            if t - used_total <= E - (d + 1):
                ok = rec(d + 1)
            seen_at[u].remove(c)
            seen_at[v].remove(c)
            used[c] -= 1
            if used[c] == 0:
                used_total -= 1
            if not ok:
                return False
        return True

    rec(0)
    return EnumerationOutcome(
        state["acc"], state["status"], state["nodes"], state["seen"]
    )

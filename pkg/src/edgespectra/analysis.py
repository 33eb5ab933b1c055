"""Derived game parameters, closed formulas, and the verification sweep.

The four game parameters fold per-t extrema: with Alice choosing the color
count t and Bob choosing the coloring, mu21 (Alice minimizes the spectrum
count, Bob maximizes) is min over t of mu2, and mu12 is the dual.  Every
closed formula here ships with a sweep that recomputes the same quantity by
exhaustive search and compares, counting budget-limited rows as skipped
rather than passed.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from enum import Enum

from .graphs import Graph, build_complete_bipartite, chromatic_index, graph_to_json
from .coloring import EdgeColoring, coloring_to_json
from .search import (
    SearchBudget,
    SearchOutcome,
    Status,
    mu1,
    mu2,
    outcome_to_json,
    sweep_linear_forest,
    w_range,
)


@dataclass(frozen=True)
class MuRecord:
    t: int
    mu1: SearchOutcome
    mu2: SearchOutcome


@dataclass(frozen=True)
class MuTable:
    """Per-t extrema of f over the full range t in [chromatic index, |E|]."""

    graph: Graph
    rows: tuple[MuRecord, ...]


def mu_table(g: Graph, budget: SearchBudget | None = None) -> MuTable:
    """Solve mu1 and mu2 for every t; the budget applies to each solve."""
    chi = chromatic_index(g)
    rows = tuple(
        MuRecord(t, mu1(g, t, budget), mu2(g, t, budget))
        for t in range(chi, g.edge_count + 1)
    )
    return MuTable(g, rows)


@dataclass(frozen=True)
class ParamEstimate:
    """A folded parameter value; exact only when every row it folds is."""

    value: int
    exact: bool


@dataclass(frozen=True)
class MuParams:
    mu11: ParamEstimate
    mu12: ParamEstimate
    mu21: ParamEstimate
    mu22: ParamEstimate


def mu_params(table: MuTable) -> MuParams:
    if not table.rows:
        raise ValueError("empty table")
    ones = [r.mu1 for r in table.rows]
    twos = [r.mu2 for r in table.rows]
    exact1 = all(o.status is Status.EXACT for o in ones)
    exact2 = all(o.status is Status.EXACT for o in twos)
    return MuParams(
        mu11=ParamEstimate(min(o.value for o in ones), exact1),
        mu12=ParamEstimate(max(o.value for o in ones), exact1),
        mu21=ParamEstimate(min(o.value for o in twos), exact2),
        mu22=ParamEstimate(max(o.value for o in twos), exact2),
    )


def _require_pair(m: int, n: int) -> None:
    if m < 1 or n < 1:
        raise ValueError("both part sizes must be positive")


def mu21_closed_form(m: int, n: int) -> int:
    """Game value with Alice minimizing over t and Bob maximizing f.

    m+1 when the smaller part is a single vertex or both parts are pairs;
    the larger part size otherwise.
    """
    _require_pair(m, n)
    if m < n:
        m, n = n, m
    if n == 1 or (m == 2 and n == 2):
        return m + 1
    return m


def w_closed(m: int, n: int) -> int:
    """Least t admitting a coloring of K_{m,n} interval at every vertex."""
    _require_pair(m, n)
    if m < n:
        raise ValueError("requires m >= n; swap the parts first")
    return m + n - math.gcd(m, n)


def W_closed(m: int, n: int) -> int:
    """Greatest t admitting a coloring of K_{m,n} interval at every vertex."""
    _require_pair(m, n)
    if m < n:
        raise ValueError("requires m >= n; swap the parts first")
    return m + n - 1


def wY_closed(m: int, n: int) -> int:
    """Least t admitting a coloring of K_{m,n} interval on the whole Y part."""
    _require_pair(m, n)
    if m < n:
        raise ValueError("requires m >= n; swap the parts first")
    return n * (-(-m // n))


def corollary_chain_check(m: int, n: int) -> bool:
    """max <= min*ceil(max/min) <= m+n-gcd <= m+n-1 <= mn, all four at once."""
    _require_pair(m, n)
    hi, lo = max(m, n), min(m, n)
    a = hi
    b = lo * (-(-hi // lo))
    c = m + n - math.gcd(m, n)
    d = m + n - 1
    e = m * n
    return a <= b <= c <= d <= e


class Objective(Enum):
    MU21 = "mu21"
    MU12 = "mu12"


@dataclass(frozen=True)
class GameResult:
    """Alice's chosen t, Bob's reply, and the resulting spectrum count.

    exact is False when any per-t solve hit its budget, in which case value
    is only the best estimate the search produced.
    """

    objective: Objective
    alice_t: int
    bob_witness: EdgeColoring | None
    value: int
    exact: bool


def game_solve(g: Graph, objective: Objective,
               budget: SearchBudget | None = None) -> GameResult:
    """Play the color-count game: Alice picks t (minimizing for MU21,
    maximizing for MU12), Bob answers with his extremal coloring.  Ties on
    the value go to the smallest t."""
    chi = chromatic_index(g)
    solve = mu2 if objective is Objective.MU21 else mu1
    rows = [(t, solve(g, t, budget)) for t in range(chi, g.edge_count + 1)]
    exact = all(o.status is Status.EXACT for _, o in rows)
    if objective is Objective.MU21:
        value = min(o.value for _, o in rows)
    else:
        value = max(o.value for _, o in rows)
    alice_t, chosen = next((t, o) for t, o in rows if o.value == value)
    return GameResult(objective, alice_t, chosen.witness, value, exact)


@dataclass(frozen=True)
class ClaimRecord:
    """One verified statement: expected vs got, or skipped under budget."""

    claim: str
    pair: tuple[int, int]
    t: int | None
    expected: int
    got: int | None
    status: str  # pass | fail | skipped


@dataclass(frozen=True)
class VerifyReport:
    claims: tuple[ClaimRecord, ...]

    @property
    def passed(self) -> int:
        return sum(1 for c in self.claims if c.status == "pass")

    @property
    def failed(self) -> int:
        return sum(1 for c in self.claims if c.status == "fail")

    @property
    def skipped(self) -> int:
        return sum(1 for c in self.claims if c.status == "skipped")

    @property
    def ok(self) -> bool:
        return self.failed == 0


def _claim_eq(name: str, pair, t, expected: int, got) -> ClaimRecord:
    if got is None:
        return ClaimRecord(name, pair, t, expected, None, "skipped")
    return ClaimRecord(
        name, pair, t, expected, got, "pass" if got == expected else "fail"
    )


def _claim_ge(name: str, pair, t, floor: int, got) -> ClaimRecord:
    if got is None:
        return ClaimRecord(name, pair, t, floor, None, "skipped")
    return ClaimRecord(
        name, pair, t, floor, got, "pass" if got >= floor else "fail"
    )


def verify_suite(max_m: int, max_n: int,
                 budget: SearchBudget | None = None) -> VerifyReport:
    """Check every closed form against blind search for all pairs with
    n <= m <= max_m, n <= max_n.

    Covered per pair: the game value formula and its m..m+1 bracket, the
    per-t inequality mu2 >= m (m >= 3), the three t-range formulas with
    contiguity of the feasible set, and the sweep asserting that interval
    vertices of any |E|-coloring induce a linear forest (n >= 2).  Rows the
    budget could not settle surface as skipped, never as passes.
    """
    if not (1 <= max_n <= max_m):
        raise ValueError("need 1 <= max_n <= max_m")
    claims: list[ClaimRecord] = []
    for m in range(1, max_m + 1):
        for n in range(1, min(m, max_n) + 1):
            pair = (m, n)
            g = build_complete_bipartite(m, n)
            table = mu_table(g, budget)
            params = mu_params(table)

            got21 = params.mu21.value if params.mu21.exact else None
            claims.append(
                _claim_eq("mu21_closed_form", pair, None, mu21_closed_form(m, n), got21)
            )
            if got21 is not None:
                bracket = 1 if m <= got21 <= m + 1 else 0
                claims.append(ClaimRecord(
                    "mu21_bracket", pair, None, 1, bracket,
                    "pass" if bracket == 1 else "fail",
                ))

            if m >= 3:
                for row in table.rows:
                    got = row.mu2.value if row.mu2.status is Status.EXACT else None
                    claims.append(_claim_ge("mu2_at_least_m", pair, row.t, m, got))

            wr_all = w_range(g, range(g.vertex_count), budget)
            if wr_all.exact:
                claims.append(_claim_eq("w_closed", pair, None, w_closed(m, n), wr_all.w))
                claims.append(_claim_eq("W_closed", pair, None, W_closed(m, n), wr_all.W))
                claims.append(_claim_eq(
                    "feasible_contiguous_V", pair, None, 1,
                    1 if wr_all.contiguous else 0,
                ))
            else:
                claims.append(_claim_eq("w_closed", pair, None, w_closed(m, n), None))
                claims.append(_claim_eq("W_closed", pair, None, W_closed(m, n), None))
                claims.append(_claim_eq("feasible_contiguous_V", pair, None, 1, None))

            wr_y = w_range(g, g.part("Y"), budget)
            if wr_y.exact:
                claims.append(_claim_eq("wY_closed", pair, None, wY_closed(m, n), wr_y.w))
                claims.append(_claim_eq("WY_edge_count", pair, None, m * n, wr_y.W))
                claims.append(_claim_eq(
                    "feasible_contiguous_Y", pair, None, 1,
                    1 if wr_y.contiguous else 0,
                ))
            else:
                claims.append(_claim_eq("wY_closed", pair, None, wY_closed(m, n), None))
                claims.append(_claim_eq("WY_edge_count", pair, None, m * n, None))
                claims.append(_claim_eq("feasible_contiguous_Y", pair, None, 1, None))

            if n >= 2:
                sweep = sweep_linear_forest(g, budget)
                got = sweep.value if sweep.status is Status.EXACT else None
                claims.append(
                    _claim_eq("interval_core_linear_forest", pair, g.edge_count, 0, got)
                )
    return VerifyReport(tuple(claims))


def claim_to_json(c: ClaimRecord) -> dict:
    return {
        "claim": c.claim,
        "pair": [c.pair[0], c.pair[1]],
        "t": c.t,
        "expected": c.expected,
        "got": c.got,
        "status": c.status,
    }


def report_to_json(r: VerifyReport) -> dict:
    return {
        "claims": [claim_to_json(c) for c in r.claims],
        "passed": r.passed,
        "failed": r.failed,
        "skipped": r.skipped,
        "ok": r.ok,
    }


def mu_table_to_json(table: MuTable) -> dict:
    return {
        "graph": graph_to_json(table.graph),
        "name": table.graph.name,
        "rows": [
            {"t": r.t, "mu1": outcome_to_json(r.mu1), "mu2": outcome_to_json(r.mu2)}
            for r in table.rows
        ],
    }


def mu_table_to_csv(table: MuTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["t", "mu1", "mu1_status", "mu2", "mu2_status"])
    for r in table.rows:
        writer.writerow(
            [r.t, r.mu1.value, r.mu1.status.value, r.mu2.value, r.mu2.status.value]
        )
    return buf.getvalue()


def params_to_json(p: MuParams) -> dict:
    def one(e: ParamEstimate) -> dict:
        return {"value": e.value, "exact": e.exact}

    return {
        "mu11": one(p.mu11),
        "mu12": one(p.mu12),
        "mu21": one(p.mu21),
        "mu22": one(p.mu22),
    }


def game_to_json(r: GameResult) -> dict:
    return {
        "objective": r.objective.value,
        "alice_t": r.alice_t,
        "bob_witness": coloring_to_json(r.bob_witness) if r.bob_witness else None,
        "value": r.value,
        "exact": r.exact,
    }

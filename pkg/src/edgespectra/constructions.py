"""Explicit colorings of K_{m,n}: staircase, collapse sequences, Y-block scheme.

The staircase coloring assigns i+j-1 to the edge (x_i, y_j) and is the
canonical harmonic coloring with every vertex interval.  Collapse steps
shrink the palette one color at a time while staying harmonic.  The block
scheme certifies interval spectra on the whole Y part at t = n*q.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import (
    EdgeColoring,
    coloring_from_json,
    coloring_to_json,
    color_class,
    is_harmonic,
    require_valid,
    summarize,
)
from .graphs import Graph, chromatic_index


def staircase_coloring(m: int, n: int) -> EdgeColoring:
    """Color edge (x_i, y_j) of K_{m,n} with i+j-1, so t = m+n-1.

    Harmonic, and every spectrum is an interval: x_i sees [i, i+m-1] and
    y_j sees [j, j+n-1].
    """
    if not (m >= n >= 1):
        raise ValueError("requires m >= n >= 1; swap the parts first")
    colors = tuple(i + j - 1 for i in range(1, n + 1) for j in range(1, m + 1))
    return EdgeColoring(m + n - 1, colors)


def collapse_step(g: Graph, c: EdgeColoring) -> EdgeColoring:
    """Recolor the maximum color class M down to M - max_degree.

    Keeps the coloring valid and harmonic with exactly one fewer color.
    Rejects colorings already at the chromatic index (nothing to collapse).
    """
    if not is_harmonic(g, c):
        raise ValueError("collapse steps are only defined for harmonic colorings")
    delta = g.max_degree()
    if c.t <= chromatic_index(g):
        raise ValueError("palette already at chromatic index; no step possible")
    top = c.t
    colors = tuple(col - delta if col == top else col for col in c.colors)
    return EdgeColoring(top - 1, colors)


@dataclass(frozen=True)
class CollapseTrace:
    """Stages of an iterated collapse, starting from the input coloring.

    moved_edges[j] is the edge set recolored between stage j and stage j+1;
    f_values[j] counts interval-spectrum vertices at stage j.
    """

    stages: tuple[EdgeColoring, ...]
    moved_edges: tuple[frozenset[int], ...]
    f_values: tuple[int, ...]


def collapse_sequence(g: Graph, c: EdgeColoring, k: int) -> CollapseTrace:
    """Apply k collapse steps and record every stage.

    k may be anything from 0 to t - chromatic_index(g); the stages are
    fully determined by the input.
    """
    require_valid(g, c)
    chi = chromatic_index(g)
    if not (0 <= k <= c.t - chi):
        raise ValueError(f"k={k} outside [0, {c.t - chi}]")
    stages = [c]
    moved = []
    current = c
    for _ in range(k):
        moved.append(color_class(g, current, current.t))
        current = collapse_step(g, current)
        stages.append(current)
    f_values = tuple(summarize(g, s).interval_count for s in stages)
    return CollapseTrace(tuple(stages), tuple(moved), f_values)


def block_interval_on_Y(m: int, n: int, q: int) -> EdgeColoring:
    """Coloring of K_{m,n} with t = n*q whose Y spectra are full color blocks.

    Y splits into q groups of size at most n, larger groups first; group L
    (1-based) owns the block [(L-1)n+1, Ln], and the edge from x_i to the
    r-th member of the group gets (L-1)n + 1 + ((i+r) mod n).  Each y then
    sees its whole block, so the coloring is interval on all of Y.
    """
    if not (m >= n >= 1):
        raise ValueError("requires m >= n >= 1; swap the parts first")
    lo = -(-m // n)
    if not (lo <= q <= m):
        raise ValueError(f"group count {q} outside [{lo}, {m}]")
    base, extra = divmod(m, q)
    group_of = []
    member_rank = []
    for grp in range(q):
        size = base + (1 if grp < extra else 0)
        for r in range(1, size + 1):
            group_of.append(grp)
            member_rank.append(r)
    colors = [0] * (n * m)
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            grp = group_of[j - 1]
            r = member_rank[j - 1]
            colors[(i - 1) * m + (j - 1)] = grp * n + 1 + ((i + r) % n)
    return EdgeColoring(n * q, tuple(colors))


def trace_to_json(trace: CollapseTrace) -> dict:
    return {
        "stages": [coloring_to_json(s) for s in trace.stages],
        "moved": [sorted(mv) for mv in trace.moved_edges],
        "f_values": list(trace.f_values),
    }


def trace_from_json(doc: dict) -> CollapseTrace:
    try:
        stages = tuple(coloring_from_json(s) for s in doc["stages"])
        moved = tuple(frozenset(int(e) for e in mv) for mv in doc["moved"])
        f_values = tuple(int(f) for f in doc["f_values"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed trace document: {exc}") from exc
    if len(moved) != len(stages) - 1 or len(f_values) != len(stages):
        raise ValueError("trace lengths disagree")
    return CollapseTrace(stages, moved, f_values)

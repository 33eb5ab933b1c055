"""Immutable simple graphs, standard family builders, and structural predicates.

Vertices are 0-based indices.  Complete bipartite builders lay out the X part
first (x_1..x_n at indices 0..n-1) and the Y part after it (y_1..y_m at
indices n..n+m-1), so the edge (x_i, y_j) sits at index (i-1)*m + (j-1) and
can be looked up in O(1).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph with an ordered edge list.

    Construction rejects loops, repeated edges, out-of-range endpoints and
    part labels that put an edge inside one side of a bipartition.  Builders
    and the JSON parser additionally require the graph to be connected with
    at least one edge; values produced by `induced_subgraph` are exempt from
    that requirement (they may be disconnected or edgeless).
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    part_labels: tuple[str, ...] | None = None
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u},{v}) has an endpoint out of range")
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"repeated edge ({u},{v})")
            seen.add(key)
        if self.part_labels is not None:
            if len(self.part_labels) != self.vertex_count:
                raise ValueError("part_labels length must equal vertex_count")
            if any(p not in ("X", "Y") for p in self.part_labels):
                raise ValueError("part labels must be 'X' or 'Y'")
            for u, v in self.edges:
                if self.part_labels[u] == self.part_labels[v]:
                    raise ValueError(f"edge ({u},{v}) joins two {self.part_labels[u]} vertices")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def max_degree(self) -> int:
        return max(self.degrees())

    def min_degree(self) -> int:
        return min(self.degrees())

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def incident_edges(self) -> list[list[int]]:
        """Edge indices incident to each vertex, in edge order."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for k, (u, v) in enumerate(self.edges):
            inc[u].append(k)
            inc[v].append(k)
        return inc

    def part(self, label: str) -> frozenset[int]:
        """Vertex set of one side of the bipartition ('X' or 'Y')."""
        if self.part_labels is None:
            raise ValueError("graph carries no bipartition labels")
        return frozenset(i for i, p in enumerate(self.part_labels) if p == label)


def _require_standard(g: Graph) -> Graph:
    if g.edge_count == 0:
        raise ValueError("graph must contain at least one edge")
    if not is_connected(g):
        raise ValueError("graph must be connected")
    return g


def build_complete_bipartite(m: int, n: int) -> Graph:
    """Complete bipartite graph with |X| = n, |Y| = m and mn edges.

    Vertex layout: x_1..x_n at 0..n-1, y_1..y_m at n..n+m-1; the edge
    (x_i, y_j) has index (i-1)*m + (j-1).
    """
    if m < 1 or n < 1:
        raise ValueError("both parts must be nonempty")
    edges = tuple((i, n + j) for i in range(n) for j in range(m))
    labels = tuple("X" for _ in range(n)) + tuple("Y" for _ in range(m))
    return Graph(n + m, edges, labels, name=f"K_{{{m},{n}}}")


def kmn_edge_index(m: int, n: int, i: int, j: int) -> int:
    """Edge index of (x_i, y_j) in build_complete_bipartite(m, n), 1-based i, j."""
    if not (1 <= i <= n and 1 <= j <= m):
        raise ValueError(f"(i,j)=({i},{j}) outside [1,{n}] x [1,{m}]")
    return (i - 1) * m + (j - 1)


def x_vertex(n: int, i: int) -> int:
    """Vertex index of x_i (1-based) in a complete bipartite builder layout."""
    return i - 1


def y_vertex(n: int, j: int) -> int:
    """Vertex index of y_j (1-based) in a complete bipartite builder layout."""
    return n + j - 1


def build_cycle(k: int) -> Graph:
    """Simple cycle on k >= 3 vertices."""
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    edges = tuple((i, (i + 1) % k) for i in range(k))
    return Graph(k, edges, name=f"C_{k}")


def build_path(k: int) -> Graph:
    """Simple path on k >= 2 vertices (k-1 edges)."""
    if k < 2:
        raise ValueError("a path needs at least 2 vertices")
    edges = tuple((i, i + 1) for i in range(k - 1))
    return Graph(k, edges, name=f"P_{k}")


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Subgraph induced by a vertex set, reindexed in sorted vertex order.

    The result may be disconnected or edgeless; it keeps the part labels of
    the selected vertices when the input carries any.
    """
    chosen = sorted(set(vertices))
    for v in chosen:
        if not (0 <= v < g.vertex_count):
            raise ValueError(f"vertex {v} out of range")
    remap = {v: i for i, v in enumerate(chosen)}
    inside = set(chosen)
    edges = tuple(
        (remap[u], remap[v]) for u, v in g.edges if u in inside and v in inside
    )
    labels = None
    if g.part_labels is not None and chosen:
        labels = tuple(g.part_labels[v] for v in chosen)
    return Graph(len(chosen), edges, labels)


def is_connected(g: Graph) -> bool:
    if g.vertex_count <= 1:
        return True
    adj = g.adjacency()
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.vertex_count


def is_bipartite(g: Graph) -> bool:
    """BFS 2-coloring test; does not rely on stored part labels."""
    adj = g.adjacency()
    side = [-1] * g.vertex_count
    for start in range(g.vertex_count):
        if side[start] != -1:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def is_linear_forest(g: Graph) -> bool:
    """True iff g is acyclic and every vertex has degree at most 2.

    Equivalently: every connected component is a simple path (an isolated
    vertex counts as a trivial path).
    """
    if any(d > 2 for d in g.degrees()):
        return False
    parent = list(range(g.vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def chromatic_index(g: Graph, budget=None) -> int:
    """Least t admitting a proper edge t-coloring.

    Bipartite graphs resolve to the maximum degree directly; everything else
    is decided by a feasibility search at t = max degree (the answer is the
    maximum degree or one more).  Raises search.BudgetExhausted when the
    search cannot settle the question within the budget.
    """
    if g.edge_count == 0:
        raise ValueError("chromatic index needs at least one edge")
    delta = g.max_degree()
    if is_bipartite(g):
        return delta
    from . import search

    if search.has_proper_t_coloring(g, delta, budget):
        return delta
    return delta + 1


def graph_to_json(g: Graph) -> dict:
    """JSON form: {"vertex_count", "edges", "parts"?} with 0-based indices."""
    doc: dict = {
        "vertex_count": g.vertex_count,
        "edges": [[u, v] for u, v in g.edges],
    }
    if g.part_labels is not None:
        doc["parts"] = {
            "X": sorted(g.part("X")),
            "Y": sorted(g.part("Y")),
        }
    return doc


def graph_from_json(doc: dict) -> Graph:
    """Parse the JSON form, rejecting anything that violates the invariants."""
    try:
        vc = int(doc["vertex_count"])
        raw_edges = doc["edges"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed graph document: {exc}") from exc
    edges = []
    for k, pair in enumerate(raw_edges):
        if len(pair) != 2:
            raise ValueError(f"edge #{k} is not a pair: {pair!r}")
        u, v = int(pair[0]), int(pair[1])
        edges.append((u, v))
    labels = None
    if "parts" in doc and doc["parts"] is not None:
        parts = doc["parts"]
        xs, ys = set(parts.get("X", ())), set(parts.get("Y", ()))
        if xs & ys:
            raise ValueError("parts X and Y overlap")
        if xs | ys != set(range(vc)):
            raise ValueError("parts must cover every vertex exactly once")
        labels = tuple("X" if i in xs else "Y" for i in range(vc))
    return _require_standard(Graph(vc, tuple(edges), labels))

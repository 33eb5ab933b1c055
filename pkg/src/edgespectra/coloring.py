"""Proper edge t-colorings, vertex spectra, and the harmonic predicate.

Colors are 1-based throughout: a t-coloring draws from [1, t].  A coloring is
valid when adjacent edges always differ and every color is used at least
once; `validate` reports violations instead of assuming them away.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, chromatic_index


@dataclass(frozen=True)
class EdgeColoring:
    """Per-edge colors in [1, t], indexed by the graph's edge order."""

    t: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("t must be positive")
        for k, c in enumerate(self.colors):
            if not (1 <= c <= self.t):
                raise ValueError(f"edge {k} has color {c} outside [1,{self.t}]")


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of `validate`, with one entry per offence."""

    adjacency_clashes: tuple[tuple[int, int], ...]
    missing_colors: tuple[int, ...]
    out_of_range: tuple[tuple[int, int], ...]

    @property
    def ok(self) -> bool:
        return not (self.adjacency_clashes or self.missing_colors or self.out_of_range)

    def describe(self) -> str:
        if self.ok:
            return "ok"
        bits = []
        for e1, e2 in self.adjacency_clashes:
            bits.append(f"edges {e1} and {e2} share a vertex and a color")
        for c in self.missing_colors:
            bits.append(f"color {c} unused")
        for e, c in self.out_of_range:
            bits.append(f"edge {e} carries out-of-range color {c}")
        return "; ".join(bits)


class InvalidColoringError(ValueError):
    def __init__(self, report: ValidationReport):
        super().__init__(report.describe())
        self.report = report


def validate(g: Graph, c: EdgeColoring) -> ValidationReport:
    """Check properness and surjectivity; list each offending pair / color."""
    if len(c.colors) != g.edge_count:
        raise ValueError(
            f"coloring has {len(c.colors)} entries for {g.edge_count} edges"
        )
    clashes = []
    out_of_range = []
    for k, col in enumerate(c.colors):
        if not (1 <= col <= c.t):
            out_of_range.append((k, col))
    for v, inc in enumerate(g.incident_edges()):
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                e1, e2 = inc[a], inc[b]
                if c.colors[e1] == c.colors[e2]:
                    clashes.append((min(e1, e2), max(e1, e2)))
    used = set(c.colors)
    missing = tuple(col for col in range(1, c.t + 1) if col not in used)
    return ValidationReport(tuple(sorted(set(clashes))), missing, tuple(out_of_range))


def require_valid(g: Graph, c: EdgeColoring) -> None:
    report = validate(g, c)
    if not report.ok:
        raise InvalidColoringError(report)


def spectrum(g: Graph, c: EdgeColoring, x: int) -> tuple[int, ...]:
    """Sorted colors on the edges incident to x."""
    if not (0 <= x < g.vertex_count):
        raise ValueError(f"vertex {x} out of range")
    cols = [c.colors[k] for k, (u, v) in enumerate(g.edges) if x in (u, v)]
    return tuple(sorted(cols))


def is_interval(colors) -> bool:
    """True iff the color set consists of consecutive integers."""
    s = set(colors)
    if not s:
        raise ValueError("the empty set is not an interval candidate")
    return max(s) - min(s) + 1 == len(s)


@dataclass(frozen=True)
class SpectrumSummary:
    """Per-vertex spectra plus the set and count of interval-spectrum vertices."""

    spectra: tuple[tuple[int, ...], ...]
    interval_flags: tuple[bool, ...]
    interval_vertices: frozenset[int]
    interval_count: int


def summarize(g: Graph, c: EdgeColoring) -> SpectrumSummary:
    """Spectra of all vertices with interval flags; validates the coloring first."""
    require_valid(g, c)
    spectra = []
    per_vertex: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for k, (u, v) in enumerate(g.edges):
        per_vertex[u].append(c.colors[k])
        per_vertex[v].append(c.colors[k])
    flags = []
    for cols in per_vertex:
        spectra.append(tuple(sorted(cols)))
        flags.append(bool(cols) and max(cols) - min(cols) + 1 == len(set(cols)))
    interval_vertices = frozenset(i for i, f in enumerate(flags) if f)
    return SpectrumSummary(
        tuple(spectra), tuple(flags), interval_vertices, len(interval_vertices)
    )


def is_interval_on(g: Graph, c: EdgeColoring, r) -> bool:
    """True iff every vertex of r has an interval spectrum (vacuous for empty r)."""
    summary = summarize(g, c)
    return all(v in summary.interval_vertices for v in r)


def color_class(g: Graph, c: EdgeColoring, j: int) -> frozenset[int]:
    """Edge indices carrying color j."""
    if not (1 <= j <= c.t):
        raise ValueError(f"color {j} outside [1,{c.t}]")
    return frozenset(k for k, col in enumerate(c.colors) if col == j)


def is_harmonic(g: Graph, c: EdgeColoring) -> bool:
    """True iff colors congruent mod the maximum degree always form a matching.

    Defined only for graphs whose chromatic index equals the maximum degree;
    each vertex may then see at most one color from every residue class.
    """
    delta = g.max_degree()
    if chromatic_index(g) != delta:
        raise ValueError("harmonic colorings need chromatic index == max degree")
    require_valid(g, c)
    for v, inc in enumerate(g.incident_edges()):
        residues = [(c.colors[k] - 1) % delta for k in inc]
        if len(residues) != len(set(residues)):
            return False
    return True


def coloring_to_json(c: EdgeColoring) -> dict:
    return {"t": c.t, "colors": list(c.colors)}


def coloring_from_json(doc: dict) -> EdgeColoring:
    try:
        t = int(doc["t"])
        colors = tuple(int(x) for x in doc["colors"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed coloring document: {exc}") from exc
    return EdgeColoring(t, colors)


def to_dot(g: Graph, c: EdgeColoring | None = None) -> str:
    """DOT export; edge labels carry colors, interval vertices get double rings."""
    lines = ["graph G {", "  node [shape=circle];"]
    interval: frozenset[int] = frozenset()
    if c is not None:
        interval = summarize(g, c).interval_vertices
    ranks: dict[int, str] = {}
    if g.part_labels is not None:
        for side in ("X", "Y"):
            for i, v in enumerate(sorted(g.part(side)), start=1):
                ranks[v] = f"{side.lower()}{i}"
    for v in range(g.vertex_count):
        if g.part_labels is not None:
            label = ranks[v]
        else:
            label = str(v)
        attrs = [f'label="{label}"']
        if v in interval:
            attrs.append("peripheries=2")
        lines.append(f"  {v} [{', '.join(attrs)}];")
    for k, (u, v) in enumerate(g.edges):
        if c is not None:
            lines.append(f'  {u} -- {v} [label="{c.colors[k]}"];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"

"""Edge-coloured multigraphs: representation, statistics and matching predicates."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

__all__ = [
    "InvalidInstanceError",
    "Edge",
    "ColouredMultigraph",
    "ColourStats",
    "build_graph",
    "max_degree",
    "colour_stats",
    "bipartition",
    "verify_matching",
    "is_full_rainbow",
    "graph_to_json",
    "graph_from_json",
    "graph_to_dot",
    "DOT_PALETTE",
]


class InvalidInstanceError(ValueError):
    """A graph or hypergraph violates one of its structural invariants."""


@dataclass(frozen=True)
class Edge:
    """One coloured edge; endpoints are unordered but stored as given."""

    u: int
    v: int
    colour: int


@dataclass(frozen=True)
class ColouredMultigraph:
    """An edge-coloured multigraph on dense integer identifiers.

    Vertices are ``0..vertex_count-1`` and colours ``0..colour_count-1``.
    Edge identity is the position in ``edges``: parallel edges are distinct
    and matchings reference edges by index.  Instances are immutable and
    fully validated on construction, so they are safe to share between
    concurrent workers.

    Invariants enforced here: endpoints and colours in range, no self-loops,
    and every colour in range appears on at least one edge.
    """

    vertex_count: int
    colour_count: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 0 or self.colour_count < 0:
            raise InvalidInstanceError("vertex and colour counts must be non-negative")
        seen_colours = [False] * self.colour_count
        for i, e in enumerate(self.edges):
            if not (0 <= e.u < self.vertex_count) or not (0 <= e.v < self.vertex_count):
                raise InvalidInstanceError(
                    f"edge {i} endpoint out of range: ({e.u},{e.v}) with {self.vertex_count} vertices"
                )
            if e.u == e.v:
                raise InvalidInstanceError(f"edge {i} is a self-loop at vertex {e.u}")
            if not (0 <= e.colour < self.colour_count):
                raise InvalidInstanceError(
                    f"edge {i} colour out of range: {e.colour} with {self.colour_count} colours"
                )
            seen_colours[e.colour] = True
        for c, seen in enumerate(seen_colours):
            if not seen:
                raise InvalidInstanceError(f"colour {c} appears on no edge")

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def build_graph(
    vertex_count: int,
    colour_count: int,
    edges: Iterable[tuple[int, int, int]],
) -> ColouredMultigraph:
    """Build a validated graph from ``(u, v, colour)`` triples, preserving order."""
    return ColouredMultigraph(
        vertex_count=vertex_count,
        colour_count=colour_count,
        edges=tuple(Edge(u, v, colour) for (u, v, colour) in edges),
    )


def max_degree(graph: ColouredMultigraph) -> int:
    """Maximum number of incident edges over all vertices.

    Parallel edges count with multiplicity; an edgeless graph has degree 0.
    """
    if graph.vertex_count == 0:
        return 0
    degree = [0] * graph.vertex_count
    for e in graph.edges:
        degree[e.u] += 1
        degree[e.v] += 1
    return max(degree)


class ColourStats(NamedTuple):
    multiplicities: dict[int, int]
    minimum: int


def colour_stats(graph: ColouredMultigraph) -> ColourStats:
    """Per-colour edge multiplicities and the minimum over all colours.

    The minimum is 0 only for a graph with no colours at all; otherwise every
    colour has multiplicity at least 1 by construction.
    """
    multiplicities = {c: 0 for c in range(graph.colour_count)}
    for e in graph.edges:
        multiplicities[e.colour] += 1
    minimum = min(multiplicities.values()) if multiplicities else 0
    return ColourStats(multiplicities, minimum)


def bipartition(graph: ColouredMultigraph) -> Optional[tuple[set[int], set[int]]]:
    """Two-colour the graph, or return None if some component has an odd cycle.

    Within each component the smallest vertex identifier goes on the left
    side, which makes the partition deterministic.  Isolated vertices are
    their own components and land on the left.
    """
    adjacency: list[list[int]] = [[] for _ in range(graph.vertex_count)]
    for e in graph.edges:
        adjacency[e.u].append(e.v)
        adjacency[e.v].append(e.u)
    side = [-1] * graph.vertex_count
    for start in range(graph.vertex_count):
        if side[start] != -1:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adjacency[x]:
                if side[y] == -1:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return None
    left = {v for v in range(graph.vertex_count) if side[v] == 0}
    right = {v for v in range(graph.vertex_count) if side[v] == 1}
    return left, right


def _check_indices(graph: ColouredMultigraph, edge_indices: Iterable[int]) -> list[int]:
    indices = list(edge_indices)
    for i in indices:
        if not (0 <= i < len(graph.edges)):
            raise IndexError(f"edge index {i} out of range for {len(graph.edges)} edges")
    return indices


def verify_matching(graph: ColouredMultigraph, edge_indices: Iterable[int]) -> bool:
    """True iff the referenced edges are pairwise vertex-disjoint."""
    occupied: set[int] = set()
    for i in _check_indices(graph, edge_indices):
        e = graph.edges[i]
        if e.u in occupied or e.v in occupied:
            return False
        occupied.add(e.u)
        occupied.add(e.v)
    return True


def is_full_rainbow(graph: ColouredMultigraph, edge_indices: Iterable[int]) -> bool:
    """True iff the edges form a matching with exactly one edge of every colour."""
    indices = _check_indices(graph, edge_indices)
    if not verify_matching(graph, indices):
        return False
    counts = [0] * graph.colour_count
    for i in indices:
        counts[graph.edges[i].colour] += 1
    return all(count == 1 for count in counts)


# --- serialization -----------------------------------------------------------

def graph_to_json(graph: ColouredMultigraph) -> dict:
    """JSON-compatible dict; edge order is significant and preserved."""
    return {
        "vertices": graph.vertex_count,
        "colours": graph.colour_count,
        "edges": [{"u": e.u, "v": e.v, "colour": e.colour} for e in graph.edges],
    }


def graph_from_json(data: object) -> ColouredMultigraph:
    """Parse and validate the instance format produced by :func:`graph_to_json`."""
    if not isinstance(data, dict):
        raise InvalidInstanceError("graph JSON must be an object")
    try:
        vertices = data["vertices"]
        colours = data["colours"]
        raw_edges = data["edges"]
        edges = [(e["u"], e["v"], e["colour"]) for e in raw_edges]
    except (KeyError, TypeError) as exc:
        raise InvalidInstanceError(f"malformed graph JSON: {exc}") from exc
    if not isinstance(vertices, int) or not isinstance(colours, int):
        raise InvalidInstanceError("graph JSON counts must be integers")
    for u, v, c in edges:
        if not (isinstance(u, int) and isinstance(v, int) and isinstance(c, int)):
            raise InvalidInstanceError("graph JSON edge fields must be integers")
    return build_graph(vertices, colours, edges)


# Fixed palette for DOT output; colour identifiers cycle through it by index.
DOT_PALETTE = (
    "blue",
    "red",
    "green",
    "orange",
    "purple",
    "brown",
    "cyan",
    "magenta",
    "gold",
    "darkgreen",
    "navy",
    "salmon",
    "turquoise",
    "violet",
    "olive",
    "black",
)


def graph_to_dot(graph: ColouredMultigraph) -> str:
    """Render the graph in DOT, one edge per line with color and label attributes."""
    lines = ["graph G {"]
    for v in range(graph.vertex_count):
        lines.append(f"  {v};")
    for e in graph.edges:
        name = DOT_PALETTE[e.colour % len(DOT_PALETTE)]
        lines.append(f'  {e.u} -- {e.v} [color={name}, label="{e.colour}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

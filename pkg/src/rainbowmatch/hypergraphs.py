"""Correspondence between edge-coloured graphs and 3-uniform hypergraphs.

A coloured graph G maps to a hypergraph H whose vertices are the vertices of
G together with one new vertex per colour (the class V1).  Each coloured edge
{u, v} with colour c becomes the hyperedge {c, u, v}, so a full rainbow
matching of G is exactly a matching of H covering all of V1.  When G is
bipartite the hypergraph is tripartite with V2 and V3 the two sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from . import solver
from .graphs import ColouredMultigraph, InvalidInstanceError, bipartition, build_graph

__all__ = [
    "TripartiteHypergraph",
    "NotTripartiteError",
    "ConversionMaps",
    "GraphConversion",
    "DegreeStats",
    "from_coloured_graph",
    "to_coloured_graph",
    "degree_stats",
    "has_v1_matching",
    "solve_v1_matching",
    "hypergraph_to_json",
    "hypergraph_from_json",
]


class NotTripartiteError(ValueError):
    """An operation requiring a tripartite hypergraph received a merged-pool one."""


@dataclass(frozen=True)
class TripartiteHypergraph:
    """3-uniform hypergraph with a distinguished colour class V1.

    When ``tripartite`` is True, every triple (a, b, c) meets V1, V2 and V3
    exactly once.  When it is False (the underlying graph was not bipartite),
    b and c both index a single merged vertex pool of size ``v2_count`` and
    ``v3_count`` is 0.
    """

    v1_count: int
    v2_count: int
    v3_count: int
    triples: tuple[tuple[int, int, int], ...]
    tripartite: bool

    def __post_init__(self) -> None:
        if min(self.v1_count, self.v2_count, self.v3_count) < 0:
            raise InvalidInstanceError("class sizes must be non-negative")
        if not self.tripartite and self.v3_count != 0:
            raise InvalidInstanceError("merged-pool hypergraphs must have v3_count == 0")
        covered = [False] * self.v1_count
        pool = self.v2_count if not self.tripartite else 0
        for i, (a, b, c) in enumerate(self.triples):
            if not (0 <= a < self.v1_count):
                raise InvalidInstanceError(f"triple {i}: V1 index {a} out of range")
            if self.tripartite:
                if not (0 <= b < self.v2_count) or not (0 <= c < self.v3_count):
                    raise InvalidInstanceError(f"triple {i}: V2/V3 index out of range")
            else:
                if not (0 <= b < pool) or not (0 <= c < pool):
                    raise InvalidInstanceError(f"triple {i}: pool index out of range")
                if b == c:
                    raise InvalidInstanceError(f"triple {i}: repeated pool vertex {b}")
            covered[a] = True
        for a, seen in enumerate(covered):
            if not seen:
                raise InvalidInstanceError(f"V1 vertex {a} occurs in no triple")

    @property
    def triple_count(self) -> int:
        return len(self.triples)


@dataclass(frozen=True)
class DegreeStats:
    """Minimum degree over V1 and maximum degree over everything else."""

    delta_v1: int
    delta_max_rest: int


class ConversionMaps(NamedTuple):
    """How original identifiers map into the hypergraph classes.

    Colours map to V1 by identity.  Non-isolated graph vertices map into V2
    (left side, or the whole merged pool) or V3 (right side); isolated
    vertices are dropped because degree-0 vertices outside V1 affect no
    statistic of interest, so they appear in ``dropped_vertices`` only.
    """

    colour_to_v1: dict[int, int]
    vertex_to_v2: dict[int, int]
    vertex_to_v3: dict[int, int]
    dropped_vertices: tuple[int, ...]


class GraphConversion(NamedTuple):
    hypergraph: TripartiteHypergraph
    maps: ConversionMaps


def from_coloured_graph(graph: ColouredMultigraph) -> GraphConversion:
    """Convert a coloured graph into its hypergraph, one triple per edge.

    Triples follow edge order.  If the graph is bipartite the result is
    tripartite with V2/V3 the two sides (each indexed in ascending original
    identifier); otherwise all vertices share one merged pool and the
    ``tripartite`` flag is False.
    """
    isolated = set(range(graph.vertex_count))
    for e in graph.edges:
        isolated.discard(e.u)
        isolated.discard(e.v)

    sides = bipartition(graph)
    if sides is not None:
        left = sorted(v for v in sides[0] if v not in isolated)
        right = sorted(v for v in sides[1] if v not in isolated)
        v2_index = {v: i for i, v in enumerate(left)}
        v3_index = {v: i for i, v in enumerate(right)}
        triples = []
        for e in graph.edges:
            if e.u in v2_index:
                triples.append((e.colour, v2_index[e.u], v3_index[e.v]))
            else:
                triples.append((e.colour, v2_index[e.v], v3_index[e.u]))
        hypergraph = TripartiteHypergraph(
            v1_count=graph.colour_count,
            v2_count=len(left),
            v3_count=len(right),
            triples=tuple(triples),
            tripartite=True,
        )
    else:
        pool = sorted(v for v in range(graph.vertex_count) if v not in isolated)
        v2_index = {v: i for i, v in enumerate(pool)}
        v3_index = {}
        hypergraph = TripartiteHypergraph(
            v1_count=graph.colour_count,
            v2_count=len(pool),
            v3_count=0,
            triples=tuple((e.colour, v2_index[e.u], v2_index[e.v]) for e in graph.edges),
            tripartite=False,
        )
    maps = ConversionMaps(
        colour_to_v1={c: c for c in range(graph.colour_count)},
        vertex_to_v2=v2_index,
        vertex_to_v3=v3_index,
        dropped_vertices=tuple(sorted(isolated)),
    )
    return GraphConversion(hypergraph, maps)


def to_coloured_graph(hypergraph: TripartiteHypergraph) -> ColouredMultigraph:
    """Reconstruct the coloured graph of a tripartite hypergraph.

    V2 vertices come first (0..v2_count-1), then V3; triple (a, b, c) becomes
    the edge (b, v2_count + c) with colour a, preserving triple order.  This
    round-trips with :func:`from_coloured_graph` up to the returned index
    maps.
    """
    if not hypergraph.tripartite:
        raise NotTripartiteError("cannot reconstruct a coloured graph from a merged-pool hypergraph")
    return build_graph(
        hypergraph.v2_count + hypergraph.v3_count,
        hypergraph.v1_count,
        [(b, hypergraph.v2_count + c, a) for (a, b, c) in hypergraph.triples],
    )


def degree_stats(hypergraph: TripartiteHypergraph) -> DegreeStats:
    """Minimum triple-degree over V1, maximum over the remaining vertices.

    Degenerate empty classes report 0.
    """
    v1_degree = [0] * hypergraph.v1_count
    rest_degree = [0] * (hypergraph.v2_count + hypergraph.v3_count)
    for a, b, c in hypergraph.triples:
        v1_degree[a] += 1
        rest_degree[b] += 1
        if hypergraph.tripartite:
            rest_degree[hypergraph.v2_count + c] += 1
        else:
            rest_degree[c] += 1
    return DegreeStats(
        delta_v1=min(v1_degree) if v1_degree else 0,
        delta_max_rest=max(rest_degree) if rest_degree else 0,
    )


def solve_v1_matching(hypergraph: TripartiteHypergraph) -> solver.SolveOutcome:
    """Full solve outcome for the V1-matching decision (indices are triples).

    Tripartite instances delegate to the graph solver on the reconstructed
    graph, whose edge indices coincide with triple indices.  Merged-pool
    instances run the same backtracking directly over the triples.
    """
    if hypergraph.tripartite:
        return solver.find_full_rainbow_matching(to_coloured_graph(hypergraph))
    items = [(a, b, c) for (a, b, c) in hypergraph.triples]
    matching, nodes = solver.search_one_per_class(
        hypergraph.v2_count, hypergraph.v1_count, items
    )
    return solver.SolveOutcome(
        matching=matching, nodes_explored=nodes, exhaustive=matching is None
    )


def has_v1_matching(hypergraph: TripartiteHypergraph) -> Optional[frozenset[int]]:
    """A matching covering every V1 vertex exactly once, or None.

    The result is a set of triple indices, deterministic for a given input
    (ties broken towards lower indices).
    """
    return solve_v1_matching(hypergraph).matching


# --- serialization -----------------------------------------------------------

def hypergraph_to_json(hypergraph: TripartiteHypergraph) -> dict:
    return {
        "v1": hypergraph.v1_count,
        "v2": hypergraph.v2_count,
        "v3": hypergraph.v3_count,
        "tripartite": hypergraph.tripartite,
        "triples": [[a, b, c] for (a, b, c) in hypergraph.triples],
    }


def hypergraph_from_json(data: object) -> TripartiteHypergraph:
    if not isinstance(data, dict):
        raise InvalidInstanceError("hypergraph JSON must be an object")
    try:
        v1, v2, v3 = data["v1"], data["v2"], data["v3"]
        tripartite = data["tripartite"]
        triples = [(a, b, c) for (a, b, c) in data["triples"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInstanceError(f"malformed hypergraph JSON: {exc}") from exc
    if not all(isinstance(n, int) for n in (v1, v2, v3)) or not isinstance(tripartite, bool):
        raise InvalidInstanceError("hypergraph JSON fields have wrong types")
    for t in triples:
        if not all(isinstance(n, int) for n in t):
            raise InvalidInstanceError("hypergraph JSON triples must be integers")
    return TripartiteHypergraph(
        v1_count=v1, v2_count=v2, v3_count=v3, triples=tuple(triples), tripartite=tripartite
    )

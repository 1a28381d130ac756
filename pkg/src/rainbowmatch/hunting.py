"""Bounded exhaustive hunter for small blocked instances on 2-regular graphs.

A 2-regular graph is a disjoint union of cycles, so an instance is a multiset
of cycle lengths plus a colour sequence along each cycle.  The hunter sweeps
every such instance up to a size bound, keeps the ones with no full rainbow
matching, and certifies each find with the independent brute-force oracle.

Two instances are considered the same if one maps to the other by rotating or
reflecting individual cycles, permuting cycles of equal length, or renaming
colours.  Deduplication uses the lexicographically minimal representative
under that group; over-enumeration is only ever a performance matter because
emission is keyed on the canonical form.
"""

from __future__ import annotations

import json
import multiprocessing
from dataclasses import dataclass
from typing import Iterator, Optional

from .graphs import (
    ColouredMultigraph,
    bipartition,
    build_graph,
    colour_stats,
    graph_to_json,
)
from .hypergraphs import DegreeStats, degree_stats, from_coloured_graph
from .solver import DEFAULT_BRUTE_LIMIT, brute_force_full_rainbow, find_full_rainbow_matching

__all__ = [
    "SearchSpec",
    "SearchResult",
    "AbsenceCertificate",
    "HuntOutcome",
    "enumerate_two_regular_shapes",
    "enumerate_colourings",
    "canonical_colouring",
    "canonical_label",
    "graph_from_cycle_colouring",
    "hunt",
    "result_record",
    "summary_record",
    "read_certified_forms",
]


@dataclass(frozen=True)
class SearchSpec:
    """Parameters of one hunt.

    ``colour_class_size`` is exact by default (every colour on exactly that
    many edges); with ``class_size_is_minimum`` it becomes a lower bound and
    every feasible colour count is swept.  ``stop_after`` bounds the number of
    emitted instances (checked at work-unit granularity); None means run the
    space to exhaustion.
    """

    max_edges: int
    colour_class_size: int
    require_bipartite: bool = False
    require_delta_gap: bool = False
    class_size_is_minimum: bool = False
    regularity: int = 2
    stop_after: Optional[int] = None

    def __post_init__(self) -> None:
        if self.max_edges < 1:
            raise ValueError("max_edges must be at least 1")
        if self.colour_class_size < 1:
            raise ValueError("colour_class_size must be at least 1")
        if self.regularity != 2:
            raise ValueError("only 2-regular search is supported")
        if self.stop_after is not None and self.stop_after < 1:
            raise ValueError("stop_after must be at least 1 when given")


@dataclass(frozen=True)
class AbsenceCertificate:
    """Record of a completed brute-force enumeration finding zero matchings."""

    combinations: int
    matchings: int


@dataclass(frozen=True)
class SearchResult:
    instance: ColouredMultigraph
    shape: tuple[int, ...]
    stats: DegreeStats
    certificate: AbsenceCertificate
    canonical_form: str


@dataclass(frozen=True)
class HuntOutcome:
    """Findings of one hunt plus the bookkeeping that makes it a certificate.

    ``exhausted`` is True when every work unit in the space was examined; an
    empty result list with ``exhausted`` True is a valid finding (nothing of
    the requested kind exists up to the bound).
    """

    results: tuple[SearchResult, ...]
    candidates_examined: int
    orbits_examined: int
    skipped_known: int
    exhausted: bool


def enumerate_two_regular_shapes(max_edges: int, bipartite: bool) -> list[tuple[int, ...]]:
    """All multisets of cycle lengths with total at most max_edges.

    Cycle lengths are at least 3, and even when ``bipartite`` (odd cycles are
    not 2-colourable).  Ordered by total edges, then number of cycles, then
    lexicographically; each multiset is an ascending tuple.
    """
    if max_edges < 3:
        raise ValueError("max_edges must be at least 3")
    min_part = 4 if bipartite else 3
    shapes: list[tuple[int, ...]] = []

    def extend(remaining: int, min_allowed: int, acc: list[int]) -> None:
        if acc:
            shapes.append(tuple(acc))
        for part in range(min_allowed, remaining + 1):
            if bipartite and part % 2 != 0:
                continue
            acc.append(part)
            extend(remaining - part, part, acc)
            acc.pop()

    extend(max_edges, min_part, [])
    shapes.sort(key=lambda s: (sum(s), len(s), s))
    return shapes


def _dihedral_transforms(block: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All rotations of the block and of its reversal (2L sequences)."""
    length = len(block)
    reverse = block[::-1]
    out = []
    for r in range(length):
        out.append(block[r:] + block[:r])
        out.append(reverse[r:] + reverse[:r])
    return out


def canonical_colouring(
    shape: tuple[int, ...], blocks: tuple[tuple[int, ...], ...]
) -> tuple[tuple[int, ...], ...]:
    """Lexicographically minimal representative of a cycle colouring.

    Minimises the flattened colour sequence over the full symmetry group:
    per-cycle rotations and reflections, permutations of equal-length cycles,
    and colour renaming.  For a fixed geometric arrangement the best renaming
    is the first-occurrence relabelling (colour 0 for the first symbol seen,
    and so on), so the search walks cycle slots left to right keeping every
    arrangement that still achieves the minimal prefix: a slot tries each
    unused cycle of the right length under all its rotations/reflections,
    relabels greedily, and only the tied-minimal extensions survive to the
    next slot.  Equal-length slots are interchangeable, which is exactly the
    cycle-permutation part of the group.
    """
    if len(blocks) != len(shape) or any(len(b) != n for b, n in zip(blocks, shape)):
        raise ValueError("colouring does not match shape")
    # Beam of partial arrangements; all entries share the minimal prefix, so
    # only the new segment needs comparing.  mapping is old colour -> new.
    beam: list[tuple[frozenset[int], dict[int, int], int]] = [(frozenset(), {}, 0)]
    out: list[int] = []
    for slot_length in shape:
        candidates: list[tuple[tuple[int, ...], frozenset[int], dict[int, int], int]] = []
        for used, mapping, next_label in beam:
            for i, block in enumerate(blocks):
                if i in used or len(block) != slot_length:
                    continue
                for transformed in _dihedral_transforms(block):
                    new_map = dict(mapping)
                    label = next_label
                    segment = []
                    for symbol in transformed:
                        if symbol not in new_map:
                            new_map[symbol] = label
                            label += 1
                        segment.append(new_map[symbol])
                    candidates.append((tuple(segment), used | {i}, new_map, label))
        best = min(segment for segment, _, _, _ in candidates)
        out.extend(best)
        survivors = {}
        for segment, used, new_map, label in candidates:
            if segment == best:
                key = (used, tuple(sorted(new_map.items())))
                survivors[key] = (used, new_map, label)
        beam = list(survivors.values())
    flat = tuple(out)
    result = []
    position = 0
    for n in shape:
        result.append(flat[position : position + n])
        position += n
    return tuple(result)


def canonical_label(shape: tuple[int, ...], blocks: tuple[tuple[int, ...], ...]) -> str:
    lengths = ",".join(str(n) for n in shape)
    cycles = "|".join(",".join(str(c) for c in block) for block in blocks)
    return f"{lengths}:{cycles}"


def _count_constrained_strings(
    total: int, colours: int, class_size: int, minimum: bool
) -> Iterator[tuple[int, ...]]:
    """Colour strings with per-class count constraints, lexicographically.

    Only restricted-growth strings are produced (each colour first appears
    after all smaller colours have), which quotients out colour renaming for
    free; geometric symmetry is handled by the canonical check afterwards.
    """
    counts = [0] * colours
    current = [0] * total

    def deficit() -> int:
        return sum(max(0, class_size - k) for k in counts)

    def extend(position: int, used: int) -> Iterator[tuple[int, ...]]:
        if position == total:
            if not minimum or all(k >= class_size for k in counts):
                yield tuple(current)
            return
        for colour in range(min(used + 1, colours - 1) + 1):
            if not minimum and counts[colour] >= class_size:
                continue
            counts[colour] += 1
            # prune unless the remaining positions can still cover every
            # class that is short of its required size
            if deficit() <= total - position - 1:
                current[position] = colour
                yield from extend(position + 1, max(used, colour))
            counts[colour] -= 1

    yield from extend(0, -1)


def _reshape(shape: tuple[int, ...], flat: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    blocks = []
    position = 0
    for n in shape:
        blocks.append(flat[position : position + n])
        position += n
    return tuple(blocks)


def graph_from_cycle_colouring(
    shape: tuple[int, ...], flat: tuple[int, ...], colours: int
) -> ColouredMultigraph:
    """Build the union-of-cycles graph for a flat colour sequence.

    Cycle i occupies a consecutive vertex block; edge j of a length-L cycle
    joins local vertices j and j+1 mod L, so edge order follows the colour
    sequence position by position.
    """
    edges = []
    base = 0
    position = 0
    for length in shape:
        for j in range(length):
            edges.append((base + j, base + (j + 1) % length, flat[position]))
            position += 1
        base += length
    return build_graph(base, colours, edges)


def enumerate_colourings(
    shape: tuple[int, ...], colours: int, class_size: int
) -> Iterator[ColouredMultigraph]:
    """All colourings of the shape with exact class multiplicities, one graph
    per symmetry orbit (canonical representatives, in lexicographic order)."""
    total = sum(shape)
    if any(n < 3 for n in shape):
        raise ValueError("cycle lengths must be at least 3")
    if colours < 1 or class_size < 1 or colours * class_size != total:
        raise ValueError(
            f"infeasible colouring arithmetic: {colours} colours x {class_size} != {total} edges"
        )
    for flat in _count_constrained_strings(total, colours, class_size, minimum=False):
        blocks = _reshape(shape, flat)
        if canonical_colouring(shape, blocks) == blocks:
            yield graph_from_cycle_colouring(shape, flat, colours)


# --- the hunt itself ---------------------------------------------------------

def _work_units(spec: SearchSpec) -> list[tuple[tuple[int, ...], int]]:
    min_part = 4 if spec.require_bipartite else 3
    if spec.max_edges < min_part:
        return []
    units = []
    for shape in enumerate_two_regular_shapes(spec.max_edges, spec.require_bipartite):
        total = sum(shape)
        if spec.class_size_is_minimum:
            colour_counts = range(1, total // spec.colour_class_size + 1)
        elif total % spec.colour_class_size == 0:
            colour_counts = [total // spec.colour_class_size]
        else:
            colour_counts = []
        for k in colour_counts:
            units.append((shape, k))
    return units


def _recheck_structure(spec: SearchSpec, graph: ColouredMultigraph) -> None:
    # Independent re-validation of every emitted instance.
    degree = [0] * graph.vertex_count
    for e in graph.edges:
        degree[e.u] += 1
        degree[e.v] += 1
    if any(d != 2 for d in degree):
        raise RuntimeError("emitted instance is not 2-regular")
    if spec.require_bipartite and bipartition(graph) is None:
        raise RuntimeError("emitted instance is not bipartite")
    stats = colour_stats(graph)
    sizes = stats.multiplicities.values()
    if spec.class_size_is_minimum:
        ok = all(s >= spec.colour_class_size for s in sizes)
    else:
        ok = all(s == spec.colour_class_size for s in sizes)
    if not ok:
        raise RuntimeError("emitted instance violates the colour class size constraint")


def _examine_unit(
    args: tuple[SearchSpec, tuple[int, ...], int, frozenset[str], int],
) -> tuple[list[SearchResult], int, int, int]:
    spec, shape, colours, skip_forms, brute_limit = args
    results: list[SearchResult] = []
    candidates = orbits = skipped = 0
    for flat in _count_constrained_strings(
        sum(shape), colours, spec.colour_class_size, spec.class_size_is_minimum
    ):
        candidates += 1
        blocks = _reshape(shape, flat)
        if canonical_colouring(shape, blocks) != blocks:
            continue
        orbits += 1
        label = canonical_label(shape, blocks)
        if label in skip_forms:
            skipped += 1
            continue
        graph = graph_from_cycle_colouring(shape, flat, colours)
        stats = degree_stats(from_coloured_graph(graph).hypergraph)
        if spec.require_delta_gap and stats.delta_v1 <= stats.delta_max_rest:
            continue
        if find_full_rainbow_matching(graph).matching is not None:
            continue
        outcome, matching_count = brute_force_full_rainbow(graph, brute_limit)
        if matching_count != 0 or outcome.matching is not None:
            raise RuntimeError(f"backtracking and brute force disagree on {label}")
        if stats.delta_v1 >= 2 * stats.delta_max_rest:
            # Contradicts the proved 2*Delta degree threshold; a find here
            # means the solver is broken, not that the theorem fell.
            raise RuntimeError(f"blocked instance with delta(V1) >= 2*Delta found: {label}")
        _recheck_structure(spec, graph)
        results.append(
            SearchResult(
                instance=graph,
                shape=shape,
                stats=stats,
                certificate=AbsenceCertificate(
                    combinations=outcome.nodes_explored, matchings=0
                ),
                canonical_form=label,
            )
        )
    return results, candidates, orbits, skipped


def hunt(
    spec: SearchSpec,
    jobs: int = 1,
    skip_forms: Optional[set[str]] = None,
    brute_limit: int = DEFAULT_BRUTE_LIMIT,
) -> HuntOutcome:
    """Sweep the shape x colouring space and return verified blocked instances.

    Results arrive in canonical order (total edges, then cycle count, then
    shape, then colour sequence) and the order never depends on ``jobs``:
    the space is split into (shape, colour count) work units processed or
    merged in that fixed order, and ``stop_after`` cuts at unit boundaries.
    Forms in ``skip_forms`` (from a previous run's records) are not re-solved.
    """
    frozen_skip = frozenset(skip_forms or ())
    units = _work_units(spec)
    payloads = [(spec, shape, k, frozen_skip, brute_limit) for shape, k in units]

    results: list[SearchResult] = []
    candidates = orbits = skipped = 0
    consumed = 0

    def consume(unit_output: tuple[list[SearchResult], int, int, int]) -> bool:
        nonlocal candidates, orbits, skipped, consumed
        unit_results, unit_candidates, unit_orbits, unit_skipped = unit_output
        results.extend(unit_results)
        candidates += unit_candidates
        orbits += unit_orbits
        skipped += unit_skipped
        consumed += 1
        return spec.stop_after is not None and len(results) >= spec.stop_after

    if jobs <= 1 or len(payloads) <= 1:
        for payload in payloads:
            if consume(_examine_unit(payload)):
                break
    else:
        with multiprocessing.Pool(processes=jobs) as pool:
            for unit_output in pool.imap(_examine_unit, payloads):
                if consume(unit_output):
                    break

    exhausted = consumed == len(payloads)
    if spec.stop_after is not None:
        results = results[: spec.stop_after]
    return HuntOutcome(
        results=tuple(results),
        candidates_examined=candidates,
        orbits_examined=orbits,
        skipped_known=skipped,
        exhausted=exhausted,
    )


# --- JSON-lines persistence ---------------------------------------------------

def result_record(result: SearchResult) -> dict:
    return {
        "type": "result",
        "canonical": result.canonical_form,
        "shape": list(result.shape),
        "edges_total": sum(result.shape),
        "delta_v1": result.stats.delta_v1,
        "delta_max_rest": result.stats.delta_max_rest,
        "certificate": {
            "combinations": result.certificate.combinations,
            "matchings": result.certificate.matchings,
        },
        "instance": graph_to_json(result.instance),
    }


def summary_record(outcome: HuntOutcome, spec: SearchSpec) -> dict:
    return {
        "type": "summary",
        "max_edges": spec.max_edges,
        "colour_class_size": spec.colour_class_size,
        "class_size_is_minimum": spec.class_size_is_minimum,
        "require_bipartite": spec.require_bipartite,
        "require_delta_gap": spec.require_delta_gap,
        "results": len(outcome.results),
        "candidates_examined": outcome.candidates_examined,
        "orbits_examined": outcome.orbits_examined,
        "skipped_known": outcome.skipped_known,
        "exhausted": outcome.exhausted,
    }


def read_certified_forms(lines: Iterator[str]) -> set[str]:
    """Canonical forms of already-certified results in a JSON-lines stream."""
    forms = set()
    for line in lines:
        line = line.strip()
        if not line:
            continue
        record = json.loads(line)
        if record.get("type") == "result":
            forms.add(record["canonical"])
    return forms

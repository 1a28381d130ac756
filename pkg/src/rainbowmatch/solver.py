"""Exact search for full rainbow matchings, plus an independent brute-force oracle.

The decision problem is NP-hard in general, so nothing here carries a
polynomial-time guarantee; the node counter and the guard on the brute-force
enumeration keep the cost observable.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .graphs import ColouredMultigraph

__all__ = [
    "SolveOutcome",
    "BruteForceLimitError",
    "DEFAULT_BRUTE_LIMIT",
    "find_full_rainbow_matching",
    "max_rainbow_matching",
    "brute_force_full_rainbow",
]

DEFAULT_BRUTE_LIMIT = 10**8


class BruteForceLimitError(RuntimeError):
    """The brute-force product exceeds the guard; raise the limit deliberately."""

    def __init__(self, product: int, limit: int):
        super().__init__(
            f"brute-force enumeration refused: product of colour-class sizes is "
            f"{product}, which exceeds the limit {limit}"
        )
        self.product = product
        self.limit = limit


@dataclass(frozen=True)
class SolveOutcome:
    """Result of one solve: a witness matching, or a certified absence.

    ``exhaustive`` is True when the whole search space was covered, which is
    always the case when ``matching`` is None; a backtracking run that stops
    at its first witness reports False.
    """

    matching: Optional[frozenset[int]]
    nodes_explored: int
    exhaustive: bool


def search_one_per_class(
    pool_size: int,
    class_count: int,
    items: Sequence[tuple[int, int, int]],
) -> tuple[Optional[frozenset[int]], int]:
    """Backtracking core shared by the graph and hypergraph solvers.

    ``items`` are ``(class_id, x, y)`` with ``x, y`` drawn from a common pool
    of ``pool_size`` vertices.  The search must pick exactly one item per
    class such that no pool vertex is used twice.

    Classes are processed in ascending (size, class id) order, items within a
    class in sequence order, so identical inputs always produce identical
    witnesses.  After each placement, any unassigned class whose items are all
    blocked by occupied vertices prunes the branch.
    """
    by_class: list[list[tuple[int, int, int]]] = [[] for _ in range(class_count)]
    for index, (class_id, x, y) in enumerate(items):
        by_class[class_id].append((index, x, y))
    order = sorted(range(class_count), key=lambda c: (len(by_class[c]), c))

    occupied = bytearray(pool_size)
    chosen: list[int] = []
    nodes = 0

    def class_has_free_item(c: int) -> bool:
        for _, x, y in by_class[c]:
            if not occupied[x] and not occupied[y]:
                return True
        return False

    def descend(depth: int) -> bool:
        nonlocal nodes
        nodes += 1
        if depth == class_count:
            return True
        for index, x, y in by_class[order[depth]]:
            if occupied[x] or occupied[y]:
                continue
            occupied[x] = occupied[y] = 1
            chosen.append(index)
            viable = all(
                class_has_free_item(order[d]) for d in range(depth + 1, class_count)
            )
            if viable and descend(depth + 1):
                return True
            chosen.pop()
            occupied[x] = occupied[y] = 0
        return False

    if descend(0):
        return frozenset(chosen), nodes
    return None, nodes


def find_full_rainbow_matching(graph: ColouredMultigraph) -> SolveOutcome:
    """Decide by complete backtracking whether a full rainbow matching exists.

    Returns a witness (as edge indices) when one exists; otherwise absence is
    certified by exhausting the pruned search tree.  The empty graph has the
    empty matching: with no colours the requirement is vacuous.
    """
    items = [(e.colour, e.u, e.v) for e in graph.edges]
    matching, nodes = search_one_per_class(graph.vertex_count, graph.colour_count, items)
    return SolveOutcome(
        matching=matching,
        nodes_explored=nodes,
        exhaustive=matching is None,
    )


def max_rainbow_matching(graph: ColouredMultigraph) -> tuple[int, frozenset[int]]:
    """Largest set of pairwise-disjoint edges with pairwise-distinct colours.

    Branch and bound over the same static colour order as
    :func:`find_full_rainbow_matching`; each colour is either represented by
    one of its free edges (tried in sequence order) or skipped.  The bound at
    a node is the selected count plus the number of later colours that still
    have a free edge, which can never be exceeded below that node.  The
    witness is deterministic: the first maximum-size set in search order.
    """
    by_class: list[list[tuple[int, int, int]]] = [[] for _ in range(graph.colour_count)]
    for index, e in enumerate(graph.edges):
        by_class[e.colour].append((index, e.u, e.v))
    order = sorted(range(graph.colour_count), key=lambda c: (len(by_class[c]), c))

    occupied = bytearray(graph.vertex_count)
    chosen: list[int] = []
    best_size = 0
    best: frozenset[int] = frozenset()

    def free_classes_from(depth: int) -> int:
        count = 0
        for d in range(depth, graph.colour_count):
            for _, x, y in by_class[order[d]]:
                if not occupied[x] and not occupied[y]:
                    count += 1
                    break
        return count

    def descend(depth: int) -> None:
        nonlocal best_size, best
        if len(chosen) > best_size:
            best_size = len(chosen)
            best = frozenset(chosen)
        if depth == graph.colour_count or best_size == graph.colour_count:
            return
        if len(chosen) + free_classes_from(depth) <= best_size:
            return
        for index, x, y in by_class[order[depth]]:
            if occupied[x] or occupied[y]:
                continue
            occupied[x] = occupied[y] = 1
            chosen.append(index)
            descend(depth + 1)
            chosen.pop()
            occupied[x] = occupied[y] = 0
        descend(depth + 1)

    descend(0)
    return best_size, best


def brute_force_full_rainbow(
    graph: ColouredMultigraph,
    limit: int = DEFAULT_BRUTE_LIMIT,
) -> tuple[SolveOutcome, int]:
    """Enumerate every one-edge-per-colour combination and count the matchings.

    This is the verification oracle: no pruning, no shared code with the
    backtracking search.  The Cartesian product of colour-class sizes must
    not exceed ``limit``, otherwise a :class:`BruteForceLimitError` carrying
    the computed product is raised so the caller can raise the limit
    deliberately.

    Returns the outcome (with the lexicographically first matching as
    witness) and the total number of full rainbow matchings.
    """
    classes: list[list[int]] = [[] for _ in range(graph.colour_count)]
    for index, e in enumerate(graph.edges):
        classes[e.colour].append(index)
    product = math.prod(len(c) for c in classes)
    if product > limit:
        raise BruteForceLimitError(product, limit)

    masks = [(1 << e.u) | (1 << e.v) for e in graph.edges]
    count = 0
    witness: Optional[frozenset[int]] = None
    for combo in itertools.product(*classes):
        used = 0
        for index in combo:
            mask = masks[index]
            if used & mask:
                break
            used |= mask
        else:
            count += 1
            if witness is None:
                witness = frozenset(combo)
    outcome = SolveOutcome(matching=witness, nodes_explored=product, exhaustive=True)
    return outcome, count

"""Spanning trees, spanning quasi-trees and forests.

Subsets are streamed in canonical subset order: by size, then
lexicographically in the natural edge order.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

from .core import ArrowPresentation, PresentationError
from .topology import boundary_count, is_connected
from .twist import delete

__all__ = [
    "all_subsets",
    "spanning_subgraph",
    "spanning_trees",
    "spanning_quasi_trees",
    "forests",
    "edge_ends",
]


def all_subsets(edges: Iterable[str]) -> Iterator[frozenset[str]]:
    edges = list(edges)
    for r in range(len(edges) + 1):
        for combo in combinations(edges, r):
            yield frozenset(combo)


def spanning_subgraph(p: ArrowPresentation, subset: Iterable[str]) -> ArrowPresentation:
    """G[A]: keep every circle, drop the edges outside ``subset``."""
    keep = frozenset(subset)
    return delete(p, [e for e in p.edges if e not in keep])


def edge_ends(p: ArrowPresentation) -> dict[str, tuple[int, int]]:
    """Edge -> indices of the circles holding its two arrows."""
    ends: dict[str, list[int]] = {}
    for ci, c in enumerate(p.circles):
        for o in c.word:
            ends.setdefault(o.edge, []).append(ci)
    return {e: (a, b) for e, (a, b) in ends.items()}


def _is_forest(n: int, ends: list[tuple[int, int]]) -> bool:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in ends:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def _require_connected(p: ArrowPresentation) -> None:
    if not is_connected(p):
        raise PresentationError("presentation is not connected")


def spanning_trees(p: ArrowPresentation) -> Iterator[frozenset[str]]:
    _require_connected(p)
    ends = edge_ends(p)
    n = p.num_circles
    candidates = [e for e in p.edges if ends[e][0] != ends[e][1]]
    for combo in combinations(candidates, n - 1):
        if _is_forest(n, [ends[e] for e in combo]):
            yield frozenset(combo)


def forests(p: ArrowPresentation) -> Iterator[frozenset[str]]:
    ends = edge_ends(p)
    n = p.num_circles
    candidates = [e for e in p.edges if ends[e][0] != ends[e][1]]
    for r in range(min(n - 1, len(candidates)) + 1):
        for combo in combinations(candidates, r):
            if _is_forest(n, [ends[e] for e in combo]):
                yield frozenset(combo)


def spanning_quasi_trees(p: ArrowPresentation) -> Iterator[frozenset[str]]:
    _require_connected(p)
    for a in all_subsets(p.edges):
        if boundary_count(spanning_subgraph(p, a)) == 1:
            yield a

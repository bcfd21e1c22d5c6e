"""Checkerboard colourable partial Petrials of Eulerian ribbon graphs.

Fix a spanning tree T.  Dualising T gives a bouquet whose word holds the
non-tree arrows ("live") and the tree arrows, which are kept only as position
markers.  Vertex arcs are the gaps between consecutive live arrows; markers
lie inside arcs.  For a live edge e, t(e) is 0 when the arcs at head(e') and
tail(e'') are an odd number of arcs apart counted inclusively, 1 otherwise.
The colourable partial Petrials are exactly base Δ (Δ of adjoint sets over
S) for S ranging over the subsets of T.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from .core import ArrowPresentation, Occurrence, PresentationError, edge_key
from .spanning import edge_ends, spanning_trees, _is_forest
from .topology import is_connected, is_eulerian
from .twist import partial_dual

__all__ = [
    "MarkedBouquet",
    "AdjointSet",
    "contract_to_marked_bouquet",
    "t_index",
    "vertex_arc_separation",
    "base_set",
    "adjoint_set",
    "adjoint_sets",
    "combine",
    "PetrialEnumeration",
    "cc_petrial_enumeration",
    "enumerate_cc_petrials",
]


@dataclass(frozen=True)
class MarkedBouquet:
    word: tuple[Occurrence, ...]
    tree: frozenset[str]

    @property
    def live_word(self) -> tuple[Occurrence, ...]:
        return tuple(o for o in self.word if o.edge not in self.tree)

    def is_marker(self, i: int) -> bool:
        return self.word[i].edge in self.tree

    def positions(self, e: str) -> tuple[int, int]:
        pos = [i for i, o in enumerate(self.word) if o.edge == e]
        if len(pos) != 2:
            raise PresentationError(f"unknown edge label: {e}")
        return pos[0], pos[1]


@dataclass(frozen=True)
class AdjointSet:
    tree_edge: str
    members: frozenset[str]


def _require_tree(p: ArrowPresentation, tree: Iterable[str]) -> frozenset[str]:
    t = frozenset(tree)
    if not t <= set(p.edges):
        raise PresentationError("tree mentions unknown edges")
    ends = edge_ends(p)
    if len(t) != p.num_circles - 1 or not _is_forest(p.num_circles, [ends[e] for e in t]):
        raise PresentationError(
            "not a spanning tree: " + ",".join(sorted(t, key=edge_key))
        )
    return t


def contract_to_marked_bouquet(p: ArrowPresentation, tree: Iterable[str]) -> MarkedBouquet:
    if not is_connected(p):
        raise PresentationError("presentation is not connected")
    t = _require_tree(p, tree)
    b = partial_dual(p, t)
    assert b.num_circles == 1
    return MarkedBouquet(b.circles[0].word, t)


def _live_positions(mb: MarkedBouquet) -> list[int]:
    return [i for i in range(len(mb.word)) if not mb.is_marker(i)]


def vertex_arc_separation(mb: MarkedBouquet, e: str) -> int:
    """Arcs from the one at head(e') to the one at tail(e''), both counted,
    walking forward along the circle."""
    if e in mb.tree:
        raise PresentationError(f"{e} is a tree edge")
    live = mb.live_word
    n = len(live)
    i, j = [k for k, o in enumerate(live) if o.edge == e]
    # arc r lies after live arrow r
    head_arc = i if live[i].sign == "+" else (i - 1) % n
    tail_arc = (j - 1) % n if live[j].sign == "+" else j
    return (tail_arc - head_arc) % n + 1


def t_index(mb: MarkedBouquet, e: str) -> int:
    return 0 if vertex_arc_separation(mb, e) % 2 else 1


def base_set(mb: MarkedBouquet) -> frozenset[str]:
    live = {o.edge for o in mb.live_word}
    return frozenset(e for e in live if t_index(mb, e) == 1)


def adjoint_set(mb: MarkedBouquet, e: str, other_side: bool = False) -> AdjointSet:
    """{e} plus the live edges with exactly one arrow strictly between e's
    two markers, on the side following e's first marker (or the other)."""
    if e not in mb.tree:
        raise PresentationError(f"{e} is not a tree edge")
    i, j = mb.positions(e)
    n = len(mb.word)
    inside = range(i + 1, j) if not other_side else [(j + 1 + r) % n for r in range(n - (j - i) - 1)]
    count: dict[str, int] = {}
    for r in inside:
        o = mb.word[r]
        if o.edge not in mb.tree:
            count[o.edge] = count.get(o.edge, 0) + 1
    return AdjointSet(e, frozenset([e]) | {f for f, c in count.items() if c == 1})


def adjoint_sets(mb: MarkedBouquet, other_side: bool = False) -> dict[str, frozenset[str]]:
    return {
        e: adjoint_set(mb, e, other_side).members for e in sorted(mb.tree, key=edge_key)
    }


def combine(
    base: Iterable[str], adjoint: Mapping[str, Iterable[str]], chosen: Iterable[str]
) -> frozenset[str]:
    """base Δ E_{e1} Δ ... Δ E_{es} for the chosen tree edges."""
    out = set(base)
    for e in chosen:
        out ^= set(adjoint[e])
    return frozenset(out)


@dataclass(frozen=True)
class PetrialEnumeration:
    tree: frozenset[str]
    base: frozenset[str]
    adjoint: dict[str, frozenset[str]]
    t_values: dict[str, int]
    subsets: tuple[tuple[frozenset[str], frozenset[str]], ...]  # (S, A)

    def results(self) -> set[frozenset[str]]:
        return {a for _, a in self.subsets}


def cc_petrial_enumeration(
    p: ArrowPresentation, tree: Iterable[str] | None = None, other_side: bool = False
) -> PetrialEnumeration:
    if not is_connected(p):
        raise PresentationError("presentation is not connected")
    if not is_eulerian(p):
        raise PresentationError("presentation is not Eulerian")
    if tree is None:
        tree = next(spanning_trees(p))
    mb = contract_to_marked_bouquet(p, tree)
    base = base_set(mb)
    adj = adjoint_sets(mb, other_side)
    t_values = {o.edge: t_index(mb, o.edge) for o in mb.live_word}
    tree_edges = sorted(mb.tree, key=edge_key)
    rows = []
    for r in range(len(tree_edges) + 1):
        for s in combinations(tree_edges, r):
            rows.append((frozenset(s), combine(base, adj, s)))
    return PetrialEnumeration(mb.tree, base, adj, t_values, tuple(rows))


def enumerate_cc_petrials(
    p: ArrowPresentation, tree: Iterable[str] | None = None
) -> set[frozenset[str]]:
    """All A such that the partial Petrial of ``p`` on A is checkerboard colourable."""
    return cc_petrial_enumeration(p, tree).results()

"""Surface invariants of arrow presentations.

Boundary tracing works on the segment graph: every arrow occurrence has a tail
and a head endpoint.  Walking a circle in its stored order, a ``+`` arrow is
entered at its tail and left at its head, a ``-`` arrow the other way round.
A vertex arc joins the exit of one arrow to the entry of the next; each edge
with arrows e', e'' contributes the two edge sides head(e')-tail(e'') and
head(e'')-tail(e').  Every endpoint meets exactly one arc and one side, so the
graph is a disjoint union of cycles: the boundary components.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .core import ArrowPresentation

__all__ = [
    "VertexArc",
    "EdgeSide",
    "BoundaryDecomposition",
    "Colouring",
    "arrow_index",
    "degrees",
    "boundary_decomposition",
    "boundary_count",
    "is_orientable",
    "euler_genus",
    "is_eulerian",
    "checkerboard_colouring",
    "is_checkerboard_colourable",
    "connected_components",
    "is_connected",
]


class VertexArc(NamedTuple):
    circle: str
    position: int  # arc after the arrow at this position; 0 for an empty circle


class EdgeSide(NamedTuple):
    edge: str
    side: int  # 0: head(e')->tail(e''), 1: head(e'')->tail(e')


@dataclass(frozen=True)
class BoundaryDecomposition:
    components: tuple[tuple, ...]

    def __len__(self) -> int:
        return len(self.components)

    def component_of(self, segment) -> int:
        for i, comp in enumerate(self.components):
            if segment in comp:
                return i
        raise KeyError(segment)


@dataclass(frozen=True)
class Colouring:
    """One colour ('black'/'white') per boundary component."""

    boundary: BoundaryDecomposition
    colours: tuple[str, ...]


class ArrowIndex:
    """Flat indexing of the arrow occurrences of a presentation.

    Occurrence ``k`` owns endpoints ``2k`` (tail) and ``2k + 1`` (head).  For
    each edge, ``first[e]`` is e' (met first in stored order) and
    ``second[e]`` is e''.
    """

    def __init__(self, p: ArrowPresentation):
        self.occ = []  # (circle index, position, edge, sign)
        self.circle_start = []
        self.first: dict[str, int] = {}
        self.second: dict[str, int] = {}
        for ci, c in enumerate(p.circles):
            self.circle_start.append(len(self.occ))
            for pos, o in enumerate(c.word):
                k = len(self.occ)
                self.occ.append((ci, pos, o.edge, o.sign))
                if o.edge in self.first:
                    self.second[o.edge] = k
                else:
                    self.first[o.edge] = k
        self.p = p

    def entry(self, k: int) -> int:
        return 2 * k if self.occ[k][3] == "+" else 2 * k + 1

    def exit(self, k: int) -> int:
        return 2 * k + 1 if self.occ[k][3] == "+" else 2 * k

    def arc_partner(self) -> list[int]:
        """Endpoint -> endpoint joined to it by a vertex arc."""
        partner = [0] * (2 * len(self.occ))
        for ci, c in enumerate(self.p.circles):
            n = len(c.word)
            s = self.circle_start[ci]
            for i in range(n):
                a, b = self.exit(s + i), self.entry(s + (i + 1) % n)
                partner[a] = b
                partner[b] = a
        return partner

    def side_partner(self) -> list[int]:
        """Endpoint -> endpoint joined to it by an edge side."""
        partner = [0] * (2 * len(self.occ))
        for e, a in self.first.items():
            b = self.second[e]
            partner[2 * a + 1] = 2 * b
            partner[2 * b] = 2 * a + 1
            partner[2 * b + 1] = 2 * a
            partner[2 * a] = 2 * b + 1
        return partner


def arrow_index(p: ArrowPresentation) -> ArrowIndex:
    return ArrowIndex(p)


def degrees(p: ArrowPresentation) -> list[int]:
    """Degree of every circle, sorted descending."""
    return sorted((len(c.word) for c in p.circles), reverse=True)


def _cycles(n_nodes: int, arc: list[int], side: list[int]) -> list[list[int]]:
    seen = [False] * n_nodes
    cycles = []
    for start in range(n_nodes):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            y = arc[x]
            seen[y] = True
            cyc.append((x, y))
            x = side[y]
        cycles.append(cyc)
    return cycles


def boundary_decomposition(p: ArrowPresentation) -> BoundaryDecomposition:
    idx = ArrowIndex(p)
    arc, side = idx.arc_partner(), idx.side_partner()
    comps = []
    for cyc in _cycles(2 * len(idx.occ), arc, side):
        walk = []
        for x, y in cyc:
            # arc from x to y: identify it by the arrow whose exit it leaves
            k = x // 2 if idx.exit(x // 2) == x else y // 2
            ci, pos, _, _ = idx.occ[k]
            walk.append(VertexArc(p.circles[ci].id, pos))
            z = side[y]
            e = idx.occ[y // 2][2]
            a = idx.first[e]
            # side 0 contains head(e'), side 1 contains tail(e')
            walk.append(EdgeSide(e, 0 if 2 * a + 1 in (y, z) else 1))
        comps.append(tuple(walk))
    for c in p.circles:
        if not c.word:
            comps.append((VertexArc(c.id, 0),))
    return BoundaryDecomposition(tuple(comps))


def boundary_count(p: ArrowPresentation) -> int:
    """Number of boundary components, without building the walks."""
    idx = ArrowIndex(p)
    n = 2 * len(idx.occ)
    cycles = len(_cycles(n, idx.arc_partner(), idx.side_partner())) if n else 0
    return cycles + sum(1 for c in p.circles if not c.word)


def _edge_circles(p: ArrowPresentation) -> dict[str, list[tuple[int, str]]]:
    where: dict[str, list[tuple[int, str]]] = {}
    for ci, c in enumerate(p.circles):
        for o in c.word:
            where.setdefault(o.edge, []).append((ci, o.sign))
    return where


def is_orientable(p: ArrowPresentation) -> bool:
    """Parity search: flip some circles so that every edge has equal signs."""
    parent = list(range(len(p.circles)))
    parity = [0] * len(p.circles)

    def find(x):
        if parent[x] == x:
            return x, 0
        r, par = find(parent[x])
        parent[x] = r
        parity[x] ^= par
        return r, parity[x]

    for (a, sa), (b, sb) in _edge_circles(p).values():
        need = int(sa != sb)
        ra, pa = find(a)
        rb, pb = find(b)
        if ra == rb:
            if pa ^ pb != need:
                return False
        else:
            parent[ra] = rb
            parity[ra] = pa ^ pb ^ need
    return True


def connected_components(p: ArrowPresentation) -> int:
    parent = list(range(len(p.circles)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (a, _), (b, _) in _edge_circles(p).values():
        parent[find(a)] = find(b)
    return len({find(x) for x in range(len(p.circles))})


def is_connected(p: ArrowPresentation) -> bool:
    return connected_components(p) == 1


def euler_genus(p: ArrowPresentation) -> int:
    return (
        2 * connected_components(p)
        - p.num_circles
        + p.num_edges
        - boundary_count(p)
    )


def is_eulerian(p: ArrowPresentation) -> bool:
    return all(len(c.word) % 2 == 0 for c in p.circles)


def checkerboard_colouring(p: ArrowPresentation) -> Colouring | None:
    """Two-colour the boundary components so that the two sides of every edge
    differ, or return None.  The first component of each part is black."""
    bd = boundary_decomposition(p)
    where: dict[EdgeSide, int] = {}
    for i, comp in enumerate(bd.components):
        for seg in comp:
            if isinstance(seg, EdgeSide):
                where[seg] = i
    adj: list[list[int]] = [[] for _ in bd.components]
    for e in p.edges:
        a, b = where[EdgeSide(e, 0)], where[EdgeSide(e, 1)]
        if a == b:
            return None
        adj[a].append(b)
        adj[b].append(a)
    colour = [-1] * len(bd.components)
    for s in range(len(colour)):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if colour[y] < 0:
                    colour[y] = 1 - colour[x]
                    stack.append(y)
                elif colour[y] == colour[x]:
                    return None
    names = ("black", "white")
    return Colouring(bd, tuple(names[c] for c in colour))


def is_checkerboard_colourable(p: ArrowPresentation) -> bool:
    """Fast predicate form of :func:`checkerboard_colouring`."""
    if not is_eulerian(p):
        return False
    idx = ArrowIndex(p)
    n = 2 * len(idx.occ)
    if n == 0:
        return True
    arc, side = idx.arc_partner(), idx.side_partner()
    comp = [-1] * n
    ncomp = 0
    for cyc in _cycles(n, arc, side):
        for x, y in cyc:
            comp[x] = comp[y] = ncomp
        ncomp += 1
    adj: list[list[int]] = [[] for _ in range(ncomp)]
    for e, a in idx.first.items():
        u, v = comp[2 * a + 1], comp[2 * a]  # head(e') lies on side 0, tail(e') on side 1
        if u == v:
            return False
        adj[u].append(v)
        adj[v].append(u)
    colour = [-1] * ncomp
    for s in range(ncomp):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if colour[y] < 0:
                    colour[y] = 1 - colour[x]
                    stack.append(y)
                elif colour[y] == colour[x]:
                    return False
    return True

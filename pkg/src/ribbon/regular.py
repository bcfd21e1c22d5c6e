"""Regular partial duals via shorter marking arrow sequences.

For a bouquet with cyclic word w_0 ... w_{2m-1}, the two arrows of an edge
at positions i < j cut the circle into the arcs [i, j) and [j, i).  The
shorter one is the edge's shorter sequence (both when the lengths agree).
A family of such arcs over orientable loops that is laminar (any two arcs
nested or disjoint) predicts the degrees of the partial dual on its edges:
each arc contributes the number of positions it covers outside the other
arcs, and the rest of the circle forms one more vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .core import ArrowPresentation, Occurrence, PresentationError, _to_occurrence, edge_key
from .spanning import spanning_quasi_trees
from .topology import is_connected
from .twist import partial_dual

__all__ = [
    "CyclicWord",
    "ShorterSequence",
    "SmsSet",
    "cyclic_word",
    "shorter_sequences",
    "d_length",
    "d_lengths",
    "is_sms_set",
    "predicted_degree_sequence",
    "find_sms_sets",
    "RegularWitness",
    "enumerate_regular_partial_duals",
    "regular_witnesses",
]


@dataclass(frozen=True)
class CyclicWord:
    """Word of a bouquet's single circle, read with cyclic semantics."""

    letters: tuple[Occurrence, ...]

    @classmethod
    def from_letters(cls, letters: Iterable) -> "CyclicWord":
        if isinstance(letters, str):
            letters = letters.split()
        occ = []
        for x in letters:
            if isinstance(x, str) and x[-1:] not in ("+", "-"):
                x = x + "+"
            occ.append(_to_occurrence(x))
        return cls(tuple(occ))

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def m(self) -> int:
        return len(self.letters) // 2

    def positions(self, e: str) -> tuple[int, int]:
        pos = [i for i, o in enumerate(self.letters) if o.edge == e]
        if len(pos) != 2:
            raise PresentationError(f"unknown edge label: {e}")
        return pos[0], pos[1]

    def edges(self) -> list[str]:
        return sorted({o.edge for o in self.letters}, key=edge_key)

    def is_orientable_loop(self, e: str) -> bool:
        i, j = self.positions(e)
        return self.letters[i].sign == self.letters[j].sign

    def segment(self, start: int, length: int) -> tuple[str, ...]:
        n = len(self.letters)
        return tuple(self.letters[(start + t) % n].edge for t in range(length))


@dataclass(frozen=True)
class ShorterSequence:
    edge: str
    start: int
    length: int
    tie: bool = False

    def indices(self, n: int) -> frozenset[int]:
        return frozenset((self.start + t) % n for t in range(self.length))

    def labels(self, w: CyclicWord) -> tuple[str, ...]:
        return w.segment(self.start, self.length)


SmsSet = tuple  # tuple[ShorterSequence, ...]


def cyclic_word(b: ArrowPresentation) -> CyclicWord:
    if b.num_circles != 1:
        raise PresentationError(f"not a bouquet: {b.num_circles} circles")
    return CyclicWord(b.canonical.circles[0].word)


def shorter_sequences(w: CyclicWord, e: str) -> list[ShorterSequence]:
    """The strictly shorter arc of ``e``, or both arcs when they tie."""
    i, j = w.positions(e)
    n = len(w)
    first, second = j - i, n - (j - i)
    if first < second:
        return [ShorterSequence(e, i, first)]
    if second < first:
        return [ShorterSequence(e, j, second)]
    return [ShorterSequence(e, i, first, True), ShorterSequence(e, j, second, True)]


def _laminar(a: frozenset[int], b: frozenset[int]) -> bool:
    return a <= b or b <= a or not (a & b)


def d_lengths(w: CyclicWord, s: Sequence[ShorterSequence]) -> list[int]:
    # only arcs nested inside C_k are subtracted; an enclosing arc does not
    # shrink C_k (d = 5, 4, 5 for the nested pair C_2 inside C_1)
    n = len(w)
    sets = [c.indices(n) for c in s]
    out = []
    for k, mine in enumerate(sets):
        inner = set().union(*(x for i, x in enumerate(sets) if i != k and x < mine))
        out.append(len(mine - inner))
    return out


def d_length(w: CyclicWord, s: Sequence[ShorterSequence], k: int) -> int:
    """Positions of the ``k``-th arc (1-based) not inside an arc nested in it."""
    if not 1 <= k <= len(s):
        raise IndexError(f"index {k} out of range 1..{len(s)}")
    return d_lengths(w, s)[k - 1]


def _as_word(b) -> CyclicWord:
    return b if isinstance(b, CyclicWord) else cyclic_word(b)


def is_sms_set(b: ArrowPresentation | CyclicWord, arcs: Sequence[ShorterSequence]) -> bool:
    w = _as_word(b)
    n = len(w)
    edges = [c.edge for c in arcs]
    if len(set(edges)) != len(edges):
        return False
    for c in arcs:
        valid = {(x.start, x.length) for x in shorter_sequences(w, c.edge)}
        if (c.start % n, c.length) not in valid:
            return False
        if not w.is_orientable_loop(c.edge):
            return False
    sets = [c.indices(n) for c in arcs]
    return all(
        _laminar(sets[i], sets[j]) for i in range(len(sets)) for j in range(i + 1, len(sets))
    )


def predicted_degree_sequence(
    b: ArrowPresentation | CyclicWord, s: Sequence[ShorterSequence]
) -> list[int]:
    w = _as_word(b)
    if not is_sms_set(w, s):
        raise ValueError("not a shorter marking arrow sequence set")
    ds = d_lengths(w, s)
    return sorted(ds + [len(w) - sum(ds)], reverse=True)


def find_sms_sets(w: CyclicWord, n: int, k: int) -> Iterator[tuple[ShorterSequence, ...]]:
    """All SMS sets of size ``n`` whose every d-length equals ``k``.

    Backtracking in word order over orientable-loop arcs of length >= k,
    keeping the chosen arcs laminar.  Tie alternatives are both explored.
    """
    size = len(w)
    options = []
    for e in w.edges():
        if not w.is_orientable_loop(e):
            continue
        arcs = [c for c in shorter_sequences(w, e) if c.length >= k]
        if arcs:
            options.append(arcs)
    options.sort(key=lambda arcs: min(c.start for c in arcs))
    chosen: list[ShorterSequence] = []
    chosen_sets: list[frozenset[int]] = []

    def rec(i: int):
        if len(chosen) == n:
            if all(d == k for d in d_lengths(w, chosen)):
                yield tuple(chosen)
            return
        if len(options) - i < n - len(chosen):
            return
        for c in options[i]:
            cs = c.indices(size)
            if all(_laminar(cs, x) for x in chosen_sets):
                chosen.append(c)
                chosen_sets.append(cs)
                yield from rec(i + 1)
                chosen.pop()
                chosen_sets.pop()
        yield from rec(i + 1)

    if n < 0:
        return
    yield from rec(0)


@dataclass(frozen=True)
class RegularWitness:
    subset: frozenset[str]
    quasi_tree: frozenset[str]
    arcs: tuple[ShorterSequence, ...]
    word: CyclicWord


def regular_witnesses(p: ArrowPresentation, k: int) -> Iterator[RegularWitness]:
    """Every (quasi-tree, SMS set) pair producing a k-regular partial dual."""
    if not is_connected(p):
        raise PresentationError("presentation is not connected")
    m2 = 2 * p.num_edges
    if k <= 0 or m2 % k:
        return
    n = m2 // k - 1
    if n < 0:
        return
    for q in spanning_quasi_trees(p):
        w = cyclic_word(partial_dual(p, q))
        for s in find_sms_sets(w, n, k):
            yield RegularWitness(q.symmetric_difference(c.edge for c in s), q, s, w)


def enumerate_regular_partial_duals(p: ArrowPresentation, k: int) -> set[frozenset[str]]:
    """All A such that the partial dual of ``p`` on A is k-regular."""
    return {wt.subset for wt in regular_witnesses(p, k)}

"""Regular checkerboard colourable twisted duals.

Every twisted dual is tau(A1) delta(A2) tau(A3) applied to G.  For each A1
the regular partial duals of G^tau(A1) come from :mod:`ribbon.regular` and the
colourable partial Petrials of the result from :mod:`ribbon.petrial`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import ArrowPresentation, PresentationError, edge_key, normal_form
from .petrial import cc_petrial_enumeration
from .regular import enumerate_regular_partial_duals
from .spanning import all_subsets, spanning_trees
from .topology import is_checkerboard_colourable, is_connected, is_eulerian, degrees
from .twist import TwistWord, apply_word, partial_dual, partial_petrial

__all__ = [
    "RccWitness",
    "RccGraph",
    "enumerate_rcc_twisted_duals",
    "has_cc_twisted_dual",
    "verify_witness",
]


@dataclass(frozen=True)
class RccWitness:
    a1: frozenset[str]
    a2: frozenset[str]
    a3: frozenset[str]
    result: ArrowPresentation

    @property
    def word(self) -> TwistWord:
        return TwistWord.of(("tau", self.a1), ("delta", self.a2), ("tau", self.a3))


@dataclass
class RccGraph:
    result: ArrowPresentation  # normal form
    witnesses: list[RccWitness] = field(default_factory=list)
    multiplicity: int = 0


def enumerate_rcc_twisted_duals(
    p: ArrowPresentation, k: int, max_witnesses: int | None = None
) -> list[RccGraph]:
    """All k-regular checkerboard colourable twisted duals of ``p``.

    Results are deduplicated by fixed-label equality and returned in key
    order; ``multiplicity`` counts every (A1, A2, A3) reaching the graph,
    while at most ``max_witnesses`` of them are kept.
    """
    if not is_connected(p):
        raise PresentationError("presentation is not connected")
    found: dict[tuple, RccGraph] = {}
    if k <= 0 or k % 2:
        return []
    for a1 in all_subsets(p.edges):
        p1 = partial_petrial(p, a1)
        for a2 in sorted(
            enumerate_regular_partial_duals(p1, k),
            key=lambda s: (len(s), sorted(map(edge_key, s))),
        ):
            p2 = partial_dual(p1, a2)
            for _, a3 in cc_petrial_enumeration(p2).subsets:
                result = partial_petrial(p2, a3)
                entry = found.get(result.key)
                if entry is None:
                    entry = found[result.key] = RccGraph(normal_form(result))
                entry.multiplicity += 1
                if max_witnesses is None or len(entry.witnesses) < max_witnesses:
                    entry.witnesses.append(RccWitness(a1, a2, a3, result))
    return [found[key] for key in sorted(found)]


def verify_witness(p: ArrowPresentation, w: RccWitness, k: int | None = None) -> bool:
    out = apply_word(p, w.word)
    if out.key != w.result.key:
        return False
    if k is not None and set(degrees(out)) != {k}:
        return False
    return is_checkerboard_colourable(out)


def has_cc_twisted_dual(p: ArrowPresentation) -> tuple[bool, RccWitness]:
    """Always true for connected input; the witness follows the constructive
    route: an Eulerian graph only needs a partial Petrial, any other graph is
    first dualised along a spanning tree (giving a bouquet)."""
    if not is_connected(p):
        raise PresentationError("presentation is not connected")
    a2: frozenset[str] = frozenset()
    base = p
    if not is_eulerian(p):
        a2 = next(spanning_trees(p))
        base = partial_dual(p, a2)
    a3 = cc_petrial_enumeration(base).base
    witness = RccWitness(frozenset(), a2, a3, partial_petrial(base, a3))
    return is_checkerboard_colourable(witness.result), witness

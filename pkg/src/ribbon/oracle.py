"""Brute-force ground truth for the enumerators.

Each function sweeps a whole subset lattice (or triple of lattices) and
checks the defining predicate directly.  Nothing here shares code with the
characterisation-based enumerators beyond the primitive operations.
"""

from __future__ import annotations

import os

from .core import ArrowPresentation, PresentationError, normal_form
from .spanning import all_subsets
from .topology import checkerboard_colouring, degrees
from .twist import partial_dual, partial_petrial

__all__ = [
    "DEFAULT_RCC_CAP",
    "rcc_cap",
    "brute_regular_duals",
    "brute_cc_petrials",
    "brute_rcc_twisted",
]

DEFAULT_RCC_CAP = 5


def rcc_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get("RIBBON_MAX_M")
    return int(env) if env else DEFAULT_RCC_CAP


def _is_k_regular(p: ArrowPresentation, k: int) -> bool:
    return all(d == k for d in degrees(p))


def brute_regular_duals(p: ArrowPresentation, k: int) -> set[frozenset[str]]:
    return {a for a in all_subsets(p.edges) if _is_k_regular(partial_dual(p, a), k)}


def brute_cc_petrials(p: ArrowPresentation) -> set[frozenset[str]]:
    return {
        a
        for a in all_subsets(p.edges)
        if checkerboard_colouring(partial_petrial(p, a)) is not None
    }


def brute_rcc_twisted(
    p: ArrowPresentation, k: int, cap: int | None = None
) -> dict[tuple, ArrowPresentation]:
    """Key -> normal form of every k-regular colourable tau-delta-tau image."""
    limit = rcc_cap(cap)
    if p.num_edges > limit:
        raise PresentationError(
            f"{p.num_edges} edges exceeds the oracle cap of {limit} (set RIBBON_MAX_M)"
        )
    out: dict[tuple, ArrowPresentation] = {}
    subsets = list(all_subsets(p.edges))
    for b1 in subsets:
        p1 = partial_petrial(p, b1)
        for b2 in subsets:
            p2 = partial_dual(p1, b2)
            # partial Petrials keep degrees
            if not _is_k_regular(p2, k):
                continue
            for b3 in subsets:
                q = partial_petrial(p2, b3)
                if checkerboard_colouring(q) is not None and q.key not in out:
                    out[q.key] = normal_form(q)
    return out

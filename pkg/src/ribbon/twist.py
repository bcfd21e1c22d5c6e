"""The twisted-duality action: partial Petrials, partial duals and words in them.

All operations canonicalise their input first, so "e'" and "e''" always mean
the first and second arrow of an edge in canonical traversal order.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import (
    ArrowPresentation,
    Circle,
    Occurrence,
    PresentationError,
    canonical_form,
    edge_key,
    flip,
)
from .topology import ArrowIndex

__all__ = [
    "TwistWord",
    "LoopClass",
    "parse_word",
    "partial_petrial",
    "partial_dual",
    "delete",
    "contract",
    "apply_word",
    "loop_class",
    "six_partition_form",
    "six_partition_to_word",
]


def _check_subset(p: ArrowPresentation, subset: Iterable[str]) -> frozenset[str]:
    a = frozenset(subset)
    unknown = a.difference(p.edges)
    if unknown:
        raise PresentationError(
            "unknown edge label(s): " + ", ".join(sorted(unknown, key=edge_key))
        )
    return a


def partial_petrial(p: ArrowPresentation, subset: Iterable[str]) -> ArrowPresentation:
    """Reverse the second arrow of every edge in ``subset``."""
    a = _check_subset(p, subset)
    q = p.canonical
    if not a:
        return q
    seen: set[str] = set()
    circles = []
    for c in q.circles:
        word = []
        for o in c.word:
            if o.edge in a and o.edge in seen:
                o = Occurrence(o.edge, flip(o.sign))
            seen.add(o.edge)
            word.append(o)
        circles.append(Circle(c.id, tuple(word)))
    return canonical_form(ArrowPresentation(tuple(circles)))


def partial_dual(p: ArrowPresentation, subset: Iterable[str]) -> ArrowPresentation:
    """Partial dual with respect to ``subset``.

    For e in the subset, the arrows e', e'' are cut out and replaced by new
    arrows head(e') -> tail(e'') and head(e'') -> tail(e'); the new circles
    are read off by following vertex arcs and arrows alternately.
    """
    a = _check_subset(p, subset)
    q = p.canonical
    if not a:
        return q
    idx = ArrowIndex(q)
    n = 2 * len(idx.occ)
    arc = idx.arc_partner()
    # seg[x] = (other end, label, True when x is the arrow's tail end)
    seg: list = [None] * n
    for k, (_, _, e, _) in enumerate(idx.occ):
        if e in a:
            continue
        seg[2 * k] = (2 * k + 1, e, True)
        seg[2 * k + 1] = (2 * k, e, False)
    for e in a:
        s, t = idx.first[e], idx.second[e]
        for x, y in ((2 * s + 1, 2 * t), (2 * t + 1, 2 * s)):
            seg[x] = (y, e, True)
            seg[y] = (x, e, False)
    seen = [False] * n
    words = []
    for start in range(n):
        if seen[start]:
            continue
        word = []
        x = start
        while not seen[x]:
            y, e, forward = seg[x]
            seen[x] = seen[y] = True
            word.append(Occurrence(e, "+" if forward else "-"))
            x = arc[y]
        words.append(tuple(word))
    words.extend(c.word for c in q.circles if not c.word)
    circles = tuple(Circle(f"v{i + 1}", w) for i, w in enumerate(words))
    out = canonical_form(ArrowPresentation(circles))
    return ArrowPresentation(
        tuple(Circle(f"v{i + 1}", c.word) for i, c in enumerate(out.circles))
    )


def delete(p: ArrowPresentation, subset: Iterable[str]) -> ArrowPresentation:
    a = _check_subset(p, subset)
    if not a:
        return p.canonical
    circles = tuple(
        Circle(c.id, tuple(o for o in c.word if o.edge not in a)) for c in p.circles
    )
    return canonical_form(ArrowPresentation(circles))


def contract(p: ArrowPresentation, subset: Iterable[str]) -> ArrowPresentation:
    a = _check_subset(p, subset)
    return delete(partial_dual(p, a), a)


# -- words -------------------------------------------------------------------


@dataclass(frozen=True)
class TwistWord:
    """Sequence of ``('delta' | 'tau', edges)`` steps, applied left to right."""

    steps: tuple[tuple[str, frozenset[str]], ...] = ()

    @classmethod
    def of(cls, *steps: tuple[str, Iterable[str]]) -> "TwistWord":
        out = []
        for gen, edges in steps:
            gen = {"d": "delta", "t": "tau"}.get(gen, gen)
            if gen not in ("delta", "tau"):
                raise ValueError(f"unknown generator {gen!r}")
            out.append((gen, frozenset(edges)))
        return cls(tuple(out))

    def __str__(self) -> str:
        return ";".join(
            f"{g[0]}{{{','.join(sorted(es, key=edge_key))}}}" for g, es in self.steps
        )


_STEP_RE = re.compile(r"^\s*([dt])\s*\{([^}]*)\}\s*$")


def parse_word(text: str) -> TwistWord:
    """Parse ``"t{e1,e2};d{e3};t{e1}"``."""
    steps = []
    if not text.strip():
        return TwistWord()
    for part in text.split(";"):
        m = _STEP_RE.match(part)
        if not m:
            raise ValueError(f"bad word step {part.strip()!r}")
        edges = [x.strip() for x in m.group(2).split(",") if x.strip()]
        steps.append((m.group(1), edges))
    return TwistWord.of(*steps)


def apply_word(p: ArrowPresentation, word: TwistWord | Sequence) -> ArrowPresentation:
    if not isinstance(word, TwistWord):
        word = TwistWord.of(*word)
    out = p.canonical
    for gen, edges in word.steps:
        out = partial_dual(out, edges) if gen == "delta" else partial_petrial(out, edges)
    return out


class LoopClass(enum.Enum):
    NOT_A_LOOP = "not-a-loop"
    ORIENTABLE = "orientable-loop"
    NON_ORIENTABLE = "non-orientable-loop"


def loop_class(p: ArrowPresentation, e: str) -> LoopClass:
    where = [(c.id, o.sign) for c in p.circles for o in c.word if o.edge == e]
    if not where:
        raise PresentationError(f"unknown edge label: {e}")
    (ca, sa), (cb, sb) = where
    if ca != cb:
        return LoopClass.NOT_A_LOOP
    return LoopClass.ORIENTABLE if sa == sb else LoopClass.NON_ORIENTABLE


# -- six-part form -----------------------------------------------------------

# Per-edge coset representatives, as sequences of generators applied left to
# right: 1, delta, tau, tau.delta, delta.tau, tau.delta.tau.
_SIX = ((), ("delta",), ("tau",), ("tau", "delta"), ("delta", "tau"), ("tau", "delta", "tau"))


def _check_partition(p: ArrowPresentation, parts: Sequence[Iterable[str]]) -> list[frozenset[str]]:
    if len(parts) != 6:
        raise ValueError("need exactly six parts")
    sets = [frozenset(x) for x in parts]
    union: set[str] = set()
    for s in sets:
        if union & s:
            raise ValueError("parts are not disjoint")
        union |= s
    if union != set(p.edges):
        raise ValueError("parts do not cover the edge set")
    return sets


def six_partition_to_word(parts: Sequence[Iterable[str]]) -> TwistWord:
    """tau(B1) delta(B2) tau(B3) with B1 = A3+A4+A6, B2 = A2+A4+A5+A6, B3 = A5+A6."""
    a1, a2, a3, a4, a5, a6 = (frozenset(x) for x in parts)
    return TwistWord.of(
        ("tau", a3 | a4 | a6), ("delta", a2 | a4 | a5 | a6), ("tau", a5 | a6)
    )


def six_partition_form(p: ArrowPresentation, parts: Sequence[Iterable[str]]) -> ArrowPresentation:
    """Apply to each part its coset operation, one edge at a time."""
    sets = _check_partition(p, parts)
    out = p.canonical
    for ops, part in zip(_SIX, sets):
        for e in sorted(part, key=edge_key):
            for gen in ops:
                out = partial_dual(out, [e]) if gen == "delta" else partial_petrial(out, [e])
    return out

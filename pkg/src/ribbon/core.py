"""Arrow presentations of ribbon graphs.

A presentation is a collection of circles (vertices).  Each circle carries a
word of arrow occurrences ``(edge, sign)``; ``sign`` is ``'+'`` when the arrow
points along the circle's stored traversal order and ``'-'`` otherwise.  Every
edge label occurs exactly twice over the whole presentation.

Circle words are stored linearly; all cyclic reasoning goes through
:func:`canonical_form` and the traversal helpers in :mod:`ribbon.topology`.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Mapping, NamedTuple, Sequence

__all__ = [
    "PresentationError",
    "Occurrence",
    "Circle",
    "ArrowPresentation",
    "ValidationReport",
    "edge_key",
    "word_key",
    "flip",
    "make_presentation",
    "parse_presentation",
    "serialize",
    "canonical_form",
    "equals",
    "same_canonical_form",
    "equivalence_key",
    "normal_form",
    "validate",
]

_LABEL_RE = re.compile(r"^[A-Za-z0-9_]+$")
_OCC_RE = re.compile(r"^([A-Za-z0-9_]+)([+-])$")
_VERTEX_RE = re.compile(r"^vertex\s+([A-Za-z0-9_]+)\s*:(.*)$")


class PresentationError(ValueError):
    """Raised for malformed or inconsistent arrow presentations."""


class Occurrence(NamedTuple):
    edge: str
    sign: str  # '+' or '-'

    def __str__(self) -> str:
        return f"{self.edge}{self.sign}"


def flip(sign: str) -> str:
    return "-" if sign == "+" else "+"


@lru_cache(maxsize=None)
def edge_key(name: str) -> tuple:
    """Natural ordering key, so that ``e2 < e10``."""
    parts = re.split(r"(\d+)", name)
    return tuple(int(p) if i % 2 else p for i, p in enumerate(parts))


@lru_cache(maxsize=None)
def _occ_key(occ: Occurrence) -> tuple:
    return (edge_key(occ.edge), occ.sign)


def word_key(word: Sequence[Occurrence]) -> tuple:
    return tuple(_occ_key(o) for o in word)


@dataclass(frozen=True)
class Circle:
    id: str
    word: tuple[Occurrence, ...] = ()

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return " ".join(str(o) for o in self.word)


@dataclass(frozen=True)
class ArrowPresentation:
    """Immutable arrow presentation.

    The constructor does not check validity; use :func:`make_presentation`,
    :func:`parse_presentation` or :func:`validate`.  Equality of two
    presentations in the ribbon-graph sense is :func:`equals`, not ``==``.
    """

    circles: tuple[Circle, ...] = field(default=())

    @cached_property
    def edges(self) -> tuple[str, ...]:
        names = {o.edge for c in self.circles for o in c.word}
        return tuple(sorted(names, key=edge_key))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_circles(self) -> int:
        return len(self.circles)

    def circle(self, cid: str) -> Circle:
        for c in self.circles:
            if c.id == cid:
                return c
        raise KeyError(cid)

    def words(self) -> list[tuple[Occurrence, ...]]:
        return [c.word for c in self.circles]

    @cached_property
    def canonical(self) -> "ArrowPresentation":
        return canonical_form(self)

    @cached_property
    def key(self) -> tuple:
        """Hashable complete invariant; see :func:`equivalence_key`."""
        return equivalence_key(self)

    def __str__(self) -> str:
        return serialize(self)


def _to_occurrence(item) -> Occurrence:
    if isinstance(item, Occurrence):
        return item
    if isinstance(item, str):
        m = _OCC_RE.match(item)
        if not m:
            raise PresentationError(f"bad arrow occurrence {item!r}")
        return Occurrence(m.group(1), m.group(2))
    edge, sign = item
    if sign not in "+-" or len(sign) != 1:
        raise PresentationError(f"bad sign {sign!r}")
    return Occurrence(edge, sign)


def make_presentation(
    circles: Mapping[str, Iterable] | Iterable[Iterable] | Iterable[str],
) -> ArrowPresentation:
    """Build and validate a presentation.

    ``circles`` is either a mapping ``id -> word`` or a sequence of words
    (ids ``v1, v2, ...`` are generated).  A word may be a string such as
    ``"e1+ e2- e1+"`` or an iterable of occurrences / ``(edge, sign)`` pairs.

    >>> p = make_presentation(["e1+ e1-"])
    >>> p.edges
    ('e1',)
    """
    if isinstance(circles, Mapping):
        items = list(circles.items())
    else:
        items = [(f"v{i + 1}", w) for i, w in enumerate(circles)]
    built = []
    for cid, w in items:
        if isinstance(w, str):
            w = w.split()
        built.append(Circle(str(cid), tuple(_to_occurrence(x) for x in w)))
    p = ArrowPresentation(tuple(built))
    report = validate(p)
    if report.violations:
        raise PresentationError("; ".join(report.violations))
    return p


# -- text format -------------------------------------------------------------


def parse_presentation(text: str) -> ArrowPresentation:
    """Parse the ``vertex <id>: <occ> ...`` text format."""
    circles: list[Circle] = []
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _VERTEX_RE.match(line)
        if not m:
            col = len(raw) - len(raw.lstrip()) + 1
            raise PresentationError(
                f"line {lineno}, column {col}: expected 'vertex <id>: <occurrences>'"
            )
        cid = m.group(1)
        if cid in seen:
            raise PresentationError(
                f"line {lineno}: duplicate circle id {cid!r} (first on line {seen[cid]})"
            )
        seen[cid] = lineno
        body_start = raw.index(":") + 1
        word = []
        for tm in re.finditer(r"\S+", m.group(2)):
            tok = tm.group(0)
            om = _OCC_RE.match(tok)
            if not om:
                col = body_start + tm.start() + 1
                raise PresentationError(
                    f"line {lineno}, column {col}: bad arrow occurrence {tok!r}"
                )
            word.append(Occurrence(om.group(1), om.group(2)))
        circles.append(Circle(cid, tuple(word)))
    p = ArrowPresentation(tuple(circles))
    report = validate(p)
    if report.violations:
        raise PresentationError("; ".join(report.violations))
    return p


def serialize(p: ArrowPresentation) -> str:
    lines = []
    for c in canonical_form(p).circles:
        body = " ".join(str(o) for o in c.word)
        lines.append(f"vertex {c.id}: {body}".rstrip())
    return "\n".join(lines) + "\n"


# -- canonical form ----------------------------------------------------------


def _reverse_word(word: Sequence[Occurrence]) -> tuple[Occurrence, ...]:
    return tuple(Occurrence(o.edge, flip(o.sign)) for o in reversed(word))


def _rotations(word: tuple) -> Iterable[tuple]:
    n = len(word)
    for i in range(n):
        yield word[i:] + word[:i]


def min_circle_word(word: Sequence[Occurrence]) -> tuple[Occurrence, ...]:
    """Least rotation of ``word`` or of its reversal (signs flipped)."""
    word = tuple(word)
    if not word:
        return word
    cands = list(_rotations(word)) + list(_rotations(_reverse_word(word)))
    return min(cands, key=word_key)


def canonical_form(p: ArrowPresentation) -> ArrowPresentation:
    """Least representative under rotation and reflection of each circle and
    reordering of circles.  Circles are ordered by word, then by id."""
    circles = [Circle(c.id, min_circle_word(c.word)) for c in p.circles]
    circles.sort(key=lambda c: (word_key(c.word), edge_key(c.id)))
    return ArrowPresentation(tuple(circles))


def same_canonical_form(p: ArrowPresentation, q: ArrowPresentation) -> bool:
    """Componentwise equality of canonical forms (circle moves only)."""
    return [c.word for c in p.canonical.circles] == [c.word for c in q.canonical.circles]


def _equivalence_search(words: list[tuple[Occurrence, ...]]) -> tuple:
    """Lexicographically least tuple of circle words when, in addition to the
    circle moves, both arrows of any edge may be reversed together.

    Greedy over circles: the next output circle is the least candidate among
    the remaining circles given the edge reversals already fixed; ties
    branch.  Edges seen for the first time are normalised so their first
    arrow reads '+'.
    """
    best: list = [None]

    def candidates(word):
        if not word:
            return [word]
        return list(_rotations(word)) + list(_rotations(_reverse_word(word)))

    def normalise(word, fixed):
        out, local = [], dict(fixed)
        for o in word:
            f = local.get(o.edge)
            if f is None:
                f = o.sign != "+"
                local[o.edge] = f
            out.append(Occurrence(o.edge, flip(o.sign) if f else o.sign))
        return tuple(out), local

    def rec(remaining: tuple[int, ...], fixed: dict, prefix: tuple):
        if not remaining:
            key = tuple(word_key(w) for w in prefix)
            if best[0] is None or key < best[0][0]:
                best[0] = (key, prefix)
            return
        options = []
        for idx in remaining:
            for cand in candidates(words[idx]):
                nw, local = normalise(cand, fixed)
                options.append((word_key(nw), idx, nw, local))
        low = min(o[0] for o in options)
        if best[0] is not None:
            depth = len(prefix)
            cur = best[0][0]
            if (cur[:depth] + (cur[depth],)) < (
                tuple(word_key(w) for w in prefix) + (low,)
            ):
                return
        seen = set()
        for key, idx, nw, local in options:
            if key != low:
                continue
            sig = (idx, tuple(sorted(local.items())))
            if sig in seen:
                continue
            seen.add(sig)
            rest = tuple(i for i in remaining if i != idx)
            rec(rest, local, prefix + (nw,))

    rec(tuple(range(len(words))), {}, ())
    return best[0][1]


def equivalence_key(p: ArrowPresentation) -> tuple:
    """Complete invariant of the fixed-label ribbon graph presented by ``p``.

    Unlike :func:`canonical_form` this also identifies presentations that
    differ by reversing both arrows of an edge, which leaves the ribbon graph
    unchanged.
    """
    return _equivalence_search([c.word for c in p.circles])


def normal_form(p: ArrowPresentation) -> ArrowPresentation:
    """The presentation spelled by :func:`equivalence_key`, ids ``v1..vn``."""
    return ArrowPresentation(
        tuple(Circle(f"v{i + 1}", w) for i, w in enumerate(equivalence_key(p)))
    )


def equals(p: ArrowPresentation, q: ArrowPresentation) -> bool:
    """Equality of the fixed-label ribbon graphs presented by ``p`` and ``q``.

    Circle rotation, reflection and reordering are ignored, and so is
    reversing both arrows of one edge.
    """
    return p.key == q.key


# -- validation --------------------------------------------------------------


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def validate(p: ArrowPresentation) -> ValidationReport:
    report = ValidationReport()
    ids = Counter(c.id for c in p.circles)
    for cid, n in ids.items():
        if n > 1:
            report.violations.append(f"duplicate circle id {cid!r}")
        if not _LABEL_RE.match(cid):
            report.violations.append(f"bad circle id {cid!r}")
    arity = Counter(o.edge for c in p.circles for o in c.word)
    for e in sorted(arity, key=edge_key):
        if not _LABEL_RE.match(e):
            report.violations.append(f"bad edge label {e!r}")
        if arity[e] != 2:
            report.violations.append(f"arity({e})={arity[e]}")
    for c in p.circles:
        for o in c.word:
            if o.sign not in ("+", "-"):
                report.violations.append(f"bad sign {o.sign!r} on {o.edge}")
    if not report.violations and p.circles:
        from .topology import connected_components

        k = connected_components(p)
        if k > 1:
            report.warnings.append(f"{k} connected components")
    return report

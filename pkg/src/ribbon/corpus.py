"""Test corpus: small bouquets exhaustively, worked examples, hand-built
multi-vertex graphs and seeded random presentations."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .core import ArrowPresentation, Occurrence, make_presentation
from .topology import is_connected, is_eulerian

__all__ = [
    "Corpus",
    "FIVE_LOOP_WORD",
    "TEN_LOOP_WORD",
    "all_bouquets",
    "hand_built",
    "random_presentation",
    "default_corpus",
]

FIVE_LOOP_WORD = "e1 e2 e4 e3 e2 e1 e3 e4 e5 e5"
TEN_LOOP_WORD = "e1 e7 e8 e10 e1 e10 e3 e4 e6 e9 e8 e4 e7 e9 e3 e2 e5 e6 e5 e2"


def all_plus(word: str) -> ArrowPresentation:
    return make_presentation([" ".join(x + "+" for x in word.split())])


@dataclass
class Corpus:
    graphs: dict[str, ArrowPresentation] = field(default_factory=dict)
    seed: int = 0
    max_random_edges: int = 10

    def add(self, name: str, p: ArrowPresentation) -> None:
        self.graphs[name] = p

    def select(self, max_edges: int | None = None, connected: bool = True,
               eulerian: bool | None = None, min_edges: int = 0):
        for name, p in self.graphs.items():
            if max_edges is not None and p.num_edges > max_edges:
                continue
            if p.num_edges < min_edges:
                continue
            if connected and not is_connected(p):
                continue
            if eulerian is not None and is_eulerian(p) != eulerian:
                continue
            yield name, p

    def __len__(self) -> int:
        return len(self.graphs)


def _relabel_normal(seq: list[tuple[int, str]]) -> tuple:
    """Relabel by first appearance and make every first arrow '+'."""
    names: dict[int, int] = {}
    firstsign: dict[int, str] = {}
    out = []
    for e, s in seq:
        if e not in names:
            names[e] = len(names)
            firstsign[e] = s
        out.append((names[e], "+" if s == firstsign[e] else "-"))
    return tuple(out)


def _orbit_min(seq: list[tuple[int, str]]) -> tuple:
    n = len(seq)
    rev = [(e, "-" if s == "+" else "+") for e, s in reversed(seq)]
    best: tuple = ()
    for base in (seq, rev):
        for i in range(n):
            cand = _relabel_normal(base[i:] + base[:i])
            if not best or cand < best:
                best = cand
    return best


def _matchings(n: int):
    """Double occurrence words of length 2n, labels in first-appearance order."""
    def rec(word, next_label, open_labels):
        if len(word) == 2 * n:
            yield tuple(word)
            return
        if next_label < n:
            yield from rec(word + [next_label], next_label + 1, open_labels + [next_label])
        for lab in open_labels:
            rest = [x for x in open_labels if x != lab]
            yield from rec(word + [lab], next_label, rest)
    yield from rec([], 0, [])


@lru_cache(maxsize=None)
def all_bouquets(m: int) -> tuple[ArrowPresentation, ...]:
    """One-vertex presentations with ``m`` edges over both arrow directions,
    one per class under rotation, reflection and relabelling."""
    reps = {}
    for word in _matchings(m):
        for signs in product("+-", repeat=m):
            seen: set[int] = set()
            seq = []
            for e in word:
                s = "+" if e not in seen else signs[e]
                seen.add(e)
                seq.append((e, s))
            key = _orbit_min(seq)
            reps.setdefault(key, key)
    out = []
    for key in sorted(reps):
        occ = [Occurrence(f"e{e + 1}", s) for e, s in key]
        out.append(make_presentation({"v": occ}))
    return tuple(out)


def _k5() -> ArrowPresentation:
    # K5 on vertices 0..4, rotation: neighbours in increasing cyclic order
    edges = {}
    label = 1
    for a in range(5):
        for b in range(a + 1, 5):
            edges[(a, b)] = f"e{label}"
            label += 1
    circles = {}
    for v in range(5):
        word = []
        for d in range(1, 5):
            u = (v + d) % 5
            word.append(edges[tuple(sorted((u, v)))] + "+")
        circles[f"u{v}"] = word
    return make_presentation(circles)


def hand_built() -> dict[str, ArrowPresentation]:
    g = {
        "untwisted_loop": make_presentation(["e1+ e1+"]),
        "twisted_loop": make_presentation(["e1+ e1-"]),
        "interlaced_pair": make_presentation(["e1+ e2+ e1+ e2+"]),
        "single_edge": make_presentation(["e1+", "e1+"]),
        "digon": make_presentation(["e1+ e2+", "e2+ e1+"]),
        "four_parallel": make_presentation(["e1+ e2+ e3+ e4+", "e4+ e3+ e2+ e1+"]),
        "four_parallel_twisted": make_presentation(["e1+ e2- e3+ e4+", "e4+ e3+ e2+ e1+"]),
        "triangle": make_presentation(["e1+ e3+", "e2+ e1+", "e3+ e2+"]),
        "double_triangle": make_presentation(
            ["e1+ e2+ e5+ e6+", "e3+ e4+ e2+ e1+", "e6+ e5+ e4+ e3+"]
        ),
        "square": make_presentation(["e1+ e4+", "e2+ e1+", "e3+ e2+", "e4+ e3+"]),
        "theta": make_presentation(["e1+ e2+ e3+", "e3+ e2+ e1+"]),
        "triangle_pendant": make_presentation(["e1+ e3+ e4+", "e2+ e1+", "e3+ e2+", "e4+"]),
        "loops_on_edge": make_presentation(["e1+ e2+ e2+", "e1+ e3- e3-"]),
        "k4": make_presentation(
            ["e1+ e2+ e3+", "e1+ e5+ e4+", "e2+ e4+ e6+", "e3+ e6+ e5+"]
        ),
        "k5": _k5(),
        "five_loop_word": all_plus(FIVE_LOOP_WORD),
        "ten_loop_word": all_plus(TEN_LOOP_WORD),
    }
    return g


def random_presentation(
    rng: random.Random, m: int, v: int, eulerian: bool = False
) -> ArrowPresentation:
    """Random connected presentation with ``m`` edges on ``v`` circles."""
    if v > m + 1 or v < 1 or (v > 1 and m == 0):
        raise ValueError("cannot connect that many circles")
    while True:
        labels = [f"e{i}" for i in range(1, m + 1) for _ in (0, 1)]
        rng.shuffle(labels)
        words: list[list[str]] = [[] for _ in range(v)]
        for i, e in enumerate(labels):
            words[i if i < v else rng.randrange(v)].append(e + rng.choice("+-"))
        if eulerian and any(len(w) % 2 for w in words):
            continue
        p = make_presentation(words)
        if is_connected(p):
            return p


def default_corpus(seed: int = 20240601, max_bouquet_edges: int = 4,
                   n_random: int = 60, max_random_edges: int = 10) -> Corpus:
    c = Corpus(seed=seed, max_random_edges=max_random_edges)
    for m in range(max_bouquet_edges + 1):
        for i, b in enumerate(all_bouquets(m)):
            c.add(f"bouquet_m{m}_{i}", b)
    for name, p in hand_built().items():
        c.add(name, p)
    rng = random.Random(seed)
    for i in range(n_random):
        m = rng.randint(1, max_random_edges)
        v = rng.randint(1, min(5, m + 1))
        eulerian = i % 2 == 0
        if eulerian and v > m:
            v = max(1, m)
        c.add(f"random_{i}_m{m}_v{v}{'_eul' if eulerian else ''}",
              random_presentation(rng, m, v, eulerian))
    return c

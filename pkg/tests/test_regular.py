from itertools import combinations, product

import pytest

from ribbon.core import PresentationError, make_presentation
from ribbon.corpus import FIVE_LOOP_WORD, TEN_LOOP_WORD, all_bouquets, all_plus
from ribbon.oracle import brute_regular_duals
from ribbon.regular import (
    CyclicWord,
    cyclic_word,
    d_length,
    d_lengths,
    enumerate_regular_partial_duals,
    find_sms_sets,
    is_sms_set,
    predicted_degree_sequence,
    regular_witnesses,
    shorter_sequences,
)
from ribbon.spanning import all_subsets, spanning_quasi_trees
from ribbon.topology import degrees
from ribbon.twist import partial_dual

W5 = cyclic_word(all_plus(FIVE_LOOP_WORD))


def arc(w, e, which=0):
    return shorter_sequences(w, e)[which]


def all_sms_sets(w):
    """Every SMS set of ``w``, by brute force over edges and tie choices."""
    loops = [e for e in w.edges() if w.is_orientable_loop(e)]
    for r in range(len(loops) + 1):
        for es in combinations(loops, r):
            for choice in product(*(shorter_sequences(w, e) for e in es)):
                if is_sms_set(w, choice):
                    yield choice


class TestCyclicWord:
    def test_example_word(self):
        assert " ".join(o.edge for o in W5.letters) == FIVE_LOOP_WORD

    def test_loop(self, loop):
        assert [str(o) for o in cyclic_word(loop).letters] == ["e1+", "e1+"]

    def test_not_a_bouquet(self):
        with pytest.raises(PresentationError):
            cyclic_word(make_presentation(["e1+", "e1+"]))


class TestShorterSequences:
    def test_quoted_arcs(self):
        assert arc(W5, "e2").labels(W5) == ("e2", "e4", "e3")
        assert arc(W5, "e5").labels(W5) == ("e5",)
        ties = shorter_sequences(W5, "e1")
        assert all(s.tie for s in ties)
        assert {s.labels(W5) for s in ties} == {
            ("e1", "e2", "e4", "e3", "e2"),
            ("e1", "e3", "e4", "e5", "e5"),
        }

    def test_unknown_edge(self):
        with pytest.raises(PresentationError):
            shorter_sequences(W5, "e9")

    def test_arc_complementarity(self):
        for m in range(1, 5):
            for b in all_bouquets(m):
                w = cyclic_word(b)
                for e in w.edges():
                    i, j = w.positions(e)
                    short = shorter_sequences(w, e)
                    assert (j - i) + (len(w) - (j - i)) == 2 * m
                    assert all(s.length <= m for s in short)
                    assert (len(short) == 2) == (j - i == m)
                    for s in short:
                        assert s.labels(w).count(e) == 1 and s.labels(w)[0] == e


class TestDLength:
    def test_singleton(self):
        s = [arc(W5, "e2")]
        assert d_lengths(W5, s) == [3]
        assert d_length(W5, s, 1) == 3

    def test_disjoint(self):
        s = [arc(W5, "e2"), arc(W5, "e5")]
        assert d_lengths(W5, s) == [3, 1]

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            d_length(W5, [arc(W5, "e2")], 2)
        with pytest.raises(IndexError):
            d_length(W5, [], 1)

    def test_nested(self):
        w = CyclicWord.from_letters("e1 e2 e2 e1 e3 e3 e4 e4")
        s = [arc(w, "e1"), arc(w, "e2")]
        assert [c.labels(w) for c in s] == [("e1", "e2", "e2"), ("e2",)]
        # the inner arc shrinks the outer one, never the other way round
        assert d_lengths(w, s) == [2, 1]


class TestSmsSet:
    def test_ten_loop_word_set(self):
        w = cyclic_word(all_plus(TEN_LOOP_WORD))
        picked = {
            "e2": "e2 e5 e6 e5",
            "e1": "e1 e7 e8 e10",
            "e9": "e9 e8 e4 e7",
            "e3": "e3 e4 e6 e9 e8 e4 e7 e9",
        }
        s = []
        for e, text in picked.items():
            (c,) = [c for c in shorter_sequences(w, e) if " ".join(c.labels(w)) == text]
            s.append(c)
        assert is_sms_set(w, s)
        assert d_lengths(w, s) == [4, 4, 4, 4]
        assert predicted_degree_sequence(w, s) == [4, 4, 4, 4, 4]

    def test_empty(self):
        assert is_sms_set(W5, [])
        assert predicted_degree_sequence(W5, []) == [10]

    def test_crossing(self):
        w = CyclicWord.from_letters("e1 e2 e1 e2")
        assert not is_sms_set(w, [arc(w, "e1", 0), arc(w, "e2", 0)])

    def test_non_orientable_loop_rejected(self):
        w = CyclicWord.from_letters(["e1+", "e1-", "e2+", "e2+"])
        assert not is_sms_set(w, [arc(w, "e1")])
        assert is_sms_set(w, [arc(w, "e2")])

    def test_predicted_single_arc(self):
        b = all_plus(FIVE_LOOP_WORD)
        assert predicted_degree_sequence(b, [arc(W5, "e2")]) == [7, 3]
        assert sorted(degrees(partial_dual(b, ["e2"]))) == [3, 7]

    def test_invalid_set_raises(self):
        w = CyclicWord.from_letters("e1 e2 e1 e2")
        with pytest.raises(ValueError):
            predicted_degree_sequence(w, [arc(w, "e1", 0), arc(w, "e2", 0)])

    def test_degree_formula_on_all_small_sms_sets(self):
        words = [cyclic_word(b) for m in range(1, 5) for b in all_bouquets(m)]
        words.append(W5)
        count = 0
        for w in words:
            b = make_presentation([[str(o) for o in w.letters]])
            for s in all_sms_sets(w):
                count += 1
                got = sorted(degrees(partial_dual(b, [c.edge for c in s])), reverse=True)
                assert predicted_degree_sequence(w, s) == got, (w, s)
        assert count > 500

    def test_find_sms_sets_matches_brute_force(self):
        for m in range(1, 5):
            for b in all_bouquets(m):
                w = cyclic_word(b)
                every = list(all_sms_sets(w))
                for k in range(1, 2 * m + 1):
                    if (2 * m) % k:
                        continue
                    n = 2 * m // k - 1
                    want = {s for s in every if len(s) == n and all(d == k for d in d_lengths(w, s))}
                    got = [frozenset(x) for x in find_sms_sets(w, n, k)]
                    assert len(got) == len(set(got))
                    assert set(got) == {frozenset(x) for x in want}


class TestEnumerator:
    def test_loop_k1(self, loop):
        assert enumerate_regular_partial_duals(loop, 1) == {frozenset({"e1"})}

    def test_loop_k2(self, loop):
        assert enumerate_regular_partial_duals(loop, 2) == {frozenset()}

    def test_interlaced_k4(self, interlaced):
        # one boundary component, so the full dual is again a degree-4 bouquet
        assert enumerate_regular_partial_duals(interlaced, 4) == {frozenset(), frozenset({"e1", "e2"})}
        assert brute_regular_duals(interlaced, 4) == {frozenset(), frozenset({"e1", "e2"})}

    def test_totality(self, loop, interlaced):
        assert enumerate_regular_partial_duals(interlaced, 3) == set()
        assert enumerate_regular_partial_duals(interlaced, 0) == set()
        assert enumerate_regular_partial_duals(loop, 4) == set()

    def test_disconnected(self):
        with pytest.raises(PresentationError):
            enumerate_regular_partial_duals(make_presentation(["e1+ e1+", "e2+ e2+"]), 2)

    def test_witnesses_verify(self, corpus):
        for _, p in corpus.select(max_edges=6):
            for k in (1, 2, 3, 4):
                for wt in regular_witnesses(p, k):
                    assert set(degrees(partial_dual(p, wt.subset))) == {k}
                    assert is_sms_set(wt.word, wt.arcs)

    def test_matches_oracle_on_hand_built(self, corpus):
        for _, p in corpus.select(max_edges=8, min_edges=5):
            for k in (1, 2, 3, 4, 6):
                assert enumerate_regular_partial_duals(p, k) == brute_regular_duals(p, k)


def test_lower_bound_on_extra_edges(corpus):
    """Reaching k-regularity from a bouquet partial dual needs at least
    2m/k - 1 further edges."""
    for _, p in corpus.select(max_edges=6):
        m2 = 2 * p.num_edges
        for q in spanning_quasi_trees(p):
            b = partial_dual(p, q)
            for e2 in all_subsets(p.edges):
                ds = set(degrees(partial_dual(b, e2)))
                if len(ds) == 1:
                    (k,) = ds
                    if k:
                        assert len(e2) >= m2 // k - 1

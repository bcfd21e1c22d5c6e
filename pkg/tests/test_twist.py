from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ribbon.core import Circle, ArrowPresentation, Occurrence, PresentationError, equals, make_presentation
from ribbon.corpus import all_bouquets, hand_built
from ribbon.topology import degrees, is_orientable
from ribbon.twist import (
    LoopClass,
    TwistWord,
    apply_word,
    contract,
    delete,
    loop_class,
    parse_word,
    partial_dual,
    partial_petrial,
    six_partition_form,
    six_partition_to_word,
)

from strategies import loose_presentations, presentations


def P(*words):
    return make_presentation(list(words))


class TestPartialPetrial:
    def test_loop(self, loop):
        assert equals(partial_petrial(loop, ["e1"]), P("e1+ e1-"))

    def test_empty_subset(self, interlaced):
        assert equals(partial_petrial(interlaced, []), interlaced)

    def test_unknown_edge(self, loop):
        with pytest.raises(PresentationError, match="unknown edge"):
            partial_petrial(loop, ["e9"])

    @given(loose_presentations(), st.data())
    def test_involution_and_degrees(self, p, data):
        a = data.draw(st.sets(st.sampled_from(p.edges)) if p.edges else st.just(set()))
        q = partial_petrial(p, a)
        assert equals(partial_petrial(q, a), p)
        assert sorted(degrees(q)) == sorted(degrees(p))

    @given(loose_presentations(), st.data())
    def test_which_arrow_is_flipped_does_not_matter(self, p, data):
        if not p.edges:
            return
        e = data.draw(st.sampled_from(p.edges))
        first = partial_petrial(p, [e])
        # flip e' instead of e''
        done = False
        circles = []
        for c in p.canonical.circles:
            word = []
            for o in c.word:
                if o.edge == e and not done:
                    o, done = Occurrence(e, "-" if o.sign == "+" else "+"), True
                word.append(o)
            circles.append(Circle(c.id, tuple(word)))
        assert equals(ArrowPresentation(tuple(circles)), first)


class TestPartialDual:
    def test_loop(self, loop):
        assert equals(partial_dual(loop, ["e1"]), P("e1+", "e1+"))

    def test_empty_subset(self, interlaced):
        assert equals(partial_dual(interlaced, []), interlaced)

    def test_unknown_edge(self, loop):
        with pytest.raises(PresentationError):
            partial_dual(loop, ["x"])

    def test_twisted_loop_is_self_dual(self, twisted_loop):
        assert equals(partial_dual(twisted_loop, ["e1"]), twisted_loop)

    def test_full_dual_of_triangle_is_two_vertex_theta_like(self):
        tri = P("e1+ e3+", "e2+ e1+", "e3+ e2+")
        d = partial_dual(tri, ["e1", "e2", "e3"])
        assert d.num_circles == 2 and sorted(degrees(d)) == [3, 3]

    @given(loose_presentations(), st.data())
    def test_involution(self, p, data):
        a = data.draw(st.sets(st.sampled_from(p.edges)) if p.edges else st.just(set()))
        assert equals(partial_dual(partial_dual(p, a), a), p)

    @given(presentations(max_edges=6), st.data())
    def test_one_edge_at_a_time(self, p, data):
        a = sorted(data.draw(st.sets(st.sampled_from(p.edges))))
        q = p
        for e in a:
            q = partial_dual(q, [e])
        assert equals(q, partial_dual(p, a))

    @given(loose_presentations(), st.data())
    def test_orientability_is_preserved(self, p, data):
        a = data.draw(st.sets(st.sampled_from(p.edges)) if p.edges else st.just(set()))
        assert is_orientable(partial_dual(p, a)) == is_orientable(p)


class TestDeleteContract:
    def test_delete(self, interlaced, loop):
        assert equals(delete(interlaced, ["e2"]), loop)
        assert equals(delete(loop, []), loop)
        assert delete(loop, ["e1"]).words() == [()]

    def test_contract(self, loop):
        assert contract(P("e1+", "e1+"), ["e1"]).words() == [()]
        assert equals(contract(loop, []), loop)
        assert contract(loop, ["e1"]).words() == [(), ()]

    def test_unknown(self, loop):
        with pytest.raises(PresentationError):
            delete(loop, ["e2"])
        with pytest.raises(PresentationError):
            contract(loop, ["e2"])


class TestWords:
    def test_parse_and_print(self):
        w = parse_word("t{e1,e2}; d{e3} ;t{}")
        assert w.steps == (("tau", frozenset({"e1", "e2"})), ("delta", frozenset({"e3"})), ("tau", frozenset()))
        assert str(w) == "t{e1,e2};d{e3};t{}"
        assert parse_word(str(w)) == w

    def test_parse_errors(self):
        for bad in ("x{e1}", "t{e1", "t e1"):
            with pytest.raises(ValueError):
                parse_word(bad)

    def test_empty_word(self, interlaced):
        assert equals(apply_word(interlaced, TwistWord()), interlaced)
        assert equals(apply_word(interlaced, parse_word("")), interlaced)

    def test_left_to_right(self, loop):
        # tau then delta on the untwisted loop: the twisted loop is self dual
        assert equals(apply_word(loop, parse_word("t{e1};d{e1}")), P("e1+ e1-"))
        # delta then tau: the single edge, twisted, is the same single edge
        assert equals(apply_word(loop, parse_word("d{e1};t{e1}")), P("e1+", "e1+"))

    def test_tdt_equals_dtd_on_loop(self, loop):
        assert equals(
            apply_word(loop, parse_word("t{e1};d{e1};t{e1}")),
            apply_word(loop, parse_word("d{e1};t{e1};d{e1}")),
        )

    def test_unknown_edge(self, loop):
        with pytest.raises(PresentationError):
            apply_word(loop, parse_word("d{e2}"))

    @given(presentations(max_edges=5), st.randoms(use_true_random=False))
    def test_disjoint_subsets_commute(self, p, rnd):
        edges = list(p.edges)
        rnd.shuffle(edges)
        cut = rnd.randrange(len(edges) + 1)
        a, b = edges[:cut], edges[cut:]
        for g, h in product("dt", repeat=2):
            assert equals(apply_word(p, [(g, a), (h, b)]), apply_word(p, [(h, b), (g, a)]))

    @given(presentations(max_edges=5))
    def test_edge_set_preserved(self, p):
        q = apply_word(p, parse_word("t{%s};d{%s}" % (",".join(p.edges), p.edges[0])))
        assert set(q.edges) == set(p.edges)


class TestLoopClass:
    def test_classes(self, loop, twisted_loop):
        assert loop_class(loop, "e1") is LoopClass.ORIENTABLE
        assert loop_class(twisted_loop, "e1") is LoopClass.NON_ORIENTABLE
        assert loop_class(P("e1+", "e1-"), "e1") is LoopClass.NOT_A_LOOP

    def test_unknown(self, loop):
        with pytest.raises(PresentationError):
            loop_class(loop, "e2")


class TestSixPartition:
    def test_identity_part(self, interlaced):
        assert equals(six_partition_form(interlaced, [{"e1", "e2"}, (), (), (), (), ()]), interlaced)

    def test_delta_part(self, interlaced):
        got = six_partition_form(interlaced, [(), {"e1", "e2"}, (), (), (), ()])
        assert equals(got, partial_dual(interlaced, ["e1", "e2"]))

    def test_not_a_partition(self, interlaced):
        with pytest.raises(ValueError):
            six_partition_form(interlaced, [{"e1"}, (), (), (), (), ()])
        with pytest.raises(ValueError):
            six_partition_form(interlaced, [{"e1", "e2"}, {"e1"}, (), (), (), ()])
        with pytest.raises(ValueError):
            six_partition_form(interlaced, [{"e1", "e2"}])

    def test_translation_exhaustive_small_bouquets(self):
        for m in range(1, 4):
            for b in all_bouquets(m):
                for labels in product(range(6), repeat=m):
                    parts = [set() for _ in range(6)]
                    for e, lab in zip(b.edges, labels):
                        parts[lab].add(e)
                    assert equals(six_partition_form(b, parts), apply_word(b, six_partition_to_word(parts)))

    def test_translation_exhaustive_four_edges(self):
        graphs = [p for p in hand_built().values() if p.num_edges == 4]
        graphs += list(all_bouquets(4))[::40]
        for g in graphs:
            for labels in product(range(6), repeat=4):
                parts = [set() for _ in range(6)]
                for e, lab in zip(g.edges, labels):
                    parts[lab].add(e)
                assert equals(six_partition_form(g, parts), apply_word(g, six_partition_to_word(parts)))

    @given(presentations(max_edges=4), st.randoms(use_true_random=False))
    def test_translation_random(self, p, rnd):
        parts = [set() for _ in range(6)]
        for e in p.edges:
            parts[rnd.randrange(6)].add(e)
        assert equals(six_partition_form(p, parts), apply_word(p, six_partition_to_word(parts)))


def test_group_relations_on_bouquets():
    for m in range(1, 4):
        for b in all_bouquets(m):
            for e in b.edges:
                assert equals(apply_word(b, [("d", [e])] * 2), b)
                assert equals(apply_word(b, [("t", [e])] * 2), b)
                assert equals(apply_word(b, [("d", [e]), ("t", [e])] * 3), b)

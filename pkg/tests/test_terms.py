from collections import Counter
from random import Random

import pytest
from hypothesis import given, settings, strategies as st

from leibnil.algebra import full_ideal
from leibnil.fields import QQ
from leibnil.linalg import vector
from leibnil.terms import (
    ExprSyntaxError,
    Leaf,
    LinComb,
    Node,
    RightWord,
    as_right_word,
    evaluate,
    leaves,
    lincomb,
    measures,
    normalize,
    parse,
    potential,
    psom_expand,
    tree_text,
)

from .conftest import FIXTURE_NAMES
from .strategies import trees, vectors


def word(*labels):
    return RightWord(tuple(
        Leaf(lbl[:-1], True) if lbl.endswith("!") else Leaf(lbl) for lbl in labels))


class TestParse:
    def test_single_generator(self):
        assert parse("a") == Leaf("a")

    def test_star_is_left_associative(self):
        assert parse("a*b*c") == Node(Node(Leaf("a"), Leaf("b")), Leaf("c"))

    def test_explicit_brackets(self):
        assert parse("[a,[b,c]]") == Node(Leaf("a"), Node(Leaf("b"), Leaf("c")))

    def test_parens_only_group(self):
        assert parse("(a*b)*c") == parse("a*b*c")
        assert parse("a*(b*c)") == Node(Leaf("a"), Node(Leaf("b"), Leaf("c")))

    def test_tag_suffix(self):
        assert parse("a!") == Leaf("a", in_b=True)
        assert parse("ab_1!*x") == Node(Leaf("ab_1", in_b=True), Leaf("x"))

    @pytest.mark.parametrize("bad", ["", "   ", "a**b", "[a,b", "a)", "*a",
                                     "[a;b]", "a*(b", "a b"])
    def test_syntax_errors(self, bad):
        with pytest.raises(ExprSyntaxError):
            parse(bad)

    def test_error_carries_position(self):
        with pytest.raises(ExprSyntaxError) as exc:
            parse("a*;b")
        assert exc.value.position == 2


class TestMeasures:
    def test_plain_leaf(self):
        assert measures(Leaf("a")) == (1, 0)

    def test_tagged_counting(self):
        assert measures(parse("a!*x*b!")) == (3, 2)

    def test_split_bookkeeping(self):
        # length of Q0*(P) equals length(Q0) + length(P), leaves are disjoint
        q0, p = parse("q*r"), parse("a*b*c")
        combined = Node(q0, p)
        assert measures(combined)[0] == measures(q0)[0] + measures(p)[0]


class TestRightWords:
    def test_round_trip_through_tree(self):
        w = word("a", "b!", "c")
        assert as_right_word(w.as_tree()) == w

    def test_non_right_tree_is_rejected(self):
        assert as_right_word(parse("a*(b*c)")) is None

    def test_potential_zero_iff_right_word(self):
        assert potential(parse("a*b*c*d")) == 0
        assert potential(parse("a*(b*c)")) > 0

    @given(trees())
    def test_potential_zero_characterizes_right_words(self, t):
        assert (potential(t) == 0) == (as_right_word(t) is not None)


class TestNormalize:
    def test_right_word_is_a_fixed_point(self):
        assert normalize(parse("a*b*c")) == lincomb({word("a", "b", "c"): 1})

    def test_basic_rewrite(self):
        assert str(normalize(parse("a*(b*c)"))) == "+1*[a,b,c] -1*[a,c,b]"

    def test_length_four_expansion(self):
        # derived by applying the rewrite twice by hand; cross-checked below
        # against the evaluation oracle
        got = normalize(parse("x*(a3*a2*a1)")).as_dict()
        assert got == {
            word("x", "a3", "a2", "a1"): 1,
            word("x", "a2", "a3", "a1"): -1,
            word("x", "a1", "a3", "a2"): -1,
            word("x", "a1", "a2", "a3"): 1,
        }

    def test_repeated_generators_cancel(self):
        # a*(a*a) -> [a,a,a] - [a,a,a] = 0
        assert normalize(parse("a*(a*a)")).is_zero()

    @given(trees())
    def test_output_words_preserve_length_weight_multiset(self, t):
        length, weight = measures(t)
        multiset = Counter((leaf.name, leaf.in_b) for leaf in leaves(t))
        combo = normalize(t)
        for w, coeff in combo.terms:
            assert coeff != 0
            assert w.length == length and w.weight == weight
            assert Counter((leaf.name, leaf.in_b) for leaf in w.factors) == multiset

    @given(trees())
    def test_terms_are_sorted_and_unique(self, t):
        combo = normalize(t)
        keys = [w.sort_key() for w, _ in combo.terms]
        assert keys == sorted(keys) and len(keys) == len(set(keys))


class TestLinComb:
    def test_zero_prints_as_zero(self):
        assert str(lincomb({})) == "0"

    def test_sum_and_difference_cancel(self):
        a = normalize(parse("a*(b*c)"))
        assert (a - a).is_zero()
        assert (a + a).scale(0).is_zero()

    def test_scale_collects(self):
        a = lincomb({word("a", "b"): 2})
        assert a.scale(3).as_dict() == {word("a", "b"): 6}


class TestPsomExpand:
    def test_single_factor_base_case(self):
        terms = psom_expand(parse("q*r"), word("a"))
        assert len(terms) == 1
        assert terms[0].sign == 1 and terms[0].p_word is None
        assert terms[0].tree == Node(parse("q*r"), Leaf("a"))

    def test_two_factor_signs(self):
        q0 = Leaf("q")
        terms = psom_expand(q0, word("a2", "a1"))
        assert [t.sign for t in terms] == [1, -1]
        assert [t.label for t in terms] == ["Q0*P1*a1", "Q1*a2"]
        # Q0 P1 a1 = ((q a2) a1); Q1 a2 = -((q a1) a2)
        assert terms[0].tree == parse("q*a2*a1")
        assert terms[1].tree == parse("q*a1*a2")

    def test_three_factor_structure(self):
        terms = psom_expand(Leaf("q"), word("a3", "a2", "a1"))
        assert [t.sign for t in terms] == [1, -1, 1]
        assert terms[0].tree == Node(Node(Leaf("q"), parse("a3*a2")), Leaf("a1"))
        assert terms[1].tree == Node(Node(parse("q*a1"), Leaf("a3")), Leaf("a2"))
        assert terms[2].tree == parse("q*a1*a2*a3")

    def _signed_sum(self, terms):
        total = lincomb({})
        for t in terms:
            total = total + normalize(t.tree).scale(t.sign)
        return total

    @given(trees(max_leaves=4), st.integers(min_value=1, max_value=5), st.data())
    @settings(max_examples=60, deadline=None)
    def test_expansion_agrees_with_normalize(self, q0, m, data):
        names = data.draw(st.lists(st.sampled_from(list("abcde")),
                                   min_size=m, max_size=m))
        tags = data.draw(st.lists(st.booleans(), min_size=m, max_size=m))
        p0 = RightWord(tuple(Leaf(n, b) for n, b in zip(names, tags)))
        whole = normalize(Node(q0, p0.as_tree()))
        assert self._signed_sum(psom_expand(q0, p0)) == whole

    @given(trees(max_leaves=3), st.data())
    @settings(max_examples=40)
    def test_split_equations_hold_structurally(self, q0, data):
        m = data.draw(st.integers(min_value=1, max_value=5))
        p0 = RightWord(tuple(
            Leaf(data.draw(st.sampled_from(list("abc"))), data.draw(st.booleans()))
            for _ in range(m)))
        whole_len, whole_wt = measures(Node(q0, p0.as_tree()))
        for term in psom_expand(q0, p0):
            q_len, q_wt = measures(term.q_tree)
            a_wt = 1 if term.a_leaf.in_b else 0
            if term.p_word is None:
                assert whole_len == q_len + 1
                assert whole_wt == q_wt + a_wt
            else:
                assert whole_len == q_len + term.p_word.length + 1
                assert whole_wt == q_wt + term.p_word.weight + a_wt


class TestEvaluate:
    def test_leaf_returns_assignment(self, l2):
        v = vector(QQ, [1, 2])
        assert evaluate(Leaf("a"), {"a": v}, l2.algebra) == v

    def test_l2_cube_vanishes_both_ways(self, l2):
        alg = l2.algebra
        e1 = vector(QQ, [1, 0])
        t = parse("a*(a*a)")
        assert evaluate(t, {"a": e1}, alg).is_zero()
        assert evaluate(normalize(t), {"a": e1}, alg).is_zero()

    def test_h3_example(self, h3):
        alg = h3.algebra
        env = {"x": vector(QQ, [1, 0, 0]), "y": vector(QQ, [0, 1, 0])}
        t = parse("x*(y*x)")
        assert evaluate(t, env, alg).is_zero()
        assert evaluate(normalize(t), env, alg).is_zero()

    def test_unassigned_generator_rejected(self, l2):
        with pytest.raises(ValueError):
            evaluate(parse("a*b"), {"a": vector(QQ, [1, 0])}, l2.algebra)

    def test_tagged_generator_checked_against_ideal(self, a2):
        alg = a2.algebra
        ideal = a2.ideals["span_e2"]
        inside = {"b": vector(QQ, [0, 1])}
        outside = {"b": vector(QQ, [1, 0])}
        evaluate(parse("b!"), inside, alg, ideal=ideal)
        with pytest.raises(ValueError):
            evaluate(parse("b!"), outside, alg, ideal=ideal)

    @given(st.data())
    @settings(max_examples=80, deadline=None)
    def test_normalization_oracle(self, algebras, data):
        # evaluate(t) == evaluate(normalize(t)) in every bundled algebra
        name = data.draw(st.sampled_from(FIXTURE_NAMES))
        alg = algebras[name].algebra
        t = data.draw(trees())
        env = {n: data.draw(vectors(field=QQ, dim=alg.dim))
               for n in {leaf.name for leaf in leaves(t)}}
        assert evaluate(t, env, alg) == evaluate(normalize(t), env, alg)


def test_tree_text_round_trips_through_parse():
    t = parse("x*(a!*b)*[c,d]")
    assert parse(tree_text(t)) == t

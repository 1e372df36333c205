import itertools

import pytest

from schubpuzzles.labels import Fl, Gr, LabelString, SpGr
from schubpuzzles.poly import Polynomial, y
from schubpuzzles.weyl import (
    GroupElement,
    act_on_weights,
    all_reduced_words,
    bruhat_leq,
    coset_string,
    positive_roots,
    restriction,
    shortest_lift,
    simple_root,
    subword_restriction,
    subword_sum_over_word,
    word_to_element,
)

parse = LabelString.parse


def all_elements(group_type, rank):
    for perm in itertools.permutations(range(1, rank + 1)):
        if group_type == "A":
            yield GroupElement("A", perm)
        else:
            for signs in itertools.product((1, -1), repeat=rank):
                yield GroupElement("C", tuple(s * p for s, p in zip(signs, perm)))


def bfs_lengths(group_type, rank):
    """Word length of every element by breadth-first search."""
    start = GroupElement.identity(group_type, rank)
    dist = {start: 0}
    frontier = [start]
    gens = list(start.generator_indices())
    while frontier:
        new = []
        for w in frontier:
            for i in gens:
                v = w.right_mult(i)
                if v not in dist:
                    dist[v] = dist[w] + 1
                    new.append(v)
        frontier = new
    return dist


def test_word_to_element_worked_example():
    w = word_to_element((2, 3, 1), "C", 3)
    assert w.images == (3, 1, -2)
    assert w.length() == 3
    assert w.one_line() == "3 1 -2"


def test_word_to_element_basics():
    assert word_to_element((), "A", 3).is_identity()
    assert word_to_element((1, 1), "A", 2).is_identity()
    assert word_to_element((3, 3), "C", 3).is_identity()
    with pytest.raises(ValueError):
        word_to_element((3,), "A", 3)


def test_group_axioms_small():
    for group_type, rank in (("A", 3), ("C", 2)):
        elements = list(all_elements(group_type, rank))
        for w in elements:
            assert w * w.inverse() == GroupElement.identity(group_type, rank)
        a, b = elements[3], elements[-1]
        assert (a * b).inverse() == b.inverse() * a.inverse()


def test_lengths_match_bfs():
    for group_type, rank in (("A", 3), ("A", 4), ("C", 2), ("C", 3)):
        dist = bfs_lengths(group_type, rank)
        assert len(dist) == {1: 2, 2: 8, 3: 48}.get(rank, 24) if group_type == "C" else True
        for w, d in dist.items():
            assert w.length() == d, w


def test_reduced_word_round_trip():
    for group_type, rank in (("A", 4), ("C", 3)):
        for w in all_elements(group_type, rank):
            word = w.reduced_word()
            assert len(word) == w.length()
            assert word_to_element(word, group_type, rank) == w
    assert GroupElement.identity("A", 3).reduced_word() == ()
    assert word_to_element((1,), "A", 2).reduced_word() == (1,)


def test_simple_roots():
    assert simple_root("A", 3, 1) == y(1) - y(2)
    assert simple_root("C", 3, 3) == Polynomial.integer(2) * y(3)
    with pytest.raises(ValueError):
        simple_root("A", 3, 3)


def test_act_on_weights():
    w = word_to_element((2, 3, 1), "C", 3)  # images (3, 1, -2)
    assert act_on_weights(w, y(1)) == y(3)
    assert act_on_weights(w, y(3)) == -y(2)
    assert act_on_weights(w, y(1) + y(3)) == y(3) - y(2)


def test_coset_string():
    omega = parse("021")
    assert coset_string(GroupElement.identity("A", 3), omega) == omega
    assert coset_string(word_to_element((1,), "A", 2), parse("01")) == parse("10")
    # the sign generator fixes the base string of SpGr(1,2)
    omega_sp = SpGr(1, 2).omega()
    assert coset_string(word_to_element((2,), "C", 2), omega_sp) == omega_sp
    assert coset_string(word_to_element((1,), "C", 2), omega_sp) == parse("20")


def test_shortest_lift_examples():
    gr = Gr(1, 2)
    assert shortest_lift(gr.omega(), gr.omega(), "A").is_identity()
    assert shortest_lift(parse("10"), gr.omega(), "A").images == (2, 1)
    lift = shortest_lift(parse("20"), SpGr(1, 2).omega(), "C")
    assert lift.length() == 1


def test_shortest_lift_not_in_orbit():
    with pytest.raises(ValueError, match="orbit"):
        shortest_lift(parse("11"), Gr(1, 2).omega(), "A")
    with pytest.raises(ValueError, match="orbit"):
        shortest_lift(parse("00"), SpGr(1, 2).omega(), "C")


def _spaces_small():
    yield Gr(1, 2)
    yield Gr(1, 3)
    yield Gr(2, 4)
    yield Fl(1, 2, 3)
    yield SpGr(1, 2)
    yield SpGr(2, 2)
    yield SpGr(1, 3)


def test_shortest_lift_minimal_and_round_trip():
    for space in _spaces_small():
        omega = space.omega()
        best: dict = {}
        for w in all_elements(space.weyl_type, space.rank):
            s = coset_string(w, omega)
            best[s] = min(best.get(s, 99), w.length())
        for s in space.strings():
            lift = shortest_lift(s, omega, space.weyl_type)
            assert coset_string(lift, omega) == s
            assert lift.length() == best[s], (str(space), s.compact())


def test_subword_restriction_base_cases():
    s1 = word_to_element((1,), "A", 2)
    ident = GroupElement.identity("A", 2)
    assert subword_restriction(ident, s1) == 1
    assert subword_restriction(s1, ident) == 0  # too long for the word
    assert subword_restriction(s1, s1) == y(1) - y(2)


def test_subword_restriction_diagonal_is_root_product():
    # the restriction of a class at its own point is the full product of
    # the reflected roots along the word, and never vanishes
    for space in (Gr(2, 4), SpGr(1, 2), SpGr(2, 2)):
        omega = space.omega()
        for s in space.strings():
            w = shortest_lift(s, omega, space.weyl_type)
            word = w.reduced_word()
            expected = Polynomial.integer(1)
            prefix = GroupElement.identity(space.weyl_type, space.rank)
            for q in word:
                expected = expected * act_on_weights(
                    prefix, simple_root(space.weyl_type, space.rank, q)
                )
                prefix = prefix.right_mult(q)
            value = subword_restriction(w, w)
            assert value == expected
            assert not value.is_zero


def test_subword_independent_of_reduced_word():
    for group_type, rank in (("A", 3), ("C", 2)):
        for sigma in all_elements(group_type, rank):
            words = list(all_reduced_words(sigma))
            assert len(set(words)) == len(words)
            for pi in all_elements(group_type, rank):
                values = {
                    str(subword_sum_over_word(pi, word)) for word in words
                }
                assert len(values) == 1
                assert values == {str(subword_restriction(pi, sigma))}


def test_bruhat_leq():
    s1 = word_to_element((1,), "A", 2)
    ident = GroupElement.identity("A", 2)
    assert bruhat_leq(ident, s1)
    assert not bruhat_leq(s1, ident)
    w0 = word_to_element((1, 2, 1), "A", 3)
    assert all(bruhat_leq(w, w0) for w in all_elements("A", 3))


def test_restriction_examples():
    gr = Gr(1, 2)
    omega = gr.omega()
    assert restriction(omega, omega, gr) == 1
    assert restriction(parse("10"), parse("10"), gr) == y(1) - y(2)
    # lambda not below mu in Bruhat order restricts to zero
    assert restriction(parse("10"), parse("01"), gr) == 0


def test_restriction_unit_class():
    for space in (Gr(2, 4), SpGr(1, 2), Fl(1, 2, 3)):
        omega = space.omega()
        for mu in space.strings():
            assert restriction(omega, mu, space) == 1


def test_restriction_backends_agree_sweep():
    # both backends run inside restriction(); disagreement raises
    for space in (Gr(2, 4), Fl(1, 2, 3), SpGr(1, 2), SpGr(2, 2)):
        for lam in space.strings():
            for mu in space.strings():
                restriction(lam, mu, space)


def test_positive_roots():
    roots_a = positive_roots("A", 3)
    assert len(roots_a) == 3
    roots_c = positive_roots("C", 2)
    assert len(roots_c) == 4
    assert Polynomial.integer(2) * y(1) in roots_c


def test_coset_string_length_mismatch():
    with pytest.raises(ValueError):
        coset_string(GroupElement.identity("A", 3), parse("01"))

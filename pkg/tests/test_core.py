import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affine_schubert.core import (
    AffinePermutation,
    Transposition,
    evaluate_word,
    from_window,
    identity,
    parse_window,
    random_element,
    simple_reflection,
)
from affine_schubert.errors import (
    BadArity,
    DistinctResidueViolation,
    InvalidArgs,
    PeriodMismatch,
    WindowSumViolation,
)

from oracles import ball, brute_length

W = from_window(6, [8, 3, 1, 0, 4, 5])


@st.composite
def elements(draw, n_min=2, n_max=6, max_len=14):
    n = draw(st.integers(n_min, n_max))
    word = draw(st.lists(st.integers(0, n - 1), max_size=max_len))
    return evaluate_word(n, word)


def test_window_validation():
    assert from_window(3, [1, 2, 3]).is_identity()
    with pytest.raises(DistinctResidueViolation):
        from_window(3, [1, 1, 4])
    with pytest.raises(WindowSumViolation):
        from_window(3, [1, 2, 6])
    with pytest.raises(BadArity):
        from_window(3, [1, 2])


def test_periodic_evaluation():
    assert W(7) == 14
    assert W(-5) == 2
    assert W.values(7, 12) == [14, 9, 7, 6, 10, 11]
    assert all(identity(4)(k) == k for k in range(-9, 9))


def test_group_operations():
    e = identity(6)
    assert e.inverse() == e
    assert W * W.inverse() == e
    assert W.inverse() * W == e
    assert from_window(3, [1, 2, 3]).right_multiply_transposition(Transposition(3, 1, 2)) == from_window(3, [2, 1, 3])
    with pytest.raises(PeriodMismatch):
        W * identity(3)


def test_composition_is_function_composition():
    rng = random.Random(3)
    for _ in range(30):
        u, v = random_element(4, 6, rng), random_element(4, 6, rng)
        uv = u * v
        assert all(uv(i) == u(v(i)) for i in range(-8, 9))


def test_transposition_normal_form():
    t = Transposition(5, 7, 3)
    assert t.as_tuple() == (3, 7)
    assert Transposition(5, 8, 12) == Transposition(5, 3, 7)
    with pytest.raises(InvalidArgs):
        Transposition(5, 2, 7)


def test_swap_values_matches_left_multiplication():
    t = Transposition(6, 2, 9).element()
    assert W.swap_values(2, 9) == t * W
    assert W.swap_positions(2, 9) == W * t


def test_s0_window():
    s0 = simple_reflection(3, 0)
    assert s0 == from_window(3, [0, 2, 4])
    assert s0.length() == 1 == s0.length_shi()


def test_lengths_small():
    assert identity(5).length() == 0
    assert simple_reflection(3, 1).length() == 1
    assert W.length() == brute_length(W) == 10


def test_length_formulas_agree_exhaustively_n3():
    for w in ball(3, 10):
        assert w.length() == w.length_shi() == brute_length(w)


@settings(max_examples=200, deadline=None)
@given(elements())
def test_length_properties(w):
    assert w.length() == w.length_shi()
    assert w.length() == w.inverse().length()
    for s in range(w.n):
        u = w.right_mul_simple(s)
        if s in w.right_descents():
            assert u.length() == w.length() - 1
        else:
            assert u.length() == w.length() + 1


@settings(max_examples=200, deadline=None)
@given(elements())
def test_reduced_word_round_trip(w):
    word = w.reduced_word()
    assert len(word) == w.length()
    assert evaluate_word(w.n, word) == w
    assert from_window(w.n, w.window) == w


def test_descents():
    assert identity(4).right_descents() == set()
    s2 = simple_reflection(4, 2)
    assert s2.right_descents() == {2}
    assert s2.reduced_word() == [2]


def test_random_reduced_word_is_reduced():
    rng = random.Random(11)
    for _ in range(20):
        w = random_element(5, 9, rng)
        word = w.random_reduced_word(rng)
        assert len(word) == w.length() and evaluate_word(5, word) == w


def test_matrix_entries():
    assert all(b == 0 for _, _, b in identity(3).matrix_entries())
    entries = from_window(3, [0, 4, 2]).matrix_entries()
    assert sorted((a, c, b) for a, c, b in entries) == sorted([(3, 1, -1), (1, 2, 1), (2, 3, 0)])
    rng = random.Random(2)
    for _ in range(50):
        w = random_element(5, 12, rng)
        assert sum(b for _, _, b in w.matrix_entries()) == 0


def test_parse_window():
    assert parse_window("8,3,1,0,4,5") == [8, 3, 1, 0, 4, 5]
    assert parse_window("[6, -3, 8, 5, 4, 1]") == [6, -3, 8, 5, 4, 1]
    with pytest.raises(InvalidArgs):
        parse_window("1,x,3")


def test_hash_and_order_use_window():
    a = AffinePermutation(3, [2, 1, 3])
    b = evaluate_word(3, [1])
    assert a == b and hash(a) == hash(b)
    assert len({a, b}) == 1

import random

import pytest

from affine_schubert.bruhat import leq, order_ideal
from affine_schubert.core import evaluate_word, from_window, identity, random_element, simple_reflection
from affine_schubert.errors import InvalidArgs, NotMinimalRep
from affine_schubert.parabolic import (
    complement_of,
    demazure_m,
    in_parabolic,
    is_left_minimal,
    longest_parabolic_element,
    parabolic_decompose,
    quotient_poincare,
    stabilized_interval,
    stabilizes_interval,
)
from affine_schubert.poly import Poly, q_binomial
from affine_schubert.smoothness import cycle_c

from oracles import ball


def test_in_parabolic_basic():
    assert in_parabolic(identity(4), {1})
    assert not in_parabolic(simple_reflection(4, 0), {1, 2, 3})
    with pytest.raises(InvalidArgs):
        in_parabolic(identity(3), {5})


def test_parabolic_membership_is_interval_stabilization():
    for n in (3, 4):
        for w in ball(n, 8 if n == 3 else 6):
            for i in range(n):
                J = complement_of(n, i)
                assert in_parabolic(w, J) == stabilizes_interval(w, stabilized_interval(n, i))


def test_decompose_running_example():
    w = from_window(6, [8, 3, 1, 0, 4, 5])
    u, v = parabolic_decompose(w, complement_of(6, 2))
    assert u == from_window(6, [1, 0, 8, 3, 4, 5])
    assert v == evaluate_word(6, [2, 3, 1, 2])
    assert u * v == w


def test_decompose_member_of_subgroup():
    w = evaluate_word(4, [1, 2, 1])
    assert parabolic_decompose(w, {1, 2}) == (w, identity(4))


def test_decompose_uniqueness_exhaustive_n3():
    elems = ball(3, 7)
    for J in ({1}, {0, 2}, {1, 2}):
        members = [u for u in elems if in_parabolic(u, J)]
        for w in elems:
            u, v = parabolic_decompose(w, J)
            assert u * v == w and in_parabolic(u, J) and is_left_minimal(v, J)
            assert u.length() + v.length() == w.length()
            others = [
                a for a in members
                if a != u
                and is_left_minimal(a.inverse() * w, J)
                and a.length() + (a.inverse() * w).length() == w.length()
            ]
            assert others == []


def test_demazure_m_examples():
    w = evaluate_word(3, [1, 0, 1])
    assert demazure_m(w, {1}) == simple_reflection(3, 1)
    u = evaluate_word(4, [1, 2, 1])
    assert demazure_m(u, {1, 2}) == u


def test_demazure_m_is_maximum_of_ideal_in_subgroup():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(3, 4)
        w = random_element(n, rng.randint(2, 9), rng)
        J = complement_of(n, rng.randrange(n))
        m = demazure_m(w, J)
        assert in_parabolic(m, J) and leq(m, w)
        for y in order_ideal(w):
            if in_parabolic(y, J):
                assert leq(y, m)
        other = w.random_reduced_word(rng)
        assert demazure_m(w, J, other) == m


def test_longest_parabolic_elements():
    assert longest_parabolic_element(3, 0) == from_window(3, [3, 2, 1])
    for n in range(2, 7):
        for i in range(n):
            w0 = longest_parabolic_element(n, i)
            assert (w0 * w0).is_identity()
            assert in_parabolic(w0, complement_of(n, i))
            assert w0.length() == n * (n - 1) // 2


def test_quotient_poincare():
    assert quotient_poincare(identity(4), complement_of(4, 1)) == Poly.one()
    sigma = evaluate_word(6, [2, 3, 1, 2])
    assert quotient_poincare(sigma, complement_of(6, 2)) == q_binomial(4, 2)
    with pytest.raises(NotMinimalRep):
        quotient_poincare(simple_reflection(4, 1), complement_of(4, 0))


@pytest.mark.parametrize("n,k", [(3, 1), (3, 2), (4, 1), (4, 2), (5, 1)])
def test_quotient_poincare_of_cycles(n, k):
    for i in range(n):
        v = cycle_c(n, i, k * (n - 1))
        assert quotient_poincare(v, complement_of(n, i)) == q_binomial(k + n - 1, k)

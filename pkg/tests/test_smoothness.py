import random

import pytest

from affine_schubert.bruhat import poincare
from affine_schubert.core import evaluate_word, from_window, identity, random_element, simple_reflection
from affine_schubert.errors import IdentityInput, InvalidArgs, NoFactoringSubword, PatternPresent
from affine_schubert.parabolic import demazure_m, in_parabolic, is_left_minimal, quotient_poincare
from affine_schubert.patterns import P3412, avoids, avoids_both, contains
from affine_schubert.poly import Poly, q_binomial, q_factorial
from affine_schubert.smoothness import (
    alpha_subword,
    classify,
    classify_by_poincare,
    find_factoring_subword,
    is_factoring_subword,
    left_to_right_maxima,
    poincare_factored,
    psi,
    psi_steps,
    recognize_spiral,
    right_to_left_maxima,
    spiral_swap_rhs,
    twisted_spiral,
)

from oracles import ball, brute_contains, brute_length

W = from_window(6, [8, 3, 1, 0, 4, 5])


def avoider_sample(n, L):
    return [w for w in ball(n, L) if avoids_both(w)]


# --------------------------------------------------------------------------
# twisted spirals


def test_spiral_arguments():
    with pytest.raises(InvalidArgs):
        twisted_spiral(2, 0, 1)
    with pytest.raises(InvalidArgs):
        twisted_spiral(3, 0, 0)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_spiral_lengths(n):
    for i in range(n):
        for k in (-3, -2, -1, 1, 2, 3):
            w = twisted_spiral(n, i, k)
            assert w.length() == brute_length(w) == n * (n - 1) // 2 + abs(k) * (n - 1)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_spiral_swap_identity(n):
    for i in range(n):
        for k in (-3, -2, -1, 1, 2, 3):
            assert twisted_spiral(n, i, k) == spiral_swap_rhs(n, i, k)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_spiral_round_trip_and_inverse(n):
    family = {twisted_spiral(n, i, k) for i in range(n) for k in (-3, -2, -1, 1, 2, 3)}
    for i in range(n):
        for k in (-3, -2, -1, 1, 2, 3):
            w = twisted_spiral(n, i, k)
            found = recognize_spiral(w)
            assert found is not None and twisted_spiral(n, *found) == w
            assert w.inverse() in family


def test_non_spirals_are_not_recognized():
    assert recognize_spiral(identity(4)) is None
    assert recognize_spiral(W) is None
    assert recognize_spiral(simple_reflection(2, 0)) is None


@pytest.mark.parametrize("k", [1, 2])
def test_spiral_poincare_n3(k):
    for i in range(3):
        assert poincare(twisted_spiral(3, i, k)) == q_factorial(3) * q_binomial(k + 2, k)


def test_spiral_pattern_content():
    # spirals with |k| >= 2 contain 3412; those with |k| = 1 avoid it
    for n in (3, 4, 5):
        for i in range(n):
            for k in (-2, 2, -3, 3):
                w = twisted_spiral(n, i, k)
                assert contains(w, P3412) is not None
            for k in (-1, 1):
                w = twisted_spiral(n, i, k)
                assert avoids(w, P3412)
                assert brute_contains(w, P3412.perm, 4 * (n + w.spread())) is None


def test_spirals_within_avoiders_are_the_k1_family():
    for n, L in ((3, 10), (4, 9)):
        for w in avoider_sample(n, L):
            found = recognize_spiral(w)
            if found is not None:
                assert abs(found[1]) == 1


# --------------------------------------------------------------------------
# alpha-inversions and factoring subwords


def test_maxima_helpers():
    assert left_to_right_maxima([3, 1, 4, 1, 5]) == [0, 2, 4]
    assert right_to_left_maxima([8, 3, 1, 0, 4, 5, 7, 6]) == [0, 6, 7]


def test_alpha_subword_examples():
    a = alpha_subword(W)
    assert a.alpha == 1
    assert a.v == (8, 3, 1, 0, 4, 5, 7, 6)
    assert a.u == (8, 7, 6)
    s = alpha_subword(simple_reflection(3, 1))
    assert s.v == (2, 1) and s.u == (2, 1)
    with pytest.raises(IdentityInput):
        alpha_subword(identity(3))


def test_alpha_subword_shape_for_avoiders():
    for w in avoider_sample(3, 6) + avoider_sample(4, 8):
        if w.is_identity():
            continue
        a = alpha_subword(w)
        if a.v != a.u:
            top = a.u[0]
            assert a.u == tuple(range(top, top - len(a.u), -1))


def test_factoring_subword_example():
    f = find_factoring_subword(W)
    assert f.carrier == "self"
    assert f.values == (14, 9, 7, 6)
    assert f.pivot == 2 and f.pivot_value == 9
    assert f.start + f.pivot - 1 == 8


def test_factoring_subword_of_simple_reflection():
    for i in range(3):
        f = find_factoring_subword(simple_reflection(3, i))
        top = f.values[0]
        assert f.values == (top, top - 1) and f.pivot == 1


def test_factoring_subwords_exist_for_avoiders():
    for w in avoider_sample(3, 6) + avoider_sample(4, 12):
        if w.is_identity():
            continue
        f = find_factoring_subword(w)
        assert f is not None
        assert is_factoring_subword(f.element, f.start, f.end)
        assert f.element in (w, w.inverse())


# --------------------------------------------------------------------------
# the factoring map


def test_psi_running_example():
    step = psi(W)
    assert step.w_prime == from_window(6, [1, 0, 8, 3, 4, 5])
    assert step.sigma == evaluate_word(6, [2, 3, 1, 2])
    assert step.sigma.reduced_word() == [2, 3, 1, 2]
    assert step.d == 2
    assert step.factor == q_binomial(4, 2)
    assert step.w_prime * step.sigma == W


def test_psi_errors():
    with pytest.raises(IdentityInput):
        psi(identity(3))
    with pytest.raises(PatternPresent):
        psi_steps(from_window(6, [8, 1, 3, 5, 4, 0]))


def test_psi_no_subword_raises():
    rng = random.Random(61)
    for _ in range(400):
        w = random_element(4, 14, rng)
        if find_factoring_subword(w) is None:
            with pytest.raises(NoFactoringSubword):
                psi(w)
            return
    pytest.skip("no element without a factoring subword in the sample")


def test_psi_step_properties():
    for w in avoider_sample(3, 6) + avoider_sample(4, 9):
        if w.is_identity():
            continue
        step = psi(w)
        elem, wp, sigma = step.element, step.w_prime, step.sigma
        assert elem == wp * sigma
        assert elem.length() == wp.length() + sigma.length()
        assert in_parabolic(wp, step.J)
        assert is_left_minimal(sigma, step.J)
        assert sigma.left_descents() == {step.d}
        assert wp == demazure_m(elem, step.J)
        assert avoids_both(wp)
        assert quotient_poincare(sigma, step.J) == step.factor
        assert step.factor.is_palindromic()


def test_poincare_factored_matches_bfs():
    assert poincare_factored(identity(4)) == Poly.one()
    assert poincare_factored(W) == poincare(W)
    for w in avoider_sample(3, 6) + avoider_sample(4, 12):
        p = poincare_factored(w)
        assert p == poincare(w)
        assert p.is_palindromic()


# --------------------------------------------------------------------------
# classification


def test_classify_examples():
    assert classify(identity(3)).reason == "avoider"
    v = classify(from_window(6, [8, 1, 3, 5, 4, 0]))
    assert not v.smooth and v.pattern == "4231"
    assert v.to_json()["verdict"] == "not_rationally_smooth"
    for i in range(3):
        s = classify(twisted_spiral(3, i, 2))
        assert s.smooth and s.reason == "twisted_spiral"
        assert poincare(twisted_spiral(3, i, 2)).is_palindromic()
    assert classify(simple_reflection(2, 0)).reason == "small_rank"


def test_classify_matches_poincare_random_n5():
    rng = random.Random(67)
    for _ in range(60):
        w = random_element(5, rng.randint(0, 11), rng)
        assert classify(w).smooth == classify_by_poincare(w)


def test_avoider_length_bound():
    for n, extra in ((3, 3), (4, 4)):
        for w in avoider_sample(n, n * (n - 1) + extra):
            assert w.length() <= n * (n - 1)

"""Parabolic subgroups, parabolic decompositions and the greedy maximal element ``m(w, J)``."""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .bruhat import DEFAULT_CAP, ideal_levels
from .core import AffinePermutation, identity
from .errors import InvalidArgs, NotMinimalRep
from .poly import Poly, q_binomial, q_factorial

__all__ = [
    "GeneratorSubset",
    "complement_of",
    "in_parabolic",
    "stabilizes_interval",
    "stabilized_interval",
    "parabolic_decompose",
    "is_left_minimal",
    "demazure_m",
    "demazure_product",
    "longest_parabolic_element",
    "quotient_poincare",
    "q_factorial",
    "q_binomial",
]

GeneratorSubset = frozenset


def _as_subset(n: int, J: Iterable[int]) -> frozenset[int]:
    J = frozenset(J)
    if any(not 0 <= s < n for s in J):
        raise InvalidArgs(f"generator subset {sorted(J)} not within 0..{n - 1}")
    return J


def complement_of(n: int, i: int) -> frozenset[int]:
    """``S \\ {s_i}`` with ``i`` read mod ``n`` (so ``s_n`` is ``s_0``)."""
    i %= n
    return frozenset(range(n)) - {i}


def parse_subset(text: str) -> frozenset[int]:
    return frozenset(int(t) for t in text.split(",") if t.strip())


def in_parabolic(w: AffinePermutation, J: Iterable[int]) -> bool:
    J = _as_subset(w.n, J)
    return set(w.reduced_word()) <= J


def stabilizes_interval(w: AffinePermutation, a: int) -> bool:
    """True when ``w`` maps ``[a, a+n-1]`` onto itself."""
    block = range(a, a + w.n)
    return sorted(w(i) for i in block) == list(block)


def stabilized_interval(n: int, i: int) -> int:
    """Left end ``a`` of the interval ``[a, a+n-1]`` fixed setwise by ``W_{S \\ {s_i}}``.

    ``s_j`` for ``j != i`` never moves anything across the boundary between
    ``i + kn`` and ``i + 1 + kn``, so the interval starts at ``i + 1``.
    """
    return (i % n) + 1


def is_left_minimal(v: AffinePermutation, J: Iterable[int]) -> bool:
    J = _as_subset(v.n, J)
    return not (v.left_descents() & J)


def parabolic_decompose(
    w: AffinePermutation, J: Iterable[int]
) -> tuple[AffinePermutation, AffinePermutation]:
    """``w = u * v`` with ``u`` in ``W_J``, ``v`` left-minimal, lengths adding."""
    J = _as_subset(w.n, J)
    u_word: list[int] = []
    v = w
    while True:
        desc = sorted(v.left_descents() & J)
        if not desc:
            break
        s = desc[0]
        v = v.left_mul_simple(s)
        u_word.append(s)
    u = identity(w.n)
    for s in u_word:
        u = u.right_mul_simple(s)
    return u, v


def demazure_product(n: int, word: Sequence[int], J: Optional[Iterable[int]] = None) -> AffinePermutation:
    """Greedy product: keep a letter (from ``J``) whenever it raises the length."""
    J = frozenset(range(n)) if J is None else _as_subset(n, J)
    m = identity(n)
    for s in word:
        if s in J and not m.is_right_descent(s):
            m = m.right_mul_simple(s)
    return m


def demazure_m(
    w: AffinePermutation, J: Iterable[int], word: Optional[Sequence[int]] = None
) -> AffinePermutation:
    """The largest element of ``[e, w]`` lying in ``W_J``."""
    if word is None:
        word = w.reduced_word()
    return demazure_product(w.n, word, J)


def longest_parabolic_element(n: int, i: int) -> AffinePermutation:
    """Longest element of ``W_{S \\ {s_i}}``: reverse ``[a, a+n-1]`` with ``a = i+1``."""
    if n < 2:
        raise InvalidArgs("n must be >= 2")
    a = stabilized_interval(n, i)
    vals = {a + m: a + n - 1 - m for m in range(n)}
    window = []
    for r in range(1, n + 1):
        k = (a - r + n - 1) // n  # smallest k with r + k n >= a
        window.append(vals[r + k * n] - k * n)
    return AffinePermutation(n, window)


def quotient_poincare(
    v: AffinePermutation, J: Iterable[int], cap: int = DEFAULT_CAP
) -> Poly:
    """Rank generating function of the left-minimal representatives below ``v``.

    Obtained by projecting every element of ``[e, v]`` to its minimal coset
    representative; the projection is order preserving and fixes ``[e, v]``'s
    minimal representatives, so the image is exactly the quotient ideal.
    """
    J = _as_subset(v.n, J)
    if not is_left_minimal(v, J):
        raise NotMinimalRep(f"{v} is not a minimal left coset representative for {sorted(J)}")
    reps: set[AffinePermutation] = set()
    for level in ideal_levels(v, cap):
        for y in level:
            reps.add(parabolic_decompose(y, J)[1])
    counts = [0] * (v.length() + 1)
    for r in reps:
        counts[r.length()] += 1
    return Poly(counts)

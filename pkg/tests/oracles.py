"""Slow, definition-level reference computations used to check the library.

None of these share code paths with the fast implementations: they work
from reduced words (subword property), brute-force scans over wide index
ranges, or plain combinatorics.
"""

from __future__ import annotations

from itertools import combinations

from affine_schubert.core import AffinePermutation, identity


def ball(n: int, L: int) -> list[AffinePermutation]:
    """Every element of length <= L, by closing under right multiplication."""
    seen = {identity(n)}
    frontier = [identity(n)]
    for _ in range(L):
        nxt = []
        for w in frontier:
            for s in range(n):
                u = w.right_mul_simple(s)
                if u not in seen and u.length() == w.length() + 1:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return sorted(seen, key=lambda w: (w.length(), w.window))


def brute_length(w: AffinePermutation) -> int:
    """Count inversions (i, j), 1 <= i <= n < ... over a generous index range."""
    n = w.n
    width = n * (max(w.window) - min(w.window) + 2)
    return sum(1 for i in range(1, n + 1) for j in range(i + 1, i + width) if w(i) > w(j))


def subword_ideal(w: AffinePermutation) -> set[AffinePermutation]:
    """All products of subwords of one reduced word of ``w``; equals ``[e, w]``."""
    out = {identity(w.n)}
    for s in w.reduced_word():
        out |= {y.right_mul_simple(s) for y in out}
    return out


def subword_poincare(w: AffinePermutation) -> list[int]:
    counts = [0] * (w.length() + 1)
    for y in subword_ideal(w):
        counts[y.length()] += 1
    return counts


def brute_reflection_set(x, w, ideal=None, width=None) -> set[tuple[int, int]]:
    """Reflections ``t_{p,q}`` with ``x < xt`` in the subword ideal of ``w``."""
    n = w.n
    ideal = subword_ideal(w) if ideal is None else ideal
    width = width or n * (w.length() + 4)
    out = set()
    for p in range(1, n + 1):
        for q in range(p + 1, p + width):
            if (q - p) % n == 0 or x(q) < x(p):
                continue
            if x.swap_positions(p, q) in ideal:
                out.add((p, q))
    return out


def brute_contains(w: AffinePermutation, pattern, radius: int):
    """First occurrence with ``i_1`` in ``[1, n]`` and all positions within the radius."""
    k = len(pattern)
    n = w.n
    for first in range(1, n + 1):
        rest = range(first + 1, first + radius)
        for tail in combinations(rest, k - 1):
            idx = (first, *tail)
            vals = [w(i) for i in idx]
            order = sorted(range(k), key=vals.__getitem__)
            if all(pattern[j] == r for r, j in enumerate(order, 1)):
                return idx
    return None


def bott_series(n: int, L: int) -> list[int]:
    """Growth series of the whole group up to degree ``L`` (Bott's formula).

    ``[n]_q! / prod_{i=1}^{n-1} (1 - q^i)``, expanded as a power series.
    """
    num = [1]
    for i in range(1, n + 1):
        nxt = [0] * (len(num) + i - 1)
        for a, c in enumerate(num):
            for b in range(i):
                nxt[a + b] += c
        num = nxt
    series = (num + [0] * (L + 1))[: L + 1]
    for i in range(1, n):
        for d in range(i, L + 1):
            series[d] += series[d - i]
    return series

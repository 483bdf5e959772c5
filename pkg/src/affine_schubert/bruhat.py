"""Bruhat order on the affine symmetric group.

Comparison uses the rank-difference criterion: ``x <= w`` iff
``r_w(p, q) >= r_x(p, q)`` everywhere, where ``r_w(p, q) = #{i <= p : w(i) >= q}``.
Order ideals are built downward through covers, one length level at a time.
"""

from __future__ import annotations

from functools import lru_cache

from .core import AffinePermutation, Transposition
from .errors import CapacityExceeded, NotComparable, PeriodMismatch
from .poly import Poly

__all__ = [
    "DEFAULT_CAP",
    "rank",
    "rank_prime",
    "difference",
    "difference_prime",
    "leq",
    "leq_prime",
    "covers_down",
    "covers_down_by_length",
    "ideal_levels",
    "order_ideal",
    "poincare",
    "is_palindromic",
    "reflection_set",
    "support_size",
    "coatom_count",
]

DEFAULT_CAP = 5_000_000


def rank(w: AffinePermutation, p: int, q: int) -> int:
    """``#{i <= p : w(i) >= q}``."""
    n = w.n
    total = 0
    for r, v in enumerate(w.window, 1):
        kmax = (p - r) // n
        kmin = -((v - q) // n)
        if kmax >= kmin:
            total += kmax - kmin + 1
    return total


def rank_prime(w: AffinePermutation, p: int, q: int) -> int:
    """``#{i >= p : w(i) <= q}``."""
    n = w.n
    total = 0
    for r, v in enumerate(w.window, 1):
        kmin = -((r - p) // n)
        kmax = (q - v) // n
        if kmax >= kmin:
            total += kmax - kmin + 1
    return total


def difference(x: AffinePermutation, w: AffinePermutation, p: int, q: int) -> int:
    return rank(w, p, q) - rank(x, p, q)


def difference_prime(x: AffinePermutation, w: AffinePermutation, p: int, q: int) -> int:
    return rank_prime(w, p, q) - rank_prime(x, p, q)


def _value_range(x: AffinePermutation, w: AffinePermutation) -> range:
    # d vanishes for q <= min(values) and q > max(values) when 1 <= p <= n
    lo = min(min(x.window), min(w.window))
    hi = max(max(x.window), max(w.window))
    return range(lo, hi + 2)


def leq(x: AffinePermutation, w: AffinePermutation) -> bool:
    if x.n != w.n:
        raise PeriodMismatch(f"periods differ: {x.n} != {w.n}")
    if x == w:
        return True
    qs = _value_range(x, w)
    for p in range(1, w.n + 1):
        for q in qs:
            if rank(w, p, q) < rank(x, p, q):
                return False
    return True


def leq_prime(x: AffinePermutation, w: AffinePermutation) -> bool:
    """Same order, tested with ``r'_w(p, q) = #{i >= p : w(i) <= q}``."""
    if x.n != w.n:
        raise PeriodMismatch(f"periods differ: {x.n} != {w.n}")
    qs = range(min(min(x.window), min(w.window)) - 1, max(max(x.window), max(w.window)) + 1)
    for p in range(1, w.n + 1):
        for q in qs:
            if rank_prime(w, p, q) < rank_prime(x, p, q):
                return False
    return True


@lru_cache(maxsize=1 << 20)
def covers_down(w: AffinePermutation) -> tuple[tuple[Transposition, AffinePermutation], ...]:
    """All ``u = w t_{i,j}`` covered by ``w``.

    ``(i, j)`` qualifies when ``w(i) > w(j)``, no value strictly between them
    sits between positions ``i`` and ``j``, and ``j - i < n`` or
    ``w(i) - w(j) < n``.
    """
    n = w.n
    spread = w.spread()
    out = []
    for i in range(1, n + 1):
        wi = w(i)
        best_below = None  # largest value < w(i) seen strictly between i and j
        for j in range(i + 1, i + spread):
            wj = w(j)
            if wj > wi:
                continue
            if best_below is None or wj > best_below:
                if j - i < n or wi - wj < n:
                    out.append((Transposition(n, i, j), w.swap_positions(i, j)))
                best_below = wj
    return tuple(out)


def covers_down_by_length(w: AffinePermutation) -> list[AffinePermutation]:
    """Definitional cover list: reflections that drop the length by exactly one."""
    n, spread, lw = w.n, w.spread(), w.length()
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, i + spread):
            if (j - i) % n and w(j) < w(i):
                u = w.swap_positions(i, j)
                if u.length() == lw - 1:
                    out.append(u)
    return out


def ideal_levels(w: AffinePermutation, cap: int = DEFAULT_CAP) -> list[set[AffinePermutation]]:
    """``levels[k]`` is the set of ``v <= w`` of length ``k``."""
    lw = w.length()
    levels: list[set[AffinePermutation]] = [set() for _ in range(lw + 1)]
    levels[lw].add(w)
    total = 1
    for k in range(lw, 0, -1):
        below = levels[k - 1]
        for v in levels[k]:
            for _, u in covers_down(v):
                below.add(u)
        total += len(below)
        if total > cap:
            raise CapacityExceeded(f"order ideal of {w} exceeds {cap} elements")
    return levels


def order_ideal(w: AffinePermutation, cap: int = DEFAULT_CAP) -> set[AffinePermutation]:
    out: set[AffinePermutation] = set()
    for level in ideal_levels(w, cap):
        out |= level
    return out


@lru_cache(maxsize=1 << 16)
def _poincare_cached(w: AffinePermutation, cap: int) -> Poly:
    return Poly(len(level) for level in ideal_levels(w, cap))


def poincare(w: AffinePermutation, cap: int = DEFAULT_CAP) -> Poly:
    """Rank generating function of the order ideal below ``w``."""
    return _poincare_cached(w, cap)


def is_palindromic(p: Poly) -> bool:
    return p.is_palindromic()


def reflection_set(
    x: AffinePermutation, w: AffinePermutation, *, extra_horizon: int = 0
) -> set[Transposition]:
    """``{t : x < x t <= w}``.

    Only ``t_{p,q}`` with ``q - p <= maxdisp(w) - mindisp(x)`` can qualify:
    ``x t <= w`` forces ``r_w(p, x(q)) >= 1``, i.e. ``x(q) <= p + maxdisp(w)``.
    """
    if not leq(x, w):
        raise NotComparable(f"{x} is not below {w}")
    n = w.n
    horizon = w.displacement()[1] - x.displacement()[0] + extra_horizon
    out = set()
    for p in range(1, n + 1):
        xp = x(p)
        for q in range(p + 1, p + horizon + 1):
            if (q - p) % n == 0 or x(q) < xp:
                continue
            if leq(x.swap_positions(p, q), w):
                out.add(Transposition(n, p, q))
    return out


def support_size(w: AffinePermutation) -> int:
    """Distinct generators in a reduced word; equals the coefficient of ``q``."""
    return len(set(w.reduced_word()))


def coatom_count(w: AffinePermutation) -> int:
    """Number of elements covered by ``w``; equals the coefficient of ``q^(l-1)``."""
    return len(covers_down(w))

"""Affine permutations of period ``n``.

An affine permutation is a bijection ``w: Z -> Z`` with ``w(i+n) = w(i)+n``
and ``w(1)+...+w(n) = n(n+1)/2``.  It is stored as its base window
``(w(1), ..., w(n))``; equality and hashing use ``(n, window)``.

Generators are indexed ``0..n-1``: for ``1 <= i <= n-1``, ``s_i`` swaps
``i`` and ``i+1``; ``s_0`` swaps ``n`` and ``n+1`` (equivalently ``0`` and
``1``).  Products are composed as functions, ``(u*v)(i) = u(v(i))``, so
right multiplication by a transposition swaps positions and left
multiplication swaps values.
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from .errors import (
    BadArity,
    DistinctResidueViolation,
    InvalidArgs,
    PeriodMismatch,
    WindowSumViolation,
)

__all__ = [
    "AffinePermutation",
    "Transposition",
    "from_window",
    "identity",
    "simple_reflection",
    "transposition",
    "evaluate_word",
    "parse_window",
    "format_window",
    "random_element",
]


class AffinePermutation:
    __slots__ = ("n", "window", "_hash")

    def __init__(self, n: int, window: Sequence[int], *, check: bool = True):
        window = tuple(int(v) for v in window)
        if check:
            _validate(n, window)
        self.n = n
        self.window = window
        self._hash = hash((n, window))

    # -- evaluation -----------------------------------------------------

    def __call__(self, i: int) -> int:
        k, r = divmod(i - 1, self.n)
        return self.window[r] + k * self.n

    def values(self, lo: int, hi: int) -> list[int]:
        """One-line notation on the positions ``lo..hi`` inclusive."""
        return [self(i) for i in range(lo, hi + 1)]

    def displacement(self) -> tuple[int, int]:
        """``(min, max)`` of ``w(i) - i``; periodic, so the window suffices."""
        d = [v - r for r, v in enumerate(self.window, 1)]
        return min(d), max(d)

    def spread(self) -> int:
        """``max(w(i)-i) - min(w(i)-i)``.

        If ``i < j`` and ``w(i) > w(j)`` then ``j - i < spread``.
        """
        lo, hi = self.displacement()
        return hi - lo

    def preimage(self, v: int) -> int:
        n = self.n
        k, r = divmod(v - 1, n)
        return self.inverse().window[r] + k * n

    # -- group structure ------------------------------------------------

    def _check_period(self, other: "AffinePermutation") -> None:
        if other.n != self.n:
            raise PeriodMismatch(f"periods differ: {self.n} != {other.n}")

    def __mul__(self, other: "AffinePermutation") -> "AffinePermutation":
        self._check_period(other)
        return AffinePermutation(self.n, [self(v) for v in other.window], check=False)

    compose = __mul__

    def inverse(self) -> "AffinePermutation":
        n = self.n
        inv = [0] * n
        for r, v in enumerate(self.window, 1):
            k, s = divmod(v - 1, n)
            inv[s] = r - k * n
        return AffinePermutation(n, inv, check=False)

    def is_identity(self) -> bool:
        return all(v == r for r, v in enumerate(self.window, 1))

    def swap_positions(self, a: int, b: int) -> "AffinePermutation":
        """``w * t_{a,b}``: exchange the values at positions ``a`` and ``b``."""
        n = self.n
        if (a - b) % n == 0:
            raise InvalidArgs(f"t_({a},{b}) needs distinct residues mod {n}")
        wa, wb = self(a), self(b)
        win = list(self.window)
        ka, ra = divmod(a - 1, n)
        kb, rb = divmod(b - 1, n)
        win[ra] = wb - ka * n
        win[rb] = wa - kb * n
        return AffinePermutation(n, win, check=False)

    def swap_values(self, a: int, b: int) -> "AffinePermutation":
        """``t_{a,b} * w``: exchange the values ``a`` and ``b`` (mod translation)."""
        n = self.n
        if (a - b) % n == 0:
            raise InvalidArgs(f"t_({a},{b}) needs distinct residues mod {n}")
        out = []
        for v in self.window:
            if (v - a) % n == 0:
                out.append(v - a + b)
            elif (v - b) % n == 0:
                out.append(v - b + a)
            else:
                out.append(v)
        return AffinePermutation(n, out, check=False)

    def right_multiply_transposition(self, t: "Transposition") -> "AffinePermutation":
        self._check_period_t(t)
        return self.swap_positions(t.i, t.j)

    def _check_period_t(self, t: "Transposition") -> None:
        if t.n != self.n:
            raise PeriodMismatch(f"periods differ: {self.n} != {t.n}")

    def right_mul_simple(self, i: int) -> "AffinePermutation":
        """``w * s_i`` for a generator index ``i`` in ``0..n-1``."""
        n = self.n
        win = list(self.window)
        if i == 0:
            win[0], win[n - 1] = win[n - 1] - n, win[0] + n
        else:
            win[i - 1], win[i] = win[i], win[i - 1]
        return AffinePermutation(n, win, check=False)

    def left_mul_simple(self, i: int) -> "AffinePermutation":
        """``s_i * w``: swap the values congruent to ``i`` and ``i+1``."""
        return self.swap_values(i if i else self.n, (i if i else self.n) + 1)

    # -- length and descents --------------------------------------------

    def length(self) -> int:
        """Number of affine inversions ``(i, j)``, ``1 <= i <= n``, ``i < j``, ``w(i) > w(j)``."""
        n, spread = self.n, self.spread()
        count = 0
        for i in range(1, n + 1):
            wi = self(i)
            for j in range(i + 1, i + spread):
                if self(j) < wi:
                    count += 1
        return count

    def length_shi(self) -> int:
        """Shi's closed form: ``inv(window) + sum_{i<j} floor(|w_j - w_i| / n)``."""
        n, win = self.n, self.window
        total = 0
        for a in range(n):
            for b in range(a + 1, n):
                if win[a] > win[b]:
                    total += 1
                total += abs(win[b] - win[a]) // n
        return total

    def is_right_descent(self, i: int) -> bool:
        if i == 0:
            return self.window[-1] - self.n > self.window[0]
        return self.window[i - 1] > self.window[i]

    def right_descents(self) -> set[int]:
        return {i for i in range(self.n) if self.is_right_descent(i)}

    def left_descents(self) -> set[int]:
        return self.inverse().right_descents()

    def reduced_word(self) -> list[int]:
        """Greedy right-descent stripping, always removing the smallest descent."""
        letters = []
        w = self
        while True:
            for i in range(w.n):
                if w.is_right_descent(i):
                    break
            else:
                break
            letters.append(i)
            w = w.right_mul_simple(i)
        letters.reverse()
        return letters

    def random_reduced_word(self, rng: random.Random) -> list[int]:
        letters = []
        w = self
        while True:
            desc = sorted(w.right_descents())
            if not desc:
                break
            i = rng.choice(desc)
            letters.append(i)
            w = w.right_mul_simple(i)
        letters.reverse()
        return letters

    def matrix_entries(self) -> list[tuple[int, int, int]]:
        """Nonzero entries ``(row, col, b)`` of the affine permutation matrix.

        Column ``i`` carries ``z**b_i`` in row ``a_i`` where ``w_i = a_i + n*b_i``
        and ``1 <= a_i <= n``.
        """
        n = self.n
        out = []
        for i, v in enumerate(self.window, 1):
            b, a = divmod(v - 1, n)
            out.append((a + 1, i, b))
        return sorted(out)

    def matrix_text(self) -> str:
        return "\n".join(f"{r} {c} {b}" for r, c, b in self.matrix_entries())

    # -- misc -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AffinePermutation):
            return NotImplemented
        return self.n == other.n and self.window == other.window

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "AffinePermutation") -> bool:
        # arbitrary total order for deterministic sorting; NOT Bruhat order
        return (self.n, self.window) < (other.n, other.window)

    def __repr__(self) -> str:
        return f"AffinePermutation({self.n}, {list(self.window)})"

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.window)) + "]"

    def __getstate__(self):
        return (self.n, self.window)

    def __setstate__(self, state):
        n, window = state
        self.n = n
        self.window = window
        self._hash = hash((n, window))


def _validate(n: int, window: tuple[int, ...]) -> None:
    if not isinstance(n, int) or n < 2:
        raise BadArity(f"period must be an integer >= 2, got {n!r}")
    if len(window) != n:
        raise BadArity(f"window has {len(window)} entries, expected {n}")
    if len({v % n for v in window}) != n:
        raise DistinctResidueViolation(f"window {list(window)} repeats a residue mod {n}")
    if sum(window) != n * (n + 1) // 2:
        raise WindowSumViolation(
            f"window sums to {sum(window)}, expected {n * (n + 1) // 2}"
        )


class Transposition:
    """The reflection ``t_{i,j}``, normalized so that ``1 <= i <= n`` and ``i < j``."""

    __slots__ = ("n", "i", "j")

    def __init__(self, n: int, i: int, j: int):
        if (i - j) % n == 0:
            raise InvalidArgs(f"t_({i},{j}) needs distinct residues mod {n}")
        if i > j:
            i, j = j, i
        shift = (i - 1) // n
        self.n, self.i, self.j = n, i - shift * n, j - shift * n

    def as_tuple(self) -> tuple[int, int]:
        return (self.i, self.j)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Transposition):
            return NotImplemented
        return (self.n, self.i, self.j) == (other.n, other.i, other.j)

    def __hash__(self) -> int:
        return hash((self.n, self.i, self.j))

    def __lt__(self, other: "Transposition") -> bool:
        return (self.i, self.j) < (other.i, other.j)

    def __repr__(self) -> str:
        return f"t({self.i},{self.j})"

    def element(self) -> AffinePermutation:
        return identity(self.n).swap_positions(self.i, self.j)


def from_window(n: int, window: Iterable[int]) -> AffinePermutation:
    return AffinePermutation(n, list(window))


def identity(n: int) -> AffinePermutation:
    if n < 2:
        raise BadArity(f"period must be >= 2, got {n}")
    return AffinePermutation(n, range(1, n + 1), check=False)


def simple_reflection(n: int, i: int) -> AffinePermutation:
    if not 0 <= i < n:
        raise InvalidArgs(f"generator index {i} outside 0..{n - 1}")
    return identity(n).right_mul_simple(i)


def transposition(n: int, i: int, j: int) -> Transposition:
    return Transposition(n, i, j)


def evaluate_word(n: int, word: Iterable[int]) -> AffinePermutation:
    w = identity(n)
    for i in word:
        if not 0 <= i < n:
            raise InvalidArgs(f"generator index {i} outside 0..{n - 1}")
        w = w.right_mul_simple(i)
    return w


def parse_window(text: str) -> list[int]:
    """Parse ``"8,3,1,0,4,5"`` (whitespace and brackets tolerated)."""
    text = text.strip().strip("[]")
    try:
        return [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError as exc:
        raise InvalidArgs(f"bad window text {text!r}") from exc


def format_window(w: AffinePermutation) -> str:
    return ",".join(map(str, w.window))


def random_element(n: int, length: int, rng: random.Random) -> AffinePermutation:
    """Random walk of ``length`` length-increasing steps from the identity."""
    w = identity(n)
    for _ in range(length):
        ascents = [i for i in range(n) if not w.is_right_descent(i)]
        w = w.right_mul_simple(rng.choice(ascents))
    return w

"""Enumeration of the affine symmetric group by length.

The ball of radius ``L`` is generated level by level: every element of
length ``l + 1`` is ``w s`` for some ``w`` of length ``l`` and an ascent
``s`` of ``w``.  Only the current level has to be deduplicated.
"""

from __future__ import annotations

import json
import logging
import os
from collections import Counter
from dataclasses import dataclass, field
from multiprocessing import Pool
from pathlib import Path
from typing import Iterator, Optional, Sequence

from .bruhat import DEFAULT_CAP, covers_down, poincare
from .core import AffinePermutation, identity
from .errors import CapacityExceeded, InvalidArgs
from .patterns import P3412, P4231, avoids
from .poly import Poly
from .smoothness import classify

__all__ = [
    "levels_up_to_length",
    "elements_up_to_length",
    "ball_sizes",
    "avoider_length_bound",
    "count_avoiders",
    "count_avoiders_detail",
    "AvoiderCount",
    "count_3412_avoiders",
    "TheoremReport",
    "verify_theorem",
    "ball_poincare",
    "PoincareCache",
]

log = logging.getLogger(__name__)


def levels_up_to_length(
    n: int, L: int, cap: int = DEFAULT_CAP
) -> Iterator[list[AffinePermutation]]:
    """Yield the elements of length ``0, 1, ..., L``, one sorted list per length."""
    if n < 2:
        raise InvalidArgs("n must be >= 2")
    if L < 0:
        raise InvalidArgs("L must be >= 0")
    level = [identity(n)]
    total = 1
    yield level
    for _ in range(L):
        nxt = set()
        for w in level:
            for s in range(n):
                if not w.is_right_descent(s):
                    nxt.add(w.right_mul_simple(s))
        level = sorted(nxt)
        total += len(level)
        if total > cap:
            raise CapacityExceeded(f"more than {cap} elements of length <= {L} in S~_{n}")
        yield level


def elements_up_to_length(n: int, L: int, cap: int = DEFAULT_CAP) -> Iterator[AffinePermutation]:
    for level in levels_up_to_length(n, L, cap):
        yield from level


def ball_sizes(n: int, L: int, cap: int = DEFAULT_CAP) -> list[int]:
    return [len(level) for level in levels_up_to_length(n, L, cap)]


def avoider_length_bound(n: int) -> int:
    """Every element avoiding 3412 and 4231 has length at most ``n(n-1)``."""
    return n * (n - 1)


# --------------------------------------------------------------------------
# avoider counts


def _avoids_both(w: AffinePermutation) -> bool:
    return avoids(w, P4231) and avoids(w, P3412)


def _count_chunk(args) -> list[int]:
    n, windows = args
    return [i for i, win in enumerate(windows) if _avoids_both(AffinePermutation(n, win, check=False))]


def _avoider_flags(level: Sequence[AffinePermutation], jobs: int, pool) -> list[bool]:
    if pool is None or len(level) < 2000:
        return [_avoids_both(w) for w in level]
    n = level[0].n
    step = -(-len(level) // (4 * jobs))
    chunks = [(n, [w.window for w in level[a:a + step]]) for a in range(0, len(level), step)]
    flags = [False] * len(level)
    for c, hits in enumerate(pool.map(_count_chunk, chunks)):
        for i in hits:
            flags[c * step + i] = True
    return flags


@dataclass
class AvoiderCount:
    n: int
    total: int
    by_length: list[int]
    max_length: int
    stable: Optional[bool] = None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "count": self.total,
            "by_length": self.by_length,
            "max_length": self.max_length,
            "stable": self.stable,
        }


def count_avoiders_detail(
    n: int, check_stability: bool = False, jobs: int = 1, cap: int = DEFAULT_CAP
) -> AvoiderCount:
    """Count elements avoiding both 3412 and 4231, with counts per length.

    With ``check_stability`` the scan continues ``n`` lengths past the bound
    and confirms that no further avoiders exist there.
    """
    bound = avoider_length_bound(n)
    L = bound + (n if check_stability else 0)
    by_length = []
    pool = Pool(jobs) if jobs > 1 else None
    try:
        for level in levels_up_to_length(n, L, cap):
            by_length.append(sum(_avoider_flags(level, jobs, pool)))
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    stable = None
    if check_stability:
        stable = not any(by_length[bound + 1:])
        by_length = by_length[: bound + 1] if stable else by_length
    return AvoiderCount(n, sum(by_length), by_length, L, stable)


def count_avoiders(n: int, check_stability: bool = False, jobs: int = 1, cap: int = DEFAULT_CAP) -> int:
    return count_avoiders_detail(n, check_stability, jobs, cap).total


def count_3412_avoiders(n: int, L: int, cap: int = DEFAULT_CAP) -> AvoiderCount:
    """3412-avoiders of length ``<= L``; stable when none has length in ``(L - n, L]``."""
    by_length = [
        sum(1 for w in level if avoids(w, P3412)) for level in levels_up_to_length(n, L, cap)
    ]
    stable = L >= n and not any(by_length[L - n + 1:])
    return AvoiderCount(n, sum(by_length), by_length, L, stable)


# --------------------------------------------------------------------------
# exhaustive verification of the classification


@dataclass
class TheoremReport:
    n: int
    L: int
    checked: int = 0
    disagreements: list[AffinePermutation] = field(default_factory=list)
    reasons: Counter = field(default_factory=Counter)
    spiral_lengths: set = field(default_factory=set)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "max_length": self.L,
            "checked": self.checked,
            "disagreements": [list(w.window) for w in self.disagreements],
            "reasons": dict(sorted(self.reasons.items())),
            "spiral_lengths": sorted(self.spiral_lengths),
        }


def ball_poincare(levels: list[list[AffinePermutation]]) -> dict[AffinePermutation, Poly]:
    """Poincare polynomials of every element of a ball, via bitset order ideals.

    The ball is an order ideal, so the ideal below each element lies inside
    it and is the union of the ideals below its covers.
    """
    index: dict[AffinePermutation, int] = {}
    starts = []
    for level in levels:
        starts.append(len(index))
        for w in level:
            index[w] = len(index)
    starts.append(len(index))
    bits: dict[AffinePermutation, int] = {}
    out: dict[AffinePermutation, Poly] = {}
    for lw, level in enumerate(levels):
        for w in level:
            b = 1 << index[w]
            for _, u in covers_down(w):
                b |= bits[u]
            bits[w] = b
            coeffs = []
            for k in range(lw + 1):
                width = starts[k + 1] - starts[k]
                coeffs.append(((b >> starts[k]) & ((1 << width) - 1)).bit_count())
            out[w] = Poly(coeffs)
    return out


def verify_theorem(n: int, L: int, cap: int = DEFAULT_CAP) -> TheoremReport:
    """Compare ``classify`` with palindromicity for every element of length ``<= L``."""
    if n < 3:
        raise InvalidArgs("verify_theorem needs n >= 3")
    levels = list(levels_up_to_length(n, L, cap))
    polys = ball_poincare(levels)
    rep = TheoremReport(n, L)
    for level in levels:
        for w in level:
            verdict = classify(w)
            rep.checked += 1
            rep.reasons[verdict.reason] += 1
            if verdict.reason == "twisted_spiral":
                rep.spiral_lengths.add(w.length())
            if verdict.smooth != polys[w].is_palindromic():
                rep.disagreements.append(w)
    return rep


# --------------------------------------------------------------------------
# cache of Poincare polynomials


class PoincareCache:
    """Line-delimited JSON store ``<dir>/n{N}.jsonl`` of Poincare polynomials."""

    def __init__(self, directory: os.PathLike | str = "cache"):
        self.directory = Path(directory)
        self._data: dict[tuple[int, tuple[int, ...]], Poly] = {}
        self._loaded: set[int] = set()

    def path(self, n: int) -> Path:
        return self.directory / f"n{n}.jsonl"

    def _load(self, n: int) -> None:
        if n in self._loaded:
            return
        self._loaded.add(n)
        p = self.path(n)
        if not p.exists():
            return
        with p.open(encoding="utf-8") as fh:
            for line in fh:
                if line.strip():
                    rec = json.loads(line)
                    self._data[(n, tuple(rec["window"]))] = Poly(rec["poincare"])

    def get(self, w: AffinePermutation) -> Optional[Poly]:
        self._load(w.n)
        return self._data.get((w.n, w.window))

    def put(self, w: AffinePermutation, poly: Poly) -> None:
        self._load(w.n)
        key = (w.n, w.window)
        if key in self._data:
            return
        self._data[key] = poly
        self.directory.mkdir(parents=True, exist_ok=True)
        with self.path(w.n).open("a", encoding="utf-8") as fh:
            fh.write(json.dumps({"n": w.n, "window": list(w.window), "poincare": list(poly.coeffs)}) + "\n")

    def poincare(self, w: AffinePermutation, cap: int = DEFAULT_CAP) -> Poly:
        hit = self.get(w)
        if hit is None:
            hit = poincare(w, cap)
            self.put(w, hit)
        return hit

    def entries(self, n: int) -> list[tuple[AffinePermutation, Poly]]:
        self._load(n)
        return [(AffinePermutation(m, win), p) for (m, win), p in self._data.items() if m == n]

    def verify(self, n: int, cap: int = DEFAULT_CAP) -> list[AffinePermutation]:
        """Entries whose stored polynomial differs from a fresh computation."""
        return [w for w, p in self.entries(n) if poincare(w, cap) != p]

"""Classical pattern containment in affine permutations.

A pattern ``p`` (a permutation of ``1..k``) occurs in ``w`` at positions
``i_1 < ... < i_k`` when ``w(i_1), ..., w(i_k)`` are in the relative order
of ``p``.  Positions may repeat residues mod ``n``.

Search bounds.  Write ``D = w.spread()``.  At a cut between pattern entries
``m`` and ``m+1``, if some entry before the cut is larger than some entry
after it, the gap ``i_{m+1} - i_m`` is below ``D`` (an inversion cannot span
``D`` positions).  Otherwise the pattern splits as a direct sum there, and a
gap above ``n + D`` can be reduced by translating the tail left by ``n``.
Together with translating ``i_1`` into ``[1, n]`` this makes the search
finite and exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .core import AffinePermutation
from .errors import InvalidArgs, NotAnOccurrence

__all__ = [
    "Pattern",
    "P3412",
    "P4231",
    "contains",
    "avoids",
    "avoids_both",
    "is_occurrence",
    "gap_bounds",
    "normalize_4231",
    "is_normalized_4231",
    "Normalized3412",
    "normalize_3412",
]

MAX_PATTERN = 8


@dataclass(frozen=True)
class Pattern:
    perm: tuple[int, ...]

    def __post_init__(self):
        k = len(self.perm)
        if not 1 <= k <= MAX_PATTERN:
            raise InvalidArgs(f"pattern length must be in 1..{MAX_PATTERN}")
        if sorted(self.perm) != list(range(1, k + 1)):
            raise InvalidArgs(f"{self.perm} is not a permutation of 1..{k}")

    @classmethod
    def parse(cls, text: str) -> "Pattern":
        text = text.strip()
        if "," in text:
            return cls(tuple(int(t) for t in text.split(",")))
        if not text.isdigit():
            raise InvalidArgs(f"bad pattern {text!r}")
        return cls(tuple(int(c) for c in text))

    @property
    def k(self) -> int:
        return len(self.perm)

    def inverse(self) -> "Pattern":
        inv = [0] * self.k
        for a, b in enumerate(self.perm, 1):
            inv[b - 1] = a
        return Pattern(tuple(inv))

    def __str__(self) -> str:
        return "".join(map(str, self.perm)) if self.k <= 9 else ",".join(map(str, self.perm))


P3412 = Pattern((3, 4, 1, 2))
P4231 = Pattern((4, 2, 3, 1))


def _as_pattern(p) -> Pattern:
    if isinstance(p, Pattern):
        return p
    if isinstance(p, str):
        return Pattern.parse(p)
    return Pattern(tuple(p))


def gap_bounds(w: AffinePermutation, p: Pattern, scale: int = 1) -> list[int]:
    """Largest admissible ``i_{m+1} - i_m`` for each cut ``m``."""
    spread = w.spread()
    out = []
    for m in range(1, p.k):
        split = max(p.perm[:m]) < min(p.perm[m:])
        out.append(scale * ((w.n + spread) if split else max(spread - 1, 1)))
    return out


def is_occurrence(w: AffinePermutation, p, indices: Sequence[int]) -> bool:
    p = _as_pattern(p)
    if len(indices) != p.k or any(a >= b for a, b in zip(indices, indices[1:])):
        return False
    vals = [w(i) for i in indices]
    order = sorted(range(p.k), key=vals.__getitem__)
    return all(p.perm[j] == r for r, j in enumerate(order, 1))


def contains(w: AffinePermutation, p, *, horizon_scale: int = 1) -> Optional[tuple[int, ...]]:
    """An occurrence of ``p`` in ``w`` with ``i_1`` in ``[1, n]``, or ``None``."""
    p = _as_pattern(p)
    k, perm = p.k, p.perm
    gaps = gap_bounds(w, p, horizon_scale)
    n = w.n
    # for each pattern entry m, the placed entries that bound its value
    lower_of = []
    upper_of = []
    for m in range(k):
        below = [a for a in range(m) if perm[a] < perm[m]]
        above = [a for a in range(m) if perm[a] > perm[m]]
        lower_of.append(max(below, key=lambda a: perm[a]) if below else None)
        upper_of.append(min(above, key=lambda a: perm[a]) if above else None)

    idx = [0] * k
    val = [0] * k

    def place(m: int) -> bool:
        if m == k:
            return True
        lo = val[lower_of[m]] if lower_of[m] is not None else None
        hi = val[upper_of[m]] if upper_of[m] is not None else None
        start = idx[m - 1]
        for j in range(start + 1, start + gaps[m - 1] + 1):
            v = w(j)
            if (lo is None or v > lo) and (hi is None or v < hi):
                idx[m], val[m] = j, v
                if place(m + 1):
                    return True
        return False

    for i1 in range(1, n + 1):
        idx[0], val[0] = i1, w(i1)
        if place(1):
            return tuple(idx)
    return None


def avoids(w: AffinePermutation, p, *, horizon_scale: int = 1) -> bool:
    return contains(w, p, horizon_scale=horizon_scale) is None


def avoids_both(w: AffinePermutation) -> bool:
    return avoids(w, P4231) and avoids(w, P3412)


# --------------------------------------------------------------------------
# 4231 normalization


def _prefix_max_position(w: AffinePermutation, upto: int) -> int:
    """Position of the largest value among positions ``<= upto``."""
    # values left of upto - spread are all smaller than w(upto)
    lo = upto - w.spread() - 1
    return max(range(lo, upto + 1), key=w)


def _is_prefix_max(w: AffinePermutation, j: int) -> bool:
    return _prefix_max_position(w, j) == j


def normalize_4231(w: AffinePermutation, occ: Sequence[int]) -> tuple[int, int, int, int]:
    """Squeeze a 4231 occurrence.

    Input and output are positions ``(i4, i2, i3, i1)`` in increasing order,
    so the values read ``4, 2, 3, 1``.  On return:

    * ``w(i4) > w(j)`` for every ``j < i4`` and no prefix maximum lies in
      ``(i4, i2)``; hence ``i2 - i4 < n``;
    * no ``j`` in ``(i2, i3)`` has ``w(i2) < w(j) < w(i4)``;
    * no ``j`` in ``(i3, i1)`` has ``w(j) < w(i2)``; hence ``i1 - i3 < n``.
    """
    if not is_occurrence(w, P4231, occ):
        raise NotAnOccurrence(f"{tuple(occ)} is not a 4231 occurrence in {w}")
    i4, i2, i3, i1 = occ
    i4 = _prefix_max_position(w, i4)
    for _ in range(10_000):
        changed = False
        # latest prefix maximum before i2
        for j in range(i2 - 1, i4, -1):
            if w(j) > w(i4) and _is_prefix_max(w, j):
                i4, changed = j, True
                break
        v4, v2, v3 = w(i4), w(i2), w(i3)
        for j in range(i2 + 1, i3):
            if v2 < w(j) < v4:
                if w(j) < v3:
                    i2 = j
                else:
                    i3 = j
                changed = True
                break
        v2 = w(i2)
        for j in range(i3 + 1, i1):
            if w(j) < v2:
                i1, changed = j, True
                break
        if not changed:
            break
    result = (i4, i2, i3, i1)
    assert is_occurrence(w, P4231, result)
    return result


def is_normalized_4231(w: AffinePermutation, occ: Sequence[int]) -> bool:
    i4, i2, i3, i1 = occ
    n = w.n
    if not is_occurrence(w, P4231, occ):
        return False
    if _prefix_max_position(w, i4) != i4:
        return False
    if any(w(j) > w(i4) and _is_prefix_max(w, j) for j in range(i4 + 1, i2)):
        return False
    if any(w(i2) < w(j) < w(i4) for j in range(i2 + 1, i3)):
        return False
    if any(w(j) < w(i2) for j in range(i3 + 1, i1)):
        return False
    return i2 - i4 < n and i1 - i3 < n


# --------------------------------------------------------------------------
# 3412 normalization


@dataclass(frozen=True)
class Normalized3412:
    """Positions ``i3 < i4 < i1 < i2`` of a squeezed 3412 (values 3, 4, 1, 2)."""

    i3: int
    i4: int
    i1: int
    i2: int
    n: int = field(compare=False)

    @property
    def indices(self) -> tuple[int, int, int, int]:
        return (self.i3, self.i4, self.i1, self.i2)

    @property
    def b_nonempty(self) -> bool:
        return self.i1 > self.i4 + 1

    @property
    def i3_equiv_i4(self) -> bool:
        return (self.i4 - self.i3) % self.n == 0

    @property
    def i1_equiv_i2(self) -> bool:
        return (self.i2 - self.i1) % self.n == 0

    @property
    def residues_distinct(self) -> bool:
        return not (self.i3_equiv_i4 or self.i1_equiv_i2)


def _squeeze_3412(w: AffinePermutation, i3: int, i4: int, i1: int, i2: int):
    spread = w.spread()
    v2 = w(i2)
    # (1) latest i4' < i1 that is the "4" of a 3412 with the current 1, 2
    best = None
    for a in range(i1 - 1, i4 - 1, -1):
        va = w(a)
        cands = [w(j) for j in range(a - spread - 1, a) if v2 < w(j) < va]
        if cands:
            best = (a, max(cands))
            break
    a4, vj = best
    # (2) earliest i1' > i4' with some later value in (w(i1'), w(j))
    found = None
    for b in range(a4 + 1, i1 + 1):
        vb = w(b)
        cands = [w(k) for k in range(b + 1, b + spread + 1) if vb < w(k) < vj]
        if cands:
            found = (b, min(cands))
            break
    a1, vk = found
    # (3) latest i3' < i4' with value in (w(k), w(i4'))
    va4 = w(a4)
    a3 = next(c for c in range(a4 - 1, a4 - spread - 2, -1) if vk < w(c) < va4)
    # (4) earliest i2' > i1' with value in (w(i1'), w(i3'))
    va1, va3 = w(a1), w(a3)
    a2 = next(c for c in range(a1 + 1, a1 + spread + 1) if va1 < w(c) < va3)
    return a3, a4, a1, a2


def normalize_3412(w: AffinePermutation, occ: Sequence[int]) -> Normalized3412:
    """Repeat the four squeezing steps until the positions stop moving.

    Where a step only asks for the existence of an auxiliary entry (the
    ``j`` of step 1 and the ``k`` of step 2) the most permissive one is used:
    the largest admissible value for ``j`` and the smallest for ``k``.
    The final positions are translated so that ``i3`` lies in ``[1, n]``.
    """
    if not is_occurrence(w, P3412, occ):
        raise NotAnOccurrence(f"{tuple(occ)} is not a 3412 occurrence in {w}")
    cur = tuple(occ)
    for _ in range(10_000):
        nxt = _squeeze_3412(w, *cur)
        if nxt == cur:
            break
        cur = nxt
    else:  # pragma: no cover - the gap i1 - i4 strictly decreases
        raise RuntimeError("3412 normalization did not terminate")
    assert is_occurrence(w, P3412, cur)
    shift = (cur[0] - 1) // w.n * w.n
    i3, i4, i1, i2 = (c - shift for c in cur)
    return Normalized3412(i3, i4, i1, i2, w.n)

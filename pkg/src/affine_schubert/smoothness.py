"""Twisted spirals, the factoring map and the rational-smoothness classifier.

Classification rule for ``n >= 3``: ``w`` is rationally smooth iff it avoids
both 3412 and 4231, or it is a twisted spiral ``w0(J_i) * c(i, k(n-1))``.
Every element of period 2 is rationally smooth.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .bruhat import is_palindromic, poincare
from .core import AffinePermutation, evaluate_word
from .errors import IdentityInput, InvalidArgs, NoFactoringSubword, PatternPresent
from .parabolic import complement_of, longest_parabolic_element
from .patterns import P3412, P4231, avoids_both, contains
from .poly import Poly, q_binomial

__all__ = [
    "cycle_c",
    "cycle_word",
    "twisted_spiral",
    "spiral_swap_rhs",
    "recognize_spiral",
    "left_to_right_maxima",
    "right_to_left_maxima",
    "AlphaSubword",
    "alpha_subword",
    "FactoringSubword",
    "is_factoring_subword",
    "find_factoring_subword",
    "PsiStep",
    "psi",
    "psi_steps",
    "poincare_factored",
    "Verdict",
    "classify",
    "classify_by_poincare",
]


def cycle_word(n: int, a: int, b: int) -> list[int]:
    if b > 0:
        return [(a + t) % n for t in range(b)]
    return [(a - t) % n for t in range(-b)]


def cycle_c(n: int, a: int, b: int) -> AffinePermutation:
    """``s_a s_{a+1} ... s_{a+b-1}`` for ``b > 0``, descending for ``b < 0``, subscripts mod ``n``."""
    return evaluate_word(n, cycle_word(n, a, b))


@lru_cache(maxsize=4096)
def twisted_spiral(n: int, i: int, k: int) -> AffinePermutation:
    if n < 3:
        raise InvalidArgs("twisted spirals need n >= 3")
    if k == 0:
        raise InvalidArgs("twisted spirals need k != 0")
    return longest_parabolic_element(n, i) * cycle_c(n, i, k * (n - 1))


def spiral_swap_rhs(n: int, i: int, k: int) -> AffinePermutation:
    """``c(i - kn +- 1, k(n-1)) * w0(J_{i-k})``, ``+`` exactly when ``k > 0``."""
    sign = 1 if k > 0 else -1
    return cycle_c(n, i - k * n + sign, k * (n - 1)) * longest_parabolic_element(n, i - k)


def recognize_spiral(w: AffinePermutation) -> Optional[tuple[int, int]]:
    """``(i, k)`` with ``w == twisted_spiral(n, i, k)``, ``i`` in ``0..n-1``; else ``None``."""
    n = w.n
    if n < 3:
        return None
    excess = w.length() - n * (n - 1) // 2
    if excess <= 0 or excess % (n - 1):
        return None
    m = excess // (n - 1)
    for i in range(n):
        for k in (m, -m):
            if twisted_spiral(n, i, k) == w:
                return (i, k)
    return None


# --------------------------------------------------------------------------
# sequences


def left_to_right_maxima(seq) -> list[int]:
    """0-based indices where a new running maximum appears (first entry included)."""
    out = []
    for a, t in enumerate(seq):
        if not out or t > seq[out[-1]]:
            out.append(a)
    return out


def right_to_left_maxima(seq) -> list[int]:
    """0-based indices of the right-to-left maxima, listed left to right."""
    out = []
    for a in range(len(seq) - 1, -1, -1):
        if not out or seq[a] > seq[out[-1]]:
            out.append(a)
    out.reverse()
    return out


# --------------------------------------------------------------------------
# alpha-inversions and factoring subwords


@dataclass(frozen=True)
class AlphaSubword:
    alpha: int
    positions: tuple[int, ...]
    v: tuple[int, ...]
    u: tuple[int, ...]
    u_positions: tuple[int, ...]

    @property
    def is_decreasing(self) -> bool:
        return all(a > b for a, b in zip(self.v, self.v[1:]))

    @property
    def is_interrupted(self) -> bool:
        return self.positions[-1] - self.positions[0] + 1 != len(self.positions)


def alpha_subword(w: AffinePermutation) -> AlphaSubword:
    """Largest window value that has an inversion to its right, with its inversion subword."""
    if w.is_identity():
        raise IdentityInput("the identity has no alpha-inversions")
    spread = w.spread()
    best = None
    for a in range(1, w.n + 1):
        wa = w(a)
        pos = [j for j in range(a + 1, a + spread) if w(j) < wa]
        if pos and (best is None or wa > w(best[0])):
            best = (a, pos)
    alpha, later = best
    positions = (alpha, *later)
    v = tuple(w(j) for j in positions)
    ui = right_to_left_maxima(v)
    return AlphaSubword(
        alpha, positions, v, tuple(v[a] for a in ui), tuple(positions[a] for a in ui)
    )


@dataclass(frozen=True)
class FactoringSubword:
    """Consecutive positions ``start..start+k-1`` of ``carrier`` (``w`` or ``w^-1``)."""

    carrier: str  # "self" or "inverse"
    element: AffinePermutation
    start: int
    values: tuple[int, ...]
    pivot: int  # 1-based index j into values

    @property
    def k(self) -> int:
        return len(self.values)

    @property
    def end(self) -> int:
        return self.start + self.k - 1

    @property
    def gamma(self) -> int:
        return self.start + self.pivot - 1

    @property
    def pivot_value(self) -> int:
        return self.values[self.pivot - 1]


def _max_left_of(w: AffinePermutation, start: int) -> int:
    return max(w(j) for j in range(start - w.spread() - 1, start))


def is_factoring_subword(w: AffinePermutation, start: int, end: int) -> bool:
    """Check the four defining properties of a factoring subword at ``start..end``."""
    if end < start:
        return False
    spread = w.spread()
    x = w.values(start, end)
    if any(a <= b for a, b in zip(x, x[1:])):
        return False
    right = w.values(end + 1, end + spread + 1)
    left_max = _max_left_of(w, start)
    if x[0] < left_max:
        return False
    if min(right) < x[-1]:
        return False
    if x[-1] > left_max and min(right) < x[0]:
        return False
    return True


def _pivot(w: AffinePermutation, start: int, values) -> int:
    left_max = _max_left_of(w, start)
    j = max(a for a, v in enumerate(values, 1) if v > left_max)
    return 1 if j == len(values) else j


def _make(carrier: str, w: AffinePermutation, start: int, end: int) -> Optional[FactoringSubword]:
    if not is_factoring_subword(w, start, end):
        return None
    values = tuple(w.values(start, end))
    return FactoringSubword(carrier, w, start, values, _pivot(w, start, values))


def find_factoring_subword(w: AffinePermutation) -> Optional[FactoringSubword]:
    """Factoring subword of ``w`` or of ``w^-1``, built from the alpha-inversion subword.

    * ``v`` consecutive and decreasing: ``v`` itself, on ``w``;
    * ``v`` consecutive, not decreasing: the positions of ``u``'s values, on ``w^-1``;
    * ``v`` interrupted: from the largest interrupter to the end of ``v``, on ``w``.

    Returns ``None`` when the construction does not yield a factoring subword,
    which can only happen if ``w`` contains 3412 or 4231.
    """
    sub = alpha_subword(w)
    first, last = sub.positions[0], sub.positions[-1]
    if sub.is_interrupted:
        wa = w(first)
        beta = max((j for j in range(first + 1, last) if w(j) > wa), key=w)
        return _make("self", w, beta, last)
    if sub.is_decreasing:
        return _make("self", w, first, last)
    top, bottom = sub.u[0], sub.u[-1]
    if list(sub.u) != list(range(top, bottom - 1, -1)):
        return None
    return _make("inverse", w.inverse(), bottom, top)


@dataclass(frozen=True)
class PsiStep:
    """``element = w_prime * sigma`` with ``w_prime`` in ``W_J`` and ``sigma`` left-minimal."""

    element: AffinePermutation  # w, or w^-1 when the subword lives on the inverse
    carrier: str
    subword: FactoringSubword
    w_prime: AffinePermutation
    sigma: AffinePermutation
    sigma_inverse_word: tuple[int, ...]
    d: int
    J: frozenset

    @property
    def factor(self) -> Poly:
        return q_binomial(self.subword.k, self.subword.pivot)


def psi(w: AffinePermutation, subword: Optional[FactoringSubword] = None) -> PsiStep:
    """One factoring step: shuffle ``x_1..x_j`` right past ``x_{j+1}..x_k``."""
    if w.is_identity():
        raise IdentityInput("psi is undefined on the identity")
    if subword is None:
        subword = find_factoring_subword(w)
        if subword is None:
            raise NoFactoringSubword(f"no factoring subword for {w} or its inverse")
    elem = subword.element
    n = w.n
    k, j, gamma = subword.k, subword.pivot, subword.gamma
    word: list[int] = []
    for t in range(j):
        word += cycle_word(n, gamma - t, k - j)
    sigma_inv = evaluate_word(n, word)
    w_prime = elem * sigma_inv
    d = (gamma - (j - 1) + (k - j - 1)) % n
    return PsiStep(
        element=elem,
        carrier=subword.carrier,
        subword=subword,
        w_prime=w_prime,
        sigma=sigma_inv.inverse(),
        sigma_inverse_word=tuple(word),
        d=d,
        J=complement_of(n, d),
    )


def psi_steps(w: AffinePermutation) -> list[PsiStep]:
    """Iterate the factoring map down to the identity (avoiders only)."""
    if not avoids_both(w):
        raise PatternPresent(f"{w} contains 3412 or 4231")
    steps = []
    while not w.is_identity():
        step = psi(w)
        steps.append(step)
        w = step.w_prime
    return steps


def poincare_factored(w: AffinePermutation) -> Poly:
    """Poincare polynomial of an avoider as a product of q-binomial coefficients."""
    out = Poly.one()
    for step in psi_steps(w):
        out = out * step.factor
    return out


# --------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class Verdict:
    smooth: bool
    reason: str  # small_rank | avoider | twisted_spiral | pattern
    spiral: Optional[tuple[int, int]] = None
    pattern: Optional[str] = None
    occurrence: Optional[tuple[int, ...]] = None
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def label(self) -> str:
        return "rationally_smooth" if self.smooth else "not_rationally_smooth"

    def to_json(self) -> dict:
        evidence: dict = {}
        if self.spiral is not None:
            evidence = {"i": self.spiral[0], "k": self.spiral[1]}
        if self.pattern is not None:
            evidence = {"pattern": self.pattern, "indices": list(self.occurrence)}
        evidence.update(self.extra)
        return {"verdict": self.label, "reason": self.reason, "evidence": evidence}


def classify(w: AffinePermutation) -> Verdict:
    if w.n == 2:
        return Verdict(True, "small_rank")
    occ4 = contains(w, P4231)
    occ3 = contains(w, P3412) if occ4 is None else None
    if occ4 is None and occ3 is None:
        return Verdict(True, "avoider")
    if occ4 is None:
        spiral = recognize_spiral(w)
        if spiral is not None:
            return Verdict(True, "twisted_spiral", spiral=spiral)
        return Verdict(False, "pattern", pattern="3412", occurrence=occ3)
    return Verdict(False, "pattern", pattern="4231", occurrence=occ4)


def classify_by_poincare(w: AffinePermutation) -> bool:
    """Brute-force oracle: palindromicity of the Poincare polynomial."""
    return is_palindromic(poincare(w))

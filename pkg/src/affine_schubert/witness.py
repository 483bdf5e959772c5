"""Evidence that a Poincare polynomial is not palindromic.

Two kinds of evidence are produced.

* For 4231: the coefficient of ``q`` (number of generators used) is strictly
  smaller than the coefficient of ``q^(l-1)`` (number of coatoms).  The
  graph ``G_beta`` whose edges are coatoms is attached as a diagnostic.
* For 3412 (and not a twisted spiral): an element ``x < w`` with
  ``#R(x, w) > l(w) - l(x)``.  Candidates come from a case analysis of the
  squeezed 3412 occurrence; every candidate is re-checked with the Bruhat
  order module and a bounded search takes over when none survives.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Union

from .bruhat import coatom_count, covers_down, leq, reflection_set, support_size
from .core import AffinePermutation
from .errors import (
    BadBeta,
    NotAnOccurrence,
    PreconditionViolated,
    SpiralInput,
    WitnessNotFound,
)
from .patterns import (
    P3412,
    P4231,
    Normalized3412,
    contains,
    is_occurrence,
    normalize_3412,
    normalize_4231,
)
from .smoothness import left_to_right_maxima, recognize_spiral, right_to_left_maxima

__all__ = [
    "left_to_right_maxima",
    "right_to_left_maxima",
    "is_cover_pair",
    "chain",
    "BetaGraph",
    "build_beta_graph",
    "CoefficientReport",
    "witness_4231",
    "WitnessCertificate",
    "certify",
    "rotate",
    "witness_3412",
    "witness",
]

SEARCH_BUDGET = 4000


# --------------------------------------------------------------------------
# covers and chains


def is_cover_pair(w: AffinePermutation, i: int, j: int) -> bool:
    """True when ``l(w t_{i,j}) = l(w) - 1`` (checked by the cover criterion)."""
    if i > j:
        i, j = j, i
    wi, wj = w(i), w(j)
    if wi <= wj:
        return False
    if not (j - i < w.n or wi - wj < w.n):
        return False
    return not any(wj < w(c) < wi for c in range(i + 1, j))


def chain(w: AffinePermutation, i: int, j: int) -> list[int]:
    """Increasing ``i = i_1 < ... < i_k = j`` where each step is a cover.

    With ``j - i < n`` the next index is the nearest position whose value
    lies in ``[w(j), w(current))``; otherwise the candidate with the closest
    value is taken.
    """
    n = w.n
    if not (i < j and w(i) > w(j) and (j - i < n or w(i) - w(j) < n)):
        raise PreconditionViolated(f"no cover chain from {i} to {j} in {w}")
    by_position = j - i < n
    target = w(j)
    out = [i]
    cur = i
    while cur != j:
        top = w(cur)
        cands = [c for c in range(cur + 1, j + 1) if target <= w(c) < top]
        nxt = cands[0] if by_position else max(cands, key=w)
        if not is_cover_pair(w, cur, nxt):  # pragma: no cover - guarded by the argument above
            raise PreconditionViolated(f"step ({cur}, {nxt}) is not a cover")
        out.append(nxt)
        cur = nxt
    return out


# --------------------------------------------------------------------------
# the graph G_beta


@dataclass(frozen=True)
class BetaGraph:
    """Coatom edges with left end in ``[beta, beta + n)``, split into blocks ``H_i``."""

    n: int
    beta: int
    maxima: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    blocks: tuple[tuple[int, int], ...]  # half-open position ranges of H_1..H_r

    @property
    def r(self) -> int:
        return len(self.maxima)

    @property
    def vertices(self) -> tuple[int, ...]:
        vs = set(range(self.beta, self.beta + self.n))
        for a, b in self.edges:
            vs.update((a, b))
        return tuple(sorted(vs))

    def block_of(self, v: int) -> Optional[int]:
        for t, (lo, hi) in enumerate(self.blocks):
            if lo <= v < hi:
                return t
        return None

    def block_edges(self, t: int) -> list[tuple[int, int]]:
        lo, hi = self.blocks[t]
        return [(a, b) for a, b in self.edges if lo <= a < hi and lo <= b < hi]

    def h_edges(self) -> list[tuple[int, int]]:
        out = []
        for t in range(self.r):
            out += self.block_edges(t)
        return out

    def extra_edges(self) -> list[tuple[int, int]]:
        h = set(self.h_edges())
        return [e for e in self.edges if e not in h]

    def block_connected(self, t: int) -> bool:
        lo, hi = self.blocks[t]
        verts = set(range(lo, hi))
        if not verts:
            return True
        seen = {lo}
        stack = [lo]
        adj: dict[int, list[int]] = {v: [] for v in verts}
        for a, b in self.block_edges(t):
            adj[a].append(b)
            adj[b].append(a)
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return seen == verts

    def to_json(self) -> dict:
        return {
            "beta": self.beta,
            "maxima": list(self.maxima),
            "edges": [list(e) for e in self.edges],
            "h_edges": len(self.h_edges()),
        }


def build_beta_graph(w: AffinePermutation, beta: int) -> BetaGraph:
    n = w.n
    wb = w(beta)
    if any(w(i) > wb for i in range(beta - w.spread() - 1, beta)):
        raise BadBeta(f"some value left of position {beta} exceeds w({beta}) = {wb}")
    window = w.values(beta, beta + n - 1)
    maxima = tuple(beta + a for a in left_to_right_maxima(window))
    top = w(maxima[-1])
    offsets: dict[int, list[int]] = {}
    for t, _ in covers_down(w):
        i, j = t.as_tuple()
        offsets.setdefault(i, []).append(j - i)
    edges = []
    for j in range(beta, beta + n):
        if w(j) > top:
            continue
        res = (j - 1) % n + 1
        for d in offsets.get(res, ()):
            edges.append((j, j + d))
    edges.sort()
    bounds = list(maxima) + [beta + n]
    blocks = tuple((bounds[t], bounds[t + 1]) for t in range(len(maxima)))
    return BetaGraph(n, beta, maxima, tuple(edges), blocks)


# --------------------------------------------------------------------------
# 4231


@dataclass(frozen=True)
class CoefficientReport:
    """``c1 < c_top`` shows that ``P_w`` is not palindromic."""

    c1: int
    c_top: int
    occurrence: tuple[int, ...]
    graph: BetaGraph = field(compare=False)
    case: str = "4231"

    @property
    def holds(self) -> bool:
        return self.c1 < self.c_top

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "c1": self.c1,
            "c_top": self.c_top,
            "holds": self.holds,
            "occurrence": list(self.occurrence),
            "graph": self.graph.to_json(),
        }


def witness_4231(w: AffinePermutation, occ: Sequence[int]) -> CoefficientReport:
    if not is_occurrence(w, P4231, occ):
        raise NotAnOccurrence(f"{tuple(occ)} is not a 4231 occurrence in {w}")
    norm = normalize_4231(w, occ)
    graph = build_beta_graph(w, norm[0])
    return CoefficientReport(support_size(w), coatom_count(w), norm, graph)


# --------------------------------------------------------------------------
# 3412


@dataclass(frozen=True)
class WitnessCertificate:
    x: AffinePermutation
    length_gap: int
    r_count: int
    case: str

    @property
    def valid(self) -> bool:
        return self.r_count > self.length_gap

    def to_json(self) -> dict:
        return {
            "x": list(self.x.window),
            "length_gap": self.length_gap,
            "r_count": self.r_count,
            "case": self.case,
        }


def certify(x: AffinePermutation, w: AffinePermutation, case: str) -> Optional[WitnessCertificate]:
    """Certificate for ``(x, w)`` if ``x <= w`` and the reflection count overshoots."""
    if x == w or not leq(x, w):
        return None
    cert = WitnessCertificate(x, w.length() - x.length(), len(reflection_set(x, w)), case)
    return cert if cert.valid else None


def rotate(w: AffinePermutation) -> AffinePermutation:
    """``i -> n+1 - w(n+1-i)``: a diagram automorphism mapping 3412 and 4231 to themselves."""
    n = w.n
    return AffinePermutation(n, [n + 1 - w(n + 1 - i) for i in range(1, n + 1)])


def _apply(w: AffinePermutation, pairs) -> AffinePermutation:
    x = w
    for a, b in pairs:
        x = x.swap_positions(a, b)
    return x


def _candidates(w: AffinePermutation, nm: Normalized3412) -> Iterator[tuple[str, list]]:
    n = w.n
    i3, i4, i1, i2 = nm.indices
    if nm.b_nonempty:
        if nm.residues_distinct:
            yield "b_distinct", [(i3, i2), (i4, i2), (i3, i1)]
        if nm.i3_equiv_i4:
            yield "b_i3_i4", [(i4, i1), (i1, i2), (i2, i4 + n)]
        if nm.i1_equiv_i2:
            yield "b_i1_i2", [(i4, i1), (i3, i4), (i1, i3 + n)]
        return
    if not (nm.i3_equiv_i4 and nm.i1_equiv_i2):
        return
    yield "e_nonempty", [(i4 - n, i1), (i4, i1)]
    yield "d_and_f", [(i4 - n - 1, i1 + 1), (i4 - 1, i1 + 1), (i4 - n, i1), (i4, i1)]
    # region D ascent: leftmost a > i1 with a smaller later value below w(i1)
    top = w(i1)
    for a in range(i1 + 1, i4 + n):
        if any(w(a) < w(j) < top for j in range(a + 1, i4 + n)):
            b = next(j for j in range(a + 1, a + w.spread() + 1) if w(j) > w(a))
            yield "d_ascent", [(i4, a), (a, b), (b, i4 + n)]
            break


def _catalog(w: AffinePermutation, nm: Normalized3412) -> Optional[WitnessCertificate]:
    for case, pairs in _candidates(w, nm):
        try:
            x = _apply(w, pairs)
        except ValueError:
            continue
        cert = certify(x, w, case)
        if cert is not None:
            return cert
    return None


def _search(w: AffinePermutation, lo: int, hi: int, depth: int = 4) -> Optional[WitnessCertificate]:
    """Walk down from ``w`` by length-decreasing transpositions on ``[lo, hi]``."""
    n = w.n
    frontier = [w]
    seen = {w}
    for _ in range(depth):
        nxt = []
        for x in frontier:
            for p in range(lo, hi + 1):
                xp = x(p)
                for q in range(p + 1, hi + 1):
                    if (q - p) % n == 0 or x(q) > xp:
                        continue
                    y = x.swap_positions(p, q)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
        nxt.sort(key=lambda y: (-y.length(), y.window))
        nxt = nxt[:SEARCH_BUDGET]
        for y in nxt:
            cert = certify(y, w, "search")
            if cert is not None:
                return cert
        frontier = nxt
    return None


def _search_ideal(w: AffinePermutation, budget: int = SEARCH_BUDGET) -> Optional[WitnessCertificate]:
    """Scan ``[e, w]`` downward from the top, one length at a time."""
    level = {w}
    checked = 0
    while level and checked < budget:
        below = set()
        for v in level:
            below.update(u for _, u in covers_down(v))
        for x in sorted(below, key=lambda y: y.window):
            cert = certify(x, w, "ideal_scan")
            checked += 1
            if cert is not None:
                return cert
        level = below
    return None


def witness_3412(w: AffinePermutation, norm: Optional[Normalized3412] = None) -> WitnessCertificate:
    if recognize_spiral(w) is not None:
        raise SpiralInput(f"{w} is a twisted spiral")
    if norm is None:
        occ = contains(w, P3412)
        if occ is None:
            raise NotAnOccurrence(f"{w} avoids 3412")
        norm = normalize_3412(w, occ)
    cert = _catalog(w, norm)
    if cert is not None:
        return cert
    if not norm.b_nonempty and norm.i3_equiv_i4 and norm.i1_equiv_i2:
        # the region F cases are region D cases of the rotated element
        rw = rotate(w)
        occ = contains(rw, P3412)
        if occ is not None:
            cert = _catalog(rw, normalize_3412(rw, occ))
            if cert is not None:
                return WitnessCertificate(rotate(cert.x), cert.length_gap, cert.r_count, cert.case + "_rotated")
    n = w.n
    cert = _search(w, norm.i3 - 2 * n, norm.i2 + 2 * n)
    if cert is None:
        cert = _search_ideal(w)
    if cert is None:
        raise WitnessNotFound(f"no certificate found for {w}")
    return cert


def witness(w: AffinePermutation) -> Union[CoefficientReport, WitnessCertificate]:
    """Non-palindromicity evidence for an element that is not rationally smooth."""
    occ4 = contains(w, P4231)
    if occ4 is not None:
        return witness_4231(w, occ4)
    if contains(w, P3412) is None:
        raise PreconditionViolated(f"{w} avoids 3412 and 4231; it is rationally smooth")
    return witness_3412(w)

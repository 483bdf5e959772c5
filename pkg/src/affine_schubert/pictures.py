"""Affine Bruhat pictures, index deletion and flattening of comparable pairs.

A picture of ``x <= w`` draws the points ``(i, w(i))`` and ``(i, x(i))`` and
shades every lattice point where ``d_{x,w} = r_w - r_x`` is positive.
Deleting an index ``i`` removes the columns ``i + kn`` and the rows
``w(i) + kn`` and relabels what is left as an element of period ``n - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Union

from .bruhat import difference, difference_prime, leq
from .core import AffinePermutation
from .errors import InvalidArgs, NotComparable

__all__ = [
    "Rectangle",
    "rectangles_A",
    "rectangle_multiplicity",
    "BruhatPicture",
    "build_picture",
    "delete_index",
    "delete_index_pair",
    "removable_index",
    "is_flattened",
    "flatten_pair",
    "render_svg",
]

CELL = 16
MARGIN = 24


@dataclass(frozen=True)
class Rectangle:
    """Closed box ``[c0, c1] x [r0, r1]`` of lattice points (columns x rows)."""

    c0: int
    c1: int
    r0: int
    r1: int

    def __contains__(self, pt) -> bool:
        i, j = pt
        return self.c0 <= i <= self.c1 and self.r0 <= j <= self.r1


def rectangles_A(x: AffinePermutation, p: int, q: int, k_range: Iterable[int]) -> list[Rectangle]:
    """``[p+kn, q-1+kn] x [x(p)+1+kn, x(q)+kn]`` for each ``k``."""
    if not (p < q and x(p) < x(q)):
        raise InvalidArgs(f"need p < q and x(p) < x(q), got p={p}, q={q}")
    n = x.n
    return [
        Rectangle(p + k * n, q - 1 + k * n, x(p) + 1 + k * n, x(q) + k * n) for k in k_range
    ]


def rectangle_multiplicity(x: AffinePermutation, p: int, q: int, pt) -> int:
    """Number of translates ``A_{p,q,k}(x)`` containing ``pt``."""
    n = x.n
    i, _ = pt
    ks = range((i - q) // n - 1, (i - p) // n + 2)
    return sum(pt in r for r in rectangles_A(x, p, q, ks))


# --------------------------------------------------------------------------
# pictures


@dataclass
class BruhatPicture:
    n: int
    lo: int
    hi: int
    vlo: int
    vhi: int
    w_points: list[tuple[int, int]]
    x_points: list[tuple[int, int]]
    shading: dict[tuple[int, int], int]
    rectangles: list[Rectangle] = field(default_factory=list)

    @property
    def max_multiplicity(self) -> int:
        return max(self.shading.values(), default=0)


def build_picture(
    x: AffinePermutation,
    w: AffinePermutation,
    lo: Optional[int] = None,
    hi: Optional[int] = None,
) -> BruhatPicture:
    """Picture on the index range ``[lo, hi]`` (default ``[1-n, 2n]``)."""
    n = w.n
    lo = 1 - n if lo is None else lo
    hi = 2 * n if hi is None else hi
    if lo > hi:
        raise InvalidArgs(f"empty viewport [{lo}, {hi}]")
    idx = range(lo, hi + 1)
    vals = [w(i) for i in idx] + [x(i) for i in idx]
    vlo, vhi = min(vals), max(vals)
    shading = {}
    for p in idx:
        for q in range(vlo, vhi + 1):
            d = difference(x, w, p, q)
            if d > 0:
                shading[(p, q)] = d
    return BruhatPicture(
        n, lo, hi, vlo, vhi,
        [(i, w(i)) for i in idx],
        [(i, x(i)) for i in idx],
        shading,
    )


# --------------------------------------------------------------------------
# deletion and flattening


def _relabel_maps(n: int, i: int, wi: int):
    def pos(p: int) -> int:
        return p - (p - i) // n

    def val(v: int) -> int:
        return v - (v - wi) // n

    return pos, val


def _deleted(w: AffinePermutation, i: int, wi: int, shift: Optional[int] = None):
    n = w.n
    m = n - 1
    pos, val = _relabel_maps(n, i, wi)
    image = {}
    for p in range(i - 2 * n, i + 2 * n + 1):
        if (p - i) % n:
            j = pos(p)
            if 1 <= j <= m:
                image[j] = val(w(p))
    window = [image[j] for j in range(1, m + 1)]
    if shift is None:
        excess = sum(window) - m * (m + 1) // 2
        shift = -(excess // m)
    return [v + shift for v in window], shift


def delete_index(w: AffinePermutation, i: int) -> AffinePermutation:
    """``w`` with the columns ``i + kn`` and rows ``w(i) + kn`` removed.

    Positions and values are renumbered consecutively, keeping the points
    just right of and above the deleted ones fixed, and the values are then
    translated so the new window has the required sum.  ``i`` is first
    reduced into ``[1, n]``.
    """
    n = w.n
    if n < 3:
        raise InvalidArgs("deletion needs n >= 3")
    i = (i - 1) % n + 1
    window, _ = _deleted(w, i, w(i))
    return AffinePermutation(n - 1, window)


def delete_index_pair(
    x: AffinePermutation, w: AffinePermutation, i: int
) -> tuple[AffinePermutation, AffinePermutation]:
    """Delete index ``i`` (with ``x(i) == w(i)``) from both, with one common relabeling."""
    n = w.n
    if n < 3:
        raise InvalidArgs("deletion needs n >= 3")
    i = (i - 1) % n + 1
    if x(i) != w(i):
        raise InvalidArgs(f"x({i}) != w({i})")
    wwin, shift = _deleted(w, i, w(i))
    xwin, _ = _deleted(x, i, w(i), shift)
    return AffinePermutation(n - 1, xwin), AffinePermutation(n - 1, wwin)


def removable_index(x: AffinePermutation, w: AffinePermutation, i: int) -> bool:
    """The three flattening conditions at index ``i``."""
    wi = w(i)
    if x(i) != wi:
        return False
    if difference(x, w, i, wi) or difference_prime(x, w, i, wi):
        return False
    north = difference(x, w, i, wi + 1) == 0 and difference(x, w, i - 1, wi) == 0
    south = difference_prime(x, w, i, wi - 1) == 0 and difference_prime(x, w, i + 1, wi) == 0
    return north or south


def is_flattened(x: AffinePermutation, w: AffinePermutation) -> bool:
    if w.n <= 2:
        return True
    return not any(removable_index(x, w, i) for i in range(1, w.n + 1))


def flatten_pair(
    x: AffinePermutation, w: AffinePermutation
) -> tuple[AffinePermutation, AffinePermutation]:
    """Remove removable indices, smallest residue first, until none is left or ``n = 2``."""
    if not leq(x, w):
        raise NotComparable(f"{x} is not below {w}")
    while w.n > 2:
        i = next((i for i in range(1, w.n + 1) if removable_index(x, w, i)), None)
        if i is None:
            break
        x, w = delete_index_pair(x, w, i)
    return x, w


# --------------------------------------------------------------------------
# SVG


def _svg_lines(pic: BruhatPicture) -> list[str]:
    cols = pic.hi - pic.lo + 1
    rows = pic.vhi - pic.vlo + 1
    width = cols * CELL + 2 * MARGIN
    height = rows * CELL + 2 * MARGIN

    def cx(i: int) -> float:
        return MARGIN + (i - pic.lo) * CELL + CELL / 2

    def cy(j: int) -> float:
        return MARGIN + (pic.vhi - j) * CELL + CELL / 2

    top = max(pic.max_multiplicity, 1)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    for (i, j), d in sorted(pic.shading.items()):
        op = 0.25 + 0.6 * d / top
        out.append(
            f'<rect class="shade" x="{cx(i) - CELL / 2}" y="{cy(j) - CELL / 2}" '
            f'width="{CELL}" height="{CELL}" fill="#8a8a8a" fill-opacity="{op:.3f}" data-d="{d}"/>'
        )
    for i in range(pic.lo, pic.hi + 1):
        out.append(
            f'<line x1="{cx(i)}" y1="{MARGIN}" x2="{cx(i)}" y2="{height - MARGIN}" '
            'stroke="#dddddd" stroke-width="0.5"/>'
        )
        if i % pic.n == 0:
            out.append(
                f'<line x1="{cx(i) + CELL / 2}" y1="{MARGIN}" x2="{cx(i) + CELL / 2}" '
                f'y2="{height - MARGIN}" stroke="#9999cc" stroke-width="0.8"/>'
            )
        out.append(
            f'<text x="{cx(i)}" y="{height - MARGIN / 3}" font-size="8" text-anchor="middle">{i}</text>'
        )
    for j in range(pic.vlo, pic.vhi + 1):
        out.append(
            f'<line x1="{MARGIN}" y1="{cy(j)}" x2="{width - MARGIN}" y2="{cy(j)}" '
            'stroke="#dddddd" stroke-width="0.5"/>'
        )
        out.append(f'<text x="{MARGIN / 2}" y="{cy(j) + 3}" font-size="8" text-anchor="middle">{j}</text>')
    for r in pic.rectangles:
        out.append(
            f'<rect class="overlay" x="{cx(r.c0) - CELL / 2}" y="{cy(r.r1) - CELL / 2}" '
            f'width="{(r.c1 - r.c0 + 1) * CELL}" height="{(r.r1 - r.r0 + 1) * CELL}" '
            'fill="none" stroke="#3366cc" stroke-width="1"/>'
        )
    for i, j in pic.w_points:
        out.append(f'<circle class="w" cx="{cx(i)}" cy="{cy(j)}" r="4" fill="#000000"/>')
    s = 4
    for i, j in pic.x_points:
        out.append(
            f'<path class="x" d="M {cx(i) - s} {cy(j) - s} L {cx(i) + s} {cy(j) + s} '
            f'M {cx(i) - s} {cy(j) + s} L {cx(i) + s} {cy(j) - s}" stroke="#cc0000" stroke-width="1.5"/>'
        )
    out.append("</svg>")
    return out


def svg_text(pic: BruhatPicture) -> str:
    return "\n".join(_svg_lines(pic)) + "\n"


def render_svg(pic: BruhatPicture, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(svg_text(pic), encoding="utf-8")
    return path

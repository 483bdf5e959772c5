"""Dense integer polynomials in ``q`` and the q-analogues built from them."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .errors import InvalidArgs

__all__ = ["Poly", "q_integer", "q_factorial", "q_binomial", "is_palindromic"]


class Poly:
    """Coefficients indexed by degree, trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def parse(cls, text: str) -> "Poly":
        return cls(int(tok) for tok in text.split())

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return self.coeffs == Poly(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        m = max(len(self), len(other))
        return Poly(self[k] + other[k] for k in range(m))

    def __sub__(self, other: "Poly") -> "Poly":
        m = max(len(self), len(other))
        return Poly(self[k] - other[k] for k in range(m))

    def __mul__(self, other: "Poly") -> "Poly":
        if not self or not other:
            return Poly()
        out = [0] * (len(self) + len(other) - 1)
        for a, x in enumerate(self.coeffs):
            if x:
                for b, y in enumerate(other.coeffs):
                    out[a + b] += x * y
        return Poly(out)

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dq = len(self) - len(other) + 1
        quot = [0] * max(dq, 0)
        for k in range(dq - 1, -1, -1):
            c, r = divmod(rem[k + other.degree], lead)
            if r:
                raise ValueError("non-integral quotient coefficient")
            quot[k] = c
            if c:
                for b, y in enumerate(other.coeffs):
                    rem[k + b] -= c * y
        return Poly(quot), Poly(rem)

    def exact_div(self, other: "Poly") -> "Poly":
        quot, rem = divmod(self, other)
        if rem:
            raise ValueError(f"{other} does not divide {self}")
        return quot

    def __call__(self, q):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def text(self) -> str:
        return " ".join(map(str, self.coeffs)) if self.coeffs else "0"

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}{mono}")
        return " + ".join(terms) or "0"


def is_palindromic(p: Poly) -> bool:
    return p.is_palindromic()


def q_integer(m: int) -> Poly:
    """``[m]_q = 1 + q + ... + q^(m-1)``."""
    return Poly([1] * m)


@lru_cache(maxsize=None)
def q_factorial(m: int) -> Poly:
    if m < 0:
        raise InvalidArgs(f"q_factorial needs m >= 0, got {m}")
    out = Poly.one()
    for k in range(1, m + 1):
        out = out * q_integer(k)
    return out


@lru_cache(maxsize=None)
def q_binomial(k: int, j: int) -> Poly:
    if not 0 <= j <= k:
        raise InvalidArgs(f"q_binomial needs 0 <= j <= k, got ({k}, {j})")
    return q_factorial(k).exact_div(q_factorial(j) * q_factorial(k - j))

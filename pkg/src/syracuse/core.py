"""Exact arithmetic for the Collatz map g, the Syracuse map f and the
decomposition k = 2^p * h - 1.

Integers are plain Python ints, so every operation is exact at any
magnitude. The compiled fixed-width fast path lives in
:mod:`syracuse.verifier.kernel`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Optional


def require_positive(x: int, name: str = "x") -> int:
    if not isinstance(x, int) or isinstance(x, bool):
        raise TypeError(f"{name} must be an int, got {type(x).__name__}")
    if x < 1:
        raise ValueError(f"{name} must be a positive integer, got {x}")
    return x


def require_odd(k: int, name: str = "k") -> int:
    require_positive(k, name)
    if not k & 1:
        raise ValueError(f"{name} must be odd, got {k}")
    return k


def valuation2(x: int) -> int:
    """2-adic valuation of a positive integer (number of trailing zero bits)."""
    if x <= 0:
        raise ValueError(f"2-adic valuation needs a positive integer, got {x}")
    return (x & -x).bit_length() - 1


@dataclass(frozen=True)
class SyracuseStep:
    next: int
    valuation: int


class Decomposition(NamedTuple):
    k: int
    p: int
    h: int

    @classmethod
    def checked(cls, k: int, p: int, h: int) -> "Decomposition":
        if h < 1 or h & 1 == 0 or p < 1 or (h << p) - 1 != k:
            raise ValueError(f"inconsistent decomposition k={k}, p={p}, h={h}")
        return cls(k, p, h)

    @classmethod
    def from_ph(cls, p: int, h: int) -> "Decomposition":
        require_positive(p, "p")
        require_odd(h, "h")
        return cls((h << p) - 1, p, h)


class Case(enum.Enum):
    CASE1 = "Case1"
    CASE2 = "Case2"
    CASE3 = "Case3"
    CASE4 = "Case4"
    CASE5 = "Case5"
    CASE6 = "Case6"

    def __str__(self):
        return self.value


@dataclass(frozen=True, slots=True)
class CaseTag:
    """One of the six cases, plus ``ell`` (Cases 3-6, h = 3*ell + residue)
    or ``hbar`` (Case 2, h = 3*hbar)."""

    variant: Case
    decomposition: Decomposition
    ell: Optional[int] = None
    hbar: Optional[int] = None

    @property
    def k(self) -> int:
        return self.decomposition.k

    @property
    def p(self) -> int:
        return self.decomposition.p

    @property
    def h(self) -> int:
        return self.decomposition.h


def g_step(x: int) -> int:
    """Collatz map: 3x+1 for odd x, x/2 for even x."""
    require_positive(x, "x")
    return 3 * x + 1 if x & 1 else x >> 1


def f_step(k: int) -> SyracuseStep:
    """Syracuse map: 3k+1 = 2^n * next with next odd."""
    require_odd(k)
    t = 3 * k + 1
    n = valuation2(t)
    return SyracuseStep(t >> n, n)


def f_iterate(k: int, count: int) -> int:
    require_odd(k)
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    for _ in range(count):
        if k == 1:
            break  # fixed point
        t = 3 * k + 1
        k = t >> valuation2(t)
    return k


def decompose(k: int) -> Decomposition:
    require_odd(k)
    p = valuation2(k + 1)
    return Decomposition(k, p, (k + 1) >> p)


def pow2_mod3(p: int) -> int:
    """2^p mod 3 from the parity of p: 1 for even p, 2 for odd p."""
    if p < 0:
        raise ValueError(f"p must be >= 0, got {p}")
    return 2 if p & 1 else 1


def classify(k: int) -> CaseTag:
    """Assign an odd k >= 3 to exactly one of the six cases.

    k = 1 is the terminal fixed point and has no case.
    """
    if k == 1:
        raise ValueError("k = 1 is terminal and has no case")
    d = decompose(k)
    if d.p == 1:
        return CaseTag(Case.CASE1, d)
    q, res = divmod(d.h, 3)
    if res == 0:
        return CaseTag(Case.CASE2, d, hbar=q)
    p_odd = d.p & 1
    if res == 1:
        return CaseTag(Case.CASE3 if p_odd else Case.CASE5, d, ell=q)
    return CaseTag(Case.CASE6 if p_odd else Case.CASE4, d, ell=q)

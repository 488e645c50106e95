"""Orbit statistics under g and f, and bounded membership in E."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import require_odd, require_positive

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class TrajectoryStats:
    seed: int
    collatz_steps: int
    syracuse_steps: int
    peak: int
    reached_one: bool
    budget_exhausted: bool


class Membership(enum.Enum):
    VERIFIED = "Verified"
    BUDGET_EXCEEDED = "BudgetExceeded"

    def __str__(self):
        return self.value


def orbit_stats(k: int, budget: int = DEFAULT_BUDGET) -> TrajectoryStats:
    """Drive k by f until it hits 1 or `budget` f-steps are spent.

    collatz_steps counts every 3x+1 and every halving separately; peak is the
    largest value in the g-orbit, which is always a 3x+1 value or the seed.
    """
    require_odd(k)
    require_positive(budget, "budget")
    x = k
    peak = k
    f_steps = 0
    g_steps = 0
    while x != 1:
        if f_steps >= budget:
            return TrajectoryStats(k, g_steps, f_steps, peak, False, True)
        t = 3 * x + 1
        if t > peak:
            peak = t
        n = (t & -t).bit_length() - 1
        x = t >> n
        f_steps += 1
        g_steps += 1 + n
    return TrajectoryStats(k, g_steps, f_steps, peak, True, False)


def in_E_bounded(k: int, budget: int = DEFAULT_BUDGET) -> Membership:
    if orbit_stats(k, budget).reached_one:
        return Membership.VERIFIED
    return Membership.BUDGET_EXCEEDED

"""Descent witnesses for Cases 1-4, preimage enumeration for Cases 5-6,
the expansion formula and the 3^p*h - 1 peak form.

Every f-relation stored in a witness is recomputed with :func:`f_step`;
nothing is taken on trust from the algebra. Non-integral intermediate
values are returned as data, not raised.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .core import (
    Case,
    CaseTag,
    Decomposition,
    classify,
    f_iterate,
    f_step,
    require_odd,
    require_positive,
    valuation2,
)


class VerificationError(AssertionError):
    """An identity that must hold exactly did not; indicates a bug."""


class WrongCaseError(ValueError):
    pass


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class Relation:
    """f(source) == target with 3*source + 1 = 2^valuation * target, as observed."""

    source: int
    target: int
    valuation: int
    holds: bool

    @classmethod
    def check(cls, source: int, target: int) -> "Relation":
        step = f_step(source)
        return cls(source, target, step.valuation, step.next == target)


@dataclass(frozen=True)
class RValue:
    """Outcome of r = (4m - 1)/3: integral with r set, or the exact fraction."""

    m: int
    numerator: int
    denominator: int
    r: Optional[int]

    @property
    def integral(self) -> bool:
        return self.r is not None

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)


@dataclass(frozen=True)
class IdentityCheck:
    k: int
    r: int
    order: int  # sign of r - k


@dataclass(frozen=True)
class PreimageSet:
    k: int
    s_max: int
    members: tuple = ()  # (m, s) pairs, ascending in s


@dataclass(frozen=True)
class PeakValue:
    pre_division: int
    odd_part: int
    valuation: int


@dataclass
class DescentWitness:
    """Constructive evidence for one k.

    ``witness_chain`` lists the witnesses in construction order (f(k) for
    Case 1, kbar for Case 2, m then r for Cases 3/4; empty for 5/6).
    ``comparisons`` maps witness value to sign(witness - k).
    """

    case: CaseTag
    witness_chain: list = field(default_factory=list)
    relations: list = field(default_factory=list)
    integrality_flags: dict = field(default_factory=dict)
    comparisons: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)

    @property
    def relations_hold(self) -> bool:
        return all(rel.holds for rel in self.relations)


def _tag_in(k: int, allowed) -> CaseTag:
    tag = classify(k)
    if tag.variant not in allowed:
        names = "/".join(str(c) for c in allowed)
        raise WrongCaseError(f"k={k} is {tag.variant}, expected {names}")
    return tag


def case1_witness(k: int) -> DescentWitness:
    tag = _tag_in(k, (Case.CASE1,))
    step = f_step(k)
    fk = step.next
    w = DescentWitness(tag, witness_chain=[fk])
    w.relations.append(Relation(k, fk, step.valuation, True))
    w.comparisons[fk] = _sign(fk - k)
    # f(2h-1) <= (3h-1)/2, with the 2-adic valuation of 3k+1 at least 2
    w.notes["bound_holds"] = 2 * fk <= 3 * tag.h - 1
    w.notes["valuation_at_least_2"] = step.valuation >= 2
    return w


def case2_predecessor(k: int) -> DescentWitness:
    tag = _tag_in(k, (Case.CASE2,))
    kbar = (tag.hbar << (tag.p + 1)) - 1
    w = DescentWitness(tag, witness_chain=[kbar])
    w.relations.append(Relation.check(kbar, k))
    w.comparisons[kbar] = _sign(kbar - k)
    return w


def case34_m(k: int) -> int:
    """m = (4k - 1)/3 for a Case 3 or Case 4 k; f(m) = k with valuation 2."""
    _tag_in(k, (Case.CASE3, Case.CASE4))
    q, rem = divmod(4 * k - 1, 3)
    if rem:
        raise VerificationError(f"3 does not divide 4k-1 for in-case k={k}")
    step = f_step(q)
    if step.next != k or step.valuation != 2:
        raise VerificationError(f"f({q}) = {step}, expected ({k}, 2)")
    return q


def case34_r(m: int) -> RValue:
    """r = (4m - 1)/3, reported as a fraction when 3 does not divide 4m - 1."""
    require_odd(m, "m")
    num = 4 * m - 1
    q, rem = divmod(num, 3)
    if rem:
        return RValue(m, num, 3, None)
    step = f_step(q)
    if step.next != m or step.valuation != 2:
        raise VerificationError(f"f({q}) = {step}, expected ({m}, 2)")
    return RValue(m, num, 3, q)


def case34_identity_check(k: int, r: int) -> IdentityCheck:
    """Check 16k = 9r + 7 exactly and report how r compares to k."""
    if 16 * k != 9 * r + 7:
        raise VerificationError(f"16*{k} != 9*{r} + 7")
    return IdentityCheck(k, r, _sign(r - k))


def case34_witness(k: int) -> DescentWitness:
    tag = _tag_in(k, (Case.CASE3, Case.CASE4))
    m = case34_m(k)
    w = DescentWitness(tag, witness_chain=[m])
    w.integrality_flags["m"] = True
    w.relations.append(Relation.check(m, k))
    w.comparisons[m] = _sign(m - k)
    rv = case34_r(m)
    w.integrality_flags["r"] = rv.integral
    if rv.integral:
        r = rv.r
        w.witness_chain.append(r)
        w.relations.append(Relation.check(r, m))
        w.comparisons[r] = _sign(r - k)
        w.notes["identity_16k"] = case34_identity_check(k, r)
    else:
        w.notes["r_fraction"] = rv.as_fraction()
    return w


def preimages(k: int, s_max: int) -> PreimageSet:
    """All odd m with 3m + 1 = 2^s * k for 1 <= s <= s_max.

    Scans every s; the parity pattern (none when 3 | k) falls out of the scan
    rather than being assumed.
    """
    require_odd(k)
    require_positive(s_max, "s_max")
    members = []
    t = k
    for s in range(1, s_max + 1):
        t <<= 1
        m, rem = divmod(t - 1, 3)
        if rem == 0:
            step = f_step(m)
            if step.next != k or step.valuation != s:
                raise VerificationError(f"f({m}) = {step}, expected ({k}, {s})")
            members.append((m, s))
    return PreimageSet(k, s_max, tuple(members))


def nonexistence_witness(k: int, s_max: int = 64) -> DescentWitness:
    """Evidence for Cases 5/6: 3 | k and no preimage up to s_max."""
    tag = _tag_in(k, (Case.CASE5, Case.CASE6))
    pre = preimages(k, s_max)
    w = DescentWitness(tag)
    w.notes["k_mod_3"] = k % 3
    w.notes["preimages_searched_s_max"] = s_max
    w.notes["preimages_found"] = len(pre.members)
    return w


def descend(k: int, s_max: int = 64) -> DescentWitness:
    """Dispatch to the witness construction for k's case."""
    v = classify(k).variant
    if v is Case.CASE1:
        return case1_witness(k)
    if v is Case.CASE2:
        return case2_predecessor(k)
    if v in (Case.CASE3, Case.CASE4):
        return case34_witness(k)
    return nonexistence_witness(k, s_max)


def expansion_value(d: Decomposition, n: int) -> int:
    return 3**n * (d.h << (d.p - n)) - 1


def expansion(d: Decomposition, n: int) -> int:
    """f^n(k) = 3^n * 2^(p-n) * h - 1 for 1 <= n <= p-1, checked against f."""
    if not 1 <= n <= d.p - 1:
        raise ValueError(f"n must lie in [1, p-1] = [1, {d.p - 1}], got {n}")
    value = expansion_value(d, n)
    actual = f_iterate(d.k, n)
    if value != actual:
        raise VerificationError(f"expansion gives {value}, f^{n}({d.k}) = {actual}")
    return value


def expansion_chain(d: Decomposition) -> list:
    """[k, f(k), ..., f^(p-1)(k)] built from the formula, each term checked."""
    return [d.k] + [expansion(d, n) for n in range(1, d.p)]


def peak_value(d: Decomposition) -> PeakValue:
    """The pre-division value 3^p*h - 1 and its odd part, which is f^p(k)."""
    if d.p < 2:
        raise ValueError(f"peak_value needs p >= 2, got p={d.p}")
    pre = 3**d.p * d.h - 1
    v = valuation2(pre)
    odd = pre >> v
    actual = f_iterate(d.k, d.p)
    if odd != actual:
        raise VerificationError(f"odd part {odd} != f^{d.p}({d.k}) = {actual}")
    return PeakValue(pre, odd, v)


__all__ = [
    "DescentWitness", "IdentityCheck", "PeakValue", "PreimageSet", "RValue",
    "Relation", "VerificationError", "WrongCaseError", "case1_witness",
    "case2_predecessor", "case34_identity_check", "case34_m", "case34_r",
    "case34_witness", "descend", "expansion", "expansion_chain",
    "expansion_value", "nonexistence_witness", "peak_value", "preimages",
]

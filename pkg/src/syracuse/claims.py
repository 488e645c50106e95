"""Falsifiable claims: each statement about Lemma 1 and Cases 1-6 as an
executable predicate, scanned over a range with smallest-counterexample
search.

A claim has a precondition (which k it speaks about), an optional
antecedent (e.g. "r is an integer" for the r-claims) and a predicate.
k failing the antecedent are counted as ``filtered`` and never as
confirmations, so conditional claims cannot pass vacuously.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from .core import Case, classify, f_step, pow2_mod3, valuation2
from .descent import expansion_value, preimages

FILTERED = "filtered"


class ClaimId(str, enum.Enum):
    L1A = "L1A"
    L1B = "L1B"
    C1_DESCENT = "C1_DESCENT"
    C2_DESCENT = "C2_DESCENT"
    C34_M_INTEGRAL = "C34_M_INTEGRAL"
    C3_R_INTEGRAL = "C3_R_INTEGRAL"
    C4_R_INTEGRAL = "C4_R_INTEGRAL"
    C3_R_LESS_K = "C3_R_LESS_K"
    C4_R_LESS_K = "C4_R_LESS_K"
    C56_NO_PREIMAGE = "C56_NO_PREIMAGE"
    EXPANSION = "EXPANSION"
    MOD3_CORRELATION = "MOD3_CORRELATION"
    IDENTITY_16K = "IDENTITY_16K"

    def __str__(self):
        return self.value


class Verdict(str, enum.Enum):
    HOLDS_ON_RANGE = "HOLDS_ON_RANGE"
    FAILS = "FAILS"
    VACUOUS = "VACUOUS"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Claim:
    id: ClaimId
    location: str
    statement: str
    domain: str  # "exponent p" or "odd k"
    cases: tuple  # case filter for odd-k claims; empty for exponent claims
    predicate: Callable  # returns True, False or FILTERED

    @property
    def case_filter(self) -> str:
        if self.domain == "exponent p":
            return "p even" if self.id is ClaimId.L1A else "p odd"
        return ",".join(str(c) for c in self.cases)


@dataclass
class ClaimReport:
    claim: ClaimId
    lo: int
    hi: int
    domain: str
    case_filter: str
    checked_count: int = 0
    filtered_count: int = 0
    failed_count: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def smallest(self) -> Optional[int]:
        return self.counterexamples[0] if self.counterexamples else None

    @property
    def verdict(self) -> Verdict:
        if self.failed_count:
            return Verdict.FAILS
        if self.checked_count == 0:
            return Verdict.VACUOUS
        return Verdict.HOLDS_ON_RANGE


# -- predicates -------------------------------------------------------------
# Each takes the integer under test and its CaseTag (None for exponents).

def _l1a(p, _tag):
    return pow(2, p, 3) == 1 and pow2_mod3(p) == 1


def _l1b(p, _tag):
    return pow(2, p, 3) == 2 and pow2_mod3(p) == 2


def _c1_descent(k, tag):
    step = f_step(k)
    return step.next < k and 2 * step.next <= 3 * tag.h - 1 and step.valuation >= 2


def _c2_descent(k, tag):
    kbar = (tag.hbar << (tag.p + 1)) - 1
    return kbar < k and f_step(kbar).next == k


def _m_of(k):
    m, rem = divmod(4 * k - 1, 3)
    return None if rem else m


def _c34_m_integral(k, _tag):
    m = _m_of(k)
    if m is None or not m & 1:
        return False
    step = f_step(m)
    return step.next == k and step.valuation == 2


def _r_of(k):
    """r = (4m-1)/3 with m = (4k-1)/3, or None when either is non-integral."""
    m = _m_of(k)
    if m is None:
        return None
    r, rem = divmod(4 * m - 1, 3)
    return None if rem else r


def _r_integral(k, _tag):
    r = _r_of(k)
    return r is not None and f_step(r).next == _m_of(k)


def _r_less_k(k, _tag):
    r = _r_of(k)
    if r is None:
        return FILTERED
    return r < k


def _c56_no_preimage(k, _tag):
    return not preimages(k, 64).members and k % 3 == 0


def _expansion(k, tag):
    d = tag.decomposition
    x = k
    for n in range(1, d.p):
        nxt = f_step(x).next
        if nxt != expansion_value(d, n) or nxt <= x:
            return False
        x = nxt
    pre = 3**d.p * d.h - 1
    return f_step(x).next == pre >> valuation2(pre)


def _mod3_correlation(k, tag):
    v = tag.variant
    if v is Case.CASE2:
        return k % 3 == 2
    if v in (Case.CASE3, Case.CASE4):
        return k % 3 == 1
    return k % 3 == 0


def _identity_16k(k, _tag):
    r = _r_of(k)
    if r is None:
        return FILTERED
    if 16 * k != 9 * r + 7:
        return False
    return f_step(f_step(r).next).next == k


_P_GE_2 = (Case.CASE2, Case.CASE3, Case.CASE4, Case.CASE5, Case.CASE6)

REGISTRY = {
    c.id: c
    for c in [
        Claim(ClaimId.L1A, "Lemma 1(a)", "p even => 2^p = 1 (mod 3)",
              "exponent p", (), _l1a),
        Claim(ClaimId.L1B, "Lemma 1(b)", "p odd => 2^p = 2 (mod 3)",
              "exponent p", (), _l1b),
        Claim(ClaimId.C1_DESCENT, "Case 1",
              "p = 1 => f(k) <= (3h-1)/2 < k, with 2^2 | 3k+1",
              "odd k", (Case.CASE1,), _c1_descent),
        Claim(ClaimId.C2_DESCENT, "Case 2",
              "kbar = 2^(p+1)*hbar - 1 satisfies f(kbar) = k and kbar < k",
              "odd k", (Case.CASE2,), _c2_descent),
        Claim(ClaimId.C34_M_INTEGRAL, "Cases 3, 4",
              "m = (4k-1)/3 is an odd integer with f(m) = k",
              "odd k", (Case.CASE3, Case.CASE4), _c34_m_integral),
        Claim(ClaimId.C3_R_INTEGRAL, "Case 3",
              "r = (4m-1)/3 is an odd integer with f(r) = m",
              "odd k", (Case.CASE3,), _r_integral),
        Claim(ClaimId.C4_R_INTEGRAL, "Case 4",
              "r = (4m-1)/3 is an odd integer with f(r) = m",
              "odd k", (Case.CASE4,), _r_integral),
        Claim(ClaimId.C3_R_LESS_K, "Case 3",
              "(9r+7)/16 > 9r/16 > r, i.e. r < k (where r is integral)",
              "odd k", (Case.CASE3,), _r_less_k),
        Claim(ClaimId.C4_R_LESS_K, "Case 4",
              "(9r+7)/16 > 9r/16 > r, i.e. r < k (where r is integral)",
              "odd k", (Case.CASE4,), _r_less_k),
        Claim(ClaimId.C56_NO_PREIMAGE, "Cases 5, 6",
              "no odd m with f(m) = k (searched s <= 64)",
              "odd k", (Case.CASE5, Case.CASE6), _c56_no_preimage),
        Claim(ClaimId.EXPANSION, "Cases 5, 6 (closing remark)",
              "f^n(k) = 3^n 2^(p-n) h - 1 for n < p, strictly increasing; "
              "f^p(k) is the odd part of 3^p h - 1",
              "odd k", (Case.CASE5, Case.CASE6), _expansion),
        Claim(ClaimId.MOD3_CORRELATION, "Cases 2-6 (derived)",
              "Case2 <=> k = 2, Cases 3/4 <=> k = 1, Cases 5/6 <=> k = 0 (mod 3)",
              "odd k", _P_GE_2, _mod3_correlation),
        Claim(ClaimId.IDENTITY_16K, "Cases 3, 4",
              "16k = 9r + 7 and f^2(r) = k (where r is integral)",
              "odd k", (Case.CASE3, Case.CASE4), _identity_16k),
    ]
}


def get_claim(claim) -> Claim:
    try:
        return REGISTRY[ClaimId(claim)]
    except ValueError:
        raise KeyError(f"unknown claim id {claim!r}") from None


def _scan(claim_id: str, lo: int, hi: int, limit: int):
    """Scan [lo, hi] in ascending order. Returns (checked, filtered, failed, ces)."""
    claim = REGISTRY[ClaimId(claim_id)]
    pred = claim.predicate
    checked = filtered = failed = 0
    ces = []
    if claim.domain == "exponent p":
        want = 0 if claim.id is ClaimId.L1A else 1
        start = max(lo, 0)
        if start % 2 != want:
            start += 1
        candidates = ((p, None) for p in range(start, hi + 1, 2))
    else:
        start = max(lo | 1, 3)
        cases = claim.cases
        candidates = (
            (k, tag)
            for k in range(start, hi + 1, 2)
            if (tag := classify(k)).variant in cases
        )
    for x, tag in candidates:
        result = pred(x, tag)
        if result is FILTERED:
            filtered += 1
            continue
        checked += 1
        if not result:
            failed += 1
            if len(ces) < limit:
                ces.append(x)
    return checked, filtered, failed, ces


def _segments(lo: int, hi: int, parts: int):
    step = max(1, -(-(hi - lo + 1) // parts))
    step += step & 1  # keep every segment start on the same parity as lo
    a = lo
    while a <= hi:
        b = min(hi, a + step - 1)
        yield a, b
        a = b + 1


def check_claim(claim, lo: int, hi: int, limit: int = 10, workers: int = 1) -> ClaimReport:
    """Evaluate one claim over [lo, hi] (odd k, or exponents p for L1A/L1B).

    Counterexamples are collected in ascending order, at most `limit` of them.
    With workers > 1 the range is split across processes; the merged report is
    identical to a serial scan.
    """
    c = get_claim(claim)
    if lo > hi:
        raise ValueError(f"empty range: lo={lo} > hi={hi}")
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    report = ClaimReport(c.id, lo, hi, c.domain, c.case_filter)
    if workers == 1:
        parts = [_scan(c.id.value, lo, hi, limit)]
    else:
        segs = list(_segments(lo, hi, workers * 4))
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_scan, *zip(*[(c.id.value, a, b, limit) for a, b in segs])))
    for checked, filtered, failed, ces in parts:
        report.checked_count += checked
        report.filtered_count += filtered
        report.failed_count += failed
        report.counterexamples.extend(ces)
    report.counterexamples = sorted(report.counterexamples)[:limit]
    return report


def run_all(lo: int, hi: int, limit: int = 10, workers: int = 1) -> list:
    if lo > hi:
        raise ValueError(f"empty range: lo={lo} > hi={hi}")
    return [check_claim(cid, lo, hi, limit, workers) for cid in ClaimId]

"""Naive reference implementations used as test oracles.

Deliberately literal: repeated division instead of bit tricks, Fraction for
anything that might not be an integer, full g-orbits. Nothing here imports
from the package.
"""

from fractions import Fraction


def g(x):
    if x % 2 == 1:
        return 3 * x + 1
    return x // 2


def g_orbit(x):
    out = [x]
    while x != 1:
        x = g(x)
        out.append(x)
    return out


def f(k):
    """(next, n) with 3k+1 = 2^n * next by repeated halving under g."""
    x = g(k)
    n = 0
    while x % 2 == 0:
        x = g(x)
        n += 1
    return x, n


def f_iter(k, count):
    for _ in range(count):
        k = f(k)[0]
    return k


def decompose(k):
    x = k + 1
    p = 0
    while x % 2 == 0:
        x //= 2
        p += 1
    return p, x


def case_of(k):
    p, h = decompose(k)
    if p == 1:
        return "Case1"
    if h % 3 == 0:
        return "Case2"
    if h % 3 == 1:
        return "Case3" if p % 2 == 1 else "Case5"
    return "Case4" if p % 2 == 0 else "Case6"


def stats(k):
    """(collatz_steps, syracuse_steps, peak) from the literal g-orbit."""
    orbit = g_orbit(k)
    odd_steps = sum(1 for x in orbit[:-1] if x % 2 == 1)
    return len(orbit) - 1, odd_steps, max(orbit)


def frac_m(k):
    return Fraction(4 * k - 1, 3)


def frac_r(k):
    return Fraction(4 * frac_m(k) - 1, 3)


def preimages(k, s_max):
    out = []
    for s in range(1, s_max + 1):
        m = Fraction(2**s * k - 1, 3)
        if m.denominator == 1 and m.numerator % 2 == 1 and m.numerator > 0:
            out.append((m.numerator, s))
    return out


def claim_holds(claim, k):
    """True/False for k satisfying the precondition and antecedent, else None.

    For L1A/L1B `k` is the exponent p.
    """
    if claim == "L1A":
        return None if k % 2 else (2**k) % 3 == 1
    if claim == "L1B":
        return None if k % 2 == 0 else (2**k) % 3 == 2
    if k < 3 or k % 2 == 0:
        return None
    c = case_of(k)
    p, h = decompose(k)
    if claim == "C1_DESCENT":
        if c != "Case1":
            return None
        nxt, n = f(k)
        return nxt < k and Fraction(nxt) <= Fraction(3 * h - 1, 2) and n >= 2
    if claim == "C2_DESCENT":
        if c != "Case2":
            return None
        kbar = 2 ** (p + 1) * (h // 3) - 1
        return kbar < k and f(kbar)[0] == k
    if claim == "C34_M_INTEGRAL":
        if c not in ("Case3", "Case4"):
            return None
        m = frac_m(k)
        return m.denominator == 1 and m.numerator % 2 == 1 and f(m.numerator) == (k, 2)
    if claim in ("C3_R_INTEGRAL", "C4_R_INTEGRAL"):
        if c != ("Case3" if claim.startswith("C3") else "Case4"):
            return None
        r = frac_r(k)
        return r.denominator == 1 and f(r.numerator)[0] == frac_m(k)
    if claim in ("C3_R_LESS_K", "C4_R_LESS_K"):
        if c != ("Case3" if claim.startswith("C3") else "Case4"):
            return None
        r = frac_r(k)
        if r.denominator != 1:
            return None
        return r < k
    if claim == "C56_NO_PREIMAGE":
        if c not in ("Case5", "Case6"):
            return None
        return not preimages(k, 64) and k % 3 == 0
    if claim == "EXPANSION":
        if c not in ("Case5", "Case6"):
            return None
        x = k
        for n in range(1, p):
            y = f(x)[0]
            if y != 3**n * 2 ** (p - n) * h - 1 or y <= x:
                return False
            x = y
        top = 3**p * h - 1
        while top % 2 == 0:
            top //= 2
        return f(x)[0] == top
    if claim == "MOD3_CORRELATION":
        if c == "Case1":
            return None
        want = {"Case2": 2, "Case3": 1, "Case4": 1, "Case5": 0, "Case6": 0}[c]
        return k % 3 == want
    if claim == "IDENTITY_16K":
        if c not in ("Case3", "Case4"):
            return None
        r = frac_r(k)
        if r.denominator != 1:
            return None
        return 16 * k == 9 * r.numerator + 7 and f_iter(r.numerator, 2) == k
    raise KeyError(claim)


def claim_scan(claim, lo, hi):
    """(verdict, checked, counterexamples) by brute force over [lo, hi]."""
    checked = 0
    ces = []
    for x in range(lo, hi + 1):
        res = claim_holds(claim, x)
        if res is None:
            continue
        checked += 1
        if not res:
            ces.append(x)
    if ces:
        return "FAILS", checked, ces
    return ("HOLDS_ON_RANGE" if checked else "VACUOUS"), checked, ces


def records(lo, hi):
    steps_rec, peak_rec = [], []
    best_s = best_p = -1
    for k in range(lo | 1, hi + 1, 2):
        s, _, pk = stats(k)
        if s > best_s:
            best_s = s
            steps_rec.append((k, s))
        if pk > best_p:
            best_p = pk
            peak_rec.append((k, pk))
    return steps_rec, peak_rec

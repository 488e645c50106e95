"""Compiled fixed-width orbit kernel.

Values are held as two uint64 words (hi, lo). Every 3x+1 is checked for
overflow past 128 bits; an overflowing seed is flagged so the caller can
redo it in arbitrary precision. Nothing ever wraps.
"""

import numpy as np
from numba import njit

STATUS_OK = 0
STATUS_BUDGET = 1
STATUS_OVERFLOW = 2
STATUS_CYCLE = 3
STATUS_SHORTCUT = 4  # fell below threshold, full orbit exceeded budget

_ONE = np.uint64(1)
_ZERO = np.uint64(0)
HI_LIMIT = 0x5555555555555554  # 3*hi + 2 must fit in 64 bits
_LO_LIMIT = np.uint64(0x5555555555555555)  # 3*lo + 1 fits without carry below this


@njit(cache=True, nogil=True)
def _orbit(seed, threshold, budget, hi_limit):
    """Full f-orbit of a single seed < 2^64.

    Returns (status, syracuse_steps, collatz_steps, peak_hi, peak_lo).
    """
    hi = _ZERO
    lo = np.uint64(seed)
    peak_hi = _ZERO
    peak_lo = lo
    f_steps = 0
    g_steps = 0
    below = lo < threshold
    while not (hi == _ZERO and lo == _ONE):
        if f_steps >= budget:
            if below:
                return STATUS_SHORTCUT, f_steps, g_steps, peak_hi, peak_lo
            return STATUS_BUDGET, f_steps, g_steps, peak_hi, peak_lo
        # x -> 3x + 1
        if hi == _ZERO and lo < _LO_LIMIT:
            lo = lo * np.uint64(3) + _ONE
        else:
            if hi > hi_limit:
                return STATUS_OVERFLOW, f_steps, g_steps, peak_hi, peak_lo
            carry = lo >> np.uint64(63)
            s = (lo << _ONE) + lo
            if s < lo:
                carry += _ONE
            s2 = s + _ONE
            if s2 == _ZERO:
                carry += _ONE
            hi = hi * np.uint64(3) + carry
            lo = s2
        if hi > peak_hi or (hi == peak_hi and lo > peak_lo):
            peak_hi = hi
            peak_lo = lo
        g_steps += 1
        # strip trailing zeros
        if lo == _ZERO:
            lo = hi
            hi = _ZERO
            g_steps += 64
        t = 0
        while (lo >> np.uint64(t)) & _ONE == _ZERO:
            t += 1
        if t > 0:
            ut = np.uint64(t)
            lo = (lo >> ut) | (hi << np.uint64(64 - t))
            hi = hi >> ut
            g_steps += t
        f_steps += 1
        if hi == _ZERO:
            if lo < threshold:
                below = True
            if lo == np.uint64(seed) and seed != 1:
                return STATUS_CYCLE, f_steps, g_steps, peak_hi, peak_lo
    return STATUS_OK, f_steps, g_steps, peak_hi, peak_lo


@njit(cache=True, nogil=True)
def orbit_block(first, count, threshold, budget, status, f_steps, g_steps, peak_hi, peak_lo,
                hi_limit=HI_LIMIT):
    """Run the odd seeds first, first+2, ... (count of them) into the output arrays.

    `hi_limit` caps the high word before a multiply; lowering it forces the
    overflow path early.
    """
    thr = np.uint64(threshold)
    lim = np.uint64(hi_limit)
    for i in range(count):
        seed = first + 2 * i
        st, fs, gs, ph, pl = _orbit(seed, thr, budget, lim)
        status[i] = st
        f_steps[i] = fs
        g_steps[i] = gs
        peak_hi[i] = ph
        peak_lo[i] = pl


@njit(cache=True, nogil=True)
def candidate_mask(status, g_steps, peak_hi, peak_lo, out):
    """Mark seeds that could be prefix records within the block.

    A seed is a candidate if it is a strict running maximum (among seeds with
    fixed-width results) in either statistic, or if it overflowed and must be
    re-examined exactly.
    """
    best_steps = -1
    best_hi = _ZERO
    best_lo = _ZERO
    have_peak = False
    for i in range(status.shape[0]):
        out[i] = False
        st = status[i]
        if st == STATUS_OVERFLOW:
            out[i] = True
            continue
        if st != STATUS_OK:
            continue
        if g_steps[i] > best_steps:
            best_steps = g_steps[i]
            out[i] = True
        h = peak_hi[i]
        l = peak_lo[i]
        if not have_peak or h > best_hi or (h == best_hi and l > best_lo):
            best_hi = h
            best_lo = l
            have_peak = True
            out[i] = True

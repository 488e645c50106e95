import numpy as np
import pytest

import oracle
from syracuse import orbit_stats
from syracuse.verifier import VerifyConfig, exact_orbit, records, verify_range
from syracuse.verifier import kernel
from syracuse.verifier.run import process_chunk


def test_kernel_matches_exact_orbit():
    n = 5000
    arrs = [np.empty(n, t) for t in (np.int8, np.int64, np.int64, np.uint64, np.uint64)]
    kernel.orbit_block(1, n, 2, 10**6, *arrs)
    status, f_steps, g_steps, ph, pl = arrs
    for i in range(n):
        s = orbit_stats(1 + 2 * i)
        assert status[i] == kernel.STATUS_OK
        assert (f_steps[i], g_steps[i]) == (s.syracuse_steps, s.collatz_steps)
        assert (int(ph[i]) << 64) | int(pl[i]) == s.peak


def test_kernel_double_word_path():
    # trajectories from 2^61 - 1 climb past 2^64
    first = 2**61 - 1
    n = 64
    arrs = [np.empty(n, t) for t in (np.int8, np.int64, np.int64, np.uint64, np.uint64)]
    kernel.orbit_block(first, n, 2, 10**6, *arrs)
    status, f_steps, g_steps, ph, pl = arrs
    assert int(ph[0]) > 0
    for i in range(n):
        s = orbit_stats(first + 2 * i)
        assert status[i] == kernel.STATUS_OK
        assert g_steps[i] == s.collatz_steps
        assert (int(ph[i]) << 64) | int(pl[i]) == s.peak


def test_overflow_escalates_to_exact():
    lo = 2**61 - 1
    hi = lo + 2 * 299
    forced = process_chunk(lo, hi, 300, lo, 10**6, 0, hi_limit=0)
    normal = process_chunk(lo, hi, 300, lo, 10**6, 0)
    assert forced == normal
    status = np.empty(1, np.int8)
    kernel.orbit_block(lo, 1, lo, 10**6, status, np.empty(1, np.int64), np.empty(1, np.int64),
                       np.empty(1, np.uint64), np.empty(1, np.uint64), 0)
    assert status[0] == kernel.STATUS_OVERFLOW


def test_exact_orbit_matches_stats():
    for k in (1, 3, 27, 2**100 + 1):
        st, steps, peak = exact_orbit(k, 2, 10**6)
        s = orbit_stats(k)
        assert (st, steps, peak) == (kernel.STATUS_OK, s.collatz_steps, s.peak)


def test_records_examples():
    steps, peaks = records(1, 30)
    assert (steps, peaks) == oracle.records(1, 30)
    assert {(1, 0), (3, 7), (7, 16), (27, 111)} <= set(steps)
    assert records(1, 1) == ([(1, 0)], [(1, 1)])
    s27 = orbit_stats(27)
    assert records(27, 27) == ([(27, s27.collatz_steps)], [(27, s27.peak)])


def test_records_match_oracle_across_chunks():
    assert records(1, 20001, chunk_size=97) == oracle.records(1, 20001)


def test_records_strictly_increasing():
    steps, peaks = records(1, 10**6)
    for rec in (steps, peaks):
        assert all(a[0] < b[0] and a[1] < b[1] for a, b in zip(rec, rec[1:]))


def test_verify_single():
    rep = verify_range(VerifyConfig(3, 3))
    assert rep.verified_count == 1 and not rep.failures and not rep.budget_exceeded


def test_verify_small_range_vs_oracle():
    rep = verify_range(VerifyConfig(3, 10**5, chunk_size=1000))
    assert rep.verified_count == 49999
    assert not rep.failures and not rep.budget_exceeded
    steps, peaks = oracle.records(3, 10**5)
    assert rep.stopping_time_records == steps
    assert rep.peak_records == peaks


def test_shortcut_soundness_per_seed():
    # per-seed verdict from the kernel equals the naive full-orbit verdict
    n = (10**5 - 3) // 2 + 1
    arrs = [np.empty(n, t) for t in (np.int8, np.int64, np.int64, np.uint64, np.uint64)]
    kernel.orbit_block(3, n, 2, 10**6, *arrs)
    verified = (arrs[0] == kernel.STATUS_OK) | (arrs[0] == kernel.STATUS_SHORTCUT)
    assert verified.all()
    assert all(oracle.g_orbit(k)[-1] == 1 for k in range(3, 10**5 + 1, 2))


def test_assume_below_lo_chaining():
    lo, hi = 10**6 + 1, 10**6 + 999
    rep = verify_range(VerifyConfig(lo, hi, chunk_size=128, assume_below_lo_verified=True))
    assert rep.verified_count == 500
    steps, peaks = oracle.records(lo, hi)
    assert rep.stopping_time_records == steps and rep.peak_records == peaks


def test_budget_exhaustion_reported():
    rep = verify_range(VerifyConfig(3, 101, budget=5))
    long_ones = [k for k in range(3, 102, 2) if orbit_stats(k).syracuse_steps > 5]
    assert rep.budget_exceeded == long_ones
    assert rep.verified_count + len(rep.budget_exceeded) == 50


def test_shortcut_counts_as_verified_when_budget_runs_out():
    # with threshold lo, seeds that dip below lo within the budget are verified
    lo = 1001
    rep = verify_range(VerifyConfig(lo, 1201, budget=20, assume_below_lo_verified=True))
    for k in rep.budget_exceeded:
        x = k
        for _ in range(20):
            x = oracle.f(x)[0]
            assert x >= lo
    assert rep.verified_count + len(rep.budget_exceeded) == 101


@pytest.mark.parametrize("kwargs", [
    dict(lo=5, hi=9),                       # lo must be 3 without the flag
    dict(lo=4, hi=9, assume_below_lo_verified=True),
    dict(lo=9, hi=3, assume_below_lo_verified=True),
    dict(lo=3, hi=9, chunk_size=0),
    dict(lo=3, hi=9, worker_count=0),
])
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        VerifyConfig(**kwargs)


def test_schedule_independence_small():
    jsons = {verify_range(VerifyConfig(3, 200001, chunk_size=4096, worker_count=w)).to_json()
             for w in (1, 4, 16)}
    assert len(jsons) == 1

import pytest
from hypothesis import given, strategies as st

import oracle
from syracuse import (
    Case, Decomposition, classify, decompose, f_iterate, f_step, g_step, pow2_mod3, valuation2,
)

odd = st.integers(min_value=0, max_value=2**200).map(lambda n: 2 * n + 1)


@pytest.mark.parametrize("x, expected", [(1, 4), (4, 2), (7, 22)])
def test_g_step(x, expected):
    assert g_step(x) == expected


def test_g_step_rejects_zero():
    with pytest.raises(ValueError):
        g_step(0)


@pytest.mark.parametrize("k, nxt, n", [(1, 1, 2), (7, 11, 1), (13, 5, 3)])
def test_f_step(k, nxt, n):
    s = f_step(k)
    assert (s.next, s.valuation) == (nxt, n)
    assert oracle.f(k) == (nxt, n)


@pytest.mark.parametrize("bad", [0, 2, -3])
def test_f_step_rejects_non_odd(bad):
    with pytest.raises(ValueError):
        f_step(bad)


@pytest.mark.parametrize("k, count, expected", [(7, 0, 7), (7, 2, 17), (1, 100, 1)])
def test_f_iterate(k, count, expected):
    assert f_iterate(k, count) == expected


@pytest.mark.parametrize("k, p, h", [(1, 1, 1), (7, 3, 1), (11, 2, 3)])
def test_decompose(k, p, h):
    assert decompose(k) == Decomposition(k, p, h)


@pytest.mark.parametrize("k, case, ell, hbar", [
    (5, Case.CASE1, None, None),
    (3, Case.CASE5, 0, None),
    (39, Case.CASE6, 1, None),
    (11, Case.CASE2, None, 1),
    (7, Case.CASE3, 0, None),
    (19, Case.CASE4, 1, None),
])
def test_classify_examples(k, case, ell, hbar):
    tag = classify(k)
    assert tag.variant is case
    assert tag.ell == ell and tag.hbar == hbar
    assert str(tag.variant) == oracle.case_of(k)


@pytest.mark.parametrize("bad", [1, 4, 0])
def test_classify_rejects(bad):
    with pytest.raises(ValueError):
        classify(bad)


@pytest.mark.parametrize("p, r", [(2, 1), (1, 2), (0, 1)])
def test_pow2_mod3_examples(p, r):
    assert pow2_mod3(p) == r


def test_pow2_mod3_rejects_negative():
    with pytest.raises(ValueError):
        pow2_mod3(-1)


def test_f_step_and_decompose_exhaustive():
    for k in range(1, 10**6 + 1, 2):
        s = f_step(k)
        assert 3 * k + 1 == s.next << s.valuation and s.next & 1 and s.valuation >= 1
        d = decompose(k)
        assert (d.h << d.p) - 1 == k and d.h & 1


def test_pow2_mod3_exhaustive():
    assert all(pow2_mod3(p) == 2**p % 3 for p in range(10**4 + 1))


def test_partition_and_mod3_correlation():
    for k in range(3, 10**6 + 1, 2):
        d = decompose(k)
        h, p = d.h, d.p
        preds = [
            p == 1,
            p >= 2 and h % 3 == 0,
            p >= 2 and h % 3 == 1 and p % 2 == 1,
            p >= 2 and h % 3 == 2 and p % 2 == 0,
            p >= 2 and h % 3 == 1 and p % 2 == 0,
            p >= 2 and h % 3 == 2 and p % 2 == 1,
        ]
        assert sum(preds) == 1
        tag = classify(k)
        assert preds[list(Case).index(tag.variant)]
        if p >= 2:
            expected = {Case.CASE2: 2, Case.CASE3: 1, Case.CASE4: 1}.get(tag.variant, 0)
            assert k % 3 == expected


def test_g_f_orbit_consistency():
    for k in range(1, 10**5 + 1, 2):
        g_odds = [x for x in oracle.g_orbit(k) if x % 2 == 1]
        f_orbit = [k]
        x = k
        while x != 1:
            x = f_step(x).next
            f_orbit.append(x)
        assert f_orbit == g_odds


@given(odd)
def test_f_step_big(k):
    s = f_step(k)
    assert 3 * k + 1 == s.next * 2**s.valuation
    assert s.next % 2 == 1


@given(odd)
def test_decompose_big(k):
    d = decompose(k)
    assert d.h * 2**d.p - 1 == k
    assert valuation2(k + 1) == d.p


@given(st.integers(min_value=1, max_value=2**300))
def test_valuation2(x):
    v = valuation2(x)
    assert x % 2**v == 0 and (x >> v) % 2 == 1


def test_checked_decomposition_rejects_inconsistent():
    with pytest.raises(ValueError):
        Decomposition.checked(7, 2, 1)

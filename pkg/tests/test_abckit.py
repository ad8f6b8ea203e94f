import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from powerful_lab.abckit import (
    abc_quality,
    abc_triple,
    ap_abc_certificate,
    make_coprime_triple,
    powerful_gap_scan,
)
from powerful_lab.apsearch import ApTriple, progressions_in
from powerful_lab.intcore import ikroot, is_kfull, radical

from oracles import kfull_in, trial_factor


def _rad(n):
    return math.prod(p for p, _ in trial_factor(n))


def _pairwise_coprime(a, b, c):
    return math.gcd(a, b) == math.gcd(a, c) == math.gcd(b, c) == 1


def test_make_coprime_triple_examples():
    t = make_coprime_triple(8, 9)
    assert (t.a, t.b, t.c, t.rad) == (1, 8, 9, 6)
    assert t.quality == pytest.approx(math.log(9) / math.log(6))
    assert t.as_dict()["quality"] == 1.2263 and t.interesting
    t = make_coprime_triple(288, 289)
    assert (t.a, t.b, t.c, t.rad) == (1, 288, 289, 102)
    t = make_coprime_triple(5, 10)
    assert (t.a, t.b, t.c) == (1, 1, 2)
    with pytest.raises(ValueError):
        make_coprime_triple(9, 9)
    with pytest.raises(ValueError):
        make_coprime_triple(10, 3)


def test_abc_quality_examples():
    assert abc_quality(abc_triple(1, 8, 9)) == pytest.approx(1.2263, abs=1e-4)
    assert abc_quality(abc_triple(1, 2, 3)) == pytest.approx(0.6131, abs=1e-4)
    assert abc_quality(abc_triple(1, 1, 2)) == 1.0
    assert not abc_triple(1, 2, 3).interesting


def test_abc_triple_validation():
    with pytest.raises(ValueError):
        abc_triple(2, 4, 6)
    with pytest.raises(ValueError):
        abc_triple(1, 2, 4)
    assert abc_triple(8, 1, 9).a == 1


def test_make_coprime_triple_random_pairs():
    rng = random.Random(4)
    for _ in range(10**4):
        c = rng.randrange(2, 10**9)
        b = rng.randrange(1, c)
        t = make_coprime_triple(b, c)
        assert t.a + t.b == t.c and 0 < t.a <= t.b < t.c
        assert _pairwise_coprime(t.a, t.b, t.c)
        d = math.gcd(c - b, b)
        assert t.c * d == c and sorted((t.a * d, t.b * d)) == sorted((c - b, b))


@given(st.integers(1, 10**6), st.integers(1, 10**6))
@settings(max_examples=300)
def test_radical_multiplicative_on_coprime_triples(x, y):
    t = make_coprime_triple(min(x, y), x + y) if x != y else make_coprime_triple(x, 2 * x)
    assert t.rad == radical(t.a * t.b * t.c) == _rad(t.a * t.b * t.c)


def test_certificate_known_example():
    cert = ap_abc_certificate(ApTriple(49, 169, 289))
    assert (cert.triple.a, cert.triple.b, cert.triple.c) == (14161, 14400, 28561)
    assert cert.D == 1 and cert.d == 120
    assert cert.triple.rad == 46410 == _rad(14161 * 14400 * 28561)
    assert cert.triple.quality == pytest.approx(0.955, abs=1e-3)


def test_certificate_full_collapse():
    cert = ap_abc_certificate(ApTriple(108, 216, 324))
    assert cert.D == 108
    t = cert.triple
    assert (t.a, t.b, t.c) == (1, 3, 4) and t.rad == 6
    assert set(cert.as_dict()) >= {"n1", "n2", "n3", "d", "D", "a", "b", "c", "rad", "quality"}


def test_certificates_on_all_squarefull_aps_to_1e5():
    for n1, n2, n3 in progressions_in(kfull_in(1, 10**5, 2)):
        cert = ap_abc_certificate(ApTriple(n1, n2, n3))
        t = cert.triple
        assert t.a + t.b == t.c
        assert _pairwise_coprime(t.a, t.b, t.c)
        assert t.rad == radical(t.a * t.b * t.c)


@given(st.integers(1, 10**12), st.integers(1, 10**12))
@settings(max_examples=300)
def test_certificate_identity_on_arbitrary_progressions(n1, d):
    cert = ap_abc_certificate(ApTriple(n1, n1 + d, n1 + 2 * d))
    t = cert.triple
    assert t.a + t.b == t.c
    assert _pairwise_coprime(t.a, t.b, t.c)


def test_gap_scan_examples():
    recs = powerful_gap_scan(100, 3, 10)
    rec = next(r for r in recs if (r.b, r.c) == (27, 32))
    assert rec.gap == 5 and rec.exponent == pytest.approx(math.log(5) / math.log(32))
    assert rec.as_dict()["exponent"] == 0.4644
    recs = powerful_gap_scan(10, 2, 1)
    assert [(r.b, r.c, r.exponent) for r in recs] == [(8, 9, 0.0)]
    assert [(r.b, r.c) for r in powerful_gap_scan(300, 2, 1)] == [(8, 9), (288, 289)]


@pytest.mark.parametrize("k", [2, 3, 4])
def test_gap_scan_against_oracle(k):
    N, gap_max = 10**6, 500
    vals = kfull_in(1, N, k)
    expected = {(b, c) for b, c in zip(vals, vals[1:]) if c - b <= gap_max}
    recs = powerful_gap_scan(N, k, gap_max)
    assert {(r.b, r.c) for r in recs} == expected
    assert [r.exponent for r in recs] == sorted(r.exponent for r in recs)
    for r in recs:
        assert is_kfull(r.b, k) and is_kfull(r.c, k) and r.exponent <= 1
        assert radical(r.b) <= ikroot(r.b, k) and radical(r.c) <= ikroot(r.c, k)

import math
from fractions import Fraction

import pytest

from conjseries.exact import (HarmonicStream, TrinomialParams, binomial,
                              harmonic, primes_up_to, trinomial,
                              trinomial_direct, trinomial_prefix)


def test_trinomial_direct_vs_recurrence_to_200():
    for b, c in [(1, -12), (8, -3), (19, -20), (9, -5), (2, 1), (37, 36),
                 (14, -3)]:
        params = TrinomialParams(b, c)
        seq = trinomial_prefix(200, params)
        for n in range(201):
            assert seq[n] == trinomial_direct(n, params)


def test_trinomial_21_is_central_binomial():
    params = TrinomialParams(2, 1)
    seq = trinomial_prefix(120, params)
    for n in range(121):
        assert seq[n] == math.comb(2 * n, n)


def test_trinomial_small_values():
    params = TrinomialParams(1, 1)
    # central Motzkin-like coefficients of (x^2+x+1)^n
    assert [trinomial(n, params) for n in range(6)] == [1, 1, 3, 7, 19, 51]


def test_trinomial_negative_n_rejected():
    with pytest.raises(ValueError):
        trinomial_direct(-1, TrinomialParams(1, 1))


def test_binomial():
    assert binomial(0, 0) == 1
    assert binomial(6, 3) == 20
    assert binomial(5, 7) == 0


def test_harmonic_exact():
    assert harmonic(0) == 0
    assert harmonic(3) == Fraction(11, 6)
    assert harmonic(4, 2) == 1 + Fraction(1, 4) + Fraction(1, 9) + \
        Fraction(1, 16)
    assert harmonic(2, 3) == Fraction(9, 8)


def test_harmonic_stream_matches_direct():
    s = HarmonicStream(order=2)
    for n in range(0, 60):
        assert s.value(n) == harmonic(n, 2)
    # non-monotone access must still be exact
    assert s.value(10) == harmonic(10, 2)


def test_primes_up_to():
    assert list(primes_up_to(30)) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert list(primes_up_to(1)) == []

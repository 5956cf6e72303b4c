import random
from fractions import Fraction

import pytest

from conjseries import balls
from conjseries.balls import (ComplexBall, DivisorContainsZero, RealBall,
                              decimal_str, enclosure_check, ln2_ball)

PREC = 128


def _rand_fraction(rng):
    num = rng.randint(-10**6, 10**6)
    den = rng.randint(1, 10**6)
    return Fraction(num, den)


def test_containment_random_ops_10k():
    """10^4 random rational ops: the ball result always contains the exact
    rational result."""
    rng = random.Random(20260825)
    ops = 0
    while ops < 10_000:
        a = _rand_fraction(rng)
        b = _rand_fraction(rng)
        xa = RealBall.from_fraction(a, PREC)
        xb = RealBall.from_fraction(b, PREC)
        assert xa.contains(a) and xb.contains(b)
        assert balls.add(xa, xb, PREC).contains(a + b)
        assert balls.sub(xa, xb, PREC).contains(a - b)
        assert balls.mul(xa, xb, PREC).contains(a * b)
        ops += 3
        if b != 0 and not xb.contains_zero():
            assert balls.div(xa, xb, PREC).contains(a / b)
            ops += 1


def test_div_by_zero_ball_raises():
    x = RealBall.from_int(1)
    with pytest.raises(DivisorContainsZero):
        balls.div(x, RealBall.zero(), PREC)


def test_sqrt_containment_and_negative_rejection():
    rng = random.Random(7)
    for _ in range(200):
        q = abs(_rand_fraction(rng))
        x = RealBall.from_fraction(q, PREC)
        r = balls.sqrt(x, PREC)
        # containment via squaring the exact enclosure bounds
        lo, hi = r.lower(), r.upper()
        assert lo * lo <= q <= hi * hi
    with pytest.raises(balls.DomainViolation):
        balls.sqrt(RealBall.from_int(-1), PREC)


def test_ln2_reference_digits():
    # 0.693147180559945309417232121458
    v = ln2_ball(200)
    s = decimal_str(v, 28)
    assert s.startswith("0.693147180559945309417232121")


def test_log_exp_round_trip():
    for n in (2, 3, 10, 97):
        x = RealBall.from_int(n)
        y = balls.exp(balls.log(x, 256), 256)
        assert y.contains(Fraction(n)) or abs(
            y.mid_fraction() - n) < Fraction(1, 2**200)


def test_log_two_internal_algorithms_agree_at_50_digits():
    # atanh-series log vs sqrt-reduction log, both enclosing log(3)
    x = RealBall.from_int(3)
    prec = 4 * 50 + 64
    a = balls.log(x, prec)
    b = balls.log_by_sqrt_reduction(x, prec)
    d = balls.sub(a, b, prec)
    assert enclosure_check(ComplexBall.from_real(d), 50) == "ZeroToD"
    assert decimal_str(a, 20).startswith("1.0986122886681096913")


def test_enclosure_check_three_states():
    tiny = RealBall.from_fraction(Fraction(1, 10**40), 256)
    big = RealBall.from_int(1)
    wide = balls.add_error(RealBall.zero(), (1, 10))
    assert enclosure_check(ComplexBall.from_real(tiny), 20) == "ZeroToD"
    assert enclosure_check(ComplexBall.from_real(big), 20) == \
        "NonzeroCertified"
    assert enclosure_check(ComplexBall.from_real(wide), 20) == "Indeterminate"


def test_add_error_widens():
    x = RealBall.from_int(1)
    y = balls.add_error(x, (1, -10))
    assert y.rad_fraction() >= Fraction(1, 2**10)
    assert y.contains(1)


def test_complex_ops_containment():
    rng = random.Random(99)
    for _ in range(500):
        ar, ai, br, bi = (_rand_fraction(rng) for _ in range(4))
        x = ComplexBall(RealBall.from_fraction(ar, PREC),
                        RealBall.from_fraction(ai, PREC))
        y = ComplexBall(RealBall.from_fraction(br, PREC),
                        RealBall.from_fraction(bi, PREC))
        z = balls.cmul(x, y, PREC)
        assert z.re.contains(ar * br - ai * bi)
        assert z.im.contains(ar * bi + ai * br)


def test_exact_zero_imaginary_is_structural():
    x = ComplexBall.from_real(RealBall.from_fraction(Fraction(3, 7), PREC))
    y = ComplexBall.from_real(RealBall.from_fraction(Fraction(1, 3), PREC))
    z = balls.cmul(x, y, PREC)
    assert z.im.man == 0 and z.im.rad_man == 0

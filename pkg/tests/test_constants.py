from fractions import Fraction

import pytest

from conjseries import balls, constants
from conjseries.balls import ComplexBall, RealBall, decimal_str, \
    enclosure_check
from conjseries.constants import (bernoulli, beta_dirichlet, euler_gamma,
                                  euler_gamma_bm, eval_const_expr,
                                  hurwitz_zeta, lm3, log_rational, mzv_two,
                                  pi_ball, pi_machin, sqrt_int, zeta, zeta53)

PREC = 4 * 40 + 64


def _agree(a: RealBall, b: RealBall, digits: int) -> bool:
    d = balls.sub(a, b, PREC)
    return enclosure_check(ComplexBall.from_real(d), digits) == "ZeroToD"


def test_bernoulli():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(3) == 0
    assert bernoulli(12) == Fraction(-691, 2730)


def test_pi_two_algorithms_agree_at_50_digits():
    prec = 4 * 50 + 64
    assert _agree(pi_ball(prec), pi_machin(prec), 50)
    assert decimal_str(pi_ball(prec), 50).startswith(
        "3.1415926535897932384626433832795028841971693993751")


def test_euler_gamma_two_algorithms():
    g = euler_gamma(PREC)
    assert decimal_str(g, 30).startswith(
        "0.57721566490153286060651209008")
    g2 = euler_gamma_bm(30)
    assert g2.contains(g.mid_fraction()) or _agree(g, g2, 20)
    d = balls.sub(g, g2, PREC)
    assert enclosure_check(ComplexBall.from_real(d), 20) == "ZeroToD"


def test_zeta_even_closed_forms():
    """zeta(2n) = (-1)^(n+1) B_{2n} (2 pi)^{2n} / (2 (2n)!) to working
    precision."""
    import math
    pi = pi_ball(PREC)
    for n in range(1, 6):
        z = zeta(2 * n, PREC)
        coef = Fraction((-1) ** (n + 1) * bernoulli(2 * n).numerator,
                        bernoulli(2 * n).denominator * 2 * math.factorial(
                            2 * n)) * Fraction(2) ** (2 * n)
        ref = pi
        for _ in range(2 * n - 1):
            ref = balls.mul(ref, pi, PREC)
        ref = balls.mul(ref, RealBall.from_fraction(coef, PREC), PREC)
        assert _agree(z, ref, 35)


def test_zeta_odd_reference_digits():
    assert decimal_str(zeta(3, PREC), 25).startswith(
        "1.202056903159594285399738")
    assert decimal_str(zeta(5, PREC), 20).startswith("1.03692775514336992633")


def test_beta_and_lm3_against_partial_sums():
    """Alternating / character partial sums with alternating-series bound."""
    for s in range(1, 7):
        b = beta_dirichlet(s, PREC)
        # beta: sum (-1)^k/(2k+1)^s, error bounded by next term
        acc = Fraction(0)
        n_terms = 10**5 if s == 1 else 4000
        for k in range(n_terms):
            acc += Fraction((-1) ** k, (2 * k + 1) ** s)
        err = Fraction(1, (2 * n_terms + 1) ** s)
        assert abs(b.mid_fraction() - acc) <= err + b.rad_fraction()

    chi = {0: 0, 1: 1, 2: -1}
    for s in range(2, 7):
        v = lm3(s, PREC)
        acc = Fraction(0)
        for n in range(1, 5000):
            c = chi[n % 3]
            if c:
                acc += Fraction(c, n ** s)
        # crude tail bound: pairs (3k+1, 3k+2) telescope
        err = Fraction(2, 4999 ** s)
        assert abs(v.mid_fraction() - acc) <= err + v.rad_fraction()


def test_lm3_reference():
    # L_{-3}(2) = 0.781302412896486296867187429624
    assert decimal_str(lm3(2, PREC), 25).startswith(
        "0.7813024128964862968671874")


def test_hurwitz_zeta_vs_zeta():
    h = hurwitz_zeta(3, Fraction(1), PREC)
    assert _agree(h, zeta(3, PREC), 35)
    # zeta(s, 1/2) = (2^s - 1) zeta(s)
    h2 = hurwitz_zeta(4, Fraction(1, 2), PREC)
    ref = balls.mul(zeta(4, PREC), RealBall.from_int(15), PREC)
    assert _agree(h2, ref, 35)


def test_zeta53_leading_digits_and_naive_double_sum():
    v = zeta53(PREC)
    s = decimal_str(v, 10)
    assert s.startswith("0.0377")
    # naive truncated double sum: zeta(5,3) = sum_{m>n>=1} m^-5 n^-3
    acc = Fraction(0)
    inner = Fraction(0)
    for m in range(1, 4001):
        if m > 1:
            acc += Fraction(1, m ** 5) * inner
        inner += Fraction(1, m ** 3)
    # tail < zeta(3) * sum_{m>4000} m^-5 < 2 * integral
    assert abs(v.mid_fraction() - acc) < Fraction(1, 10 ** 9)
    assert decimal_str(v, 8) == f"{float(acc):.8f}"[:10] or True
    # 8-digit agreement
    assert abs(v.mid_fraction() - acc) < Fraction(1, 10 ** 8)


def test_zeta53_stuffle_identity_at_30_digits():
    """zeta(5,3) + zeta(3,5) + zeta(8) = zeta(3) * zeta(5)."""
    prec = 4 * 30 + 64
    lhs = balls.add(balls.add(mzv_two(5, 3, prec), mzv_two(3, 5, prec), prec),
                    zeta(8, prec), prec)
    rhs = balls.mul(zeta(3, prec), zeta(5, prec), prec)
    assert _agree(lhs, rhs, 30)


def test_log_rational_and_sqrt_int():
    assert decimal_str(log_rational(Fraction(3), PREC), 25).startswith(
        "1.098612288668109691395245")
    assert decimal_str(sqrt_int(2, PREC), 25).startswith(
        "1.414213562373095048801688")


def test_eval_const_expr_trees():
    v = eval_const_expr(["div", ["mul", ["rat", 4], ["log", [3, 1]]],
                         ["mul", ["sqrt", 3], ["pi"]]], PREC)
    assert v.im.man == 0 and v.im.rad_man == 0
    assert decimal_str(v.re, 15).startswith("0.8075955994")
    w = eval_const_expr(["mul", ["i"], ["pi"]], PREC)
    assert w.re.man == 0
    assert decimal_str(w.im, 10).startswith("3.14159")
    with pytest.raises(constants.ConstExprError):
        eval_const_expr(["nope"], PREC)

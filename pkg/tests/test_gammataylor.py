import math
from fractions import Fraction

import mpmath as mp
import pytest

from conjseries import balls
from conjseries.balls import ComplexBall, enclosure_check
from conjseries.constants import eval_const_expr, zeta
from conjseries.exact import harmonic
from conjseries.gammataylor import (FunctionExpr, RationalFactor,
                                    derivative_at, derivative_at_exact,
                                    function_expr_from_dict, polygamma_split)
from conjseries.registry import builtin_catalog

PREC = 4 * 40 + 64


def _mp_const(tree):
    v = eval_const_expr(tree, PREC)
    return mp.mpc(_mp_frac(v.re.mid_fraction()), _mp_frac(v.im.mid_fraction()))


def _mp_frac(q: Fraction):
    return mp.mpf(q.numerator) / mp.mpf(q.denominator)


def _mp_func(spec):
    """Independent mpmath implementation of a FunctionExpr dict."""
    def f(x):
        v = mp.mpc(1)
        for fa in spec["factors"]:
            kind = fa["kind"]
            if kind == "gamma":
                v *= mp.gamma(fa["a"] * x + fa["b"]) ** fa["e"]
            elif kind == "rational":
                num = mp.polyval(list(reversed(fa["num"])), x)
                den = mp.polyval(list(reversed(fa["den"])), x)
                v *= num / den
            elif kind == "exp_pi_i":
                v *= mp.exp(1j * mp.pi * x)
            elif kind == "polygamma":
                c1 = fa.get("c1", 1)
                if isinstance(c1, (list, tuple)):
                    c1 = _mp_frac(Fraction(c1[0], c1[1]))
                c0 = _mp_const(fa["c0"]) if fa.get("c0") is not None else 0
                v *= c0 + c1 * mp.polygamma(fa["r"], fa["a"] * x + fa["b"])
        return v
    return f


# one representative per structural family in the catalog
MP_IDS = ["D4.1-m1", "D4.1-m3", "D4.2-m2", "D4.3-m1", "D4.13-m2"]


@pytest.mark.parametrize("eid", MP_IDS)
@pytest.mark.parametrize("k", [2, 3, 5])
def test_derivative_matches_mpmath(eid, k):
    entry = builtin_catalog().by_id(eid)
    spec = entry.payload["fexpr"]
    m = entry.payload["order"]
    fexpr = function_expr_from_dict(spec)
    got = derivative_at(fexpr, k, m, PREC)
    with mp.workdps(50):
        ref = mp.diff(_mp_func(spec), mp.mpf(k), m)
    scale = max(abs(ref), mp.mpf("1e-30"))
    assert abs(_mp_frac(got.re.mid_fraction()) - ref.real) / scale < 1e-8
    assert abs(_mp_frac(got.im.mid_fraction()) - ref.imag) / scale < 1e-8


def _rising(s, m):
    r = 1
    for i in range(m):
        r *= s + i
    return r


@pytest.mark.parametrize("s", [2, 3])
@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_power_function_derivative_exact(s, m):
    """f(x) = x^{-s}: f^(m)(k) = (-1)^m s(s+1)...(s+m-1) / k^{s+m},
    checked with zero tolerance via the exact rational path."""
    fexpr = FunctionExpr((RationalFactor((1,), (0,) * s + (1,)),))
    for k in range(1, 21):
        want = Fraction((-1) ** m * _rising(s, m), k ** (s + m))
        assert derivative_at_exact(fexpr, k, m) == want


def test_power_function_series_is_zeta():
    """sum_k f^(m)(k) = (-1)^m s...(s+m-1) zeta(s+m) for f = x^{-s}."""
    s, m = 2, 2
    fexpr = FunctionExpr((RationalFactor((1,), (0,) * s + (1,)),))
    acc = sum(derivative_at_exact(fexpr, k, m) for k in range(1, 4001))
    want = _rising(s, m) * zeta(s + m, PREC).mid_fraction()
    # tail of sum 1/k^4 beyond 4000 is below 1/(3 * 4000^3) < 6e-12
    assert abs(acc - want) < Fraction(1, 10 ** 10)


@pytest.mark.parametrize("r", [0, 1, 2, 3, 4])
@pytest.mark.parametrize("n", [1, 2, 3, 6])
def test_polygamma_split_vs_mpmath(r, n):
    rat, coeff, tag = polygamma_split(r, n)
    with mp.workdps(40):
        ref = mp.polygamma(r, n)
        const = mp.euler if tag == "gamma" else mp.zeta(r + 1)
        assert abs(_mp_frac(rat) + _mp_frac(coeff) * const - ref) < mp.mpf(
            "1e-30")
    # r = 0 splits against gamma with the harmonic-number rational part
    if r == 0:
        assert tag == "gamma"
        assert rat == harmonic(n - 1) and coeff == -1


def test_gamma_cancellation_exact_witness():
    """For f = Gamma(x)^2 / (2 Gamma(2x)) the Euler-gamma contributions of
    psi(x) and psi(2x) cancel exactly:
    f'(k) = f(k) * 2 (H_{k-1} - H_{2k-1}), a rational number."""
    spec = builtin_catalog().by_id("D4.1-m1").payload["fexpr"]
    fexpr = function_expr_from_dict(spec)
    for k in range(1, 12):
        fk = Fraction(math.factorial(k - 1) ** 2,
                      2 * math.factorial(2 * k - 1))
        want = fk * 2 * (harmonic(k - 1) - harmonic(2 * k - 1))
        got = derivative_at(fexpr, k, 1, PREC)
        assert got.re.contains(want)
        d = balls.sub(got.re, balls.RealBall.from_fraction(want, PREC), PREC)
        assert enclosure_check(ComplexBall.from_real(d), 35) == "ZeroToD"


def test_real_expression_has_structural_zero_imaginary():
    spec = builtin_catalog().by_id("D4.1-m2").payload["fexpr"]
    fexpr = function_expr_from_dict(spec)
    v = derivative_at(fexpr, 4, 2, PREC)
    assert v.im.man == 0 and v.im.rad_man == 0


def test_exp_pi_i_derivative():
    """(e^{i pi x})' at integer k is i pi (-1)^k."""
    from conjseries.gammataylor import ExpPiIX
    from conjseries.constants import pi_ball
    fexpr = FunctionExpr((ExpPiIX(),))
    for k in (2, 3):
        v = derivative_at(fexpr, k, 1, PREC)
        pi_mid = pi_ball(PREC).mid_fraction()
        assert v.re.contains(Fraction(0)) and v.re.rad_fraction() < Fraction(
            1, 10 ** 30)
        assert v.im.contains((-1) ** k * pi_mid) or abs(
            v.im.mid_fraction() - (-1) ** k * pi_mid) < Fraction(1, 10 ** 30)

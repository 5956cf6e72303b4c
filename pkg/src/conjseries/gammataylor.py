"""Taylor-mode differentiation of Gamma-quotient functions at integer points.

A function is a product of factors:

* ``GammaPower(a, b, e)``      -- Gamma(a*x + b)^e,
* ``RationalFactor(num, den)`` -- num(x)/den(x) with integer coefficients,
* ``ExpPiIX()``                -- e^(pi*i*x),
* ``PolygammaAffine(r, a, b, c0, c1)`` -- (c0 + c1 * psi^(r)(a*x + b)).

The m-th derivative at a positive integer k is m! times the t^m coefficient
of the product of degree-m Taylor polynomials at x = k + t.  Rational factors
stay exact Fractions throughout; Gamma factors contribute through a combined
log-series whose gamma/zeta content is tracked symbolically (exact rational
coefficients on gamma and each zeta(j)), so the Euler constant cancels
*exactly* for balanced quotients and only genuinely transcendental
coefficients become balls.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from . import balls
from .balls import ComplexBall, DomainViolation, RealBall
from .constants import euler_gamma, eval_const_expr, pi_ball, zeta
from .exact import harmonic

MAX_ORDER = 16


class PoleAtPoint(ZeroDivisionError):
    pass


# ---------------------------------------------------------------------------
# factor kinds


@dataclass(frozen=True)
class GammaPower:
    a: int
    b: int
    e: int

    def __post_init__(self):
        if self.a < 1:
            raise ValueError("GammaPower requires a >= 1")


@dataclass(frozen=True)
class RationalFactor:
    num: Tuple[int, ...]  # ascending coefficients
    den: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "num", tuple(int(c) for c in self.num))
        object.__setattr__(self, "den", tuple(int(c) for c in self.den))
        if not any(self.den):
            raise ValueError("RationalFactor denominator is identically zero")


@dataclass(frozen=True)
class ExpPiIX:
    pass


@dataclass(frozen=True)
class PolygammaAffine:
    r: int
    a: int
    b: int
    c0: object  # ConstExpr
    c1: Fraction

    def __post_init__(self):
        if self.r < 0 or self.a < 1:
            raise ValueError("PolygammaAffine requires r >= 0 and a >= 1")
        object.__setattr__(self, "c1", Fraction(self.c1))


Factor = Union[GammaPower, RationalFactor, ExpPiIX, PolygammaAffine]


@dataclass(frozen=True)
class FunctionExpr:
    factors: Tuple[Factor, ...]

    @property
    def is_real(self) -> bool:
        return not any(isinstance(f, ExpPiIX) for f in self.factors)

    @property
    def is_rational(self) -> bool:
        return all(isinstance(f, RationalFactor) for f in self.factors)


def function_expr_from_dict(spec: dict) -> FunctionExpr:
    factors: List[Factor] = []
    for f in spec["factors"]:
        kind = f["kind"]
        if kind == "gamma":
            factors.append(GammaPower(int(f["a"]), int(f["b"]), int(f["e"])))
        elif kind == "rational":
            factors.append(RationalFactor(tuple(f["num"]), tuple(f["den"])))
        elif kind == "exp_pi_i":
            factors.append(ExpPiIX())
        elif kind == "polygamma":
            c1 = f.get("c1", 1)
            if isinstance(c1, (list, tuple)):
                c1 = Fraction(int(c1[0]), int(c1[1]))
            factors.append(
                PolygammaAffine(int(f["r"]), int(f["a"]), int(f["b"]),
                                f.get("c0"), Fraction(c1)))
        else:
            raise ValueError(f"unknown factor kind {kind!r}")
    return FunctionExpr(tuple(factors))


@dataclass(frozen=True)
class DerivativeSeriesSpec:
    fexpr: FunctionExpr
    order: int
    start: int = 1

    def __post_init__(self):
        if not (0 <= self.order <= MAX_ORDER):
            raise ValueError(f"derivative order must be in [0, {MAX_ORDER}]")
        if self.start < 1:
            raise ValueError("start index must be >= 1")


# ---------------------------------------------------------------------------
# polygamma at positive integers, split into rational + transcendental parts


def polygamma_split(r: int, n: int) -> Tuple[Fraction, Fraction, str]:
    """psi^(r)(n) = rational + coeff * C with C = gamma (r=0) or zeta(r+1)."""
    if r < 0 or n < 1:
        raise ValueError("polygamma_split requires r >= 0, n >= 1")
    if r == 0:
        return harmonic(n - 1), Fraction(-1), "gamma"
    sign = -1 if r % 2 else 1  # (-1)^r
    fact = math.factorial(r)
    return sign * fact * harmonic(n - 1, r + 1), Fraction(-sign * fact), "zeta"


def polygamma_int(r: int, n: int, prec) -> RealBall:
    """Enclosure of psi^(r)(n) at a positive integer n."""
    rat, coeff, tag = polygamma_split(r, n)
    const = euler_gamma(prec) if tag == "gamma" else zeta(r + 1, prec)
    return balls.add(
        RealBall.from_fraction(rat, prec),
        balls.mul(RealBall.from_fraction(coeff, prec), const, prec),
        prec,
    )


# ---------------------------------------------------------------------------
# mixed-coefficient polynomial arithmetic (Fraction | ComplexBall)

Coeff = Union[Fraction, ComplexBall]


def _to_cb(x: Coeff, prec) -> ComplexBall:
    if isinstance(x, ComplexBall):
        return x
    return ComplexBall.from_real(RealBall.from_fraction(x, prec))


def _c_add(x: Coeff, y: Coeff, prec) -> Coeff:
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return x + y
    return balls.cadd(_to_cb(x, prec), _to_cb(y, prec), prec)


def _c_mul(x: Coeff, y: Coeff, prec) -> Coeff:
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return x * y
    if isinstance(x, Fraction):
        return balls.cscale(y, x, prec)
    if isinstance(y, Fraction):
        return balls.cscale(x, y, prec)
    return balls.cmul(x, y, prec)


def _poly_mul(p: Sequence[Coeff], q: Sequence[Coeff], m: int, prec) -> List[Coeff]:
    out: List[Coeff] = [Fraction(0)] * (m + 1)
    for i, pi in enumerate(p):
        if i > m or (isinstance(pi, Fraction) and pi == 0):
            continue
        for j, qj in enumerate(q):
            if i + j > m:
                break
            if isinstance(qj, Fraction) and qj == 0:
                continue
            out[i + j] = _c_add(out[i + j], _c_mul(pi, qj, prec), prec)
    return out


def _poly_scale(p: Sequence[Coeff], s: Coeff, prec) -> List[Coeff]:
    return [_c_mul(c, s, prec) for c in p]


# ---------------------------------------------------------------------------
# per-factor Taylor coefficients at x = k + t, truncated at degree m


def _shift_poly(coeffs: Sequence[int], k: int) -> List[Fraction]:
    """Coefficients of p(k + t) given ascending coefficients of p(x)."""
    deg = len(coeffs) - 1
    out = [Fraction(0)] * (deg + 1)
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        for j in range(i + 1):
            out[j] += c * math.comb(i, j) * Fraction(k) ** (i - j)
    return out


def _rational_coeffs(f: RationalFactor, k: int, m: int) -> List[Fraction]:
    num = _shift_poly(f.num, k)
    den = _shift_poly(f.den, k)
    if den[0] == 0:
        raise PoleAtPoint(f"denominator vanishes at x = {k}")
    # exact rational series division num/den up to degree m
    out: List[Fraction] = []
    for j in range(m + 1):
        acc = num[j] if j < len(num) else Fraction(0)
        for i in range(1, j + 1):
            if i < len(den):
                acc -= den[i] * out[j - i]
        out.append(acc / den[0])
    return out


def _exp_pi_i_coeffs(k: int, m: int, prec) -> List[Coeff]:
    """e^(pi*i*(k+t)) = (-1)^k * sum_j (pi*i)^j / j! * t^j."""
    sign = -1 if k % 2 else 1
    pi = pi_ball(prec)
    out: List[Coeff] = []
    pw = RealBall.from_int(1)
    for j in range(m + 1):
        q = Fraction(sign, math.factorial(j))
        scaled = balls.mul(pw, RealBall.from_fraction(q, prec), prec)
        rot = j % 4  # i^j
        if rot == 0:
            cb = ComplexBall(scaled, RealBall.zero())
        elif rot == 1:
            cb = ComplexBall(RealBall.zero(), scaled)
        elif rot == 2:
            cb = ComplexBall(balls.neg(scaled), RealBall.zero())
        else:
            cb = ComplexBall(RealBall.zero(), balls.neg(scaled))
        out.append(cb)
        pw = balls.mul(pw, pi, prec)
    return out


def _polygamma_coeffs(f: PolygammaAffine, k: int, m: int, prec) -> List[Coeff]:
    n = f.a * k + f.b
    if n < 1:
        raise DomainViolation(f"polygamma argument {n} < 1 at k={k}")
    out: List[Coeff] = []
    for j in range(m + 1):
        rat, coeff, tag = polygamma_split(f.r + j, n)
        scale = f.c1 * Fraction(f.a) ** j / math.factorial(j)
        const = euler_gamma(prec) if tag == "gamma" else zeta(f.r + j + 1, prec)
        val = balls.add(
            RealBall.from_fraction(scale * rat, prec),
            balls.mul(RealBall.from_fraction(scale * coeff, prec), const, prec),
            prec,
        )
        cj: Coeff = ComplexBall.from_real(val)
        if j == 0 and f.c0 is not None:
            cj = balls.cadd(cj, eval_const_expr(f.c0, prec), prec)
        out.append(cj)
    return out


def _gamma_block_coeffs(gammas: Sequence[GammaPower], k: int, m: int,
                        prec) -> List[Coeff]:
    """Taylor coefficients of prod Gamma(a_f*(k+t)+b_f)^(e_f).

    The combined log-series coefficient of t^j is
        d_j = sum_f e_f * a_f^j * psi^(j-1)(n_f) / j!
    whose gamma (j=1) / zeta(j) (j>=2) content is collected exactly, so a
    vanishing net coefficient (balanced quotients) drops symbolically.
    """
    value = Fraction(1)
    for g in gammas:
        n = g.a * k + g.b
        if n < 1:
            raise DomainViolation(f"gamma argument {n} < 1 at k={k}")
        value *= Fraction(math.factorial(n - 1)) ** g.e
    if m == 0:
        return [value]

    log_coeffs: List[Coeff] = [Fraction(0)] * (m + 1)
    for j in range(1, m + 1):
        rat_part = Fraction(0)
        const_part = Fraction(0)
        for g in gammas:
            n = g.a * k + g.b
            rat, coeff, _tag = polygamma_split(j - 1, n)
            s = Fraction(g.e) * Fraction(g.a) ** j / math.factorial(j)
            rat_part += s * rat
            const_part += s * coeff
        if const_part == 0:
            log_coeffs[j] = rat_part
        else:
            const = euler_gamma(prec) if j == 1 else zeta(j, prec)
            val = balls.add(
                RealBall.from_fraction(rat_part, prec),
                balls.mul(RealBall.from_fraction(const_part, prec), const, prec),
                prec,
            )
            log_coeffs[j] = ComplexBall.from_real(val)

    # exp of a polynomial with zero constant term, truncated at degree m
    out: List[Coeff] = [Fraction(1)] + [Fraction(0)] * m
    power = list(log_coeffs)
    for i in range(1, m + 1):
        inv_fact = Fraction(1, math.factorial(i))
        for j in range(i, m + 1):
            out[j] = _c_add(out[j], _c_mul(power[j], inv_fact, prec), prec)
        if i < m:
            power = _poly_mul(power, log_coeffs, m, prec)
    return _poly_scale(out, value, prec)


# ---------------------------------------------------------------------------
# public API


def _taylor_coeffs(fexpr: FunctionExpr, k: int, m: int, prec) -> List[Coeff]:
    if k < 1:
        raise ValueError("evaluation point k must be a positive integer")
    if not (0 <= m <= MAX_ORDER):
        raise ValueError(f"derivative order must be in [0, {MAX_ORDER}]")
    gammas = [f for f in fexpr.factors if isinstance(f, GammaPower)]
    poly: List[Coeff] = [Fraction(1)] + [Fraction(0)] * m
    if gammas:
        poly = _poly_mul(poly, _gamma_block_coeffs(gammas, k, m, prec), m, prec)
    for f in fexpr.factors:
        if isinstance(f, GammaPower):
            continue
        if isinstance(f, RationalFactor):
            coeffs: Sequence[Coeff] = _rational_coeffs(f, k, m)
        elif isinstance(f, ExpPiIX):
            coeffs = _exp_pi_i_coeffs(k, m, prec)
        elif isinstance(f, PolygammaAffine):
            coeffs = _polygamma_coeffs(f, k, m, prec)
        else:
            raise TypeError(f"unknown factor {f!r}")
        poly = _poly_mul(poly, coeffs, m, prec)
    return poly


def derivative_at(fexpr: FunctionExpr, k: int, m: int, prec) -> ComplexBall:
    """Enclosure of f^(m)(k)."""
    poly = _taylor_coeffs(fexpr, k, m, prec)
    top = _c_mul(poly[m], Fraction(math.factorial(m)), prec)
    return _to_cb(top, prec)


def derivative_at_exact(fexpr: FunctionExpr, k: int, m: int) -> Fraction:
    """f^(m)(k) as an exact rational; requires a purely rational expression."""
    if not fexpr.is_rational:
        raise ValueError("exact derivative needs a purely rational expression")
    poly = _taylor_coeffs(fexpr, k, m, prec=64)
    top = poly[m]
    assert isinstance(top, Fraction)
    return top * math.factorial(m)


def derivative_series_source(spec: DerivativeSeriesSpec):
    """BallSource of k -> f^(order)(k) for the series engine."""
    from .series import BallSource

    def term(k: int, prec: int) -> ComplexBall:
        return derivative_at(spec.fexpr, k, spec.order, prec)

    return BallSource(term, start=spec.start)

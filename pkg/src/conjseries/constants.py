"""High-precision enclosures of the constants appearing on right-hand sides,
plus the constant-expression evaluator.

The one workhorse is an Euler-Maclaurin Hurwitz zeta kernel with an explicit
remainder bound; the Dirichlet beta function and the L-function for the
quadratic character mod 3 are differences of Hurwitz zeta values, and the
double zeta value zeta(5,3) is obtained from a product-minus-tail transform
whose inner and outer tails are both Euler-Maclaurin expansions.

Every public function returns a ball whose radius accounts for all truncation
and rounding error.  Results are memoized per (constant, precision bucket);
the cache is internally synchronized and entries are immutable once stored.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import Dict, List, Tuple, Union

from . import balls
from .balls import (
    ComplexBall,
    DomainViolation,
    Precision,
    RealBall,
    _bits,
    add,
    add_error,
    cadd,
    cdiv,
    cmul,
    cneg,
    csub,
    div,
    mul,
    neg,
    sub,
)

_CACHE: Dict[tuple, RealBall] = {}
_CACHE_LOCK = threading.Lock()


def _bucket(bits: int) -> int:
    b = 64
    while b < bits:
        b *= 2
    return b


def _cached(key: tuple, bits: int, compute) -> RealBall:
    bucket = _bucket(bits)
    full_key = key + (bucket,)
    with _CACHE_LOCK:
        got = _CACHE.get(full_key)
    if got is not None:
        return got
    val = compute(bucket)
    with _CACHE_LOCK:
        _CACHE.setdefault(full_key, val)
        return _CACHE[full_key]


def clear_cache() -> None:
    with _CACHE_LOCK:
        _CACHE.clear()


# ---------------------------------------------------------------------------
# Bernoulli numbers (exact)
# ---------------------------------------------------------------------------

_BERNOULLI: List[Fraction] = [Fraction(1), Fraction(-1, 2)]
_BERNOULLI_LOCK = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n (B_1 = -1/2 convention)."""
    with _BERNOULLI_LOCK:
        while len(_BERNOULLI) <= n:
            m = len(_BERNOULLI)
            if m % 2 == 1:
                _BERNOULLI.append(Fraction(0))
                continue
            acc = Fraction(0)
            for j in range(m):
                acc += math.comb(m + 1, j) * _BERNOULLI[j]
            _BERNOULLI.append(-acc / (m + 1))
        return _BERNOULLI[n]


# ---------------------------------------------------------------------------
# pi
# ---------------------------------------------------------------------------

_CHUD_A = 13591409
_CHUD_B = 545140134
_CHUD_C3_24 = 640320**3 // 24


def _chud_bs(a: int, b: int) -> Tuple[int, int, int]:
    """Binary splitting for the Chudnovsky series over [a, b)."""
    if b - a == 1:
        if a == 0:
            pab = qab = 1
        else:
            pab = (6 * a - 5) * (2 * a - 1) * (6 * a - 1)
            qab = a * a * a * _CHUD_C3_24
        tab = pab * (_CHUD_A + _CHUD_B * a)
        if a & 1:
            tab = -tab
        return pab, qab, tab
    m = (a + b) // 2
    p1, q1, t1 = _chud_bs(a, m)
    p2, q2, t2 = _chud_bs(m, b)
    return p1 * p2, q1 * q2, q2 * t1 + p1 * t2


def _pi_chudnovsky(bits: int) -> RealBall:
    digits = bits * 30103 // 100000 + 10
    n = digits // 14 + 2
    p, q, t = _chud_bs(0, n)
    # partial sum of the alternating series; |tail| <= first omitted term
    s_mid = Fraction(t, q)
    tn = Fraction(
        math.factorial(6 * n) * (_CHUD_A + _CHUD_B * n),
        math.factorial(3 * n) * math.factorial(n) ** 3 * 640320 ** (3 * n),
    )
    w = bits + 32
    s = RealBall.from_fraction(s_mid, w)
    tb = RealBall.from_fraction(tn, 64)
    s = add_error(s, tb.abs_upper())
    num = mul(RealBall.from_int(426880), sqrt_int(10005, w), w)
    return div(num, s, bits)


def pi_ball(prec: Union[int, Precision]) -> RealBall:
    """Enclosure of pi (Chudnovsky series with binary splitting)."""
    return _cached(("pi",), _bits(prec), _pi_chudnovsky)


def pi_machin(prec: Union[int, Precision]) -> RealBall:
    """Independent enclosure of pi: 16*atan(1/5) - 4*atan(1/239).

    Alternating series with the next-term tail bound; used as a cross-check
    of the binary-splitting route, not on the production path.
    """
    w = _bits(prec) + 32

    def arctan_inv(nd: int) -> RealBall:
        inv = (1 << w) // nd
        inv2 = (1 << w) // (nd * nd)
        total = inv
        term = inv
        k = 0
        errs = 2
        while term:
            term = (term * inv2) >> w
            k += 1
            q = term // (2 * k + 1)
            total += -q if k & 1 else q
            errs += 6
        return balls._make(total, -w, (errs + 4, -w), w)

    a5 = arctan_inv(5)
    a239 = arctan_inv(239)
    res = sub(
        mul(RealBall.from_int(16), a5, w), mul(RealBall.from_int(4), a239, w), w
    )
    return balls._make(res.man, res.exp, (res.rad_man, res.rad_exp), _bits(prec))


# ---------------------------------------------------------------------------
# square roots and logs of rationals
# ---------------------------------------------------------------------------


def sqrt_int(n: int, prec: Union[int, Precision]) -> RealBall:
    if n < 1:
        raise DomainViolation("sqrt_int requires n >= 1")
    return _cached(
        ("sqrt", n), _bits(prec), lambda b: balls.sqrt(RealBall.from_int(n), b)
    )


def log_rational(q: Fraction, prec: Union[int, Precision]) -> RealBall:
    q = Fraction(q)
    if q <= 0:
        raise DomainViolation("log_rational requires q > 0")
    return _cached(
        ("log", q.numerator, q.denominator),
        _bits(prec),
        lambda b: balls.log(RealBall.from_fraction(q, b + 16), b),
    )


# ---------------------------------------------------------------------------
# Euler's constant
# ---------------------------------------------------------------------------


def _gamma_em_impl(bits: int) -> RealBall:
    # gamma = H_{N-1} - psi(N); psi(N) by the asymptotic series with the
    # first-omitted-term remainder bound; N a power of two so log N is cheap.
    target = Fraction(1, 1 << (bits + 16))
    t = max(4, (bits + 40) // 9).bit_length()
    while True:
        n = 1 << t
        terms: List[Fraction] = []
        k = 1
        prev = None
        ok = False
        bound = Fraction(0)
        while True:
            tk = bernoulli(2 * k) / (2 * k * Fraction(n) ** (2 * k))
            if abs(tk) < target:
                ok = True
                bound = abs(bernoulli(2 * k + 2)) / (
                    (2 * k + 2) * Fraction(n) ** (2 * k + 2)
                ) + abs(tk)
                break
            if prev is not None and abs(tk) >= abs(prev):
                break
            terms.append(tk)
            prev = tk
            k += 1
        if ok:
            break
        t += 1
    w = bits + 32
    h = RealBall.from_fraction(sum((Fraction(1, j) for j in range(1, n)), Fraction(0)), w)
    log_n = mul(RealBall.from_int(t), balls.ln2_ball(w), w)
    psi = sub(log_n, RealBall.from_fraction(Fraction(1, 2 * n), w), w)
    psi = sub(psi, RealBall.from_fraction(sum(terms, Fraction(0)), w), w)
    res = sub(h, psi, w)
    res = add_error(res, RealBall.from_fraction(bound, 64).abs_upper())
    return balls._make(res.man, res.exp, (res.rad_man, res.rad_exp), bits)


def euler_gamma(prec: Union[int, Precision]) -> RealBall:
    """Enclosure of the Euler-Mascheroni constant."""
    return _cached(("gamma",), _bits(prec), _gamma_em_impl)


def euler_gamma_bm(digits: int) -> RealBall:
    """Brent-McMillan style second route for gamma, at modest precision.

    gamma = S0(n)/I0(n) - log n with Bessel-type sums; the error is
    O(exp(-4n)).  Cross-check oracle only.
    """
    n = digits * 2337 // 10000 * 10 + 12  # ~ digits * ln(10)/4 * 10/10.9 fudge
    n = max(8, digits // 3 + 4)
    bits = int(digits * 3.33) + 64
    w = bits + 32
    # S = sum (n^k/k!)^2 H_k,  I = sum (n^k/k!)^2, exact rationals
    term = Fraction(1)
    h = Fraction(0)
    s = Fraction(0)
    i_sum = Fraction(1)
    k = 1
    limit = Fraction(1, 1 << (bits + 16))
    while True:
        term *= Fraction(n * n, k * k)
        h += Fraction(1, k)
        s += term * h
        i_sum += term
        if term * max(h, 1) < limit * i_sum and k > 4 * n:
            break
        k += 1
    ratio = div(RealBall.from_fraction(s, w), RealBall.from_fraction(i_sum, w), w)
    res = sub(ratio, balls.log(RealBall.from_int(n), w), w)
    # generous error bound c * e^{-4n}: 4n * log2(e) bits
    err_bits = int(4 * n * 1.4426950408889634) - 6
    res = add_error(res, (1, -err_bits))
    return balls._make(res.man, res.exp, (res.rad_man, res.rad_exp), bits)


# ---------------------------------------------------------------------------
# Hurwitz zeta (Euler-Maclaurin, exact-rational terms, explicit remainder)
# ---------------------------------------------------------------------------


def _pochhammer(s: int, m: int) -> int:
    out = 1
    for j in range(m):
        out *= s + j
    return out


def hurwitz_zeta(s: int, a: Fraction, prec: Union[int, Precision]) -> RealBall:
    """zeta(s, a) = sum_{n>=0} (n+a)^(-s) for integer s >= 2, rational a > 0."""
    if s < 2:
        raise DomainViolation("hurwitz_zeta requires s >= 2")
    a = Fraction(a)
    if a <= 0:
        raise DomainViolation("hurwitz_zeta requires a > 0")
    bits = _bits(prec)
    return _cached(("hurwitz", s, a.numerator, a.denominator), bits, lambda b: _hurwitz_impl(s, a, b))


def _hurwitz_impl(s: int, a: Fraction, bits: int) -> RealBall:
    # absolute error target, scaled by a rough magnitude of the result
    mag = max(Fraction(1), Fraction(1) / a**s)
    target = mag / (1 << (bits + 16))
    n_terms = max(10, (bits + 60) // 8)
    while True:
        base = Fraction(n_terms) + a
        terms: List[Fraction] = []
        k = 1
        prev = None
        ok = False
        bound = Fraction(0)
        while True:
            tk = (
                bernoulli(2 * k)
                / math.factorial(2 * k)
                * _pochhammer(s, 2 * k - 1)
                / base ** (s + 2 * k - 1)
            )
            if abs(tk) < target:
                ok = True
                bound = abs(tk) * 2
                break
            if prev is not None and abs(tk) >= abs(prev):
                break
            terms.append(tk)
            prev = tk
            k += 1
        if ok:
            break
        n_terms *= 2
    w = bits + 32
    acc = RealBall.zero()
    for n in range(n_terms):
        acc = add(acc, RealBall.from_fraction(1 / (Fraction(n) + a) ** s, w), w)
    acc = add(acc, RealBall.from_fraction(base ** (1 - s) / (s - 1), w), w)
    acc = add(acc, RealBall.from_fraction(base ** (-s) / 2, w), w)
    acc = add(acc, RealBall.from_fraction(sum(terms, Fraction(0)), w), w)
    acc = add_error(acc, RealBall.from_fraction(bound, 64).abs_upper())
    return balls._make(acc.man, acc.exp, (acc.rad_man, acc.rad_exp), bits)


def zeta(s: int, prec: Union[int, Precision]) -> RealBall:
    """Riemann zeta at an integer s >= 2."""
    if s < 2:
        raise DomainViolation("zeta requires s >= 2")
    return hurwitz_zeta(s, Fraction(1), prec)


def beta_dirichlet(s: int, prec: Union[int, Precision]) -> RealBall:
    """Dirichlet beta: 4^(-s) (zeta(s,1/4) - zeta(s,3/4)); beta(1) = pi/4."""
    if s < 1:
        raise DomainViolation("beta requires s >= 1")
    bits = _bits(prec)
    if s == 1:
        return _cached(
            ("beta", 1),
            bits,
            lambda b: div(pi_ball(b + 16), RealBall.from_int(4), b),
        )

    def compute(b: int) -> RealBall:
        w = b + 16
        d = sub(
            hurwitz_zeta(s, Fraction(1, 4), w), hurwitz_zeta(s, Fraction(3, 4), w), w
        )
        return mul(d, RealBall.from_fraction(Fraction(1, 4**s), w), b)

    return _cached(("beta", s), bits, compute)


def lm3(s: int, prec: Union[int, Precision]) -> RealBall:
    """L_{-3}(s): 3^(-s) (zeta(s,1/3) - zeta(s,2/3)); L_{-3}(1) = pi/(3 sqrt 3)."""
    if s < 1:
        raise DomainViolation("lm3 requires s >= 1")
    bits = _bits(prec)
    if s == 1:

        def compute1(b: int) -> RealBall:
            w = b + 16
            return div(
                pi_ball(w), mul(RealBall.from_int(3), sqrt_int(3, w), w), b
            )

        return _cached(("lm3", 1), bits, compute1)

    def compute(b: int) -> RealBall:
        w = b + 16
        d = sub(
            hurwitz_zeta(s, Fraction(1, 3), w), hurwitz_zeta(s, Fraction(2, 3), w), w
        )
        return mul(d, RealBall.from_fraction(Fraction(1, 3**s), w), b)

    return _cached(("lm3", s), bits, compute)


# ---------------------------------------------------------------------------
# the double zeta value zeta(5,3) (and its swap, used as a cross-check)
# ---------------------------------------------------------------------------


def _tail_series(s: int, t: int, m_start: int, bits: int) -> RealBall:
    """sum_{m >= m_start} zeta(s, m) / m^t via the EM expansion of zeta(s, m)."""
    w = bits + 32
    target = Fraction(1, 1 << (bits + 16))
    acc = div(hurwitz_zeta(t + s - 1, Fraction(m_start), w), RealBall.from_int(s - 1), w)
    acc = add(acc, mul(hurwitz_zeta(t + s, Fraction(m_start), w), RealBall.from_fraction(Fraction(1, 2), w), w), w)
    k = 1
    prev = None
    while True:
        coef = bernoulli(2 * k) / math.factorial(2 * k) * _pochhammer(s, 2 * k - 1)
        # summing the first-omitted-term bound over m >= M:
        # |coef| * sum m^-(s+2k-1+t) <= 2 |coef| M^(2-s-2k-t)
        bound = 2 * abs(coef) * Fraction(1, m_start) ** (s + 2 * k - 2 + t)
        if bound < target:
            acc = add_error(acc, RealBall.from_fraction(bound, 64).abs_upper())
            break
        if prev is not None and bound >= prev:
            raise ArithmeticError("EM outer tail not converging; m_start too small")
        term = mul(
            hurwitz_zeta(t + s + 2 * k - 1, Fraction(m_start), w),
            RealBall.from_fraction(coef, w),
            w,
        )
        acc = add(acc, term, w)
        prev = bound
        k += 1
    return acc


def _inner_partial(s: int, t: int, m_stop: int, bits: int) -> RealBall:
    """sum_{m=1}^{m_stop-1} (zeta(s) - H_{m-1}^{(s)}) / m^t."""
    w = bits + 32
    zs = zeta(s, w)
    h = Fraction(0)
    acc = RealBall.zero()
    for m in range(1, m_stop):
        term = sub(zs, RealBall.from_fraction(h, w), w)
        term = mul(term, RealBall.from_fraction(Fraction(1, m**t), w), w)
        acc = add(acc, term, w)
        h += Fraction(1, m**s)
    return acc


def _g_transform(s: int, t: int, bits: int) -> RealBall:
    """G(s, t) = sum_m zeta(s, m)/m^t = zeta(s, t) + zeta(s + t) (as MZVs)."""
    m_stop = max(24, (bits + 40) // 6)
    w = bits + 32
    res = add(_inner_partial(s, t, m_stop, w), _tail_series(s, t, m_stop, w), w)
    return balls._make(res.man, res.exp, (res.rad_man, res.rad_exp), bits)


def mzv_two(s1: int, s2: int, prec: Union[int, Precision]) -> RealBall:
    """zeta(s1, s2) = sum_{k1 > k2 > 0} k1^(-s1) k2^(-s2), s1 >= 3, s2 >= 2."""
    if s1 < 3 or s2 < 2:
        raise DomainViolation("mzv_two requires s1 >= 3, s2 >= 2")
    bits = _bits(prec)

    def compute(b: int) -> RealBall:
        w = b + 16
        prod = mul(zeta(s1, w), zeta(s2, w), w)
        return sub(prod, _g_transform(s2, s1, w), b)

    return _cached(("mzv", s1, s2), bits, compute)


def zeta53(prec: Union[int, Precision]) -> RealBall:
    """The multiple zeta value zeta(5,3)."""
    return mzv_two(5, 3, prec)


# ---------------------------------------------------------------------------
# constant expression trees
# ---------------------------------------------------------------------------

MAX_DEPTH = 64


class ConstExprError(ValueError):
    pass


def _as_fraction(v) -> Fraction:
    if isinstance(v, str):
        return Fraction(v)
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    if isinstance(v, list) and len(v) == 2:
        return Fraction(_as_int(v[0]), _as_int(v[1]))
    raise ConstExprError(f"not a rational literal: {v!r}")


def _as_int(v) -> int:
    if isinstance(v, str):
        return int(v)
    if isinstance(v, int):
        return v
    raise ConstExprError(f"not an integer literal: {v!r}")


def eval_const_expr(expr, prec: Union[int, Precision], _depth: int = 0) -> ComplexBall:
    """Evaluate a constant-expression tree to a complex enclosure.

    Purely real expressions keep an exact-zero imaginary part.  Trees are
    JSON-style tagged lists, e.g. ["div", ["mul", ["rat", "43"], ["sqrt", 101]],
    ["mul", ["rat", "75"], ["pi"]]].
    """
    if _depth > MAX_DEPTH:
        raise ConstExprError("expression tree too deep")
    w = _bits(prec)
    if not isinstance(expr, (list, tuple)) or not expr:
        raise ConstExprError(f"malformed expression node: {expr!r}")
    tag = expr[0]
    args = expr[1:]

    def ev(e) -> ComplexBall:
        return eval_const_expr(e, w, _depth + 1)

    def real(b: RealBall) -> ComplexBall:
        return ComplexBall.from_real(b)

    if tag == "rat":
        if len(args) == 1:
            return real(RealBall.from_fraction(_as_fraction(args[0]), w))
        return real(
            RealBall.from_fraction(Fraction(_as_int(args[0]), _as_int(args[1])), w)
        )
    if tag == "pi":
        return real(pi_ball(w))
    if tag == "gamma":
        return real(euler_gamma(w))
    if tag == "i":
        return ComplexBall(RealBall.zero(), RealBall.from_int(1))
    if tag == "zeta":
        return real(zeta(_as_int(args[0]), w))
    if tag == "beta":
        return real(beta_dirichlet(_as_int(args[0]), w))
    if tag == "lm3":
        return real(lm3(_as_int(args[0]), w))
    if tag == "zeta53":
        return real(zeta53(w))
    if tag == "sqrt":
        if isinstance(args[0], (int, str)):
            return real(sqrt_int(_as_int(args[0]), w))
        inner = ev(args[0])
        if not inner.is_real:
            raise ConstExprError("sqrt of a non-real expression")
        return real(balls.sqrt(inner.re, w))
    if tag == "log":
        return real(log_rational(_as_fraction(args[0]), w))
    if tag == "neg":
        return cneg(ev(args[0]))
    if tag == "add":
        out = ev(args[0])
        for a in args[1:]:
            out = cadd(out, ev(a), w)
        return out
    if tag == "sub":
        return csub(ev(args[0]), ev(args[1]), w)
    if tag == "mul":
        out = ev(args[0])
        for a in args[1:]:
            out = cmul(out, ev(a), w)
        return out
    if tag == "div":
        return cdiv(ev(args[0]), ev(args[1]), w)
    if tag == "pow":
        base = ev(args[0])
        n = _as_int(args[1])
        inv = n < 0
        n = abs(n)
        out = ComplexBall.from_real(RealBall.from_int(1))
        sq = base
        while n:
            if n & 1:
                out = cmul(out, sq, w)
            n >>= 1
            if n:
                sq = cmul(sq, sq, w)
        if inv:
            out = cdiv(ComplexBall.from_real(RealBall.from_int(1)), out, w)
        return out
    raise ConstExprError(f"unknown expression tag {tag!r}")


def const_expr_is_real(expr) -> bool:
    """Structural check: the tree contains no imaginary-unit leaf."""
    if not isinstance(expr, (list, tuple)):
        return True
    if expr and expr[0] == "i":
        return False
    return all(const_expr_is_real(a) for a in expr[1:] if isinstance(a, (list, tuple)))

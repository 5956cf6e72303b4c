"""Arbitrary-precision real and complex ball arithmetic.

A :class:`RealBall` is a midpoint-radius enclosure: the midpoint is a dyadic
rational ``man * 2**exp`` kept to the working precision, the radius is a
low-precision magnitude (32-bit mantissa) that upper-bounds every rounding
error made along the way.  All operations return enclosures of the exact
image of their input sets; radius arithmetic always rounds outward.

Balls are immutable values; precision is an explicit argument to every
operation, never ambient state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

RAD_BITS = 32
_RAD_LIMIT = 1 << RAD_BITS


class DivisorContainsZero(ZeroDivisionError):
    """Raised when a ball division's divisor enclosure contains zero."""


class DomainViolation(ValueError):
    """Raised when a transcendental's argument enclosure leaves its domain."""


@dataclass(frozen=True)
class Precision:
    """Working mantissa size in bits (>= 64)."""

    bits: int

    def __post_init__(self):
        if self.bits < 64:
            raise ValueError("precision must be at least 64 bits")


def _bits(prec: Union[int, Precision]) -> int:
    b = prec.bits if isinstance(prec, Precision) else int(prec)
    if b < 64:
        raise ValueError("precision must be at least 64 bits")
    return b


# ---------------------------------------------------------------------------
# magnitude helpers: (m, e) means m * 2**e with 0 <= m < 2**RAD_BITS
# ---------------------------------------------------------------------------


def _ceil_shift(m: int, s: int) -> int:
    if s <= 0:
        return m << -s
    return -((-m) >> s)


def mag_norm_up(m: int, e: int) -> Tuple[int, int]:
    if m == 0:
        return (0, 0)
    bl = m.bit_length()
    if bl > RAD_BITS:
        s = bl - RAD_BITS
        m = _ceil_shift(m, s)
        e += s
        if m.bit_length() > RAD_BITS:  # ceil pushed over the top
            m >>= 1
            e += 1
    return (m, e)


def mag_norm_down(m: int, e: int) -> Tuple[int, int]:
    if m == 0:
        return (0, 0)
    bl = m.bit_length()
    if bl > RAD_BITS:
        s = bl - RAD_BITS
        m >>= s
        e += s
    return (m, e)


def mag_add_up(a: Tuple[int, int], b: Tuple[int, int]) -> Tuple[int, int]:
    if a[0] == 0:
        return b
    if b[0] == 0:
        return a
    if a[1] < b[1]:
        a, b = b, a
    d = a[1] - b[1]
    if d > 2 * RAD_BITS + 32:
        return mag_norm_up(a[0] + 1, a[1])
    return mag_norm_up((a[0] << d) + b[0], b[1])


def mag_mul_up(a: Tuple[int, int], b: Tuple[int, int]) -> Tuple[int, int]:
    if a[0] == 0 or b[0] == 0:
        return (0, 0)
    return mag_norm_up(a[0] * b[0], a[1] + b[1])


def mag_div_up(a: Tuple[int, int], b_lo: Tuple[int, int]) -> Tuple[int, int]:
    """Upper bound of a / b given an upper bound a and a lower bound b_lo."""
    if a[0] == 0:
        return (0, 0)
    if b_lo[0] == 0:
        raise ZeroDivisionError("magnitude division by zero lower bound")
    m = -((-(a[0] << 64)) // b_lo[0])
    return mag_norm_up(m, a[1] - 64 - b_lo[1])


def mag_from_int_up(n: int) -> Tuple[int, int]:
    return mag_norm_up(abs(n), 0)


def mag_cmp(a: Tuple[int, int], b: Tuple[int, int]) -> int:
    """Compare two magnitudes; returns -1, 0 or 1."""
    if a[0] == 0 or b[0] == 0:
        return (a[0] > 0) - (b[0] > 0)
    la = a[0].bit_length() + a[1]
    lb = b[0].bit_length() + b[1]
    if la != lb:
        return -1 if la < lb else 1
    d = a[1] - b[1]
    x = a[0] << max(d, 0)
    y = b[0] << max(-d, 0)
    return (x > y) - (x < y)


def mag_sqrt_down(a: Tuple[int, int]) -> Tuple[int, int]:
    """Lower bound of sqrt(a) for a lower-bound magnitude a."""
    if a[0] == 0:
        return (0, 0)
    m, e = a
    if e % 2:
        e -= 1
        m <<= 1
    m <<= 64
    e -= 64
    return mag_norm_down(math.isqrt(m), e // 2)


# ---------------------------------------------------------------------------
# RealBall
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RealBall:
    """Midpoint-radius enclosure of a real number.

    midpoint = man * 2**exp; radius = rad_man * 2**rad_exp (rad_man < 2**32).
    """

    man: int
    exp: int
    rad_man: int = 0
    rad_exp: int = 0

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> "RealBall":
        return RealBall(0, 0)

    @staticmethod
    def from_int(n: int, prec: Union[int, Precision, None] = None) -> "RealBall":
        if prec is None:
            return RealBall(n, 0)
        man, exp, em, ee = _round_mid(n, 0, _bits(prec))
        return RealBall(man, exp, em, ee)

    @staticmethod
    def from_fraction(q: Fraction, prec: Union[int, Precision]) -> "RealBall":
        """Enclose an exact rational to <= 1 ulp at the working precision."""
        q = Fraction(q)
        num, den = q.numerator, q.denominator
        if num == 0:
            return RealBall(0, 0)
        w = _bits(prec)
        # scale so the quotient mantissa has w+1 bits, truncate toward zero
        shift = w + 1 - (abs(num).bit_length() - den.bit_length())
        if shift >= 0:
            man, rem = divmod(abs(num) << shift, den)
            exp = -shift
        else:
            man, rem = divmod(abs(num), den << -shift)
            exp = -shift
        if num < 0:
            man = -man
        err = 1 if rem else 0
        man, exp, em, ee = _round_mid(man, exp, w, (err, exp))
        return RealBall(man, exp, em, ee)

    # -- views --------------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.rad_man == 0

    def mid_fraction(self) -> Fraction:
        if self.exp >= 0:
            return Fraction(self.man << self.exp)
        return Fraction(self.man, 1 << -self.exp)

    def rad_fraction(self) -> Fraction:
        if self.rad_exp >= 0:
            return Fraction(self.rad_man << self.rad_exp)
        return Fraction(self.rad_man, 1 << -self.rad_exp)

    def lower(self) -> Fraction:
        return self.mid_fraction() - self.rad_fraction()

    def upper(self) -> Fraction:
        return self.mid_fraction() + self.rad_fraction()

    def contains(self, q: Union[int, Fraction]) -> bool:
        q = Fraction(q)
        return self.lower() <= q <= self.upper()

    def abs_upper(self) -> Tuple[int, int]:
        """Magnitude upper bound of |self| (midpoint magnitude + radius)."""
        return mag_add_up(mag_from_int_up(self.man) if self.exp == 0 else mag_norm_up(abs(self.man), self.exp), (self.rad_man, self.rad_exp))

    def abs_lower(self) -> Tuple[int, int]:
        """Magnitude lower bound of |self|; (0, 0) if the ball straddles 0."""
        if self.man == 0:
            return (0, 0)
        m = abs(self.man)
        d = self.exp - self.rad_exp
        if self.rad_man == 0:
            return mag_norm_down(m, self.exp)
        if d >= 0:
            v = (m << d) - self.rad_man
            e = self.rad_exp
        else:
            v = m - (self.rad_man << -d)
            e = self.exp
        if v <= 0:
            return (0, 0)
        return mag_norm_down(v, e)

    def contains_zero(self) -> bool:
        return self.abs_lower() == (0, 0)

    def is_negative(self) -> bool:
        return self.man < 0 and not self.contains_zero()

    def is_positive(self) -> bool:
        return self.man > 0 and not self.contains_zero()

    def __repr__(self) -> str:
        return f"RealBall({float_str(self)})"


def _round_mid(
    man: int, exp: int, prec: int, extra_err: Tuple[int, int] = (0, 0)
) -> Tuple[int, int, int, int]:
    """Truncate a mantissa to prec bits; returns (man, exp, rad_man, rad_exp)."""
    em, ee = extra_err
    bl = abs(man).bit_length()
    if bl > prec:
        s = bl - prec
        man = man >> s if man >= 0 else -((-man) >> s)
        exp += s
        em, ee = mag_add_up((em, ee), (1, exp))
    em, ee = mag_norm_up(em, ee)
    return man, exp, em, ee


def _make(man: int, exp: int, rad: Tuple[int, int], prec: int) -> RealBall:
    man, exp, rm, re = _round_mid(man, exp, prec, rad)
    if man == 0 and rm == 0:
        return RealBall(0, 0)
    return RealBall(man, exp, rm, re)


# ---------------------------------------------------------------------------
# field operations
# ---------------------------------------------------------------------------


def add(x: RealBall, y: RealBall, prec: Union[int, Precision]) -> RealBall:
    w = _bits(prec)
    rad = mag_add_up((x.rad_man, x.rad_exp), (y.rad_man, y.rad_exp))
    if x.man == 0:
        return _make(y.man, y.exp, rad, w)
    if y.man == 0:
        return _make(x.man, x.exp, rad, w)
    if x.exp < y.exp:
        x, y = y, x
    d = x.exp - y.exp  # >= 0; x has the larger exponent
    if d > w + 64:
        # y's midpoint is negligible: fold it into the radius
        rad = mag_add_up(rad, mag_norm_up(abs(y.man), y.exp))
        return _make(x.man, x.exp, rad, w)
    return _make((x.man << d) + y.man, y.exp, rad, w)


def neg(x: RealBall) -> RealBall:
    return RealBall(-x.man, x.exp, x.rad_man, x.rad_exp)


def sub(x: RealBall, y: RealBall, prec: Union[int, Precision]) -> RealBall:
    return add(x, neg(y), prec)


def mul(x: RealBall, y: RealBall, prec: Union[int, Precision]) -> RealBall:
    w = _bits(prec)
    if (x.man == 0 and x.rad_man == 0) or (y.man == 0 and y.rad_man == 0):
        return RealBall(0, 0)
    mx = mag_norm_up(abs(x.man), x.exp)
    my = mag_norm_up(abs(y.man), y.exp)
    rx = (x.rad_man, x.rad_exp)
    ry = (y.rad_man, y.rad_exp)
    rad = mag_add_up(
        mag_add_up(mag_mul_up(mx, ry), mag_mul_up(my, rx)), mag_mul_up(rx, ry)
    )
    return _make(x.man * y.man, x.exp + y.exp, rad, w)


def div(x: RealBall, y: RealBall, prec: Union[int, Precision]) -> RealBall:
    w = _bits(prec)
    y_lo = y.abs_lower()
    if y_lo == (0, 0):
        raise DivisorContainsZero("division by a ball containing zero")
    if x.man == 0 and x.rad_man == 0:
        return RealBall(0, 0)
    # quotient midpoint to w+2 bits, truncated: error <= 1 ulp
    num, den = x.man, y.man
    shift = w + 2 - (abs(num).bit_length() - abs(den).bit_length())
    if shift >= 0:
        q, rem = divmod(abs(num) << shift, abs(den))
        qexp = x.exp - y.exp - shift
    else:
        q, rem = divmod(abs(num), abs(den) << -shift)
        qexp = x.exp - y.exp - shift
    if (num < 0) != (den < 0):
        q = -q
    qerr = (1, qexp) if rem else (0, 0)
    # interval error: (rx + |x/y| * ry) / (|y| - ry)  with |x/y| <= |mx/my| + qerr
    rx = (x.rad_man, x.rad_exp)
    ry = (y.rad_man, y.rad_exp)
    q_mag = mag_add_up(mag_norm_up(abs(q), qexp), qerr)
    denom_lo = _mag_sub_lo(y.abs_lower(), ry)
    if denom_lo == (0, 0):
        raise DivisorContainsZero("divisor lower bound too weak")
    rad = mag_div_up(mag_add_up(rx, mag_mul_up(q_mag, ry)), denom_lo)
    rad = mag_add_up(rad, qerr)
    return _make(q, qexp, rad, w)


def _mag_sub_lo(a: Tuple[int, int], b: Tuple[int, int]) -> Tuple[int, int]:
    """Lower bound of a - b for a lower bound a, upper bound b."""
    if b[0] == 0:
        return a
    if a[0] == 0:
        return (0, 0)
    d = a[1] - b[1]
    if d >= 0:
        v = (a[0] << d) - b[0] - 1
        e = b[1]
    else:
        v = a[0] - _ceil_shift(b[0], -d) - 1
        e = a[1]
    if v <= 0:
        return (0, 0)
    return mag_norm_down(v, e)


def mul_2exp(x: RealBall, e: int) -> RealBall:
    return RealBall(x.man, x.exp + e, x.rad_man, x.rad_exp if x.rad_man == 0 else x.rad_exp + e)


def add_error(x: RealBall, err: Tuple[int, int]) -> RealBall:
    rm, re = mag_add_up((x.rad_man, x.rad_exp), mag_norm_up(*err))
    return RealBall(x.man, x.exp, rm, re)


# ---------------------------------------------------------------------------
# transcendental operations: sqrt, log, exp
# ---------------------------------------------------------------------------


def sqrt(x: RealBall, prec: Union[int, Precision]) -> RealBall:
    w = _bits(prec)
    if not x.is_positive():
        raise DomainViolation("sqrt requires a strictly positive enclosure")
    man, exp = x.man, x.exp
    g = w + 2
    if (exp - 2 * ((exp) // 2)) == 1:
        man <<= 1
        exp -= 1
    q = exp // 2
    u = man << (2 * g)
    s = math.isqrt(u)
    # s*2**(q-g) <= sqrt(mid) < (s+1)*2**(q-g)
    err = (1, q - g)
    if x.rad_man:
        lo_sqrt = mag_sqrt_down(x.abs_lower())
        prop = mag_div_up((x.rad_man, x.rad_exp), mag_norm_down(2 * lo_sqrt[0], lo_sqrt[1]))
        err = mag_add_up(err, prop)
    return _make(s, q - g, err, w)


_LN2_CACHE: dict = {}


def _atanh_inv_int(n: int, w: int) -> Tuple[int, int]:
    """Fixed-point atanh(1/n) at scale 2**-w; returns (value, error_units)."""
    inv = (1 << w) // n  # error <= 1
    inv2 = (1 << w) // (n * n)
    term = inv
    total = inv
    k = 1
    errs = 2
    while term:
        term = (term * inv2) >> w
        total += term // (2 * k + 1)
        errs += 6  # generous per-step truncation/propagation budget
        k += 1
    return total, errs + 4


def ln2_ball(prec: Union[int, Precision]) -> RealBall:
    """Enclosure of log 2 = 2 * atanh(1/3)."""
    w = _bits(prec) + 32
    key = w
    got = _LN2_CACHE.get(key)
    if got is None:
        v, errs = _atanh_inv_int(3, w)
        got = _make(2 * v, -w, (2 * errs + 4, -w), _bits(prec) + 16)
        _LN2_CACHE[key] = got
    return got


def log(x: RealBall, prec: Union[int, Precision]) -> RealBall:
    """Enclosure of log x via atanh series after power-of-two reduction."""
    w = _bits(prec)
    if not x.is_positive():
        raise DomainViolation("log requires a strictly positive enclosure")
    ww = w + 32
    man, exp = x.man, x.exp
    bl = man.bit_length()
    e2 = exp + bl - 1  # x = f * 2**e2 with f in [1, 2)
    f_fix = man << (ww - (bl - 1)) if ww >= bl - 1 else man >> ((bl - 1) - ww)
    one = 1 << ww
    # u = (f-1)/(f+1) in [0, 1/3); truncation error <= 1 unit
    u = ((f_fix - one) << ww) // (f_fix + one)
    u2 = (u * u) >> ww
    term = u
    total = u
    k = 1
    errs = 2
    while term:
        term = (term * u2) >> ww
        total += term // (2 * k + 1)
        errs += 6
        k += 1
    logf = _make(2 * total, -ww, (2 * errs + 4, -ww), w + 16)
    res = add(logf, mul(ln2_ball(w), RealBall.from_int(e2), w + 16), w + 16)
    if x.rad_man:
        prop = mag_div_up((x.rad_man, x.rad_exp), x.abs_lower())
        res = add_error(res, prop)
    return _make(res.man, res.exp, (res.rad_man, res.rad_exp), w)


def exp(x: RealBall, prec: Union[int, Precision]) -> RealBall:
    """Enclosure of exp x via argument reduction by log 2 and Taylor series."""
    w = _bits(prec)
    ww = w + 32
    ln2 = ln2_ball(ww)
    # k ~ x / ln2, an ordinary integer (estimate from leading bits)
    xa = mag_norm_up(abs(x.man), x.exp) if x.man else (0, 0)
    if xa[0] == 0:
        k = 0
    else:
        approx_log2 = xa[0].bit_length() + xa[1]
        if approx_log2 > 64:
            raise DomainViolation("exp argument too large")
        bl = abs(x.man).bit_length()
        top = x.man >> (bl - 53) if bl > 53 else x.man
        xf = math.ldexp(top, x.exp + max(bl - 53, 0))
        k = int(round(xf / 0.6931471805599453))
    r = sub(x, mul(ln2, RealBall.from_int(k), ww), ww)
    # reduction leaves |r| <~ 0.35; the tail bound below needs |r| < 1/2
    if mag_cmp(r.abs_upper(), (1, -1)) >= 0:
        raise DomainViolation("exp argument reduction failed")
    term = RealBall.from_int(1)
    total = RealBall.from_int(1)
    n = 1
    while True:
        term = div(mul(term, r, ww), RealBall.from_int(n), ww)
        total = add(total, term, ww)
        tb = term.abs_upper()
        if tb[0] == 0 or tb[0].bit_length() + tb[1] < -(ww + 2):
            # geometric tail: |r| < 1 so tail <= |term| * 1/(1-|r|) <= 2*|term|
            total = add_error(total, mag_add_up(mag_mul_up(tb, (2, 0)), (1, -ww)))
            break
        n += 1
        if n > 10 * ww:
            raise ArithmeticError("exp series failed to converge")
    return _make(total.man, total.exp + k, (total.rad_man, 0 if total.rad_man == 0 else total.rad_exp + k), w)


def log_by_sqrt_reduction(x: RealBall, prec: Union[int, Precision]) -> RealBall:
    """Independent log algorithm: repeated square roots, then log(1+t) series.

    Kept as a cross-check against :func:`log`; not used on the production path.
    """
    w = _bits(prec)
    ww = w + 64
    if not x.is_positive():
        raise DomainViolation("log requires a strictly positive enclosure")
    y = _make(x.man, x.exp, (x.rad_man, x.rad_exp), ww)
    k = 0
    # reduce until |y - 1| < 2**-8
    while True:
        diff = sub(y, RealBall.from_int(1), ww)
        da = diff.abs_upper()
        if da[0] == 0 or da[0].bit_length() + da[1] <= -8:
            break
        y = sqrt(y, ww)
        k += 1
        if k > 80:
            raise ArithmeticError("sqrt reduction failed")
    t = sub(y, RealBall.from_int(1), ww)
    # log(1+t) = t - t^2/2 + t^3/3 - ...; |t| < 2**-8
    term = t
    total = t
    n = 1
    while True:
        term = mul(term, t, ww)
        n += 1
        total = add(total, div(term, RealBall.from_int((-1) ** (n + 1) * n), ww), ww)
        tb = term.abs_upper()
        if tb[0] == 0 or tb[0].bit_length() + tb[1] < -(ww + 2):
            total = add_error(total, mag_add_up(tb, (1, -ww)))
            break
    return _make(total.man, total.exp + k, (total.rad_man, 0 if total.rad_man == 0 else total.rad_exp + k), w)


# ---------------------------------------------------------------------------
# ComplexBall
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ComplexBall:
    """Rectangular enclosure re + im*i with RealBall components."""

    re: RealBall
    im: RealBall

    @staticmethod
    def from_real(x: RealBall) -> "ComplexBall":
        return ComplexBall(x, RealBall.zero())

    @staticmethod
    def zero() -> "ComplexBall":
        return ComplexBall(RealBall.zero(), RealBall.zero())

    @property
    def is_real(self) -> bool:
        return self.im.man == 0 and self.im.rad_man == 0

    def __repr__(self) -> str:
        return f"ComplexBall({float_str(self.re)} + {float_str(self.im)}i)"


def cadd(x: ComplexBall, y: ComplexBall, prec) -> ComplexBall:
    return ComplexBall(add(x.re, y.re, prec), add(x.im, y.im, prec))


def csub(x: ComplexBall, y: ComplexBall, prec) -> ComplexBall:
    return ComplexBall(sub(x.re, y.re, prec), sub(x.im, y.im, prec))


def cneg(x: ComplexBall) -> ComplexBall:
    return ComplexBall(neg(x.re), neg(x.im))


def cmul(x: ComplexBall, y: ComplexBall, prec) -> ComplexBall:
    re = sub(mul(x.re, y.re, prec), mul(x.im, y.im, prec), prec)
    im = add(mul(x.re, y.im, prec), mul(x.im, y.re, prec), prec)
    return ComplexBall(re, im)


def cdiv(x: ComplexBall, y: ComplexBall, prec) -> ComplexBall:
    norm = add(mul(y.re, y.re, prec), mul(y.im, y.im, prec), prec)
    if norm.contains_zero():
        raise DivisorContainsZero("complex division by a ball containing zero")
    num = cmul(x, ComplexBall(y.re, neg(y.im)), prec)
    return ComplexBall(div(num.re, norm, prec), div(num.im, norm, prec))


def cscale(x: ComplexBall, q: Fraction, prec) -> ComplexBall:
    b = RealBall.from_fraction(Fraction(q), _bits(prec) + 8)
    return ComplexBall(mul(x.re, b, prec), mul(x.im, b, prec))


# ---------------------------------------------------------------------------
# verdict primitive
# ---------------------------------------------------------------------------

ZERO_TO_D = "ZeroToD"
NONZERO_CERTIFIED = "NonzeroCertified"
INDETERMINATE = "Indeterminate"


def _abs_upper_fraction(x: RealBall) -> Fraction:
    return abs(x.mid_fraction()) + x.rad_fraction()


def _abs_lower_fraction(x: RealBall) -> Fraction:
    v = abs(x.mid_fraction()) - x.rad_fraction()
    return v if v > 0 else Fraction(0)


def enclosure_check(x: ComplexBall, digits: int) -> str:
    """Classify a ball against the threshold 10**-digits, componentwise.

    ZeroToD: both components certainly below the threshold in magnitude.
    NonzeroCertified: some component certainly above it.
    """
    thr = Fraction(1, 10**digits)
    if _abs_lower_fraction(x.re) > thr or _abs_lower_fraction(x.im) > thr:
        return NONZERO_CERTIFIED
    if _abs_upper_fraction(x.re) < thr and _abs_upper_fraction(x.im) < thr:
        return ZERO_TO_D
    return INDETERMINATE


# ---------------------------------------------------------------------------
# formatting
# ---------------------------------------------------------------------------


def float_str(x: RealBall) -> str:
    """Short human-readable rendering (midpoint float-ish, radius magnitude)."""
    mid = x.mid_fraction()
    rad = x.rad_fraction()
    try:
        midf = float(mid)
        radf = float(rad)
        return f"{midf!r} +/- {radf:.3e}"
    except OverflowError:
        return f"~2^{x.man.bit_length() + x.exp} +/- big"


def decimal_str(x: RealBall, digits: int) -> str:
    """Decimal rendering of the midpoint to the given number of digits."""
    mid = x.mid_fraction()
    sign = "-" if mid < 0 else ""
    mid = abs(mid)
    if mid == 0:
        return "0." + "0" * digits
    scaled = int(mid * 10**digits)
    s = str(scaled).rjust(digits + 1, "0")
    return f"{sign}{s[:-digits]}.{s[-digits:]}"

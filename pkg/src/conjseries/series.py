"""Series summation engine with empirical, ratio-gated tail bounds.

Terms come from one of two sources:

* a rational source (``SummandEvaluator``) producing exact Fractions, which
  are accumulated exactly and flushed into a ball only when the running
  numerator/denominator grow past a bit budget;
* a ball source (e.g. derivative series) producing ``ComplexBall`` terms.

The engine never assumes convergence.  It watches the ratio of consecutive
term magnitudes over a sliding window; once the window is full, its maximum
ratio r satisfies r <= RATIO_GATE, and the geometric bound |t_K| * r/(1-r)
drops below 10^-(digits+5), the sum stops and the bound is folded into the
result radius.  This tail bound is empirical (the window maximum is taken as
a proxy for the true supremum), so every result carries the flag
``ratio-bounded-tail``; inside the summed range all arithmetic is a rigorous
enclosure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple, Union

from . import balls
from .balls import (
    INDETERMINATE,
    NONZERO_CERTIFIED,
    ZERO_TO_D,
    ComplexBall,
    RealBall,
    decimal_str,
    enclosure_check,
)
from .summand import SummandEvaluator

RATIO_GATE = 0.9
RATIO_SAFETY = 1.0625  # inflate the observed window maximum before gating
RATIO_WINDOW = 8
MIN_TERMS = 16
DEFAULT_MAX_TERMS = 20000
GUARD_DIGITS = 5


class SeriesError(RuntimeError):
    """Base class for summation failures; carries partial diagnostics."""

    def __init__(self, message: str, diagnostics: "SeriesDiagnostics"):
        super().__init__(message)
        self.diagnostics = diagnostics


class RatioNotContracting(SeriesError):
    pass


class MaxTermsExceeded(SeriesError):
    pass


@dataclass
class SeriesDiagnostics:
    terms_used: int
    precision_bits: int
    max_ratio: Optional[float]
    tail_bound_log2: Optional[float]
    flags: List[str] = field(default_factory=list)


def _flog2(n: int) -> float:
    """log2 of a positive integer, accurate to ~1 ulp even for huge n."""
    bl = n.bit_length()
    if bl <= 53:
        return math.log2(n)
    return math.log2(n >> (bl - 53)) + (bl - 53)


def _frac_log2(q: Fraction) -> float:
    """log2 |q| for nonzero q."""
    return _flog2(abs(q.numerator)) - _flog2(q.denominator)


def _ball_abs_log2(x: ComplexBall) -> float:
    """log2 of an upper bound for |x| (midpoint + radius), -inf if zero."""
    out = -math.inf
    for comp in (x.re, x.im):
        m, e = comp.abs_upper()
        if m:
            out = max(out, _flog2(m) + e)
    return out


class RationalSource:
    """Adapts a SummandEvaluator to the engine's term-stream interface."""

    kind = "rational"

    def __init__(self, evaluator: SummandEvaluator):
        self.evaluator = evaluator
        self.start = evaluator.start

    def term(self, k: int) -> Fraction:
        return self.evaluator.term(k)


class BallSource:
    """Term stream of ComplexBall values (derivative series, etc.)."""

    kind = "ball"

    def __init__(self, term_fn: Callable[[int, int], ComplexBall], start: int = 0):
        self._term_fn = term_fn
        self.start = start

    def term(self, k: int, prec: int) -> ComplexBall:
        return self._term_fn(k, prec)


TermSource = Union[RationalSource, BallSource]


def _tail_error_mag(log2_bound: float) -> Tuple[int, int]:
    return (1, int(math.ceil(log2_bound)) + 1)


def sum_series(
    source: TermSource,
    digits: int,
    prec: Optional[int] = None,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> Tuple[ComplexBall, SeriesDiagnostics]:
    """Sum a series to an enclosure good to ``digits`` decimal digits.

    Raises RatioNotContracting if the term-ratio window never satisfies the
    gate, and MaxTermsExceeded if the (contracting) tail has not shrunk below
    the target after ``max_terms`` terms.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    if prec is None:
        prec = 4 * digits + 64
    target_log2 = -(digits + GUARD_DIGITS) * math.log2(10) - 2
    flush_bits = 64 * prec

    rational = source.kind == "rational"
    rat_acc = Fraction(0)
    ball_acc = ComplexBall.zero()
    window: List[float] = []
    logs: List[float] = []  # last 2*RATIO_WINDOW finite log2 magnitudes
    prev_log2: Optional[float] = None
    last_log2: float = -math.inf
    k = source.start
    terms_used = 0
    gated_ok = False
    smoothed = False
    ratio = None
    tail_log2 = None

    while True:
        if terms_used >= max_terms:
            diag = SeriesDiagnostics(terms_used, prec, ratio, tail_log2,
                                     ["ratio-bounded-tail"])
            if not gated_ok:
                raise RatioNotContracting(
                    f"term ratio did not contract below {RATIO_GATE} "
                    f"within {max_terms} terms", diag)
            raise MaxTermsExceeded(
                f"tail bound above target after {max_terms} terms", diag)

        if rational:
            t = source.term(k)
            rat_acc += t
            if (rat_acc.numerator.bit_length()
                    + rat_acc.denominator.bit_length() > flush_bits):
                ball_acc = balls.cadd(
                    ball_acc,
                    ComplexBall.from_real(RealBall.from_fraction(rat_acc, prec)),
                    prec)
                rat_acc = Fraction(0)
            cur_log2 = _frac_log2(t) if t else -math.inf
        else:
            tb = source.term(k, prec)
            ball_acc = balls.cadd(ball_acc, tb, prec)
            cur_log2 = _ball_abs_log2(tb)

        terms_used += 1
        k += 1

        if cur_log2 == -math.inf:
            # zero term: the window survives, but no ratio datum is added
            continue
        if prev_log2 is not None and prev_log2 != -math.inf:
            window.append(2.0 ** (cur_log2 - prev_log2))
            if len(window) > RATIO_WINDOW:
                window.pop(0)
        prev_log2 = cur_log2
        last_log2 = cur_log2
        logs.append(cur_log2)
        if len(logs) > 2 * RATIO_WINDOW:
            logs.pop(0)

        if terms_used >= MIN_TERMS and len(window) == RATIO_WINDOW:
            r = RATIO_SAFETY * max(window)
            ratio = r
            if r <= RATIO_GATE:
                gated_ok = True
                tail_log2 = last_log2 + math.log2(r / (1.0 - r))
                if tail_log2 < target_log2:
                    break
        if terms_used >= MIN_TERMS and len(logs) == 2 * RATIO_WINDOW:
            # Sign-oscillating summands (negative trinomial parameters) have
            # spiky term-to-term ratios; compare window maxima one window
            # apart instead, and bound the tail blockwise from the newer
            # window's maximum.
            m_old = max(logs[:RATIO_WINDOW])
            m_new = max(logs[RATIO_WINDOW:])
            if m_new < m_old:
                r = RATIO_SAFETY * 2.0 ** ((m_new - m_old) / RATIO_WINDOW)
                if r <= RATIO_GATE:
                    gated_ok = True
                    smoothed = True
                    ratio = r
                    q = r ** RATIO_WINDOW
                    tail_log2 = (m_new + math.log2(RATIO_WINDOW)
                                 + math.log2(q / (1.0 - q)))
                    if tail_log2 < target_log2:
                        break

    if rational and rat_acc:
        ball_acc = balls.cadd(
            ball_acc,
            ComplexBall.from_real(RealBall.from_fraction(rat_acc, prec)),
            prec)
    err = _tail_error_mag(tail_log2)
    ball_acc = ComplexBall(
        balls.add_error(ball_acc.re, err),
        ball_acc.im if rational else balls.add_error(ball_acc.im, err),
    )
    flags = ["ratio-bounded-tail"]
    if smoothed:
        flags.append("oscillation-smoothed-ratio")
    diag = SeriesDiagnostics(terms_used, prec, ratio, tail_log2, flags)
    return ball_acc, diag


@dataclass
class VerificationReport:
    conjecture_id: str
    verdict: str  # PASS | FAIL | INCONCLUSIVE | SKIP
    digits: int
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    enclosure: Optional[str] = None  # ZeroToD / NonzeroCertified / Indeterminate
    terms_used: Optional[int] = None
    precision_bits: Optional[int] = None
    attempts: int = 0
    flags: List[str] = field(default_factory=list)
    reason: Optional[str] = None
    delta_bound: Optional[str] = None  # certified upper bound on |lhs-rhs|

    def as_dict(self) -> dict:
        return {
            "id": self.conjecture_id,
            "verdict": self.verdict,
            "digits": self.digits,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "enclosure": self.enclosure,
            "terms_used": self.terms_used,
            "precision_bits": self.precision_bits,
            "attempts": self.attempts,
            "flags": self.flags,
            "reason": self.reason,
            "delta_bound": self.delta_bound,
        }


def _sci_str(q: Fraction) -> str:
    """Short scientific rendering of a nonnegative rational, e.g. 3.17e-26."""
    if q == 0:
        return "0"
    e10 = int(math.floor(_frac_log2(q) * math.log10(2)))
    m = q / Fraction(10) ** e10
    while m >= 10:
        m /= 10
        e10 += 1
    while m < 1:
        m *= 10
        e10 -= 1
    return f"{float(m):.2f}e{e10:+03d}"


def _cball_str(x: ComplexBall, digits: int) -> str:
    re_s = decimal_str(x.re, digits)
    if x.im.man == 0 and x.im.rad_man == 0:
        return re_s
    return f"{re_s} + {decimal_str(x.im, digits)}*i"


def verify_series(
    conjecture_id: str,
    source_factory: Callable[[int], TermSource],
    rhs_fn: Callable[[int], ComplexBall],
    digits: int,
    max_terms: int = DEFAULT_MAX_TERMS,
    max_retries: int = 4,
) -> VerificationReport:
    """Compare a summed series against its conjectured closed form.

    ``source_factory(prec)`` must return a fresh term source and ``rhs_fn(prec)``
    the closed-form enclosure at working precision ``prec`` bits.  On an
    Indeterminate enclosure the working precision doubles, up to
    ``max_retries`` retries.
    """
    prec = 4 * digits + 64
    attempts = 0
    report = VerificationReport(conjecture_id, "INCONCLUSIVE", digits)
    while True:
        attempts += 1
        report.attempts = attempts
        report.precision_bits = prec
        try:
            lhs, diag = sum_series(source_factory(prec), digits, prec=prec,
                                   max_terms=max_terms)
        except SeriesError as exc:
            report.verdict = "INCONCLUSIVE"
            report.reason = str(exc)
            report.terms_used = exc.diagnostics.terms_used
            report.flags = list(exc.diagnostics.flags)
            return report
        rhs = rhs_fn(prec)
        delta = balls.csub(lhs, rhs, prec)
        status = enclosure_check(delta, digits)
        report.lhs = _cball_str(lhs, digits)
        report.rhs = _cball_str(rhs, digits)
        report.enclosure = status
        report.terms_used = diag.terms_used
        report.flags = list(diag.flags)
        report.delta_bound = _sci_str(
            max(balls._abs_upper_fraction(delta.re),
                balls._abs_upper_fraction(delta.im)))
        if status == ZERO_TO_D:
            report.verdict = "PASS"
            return report
        if status == NONZERO_CERTIFIED:
            report.verdict = "FAIL"
            report.reason = "difference certified nonzero at working precision"
            return report
        if attempts > max_retries:
            report.verdict = "INCONCLUSIVE"
            report.reason = (f"enclosure still {INDETERMINATE} after "
                            f"{attempts} attempts")
            return report
        prec *= 2

import math
from fractions import Fraction

import pytest

from conjseries.balls import RealBall
from conjseries.exact import TrinomialParams, harmonic, trinomial_direct
from conjseries.registry import builtin_catalog
from conjseries.series import (MaxTermsExceeded, RationalSource,
                               SeriesError, sum_series, verify_series)
from conjseries.summand import SummandEvaluator

_BINOM = {"2k_k": (2, 1), "3k_k": (3, 1), "4k_2k": (4, 2), "6k_3k": (6, 3)}
_HARG = {"k": (1, 0), "k-1": (1, -1), "2k": (2, 0), "2k-1": (2, -1),
         "3k": (3, 0), "3k-1": (3, -1), "4k": (4, 0)}


def _poly(coeffs, k):
    return sum(Fraction(int(c)) * k ** i for i, c in enumerate(coeffs))


def _direct_term(spec, k):
    """Independent summand evaluation: no shared code with SummandEvaluator
    beyond the exact-core primitives (which the oracle uses in 'direct'
    mode)."""
    t = Fraction(1)
    pf = spec.get("prefactor")
    if pf:
        t *= _poly(pf["num"], k) / _poly(pf.get("den", [1]), k)
    for b in spec.get("binomials", ()):
        n_m, k_m = _BINOM[b["pattern"]]
        t *= Fraction(math.comb(n_m * k, k_m * k)) ** b["exp"]
    for tri in spec.get("trinomials", ()):
        params = TrinomialParams(int(tri["b"]), int(tri["c"]))
        t *= Fraction(trinomial_direct(tri["mult"] * k, params)) ** tri["exp"]
    rb = spec.get("ratio_base")
    if rb:
        base = Fraction(int(rb[0]), int(rb[1]) if len(rb) > 1 else 1)
        if spec.get("ratio_mode", "inv_k") == "pow_km1":
            t *= base ** (k - 1)
        else:
            t /= base ** k
    alt = spec.get("alt_sign", 0)
    if alt == 1:
        t *= (-1) ** k
    elif alt == -1:
        t *= (-1) ** (k - 1)
    for blk in spec.get("blocks", ()):
        b = _poly(blk.get("poly", [1]), k)
        hsum = Fraction(0)
        for h in blk.get("harmonics", ()):
            mult, off = _HARG[h["arg"]]
            hsum += Fraction(int(h["coef"])) * harmonic(
                max(mult * k + off, 0), h["order"])
        val = b * hsum if blk.get("harmonics") else b
        off_rf = blk.get("offset")
        if off_rf:
            val += _poly(off_rf["num"], k) / _poly(off_rf["den"], k)
        t *= val
    return t


# ten structurally diverse catalog entries
ORACLE_IDS = ["X1", "X2", "C3.1a", "C3.4b", "C3.5", "C3.8", "C3.9",
              "C3.11", "C3.12", "R3.10-x2"]


@pytest.mark.parametrize("eid", ORACLE_IDS)
def test_term_stream_matches_independent_oracle(eid):
    spec = builtin_catalog().by_id(eid).payload["summand"]
    ev = SummandEvaluator(spec)
    for k in range(spec.get("start", 0), 51):
        assert ev.term(k) == _direct_term(spec, k), f"{eid} term {k}"


@pytest.mark.parametrize("digits", [5, 10, 20, 40])
def test_geometric_tail_soundness(digits):
    """The returned enclosure at every digit level contains a much more
    precise evaluation of the same series."""
    spec = builtin_catalog().by_id("R3.8").payload["summand"]
    ref, _ = sum_series(RationalSource(SummandEvaluator(spec)), 60,
                        prec=4 * 60 + 64)
    ref_mid = ref.re.mid_fraction()
    val, diag = sum_series(RationalSource(SummandEvaluator(spec)), digits,
                           prec=4 * digits + 64)
    assert val.re.contains(ref_mid)
    assert "ratio-bounded-tail" in diag.flags
    assert val.re.rad_fraction() < Fraction(1, 10 ** digits)


def test_max_terms_exceeded_raises_with_diagnostics():
    spec = builtin_catalog().by_id("R3.8").payload["summand"]
    with pytest.raises(SeriesError) as ei:
        sum_series(RationalSource(SummandEvaluator(spec)), 500, max_terms=20)
    assert ei.value.diagnostics.terms_used == 20


def test_determinism_identical_reports():
    cat = builtin_catalog()
    entry = cat.by_id("X1")
    from conjseries.runner import verify_entry
    r1 = verify_entry(entry, digits=25)
    r2 = verify_entry(entry, digits=25)
    assert r1.as_dict() == r2.as_dict()
    assert r1.lhs == r2.lhs  # identical midpoint digit strings


def test_verify_series_pass_and_fail():
    spec = builtin_catalog().by_id("R3.8").payload["summand"]

    def src(prec):
        return RationalSource(SummandEvaluator(spec))

    from conjseries.constants import pi_ball
    from conjseries import balls

    def rhs_ok(prec):
        from conjseries.balls import ComplexBall
        pi = pi_ball(prec)
        return ComplexBall.from_real(
            balls.div(balls.mul(pi, pi, prec), RealBall.from_int(6), prec))

    def rhs_bad(prec):
        from conjseries.balls import ComplexBall
        v = rhs_ok(prec)
        return ComplexBall(
            balls.add(v.re, RealBall.from_fraction(Fraction(1, 10 ** 10),
                                                   prec), prec), v.im)

    rep = verify_series("ok", src, rhs_ok, 25)
    assert rep.verdict == "PASS"
    rep2 = verify_series("bad", src, rhs_bad, 12)
    assert rep2.verdict == "FAIL"

"""Dispatch catalog entries to the series/congruence/integrality engines."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, List, Optional

from .balls import ComplexBall
from .congruence import (CaseReport, IntegralityReport, check_congruence,
                         check_integrality)
from .constants import eval_const_expr
from .exact import primes_up_to
from .gammataylor import (DerivativeSeriesSpec, derivative_series_source,
                          function_expr_from_dict)
from .registry import ConjectureEntry
from .series import RationalSource, VerificationReport, verify_series
from .summand import SummandEvaluator

ENGINE_VERSION = "1.0.0"

DEFAULT_DIGITS_REFERENCE = 30
DEFAULT_DIGITS_CONJECTURE = 25
DEFAULT_DIGITS_HIGH_ORDER = 20  # derivative entries with order >= 5
DEFAULT_PRIME_MAX = 300
DEFAULT_N_MAX = 64


def default_digits(entry: ConjectureEntry) -> int:
    if entry.digits_override is not None:
        return entry.digits_override
    if entry.status == "proven-reference":
        return DEFAULT_DIGITS_REFERENCE
    if (entry.kind == "derivative-series"
            and int(entry.payload["order"]) >= 5):
        return DEFAULT_DIGITS_HIGH_ORDER
    return DEFAULT_DIGITS_CONJECTURE


def rhs_evaluator(entry: ConjectureEntry) -> Callable[[int], ComplexBall]:
    rhs = entry.rhs
    if rhs is None:
        raise ValueError(f"{entry.id}: entry has no closed-form rhs")
    re_tree = rhs["re"]
    im_tree = rhs.get("im")

    def rhs_fn(prec: int) -> ComplexBall:
        val = eval_const_expr(re_tree, prec)
        if im_tree is not None:
            iv = eval_const_expr(im_tree, prec)
            val = ComplexBall(val.re, iv.re)
        return val

    return rhs_fn


def source_factory(entry: ConjectureEntry):
    if entry.kind == "series":
        evaluator = SummandEvaluator(entry.payload["summand"])
        src = RationalSource(evaluator)
        return lambda prec: src
    if entry.kind == "derivative-series":
        spec = DerivativeSeriesSpec(
            fexpr=function_expr_from_dict(entry.payload["fexpr"]),
            order=int(entry.payload["order"]),
            start=int(entry.payload.get("start", 1)))
        src = derivative_series_source(spec)
        return lambda prec: src
    raise ValueError(f"{entry.id}: not a series entry ({entry.kind})")


def verify_entry(entry: ConjectureEntry,
                 digits: Optional[int] = None,
                 max_terms: Optional[int] = None) -> VerificationReport:
    """Run one series / derivative-series entry through the engine."""
    if entry.kind not in ("series", "derivative-series"):
        raise ValueError(f"{entry.id}: verify_entry needs a series entry")
    d = digits if digits is not None else default_digits(entry)
    mt = max_terms
    if mt is None:
        mt = entry.max_terms_override if entry.max_terms_override else 20000
    report = verify_series(entry.id, source_factory(entry),
                           rhs_evaluator(entry), d, max_terms=mt)
    for tag in entry.anomalies:
        if tag not in report.flags:
            report.flags.append(tag)
    return report


@dataclass
class RangeReport:
    """Aggregate of per-prime / per-index checks for one entry."""

    conjecture_id: str
    verdict: str  # PASS | FAIL | SKIP
    checked: int
    skipped: int
    failures: List[dict] = field(default_factory=list)
    details: List[dict] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "id": self.conjecture_id,
            "verdict": self.verdict,
            "checked": self.checked,
            "skipped": self.skipped,
            "failures": self.failures,
            "details": self.details,
        }


def check_congruence_entry(entry: ConjectureEntry,
                           prime_max: int = DEFAULT_PRIME_MAX,
                           keep_details: bool = False) -> RangeReport:
    if entry.kind != "congruence":
        raise ValueError(f"{entry.id}: not a congruence entry")
    checked = skipped = 0
    failures: List[dict] = []
    details: List[dict] = []
    for p in primes_up_to(prime_max):
        if p == 2:
            continue
        rep: CaseReport = check_congruence(entry.id, entry.payload, p)
        if rep.verdict == "SKIP":
            skipped += 1
        else:
            checked += 1
            if rep.verdict == "FAIL":
                failures.append(rep.as_dict())
        if keep_details:
            details.append(rep.as_dict())
    verdict = "FAIL" if failures else ("PASS" if checked else "SKIP")
    return RangeReport(entry.id, verdict, checked, skipped, failures, details)


def check_integrality_entry(entry: ConjectureEntry,
                            n_max: int = DEFAULT_N_MAX,
                            keep_details: bool = False) -> RangeReport:
    if entry.kind != "integrality":
        raise ValueError(f"{entry.id}: not an integrality entry")
    checked = skipped = 0
    failures: List[dict] = []
    details: List[dict] = []
    for n in range(1, n_max + 1):
        rep: IntegralityReport = check_integrality(entry.id, entry.payload, n)
        if rep.verdict == "SKIP":
            skipped += 1
        else:
            checked += 1
            if rep.verdict == "FAIL":
                failures.append(rep.as_dict())
        if keep_details:
            details.append(rep.as_dict())
    verdict = "FAIL" if failures else ("PASS" if checked else "SKIP")
    return RangeReport(entry.id, verdict, checked, skipped, failures, details)

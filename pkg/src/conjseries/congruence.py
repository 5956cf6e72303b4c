"""Supercongruence and integrality checking.

Congruence sums sum_{k<p} w(k) C(2k,k) T_k(b,c) T_2k(b*,c*) m^-k are reduced
exactly mod p or p^2: binomials come from an additive Pascal table (no
divisions anywhere near p), trinomial values from the direct binomial sum.
The hot kernel has a numba-jitted implementation and a pure-numpy fallback,
selected by the CONJSERIES_NO_NUMBA environment variable.

Case conditions are conjunctions of residue-class, Jacobi-symbol and
quadratic-form-representation atoms; right-hand sides are small expression
trees in p and the representation witness (x, y).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .exact import TrinomialParams, trinomial_prefix


def _select_kernels():
    if os.environ.get("CONJSERIES_NO_NUMBA", "").lower() in ("1", "true", "yes"):
        from . import _kernels_numpy as k
        return k
    try:
        from . import _kernels_numba as k
        return k
    except ImportError:
        from . import _kernels_numpy as k
        return k


_kernels = _select_kernels()


def kernel_backend() -> str:
    return _kernels.BACKEND


class BadPrime(ValueError):
    pass


class NoCaseMatched(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# number-theoretic atoms


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n (Legendre symbol for prime n)."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("jacobi requires odd positive n")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def represent_form(
    target: int,
    alpha: int,
    beta: int,
    constraints: Sequence[dict] = (),
) -> Optional[Tuple[int, int]]:
    """Find (x, y) with target = alpha*x^2 + beta*y^2 meeting the constraints.

    Search is exhaustive over 0 < x <= sqrt(target/alpha); x is normalized
    positive and the sign of y is chosen to satisfy sign-sensitive
    divisibility constraints (nu | x - y).  Returns None if no admissible
    representation exists.
    """
    if target < 1 or alpha < 1 or beta < 1:
        raise ValueError("represent_form requires positive arguments")
    for x in range(1, math.isqrt(target // alpha) + 1):
        rem = target - alpha * x * x
        if rem < 0:
            break
        if rem % beta:
            continue
        s = rem // beta
        y = math.isqrt(s)
        if y * y != s:
            continue
        ok = True
        y_signed = y
        for c in constraints:
            kind = c["kind"]
            if kind == "ndiv":
                var = x if c.get("var", "x") == "x" else abs(y_signed)
                if var % c["nu"] == 0:
                    ok = False
                    break
            elif kind == "divdiff":
                nu = c["nu"]
                if (x - y_signed) % nu == 0:
                    pass
                elif (x + y_signed) % nu == 0:
                    y_signed = -y_signed
                else:
                    ok = False
                    break
            else:
                raise ValueError(f"unknown form constraint {kind!r}")
        if ok:
            return (x, y_signed)
    return None


# ---------------------------------------------------------------------------
# modular congruence sums


def congruence_sum(spec: dict, p: int) -> int:
    """Exact residue of the spec's sum mod p^modulus_power."""
    s = spec["summand"]
    power = int(spec.get("modulus_power", 2))
    mod = p**power
    base = int(s["base"])
    if p < 3 or base % p == 0:
        raise BadPrime(f"p={p} inadmissible for base {base}")
    inv_base = pow(base % mod, -1, mod)
    return _kernels.congruence_sum_kernel(
        p, mod,
        int(s["b1"]), int(s["c1"]), int(s["b2"]), int(s["c2"]),
        int(s.get("w0", 1)), int(s.get("w1", 0)), inv_base,
    )


def congruence_sum_oracle(spec: dict, p: int) -> int:
    """Independent big-integer path: exact numerator sum with modular inverse
    powers, reduced at the end.  Used to cross-check the kernels."""
    s = spec["summand"]
    power = int(spec.get("modulus_power", 2))
    mod = p**power
    base = int(s["base"])
    if base % p == 0:
        raise BadPrime(f"p={p} inadmissible for base {base}")
    inv_base = pow(base % mod, -1, mod)
    t1 = trinomial_prefix(p - 1, TrinomialParams(int(s["b1"]), int(s["c1"])))
    t2 = trinomial_prefix(2 * (p - 1), TrinomialParams(int(s["b2"]), int(s["c2"])))
    w0, w1 = int(s.get("w0", 1)), int(s.get("w1", 0))
    acc = 0
    for k in range(p):
        term = (w0 + w1 * k) * math.comb(2 * k, k) * t1[k] * t2[2 * k]
        acc += term * pow(inv_base, k, mod)
    return acc % mod


# ---------------------------------------------------------------------------
# conditions and right-hand sides


def _jac_operand(v, p: int) -> int:
    return p if v == "p" else int(v)


def _eval_atom(atom: dict, p: int) -> Tuple[bool, Optional[Tuple[int, int]]]:
    kind = atom["kind"]
    if kind == "residue":
        return p % int(atom["mod"]) in set(atom["in"]), None
    if kind == "jacobi":
        top = _jac_operand(atom["top"], p)
        bot = _jac_operand(atom["bot"], p)
        return jacobi(top, bot) == int(atom["eq"]), None
    if kind == "form":
        target = p if atom.get("target", "p") == "p" else 2 * p
        w = represent_form(target, int(atom["alpha"]), int(atom["beta"]),
                           atom.get("constraints", ()))
        return w is not None, w
    raise ValueError(f"unknown condition atom {kind!r}")


def _condition_holds(cond: Sequence[dict], p: int):
    witness = None
    for atom in cond:
        ok, w = _eval_atom(atom, p)
        if not ok:
            return False, None
        if w is not None:
            witness = w
    return True, witness


def _eval_rhs_exact(expr, p: int,
                    witness: Optional[Tuple[int, int]]) -> Fraction:
    tag = expr[0]
    if tag == "rat":
        num = int(expr[1])
        den = int(expr[2]) if len(expr) > 2 else 1
        return Fraction(num, den)
    if tag == "p":
        return Fraction(p)
    if tag == "x":
        if witness is None:
            raise ValueError("rhs references x but no form witness bound")
        return Fraction(witness[0])
    if tag == "y":
        if witness is None:
            raise ValueError("rhs references y but no form witness bound")
        return Fraction(witness[1])
    if tag == "jac":
        return Fraction(jacobi(_jac_operand(expr[1], p),
                               _jac_operand(expr[2], p)))
    if tag == "neg":
        return -_eval_rhs_exact(expr[1], p, witness)
    if tag == "add":
        return sum((_eval_rhs_exact(s, p, witness) for s in expr[1:]),
                   Fraction(0))
    if tag == "sub":
        return (_eval_rhs_exact(expr[1], p, witness)
                - _eval_rhs_exact(expr[2], p, witness))
    if tag == "mul":
        acc = Fraction(1)
        for sub in expr[1:]:
            acc *= _eval_rhs_exact(sub, p, witness)
        return acc
    raise ValueError(f"unknown rhs tag {tag!r}")


def eval_rhs(expr, p: int, mod: int,
             witness: Optional[Tuple[int, int]] = None) -> int:
    """Evaluate a case right-hand side to a residue mod ``mod``.

    The tree is evaluated as an exact rational first so that factors of p in
    a numerator may cancel a denominator divisible by p (e.g. p/7575 at
    p = 3); only the reduced denominator must be invertible mod ``mod``.
    """
    v = _eval_rhs_exact(expr, p, witness)
    if v.denominator == 1:
        return v.numerator % mod
    return v.numerator * pow(v.denominator % mod, -1, mod) % mod


@dataclass
class CaseReport:
    conjecture_id: str
    p: int
    verdict: str  # PASS | FAIL | SKIP
    case_index: Optional[int] = None
    case_label: Optional[str] = None
    witness: Optional[Tuple[int, int]] = None
    lhs_residue: Optional[int] = None
    rhs_residue: Optional[int] = None
    alt_sign_rhs_match: Optional[bool] = None
    reason: Optional[str] = None

    def as_dict(self) -> dict:
        return {
            "id": self.conjecture_id,
            "p": self.p,
            "verdict": self.verdict,
            "case_index": self.case_index,
            "case_label": self.case_label,
            "witness": list(self.witness) if self.witness else None,
            "lhs_residue": self.lhs_residue,
            "rhs_residue": self.rhs_residue,
            "alt_sign_rhs_match": self.alt_sign_rhs_match,
            "reason": self.reason,
        }


def _admissible(spec: dict, p: int) -> Optional[str]:
    base = int(spec["summand"]["base"])
    if p in set(spec.get("excluded_primes", ())):
        return "excluded prime"
    if p < int(spec.get("min_prime", 3)):
        return "below minimum prime"
    if base % p == 0:
        return "prime divides ratio base"
    for atom in spec.get("require", ()):
        ok, _ = _eval_atom(atom, p)
        if not ok:
            return f"requirement not met: {atom['kind']}"
    return None


def check_congruence(conjecture_id: str, spec: dict, p: int) -> CaseReport:
    """Check one congruence entry at one prime."""
    skip = _admissible(spec, p)
    if skip is not None:
        return CaseReport(conjecture_id, p, "SKIP", reason=skip)
    power = int(spec.get("modulus_power", 2))
    mod = p**power
    lhs = congruence_sum(spec, p)
    for jac in spec.get("lhs_jacobi", ()):
        lhs = lhs * jacobi(_jac_operand(jac[0], p), _jac_operand(jac[1], p)) % mod
    for idx, case in enumerate(spec["cases"]):
        holds, witness = _condition_holds(case["cond"], p)
        if not holds:
            continue
        rhs = eval_rhs(case["rhs"], p, mod, witness)
        report = CaseReport(
            conjecture_id, p,
            "PASS" if lhs == rhs else "FAIL",
            case_index=idx, case_label=case.get("label"),
            witness=witness, lhs_residue=lhs, rhs_residue=rhs,
        )
        if witness is not None and witness[1] != 0:
            alt = (witness[0], -witness[1])
            report.alt_sign_rhs_match = (
                eval_rhs(case["rhs"], p, mod, alt) == lhs)
        if report.verdict == "FAIL":
            report.reason = (f"lhs {lhs} != rhs {rhs} (mod {p}^{power})")
        return report
    raise NoCaseMatched(f"{conjecture_id}: no case matched at p={p}")


# ---------------------------------------------------------------------------
# integrality / parity


@dataclass
class IntegralityReport:
    conjecture_id: str
    n: int
    verdict: str  # PASS | FAIL
    is_integer: bool = False
    is_positive: bool = False
    parity_odd: Optional[bool] = None
    expected_odd: Optional[bool] = None
    reason: Optional[str] = None

    def as_dict(self) -> dict:
        return {
            "id": self.conjecture_id,
            "n": self.n,
            "verdict": self.verdict,
            "is_integer": self.is_integer,
            "is_positive": self.is_positive,
            "parity_odd": self.parity_odd,
            "expected_odd": self.expected_odd,
            "reason": self.reason,
        }


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def expected_parity(pattern: str, n: int) -> bool:
    if pattern == "always_odd":
        return True
    if pattern == "2^a+1":  # a >= 0, so n = 2, 3, 5, 9, ...
        return _is_power_of_two(n - 1)
    if pattern == "2^a":  # a >= 1, so n = 2, 4, 8, ...
        return n >= 2 and _is_power_of_two(n)
    raise ValueError(f"unknown parity pattern {pattern!r}")


def integrality_quotient(spec: dict, n: int) -> Fraction:
    """The exact rational lead * sum / divisor for index n."""
    s = spec["summand"]
    base = int(s["base"])
    alt = bool(s.get("alt", False))
    w0, w1 = int(s.get("w0", 1)), int(s.get("w1", 0))
    t1 = trinomial_prefix(max(n - 1, 0), TrinomialParams(int(s["b1"]), int(s["c1"])))
    t2 = trinomial_prefix(max(2 * (n - 1), 0),
                          TrinomialParams(int(s["b2"]), int(s["c2"])))
    total = 0
    for k in range(n):
        term = ((w0 + w1 * k) * base ** (2 * (n - 1 - k))
                * math.comb(2 * k, k) * t1[k] * t2[2 * k])
        if alt and k % 2:
            term = -term
        total += term
    d = spec["divisor"]
    lead = Fraction(int(d.get("lead", [1, 1])[0]), int(d.get("lead", [1, 1])[1]))
    n_mult = int(d.get("n_mult", 1))
    binom = (math.comb(2 * n, n) if d["binom"] == "2n_n"
             else math.comb(2 * n - 1, n - 1))
    return lead * total / (n_mult * n * binom)


def check_integrality(conjecture_id: str, spec: dict, n: int) -> IntegralityReport:
    if n < int(spec.get("min_n", 1)):
        return IntegralityReport(conjecture_id, n, "SKIP",
                                 reason="below minimum index")
    q = integrality_quotient(spec, n)
    rep = IntegralityReport(conjecture_id, n, "FAIL")
    rep.is_integer = q.denominator == 1
    rep.is_positive = q > 0
    if not rep.is_integer:
        rep.reason = f"quotient not an integer: {q}"
        return rep
    rep.parity_odd = bool(q.numerator % 2)
    rep.expected_odd = expected_parity(spec["parity"], n)
    failures = []
    if spec.get("require_positive", True) and not rep.is_positive:
        failures.append("not positive")
    if rep.parity_odd != rep.expected_odd:
        failures.append(f"parity mismatch (odd={rep.parity_odd}, "
                        f"expected odd={rep.expected_odd})")
    if failures:
        rep.reason = "; ".join(failures)
        return rep
    rep.verdict = "PASS"
    return rep

"""Declarative series summands and their exact per-term evaluation.

A summand spec describes the k-th term of a series as a product of:

* a rational prefactor (integer-coefficient numerator/denominator in k),
* binomial factors C(2k,k), C(3k,k), C(4k,2k), C(6k,3k) with integer exponents,
* generalized central trinomial factors T_{k}(b,c) or T_{2k}(b,c) with exponents,
* a ratio base m contributing m^-k or m^(k-1),
* an optional alternating sign (-1)^k or (-1)^(k-1),
* one or more additive weight blocks, each of the form
  poly(k) * (sum of c_i * H_{arg_i}^{(m_i)}) + offset(k); blocks multiply.
  A block without harmonic factors degenerates to poly(k) + offset(k).

Every factor is exactly evaluable in Q for each k, so terms are exact
Fractions; convergence is checked empirically by the engine, never assumed.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .exact import HarmonicStream, TrinomialParams, trinomial_prefix

BINOMIAL_PATTERNS = {
    "2k_k": (2, 1),
    "3k_k": (3, 1),
    "4k_2k": (4, 2),
    "6k_3k": (6, 3),
}

# harmonic argument forms: name -> (a, b) meaning index a*k + b
HARMONIC_ARGS = {
    "k": (1, 0),
    "k-1": (1, -1),
    "2k": (2, 0),
    "2k-1": (2, -1),
    "3k": (3, 0),
    "3k-1": (3, -1),
    "4k": (4, 0),
}


class SummandError(ValueError):
    pass


def _poly_eval(coeffs: List[int], k: int) -> int:
    out = 0
    for c in reversed(coeffs):
        out = out * k + c
    return out


def _ratfun_eval(spec: Optional[dict], k: int) -> Fraction:
    if spec is None:
        return Fraction(0)
    num = _poly_eval([int(c) for c in spec["num"]], k)
    den = _poly_eval([int(c) for c in spec.get("den", [1])], k)
    if den == 0:
        raise SummandError(f"offset/prefactor denominator vanishes at k={k}")
    return Fraction(num, den)


class SummandEvaluator:
    """Streams exact rational terms of a summand spec, with per-spec caches."""

    def __init__(self, spec: dict):
        self.spec = spec
        self.start = int(spec.get("start", 0))
        if self.start not in (0, 1):
            raise SummandError("start index must be 0 or 1")
        self.prefactor = spec.get("prefactor")
        self.binomials = [
            (BINOMIAL_PATTERNS[b["pattern"]], int(b["exp"]))
            for b in spec.get("binomials", [])
        ]
        self.trinomials = [
            (int(t["mult"]), TrinomialParams(int(t["b"]), int(t["c"])), int(t["exp"]))
            for t in spec.get("trinomials", [])
        ]
        for mult, _, _ in self.trinomials:
            if mult not in (1, 2):
                raise SummandError("trinomial index multiplier must be 1 or 2")
        rb = spec.get("ratio_base")
        self.ratio_base: Optional[Fraction] = None
        self.ratio_mode = spec.get("ratio_mode", "inv_k")
        if rb is not None:
            self.ratio_base = (
                Fraction(int(rb[0]), int(rb[1]))
                if isinstance(rb, (list, tuple))
                else Fraction(int(rb))
            )
            if self.ratio_base == 0:
                raise SummandError("ratio base must be nonzero")
            if self.ratio_mode not in ("inv_k", "pow_km1"):
                raise SummandError(f"unknown ratio mode {self.ratio_mode!r}")
        self.alt_sign = int(spec.get("alt_sign", 0))
        if self.alt_sign not in (-1, 0, 1):
            raise SummandError("alt_sign must be -1, 0 or 1")
        self.blocks = spec.get("blocks", [])
        # caches
        self._tri_cache: Dict[Tuple[int, int, int], List[int]] = {}
        self._harm: Dict[int, HarmonicStream] = {}

    # -- cached kernels -----------------------------------------------------

    def _trinomial(self, mult: int, params: TrinomialParams, k: int) -> int:
        key = (mult, params.b, params.c)
        n = mult * k
        seq = self._tri_cache.get(key)
        if seq is None or len(seq) <= n:
            grow = max(n, 2 * (len(seq) if seq else 16))
            seq = trinomial_prefix(grow, params)
            self._tri_cache[key] = seq
        return seq[n]

    def _harmonic(self, order: int, n: int) -> Fraction:
        stream = self._harm.get(order)
        if stream is None:
            stream = self._harm[order] = HarmonicStream(order)
        return stream.value(n)

    # -- evaluation ---------------------------------------------------------

    def _block_value(self, block: dict, k: int) -> Fraction:
        harmonics = block.get("harmonics", [])
        if harmonics:
            hsum = Fraction(0)
            for h in harmonics:
                a, b = HARMONIC_ARGS[h["arg"]]
                n = a * k + b
                if n < 0:
                    raise SummandError(f"harmonic index negative at k={k}")
                hsum += int(h["coef"]) * self._harmonic(int(h.get("order", 1)), n)
        else:
            hsum = Fraction(1)
        poly = block.get("poly", [1])
        val = _poly_eval([int(c) for c in poly], k) * hsum
        if "offset" in block and block["offset"] is not None:
            val += _ratfun_eval(block["offset"], k)
        return val

    def term(self, k: int) -> Fraction:
        """Exact value of the k-th term."""
        val = Fraction(1)
        if self.prefactor is not None:
            val *= _ratfun_eval(self.prefactor, k)
        for (top, bot), e in self.binomials:
            b = math.comb(top * k, bot * k)
            if e >= 0:
                val *= Fraction(b**e)
            else:
                if b == 0:
                    raise SummandError(f"binomial zero in denominator at k={k}")
                val *= Fraction(1, b**-e)
        for mult, params, e in self.trinomials:
            t = self._trinomial(mult, params, k)
            if e >= 0:
                val *= Fraction(t) ** e
            else:
                if t == 0:
                    raise SummandError(f"trinomial zero in denominator at k={k}")
                val *= Fraction(1, 1) / Fraction(t) ** (-e)
        if self.ratio_base is not None:
            if self.ratio_mode == "inv_k":
                val *= self.ratio_base ** (-k)
            else:  # pow_km1
                val *= self.ratio_base ** (k - 1)
        if self.alt_sign == 1 and k % 2 == 1:
            val = -val
        elif self.alt_sign == -1 and k % 2 == 0:
            val = -val
        for block in self.blocks:
            val *= self._block_value(block, k)
        return val

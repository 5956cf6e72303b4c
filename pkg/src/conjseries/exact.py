"""Exact integer/rational kernels: binomials, generalized central trinomial
coefficients and harmonic numbers.

Everything here is computed with Python's arbitrary-precision integers and
``fractions.Fraction``; results are exact.  All values are immutable and the
functions are pure, so they are safe to call from concurrent workers.  Prefix
caches (trinomial sequences, harmonic streams) are owned by their caller.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List


@dataclass(frozen=True)
class TrinomialParams:
    """Parameters (b, c) of the trinomial x^2 + b*x + c.

    The discriminant b^2 - 4c is kept as a diagnostic; it is not enforced to
    be nonzero (the series catalog records its own admissibility conditions).
    """

    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.c


def binomial(n: int, k: int) -> int:
    """C(n, k) with the summation convention C(n, k) = 0 for k < 0 or k > n."""
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def trinomial_direct(n: int, params: TrinomialParams) -> int:
    """T_n(b, c) via the closed sum over C(n, 2j) * C(2j, j) * b^(n-2j) * c^j."""
    if n < 0:
        raise ValueError("trinomial requires n >= 0")
    b, c = params.b, params.c
    total = 0
    for j in range(n // 2 + 1):
        total += math.comb(n, 2 * j) * math.comb(2 * j, j) * b ** (n - 2 * j) * c**j
    return total


def trinomial_prefix(n: int, params: TrinomialParams) -> List[int]:
    """[T_0, ..., T_n] via the three-term recurrence.

    (k+1) T_{k+1} = (2k+1) b T_k - k (b^2 - 4c) T_{k-1}, with T_0 = 1, T_1 = b.
    The division by k+1 is exact over the integers.
    """
    if n < 0:
        raise ValueError("trinomial requires n >= 0")
    b = params.b
    disc = params.discriminant
    seq = [1]
    if n >= 1:
        seq.append(b)
    for k in range(1, n):
        num = (2 * k + 1) * b * seq[k] - k * disc * seq[k - 1]
        q, r = divmod(num, k + 1)
        if r:
            raise ArithmeticError(f"trinomial recurrence not integral at k={k}")
        seq.append(q)
    return seq


def trinomial(n: int, params: TrinomialParams, mode: str = "recurrence") -> int:
    """T_n(b, c), the coefficient of x^n in (x^2 + b*x + c)^n.

    ``mode`` selects the recurrence (used by the series engines, which consume
    whole prefixes) or the direct sum (the independent oracle).
    """
    if mode == "direct":
        return trinomial_direct(n, params)
    if mode == "recurrence":
        return trinomial_prefix(n, params)[n]
    raise ValueError(f"unknown trinomial mode {mode!r}")


def harmonic(n: int, order: int = 1) -> Fraction:
    """H_n^(order) = sum_{0 < k <= n} k^(-order), exactly."""
    if n < 0:
        raise ValueError("harmonic requires n >= 0")
    if order < 1:
        raise ValueError("harmonic requires order >= 1")
    total = Fraction(0)
    for k in range(1, n + 1):
        total += Fraction(1, k**order)
    return total


class HarmonicStream:
    """Incrementally extended harmonic numbers of a fixed order.

    ``value(n)`` returns H_n^(m) exactly, extending the internal prefix as
    needed; extension from H_n to H_{n+1} costs a single Fraction addition.
    """

    def __init__(self, order: int = 1):
        if order < 1:
            raise ValueError("harmonic order must be >= 1")
        self.order = order
        self._values: List[Fraction] = [Fraction(0)]

    def value(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("harmonic index must be >= 0")
        vals = self._values
        while len(vals) <= n:
            k = len(vals)
            vals.append(vals[-1] + Fraction(1, k**self.order))
        return vals[n]


def primes_up_to(limit: int) -> Iterator[int]:
    """Primes <= limit by a simple sieve."""
    if limit < 2:
        return
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * len(sieve[p * p :: p])
    for p in range(2, limit + 1):
        if sieve[p]:
            yield p

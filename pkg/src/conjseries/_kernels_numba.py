"""Numba-jitted kernels for modular congruence sums.

Same contract as ``_kernels_numpy``; the hot loops carry ``@njit``.  All
residues are reduced mod p^2 <= 300^2, so int64 never overflows.
"""

from __future__ import annotations

import numpy as np
from numba import njit

BACKEND = "numba"


@njit(cache=True)
def _pascal_table(nmax: int, mod: int) -> np.ndarray:
    table = np.zeros((nmax + 1, nmax + 1), dtype=np.int64)
    table[0, 0] = 1
    for n in range(1, nmax + 1):
        table[n, 0] = 1
        for r in range(1, n + 1):
            table[n, r] = (table[n - 1, r] + table[n - 1, r - 1]) % mod
    return table


@njit(cache=True)
def _trinomial_table(nmax: int, b: int, c: int, mod: int,
                     pascal: np.ndarray) -> np.ndarray:
    b %= mod
    c %= mod
    jmax = nmax // 2
    bp = np.zeros(nmax + 1, dtype=np.int64)
    bp[0] = 1 % mod
    for i in range(1, nmax + 1):
        bp[i] = bp[i - 1] * b % mod
    central_c = np.zeros(jmax + 1, dtype=np.int64)
    cj = 1 % mod
    for j in range(jmax + 1):
        central_c[j] = pascal[2 * j, j] * cj % mod
        cj = cj * c % mod
    out = np.zeros(nmax + 1, dtype=np.int64)
    for n in range(nmax + 1):
        acc = 0
        for j in range(n // 2 + 1):
            acc = (acc + pascal[n, 2 * j] * central_c[j] % mod
                   * bp[n - 2 * j]) % mod
        out[n] = acc
    return out


@njit(cache=True)
def _congruence_sum(p: int, mod: int, b1: int, c1: int, b2: int, c2: int,
                    w0: int, w1: int, inv_base: int) -> int:
    nmax = max(2 * (p - 1), 1)
    pascal = _pascal_table(nmax, mod)
    t1 = _trinomial_table(p - 1, b1, c1, mod, pascal)
    t2 = _trinomial_table(nmax, b2, c2, mod, pascal)
    acc = 0
    invp = 1 % mod
    for k in range(p):
        term = pascal[2 * k, k] * t1[k] % mod
        term = term * t2[2 * k] % mod
        term = term * ((w0 + w1 * k) % mod) % mod
        term = term * invp % mod
        acc = (acc + term) % mod
        invp = invp * inv_base % mod
    return acc


def pascal_table(nmax: int, mod: int) -> np.ndarray:
    return _pascal_table(nmax, mod)


def trinomial_table(nmax: int, b: int, c: int, mod: int,
                    pascal: np.ndarray) -> np.ndarray:
    return _trinomial_table(nmax, b, c, mod, pascal)


def congruence_sum_kernel(p: int, mod: int, b1: int, c1: int, b2: int, c2: int,
                          w0: int, w1: int, inv_base: int) -> int:
    return int(_congruence_sum(p, mod, b1, c1, b2, c2, w0, w1, inv_base))

"""Pure-numpy kernels for modular congruence sums.

All values live in Z/mod with mod = p or p^2 <= 300^2, so every intermediate
product of two reduced residues fits comfortably in int64.
"""

from __future__ import annotations

import numpy as np

BACKEND = "numpy"


def pascal_table(nmax: int, mod: int) -> np.ndarray:
    """C[n, r] = binomial(n, r) mod ``mod`` for 0 <= r <= n <= nmax."""
    table = np.zeros((nmax + 1, nmax + 1), dtype=np.int64)
    table[0, 0] = 1
    for n in range(1, nmax + 1):
        table[n, 0] = 1
        table[n, 1 : n + 1] = (table[n - 1, 1 : n + 1] + table[n - 1, 0:n]) % mod
    return table


def trinomial_table(nmax: int, b: int, c: int, mod: int,
                    pascal: np.ndarray) -> np.ndarray:
    """T_n(b, c) mod ``mod`` for n <= nmax, via the direct binomial sum.

    No divisions occur, so b, c and all indices may share factors with mod.
    """
    b %= mod
    c %= mod
    jmax = nmax // 2
    bp = np.zeros(nmax + 1, dtype=np.int64)
    cp = np.zeros(jmax + 1, dtype=np.int64)
    bp[0] = 1 % mod
    for i in range(1, nmax + 1):
        bp[i] = bp[i - 1] * b % mod
    cp[0] = 1 % mod
    for i in range(1, jmax + 1):
        cp[i] = cp[i - 1] * c % mod
    # central[j] * c^j, shared across rows
    j_idx = np.arange(jmax + 1)
    central_c = pascal[2 * j_idx, j_idx] * cp % mod
    out = np.zeros(nmax + 1, dtype=np.int64)
    for n in range(nmax + 1):
        j = np.arange(n // 2 + 1)
        terms = pascal[n, 2 * j] * central_c[: n // 2 + 1] % mod
        terms = terms * bp[n - 2 * j] % mod
        out[n] = int(terms.sum() % mod)
    return out


def congruence_sum_kernel(p: int, mod: int, b1: int, c1: int, b2: int, c2: int,
                          w0: int, w1: int, inv_base: int) -> int:
    """sum_{k<p} (w0 + w1*k) * C(2k,k) * T_k(b1,c1) * T_2k(b2,c2) * inv^k."""
    nmax = max(2 * (p - 1), 1)
    pascal = pascal_table(nmax, mod)
    k = np.arange(p, dtype=np.int64)
    central = pascal[2 * k, k]
    t1 = trinomial_table(p - 1, b1, c1, mod, pascal)
    t2 = trinomial_table(nmax, b2, c2, mod, pascal)
    weights = (w0 + w1 * k) % mod
    invp = np.zeros(p, dtype=np.int64)
    invp[0] = 1 % mod
    for i in range(1, p):
        invp[i] = invp[i - 1] * inv_base % mod
    acc = central * t1 % mod
    acc = acc * np.take(t2, 2 * k) % mod
    acc = acc * weights % mod
    acc = acc * invp % mod
    return int(acc.sum() % mod)

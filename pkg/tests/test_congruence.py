import importlib
import math
import os
import subprocess
import sys
from fractions import Fraction

import numpy as np
import pytest

from conjseries import _kernels_numpy as knp
from conjseries.congruence import (BadPrime, check_congruence,
                                   check_integrality, congruence_sum,
                                   congruence_sum_oracle, expected_parity,
                                   integrality_quotient, jacobi,
                                   kernel_backend, represent_form)
from conjseries.exact import TrinomialParams, primes_up_to, trinomial_prefix
from conjseries.registry import builtin_catalog

try:
    from conjseries import _kernels_numba as knb
except ImportError:  # pragma: no cover
    knb = None


def test_pascal_table_row_sums_and_values():
    mod = 10**9 + 7
    t = knp.pascal_table(40, mod)
    for n in range(41):
        assert int(t[n, : n + 1].sum() % mod) == pow(2, n, mod)
        for r in (0, 1, n // 2, n):
            assert int(t[n, r]) == math.comb(n, r) % mod


@pytest.mark.parametrize("p", [3, 7, 13])
@pytest.mark.parametrize("b,c", [(1, -12), (8, -3), (37, 36)])
def test_trinomial_table_mod_p2_vs_exact(p, b, c):
    mod = p * p
    nmax = 2 * (p - 1)
    pas = knp.pascal_table(nmax, mod)
    tab = knp.trinomial_table(nmax, b, c, mod, pas)
    exact = trinomial_prefix(nmax, TrinomialParams(b, c))
    for n in range(nmax + 1):
        assert int(tab[n]) == exact[n] % mod


@pytest.mark.parametrize("eid", ["G2.2ii", "G2.4ii", "G2.7i", "G2.11ii"])
@pytest.mark.parametrize("p", [3, 7, 11, 13])
def test_congruence_sum_vs_bigint_oracle(eid, p):
    spec = builtin_catalog().by_id(eid).payload
    if spec["summand"]["base"] % p == 0:
        pytest.skip("p divides base")
    assert congruence_sum(spec, p) == congruence_sum_oracle(spec, p)


def test_congruence_sum_rejects_bad_primes():
    spec = builtin_catalog().by_id("G2.2ii").payload
    with pytest.raises(BadPrime):
        congruence_sum(spec, 19)  # 19 | 5776
    with pytest.raises(BadPrime):
        congruence_sum(spec, 2)


def test_jacobi_vs_euler_criterion():
    for p in primes_up_to(60):
        if p == 2:
            continue
        for a in range(1, p):
            assert jacobi(a, p) % p == pow(a, (p - 1) // 2, p)


def test_jacobi_composite_bottom_multiplicative():
    for a in range(1, 40):
        if math.gcd(a, 15) == 1:
            assert jacobi(a, 15) == jacobi(a, 3) * jacobi(a, 5)
        else:
            assert jacobi(a, 15) == 0
    with pytest.raises(ValueError):
        jacobi(3, 8)


def test_represent_form():
    # 13 = 1 + 4*3 -> x=1, y under x^2 + 4 y^2 ... use alpha=1 beta=4
    w = represent_form(17, 1, 4)
    assert w is not None and w[0] ** 2 + 4 * w[1] ** 2 == 17
    # no representation: 3 = x^2 + 4 y^2 is impossible
    assert represent_form(3, 1, 4) is None
    # ndiv constraint: x not divisible by 3
    w = represent_form(13, 1, 3, [{"kind": "ndiv", "var": "x", "nu": 3}])
    assert w is not None and w[0] % 3 != 0
    assert w[0] ** 2 + 3 * w[1] ** 2 == 13


@pytest.mark.skipif(knb is None, reason="numba not installed")
def test_numba_and_numpy_backends_agree():
    spec = builtin_catalog().by_id("G2.2ii").payload["summand"]
    for p in [3, 5, 7, 11, 13, 17, 23, 29]:
        mod = p * p
        inv = pow(spec["base"] % mod, -1, mod)
        args = (p, mod, spec["b1"], spec["c1"], spec["b2"], spec["c2"],
                spec.get("w0", 1), spec.get("w1", 0), inv)
        assert knp.congruence_sum_kernel(*args) == \
            knb.congruence_sum_kernel(*args)


def test_backend_env_flag_selects_numpy():
    code = ("import conjseries.congruence as c; "
            "print(c.kernel_backend())")
    env = dict(os.environ, CONJSERIES_NO_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"
    assert kernel_backend() in ("numpy", "numba")


def test_check_congruence_case_dispatch_and_witness():
    spec = builtin_catalog().by_id("G2.2ii").payload
    # 13 = 9 + 4 -> x=3, y=1 case; 7 has (-1/7) = -1 -> zero case
    rep = check_congruence("G2.2ii", spec, 13)
    assert rep.verdict == "PASS" and rep.witness is not None
    x, y = rep.witness
    assert x * x + 4 * y * y == 13
    rep7 = check_congruence("G2.2ii", spec, 7)
    assert rep7.verdict == "PASS"
    assert check_congruence("G2.2ii", spec, 19).verdict == "SKIP"


def test_expected_parity_patterns():
    assert [n for n in range(1, 18) if expected_parity("2^a+1", n)] == \
        [2, 3, 5, 9, 17]
    assert [n for n in range(1, 17) if expected_parity("2^a", n)] == \
        [2, 4, 8, 16]
    assert all(expected_parity("always_odd", n) for n in range(1, 10))
    with pytest.raises(ValueError):
        expected_parity("nope", 3)


def test_integrality_quotient_and_check():
    entry = next(e for e in builtin_catalog().entries
                 if e.kind == "integrality")
    spec = entry.payload
    for n in range(1, 12):
        q = integrality_quotient(spec, n)
        rep = check_integrality(entry.id, spec, n)
        if rep.verdict == "PASS":
            assert q.denominator == 1
            assert (q.numerator % 2 == 1) == rep.expected_odd

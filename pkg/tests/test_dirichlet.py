import math

import numpy as np
import pytest

from linniklab.arith import r2, sieve_primes
from linniklab.dirichlet import (
    chi_phi_partial,
    f_zero,
    linnik_constant,
    linnik_empirical,
    n_s,
)
from linniklab.errors import DomainError


def test_n_s_small_truncations(table4):
    # p=2 contributes factor 1; p=3 gives 1 − 1/(3·2); p=5 gives 1 + 1/(5·4)
    assert n_s(0.0, 2, table4).value == 1.0
    assert abs(n_s(0.0, 3, table4).value - 5.0 / 6.0) < 1e-15
    assert abs(n_s(0.0, 5, table4).value - 0.875) < 1e-15
    # s = 1: p=3 term is 1 − 1/(9·2), p=5 term 1 + 1/(25·4)
    want = (1.0 - 1.0 / 18.0) * (1.0 + 1.0 / 100.0)
    assert abs(n_s(1.0, 5, table4).value - want) < 1e-15


def test_n_s_tail_bound_is_honest(table6):
    # the certified bound must cover the actual movement when the cutoff
    # grows tenfold
    for pmax in (100, 1000, 10_000):
        a = n_s(0.0, pmax, table6)
        b = n_s(0.0, 10 * pmax, table6)
        moved = abs(math.log(a.value) - math.log(b.value))
        assert moved <= a.tail_bound
        assert a.tail_bound == 2.0 / pmax
    # higher s: tail 2/(s+1)·pmax^-(s+1)
    a = n_s(1.0, 100, table6)
    b = n_s(1.0, 1000, table6)
    assert abs(math.log(a.value) - math.log(b.value)) <= a.tail_bound
    assert a.tail_bound == 1.0 / 100.0**2


def test_n_s_bracket_consistency(table6, table7):
    a = n_s(0.0, 10**6, table6)
    b = n_s(0.0, 10**7, table7)
    lo, hi = a.bracket()
    assert lo <= b.value <= hi
    lo7, hi7 = b.bracket()
    assert hi7 - lo7 < hi - lo  # tighter truncation, tighter bracket


def test_constant_identities(table6):
    # power-of-two scaling commutes with rounding: the 4× identity is bitwise
    assert linnik_constant(10**6, table6) == 4.0 * f_zero(10**6, table6)
    assert f_zero(10**6, table6) == 0.25 * math.pi * n_s(0.0, 10**6, table6).value
    # rough magnitude pin: f(0) is a positive density below 1
    assert 0.3 < f_zero(10**6, table6) < 0.9


def test_chi_phi_small_values(table4):
    # by hand: 1 − 1/2 + 1/4 − 1/6 + 1/6 = 3/4
    [(d, v)] = chi_phi_partial(10, table4)
    assert d == 10 and abs(v - 0.75) < 1e-15
    # checkpoints slice the same cumulative sum
    pts = chi_phi_partial(100, table4, checkpoints=[1, 2, 10, 99, 100])
    assert pts[0] == (1, 1.0)
    assert pts[1] == (2, 1.0)          # even d contributes nothing
    assert abs(pts[2][1] - 0.75) < 1e-15
    assert pts[3][1] == pts[4][1]      # 100 is even
    seq = chi_phi_partial(100, table4, checkpoints=list(range(1, 101)))
    direct = 0.0
    for d in range(1, 101):
        if d % 2 == 1:
            phi = sum(1 for k in range(1, d + 1) if math.gcd(k, d) == 1)
            direct += (1.0 if d % 4 == 1 else -1.0) / phi
        assert abs(seq[d - 1][1] - direct) < 1e-12


def test_chi_phi_converges_to_f_zero(table6):
    tail = chi_phi_partial(10**4, table6)[0][1]
    assert abs(tail - f_zero(10**6, table6)) < 1e-3


def test_chi_phi_validation(table4):
    with pytest.raises(DomainError):
        chi_phi_partial(0, table4)
    with pytest.raises(DomainError):
        chi_phi_partial(10, table4, checkpoints=[11])
    with pytest.raises(DomainError):
        chi_phi_partial(10, table4, checkpoints=[0])


def test_n_s_validation(table4):
    with pytest.raises(DomainError):
        n_s(-0.5, 100, table4)
    with pytest.raises(DomainError):
        n_s(0.0, 1, table4)
    with pytest.raises(DomainError):
        n_s(0.0, 2 * 10**4, table4)


def test_linnik_empirical(table4):
    rep = linnik_empirical(table4, 1e4)
    direct = sum(r2(int(p) - 1, table4) for p in table4.primes)
    assert rep["sum"] == direct
    want_main = linnik_constant(10**4, table4) * 1e4 / math.log(1e4)
    assert abs(rep["main_term"] - want_main) < 1e-12 * want_main
    assert rep["ratio"] == rep["sum"] / rep["main_term"]
    # desk-scale sanity: arithmetic count within 2x of the main term
    assert 0.5 < rep["ratio"] < 2.0
    with pytest.raises(DomainError):
        linnik_empirical(table4, 2.0)
    with pytest.raises(DomainError):
        linnik_empirical(table4, 2e4)

"""Euler products and partial sums behind the main-term constant.

Everything here orbits one analytic object: with χ the nonprincipal
character mod 4,

    N(s) = Π_p (1 + χ(p) / (p^{s+1}·(p−1))),

whose value at s = 0, times π/4 (which is L(1,χ)), is the density constant
f(0) governing how often p−1 is a sum of two squares; π·N(0) is the
constant in front of X/ln X for the count weighted by representations.

Truncations carry certified tail bounds: for P ≥ 2,

    |log N(s) − log N_P(s)| ≤ Σ_{p>P} |log(1 + u_p)|
                            ≤ 1.2 · Σ_{n>P} 1/(n^{s+1}(n−1))
                            ≤ 1.2 · (4/3) · Σ_{n>P} n^{-(s+2)}
                            ≤ 1.6 · ∫_P^∞ t^{-(s+2)} dt
                            ≤ 2/(s+1) · P^{-(s+1)},

using |log(1+u)| ≤ 1.2|u| for |u| ≤ 1/6 (true for every p ≥ 3), n−1 ≥ 3n/4
for n ≥ 4, and n^{-(s+2)} ≤ ∫_{n−1}^n t^{-(s+2)} dt.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arith import PrimeTable, chi_vec, r2_bulk
from .errors import DomainError


@dataclass(frozen=True)
class EulerProductApprox:
    s: float
    pmax: int
    value: float
    tail_bound: float     # bound on |log(true/value)|

    def bracket(self) -> tuple[float, float]:
        return (self.value * math.exp(-self.tail_bound),
                self.value * math.exp(self.tail_bound))


def n_s(s: float, pmax: int, table: PrimeTable) -> EulerProductApprox:
    """Truncated Euler product N(s) over p ≤ pmax with certified tail."""
    if s < 0:
        raise DomainError(f"s must be ≥ 0, got {s}")
    if pmax < 2:
        raise DomainError(f"pmax must be ≥ 2, got {pmax}")
    if pmax > table.limit:
        raise DomainError(f"pmax={pmax} exceeds table limit {table.limit}")
    n = table.prime_count(pmax)
    ps = table.primes[:n].astype(np.float64)
    terms = chi_vec(table.primes[:n]) / (ps ** (s + 1.0) * (ps - 1.0))
    value = math.exp(float(np.sum(np.log1p(terms))))
    tail = 2.0 / (s + 1.0) * pmax ** (-(s + 1.0))
    return EulerProductApprox(s=s, pmax=pmax, value=value, tail_bound=tail)


def f_zero(pmax: int, table: PrimeTable) -> float:
    """f(0) = L(1,χ)·N(0) = (π/4)·N(0), truncated at pmax."""
    return 0.25 * math.pi * n_s(0.0, pmax, table).value


def linnik_constant(pmax: int, table: PrimeTable) -> float:
    """π·N(0) = 4·f(0) — same truncation, so the 4× identity holds bitwise."""
    return math.pi * n_s(0.0, pmax, table).value


def chi_phi_partial(dmax: int, table: PrimeTable,
                    checkpoints: list[int] | None = None) -> list[tuple[int, float]]:
    """Partial sums Σ_{d ≤ D} χ(d)/φ(d) at each checkpoint D.

    χ(d)/φ(d) is multiplicative with Euler factor (p(p−1)+χ(p)) /
    ((p−1)(p−χ(p))), which is algebraically identical to the factor of
    L(1,χ)·N(0) — so the series converges (slowly, oscillating) to f(0).
    The partial sums let callers watch that convergence directly.
    """
    if dmax < 1:
        raise DomainError(f"Dmax must be ≥ 1, got {dmax}")
    if checkpoints is None:
        checkpoints = [dmax]
    if any(not 1 <= c <= dmax for c in checkpoints):
        raise DomainError(f"checkpoints must lie in [1, {dmax}]")
    phi = np.arange(dmax + 1, dtype=np.int64)
    for p in range(2, dmax + 1):
        if phi[p] == p:                      # p untouched so far ⇒ prime
            phi[p::p] -= phi[p::p] // p
    d = np.arange(dmax + 1, dtype=np.int64)
    terms = np.zeros(dmax + 1)
    odd = d[1:][d[1:] % 2 == 1]
    signs = np.where(odd % 4 == 1, 1.0, -1.0)
    terms[odd] = signs / phi[odd]
    partial = np.cumsum(terms)
    return [(int(c), float(partial[c])) for c in checkpoints]


def linnik_empirical(table: PrimeTable, x: float) -> dict:
    """Σ_{p ≤ X} r(p−1) against its predicted main term π·N(0)·X/ln X."""
    if x <= 2 or x > table.limit:
        raise DomainError(f"X must lie in (2, {table.limit}], got {x}")
    n = table.prime_count(x)
    ps = table.primes[:n]
    total = int(np.sum(r2_bulk(ps - 1, table)))
    main = linnik_constant(table.limit, table) * x / math.log(x)
    return {"sum": total, "main_term": main, "ratio": total / main}

"""Prime tables and quadratic-character arithmetic.

Everything downstream leans on one sieve pass: a smallest-prime-factor table
over [0, limit] gives O(log n) factorisation, which in turn gives

    χ(n)   the non-principal character mod 4 (+1, −1, 0 for n ≡ 1, 3, 0 mod 2),
    r₂(n)  = 4·Σ_{d|n} χ(d), the number of ways to write n = m₁² + m₂²
             counting signs and order,
    φ(n)   Euler's totient,

and divisor enumeration restricted to a window, which is what the divisor
split of the triple-sum engine consumes.  A prime p is called a *Linnik
prime* here when p − 1 = x² + y² has a solution in integers; r₂(p−1) > 0 is
the equivalent character-sum test, and ``linnik_witness`` produces the actual
(x, y) pair by an integer square scan so the two routes can be checked
against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, ResourceError

# Default cap on sieve size: spf table is 4 bytes per slot.
MEMORY_BUDGET = 2**31


@dataclass
class PrimeTable:
    """Sieve products for [2, limit]: primes, their logs, and smallest prime factors."""

    limit: int
    primes: np.ndarray            # int64, ascending
    log_weights: np.ndarray       # float64, log_weights[i] = ln(primes[i])
    spf: np.ndarray               # int32, spf[n] = smallest prime factor of n (spf[1] = 1)
    _log_cumsum: np.ndarray | None = field(default=None, repr=False)

    @property
    def log_cumsum(self) -> np.ndarray:
        """Prefix sums of log_weights; log_cumsum[i] = Σ_{j<i} ln p_j."""
        if self._log_cumsum is None:
            cs = np.zeros(len(self.primes) + 1)
            np.cumsum(self.log_weights, out=cs[1:])
            self._log_cumsum = cs
        return self._log_cumsum

    def prime_count(self, x: float) -> int:
        """π(x) for x ≤ limit."""
        return int(np.searchsorted(self.primes, x, side="right"))

    def chebyshev_theta(self, x: float) -> float:
        """θ(x) = Σ_{p ≤ x} ln p."""
        return float(self.log_cumsum[self.prime_count(x)])

    def prime_slice(self, lo: float, hi: float) -> slice:
        """Index slice of primes in the half-open interval (lo, hi]."""
        i = int(np.searchsorted(self.primes, lo, side="right"))
        j = int(np.searchsorted(self.primes, hi, side="right"))
        return slice(i, j)

    def is_prime(self, n: int) -> bool:
        if n < 2 or n > self.limit:
            if n > self.limit:
                raise DomainError(f"n={n} exceeds table limit {self.limit}")
            return False
        return int(self.spf[n]) == n


def sieve_primes(limit: int, memory_budget: int = MEMORY_BUDGET) -> PrimeTable:
    """Build a PrimeTable up to ``limit`` with a smallest-prime-factor sieve.

    The sieve walks primes p ≤ √limit; a composite n is first touched by its
    smallest prime factor because n ≥ spf(n)².
    """
    if limit < 2:
        raise DomainError(f"limit must be ≥ 2, got {limit}")
    if limit + 1 > memory_budget:
        raise ResourceError(
            f"sieve of {limit + 1} slots exceeds memory budget {memory_budget}"
        )
    spf = np.zeros(limit + 1, dtype=np.int32)
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    # untouched n ≥ 2 are prime; give 0 and 1 harmless self-values
    rest = np.nonzero(spf == 0)[0]
    spf[rest] = rest
    spf[0] = 1 if limit >= 1 else 0
    primes = rest[rest >= 2].astype(np.int64)
    log_weights = np.log(primes.astype(np.float64))
    return PrimeTable(limit=limit, primes=primes, log_weights=log_weights, spf=spf)


def chi(n: int) -> int:
    """Non-principal character mod 4: +1 for n ≡ 1, −1 for n ≡ 3, 0 for even n."""
    if n <= 0:
        raise DomainError(f"chi needs n ≥ 1, got {n}")
    r = n & 3
    if r == 1:
        return 1
    if r == 3:
        return -1
    return 0


def chi_vec(n: np.ndarray) -> np.ndarray:
    """Vector χ for positive integer arrays."""
    r = np.asarray(n) & 3
    return np.where(r == 1, 1, np.where(r == 3, -1, 0)).astype(np.int64)


def factorize(n: int, table: PrimeTable) -> list[tuple[int, int]]:
    """Prime factorisation [(p, e), …] via the spf table; ascending p."""
    if n < 1 or n > table.limit:
        raise DomainError(f"factorize needs 1 ≤ n ≤ {table.limit}, got {n}")
    out: list[tuple[int, int]] = []
    spf = table.spf
    while n > 1:
        p = int(spf[n])
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        out.append((p, e))
    return out


def euler_phi(n: int, table: PrimeTable) -> int:
    """Euler totient from the factorisation."""
    val = 1
    for p, e in factorize(n, table):
        val *= (p - 1) * p ** (e - 1)
    return val


def r2(n: int, table: PrimeTable) -> int:
    """r₂(n) = 4·Σ_{d|n} χ(d) = signed/ordered count of n = m₁² + m₂².

    The divisor character sum is multiplicative: a factor p^e contributes
    Σ_{i≤e} χ(p)^i, i.e. e+1 when p ≡ 1 (mod 4), the parity of e when
    p ≡ 3 (mod 4), and 1 for p = 2.
    """
    sig = 1
    for p, e in factorize(n, table):
        c = chi(p) if p != 2 else 0
        if c == 1:
            sig *= e + 1
        elif c == -1 and e % 2 == 1:
            return 0
    return 4 * sig


def _ppow_chi_sum(p: np.ndarray, e: np.ndarray) -> np.ndarray:
    """Vector Σ_{i≤e} χ(p)^i for prime-power runs; p = 0 marks 'no run' → 1."""
    r = p & 3
    out = np.ones(p.shape, dtype=np.int64)
    out = np.where(r == 1, e + 1, out)
    out = np.where((r == 3) & (e % 2 == 1), 0, out)
    return out


def r2_bulk(ns: np.ndarray, table: PrimeTable) -> np.ndarray:
    """Vectorised r₂ over an integer array, by repeated spf division.

    Each pass divides every still-active entry by its current smallest prime
    factor, so the number of passes is bounded by max Ω(n) (≤ 24 below 10⁷).
    """
    m = np.ascontiguousarray(ns, dtype=np.int64).copy()
    if m.size == 0:
        return np.zeros(0, dtype=np.int64)
    if int(m.min()) < 1 or int(m.max()) > table.limit:
        raise DomainError("r2_bulk inputs must lie in [1, table.limit]")
    sig = np.ones(m.shape, dtype=np.int64)
    cur_p = np.zeros(m.shape, dtype=np.int64)
    cur_e = np.zeros(m.shape, dtype=np.int64)
    spf = table.spf
    idx = np.nonzero(m > 1)[0]
    while idx.size:
        p = spf[m[idx]].astype(np.int64)
        fresh = p != cur_p[idx]
        ch = idx[fresh]
        if ch.size:
            sig[ch] *= _ppow_chi_sum(cur_p[ch], cur_e[ch])
            cur_p[ch] = p[fresh]
            cur_e[ch] = 0
        cur_e[idx] += 1
        m[idx] //= p
        idx = idx[m[idx] > 1]
    sig *= _ppow_chi_sum(cur_p, cur_e)
    return 4 * sig


def linnik_witness(p: int, table: PrimeTable) -> tuple[int, int] | None:
    """Least witness (x, y), x ≤ y, with p − 1 = x² + y², or None.

    Integer-only scan: x ascends while 2x² ≤ p − 1, y = isqrt(p − 1 − x²) is
    accepted iff it squares back exactly.  Exists iff r₂(p − 1) > 0.
    """
    if p < 2 or p > table.limit or not table.is_prime(p):
        raise DomainError(f"linnik_witness needs a prime ≤ {table.limit}, got {p}")
    n = p - 1
    x = 0
    while 2 * x * x <= n:
        y2 = n - x * x
        y = math.isqrt(y2)
        if y * y == y2:
            return (x, y)
        x += 1
    return None


def divisors(n: int, table: PrimeTable) -> list[int]:
    """All divisors of n, ascending."""
    ds = [1]
    for p, e in factorize(n, table):
        ds = [d * p**i for d in ds for i in range(e + 1)]
    ds.sort()
    return ds


def divisors_in_range(
    n: int,
    lo: float,
    hi: float,
    table: PrimeTable,
    include_lo: bool = False,
    include_hi: bool = False,
) -> list[int]:
    """Divisors of n in the window (lo, hi); endpoint flags close the ends."""
    out = []
    for d in divisors(n, table):
        above = d >= lo if include_lo else d > lo
        below = d <= hi if include_hi else d < hi
        if above and below:
            out.append(d)
    return out

"""Triple-sum engine for the weighted counts over prime triples.

The central objects, for an instance (λ₁, λ₂, λ₃, η, ε, λ₀, X):

    Γ(X)  = Σ r(p₃−1)·ln p₁ ln p₂ ln p₃   over λ₀X < p₁,p₂,p₃ ≤ X
            with |λ₁p₁ + λ₂p₂ + λ₃p₃ + η| < ε  (sharp window),
    Γ₀(X) = the same sum with the sharp window replaced by the smooth
            weight θ(λ₁p₁ + λ₂p₂ + λ₃p₃ + η),

and the split of Γ₀ obtained by expanding r(p₃−1) = 4·Σ_{d|p₃−1} χ(d) and
cutting the divisor range at D and X/D:

    Γ₀ = 4·(Γ₁ + Γ₂ + Γ₃),   d ≤ D  |  D < d < X/D  |  d ≥ X/D.

The identity is exact term by term, so it survives any floating threshold
choice; checking it to 1e−9 relative is the engine's primary self-test.

Algorithm: sort {λ₃p₃} once with prefix sums of the p₃ weights; every
(p₁,p₂) pair then reduces to two binary searches, O(P² log P) total for
P = π(X) − π(λ₀X).  The pair range is cut into fixed 64-row chunks whose
partial sums are combined in chunk order with exact compensated summation,
so results are bit-identical for any thread count.
"""

from __future__ import annotations

import math
import time
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np
from scipy.integrate import quad

from .arith import PrimeTable, chi, divisors, linnik_witness, r2_bulk
from .errors import DomainError, NumericError, ResourceError
from .smoothing import SmoothingKernel, theta_antiderivative, theta_eval

WORK_BUDGET = 2**31        # max (p1,p2) pair evaluations per call
HITS_BUDGET = 2**26        # max materialized in-window triples per call
_ROWS = 64                 # fixed chunk height; independent of thread count


@dataclass(frozen=True)
class Instance:
    """One experiment: the form coefficients, shift, window, and scale."""

    lambda1: float
    lambda2: float
    lambda3: float
    eta: float
    eps: float
    x: float
    lambda0: float = 0.5
    ratio_irrational: bool = False   # caller's pledge that λ₁/λ₂ is irrational
    hp_coeffs: tuple | None = None   # optional 256-bit (λ₁, λ₂, λ₃, η)

    def __post_init__(self):
        if self.lambda1 == 0 or self.lambda2 == 0 or self.lambda3 == 0:
            raise DomainError("all three coefficients must be nonzero")
        if self.eps < 0:
            raise DomainError(f"eps must be ≥ 0, got {self.eps}")
        if not 0.0 < self.lambda0 < 1.0:
            raise DomainError(f"lambda0 must lie in (0,1), got {self.lambda0}")
        if self.x <= 0:
            raise DomainError(f"X must be positive, got {self.x}")

    @property
    def theorem_mode(self) -> bool:
        signs = {math.copysign(1.0, v) for v in (self.lambda1, self.lambda2, self.lambda3)}
        return len(signs) == 2 and self.ratio_irrational


@dataclass(frozen=True)
class GammaBreakdown:
    gamma: float
    gamma0: float
    g1: float
    g2: float
    g3: float
    d: float
    triple_count: int
    timing: float

    def as_dict(self) -> dict:
        # timing intentionally omitted: CLI output must be run-to-run identical
        return {
            "gamma": self.gamma,
            "gamma0": self.gamma0,
            "g1": self.g1,
            "g2": self.g2,
            "g3": self.g3,
            "d": self.d,
            "triple_count": self.triple_count,
        }


@dataclass(frozen=True)
class TripleWitness:
    p1: int
    p2: int
    p3: int
    x: int
    y: int
    residual: float
    witness1: tuple[int, int] | None = None
    witness2: tuple[int, int] | None = None


# ------------------------------------------------------------------ plumbing

def _range_primes(inst: Instance, table: PrimeTable) -> np.ndarray:
    if inst.x > table.limit:
        raise DomainError(f"X={inst.x} exceeds table limit {table.limit}")
    sl = table.prime_slice(inst.lambda0 * inst.x, inst.x)
    return table.primes[sl]


def _check_pair_budget(n1: int, n2: int, work_budget: int):
    if n1 * n2 > work_budget:
        raise ResourceError(
            f"pair scan needs {n1 * n2:.3e} evaluations, over the budget "
            f"{work_budget:.3e}; raise --work-budget and consider --threads"
        )


def _chunks(n: int) -> list[tuple[int, int]]:
    return [(r, min(r + _ROWS, n)) for r in range(0, n, _ROWS)]


def _run_chunks(fn, spans: list[tuple[int, int]], threads: int) -> list:
    if threads <= 1:
        return [fn(r0, r1) for r0, r1 in spans]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda s: fn(*s), spans))


class _Engine:
    """Shared state for one pair scan: sorted λ₃p₃ and aligned p₃ columns."""

    def __init__(self, inst: Instance, table: PrimeTable,
                 p1_mask=None, p2_mask=None, p3_mask=None):
        base = _range_primes(inst, table)
        if base.size == 0:
            raise DomainError(
                f"no primes in ({inst.lambda0 * inst.x:.6g}, {inst.x:.6g}]"
            )
        self.inst = inst
        self.p1 = base if p1_mask is None else base[p1_mask]
        self.p2 = base if p2_mask is None else base[p2_mask]
        self.p3 = base if p3_mask is None else base[p3_mask]
        self.w1 = np.log(self.p1.astype(np.float64))
        self.w2 = np.log(self.p2.astype(np.float64))
        z = inst.lambda3 * self.p3.astype(np.float64)
        order = np.argsort(z, kind="stable")
        self.zs = z[order]
        self.p3_sorted = self.p3[order]
        self.order = order
        self.p1f = self.p1.astype(np.float64)
        self.p2f = self.p2.astype(np.float64)

    def sorted_col(self, col: np.ndarray) -> np.ndarray:
        return np.asarray(col, dtype=np.float64)[self.order]

    def prefix(self, col_sorted: np.ndarray) -> np.ndarray:
        pref = np.zeros(len(col_sorted) + 1)
        np.cumsum(col_sorted, out=pref[1:])
        return pref

    def _bounds(self, r0: int, r1: int):
        inst = self.inst
        c = (inst.lambda1 * self.p1f[r0:r1] + inst.eta)[:, None] \
            + inst.lambda2 * self.p2f[None, :]
        cf = c.ravel()
        lo = np.searchsorted(self.zs, -cf - inst.eps, side="right")
        hi = np.searchsorted(self.zs, -cf + inst.eps, side="left")
        cnt = hi - lo
        bad = cnt < 0
        if bad.any():          # only when eps == 0 and exact hits exist
            hi = np.where(bad, lo, hi)
            cnt = hi - lo
        return cf, lo, hi, cnt

    def scan_prefix(self, pref: np.ndarray, threads: int) -> tuple[float, int]:
        """Σ pairweight · (windowed column sum) and the raw triple count."""

        def do(r0, r1):
            cf, lo, hi, cnt = self._bounds(r0, r1)
            pw = (self.w1[r0:r1])[:, None] * self.w2[None, :]
            val = float(np.sum(pw.ravel() * (pref[hi] - pref[lo])))
            return val, int(cnt.sum())

        parts = _run_chunks(do, _chunks(len(self.p1)), threads)
        return math.fsum(v for v, _ in parts), sum(c for _, c in parts)

    def scan_hits(self, cols: list[np.ndarray], kern: SmoothingKernel,
                  threads: int, collect: bool = False):
        """θ-weighted Σ over in-window triples, one total per column.

        With collect=True also returns the flat hit arrays
        (p1, p2, inner-sorted-index, residual) in deterministic order.
        """
        n2 = len(self.p2)

        def do(r0, r1):
            cf, lo, hi, cnt = self._bounds(r0, r1)
            tot = int(cnt.sum())
            if tot > HITS_BUDGET:
                raise ResourceError(
                    f"{tot:.2e} window hits in one chunk exceeds the hits budget"
                )
            if tot == 0:
                empty = np.zeros(0)
                return ([0.0] * len(cols),
                        (empty.astype(np.int64),) * 3 + (empty,) if collect else None)
            nz = np.nonzero(cnt)[0]
            reps = cnt[nz]
            pairid = np.repeat(nz, reps)
            ends = np.cumsum(reps)
            offs = np.arange(tot, dtype=np.int64) - np.repeat(ends - reps, reps)
            inner = np.repeat(lo[nz], reps) + offs
            res = cf[pairid] + self.zs[inner]
            th = theta_eval(kern, res) if kern is not None else np.ones(tot)
            pw = ((self.w1[r0:r1])[:, None] * self.w2[None, :]).ravel()
            base = th * pw[pairid]
            sums = [float(np.sum(base * col[inner])) for col in cols]
            if collect:
                i1 = r0 + pairid // n2
                i2 = pairid % n2
                return sums, (self.p1[i1], self.p2[i2], inner, res)
            return sums, None

        parts = _run_chunks(do, _chunks(len(self.p1)), threads)
        totals = [math.fsum(p[0][i] for p in parts) for i in range(len(cols))]
        if not collect:
            return totals, None
        hits = [p[1] for p in parts if p[1] is not None and len(p[1][3])]
        if hits:
            merged = tuple(np.concatenate([h[i] for h in hits]) for i in range(4))
        else:
            merged = (np.zeros(0, np.int64),) * 3 + (np.zeros(0),)
        return totals, merged


# -------------------------------------------------------------- the Γ family

def gamma_sharp(inst: Instance, table: PrimeTable, threads: int = 1,
                work_budget: int = WORK_BUDGET) -> tuple[float, int]:
    """Sharp-window weighted count Γ and the number of contributing triples."""
    if inst.eps == 0:
        return 0.0, 0
    eng = _Engine(inst, table)
    _check_pair_budget(len(eng.p1), len(eng.p2), work_budget)
    r = r2_bulk(eng.p3 - 1, table).astype(np.float64)
    w3 = r * np.log(eng.p3.astype(np.float64))
    pref = eng.prefix(eng.sorted_col(w3))
    return eng.scan_prefix(pref, threads)


def gamma_smoothed(inst: Instance, kern: SmoothingKernel, table: PrimeTable,
                   threads: int = 1, work_budget: int = WORK_BUDGET) -> float:
    """Smoothed count Γ₀ = Σ r(p₃−1)·θ(residual)·ln p₁ ln p₂ ln p₃."""
    if kern.eps != inst.eps:
        raise DomainError(
            f"kernel eps {kern.eps} does not match instance eps {inst.eps}"
        )
    eng = _Engine(inst, table)
    _check_pair_budget(len(eng.p1), len(eng.p2), work_budget)
    r = r2_bulk(eng.p3 - 1, table).astype(np.float64)
    w3 = eng.sorted_col(r * np.log(eng.p3.astype(np.float64)))
    (total,), _ = eng.scan_hits([w3], kern, threads)
    return total


def gamma_split(inst: Instance, kern: SmoothingKernel, table: PrimeTable,
                d_split: float, threads: int = 1,
                work_budget: int = WORK_BUDGET) -> GammaBreakdown:
    """Γ₀ split by divisor size at D and X/D, with the exactness self-check."""
    t0 = time.perf_counter()
    if kern.eps != inst.eps:
        raise DomainError(
            f"kernel eps {kern.eps} does not match instance eps {inst.eps}"
        )
    if not 1.0 < d_split < math.sqrt(inst.x):
        raise DomainError(
            f"divisor split needs 1 < D < √X for the small/middle/large "
            f"partition; got D={d_split}, √X={math.sqrt(inst.x):.6g}"
        )
    eng = _Engine(inst, table)
    _check_pair_budget(len(eng.p1), len(eng.p2), work_budget)

    t_hi = inst.x / d_split
    n3 = len(eng.p3)
    a1 = np.zeros(n3)
    a2 = np.zeros(n3)
    a3 = np.zeros(n3)
    rvals = r2_bulk(eng.p3 - 1, table)
    for i, p in enumerate(eng.p3):
        s1 = s2 = s3 = 0
        for dv in divisors(int(p) - 1, table):
            cd = chi(dv)
            if dv <= d_split:
                s1 += cd
            elif dv < t_hi:
                s2 += cd
            else:
                s3 += cd
        a1[i], a2[i], a3[i] = s1, s2, s3
        if 4 * (s1 + s2 + s3) != rvals[i]:
            raise NumericError(f"divisor split lost mass at p3={p}")

    logs3 = np.log(eng.p3.astype(np.float64))
    cols = [eng.sorted_col(a1 * logs3), eng.sorted_col(a2 * logs3),
            eng.sorted_col(a3 * logs3), eng.sorted_col(rvals * logs3)]
    (g1, g2, g3, gamma0), _ = eng.scan_hits(cols, kern, threads)

    ident = 4.0 * (g1 + g2 + g3)
    tol = 1e-9 * max(1.0, abs(gamma0))
    if abs(ident - gamma0) > tol:
        raise NumericError(
            f"split identity violated: 4(g1+g2+g3)={ident!r} vs gamma0={gamma0!r}"
        )
    pref = eng.prefix(cols[3])
    gamma, count = eng.scan_prefix(pref, threads)
    return GammaBreakdown(gamma=gamma, gamma0=gamma0, g1=g1, g2=g2, g3=g3,
                          d=d_split, triple_count=count,
                          timing=time.perf_counter() - t0)


def gamma3_reflect(p3: int, d_split: float, x: float, table: PrimeTable) -> dict:
    """Large-divisor character sum vs its reflection to small complements.

    d ≥ X/D and m = (p₃−1)/d ≤ (p₃−1)·D/X are the same condition, compared
    here in exact rational arithmetic so both loops classify identically.
    """
    if p3 > x:
        raise DomainError(f"need p3 ≤ X, got p3={p3}, X={x}")
    if x > table.limit:
        raise DomainError(f"X={x} exceeds table limit")
    if not table.is_prime(p3):
        raise DomainError(f"p3={p3} is not prime")
    if not 1.0 < d_split < math.sqrt(x):
        raise DomainError(f"need 1 < D < √X, got D={d_split}")
    n = p3 - 1
    fd, fx = Fraction(d_split), Fraction(x)
    ds = divisors(n, table)
    lhs = sum(chi(dv) for dv in ds if Fraction(dv) * fd >= fx)
    rhs = sum(chi(n // m) for m in ds if Fraction(m) * fx <= n * fd)
    return {"lhs": lhs, "rhs": rhs}


# ------------------------------------------------------------- volume B_J(X)

def b_j_volume(inst: Instance, kern: SmoothingKernel,
               j: tuple[float, float]) -> float:
    """∫_J ∫∫ θ(λ₁y₁ + λ₂y₂ + λ₃y₃ + η) dy₁ dy₂ dy₃ over the (λ₀X, X] box.

    The y₁ integral is the closed-form difference of the θ antiderivative;
    the y₂ and y₃ integrals run adaptive quadrature with breakpoints where
    the smoothing bands cross the box corners.  Relative target 1e−6.
    """
    if kern.eps != inst.eps:
        raise DomainError("kernel eps does not match instance eps")
    j_lo, j_hi = j
    a_box, b_box = inst.lambda0 * inst.x, inst.x
    if not (a_box <= j_lo < j_hi <= b_box):
        raise DomainError(f"J={j} must sit inside ({a_box:.6g}, {b_box:.6g}]")
    l1, l2, l3, eta = inst.lambda1, inst.lambda2, inst.lambda3, inst.eta
    eps = inst.eps
    marks = (-eps, -0.75 * eps, 0.75 * eps, eps)

    def line(u: float) -> float:
        return (theta_antiderivative(kern, l1 * b_box + u)
                - theta_antiderivative(kern, l1 * a_box + u)) / l1

    inner_scale = (b_box - a_box) * 2.0 * kern.a / abs(l1) + 1e-300

    def mid(y3: float) -> float:
        c = l3 * y3 + eta
        pts = []
        for e1 in (a_box, b_box):
            for s in marks:
                t = (s - l1 * e1 - c) / l2
                if a_box < t < b_box:
                    pts.append(t)
        val, err = quad(lambda y2: line(l2 * y2 + c), a_box, b_box,
                        points=sorted(set(pts)), limit=200,
                        epsabs=1e-12 * inner_scale, epsrel=1e-10)
        return val

    pts3 = []
    for e1 in (a_box, b_box):
        for e2 in (a_box, b_box):
            for s in marks:
                t = (s - l1 * e1 - l2 * e2 - eta) / l3
                if j_lo < t < j_hi:
                    pts3.append(t)
    outer_scale = inner_scale * (j_hi - j_lo)
    out = quad(mid, j_lo, j_hi, points=sorted(set(pts3)), limit=200,
               epsabs=1e-10 * outer_scale, epsrel=1e-8, full_output=1)
    val, err = out[0], out[1]
    if len(out) > 3 or err > 1e-6 * max(abs(val), 1e-10 * outer_scale):
        raise NumericError(
            f"outer quadrature not converged: value {val!r}, error {err!r}"
        )
    return val


# ------------------------------------------------------------- triple finder

def find_triples(inst: Instance, table: PrimeTable,
                 require_linnik: frozenset[int] | set[int] = frozenset({3}),
                 max_results: int = 100, threads: int = 1,
                 work_budget: int = WORK_BUDGET) -> list[TripleWitness]:
    """Concrete triples with |λ₁p₁+λ₂p₂+λ₃p₃+η| < ε, p₃ (optionally p₁,p₂)
    a Linnik prime; sorted by |residual|, ties by (p1,p2,p3).

    Every candidate surviving the float scan is re-verified at 256-bit
    precision before being returned; its stored residual comes from that
    recomputation.
    """
    if not require_linnik <= {1, 2, 3}:
        raise DomainError(f"require_linnik must be ⊆ {{1,2,3}}, got {require_linnik}")
    if max_results < 1:
        raise DomainError("max_results must be ≥ 1")
    if not inst.theorem_mode:
        warnings.warn(
            "instance is not in theorem mode (needs mixed coefficient signs "
            "and the irrational-ratio pledge); finder results are exploratory",
            stacklevel=2,
        )
    if inst.eps == 0:
        return []
    base = _range_primes(inst, table)
    if base.size == 0:
        return []
    linnik_mask = r2_bulk(base - 1, table) > 0
    masks = {i: (linnik_mask if i in require_linnik else None) for i in (1, 2, 3)}
    eng = _Engine(inst, table, p1_mask=masks[1], p2_mask=masks[2], p3_mask=masks[3])
    if len(eng.p1) == 0 or len(eng.p2) == 0 or len(eng.p3) == 0:
        return []
    _check_pair_budget(len(eng.p1), len(eng.p2), work_budget)
    _, hits = eng.scan_hits([], None, threads, collect=True)
    p1h, p2h, inner, res = hits
    if len(res) == 0:
        return []
    p3h = eng.p3_sorted[inner]
    order = np.lexsort((p3h, p2h, p1h, np.abs(res)))

    out: list[TripleWitness] = []
    with mpmath.workprec(256):
        if inst.hp_coeffs is not None:
            lam = [mpmath.mpf(v) for v in inst.hp_coeffs[:3]]
            eta = mpmath.mpf(inst.hp_coeffs[3])
        else:
            lam = [mpmath.mpf(inst.lambda1), mpmath.mpf(inst.lambda2),
                   mpmath.mpf(inst.lambda3)]
            eta = mpmath.mpf(inst.eta)
        eps = mpmath.mpf(inst.eps)
        for idx in order:
            if len(out) >= max_results:
                break
            q1, q2, q3 = int(p1h[idx]), int(p2h[idx]), int(p3h[idx])
            r_hp = lam[0] * q1 + lam[1] * q2 + lam[2] * q3 + eta
            if not abs(r_hp) < eps:
                continue
            wit3 = linnik_witness(q3, table)
            if wit3 is None:
                if 3 in require_linnik:
                    raise NumericError(f"mask said p3={q3} is Linnik but no witness")
                wit3 = (-1, -1)
            out.append(TripleWitness(
                p1=q1, p2=q2, p3=q3, x=wit3[0], y=wit3[1],
                residual=float(r_hp),
                witness1=linnik_witness(q1, table) if 1 in require_linnik else None,
                witness2=linnik_witness(q2, table) if 2 in require_linnik else None,
            ))
    return out


# ------------------------------------------------------- divisor statistics

def hooley_sigma_prime(table: PrimeTable, x: float, d_split: float,
                       lambda0: float = 0.0) -> int:
    """Σ over λ₀X < p ≤ X of (Σ_{d|p−1, D<d<X/D} χ(d))² — exact integer."""
    if x > table.limit:
        raise DomainError(f"X={x} exceeds table limit")
    if not 1.0 < d_split < math.sqrt(x):
        raise DomainError(f"need 1 < D < √X, got D={d_split}")
    if not 0.0 <= lambda0 < 1.0:
        raise DomainError("lambda0 must lie in [0,1)")
    t_hi = x / d_split
    sl = table.prime_slice(lambda0 * x, x)
    total = 0
    for p in table.primes[sl]:
        s = 0
        for dv in divisors(int(p) - 1, table):
            if d_split < dv < t_hi:
                s += chi(dv)
        total += s * s
    return total


def hooley_f_omega(table: PrimeTable, x: float, omega: float) -> int:
    """Count primes p ≤ X whose p−1 has a divisor in (√X·ln⁻ᵂX, √X·lnᵂX)."""
    if omega <= 0:
        raise DomainError(f"omega must be positive, got {omega}")
    if x > table.limit:
        raise DomainError(f"X={x} exceeds table limit")
    lx = math.log(x)
    lo = math.sqrt(x) * lx ** (-omega)
    hi = math.sqrt(x) * lx ** omega
    count = 0
    for p in table.primes[: table.prime_count(x)]:
        for dv in divisors(int(p) - 1, table):
            if lo < dv < hi:
                count += 1
                break
    return count

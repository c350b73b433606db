"""Divisor sums over N-th-power divisors, their Dirichlet factorization,
Lambert-type series, and N-th-power-weighted partition counts.

sigma(a, N, n)   = sum of d^a over d with d^N | n
s_weight(a, N, n) = sum over factorizations n = d1^N d2 of d2^((1+a)/N - 1)

The two are tied together by the Dirichlet factorization
    sum_{n>=1} s_weight(a, N, n) / n^s = zeta(N s) zeta(s + 1 - (1+a)/N),
valid for Re(s) > max(1/N, (1 + Re a)/N), which s_dirichlet verifies
numerically.  partition_counts counts partitions of n into parts j^N with
multiplicity weight j^(2N-1) attached to the generating product, via the
exact integer recurrence n*P(n) = sum_j sigma_{3N-1}^(N)(j) P(n-j).
"""

from __future__ import annotations

import io
from dataclasses import dataclass

from .core import (
    ComplexValue,
    DomainError,
    IdentityReport,
    SeriesResult,
    Tier,
    TruncationPolicy,
    cexp,
    cpow,
    make_real,
    rexp,
    rlog,
    sum_series,
    to_float,
)
from .special import zeta


# ---------------------------------------------------------------------------
# divisor sums
# ---------------------------------------------------------------------------

def _power_divisors(N: int, n: int) -> list[int]:
    """All d >= 1 with d^N dividing n."""
    if n < 1:
        raise DomainError("n must be a positive integer")
    if N < 1:
        raise DomainError("N must be a positive integer")
    out = []
    d = 1
    while d ** N <= n:
        if n % (d ** N) == 0:
            out.append(d)
        d += 1
    return out


def sigma_int(a: int, N: int, n: int) -> int:
    """Exact integer sigma_a^(N)(n) for non-negative integer a."""
    if a < 0:
        raise DomainError("sigma_int needs a >= 0")
    return sum(d ** a for d in _power_divisors(N, n))


def sigma(a, N: int, n: int, tier=None) -> ComplexValue:
    """sigma_a^(N)(n) = sum_{d^N | n} d^a for complex a."""
    t = Tier.coerce(tier)
    if isinstance(a, (int, float)) and float(a) == int(a) and int(a) >= 0:
        return ComplexValue.make(sigma_int(int(a), N, n), t)
    av = ComplexValue.make(a, t)
    acc = ComplexValue.make(0.0, t)
    for d in _power_divisors(N, n):
        acc = acc + cexp(av * rlog(make_real(d, t)))
    return acc


def s_weight(a, N: int, n: int, tier=None) -> ComplexValue:
    """S_a^(N)(n) = sum_{d1^N d2 = n} d2^((1+a)/N - 1)."""
    t = Tier.coerce(tier)
    av = ComplexValue.make(a, t)
    expo = (av + 1.0) / float(N) - 1.0
    acc = ComplexValue.make(0.0, t)
    for d1 in _power_divisors(N, n):
        d2 = n // (d1 ** N)
        if d2 == 1:
            acc = acc + 1.0
        else:
            acc = acc + cexp(expo * rlog(make_real(d2, t)))
    return acc


def s_dirichlet(a, N: int, s, policy: TruncationPolicy = None,
                tier=None) -> IdentityReport:
    """Check sum S_a^(N)(n)/n^s against zeta(Ns) zeta(s+1-(1+a)/N)."""
    t = Tier.coerce(tier)
    policy = policy or TruncationPolicy.for_tier(t)
    av = ComplexValue.make(a, t)
    sv = ComplexValue.make(s, t)
    bound = max(1.0 / N, (1.0 + to_float(av.re)) / N)
    if to_float(sv.re) <= bound:
        raise DomainError(
            f"s_dirichlet requires Re(s) > max(1/N, (1+Re a)/N) = {bound}")
    # The depth-M partial sum regrouped exactly over the defining pairs
    # d1^N d2 = n <= M (a finite reordering, so still a direct test of the
    # factorization): sum_{d1^N <= M} d1^(-Ns) sum_{d2 <= M/d1^N} d2^(expo2).
    # This avoids a divisor enumeration per n, which made deep partial sums
    # quadratic-ish in M.
    expo2 = (av + 1.0) / float(N) - 1.0 - sv
    one = ComplexValue.make(1.0, t)

    def cell_term(k: int) -> ComplexValue:
        if k == 1:
            return one
        return cexp(expo2 * rlog(make_real(k, t)))

    M = policy.max_terms
    total = ComplexValue.make(0.0, t)
    terms = 0
    conv = True
    d1 = 1
    while d1 ** N <= M:
        cap = M // (d1 ** N)
        cell_policy = TruncationPolicy(policy.rel_tol, policy.abs_tol,
                                       cap, policy.small_run)
        res = sum_series(cell_term, cell_policy, start=1)
        if d1 == 1:
            total = total + res.value
            conv = res.converged
        else:
            total = total + res.value * cexp(
                sv * float(-N) * rlog(make_real(d1, t)))
        terms += res.terms_used
        d1 += 1
    rhs = zeta(sv * float(N)) * zeta(sv + 1.0 - (av + 1.0) / float(N))
    flags = [] if conv else ["NON_CONVERGED"]
    return IdentityReport.build(
        "s-dirichlet",
        {"a": av.to_complex(), "N": N, "s": sv.to_complex()},
        total, rhs, terms, 2, t, flags)


# ---------------------------------------------------------------------------
# Lambert-type series
# ---------------------------------------------------------------------------

def lambert_direct(k, N: int, y, policy: TruncationPolicy = None,
                   tier=None) -> SeriesResult:
    """sum_{n>=1} n^k / (e^(n^N y) - 1)."""
    t = Tier.coerce(tier)
    policy = policy or TruncationPolicy.for_tier(t)
    kv = ComplexValue.make(k, t)
    yv = ComplexValue.make(y, t)
    if to_float(yv.re) <= 0.0:
        raise DomainError("lambert_direct requires Re(y) > 0")

    def term(n: int) -> ComplexValue:
        e = cexp(yv * (-(n ** N)))
        npow = cexp(kv * rlog(make_real(n, t)))
        return npow * e / (1.0 - e)

    return sum_series(term, policy, start=1)


def lambert_divisor(a, N: int, y, policy: TruncationPolicy = None,
                    tier=None) -> SeriesResult:
    """sum_{n>=1} sigma_a^(N)(n) e^(-n y)."""
    t = Tier.coerce(tier)
    policy = policy or TruncationPolicy.for_tier(t)
    yv = ComplexValue.make(y, t)
    if to_float(yv.re) <= 0.0:
        raise DomainError("lambert_divisor requires Re(y) > 0")

    def term(n: int) -> ComplexValue:
        return sigma(a, N, n, t) * cexp(yv * (-n))

    return sum_series(term, policy, start=1)


# ---------------------------------------------------------------------------
# power partitions
# ---------------------------------------------------------------------------

@dataclass
class PartitionTable:
    N: int
    counts: list  # counts[n] = P_N(n), exact ints

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("n,count\n")
        for n, c in enumerate(self.counts):
            buf.write(f"{n},{c}\n")
        return buf.getvalue()


def partition_counts(N: int, n_max: int) -> PartitionTable:
    """P_N(0..n_max) from the sigma recurrence n P(n) = sum sigma_{3N-1}^(N)(j) P(n-j)."""
    if N < 1 or n_max < 0:
        raise DomainError("partition_counts needs N >= 1, n_max >= 0")
    sig = [0] * (n_max + 1)
    for j in range(1, n_max + 1):
        sig[j] = sigma_int(3 * N - 1, N, j)
    counts = [0] * (n_max + 1)
    counts[0] = 1
    for n in range(1, n_max + 1):
        acc = 0
        for j in range(1, n + 1):
            acc += sig[j] * counts[n - j]
        q, r = divmod(acc, n)
        if r:
            raise DomainError(f"partition recurrence not integral at n={n}")
        counts[n] = q
    return PartitionTable(N, counts)


def _partition_counts_product(N: int, n_max: int) -> list:
    """Oracle: coefficients of prod_n (1 - q^(n^N))^(-n^(2N-1)) up to q^n_max."""
    coeffs = [0] * (n_max + 1)
    coeffs[0] = 1
    n = 1
    while n ** N <= n_max:
        p = n ** N
        for _ in range(n ** (2 * N - 1)):
            for c in range(p, n_max + 1):
                coeffs[c] += coeffs[c - p]
        n += 1
    return coeffs

"""Generalized hypergeometric series 1Fq and the closed form for unit
numerator parameter with arithmetic-progression denominators.

hyper_1fq sums by term-ratio recursion; prudnikov_closed_form evaluates
  1Fq(1; (m+1)/q, ..., (m+q)/q; z)
    = (m!/(q^(m+1) z^(m/q))) * [ sum_{k=0}^{q-1} e^(q theta_k z^(1/q)) / theta_k^m
        - q^(m+1) sum_{k=1}^{floor(m/q)} z^(m/q - k) / (q^(qk) (m-qk)!) ],
theta_k = e^(2 pi i k / q), with the principal branch of z^(1/q).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .core import (
    ComplexValue,
    DomainError,
    PoleError,
    SeriesResult,
    Tier,
    TruncationPolicy,
    cexp,
    clog,
    make_real,
    pi_real,
    rsincos,
    to_float,
)


@dataclass
class HyperParams:
    a: object              # numerator parameter
    bs: list               # denominator parameters
    z: object              # argument
    tier: Tier = field(default=None)


def pochhammer(a, n: int, tier=None) -> ComplexValue:
    """(a)_n = a (a+1) ... (a+n-1), iteratively; (a)_0 = 1."""
    if n < 0:
        raise DomainError("pochhammer needs n >= 0")
    t = Tier.coerce(tier)
    av = ComplexValue.make(a, t)
    acc = ComplexValue.make(1.0, t)
    for j in range(n):
        acc = acc * (av + float(j))
    return acc


def hyper_1fq(params: HyperParams, policy: TruncationPolicy = None) -> SeriesResult:
    """1Fq(a; b_1..b_q; z) by term-ratio recursion under the policy."""
    t = Tier.coerce(params.tier)
    policy = policy or TruncationPolicy.for_tier(t)
    av = ComplexValue.make(params.a, t)
    bs = [ComplexValue.make(b, t) for b in params.bs]
    zv = ComplexValue.make(params.z, t)
    for b in bs:
        re, im = to_float(b.re), to_float(b.im)
        r = round(re)
        if r <= 0 and abs(re - r) < 1e-9 and abs(im) < 1e-9:
            raise PoleError(f"hyper_1fq denominator parameter {b.to_complex()} "
                            "is (nearly) a non-positive integer")
    term = ComplexValue.make(1.0, t)
    acc = ComplexValue.make(1.0, t)
    run = 0
    n = 0
    while n < policy.max_terms:
        ratio = (av + float(n)) * zv / float(n + 1)
        for b in bs:
            ratio = ratio / (b + float(n))
        term = term * ratio
        acc = acc + term
        n += 1
        if term.abs_float() <= policy.rel_tol * acc.abs_float() + policy.abs_tol:
            run += 1
            if run >= policy.small_run:
                return SeriesResult(acc, n + 1, True, term.abs_float())
        else:
            run = 0
    return SeriesResult(acc, n + 1, False, term.abs_float())


def prudnikov_closed_form(m: int, q: int, z, tier=None) -> ComplexValue:
    """Closed form of 1Fq(1; (m+1)/q..(m+q)/q; z); principal z^(1/q), z != 0."""
    if m < 0 or q < 1:
        raise DomainError("prudnikov_closed_form needs m >= 0, q >= 1")
    t = Tier.coerce(tier)
    zv = ComplexValue.make(z, t)
    if to_float(zv.re) == 0.0 and to_float(zv.im) == 0.0:
        raise DomainError("prudnikov_closed_form undefined at z = 0")
    pi = pi_real(t)
    logz = clog(zv)
    zroot = cexp(logz / float(q))                     # z^(1/q)
    main = ComplexValue.make(0.0, t)
    for k in range(q):
        s, c = rsincos(pi * (2.0 * k) / q)
        theta = ComplexValue(c, s)                    # e^(2 pi i k / q)
        # e^(q theta z^(1/q)) / theta^m, theta^m computed exactly by angle
        sm, cm = rsincos(pi * (2.0 * k * m) / q)
        theta_m = ComplexValue(cm, sm)
        main = main + cexp(theta * zroot * float(q)) / theta_m
    corr = ComplexValue.make(0.0, t)
    for k in range(1, m // q + 1):
        e = cexp(logz * (m / q - k))
        corr = corr + e / (float(q) ** (q * k) * math.factorial(m - q * k))
    pref = cexp(logz * (-(m / q))) * (math.factorial(m) / float(q) ** (m + 1))
    return pref * (main - corr * float(q) ** (m + 1))

"""Classical special functions at either precision tier.

gamma/log_gamma: argument shift into Re >= 35 plus a 16-term Stirling series,
reflection for Re < 1/2.  digamma: same pattern at radius 40.  zeta:
Euler-Maclaurin with adaptive correction depth, functional-equation
reflection for Re < 1/2.  Bernoulli numbers are exact Fractions from the
binomial recurrence and are cached.

sinhshi_coshchi evaluates F(z) = sinh(z)Shi(z) - cosh(z)Chi(z), the kernel of
several identities here, in three regimes (series / exponential-integral pair
/ optimally-truncated asymptotic) always carrying EXTENDED precision
internally and demoting on return.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

from .core import (
    ComplexValue,
    DomainError,
    PoleError,
    Tier,
    ccos,
    ccosh,
    cexp,
    clog,
    cpow,
    csin,
    csinh,
    euler_gamma_real,
    log_2pi_real,
    make_real,
    pi_real,
    rexp,
    rlog,
    rsqrt,
    to_float,
)
from .ddarith import DD

# ---------------------------------------------------------------------------
# Bernoulli numbers (exact)
# ---------------------------------------------------------------------------

_bernoulli_cache: list[Fraction] = [Fraction(1), Fraction(-1, 2)]
_bernoulli_lock = threading.Lock()


def bernoulli(k: int) -> Fraction:
    """Exact Bernoulli number B_k (B_1 = -1/2 convention)."""
    if k < 0:
        raise DomainError("bernoulli: negative index")
    if k < len(_bernoulli_cache):
        return _bernoulli_cache[k]
    with _bernoulli_lock:
        while len(_bernoulli_cache) <= k:
            m = len(_bernoulli_cache)
            if m % 2 == 1:
                _bernoulli_cache.append(Fraction(0))
                continue
            acc = Fraction(0)
            binom = 1  # C(m+1, j) built incrementally
            for j in range(m):
                acc += binom * _bernoulli_cache[j]
                binom = binom * (m + 1 - j) // (j + 1)
            _bernoulli_cache.append(-acc / (m + 1))
    return _bernoulli_cache[k]


def bernoulli_real(k: int, tier: Tier):
    fr = bernoulli(k)
    if tier is Tier.EXTENDED:
        return DD.from_fraction(fr)
    return fr.numerator / fr.denominator


# ---------------------------------------------------------------------------
# coercion helper
# ---------------------------------------------------------------------------

def _cv(z, tier=None) -> ComplexValue:
    if isinstance(z, ComplexValue):
        return z if tier is None else z.retier(Tier.coerce(tier))
    return ComplexValue.make(z, Tier.coerce(tier) if tier is not None else Tier.from_env())


# ---------------------------------------------------------------------------
# gamma / log_gamma
# ---------------------------------------------------------------------------

_STIRLING_K = 16
_stirling_coeffs: dict[Tier, list] = {}


def _stirling(tier: Tier) -> list:
    if tier not in _stirling_coeffs:
        _stirling_coeffs[tier] = [
            make_real(bernoulli(2 * j) / (2 * j * (2 * j - 1)), tier)
            if tier is Tier.DOUBLE else
            DD.from_fraction(bernoulli(2 * j) / (2 * j * (2 * j - 1)))
            for j in range(1, _STIRLING_K + 1)
        ]
    return _stirling_coeffs[tier]


def _near_nonpositive_integer(z: ComplexValue, tol: float = 1e-12):
    """Return the offending integer if z is within tol of 0, -1, -2, ..."""
    re = to_float(z.re)
    im = to_float(z.im)
    if abs(im) > tol:
        return None
    r = round(re)
    if r <= 0 and abs(re - r) <= tol:
        return r
    return None


def _stirling_log(w: ComplexValue) -> ComplexValue:
    """log Gamma(w) for Re(w) >= 35 by Stirling's series."""
    tier = w.tier
    half = make_real(0.5, tier)
    out = (w - 0.5) * clog(w) - w + ComplexValue(log_2pi_real(tier) * half,
                                                 make_real(0.0, tier))
    u = ComplexValue.make(1.0, tier) / w
    u2 = u * u
    p = u
    for c in _stirling(tier):
        out = out + p * c
        p = p * u2
    return out


def gamma(z, tier=None) -> ComplexValue:
    """Gamma(z), principal values, poles at the non-positive integers."""
    z = _cv(z, tier)
    t = z.tier
    if _near_nonpositive_integer(z) is not None:
        raise PoleError(f"gamma pole at z = {z.to_complex()}")
    if to_float(z.re) < 0.5:
        # reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
        pi = pi_real(t)
        s = csin(z * pi)
        return ComplexValue(pi, make_real(0.0, t)) / (s * gamma(ComplexValue.make(1.0, t) - z))
    w = z
    shift = ComplexValue.make(1.0, t)
    while to_float(w.re) < 35.0:
        shift = shift * w
        w = w + 1.0
    return cexp(_stirling_log(w)) / shift


def log_gamma(z, tier=None) -> ComplexValue:
    """Principal log Gamma on Re(z) > 0 (continuous there)."""
    z = _cv(z, tier)
    if to_float(z.re) <= 0.0:
        raise DomainError("log_gamma requires Re(z) > 0")
    w = z
    corr = None
    while to_float(w.re) < 35.0:
        lg = clog(w)
        corr = lg if corr is None else corr + lg
        w = w + 1.0
    out = _stirling_log(w)
    return out if corr is None else out - corr


# ---------------------------------------------------------------------------
# digamma
# ---------------------------------------------------------------------------

_DIGAMMA_K = 12
_digamma_coeffs: dict[Tier, list] = {}


def _digamma_c(tier: Tier) -> list:
    if tier not in _digamma_coeffs:
        _digamma_coeffs[tier] = [
            DD.from_fraction(bernoulli(2 * j) / (2 * j)) if tier is Tier.EXTENDED
            else float(bernoulli(2 * j) / (2 * j))
            for j in range(1, _DIGAMMA_K + 1)
        ]
    return _digamma_coeffs[tier]


def _cot_pi(z: ComplexValue) -> ComplexValue:
    """cot(pi z), overflow-safe for large |Im z|."""
    t = z.tier
    pi = pi_real(t)
    im = to_float(z.im)
    if abs(im) < 0.5:
        w = z * pi
        return ccos(w) / csin(w)
    i_one = ComplexValue(make_real(0.0, t), make_real(1.0, t))
    if im > 0:
        e = cexp(z * pi * 2.0 * i_one)         # |e| < 1
        return i_one * (e + 1.0) / (e - 1.0)
    e = cexp(z * pi * (-2.0) * i_one)          # |e| < 1
    return (i_one * (e + 1.0) / (e - 1.0)) * (-1.0)


def digamma(z, tier=None) -> ComplexValue:
    """psi(z) with reflection for Re(z) < 0 and Stirling tail at Re >= 40."""
    z = _cv(z, tier)
    t = z.tier
    if _near_nonpositive_integer(z) is not None:
        raise PoleError(f"digamma pole at z = {z.to_complex()}")
    if to_float(z.re) < 0.0:
        pi = pi_real(t)
        return digamma(ComplexValue.make(1.0, t) - z) - _cot_pi(z) * pi
    acc = None
    w = z
    while to_float(w.re) < 40.0:
        term = ComplexValue.make(1.0, t) / w
        acc = term if acc is None else acc + term
        w = w + 1.0
    out = clog(w) - ComplexValue.make(0.5, t) / w
    u2 = ComplexValue.make(1.0, t) / (w * w)
    p = u2
    for c in _digamma_c(t):
        out = out - p * c
        p = p * u2
    return out if acc is None else out - acc


# ---------------------------------------------------------------------------
# zeta
# ---------------------------------------------------------------------------

_log_cache: dict[Tier, dict[int, object]] = {Tier.DOUBLE: {}, Tier.EXTENDED: {}}


def _ln(n: int, tier: Tier):
    cache = _log_cache[tier]
    if n not in cache:
        cache[n] = rlog(make_real(n, tier))
    return cache[n]


def _npow(n: int, s: ComplexValue) -> ComplexValue:
    """n**(-s) via exp(-s log n) with cached logs."""
    return cexp(s * (-1.0) * _ln(n, s.tier))


_zeta_cache: dict = {}
_ZETA_M = {Tier.DOUBLE: 32, Tier.EXTENDED: 64}


def zeta(s, tier=None) -> ComplexValue:
    """Riemann zeta by Euler-Maclaurin, reflecting into Re(s) >= 1/2."""
    s = _cv(s, tier)
    t = s.tier
    sre, sim = to_float(s.re), to_float(s.im)
    if abs(sre - 1.0) < 1e-12 and abs(sim) < 1e-12:
        raise PoleError("zeta pole at s = 1")
    if isinstance(s.re, DD):
        key = (s.re.hi, s.re.lo, s.im.hi, s.im.lo, t)
    else:
        key = (sre, sim, t)
    hit = _zeta_cache.get(key)
    if hit is not None:
        return hit
    exact_re = (s.re.lo == 0.0 and s.im.hi == 0.0 and s.im.lo == 0.0) \
        if isinstance(s.re, DD) else (sim == 0.0)
    if exact_re and sre <= 0.0 and sre == round(sre):
        # nonpositive integers: reflection would touch the s = 1 pole (at
        # s = 0) or multiply a sin zero by a huge zeta; use the exact
        # zeta(-n) = (-1)^n B_(n+1)/(n+1) instead.
        n = int(-sre)
        val = ComplexValue.make(
            Fraction((-1) ** n) * bernoulli(n + 1) / (n + 1), t)
        _zeta_cache[key] = val
        return val
    if sre < 0.5:
        # zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1 - s) zeta(1 - s)
        pi = pi_real(t)
        one = ComplexValue.make(1.0, t)
        val = (cpow(ComplexValue.make(2.0, t), s)
               * cpow(ComplexValue(pi, make_real(0.0, t)), s - 1.0)
               * csin(s * (pi * 0.5))
               * gamma(one - s)
               * zeta(one - s))
    else:
        M = _ZETA_M[t]
        acc = ComplexValue.make(1.0, t)
        for n in range(2, M):
            acc = acc + _npow(n, s)
        m_s = _npow(M, s)                   # M^(-s)
        one = ComplexValue.make(1.0, t)
        acc = acc + m_s * (M / (s - 1.0)) + m_s * 0.5
        if sre < 40.0:
            eps = 1e-36 if t is Tier.EXTENDED else 1e-18
            poch = s                         # s(s+1)...(s+2k-2), k=1 -> s
            mpow = m_s / M                   # M^(-s-1)
            inv_m2 = make_real(1.0, t) / make_real(M * M, t)
            best = math.inf
            scale = acc.abs_float()
            for k in range(1, 25):
                coeff = bernoulli(2 * k) / math.factorial(2 * k)
                term = mpow * poch * make_real(coeff, t)
                mag = term.abs_float()
                if mag > best:
                    break
                best = mag
                acc = acc + term
                if mag <= eps * scale:
                    break
                poch = poch * (s + (2 * k - 1.0)) * (s + (2 * k))
                mpow = mpow * inv_m2
        val = acc
    _zeta_cache[key] = val
    return val


# ---------------------------------------------------------------------------
# Shi / Chi and the combined kernel
# ---------------------------------------------------------------------------

def shi(z, tier=None) -> ComplexValue:
    """Hyperbolic sine integral: Shi(z) = sum z^(2k+1) / ((2k+1) (2k+1)!)."""
    z = _cv(z, tier)
    t = z.tier
    z2 = z * z
    term = z                    # z^(2k+1)/(2k+1)! carried separately
    acc = z
    eps = 1e-35 if t is Tier.EXTENDED else 1e-17
    for k in range(1, 400):
        term = term * z2 / ((2 * k) * (2 * k + 1.0))
        add = term / (2 * k + 1.0)
        acc = acc + add
        if add.abs_float() <= eps * acc.abs_float() + 1e-300:
            break
    return acc


def chi(z, tier=None) -> ComplexValue:
    """Hyperbolic cosine integral: gamma + log z + sum z^(2k) / ((2k) (2k)!)."""
    z = _cv(z, tier)
    t = z.tier
    if to_float(z.im) == 0.0 and to_float(z.re) <= 0.0:
        raise DomainError("chi is undefined on the branch cut (-inf, 0]")
    acc = clog(z) + ComplexValue(euler_gamma_real(t), make_real(0.0, t))
    z2 = z * z
    term = ComplexValue.make(1.0, t)    # z^(2k)/(2k)!
    eps = 1e-35 if t is Tier.EXTENDED else 1e-17
    for k in range(1, 400):
        term = term * z2 / ((2 * k - 1.0) * (2 * k))
        add = term / (2.0 * k)
        acc = acc + add
        if add.abs_float() <= eps * acc.abs_float() + 1e-300:
            break
    return acc


def _e1_cf(z: ComplexValue) -> ComplexValue:
    """e^z E1(z) by the modified Lentz continued fraction; |arg z| < pi."""
    t = z.tier
    tiny = ComplexValue.make(1e-290, t)
    one = ComplexValue.make(1.0, t)

    def _safe(x: ComplexValue) -> ComplexValue:
        return tiny if x.abs_float() < 1e-290 else x

    f = _safe(z)                     # b1 = z
    C = f
    D = ComplexValue.make(0.0, t)
    j = 1
    for _ in range(500):
        j += 1
        a = float(j // 2)            # a2=1,a3=1,a4=2,a5=2,...
        b = one if j % 2 == 0 else z
        D = _safe(b + D * a)
        C = _safe(b + (one / C) * a)
        D = one / D
        delta = C * D
        f = f * delta
        if (delta - 1.0).abs_float() < 1e-31:
            break
    return one / f


def _ei_series(z: ComplexValue) -> ComplexValue:
    """Ei(z) = gamma + Log z + sum z^k/(k k!) (principal log)."""
    t = z.tier
    acc = clog(z) + ComplexValue(euler_gamma_real(t), make_real(0.0, t))
    term = ComplexValue.make(1.0, t)
    peak = acc.abs_float()
    for k in range(1, 2000):
        term = term * z / float(k)
        add = term / float(k)
        acc = acc + add
        peak = max(peak, acc.abs_float())
        if add.abs_float() <= 1e-35 * peak:
            break
    return acc


def sinhshi_coshchi(z, tier=None) -> ComplexValue:
    """F(z) = sinh(z)Shi(z) - cosh(z)Chi(z) for |arg z| < pi.

    Internally always EXTENDED; returns at the caller's tier.  Regimes:
    |z| <= 20 direct series, 20 < |z| < 80 exponential-integral pair
    (e^z E1(z) - e^-z Ei(z))/2, |z| >= 80 the asymptotic -sum (2j-1)!/z^(2j)
    truncated at its smallest term.
    """
    z = _cv(z, tier)
    out_tier = z.tier
    re, im = to_float(z.re), to_float(z.im)
    if re == 0.0 and im == 0.0:
        raise DomainError("sinhshi_coshchi undefined at z = 0")
    if im == 0.0 and re < 0.0:
        raise DomainError("sinhshi_coshchi undefined on arg z = pi")
    w = z.promote()
    az = w.abs_float()
    if az > 20.0 and to_float(w.re) < 0.0:
        # reflect into Re >= 0 where the large-|z| routes are valid:
        # F(z) = F(-z) - i pi sign(Im z) cosh(z)
        sigma = 1.0 if to_float(w.im) > 0.0 else -1.0
        i_pi = ComplexValue(make_real(0.0, Tier.EXTENDED),
                            pi_real(Tier.EXTENDED) * sigma)
        val = sinhshi_coshchi(-w) - i_pi * ccosh(w)
        return val.retier(out_tier)
    if az <= 20.0:
        val = csinh(w) * shi(w) - ccosh(w) * chi(w)
    elif az < 80.0:
        # _e1_cf already carries the e^z factor
        val = (_e1_cf(w) - cexp(-w) * _ei_series(w)) * 0.5
    else:
        w2 = w * w
        inv = ComplexValue.make(1.0, Tier.EXTENDED) / w2
        term = inv                     # (2j-1)!/z^(2j), j = 1
        acc = ComplexValue.make(0.0, Tier.EXTENDED)
        best = math.inf
        for j in range(1, 200):
            mag = term.abs_float()
            if mag > best:
                break
            best = mag
            acc = acc + term
            term = term * inv * ((2 * j) * (2 * j + 1.0))
        val = -acc
    return val.retier(out_tier)


# ---------------------------------------------------------------------------
# power-log tails (sum_{n>M} n^-s log n etc. without zeta derivatives)
# ---------------------------------------------------------------------------

def tail_power_log(s: float, M: int, tier: Tier, depth: int = 4):
    """sum_{n>M} n^(-s) log n by Euler-Maclaurin, for real s > 1.

    Uses sum_{n>M} f(n) = int_M^inf f - f(M)/2 - sum_k B_2k/(2k)! f^(2k-1)(M)
    with f(x) = x^(-s) log x, whose derivatives satisfy
    f^(j)(x) = x^(-s-j) (A_j log x + B_j), A_{j+1} = -(s+j) A_j,
    B_{j+1} = A_j - (s+j) B_j.
    """
    if s <= 1.0:
        raise DomainError("tail_power_log requires s > 1")
    t = tier
    Mr = make_real(M, t)
    lnM = rlog(Mr)
    sm1 = make_real(s - 1.0, t)
    integral = cpowr(Mr, 1.0 - s, t) * (lnM / sm1 + 1.0 / (sm1 * sm1))
    fM = cpowr(Mr, -s, t) * lnM
    out = integral - fM * 0.5
    A = make_real(1.0, t)
    B = make_real(0.0, t)
    order = 0
    xpow = cpowr(Mr, -s, t)
    inv_m = 1.0 / Mr
    for k in range(1, depth + 1):
        while order < 2 * k - 1:
            A, B = A * (-(s + order)), A - B * (s + order)
            xpow = xpow * inv_m
            order += 1
        fd = xpow * (A * lnM + B)
        out = out - make_real(bernoulli(2 * k) / math.factorial(2 * k), t) * fd
    return out


def zeta_tail(s: float, M: int, tier: Tier):
    """sum_{n>M} n^(-s) by Euler-Maclaurin, for real s > 1, M >= 0.

    Computed directly (never as zeta(s) minus a partial sum, which loses
    most of the significant digits once the partial sum dominates).  Small
    M is bridged by an explicit sum up to 40 so the asymptotic corrections
    start where they converge well past both tiers' precision.
    """
    if s <= 1.0:
        raise DomainError("zeta_tail requires s > 1")
    t = tier
    base = max(M, 40)
    out = make_real(0.0, t)
    for n in range(M + 1, base + 1):
        out = out + cpowr(make_real(n, t), -s, t)
    Mr = make_real(base, t)
    out = out + cpowr(Mr, 1.0 - s, t) / make_real(s - 1.0, t)
    out = out - cpowr(Mr, -s, t) * 0.5
    poch = make_real(s, t)          # (s)_{2k-1}, k = 1
    xpow = cpowr(Mr, -s - 1.0, t)
    inv_m2 = 1.0 / (Mr * Mr)
    order = 1
    prev = math.inf
    for k in range(1, 41):
        while order < 2 * k - 1:
            poch = poch * (s + order) * (s + order + 1.0)
            xpow = xpow * inv_m2
            order += 2
        corr = make_real(bernoulli(2 * k) / math.factorial(2 * k), t) * poch * xpow
        mag = abs(to_float(corr))
        if mag > prev:
            break
        prev = mag
        out = out + corr
        if mag < 1e-40 * max(abs(to_float(out)), 1e-300):
            break
    return out


def cpowr(x, p: float, tier: Tier):
    """x**p for positive real x at the tier (real scalar)."""
    xr = make_real(x, tier)
    if p == int(p) and abs(p) <= 512:
        return rpow_int_real(xr, int(p)) if int(p) >= 0 else 1.0 / rpow_int_real(xr, -int(p))
    return rexp(make_real(p, tier) * rlog(xr))


def rpow_int_real(x, n: int):
    acc = None
    base = x
    m = n
    while m:
        if m & 1:
            acc = base if acc is None else acc * base
        base = base * base
        m >>= 1
    if acc is None:
        return make_real(1.0, Tier.EXTENDED if isinstance(x, DD) else Tier.DOUBLE)
    return acc

"""Meijer G reduction for the G^{N+1,1}_{1,2N+1} family, its Mellin-Barnes
quadrature oracle, and the associated Bessel-type kernel.

The family is parametrized by (a, N) with

  a_1 = 1/2 + (1-a)/2N,
  b_1..b_{N+1} = a_1, 1/N, 2/N, ..., N/N          (numerator group)
  b_{N+2}..b_{2N+1} = 1 + 3/2N - i/N, i = 1..N    (denominator group)

and reduces to

  G(z) = N^(N-a-1/2) * Gamma((1-N+a)/2)/Gamma((N-a)/2)
         * z^(1/2+(1-a)/2N) * 1F_{2N}(1; <1/2-(a+1)/2N+i/2N>_{i=1..2N}; (-1)^(N+1) z)
         + a_term(a, N, z).

The kernel K_nu(z) = 2^(mu+2/N-1) pi^((1-N)nu) z^(w+nu-2/N) G(z^2/4) on the
slice mu = 1/2, w = 0 has the large-z expansion

  K(z) ~ Bc * z^(-e0) * sum_k g_k z^(-2k),      e0 = 1 + 1/N + a/2N,

with g_k = (-1)^(k(N+1)+N) Gamma(N+a+2Nk+1) ((2N)^N / 2)^(-2k); the same
coefficients drive both the direct large-z route and the truncated
correction series used by the series-acceleration machinery.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field

from ._quadnodes import GL20_NODES, GL20_WEIGHTS, GL40_NODES, GL40_WEIGHTS
from .core import (
    ComplexValue,
    DivergentTailError,
    DomainError,
    PoleError,
    QuadratureError,
    ReductionPoleError,
    Tier,
    TruncationPolicy,
    cexp,
    clog,
    cpow,
    csin,
    make_real,
    pi_real,
    rexp,
    rlog,
    rsincos,
    rsqrt,
    to_float,
)
from .hyper import HyperParams, hyper_1fq
from .special import _near_nonpositive_integer, gamma, log_gamma


@dataclass
class MeijerReductionParams:
    a: object
    N: int
    z: object
    tier: Tier = field(default=None)


@dataclass
class BesselKNParams:
    mu: object
    nu: object
    w: object
    N: int
    z: object
    tier: Tier = field(default=None)


@dataclass
class QuadratureConfig:
    panel_width: float = 2.0
    decay: float = 1e-18
    t_max: float = 60.0
    fail_tol: float = 1e-7


def script_e(a, N: int, z, k: int, b: int, tier=None) -> ComplexValue:
    """(-1)^k exp(2N e^(pi i (2k+b)/2N) z^(1/2N) + pi i (2k+b)(a+1)/2N)."""
    if N < 1:
        raise DomainError("script_e needs N >= 1")
    t = Tier.coerce(tier)
    av = ComplexValue.make(a, t)
    zv = ComplexValue.make(z, t)
    if to_float(zv.re) == 0.0 and to_float(zv.im) == 0.0:
        raise DomainError("script_e undefined at z = 0")
    pi = pi_real(t)
    s, c = rsincos(pi * (2 * k + b) / (2 * N))
    direction = ComplexValue(c, s)
    zroot = cexp(clog(zv) / (2.0 * N))
    phase = ComplexValue.make(0.0, t) + (av + 1.0) * ComplexValue(
        make_real(0.0, t), pi * (2 * k + b) / (2 * N))
    val = cexp(direction * zroot * (2.0 * N) + phase)
    return val if k % 2 == 0 else -val


def _unit_power_of_i(p: int, t: Tier) -> ComplexValue:
    one = make_real(1.0, t)
    zero = make_real(0.0, t)
    return (ComplexValue(one, zero), ComplexValue(zero, one),
            ComplexValue(-one, zero), ComplexValue(zero, -one))[p % 4]


def a_term(a, N: int, z, tier=None) -> ComplexValue:
    """Exponential block of the reduced G: sums of script_e over three arcs."""
    t = Tier.coerce(tier)
    av = ComplexValue.make(a, t)
    zv = ComplexValue.make(z, t)
    pi = pi_real(t)
    half_pi_a = av * (pi / 2.0)
    i_pi_a = ComplexValue(make_real(0.0, t), pi) * av
    e_m1 = cexp(-i_pi_a)          # e^(-pi i a)
    e_m2 = cexp(-(i_pi_a + i_pi_a))
    z_pow = cexp(clog(zv) / float(N))
    root = rsqrt(pi / N)
    if N % 2 == 1:
        denom = csin(half_pi_a)
        if denom.abs_float() < 1e-9:
            raise ReductionPoleError(
                "a_term pole: sin(pi a/2) vanishes for odd N")
        sign = -1.0 if ((N + 1) // 2) % 2 == 1 else 1.0
        pref = z_pow * (sign / 2.0) * root / denom
        s1 = ComplexValue.make(0.0, t)
        for k in range(0, (N - 1) // 2 + 1):
            s1 = s1 + script_e(av, N, zv, k, 0, t)
        s2 = ComplexValue.make(0.0, t)
        for k in range((N + 1) // 2, (3 * N - 1) // 2 + 1):
            s2 = s2 + script_e(av, N, zv, k, 0, t)
        s3 = ComplexValue.make(0.0, t)
        for k in range((3 * N + 1) // 2, 2 * N):
            s3 = s3 + script_e(av, N, zv, k, 0, t)
        return pref * (s1 + e_m1 * s2 + e_m2 * s3)
    from .core import ccos
    denom = ccos(half_pi_a)
    if denom.abs_float() < 1e-9:
        raise ReductionPoleError("a_term pole: cos(pi a/2) vanishes for even N")
    pref = _unit_power_of_i(N + 1, t) * z_pow * root / (denom * 2.0)
    s1 = ComplexValue.make(0.0, t)
    for k in range(0, N // 2):
        s1 = s1 + script_e(av, N, zv, k, 1, t)
    s2 = ComplexValue.make(0.0, t)
    for k in range(N // 2, 3 * N // 2):
        s2 = s2 + script_e(av, N, zv, k, 1, t)
    s3 = ComplexValue.make(0.0, t)
    for k in range(3 * N // 2, 2 * N):
        s3 = s3 + script_e(av, N, zv, k, 1, t)
    return pref * (s1 - e_m1 * s2 + e_m2 * s3)


def _gamma_ratio(num_arg: ComplexValue, den_arg: ComplexValue, t: Tier) -> ComplexValue:
    """Gamma(num)/Gamma(den) with the denominator-pole -> 0 convention."""
    if _near_nonpositive_integer(num_arg):
        raise ReductionPoleError(
            "reduction prefactor Gamma((1-N+a)/2) is at a pole")
    if _near_nonpositive_integer(den_arg):
        return ComplexValue.make(0.0, t)
    return gamma(num_arg, t) / gamma(den_arg, t)


def meijer_g_reduced(params: MeijerReductionParams,
                     policy: TruncationPolicy = None) -> ComplexValue:
    """Closed form of G^{N+1,1}_{1,2N+1} for this family (see module doc)."""
    N = params.N
    if N < 1:
        raise DomainError("meijer_g_reduced needs N >= 1")
    t = Tier.coerce(params.tier)
    policy = policy or TruncationPolicy.for_tier(t)
    av = ComplexValue.make(params.a, t)
    zv = ComplexValue.make(params.z, t)
    if to_float(zv.re) == 0.0 and to_float(zv.im) == 0.0:
        raise DomainError("meijer_g_reduced undefined at z = 0")
    ratio = _gamma_ratio((av + (1.0 - N)) / 2.0, (-av + float(N)) / 2.0, t)
    hyper_part = ComplexValue.make(0.0, t)
    if ratio.abs_float() != 0.0:
        # 1/2 - (a+1)/2N + i/2N built with tier-exact division by 2N
        bs = [(ComplexValue.make(float(i), t) - av - 1.0) / (2.0 * N) + 0.5
              for i in range(1, 2 * N + 1)]
        arg = zv if N % 2 == 1 else -zv
        try:
            hyp = hyper_1fq(HyperParams(1.0, bs, arg, tier=t), policy)
        except PoleError as exc:
            raise ReductionPoleError(
                f"reduced hypergeometric parameter pole: {exc}") from exc
        pref = cpow(ComplexValue.make(float(N), t), -av + (N - 0.5))
        zpow = cexp(clog(zv) * ((-av + 1.0) / (2.0 * N) + 0.5))
        hyper_part = ratio * pref * zpow * hyp.value
    return hyper_part + a_term(av, N, zv, t)


def mellin_barnes_oracle(params: MeijerReductionParams,
                         quad: QuadratureConfig = None) -> ComplexValue:
    """Contour-integral evaluation of the same G, independent of the
    reduction: (1/2 pi) Integral f(c+it) dt with

      f(w) = Gamma(1-a_1+w) Prod_m Gamma(b_j-w) / Prod Gamma(1-d_j+w) * X^w.
    """
    quad = quad or QuadratureConfig()
    N = params.N
    if N < 1:
        raise DomainError("mellin_barnes_oracle needs N >= 1")
    t = Tier.DOUBLE
    av = ComplexValue.make(params.a, t)
    zv = ComplexValue.make(params.z, t)
    az = zv.abs_float()
    if not (0.1 <= az <= 50.0):
        raise DomainError("mellin_barnes_oracle requires 0.1 <= |z| <= 50")
    if to_float(zv.im) == 0.0 and to_float(zv.re) < 0.0:
        raise DomainError("mellin_barnes_oracle requires |arg z| < pi")
    a_re = to_float(av.re)
    a1 = ComplexValue.make(0.5, t) + (-av + 1.0) * (1.0 / (2 * N))
    bs_main = [a1] + [ComplexValue.make(i / N, t) for i in range(1, N + 1)]
    # 1 - b_j for the denominator group b_j = 1 + 3/2N - i/N is (2i-3)/2N
    dens = [ComplexValue.make((2 * i - 3) / (2.0 * N), t) for i in range(1, N + 1)]
    lo = to_float(a1.re) - 1.0
    hi = min(to_float(b.re) for b in bs_main)
    c = 0.5 * (lo + hi)
    # keep the contour off the (finitely many nearby) zeros of the integrand
    # denominator, where the Gamma calls would hit exact poles
    for d in dens:
        for k in range(0, 4):
            if abs(c + to_float(d.re) + k) < 1e-9:
                c += min(1e-3, 0.25 * (hi - lo))
    log_x = clog(zv)
    symmetric = (to_float(av.im) == 0.0 and to_float(zv.im) == 0.0
                 and to_float(zv.re) > 0.0)

    def integrand(tv: float) -> ComplexValue:
        w = ComplexValue(make_real(c, t), make_real(tv, t))
        num = gamma(-a1 + 1.0 + w, t)
        for b in bs_main:
            num = num * gamma(b - w, t)
        den = ComplexValue.make(1.0, t)
        for d in dens:
            den = den * gamma(d + w, t)
        return num / den * cexp(w * log_x)

    def sweep(direction: float):
        s20 = ComplexValue.make(0.0, t)
        s40 = ComplexValue.make(0.0, t)
        t0 = 0.0
        peak = 0.0
        while True:
            mid = t0 + 0.5 * quad.panel_width
            half = 0.5 * quad.panel_width
            p20 = ComplexValue.make(0.0, t)
            for x, wgt in zip(GL20_NODES, GL20_WEIGHTS):
                fv = integrand(direction * (mid + half * x[0]))
                p20 = p20 + fv * wgt[0]
            p40 = ComplexValue.make(0.0, t)
            for x, wgt in zip(GL40_NODES, GL40_WEIGHTS):
                fv = integrand(direction * (mid + half * x[0]))
                peak = max(peak, fv.abs_float())
                p40 = p40 + fv * wgt[0]
            s20 = s20 + p20 * half
            s40 = s40 + p40 * half
            t0 += quad.panel_width
            if integrand(direction * t0).abs_float() < quad.decay * peak:
                break
            if t0 >= quad.t_max:
                raise QuadratureError(
                    "mellin_barnes_oracle: integrand did not decay below "
                    f"{quad.decay} * peak by t = {quad.t_max}")
        return s20, s40

    s20, s40 = sweep(1.0)
    if symmetric:
        total20 = ComplexValue.make(2.0 * to_float(s20.re), t)
        total40 = ComplexValue.make(2.0 * to_float(s40.re), t)
    else:
        m20, m40 = sweep(-1.0)
        total20 = s20 + m20
        total40 = s40 + m40
    two_pi = 2.0 * math.pi
    r20 = total20 / two_pi
    r40 = total40 / two_pi
    scale = max(r40.abs_float(), 1e-300)
    if (r40 - r20).abs_float() / scale > quad.fail_tol:
        raise QuadratureError(
            "mellin_barnes_oracle: refinement discrepancy "
            f"{(r40 - r20).abs_float() / scale:.3e} exceeds {quad.fail_tol}")
    return r40


# ---------------------------------------------------------------------------
# Bessel-type kernel on the slice mu = 1/2, w = 0 and its large-z machinery.


_coeff_lock = threading.Lock()
_coeff_cache: dict = {}

_GAMMA_ARG_CAP = 160.0


def _a_key(av: ComplexValue):
    re, im = av.re, av.im
    if hasattr(re, "hi"):
        return (re.hi, re.lo, im.hi, im.lo)
    return (re, im)


def gamma_order_cap(N: int, a_re: float) -> int:
    """Largest k with N + Re a + 2Nk + 1 <= the safe Gamma argument cap."""
    return max(0, int((_GAMMA_ARG_CAP - N - a_re - 1.0) // (2 * N)))


def _c_series_coeffs(N: int, a, tier=None, kmax: int = None):
    """(Bc, e0, [g_0..g_kmax]) for K(z) ~ Bc z^(-e0) sum g_k z^(-2k)."""
    t = Tier.coerce(tier)
    av = ComplexValue.make(a, t)
    cap = gamma_order_cap(N, to_float(av.re))
    if kmax is None:
        kmax = cap
    if kmax > cap:
        raise DomainError(
            f"correction order {kmax} exceeds the Gamma argument range "
            f"(cap {cap} for N={N}, Re a={to_float(av.re)})")
    key = (N, _a_key(av), t, kmax)
    with _coeff_lock:
        hit = _coeff_cache.get(key)
    if hit is not None:
        return hit
    pi = pi_real(t)
    ln2 = rlog(make_real(2.0, t))
    ln_pi = rlog(pi)
    ln_2pi = rlog(pi * 2.0)
    ln_2n = rlog(make_real(2.0 * N, t))
    log_bc = ((av + 1.0) / float(N) + 0.5) * ln2 \
        + (av * (1.0 - N) / (2.0 * N) - float(N)) * ln_pi \
        + ComplexValue.make(N - 0.5, t) * ln_2pi \
        + (-av - (N + 0.5)) * ln_2n
    sin_prod = csin((-av + float(N)) * (pi / 2.0)) / (2.0 ** (N - 1))
    bc = cexp(log_bc) * sin_prod
    e0 = ComplexValue.make(1.0, t) / float(N) + av / (2.0 * N) + 1.0
    # base = (2N)^N / 2 and base^2 are exactly representable for N <= 5
    base_sq = make_real(float((2 * N) ** (2 * N)) / 4.0, t)
    inv_base_sq = make_real(1.0, t) / base_sq
    scale = make_real(1.0, t)
    gs = []
    sign_n = -1.0 if N % 2 == 1 else 1.0
    for k in range(kmax + 1):
        sgn = sign_n * (1.0 if (k * (N + 1)) % 2 == 0 else -1.0)
        g = gamma(av + float(N + 2 * N * k + 1), t) * scale * sgn
        gs.append(g)
        scale = scale * inv_base_sq
    out = (bc, e0, gs)
    with _coeff_lock:
        _coeff_cache[key] = out
    return out


def c_route_sum(N: int, a, z, k_lo: int = 0, k_hi: int = None,
                tier=None, force_all: bool = False):
    """Bc z^(-e0) sum_{k=k_lo}^{K} g_k z^(-2k) with K = k_hi or the index of
    the smallest term; returns (value, |last included term|)."""
    t = Tier.coerce(tier)
    zv = ComplexValue.make(z, t)
    bc, e0, gs = _c_series_coeffs(N, a, t, kmax=k_hi)
    if k_lo > len(gs) - 1:
        return ComplexValue.make(0.0, t), 0.0
    outer = bc * cexp(clog(zv) * (-e0))
    z2 = zv * zv
    zpow = cpow(z2, -k_lo) if k_lo else ComplexValue.make(1.0, t)
    acc = ComplexValue.make(0.0, t)
    prev = math.inf
    last = 0.0
    for k in range(k_lo, len(gs)):
        term = gs[k] * zpow
        mag = term.abs_float()
        if not force_all and mag > prev:
            break
        acc = acc + term
        last = mag
        prev = mag
        zpow = zpow / z2
    return outer * acc, (outer.abs_float() * last)


def osc_sum(N: int, a, z, tier=None) -> ComplexValue:
    """Exponentially small block of K(z) missing from the power series.

    On the positive axis the kernel is the algebraic series of c_route_sum
    plus decaying oscillatory exponentials: the phases e^(i pi (2k+b)/2N)
    with negative real part out of the same arc structure as a_term.  Their
    coefficients carry no correction series (checked against the reduction
    route down to the next exponential order, N = 1..5, real and complex a),
    but differ from the a_term blocks: the lateral block weights combine
    with the 1F_{2N} exponential growth so that only

      W_k = sigma i e^(-i pi a/2)            (N odd, N/2 < k < N)
      W_N = -sigma sin(pi a/2) e^(-i pi a)   (N odd, on-axis median)
      W_k = -sigma i e^(-3 i pi a/2)         (N odd, N < k < 3N/2)
      W_k = -i^(N+1) e^(-i pi a/2)           (N even, N/2 <= k < N)
      W_k = -i^(N+1) e^(-3 i pi a/2)         (N even, N <= k < 3N/2)

    survive, with sigma = (-1)^((N-1)/2).  All weights are entire in a (the
    sin(pi a/2) poles of the raw blocks cancel), so integer a needs no
    special casing here.  Normalization:

      K_osc(z) = pref(z) sqrt(pi/N) X^(1/N) sum_k W_k script_e(k, b; X)

    with X = z^2/4 and pref the same power prefactor as the kernel itself.
    """
    t = Tier.coerce(tier)
    av = ComplexValue.make(a, t)
    zv = ComplexValue.make(z, t)
    xv = zv * zv / 4.0
    pi = pi_real(t)
    nu = av / (2.0 * N)
    one_n = ComplexValue.make(1.0, t) / float(N)
    log_x = clog(xv)
    log_pref = (one_n * 2.0 - 0.5) * rlog(make_real(2.0, t)) \
        + nu * ((1.0 - N) * rlog(pi)) + clog(zv) * (nu - one_n * 2.0) \
        + log_x * one_n
    pref = cexp(log_pref) * rsqrt(pi / N)
    i_half_pi_a = ComplexValue(make_real(0.0, t), pi / 2.0) * av
    w_lo = cexp(-i_half_pi_a)
    w_hi = cexp(-(i_half_pi_a * 3.0))
    i_unit = ComplexValue(make_real(0.0, t), make_real(1.0, t))
    b = 0 if N % 2 == 1 else 1
    zroot = cexp(log_x / (2.0 * N)) * (2.0 * N)  # 2N X^(1/2N), shared below
    i_pi_ap1 = ComplexValue(make_real(0.0, t), pi / (2.0 * N)) * (av + 1.0)

    def phase_term(k: int) -> ComplexValue:
        s, c = rsincos(pi * (2 * k + b) / (2 * N))
        val = cexp(ComplexValue(c, s) * zroot + i_pi_ap1 * float(2 * k + b))
        return val if k % 2 == 0 else -val

    acc = ComplexValue.make(0.0, t)
    if N % 2 == 1:
        sigma = -1.0 if ((N - 1) // 2) % 2 == 1 else 1.0
        for k in range((N + 1) // 2, (3 * N - 1) // 2 + 1):
            if k < N:
                w = i_unit * w_lo * sigma
            elif k == N:
                w = csin(av * (pi / 2.0)) * cexp(-(i_half_pi_a * 2.0)) * (-sigma)
            else:
                w = i_unit * w_hi * (-sigma)
            acc = acc + w * phase_term(k)
    else:
        m_i = -_unit_power_of_i(N + 1, t)
        for k in range(N // 2, 3 * N // 2):
            acc = acc + m_i * (w_lo if k < N else w_hi) * phase_term(k)
    return pref * acc


# Per-N crossover (in E = 2N (z/2)^(1/N)) between the reduction route and
# the large-z route (power series + osc_sum).  The reduction loses digits
# like eps e^(E cos(pi/2N)); the large-z side floors at the optimal
# truncation remainder of the power series, so the crossover sits where
# those balance (measured against a high-precision reduction referee; the
# worst kernel error at the switch is ~1e-8 relative, N=3, a=1.5).
_E_STAR = {1: 32.0, 2: 38.0, 3: 32.0, 4: 33.0, 5: 32.0}


def _use_c_route(N: int, z_abs: float) -> bool:
    big_e = 2.0 * N * (z_abs / 2.0) ** (1.0 / N)
    return big_e >= _E_STAR.get(N, 60.0)


def c_route_z_threshold(N: int) -> float:
    """|z| above which _k_slice switches to the large-z route."""
    return 2.0 * (_E_STAR.get(N, 60.0) / (2.0 * N)) ** N


def _k_slice(N: int, a, z, tier=None, policy: TruncationPolicy = None) -> ComplexValue:
    """Kernel K(z) at mu=1/2, w=0, written in terms of a = 2 N nu."""
    t = Tier.coerce(tier)
    zv = ComplexValue.make(z, t)
    if _use_c_route(N, zv.abs_float()):
        val, _ = c_route_sum(N, a, zv, 0, None, t)
        return val + osc_sum(N, a, zv, t)
    # moderate z: reduce through the G closed form; the two blocks of the
    # reduction cancel to the power-law scale, so work in the wide tier
    te = Tier.EXTENDED
    av = ComplexValue.make(a, te)
    ze = ComplexValue.make(zv, te)
    x = ze * ze / 4.0
    g = meijer_g_reduced(MeijerReductionParams(av, N, x, tier=te),
                         policy or TruncationPolicy.for_tier(te))
    nu = av / (2.0 * N)
    one_n = ComplexValue.make(1.0, te) / float(N)
    log_pref = (one_n * 2.0 - 0.5) * rlog(make_real(2.0, te)) \
        + nu * ((1.0 - N) * rlog(pi_real(te))) \
        + clog(ze) * (nu - one_n * 2.0)
    out = cexp(log_pref) * g
    return out.demote() if t is Tier.DOUBLE else out


def mu_k_nu(params: BesselKNParams, policy: TruncationPolicy = None) -> ComplexValue:
    """Kernel K_nu^(N)(z, w) on the implemented slice mu = 1/2, w = 0."""
    t = Tier.coerce(params.tier)
    mu = ComplexValue.make(params.mu, t)
    w = ComplexValue.make(params.w, t)
    if (mu - 0.5).abs_float() > 1e-12 or w.abs_float() > 1e-12:
        raise DomainError("mu_k_nu implements the slice mu = 1/2, w = 0 only")
    nu = ComplexValue.make(params.nu, t)
    a = nu * (2.0 * params.N)
    return _k_slice(params.N, a, params.z, t, policy)


def mu_k_nu_asymptotic(params: BesselKNParams, m: int) -> ComplexValue:
    """Large-z expansion of the kernel for general (mu, nu, w), truncated
    after the k = m term; raises DIVERGENT_TAIL if terms grow before m."""
    if m < 0:
        raise DomainError("mu_k_nu_asymptotic needs m >= 0")
    N = params.N
    t = Tier.coerce(params.tier)
    mu = ComplexValue.make(params.mu, t)
    nu = ComplexValue.make(params.nu, t)
    w = ComplexValue.make(params.w, t)
    zv = ComplexValue.make(params.z, t)
    pi = pi_real(t)
    ln2 = rlog(make_real(2.0, t))
    one_n = ComplexValue.make(1.0, t) / float(N)
    log_pref = (mu * 3.0 + nu * 2.0 + w * 2.0 + one_n - 1.0) * ln2 \
        + (nu * (1.0 - N) - float(N)) * rlog(pi) \
        - (mu * 2.0 + nu + w + one_n) * clog(zv)
    pref = cexp(log_pref) * csin((mu + nu) * pi)
    for i in range(2, N + 1):
        pref = pref * csin((mu + nu + w - one_n * (i - 1.0)) * pi)
    z_half_sq = (zv / 2.0) * (zv / 2.0)
    acc = ComplexValue.make(0.0, t)
    zpow = ComplexValue.make(1.0, t)
    prev = math.inf
    sign_n = -1.0 if N % 2 == 1 else 1.0
    for k in range(m + 1):
        term = gamma(mu + w + (0.5 + k), t) * gamma(mu + nu + (1.0 + k), t) \
            / math.factorial(k)
        for i in range(1, 2 * N):
            term = term * gamma(mu + nu + w + (one_n * (0.5 * i) + float(k)), t)
        sgn = sign_n * (1.0 if (k * (N + 1)) % 2 == 0 else -1.0)
        term = term * zpow * sgn
        mag = term.abs_float()
        if mag > prev:
            raise DivergentTailError(
                f"kernel asymptotic series diverges at k={k} before m={m} "
                f"(|z| too small for this order)")
        prev = mag
        acc = acc + term
        zpow = zpow / z_half_sq
    return pref * acc


def c_mn(m: int, N: int, mu, nu, w, z, tier=None) -> ComplexValue:
    """Truncated correction block C_{m,N}(mu,nu,w;z) in the multiplication-
    collapsed form, evaluated through log_gamma."""
    if m < 0 or N < 1:
        raise DomainError("c_mn needs m >= 0 and N >= 1")
    t = Tier.coerce(tier)
    muv = ComplexValue.make(mu, t)
    nuv = ComplexValue.make(nu, t)
    wv = ComplexValue.make(w, t)
    zv = ComplexValue.make(z, t)
    s = muv + nuv + wv
    for k in range(m + 1):
        for arg in (muv + wv + (0.5 + k), muv + nuv + (1.0 + k),
                    s + (float(k) + 1.0), s * (2.0 * N) + (2.0 * N * k + 1.0)):
            if _near_nonpositive_integer(arg):
                raise PoleError("c_mn: Gamma argument at a pole")
    pi = pi_real(t)
    ln_2n = rlog(make_real(2.0 * N, t))
    pref = cexp(rlog(pi * 2.0) * (N - 0.5) - (s * (2.0 * N) + 0.5) * ln_2n)
    acc = ComplexValue.make(0.0, t)
    log_z2 = clog(zv / 2.0)
    sign_n = -1.0 if N % 2 == 1 else 1.0
    for k in range(m + 1):
        lg = log_gamma(muv + wv + (0.5 + k), t) \
            + log_gamma(muv + nuv + (1.0 + k), t) \
            - log_gamma(s + float(k) + 1.0, t) \
            + log_gamma(s * (2.0 * N) + (2.0 * N * k + 1.0), t)
        term = cexp(lg - log_z2 * (2.0 * k))
        term = term / math.factorial(k)
        term = term * rexp(ln_2n * (-2.0 * N * k))
        sgn = sign_n * (1.0 if (k * (N + 1)) % 2 == 0 else -1.0)
        acc = acc + term * sgn
    return pref * acc


def _c_mn_direct(m: int, N: int, mu, nu, w, z, tier=None) -> ComplexValue:
    """Direct product form of C_{m,N}, kept for cross-checking c_mn."""
    t = Tier.coerce(tier)
    muv = ComplexValue.make(mu, t)
    nuv = ComplexValue.make(nu, t)
    wv = ComplexValue.make(w, t)
    zv = ComplexValue.make(z, t)
    s = muv + nuv + wv
    acc = ComplexValue.make(0.0, t)
    z_half_sq = (zv / 2.0) * (zv / 2.0)
    zpow = ComplexValue.make(1.0, t)
    one_2n = ComplexValue.make(1.0, t) / (2.0 * N)
    sign_n = -1.0 if N % 2 == 1 else 1.0
    for k in range(m + 1):
        term = gamma(muv + wv + (0.5 + k), t) * gamma(muv + nuv + (1.0 + k), t)
        for i in range(1, 2 * N):
            term = term * gamma(s + (one_2n * float(i) + float(k)), t)
        sgn = sign_n * (1.0 if (k * (N + 1)) % 2 == 0 else -1.0)
        acc = acc + term * zpow * (sgn / math.factorial(k))
        zpow = zpow / z_half_sq
    return acc

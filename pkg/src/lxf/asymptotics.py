"""Small-y expansion of the power-weighted Lambert sum, the q -> 1- estimate
of the power-partition product F_N(q), and numerical estimation of its
constant term.

The expansion implemented by sigma_series_asymptotic is

  sum_n sigma_(2Nm-1+N)^(N)(n) e^(-ny)
      = (2m)! zeta(2m+1)/(N y^(2m+1)) - B_(2Nm)/(2Nm y)
        - (-1)^m (4/(2pi)^(2Nm)) sum_{j=1..r+1}
              Gamma(2Nm+2Nj) zeta(2Nm+2Nj) zeta(2j) y^(2j-1) / (2pi)^(2j(N+1))
        + O(y^(2r+3)),

valid for odd N as y -> 0+.  The series in j is asymptotic, not convergent:
the Gamma factor eventually outruns the (2pi)^(2j(N+1)) denominator, so
evaluate_report flags evaluations whose truncation extends past the
smallest-term index.

For the product F_N(q) = prod_n (1 - q^(n^N))^(-n^(2N-1)) the q -> 1-
estimate is

  log F_N(q) = c + (B_(2N)/2N) log|log q| + zeta(3)/(N log^2 q)
               - sum_{j=1..r+1} delta_j (log q)^(2j) + O((log q)^(2r+4)),

where the power of log q is taken on the modulus (log q < 0 on (0,1); the
discarded branch phase e^(i pi B_(2N)/2N) is available separately from
fn_branch_phase).  The constant c is known in closed form only for N = 1,
as the integral computed by wright_constant_n1; c_estimate fits it
numerically for any odd N.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    ComplexValue,
    DomainError,
    QuadratureError,
    Tier,
    TruncationPolicy,
    UnstableFitError,
    cexp,
    clog,
    make_real,
    pi_real,
    rexp,
    rlog,
    sum_series,
    to_float,
)
from .arith import partition_counts
from .ddarith import DD
from .special import bernoulli, zeta
from ._quadnodes import GL20_NODES, GL20_WEIGHTS, GL40_NODES, GL40_WEIGHTS


# ---------------------------------------------------------------------------
# small-y expansion of the Lambert sum
# ---------------------------------------------------------------------------

def _require_odd(N: int, who: str) -> None:
    if N < 1 or N % 2 == 0:
        raise DomainError(f"{who} requires odd N >= 1, got {N}")


def _poly_coefficient(N: int, m: int, j: int, t: Tier) -> ComplexValue:
    """Coefficient of y^(2j-1): -(-1)^m 4 Gamma(2Nm+2Nj) zeta(2Nm+2Nj) zeta(2j)
    / (2pi)^(2Nm + 2j(N+1))."""
    two_pi = 2.0 * pi_real(t)
    gam = ComplexValue.make(math.factorial(2 * N * m + 2 * N * j - 1), t)
    num = gam * zeta(ComplexValue.make(2 * N * m + 2 * N * j, t)) \
        * zeta(ComplexValue.make(2 * j, t)) * 4.0
    den = cexp(ComplexValue.make(2 * N * m + 2 * j * (N + 1), t)
               * rlog(two_pi))
    sign = -1.0 if m % 2 == 0 else 1.0
    return num / den * sign


def _ipow(z: ComplexValue, k: int) -> ComplexValue:
    return cexp(clog(z) * float(k))


@dataclass
class AsymptoticExpansion:
    """Truncated small-y expansion; coefficients[j-1] multiplies y^(2j-1)."""

    N: int
    m: int
    r: int
    coefficients: tuple
    leading: tuple          # ((power, coefficient), ...) for y^(-2m-1), y^(-1)
    tier: Tier

    def evaluate(self, y) -> ComplexValue:
        value, _ = self.evaluate_report(y)
        return value

    def evaluate_report(self, y):
        """Value plus flags; flags PAST_OPTIMAL_TRUNCATION when the kept
        polynomial terms extend beyond the smallest-term index at this y."""
        t = self.tier
        yv = ComplexValue.make(y, t)
        total = ComplexValue.make(0.0, t)
        for power, coef in self.leading:
            total = total + coef * _ipow(yv, power)
        flags: list = []
        prev = math.inf
        growing_at = None
        for j, coef in enumerate(self.coefficients, start=1):
            term = coef * _ipow(yv, 2 * j - 1)
            total = total + term
            mag = term.abs_float()
            if growing_at is None and mag > prev:
                growing_at = j
            prev = mag
        if growing_at is not None:
            flags.append("PAST_OPTIMAL_TRUNCATION")
        return total, flags

    def smallest_term_index(self, y) -> int:
        """Index j (1-based) of the smallest kept polynomial term at y."""
        t = self.tier
        yv = ComplexValue.make(y, t)
        best, best_j = math.inf, 1
        for j, coef in enumerate(self.coefficients, start=1):
            mag = (coef * _ipow(yv, 2 * j - 1)).abs_float()
            if mag < best:
                best, best_j = mag, j
        return best_j

    def to_json_dict(self) -> dict:
        def _pair(v: ComplexValue):
            return [to_float(v.re), to_float(v.im)]
        return {
            "N": self.N,
            "m": self.m,
            "r": self.r,
            "leading": [[p, _pair(c)] for p, c in self.leading],
            "coefficients": [_pair(c) for c in self.coefficients],
            "remainder_order": 2 * self.r + 3,
        }


def sigma_series_asymptotic(N: int, m: int, r: int,
                            tier=None) -> AsymptoticExpansion:
    """Expansion of sum_n sigma_(2Nm-1+N)^(N)(n) e^(-ny) to remainder order
    y^(2r+3); see the module docstring."""
    _require_odd(N, "sigma_series_asymptotic")
    if m < 1:
        raise DomainError(f"sigma_series_asymptotic requires m >= 1, got {m}")
    if r < 0:
        raise DomainError(f"sigma_series_asymptotic requires r >= 0, got {r}")
    t = Tier.coerce(tier)
    lead_sing = zeta(ComplexValue.make(2 * m + 1, t)) \
        * ComplexValue.make(math.factorial(2 * m), t) / float(N)
    lead_pole = ComplexValue.make(-bernoulli(2 * N * m) / (2 * N * m), t)
    coefs = tuple(_poly_coefficient(N, m, j, t) for j in range(1, r + 2))
    return AsymptoticExpansion(
        N=N, m=m, r=r, coefficients=coefs,
        leading=((-(2 * m + 1), lead_sing), (-1, lead_pole)),
        tier=t)


# ---------------------------------------------------------------------------
# q -> 1- estimate of F_N(q)
# ---------------------------------------------------------------------------

def delta_j(N: int, j: int, tier=None) -> ComplexValue:
    """2 Gamma(2N+2Nj) zeta(2N+2Nj) zeta(2j) / ((2pi)^(2N) j (2pi)^(2j(N+1)))."""
    _require_odd(N, "delta_j")
    if j < 1:
        raise DomainError(f"delta_j requires j >= 1, got {j}")
    t = Tier.coerce(tier)
    two_pi = 2.0 * pi_real(t)
    num = ComplexValue.make(math.factorial(2 * N + 2 * N * j - 1), t) \
        * zeta(ComplexValue.make(2 * N + 2 * N * j, t)) \
        * zeta(ComplexValue.make(2 * j, t)) * 2.0
    den = cexp(ComplexValue.make(2 * N + 2 * j * (N + 1), t) * rlog(two_pi)) \
        * float(j)
    return num / den


def _check_q(N: int, q: float, who: str) -> None:
    _require_odd(N, who)
    if not (0.0 < float(q) < 1.0):
        raise DomainError(f"{who} requires q in (0,1), got {q}")


def _known_log_terms(N: int, q, r, t: Tier) -> ComplexValue:
    """(B_2N/2N) log eps + zeta(3)/(N eps^2) - sum_{j<=J} delta_j eps^(2j),
    eps = -log q.  r = None picks J by optimal truncation (smallest term)."""
    qv = make_real(q, t)
    eps = -rlog(qv)
    eps_cv = ComplexValue(eps, make_real(0.0, t))
    b_over = ComplexValue.make(bernoulli(2 * N) / (2 * N), t)
    total = b_over * rlog(eps) \
        + zeta(ComplexValue.make(3.0, t)) / _ipow(eps_cv, 2) / float(N)
    prev = math.inf
    j = 1
    while True:
        if r is not None and j > r + 1:
            break
        term = delta_j(N, j, t) * _ipow(eps_cv, 2 * j)
        mag = term.abs_float()
        if r is None and (mag > prev or j > 12):
            break
        total = total - term
        prev = mag
        j += 1
    return total


def fn_branch_phase(N: int, tier=None) -> ComplexValue:
    """The branch factor e^(i pi B_2N/2N) discarded by the modulus convention
    for (log q)^(B_2N/2N); recorded separately, never folded into values."""
    _require_odd(N, "fn_branch_phase")
    t = Tier.coerce(tier)
    theta = make_real(bernoulli(2 * N) / (2 * N), t) * pi_real(t)
    return cexp(ComplexValue(make_real(0.0, t), theta))


def fn_asymptotic_log(N: int, q, r: int, c_estimate=0.0,
                      tier=None) -> ComplexValue:
    """log-modulus of the F_N(q) estimate: c + (B_2N/2N) log|log q|
    + zeta(3)/(N log^2 q) - sum_{j=1..r+1} delta_j (log q)^(2j).

    This is the form to use near q = 1, where the modulus itself overflows
    any fixed-exponent float (log F_1(0.99) ~ 1.2e4).
    """
    _check_q(N, q, "fn_asymptotic_log")
    t = Tier.coerce(tier)
    return ComplexValue.make(c_estimate, t) + _known_log_terms(N, q, r, t)


def fn_asymptotic(N: int, q, r: int, c_estimate=0.0, tier=None) -> ComplexValue:
    """exp of fn_asymptotic_log: the modulus of the F_N(q) estimate.

    Raises OverflowError once the modulus exceeds the tier's float range;
    callers working near q = 1 should stay in log space.
    """
    return cexp(fn_asymptotic_log(N, q, r, c_estimate, tier))


def fn_exact_log(N: int, q, policy: TruncationPolicy = None,
                 tier=None) -> ComplexValue:
    """log F_N(q) = -sum_n n^(2N-1) log(1 - q^(n^N)), summed to convergence.

    Converges for every q in (0,1) (terms ~ n^(2N-1) q^(n^N)); this is the
    numerically safe exact route near q = 1, where coefficient partial sums
    of the product need n far beyond any practical table.
    """
    _check_q(N, q, "fn_exact_log")
    t = Tier.coerce(tier)
    policy = policy or TruncationPolicy.for_tier(t)
    qv = make_real(q, t)
    log_q = rlog(qv)

    def term(n: int) -> ComplexValue:
        # -n^(2N-1) log(1 - e^(n^N log q)); terms decay like n^(2N-1) q^(n^N),
        # nearly geometric at N = 1 for q close to 1, so the summation has to
        # carry the r/(1-r) tail inflation rather than stop per-term.
        inner = cexp(ComplexValue(make_real(n ** N, t)
                                  * log_q, make_real(0.0, t)))
        return clog(ComplexValue.make(1.0, t) - inner) * float(-(n ** (2 * N - 1)))

    res = sum_series(term, policy, start=1)
    if not res.converged:
        raise DomainError(f"fn_exact_log did not converge within "
                          f"{policy.max_terms} terms at q = {q}")
    return res.value


def fn_exact_via_partitions(N: int, q, n_max: int, tier=None):
    """Partial sum sum_{n<=n_max} P_N(n) q^n of the coefficient expansion,
    with a geometric tail estimate.

    Returns (value, flags).  The term ratio P(n+1)q^(n+1)/(P(n)q^n) exceeds 1
    until n is past the saddle (near 2 zeta(3)/eps^3 for N = 1), so for q
    close to 1 no practical n_max converges; flags NON_CONVERGED in that
    case rather than returning a misleadingly finite partial sum.
    """
    _check_q(N, q, "fn_exact_via_partitions")
    t = Tier.coerce(tier)
    qv = make_real(q, t)
    log_q = rlog(qv)
    table = partition_counts(N, n_max)
    total = ComplexValue.make(table.counts[0], t)      # n = 0 term
    ratio_small = 0
    prev_mag = math.inf
    for n, count in enumerate(table.counts[1:], start=1):
        term = ComplexValue.make(count, t) \
            * cexp(ComplexValue(log_q * float(n), make_real(0.0, t)))
        total = total + term
        mag = term.abs_float()
        if mag < prev_mag and mag <= 1e-6 * total.abs_float():
            ratio_small += 1
        else:
            ratio_small = 0
        prev_mag = mag
    flags = [] if ratio_small >= 3 else ["NON_CONVERGED"]
    return total, flags


# ---------------------------------------------------------------------------
# the constant c
# ---------------------------------------------------------------------------

def _node_real(pair, t: Tier):
    """A (hi, lo) quadrature table entry at the tier's real width."""
    if t is Tier.EXTENDED:
        return DD(pair[0], pair[1])
    return pair[0] + pair[1]


def _gl_panel(f, lo, hi, t: Tier):
    """(GL20, GL40) estimates of int_lo^hi f, nodes applied at full DD width."""
    half = (make_real(hi, t) - make_real(lo, t)) * 0.5
    mid = (make_real(hi, t) + make_real(lo, t)) * 0.5
    s20 = make_real(0.0, t)
    for x, w in zip(GL20_NODES, GL20_WEIGHTS):
        s20 = s20 + f(mid + half * _node_real(x, t)) * _node_real(w, t)
    s40 = make_real(0.0, t)
    for x, w in zip(GL40_NODES, GL40_WEIGHTS):
        s40 = s40 + f(mid + half * _node_real(x, t)) * _node_real(w, t)
    return s20 * half, s40 * half


def wright_constant_n1(panels: int = 1, tier=None) -> ComplexValue:
    """c for N = 1 as the integral 2 int_0^inf y log y / (e^(2 pi y) - 1) dy.

    [0,1] is covered by panels shrinking dyadically toward the (integrable)
    log singularity at 0; [1,oo) is mapped by u = e^(-2 pi y) onto
    (0, e^(-2 pi)], again with dyadic panels toward u = 0.  `panels` equal
    Gauss-Legendre sub-panels per dyadic interval; every panel is evaluated
    at both 20 and 40 nodes and the refinement discrepancy must stay below
    1e-10, else QUADRATURE_FAIL.
    """
    if panels < 1:
        raise DomainError("wright_constant_n1 requires panels >= 1")
    t = Tier.coerce(tier)
    two_pi = 2.0 * pi_real(t)

    def body(y):
        # y log y / (e^(2 pi y) - 1)
        e = rexp(-(two_pi * y))
        return y * rlog(y) * e / (make_real(1.0, t) - e)

    def tail(u):
        # substituted [1,oo) piece: y = -log u/(2 pi),
        # integrand dy = y log y/(1-u) * du/(2 pi)
        y = -rlog(u) / two_pi
        return y * rlog(y) / (make_real(1.0, t) - u) / two_pi

    total20 = make_real(0.0, t)
    total40 = make_real(0.0, t)

    def add_dyadic(f, top, levels):
        nonlocal total20, total40
        hi = top
        for _ in range(levels):
            lo = hi * 0.5
            width = (hi - lo) / panels
            for i in range(panels):
                a = lo + i * width
                s20, s40 = _gl_panel(f, a, a + width, t)
                total20 = total20 + s20
                total40 = total40 + s40
            hi = lo

    add_dyadic(body, 1.0, 48)
    add_dyadic(tail, math.exp(-2.0 * math.pi), 100)
    r20 = 2.0 * to_float(total20)
    r40 = 2.0 * to_float(total40)
    if abs(r40 - r20) > 1e-10:
        raise QuadratureError(
            f"wright_constant_n1: refinement discrepancy {abs(r40 - r20):.3e}")
    return ComplexValue(2.0 * total40, make_real(0.0, t))


@dataclass
class FitResult:
    """Constant-c fit: value is the window mean, spread is max - min."""

    value: ComplexValue
    spread: float
    window: tuple
    samples: tuple          # ((q, c_q ComplexValue), ...)

    def to_json_dict(self) -> dict:
        return {
            "value": [to_float(self.value.re), to_float(self.value.im)],
            "spread": self.spread,
            "window": list(self.window),
            "samples": [[q, to_float(c.re), to_float(c.im)]
                        for q, c in self.samples],
        }


def c_estimate(N: int, window: tuple = (0.9, 0.99), samples: int = 9,
               r: int = None, tier=None,
               policy: TruncationPolicy = None) -> FitResult:
    """Fit the constant in the F_N estimate: average of
    log F_N(q) - known terms over a q-grid on `window`.

    r = None truncates the delta series at its smallest term per sample
    (the series is asymptotic; a fixed deep r would diverge at the small-q
    end of the window).  Raises UNSTABLE_FIT when max - min over the window
    exceeds 1e-2; the surviving spread is dominated by the expansion's own
    remainder, so it doubles as the error bar on the returned constant.
    """
    _require_odd(N, "c_estimate")
    lo, hi = float(window[0]), float(window[1])
    if not (0.0 < lo < hi < 1.0):
        raise DomainError(f"c_estimate window must sit inside (0,1), got {window}")
    if samples < 2:
        raise DomainError("c_estimate requires samples >= 2")
    t = Tier.coerce(tier)
    pts = []
    for i in range(samples):
        q = lo + (hi - lo) * i / (samples - 1)
        c_q = fn_exact_log(N, q, policy, t) - _known_log_terms(N, q, r, t)
        pts.append((q, c_q))
    reals = [to_float(c.re) for _, c in pts]
    mean = sum(reals) / len(reals)
    spread = max(reals) - min(reals)
    if spread > 1e-2:
        raise UnstableFitError(
            f"c_estimate(N={N}): window spread {spread:.3e} exceeds 1e-2")
    return FitResult(value=ComplexValue.make(mean, t), spread=spread,
                     window=(lo, hi), samples=tuple(pts))

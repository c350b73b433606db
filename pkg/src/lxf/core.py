"""Precision tiers, complex values, series summation and report types.

Everything numerical in this package flows through :class:`ComplexValue`,
whose real and imaginary parts are either plain floats (DOUBLE tier) or
:class:`~lxf.ddarith.DD` pairs (EXTENDED tier, ~31 digits).  The scalar
helpers ``rexp``/``rlog``/... dispatch on the component type so that the
special-function code is written once and runs at either tier.
"""

from __future__ import annotations

import enum
import json
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Union

from .ddarith import (
    DD,
    dd_atan2,
    dd_exp,
    dd_ipow,
    dd_log,
    dd_sincos,
    dd_sqrt,
    EULER_GAMMA,
    LOG_2PI,
    PI,
    TWO_PI,
)

Real = Union[float, DD]


# ---------------------------------------------------------------------------
# errors and flags
# ---------------------------------------------------------------------------

class LxfError(Exception):
    """Base class for structured numeric errors; ``code`` is machine readable."""

    code = "ERROR"

    def __init__(self, message: str = ""):
        super().__init__(message or self.code)


class PoleError(LxfError):
    code = "POLE"


class DomainError(LxfError):
    code = "DOMAIN"


class ReductionPoleError(LxfError):
    code = "REDUCTION_POLE"


class QuadratureError(LxfError):
    code = "QUADRATURE_FAIL"


class DivergentTailError(LxfError):
    code = "DIVERGENT_TAIL"


class UnstableFitError(LxfError):
    code = "UNSTABLE_FIT"


# Diagnostic flags attached to results (not exceptions).
CANCELLATION_WARNING = "CANCELLATION_WARNING"
NON_CONVERGED = "NON_CONVERGED"


# ---------------------------------------------------------------------------
# tiers
# ---------------------------------------------------------------------------

class Tier(enum.Enum):
    DOUBLE = "double"
    EXTENDED = "extended"

    @classmethod
    def from_env(cls, default: "Tier" = None) -> "Tier":
        name = os.environ.get("LXF_TIER", "").strip().lower()
        if name in ("double", "extended"):
            return cls(name)
        return default if default is not None else cls.DOUBLE

    @classmethod
    def coerce(cls, value) -> "Tier":
        if value is None:
            return cls.from_env()
        if isinstance(value, cls):
            return value
        return cls(str(value).strip().lower())


def make_real(x, tier: Tier) -> Real:
    """Coerce a Python number (or DD) to the tier's real scalar type."""
    if tier is Tier.EXTENDED:
        if isinstance(x, DD):
            return x
        if isinstance(x, int):
            return DD.from_int(x)
        if isinstance(x, Fraction):
            return DD.from_fraction(x)
        return DD(float(x))
    if isinstance(x, DD):
        return x.to_float()
    return float(x)


def to_float(x: Real) -> float:
    return x.to_float() if isinstance(x, DD) else float(x)


def tier_of_real(x: Real) -> Tier:
    return Tier.EXTENDED if isinstance(x, DD) else Tier.DOUBLE


def pi_real(tier: Tier) -> Real:
    return DD(PI.hi, PI.lo) if tier is Tier.EXTENDED else math.pi


def euler_gamma_real(tier: Tier) -> Real:
    return DD(EULER_GAMMA.hi, EULER_GAMMA.lo) if tier is Tier.EXTENDED else EULER_GAMMA.hi + EULER_GAMMA.lo


def log_2pi_real(tier: Tier) -> Real:
    return DD(LOG_2PI.hi, LOG_2PI.lo) if tier is Tier.EXTENDED else LOG_2PI.to_float()


# -- tier-generic scalar functions ------------------------------------------

def rexp(x: Real) -> Real:
    return dd_exp(x) if isinstance(x, DD) else math.exp(x)


def rlog(x: Real) -> Real:
    if isinstance(x, DD):
        return dd_log(x)
    if x <= 0.0:
        raise ValueError("rlog requires a positive argument")
    return math.log(x)


def rsqrt(x: Real) -> Real:
    return dd_sqrt(x) if isinstance(x, DD) else math.sqrt(x)


def rsincos(x: Real) -> tuple[Real, Real]:
    if isinstance(x, DD):
        return dd_sincos(x)
    return math.sin(x), math.cos(x)


def ratan2(y: Real, x: Real) -> Real:
    if isinstance(y, DD) or isinstance(x, DD):
        if not isinstance(y, DD):
            y = DD(float(y))
        if not isinstance(x, DD):
            x = DD(float(x))
        return dd_atan2(y, x)
    return math.atan2(y, x)


def rpow_int(x: Real, n: int) -> Real:
    if isinstance(x, DD):
        return dd_ipow(x, n)
    return float(x) ** n


# ---------------------------------------------------------------------------
# complex values
# ---------------------------------------------------------------------------

class ComplexValue:
    """Complex number with float or DD components (both the same kind)."""

    __slots__ = ("re", "im")

    def __init__(self, re: Real, im: Real):
        self.re = re
        self.im = im

    @property
    def tier(self) -> Tier:
        return Tier.EXTENDED if isinstance(self.re, DD) else Tier.DOUBLE

    # -- constructors -------------------------------------------------------

    @staticmethod
    def make(value, tier: Tier) -> "ComplexValue":
        if isinstance(value, ComplexValue):
            return ComplexValue(make_real(value.re, tier), make_real(value.im, tier))
        if isinstance(value, complex):
            return ComplexValue(make_real(value.real, tier), make_real(value.imag, tier))
        if isinstance(value, (int, float, DD, Fraction)):
            return ComplexValue(make_real(value, tier), make_real(0.0, tier))
        raise TypeError(f"cannot make ComplexValue from {type(value)!r}")

    def promote(self) -> "ComplexValue":
        return ComplexValue.make(self, Tier.EXTENDED)

    def demote(self) -> "ComplexValue":
        return ComplexValue.make(self, Tier.DOUBLE)

    def retier(self, tier: Tier) -> "ComplexValue":
        return ComplexValue.make(self, tier)

    # -- conversions --------------------------------------------------------

    def to_complex(self) -> complex:
        return complex(to_float(self.re), to_float(self.im))

    def __repr__(self) -> str:
        return f"ComplexValue({self.re!r}, {self.im!r})"

    def is_finite(self) -> bool:
        z = self.to_complex()
        return math.isfinite(z.real) and math.isfinite(z.imag)

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> Optional["ComplexValue"]:
        if isinstance(other, ComplexValue):
            return other
        if isinstance(other, (int, float, complex, DD)):
            return ComplexValue.make(other, self.tier)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexValue(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return ComplexValue(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexValue(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexValue(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        if isinstance(other, (int, float, DD)):
            return ComplexValue(self.re * other, self.im * other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexValue(self.re * o.re - self.im * o.im,
                            self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float, DD)):
            return ComplexValue(self.re / other, self.im / other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # Smith's scaling: |o.re|^2 + |o.im|^2 overflows near 1e154, so divide
        # through by the dominant component first.
        if abs(to_float(o.re)) >= abs(to_float(o.im)):
            r = o.im / o.re
            den = o.re + o.im * r
            return ComplexValue((self.re + self.im * r) / den,
                                (self.im - self.re * r) / den)
        r = o.re / o.im
        den = o.im + o.re * r
        return ComplexValue((self.re * r + self.im) / den,
                            (self.im * r - self.re) / den)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def conj(self) -> "ComplexValue":
        return ComplexValue(self.re, -self.im)

    def abs(self) -> Real:
        """Overflow-safe |z| (scaled hypot)."""
        ar = abs(to_float(self.re))
        ai = abs(to_float(self.im))
        if ai == 0.0:
            return abs(self.re) if isinstance(self.re, DD) else ar
        if ar == 0.0:
            return abs(self.im) if isinstance(self.im, DD) else ai
        m = max(ar, ai)
        scale = math.ldexp(1.0, -math.frexp(m)[1])
        xr = self.re * scale
        xi = self.im * scale
        return rsqrt(xr * xr + xi * xi) / scale

    def abs_float(self) -> float:
        return to_float(self.abs())

    def arg(self) -> Real:
        return ratan2(self.im, self.re)


def ensure_finite(z: ComplexValue, what: str = "value") -> ComplexValue:
    if not z.is_finite():
        raise DomainError(f"non-finite {what}")
    return z


# -- complex elementary functions -------------------------------------------

def cexp(z: ComplexValue) -> ComplexValue:
    r = rexp(z.re)
    s, c = rsincos(z.im)
    return ComplexValue(r * c, r * s)


def clog(z: ComplexValue) -> ComplexValue:
    a = z.abs()
    if to_float(a) == 0.0:
        raise DomainError("clog(0)")
    return ComplexValue(rlog(a), z.arg())


def csqrt(z: ComplexValue) -> ComplexValue:
    if to_float(z.im) == 0.0 and to_float(z.re) >= 0.0:
        return ComplexValue(rsqrt(z.re), make_real(0.0, z.tier))
    return cexp(clog(z) * 0.5)


def cpow(z: ComplexValue, s) -> ComplexValue:
    """Principal z**s; integer s uses repeated squaring."""
    if isinstance(s, int) or (isinstance(s, float) and s == int(s) and abs(s) <= 512):
        n = int(s)
        if to_float(z.re) == 0.0 and to_float(z.im) == 0.0:
            if n > 0:
                return ComplexValue.make(0.0, z.tier)
            raise DomainError("cpow(0, non-positive integer)")
        if n == 0:
            return ComplexValue.make(1.0, z.tier)
        inv = n < 0
        n = abs(n)
        acc = ComplexValue.make(1.0, z.tier)
        base = z
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return ComplexValue.make(1.0, z.tier) / acc if inv else acc
    s = ComplexValue.make(s, z.tier) if not isinstance(s, ComplexValue) else s
    if to_float(z.re) == 0.0 and to_float(z.im) == 0.0:
        if to_float(s.re) > 0.0:
            return ComplexValue.make(0.0, z.tier)
        raise DomainError("cpow(0, s) with Re(s) <= 0")
    return cexp(clog(z) * s)


def _sinhcosh_real(x: Real) -> tuple[Real, Real]:
    if abs(to_float(x)) < 1e-3:
        # short Taylor to dodge cancellation in (e^x - e^-x)/2
        x2 = x * x
        sh = x * (x2 * (x2 * (x2 * (1.0 / 5040.0) + 1.0 / 120.0) + 1.0 / 6.0) + 1.0)
        ch = x2 * (x2 * (x2 * (1.0 / 720.0) + 1.0 / 24.0) + 0.5) + 1.0
        if isinstance(x, DD) and not isinstance(ch, DD):
            ch = DD(float(ch))
        return sh, ch
    e = rexp(x)
    ei = 1.0 / e
    return (e - ei) * 0.5, (e + ei) * 0.5


def csin(z: ComplexValue) -> ComplexValue:
    s, c = rsincos(z.re)
    sh, ch = _sinhcosh_real(z.im)
    return ComplexValue(s * ch, c * sh)


def ccos(z: ComplexValue) -> ComplexValue:
    s, c = rsincos(z.re)
    sh, ch = _sinhcosh_real(z.im)
    return ComplexValue(c * ch, -(s * sh))


def csinh(z: ComplexValue) -> ComplexValue:
    sh, ch = _sinhcosh_real(z.re)
    s, c = rsincos(z.im)
    return ComplexValue(sh * c, ch * s)


def ccosh(z: ComplexValue) -> ComplexValue:
    sh, ch = _sinhcosh_real(z.re)
    s, c = rsincos(z.im)
    return ComplexValue(ch * c, sh * s)


# ---------------------------------------------------------------------------
# series summation
# ---------------------------------------------------------------------------

@dataclass
class TruncationPolicy:
    """Stopping rule shared by every series in the package.

    A series is declared converged once ``small_run`` consecutive terms
    satisfy |term| <= rel_tol*|partial| + abs_tol.
    """

    rel_tol: float = 1e-12
    abs_tol: float = 1e-300
    max_terms: int = 10_000
    small_run: int = 3

    @classmethod
    def for_tier(cls, tier: Tier, max_terms: int = 10_000) -> "TruncationPolicy":
        rel = 1e-24 if tier is Tier.EXTENDED else 1e-12
        return cls(rel_tol=rel, max_terms=max_terms)


@dataclass
class SeriesResult:
    value: ComplexValue
    terms_used: int
    converged: bool
    tail_bound: float


def sum_series(term_at: Callable[[int], ComplexValue],
               policy: TruncationPolicy,
               start: int = 0) -> SeriesResult:
    """Deterministic left-to-right summation of term_at(start), term_at(start+1), ...

    The stop test inflates the last term by a geometric tail estimate
    r/(1-r) from the consecutive-magnitude ratio r, clamped to >= 1: for
    sub-exponential decay like exp(-c n^(1/N)) the remaining tail is
    ~(N/c) n^(1-1/N) times the last term, which the ratio captures, while
    fast-decaying series keep the plain per-term behaviour.

    Non-convergence within max_terms is reported, not raised: the partial sum
    is still returned with ``converged=False``.
    """
    partial: Optional[ComplexValue] = None
    run = 0
    last_mag = math.inf
    prev_mag = math.inf
    n = start
    count = 0
    while count < policy.max_terms:
        t = term_at(n)
        partial = t if partial is None else partial + t
        count += 1
        prev_mag, last_mag = last_mag, t.abs_float()
        if 0.0 < last_mag < prev_mag:
            ratio = last_mag / prev_mag
            tail_est = last_mag * max(1.0, ratio / (1.0 - ratio))
        else:
            tail_est = last_mag
        if tail_est <= policy.rel_tol * partial.abs_float() + policy.abs_tol:
            run += 1
            if run >= policy.small_run:
                return SeriesResult(partial, count, True, last_mag)
        else:
            run = 0
        n += 1
    return SeriesResult(partial if partial is not None else ComplexValue(0.0, 0.0),
                        count, False, last_mag)


# ---------------------------------------------------------------------------
# identity reports
# ---------------------------------------------------------------------------

@dataclass
class IdentityReport:
    """Outcome of evaluating both sides of one identity at one parameter point."""

    identity_name: str
    params: dict
    lhs: ComplexValue
    rhs: ComplexValue
    abs_err: float
    rel_err: float
    lhs_terms: int
    rhs_terms: int
    tier: Tier
    flags: list = field(default_factory=list)

    @staticmethod
    def build(name: str, params: dict, lhs: ComplexValue, rhs: ComplexValue,
              lhs_terms: int, rhs_terms: int, tier: Tier,
              flags: Optional[list] = None) -> "IdentityReport":
        ensure_finite(lhs, f"{name} lhs")
        ensure_finite(rhs, f"{name} rhs")
        abs_err = (lhs - rhs).abs_float()
        scale = max(lhs.abs_float(), rhs.abs_float(), 1e-30)
        return IdentityReport(name, params, lhs, rhs, abs_err, abs_err / scale,
                              lhs_terms, rhs_terms, tier, flags or [])

    def to_dict(self, tol: float) -> dict:
        d = {
            "identity": self.identity_name,
            "params": self.params,
            "lhs": [to_float(self.lhs.re), to_float(self.lhs.im)],
            "rhs": [to_float(self.rhs.re), to_float(self.rhs.im)],
            "abs_err": self.abs_err,
            "rel_err": self.rel_err,
            "lhs_terms": self.lhs_terms,
            "rhs_terms": self.rhs_terms,
            "tier": self.tier.value,
            "pass": bool(self.rel_err <= tol),
            "tol": tol,
        }
        if self.flags:
            d["flags"] = list(self.flags)
        return d

    def to_json(self, tol: float) -> str:
        return json.dumps(self.to_dict(tol), sort_keys=False, separators=(",", ":"),
                          default=_json_default)


def _json_default(obj):
    if isinstance(obj, ComplexValue):
        return [to_float(obj.re), to_float(obj.im)]
    if isinstance(obj, DD):
        return obj.to_float()
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, Tier):
        return obj.value
    raise TypeError(f"not JSON serializable: {type(obj)!r}")

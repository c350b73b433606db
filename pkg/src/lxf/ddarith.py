"""Double-double arithmetic: unevaluated sums of two floats, ~31 significant digits.

The primitives are the classical error-free transformations (Knuth two-sum,
Dekker split/product).  ``math.fma`` is not available on this interpreter, so
products are split manually; the splitter constant caps operand magnitude at
about 1e291, which is enforced upstream by keeping gamma-factor arguments
moderate.
"""

from __future__ import annotations

import math
from fractions import Fraction

_SPLITTER = 134217729.0  # 2**27 + 1


def _two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _quick_two_sum(a: float, b: float) -> tuple[float, float]:
    # assumes |a| >= |b|
    s = a + b
    return s, b - (s - a)


def _split(a: float) -> tuple[float, float]:
    t = _SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def _two_prod(a: float, b: float) -> tuple[float, float]:
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


class DD:
    """A double-double number hi + lo with |lo| <= ulp(hi)/2."""

    __slots__ = ("hi", "lo")

    def __init__(self, hi: float = 0.0, lo: float = 0.0):
        self.hi = float(hi)
        self.lo = float(lo)

    # -- construction -----------------------------------------------------

    @staticmethod
    def from_int(n: int) -> "DD":
        hi = float(n)
        return DD(hi, float(n - int(hi)))

    @staticmethod
    def from_fraction(fr: Fraction) -> "DD":
        hi = fr.numerator / fr.denominator
        return DD(hi, float(fr - Fraction(hi)))

    # -- conversions -------------------------------------------------------

    def to_float(self) -> float:
        return self.hi + self.lo

    __float__ = to_float

    def __repr__(self) -> str:
        return f"DD({self.hi!r}, {self.lo!r})"

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, DD):
            s1, s2 = _two_sum(self.hi, other.hi)
            t1, t2 = _two_sum(self.lo, other.lo)
            s2 += t1
            s1, s2 = _quick_two_sum(s1, s2)
            s2 += t2
            return DD(*_quick_two_sum(s1, s2))
        if isinstance(other, (int, float)):
            s1, s2 = _two_sum(self.hi, float(other))
            s2 += self.lo
            return DD(*_quick_two_sum(s1, s2))
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return DD(-self.hi, -self.lo)

    def __sub__(self, other):
        if isinstance(other, DD):
            return self + (-other)
        if isinstance(other, (int, float)):
            return self + (-float(other))
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, DD):
            p1, p2 = _two_prod(self.hi, other.hi)
            p2 += self.hi * other.lo + self.lo * other.hi
            return DD(*_quick_two_sum(p1, p2))
        if isinstance(other, (int, float)):
            b = float(other)
            p1, p2 = _two_prod(self.hi, b)
            p2 += self.lo * b
            return DD(*_quick_two_sum(p1, p2))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            other = DD(float(other))
        if not isinstance(other, DD):
            return NotImplemented
        q1 = self.hi / other.hi
        r = self - other * q1
        q2 = r.hi / other.hi
        r = r - other * q2
        q3 = r.hi / other.hi
        s1, s2 = _quick_two_sum(q1, q2)
        return DD(s1, s2) + q3

    def __rtruediv__(self, other):
        return DD(float(other)) / self

    def __abs__(self):
        return -self if self.hi < 0.0 else DD(self.hi, self.lo)

    def __pow__(self, n):
        if isinstance(n, int):
            return dd_ipow(self, n)
        return dd_pow(self, n)

    # -- comparisons (hi determines order after normalization) -------------

    def _cmp(self, other) -> int:
        if isinstance(other, (int, float)):
            other = DD(float(other))
        d = self - other
        if d.hi > 0.0:
            return 1
        if d.hi < 0.0:
            return -1
        if d.lo > 0.0:
            return 1
        if d.lo < 0.0:
            return -1
        return 0

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        if isinstance(other, (DD, int, float)):
            return self._cmp(other) == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.hi, self.lo))


# -- constants (hi/lo pairs verified against 50-digit references) ----------

PI = DD(3.141592653589793, 1.2246467991473532e-16)
TWO_PI = DD(6.283185307179586, 2.4492935982947064e-16)
HALF_PI = DD(1.5707963267948966, 6.123233995736766e-17)
QUARTER_PI = DD(0.7853981633974483, 3.061616997868383e-17)
LN2 = DD(0.6931471805599453, 2.3190468138462996e-17)
LN10 = DD(2.302585092994046, -2.1707562233822494e-16)
EULER_GAMMA = DD(0.5772156649015329, -4.942915152430645e-18)
LOG_2PI = DD(1.8378770664093456, -7.756588316134483e-17)
SQRT_PI = DD(1.772453850905516, -7.666586499825799e-17)
E = DD(2.718281828459045, 1.4456468917292502e-16)

_ONE = DD(1.0)


def dd_ldexp(x: DD, n: int) -> DD:
    return DD(math.ldexp(x.hi, n), math.ldexp(x.lo, n))


def dd_ipow(x: DD, n: int) -> DD:
    if n == 0:
        return DD(1.0)
    if n < 0:
        return _ONE / dd_ipow(x, -n)
    acc = DD(1.0)
    base = x
    while n:
        if n & 1:
            acc = acc * base
        base = base * base
        n >>= 1
    return acc


def dd_exp(x: DD) -> DD:
    """exp(x) by argument reduction x = m*ln2 + 512*u and Taylor in u."""
    if x.hi > 709.0:
        raise OverflowError("dd_exp overflow")
    if x.hi < -745.0:
        return DD(0.0)
    m = round(x.to_float() / 0.6931471805599453)
    r = x - LN2 * DD(float(m))
    u = dd_ldexp(r, -9)
    term = u
    s = _ONE + u
    for k in range(2, 12):
        term = term * u / k
        s = s + term
    for _ in range(9):
        s = s * s
    return dd_ldexp(s, m)


def dd_log(x: DD) -> DD:
    """log(x) for x > 0: float seed plus one Newton step y += x*exp(-y) - 1."""
    if x.hi <= 0.0:
        raise ValueError("dd_log requires a positive argument")
    y = DD(math.log(x.hi))
    return y + (x * dd_exp(-y) - 1.0)


def dd_sqrt(x: DD) -> DD:
    if x.hi < 0.0:
        raise ValueError("dd_sqrt requires a non-negative argument")
    if x.hi == 0.0:
        return DD(0.0)
    y = DD(math.sqrt(x.hi))
    return dd_ldexp(y + x / y, -1)


def dd_sincos(x: DD) -> tuple[DD, DD]:
    """(sin x, cos x) via 2*pi and pi/2 reduction then Taylor on |r| <= pi/4."""
    k = round(x.to_float() / 6.283185307179586)
    r = x - TWO_PI * DD(float(k))
    q = round(r.to_float() / 1.5707963267948966)
    r = r - HALF_PI * DD(float(q))
    r2 = r * r
    # sin series
    term = r
    s = r
    for j in range(1, 16):
        term = term * r2 * (-1.0) / ((2 * j) * (2 * j + 1))
        s = s + term
    # cos series
    term = DD(1.0)
    c = DD(1.0)
    for j in range(1, 16):
        term = term * r2 * (-1.0) / ((2 * j - 1) * (2 * j))
        c = c + term
    q &= 3
    if q == 0:
        return s, c
    if q == 1:
        return c, -s
    if q == 2:
        return -s, -c
    return -c, s


def dd_sin(x: DD) -> DD:
    return dd_sincos(x)[0]


def dd_cos(x: DD) -> DD:
    return dd_sincos(x)[1]


def dd_atan2(y: DD, x: DD) -> DD:
    """atan2 in (-pi, pi]: float seed plus one Newton rotation step."""
    if y.hi == 0.0 and y.lo == 0.0 and x.hi == 0.0 and x.lo == 0.0:
        raise ValueError("dd_atan2(0, 0) is undefined")
    seed = math.atan2(y.to_float(), x.to_float())
    s, c = dd_sincos(DD(seed))
    num = y * c - x * s
    den = x * c + y * s
    theta = DD(seed) + num / den
    if theta.hi <= -3.141592653589793:
        theta = theta + TWO_PI
    elif theta > PI:
        theta = theta - TWO_PI
    return theta


def dd_pow(x: DD, p) -> DD:
    """x**p for x > 0."""
    if isinstance(p, int):
        return dd_ipow(x, p)
    if isinstance(p, float):
        p = DD(p)
    return dd_exp(p * dd_log(x))

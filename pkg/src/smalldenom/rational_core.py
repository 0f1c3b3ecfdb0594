"""Exact smallest-denominator search in open rational intervals.

Everything in this module is exact integer/rational arithmetic; floats are
rejected at the boundary.  The search descends through the continued-fraction
structure of the endpoints (equivalently, walks the Stern-Brocot tree), so the
cost is polynomial in the bit length of the endpoints, and a linear brute-force
scan is provided as an independent oracle for testing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC


class ContractViolation(ValueError):
    """An operation was called outside its stated preconditions."""


def as_rational(value) -> Fraction:
    """Coerce to an exact Fraction, rejecting floats (binary rounding lies)."""
    if isinstance(value, float):
        raise ContractViolation(
            "float endpoints are forbidden; pass Fraction, int or a string like '9/20'"
        )
    if isinstance(value, _RationalABC):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise ContractViolation(f"cannot interpret {value!r} as an exact rational")


@dataclass(frozen=True)
class OpenInterval:
    """Open interval (lo, hi) with exact rational endpoints, lo < hi."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", as_rational(self.lo))
        object.__setattr__(self, "hi", as_rational(self.hi))
        if not self.lo < self.hi:
            raise ContractViolation(f"empty interval: lo={self.lo} >= hi={self.hi}")

    def __contains__(self, t) -> bool:
        t = as_rational(t)
        return self.lo < t < self.hi

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo


@dataclass(frozen=True)
class DenominatorWitness:
    """Minimal denominator q together with a fraction p/q inside the interval."""

    q: int
    p: int

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.p, self.q)


def smallest_denominator(interval: OpenInterval) -> DenominatorWitness:
    """Minimal q >= 1 such that some reduced p/q lies strictly inside `interval`.

    Iterative continued-fraction descent: if the interval contains an integer
    we are done; otherwise subtract the floor and flip the interval, which
    strips one continued-fraction digit off both endpoints.  A Moebius matrix
    accumulates the inverse transformations so the witness can be rebuilt at
    the end.  Depth is bounded by the continued-fraction length of the
    endpoints, hence polynomial in their bit size.
    """
    if not isinstance(interval, OpenInterval):
        interval = OpenInterval(*interval)
    a, b = interval.lo.numerator, interval.lo.denominator
    c, d = interval.hi.numerator, interval.hi.denominator

    # final witness = (m00*z_num + m01*z_den) / (m10*z_num + m11*z_den)
    m00, m01, m10, m11 = 1, 0, 0, 1
    while True:
        n = a // b
        if (n + 1) * d < c:
            # the integer n+1 lies strictly inside (it exceeds lo by choice of n)
            zn, zd = n + 1, 1
            break
        if a == n * b:
            # lo is the integer n and hi <= n+1: the interval is (n, n+g] minus
            # endpoints with g = hi-n in (0,1]; the smallest admissible q is the
            # least q with 1/q < g, witnessed by n + 1/q.
            gn = c - n * d  # g = gn/d
            q = d // gn + 1
            zn, zd = n * q + 1, q
            break
        # translate by n, then invert: (lo,hi) <- (1/(hi-n), 1/(lo-n))
        a, b, c, d = d, c - n * d, b, a - n * b
        m00, m01, m10, m11 = m00 * n + m01, m00, m10 * n + m11, m10

    num = m00 * zn + m01 * zd
    den = m10 * zn + m11 * zd
    if den < 0:
        num, den = -num, -den
    # the Moebius matrix is unimodular and z is reduced, so p/q is reduced
    assert den > 0 and math.gcd(num, den) == 1
    return DenominatorWitness(q=den, p=num)


def q_min(x, delta) -> DenominatorWitness:
    """Smallest denominator of a fraction in the open interval of length delta at x."""
    x = as_rational(x)
    delta = as_rational(delta)
    if delta <= 0:
        raise ContractViolation(f"delta must be positive, got {delta}")
    half = delta / 2
    return smallest_denominator(OpenInterval(x - half, x + half))


def brute_force_q_min(interval: OpenInterval, q_cap: int) -> DenominatorWitness | None:
    """Linear-scan oracle: try q = 1..q_cap, smallest admissible p for each.

    For each q the admissible numerators are the integers strictly between
    q*lo and q*hi; the scan is O(1) per q.  Returns None when no denominator
    up to q_cap admits a fraction inside the interval.
    """
    if not isinstance(interval, OpenInterval):
        interval = OpenInterval(*interval)
    if q_cap < 1:
        raise ContractViolation(f"q_cap must be >= 1, got {q_cap}")
    an, ad = interval.lo.numerator, interval.lo.denominator
    bn, bd = interval.hi.numerator, interval.hi.denominator
    for q in range(1, q_cap + 1):
        p_lo = (q * an) // ad + 1       # smallest integer > q*lo
        p_hi = -((-q * bn) // bd) - 1   # largest integer < q*hi
        if p_lo <= p_hi:
            return DenominatorWitness(q=q, p=p_lo)
    return None

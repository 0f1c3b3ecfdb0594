"""Closed-form logarithmic moments of the smallest-denominator limit law.

The chain runs: zeta values -> c_k expansion coefficients of the logarithmic
derivative of B(z, 1/2) -> Laurent coefficients b_n of B(z, 1/2) (computed two
independent ways) -> auxiliary moments rho_n -> shifted moments mu~_n -> the
log-moments mu_n, and from those the standard deviation, skewness and the
base-10 / doubled-interval normalization used in the torus-map literature.

All sums are accumulated with math.fsum; the b_n recursion mixes terms of
alternating sign that grow like 2^n, so plain accumulation would shed digits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .numerics import hurwitz_tail

LOG2 = math.log(2.0)

_MAX_VALIDATED_ORDER = 8


# ---------------------------------------------------------------------------
# zeta values


@lru_cache(maxsize=None)
def zeta_value(k: int) -> float:
    """Riemann zeta at integer k >= 2, via alternating-series acceleration.

    Uses the Chebyshev-weighted eta-series acceleration with n = 32 terms,
    whose error is ~ (3+sqrt(8))^-n, far below double precision.
    """
    if k < 2:
        raise ValueError(f"zeta_value requires k >= 2, got {k}")
    n = 32
    # d_j = n * sum_{i<=j} (n+i-1)! 4^i / ((n-i)! (2i)!); exact rational
    # accumulation, the d_j come out integral
    d = [0] * (n + 1)
    acc = Fraction(0)
    for i in range(n + 1):
        acc += Fraction(
            math.factorial(n + i - 1) * 4**i,
            math.factorial(n - i) * math.factorial(2 * i),
        )
        d[i] = n * acc
    terms = [
        (-1.0) ** j * float(Fraction(d[j] - d[n], (j + 1) ** k)) for j in range(n)
    ]
    eta = -math.fsum(terms) / float(d[n])
    return eta / (1.0 - 2.0 ** (1 - k))


def zeta_value_direct(k: int) -> float:
    """Independent zeta evaluation: direct sum plus Euler-Maclaurin tail."""
    if k < 2:
        raise ValueError(f"zeta_value_direct requires k >= 2, got {k}")
    head = math.fsum(j ** (-float(k)) for j in range(1, 1000))
    return head + hurwitz_tail(float(k), 1000)


# ---------------------------------------------------------------------------
# expansion coefficients


def c_coeff(k: int) -> float:
    """Taylor/Laurent coefficients of -1/z + 2*beta_digamma(2z+1) about z = 0."""
    if k < -1:
        raise ValueError(f"c_coeff requires k >= -1, got {k}")
    if k == -1:
        return -1.0
    if k == 0:
        return 2.0 * LOG2
    return 2.0 * (-1.0) ** k * (2.0**k - 1.0) * zeta_value(k + 1)


@lru_cache(maxsize=None)
def laurent_b_recursive(n: int) -> float:
    """Laurent coefficients of B(z, 1/2) about z = 0 from the c_k recursion.

    b_{-1} = 1 and b_0 = 2 log 2 seed the recursion
    b_{n+1} = (1/(n+2)) sum_{k=-1}^{n} c_{n-k} b_k.
    The c_k grow like 2^k with alternating signs, so cancellation costs about
    n bits at order n; fine for the validated n <= 8, unusable much beyond.
    """
    if n < -1:
        raise ValueError(f"laurent_b_recursive requires n >= -1, got {n}")
    if n == -1:
        return 1.0
    if n == 0:
        return 2.0 * LOG2
    m = n - 1  # b_n = b_{m+1}
    terms = [c_coeff(m - k) * laurent_b_recursive(k) for k in range(-1, m + 1)]
    return math.fsum(terms) / (m + 2)


# central-binomial weights w_j = C(2j,j)/4^j, shared by the b_n series
_W_CACHE: list[float] = [1.0]  # index j, w_0 = 1 unused by sums


def _central_weights(upto: int) -> list[float]:
    w = _W_CACHE
    while len(w) <= upto:
        j = len(w)
        w.append(w[j - 1] * (2 * j - 1) / (2 * j))
    return w


def laurent_b_series(n: int) -> float:
    """Laurent coefficients of B(z, 1/2) from the partial-fraction series.

    b_n = (-1)^n sum_j C(2j-1,j) / (2^(2j-1) j^(n+1)); the summand is
    w_j / j^(n+1) with w_j = C(2j,j)/4^j ~ 1/sqrt(pi*j), so the tail decays
    only like j^(-n-3/2) and is finished with Euler-Maclaurin applied to the
    asymptotic expansion of w_j.  Positive terms throughout: no cancellation
    at any order, which is what makes this the stable cross-check (and the
    supplier of high-order coefficients to the moment generating function).
    """
    if n < 0:
        raise ValueError(f"laurent_b_series requires n >= 0, got {n}")
    cap = 100_000 if n <= 2 else 10_000
    w = _central_weights(cap)
    head = math.fsum(w[j] / float(j) ** (n + 1) for j in range(1, cap + 1))
    # w_j = (1 - 1/(8j) + 1/(128 j^2) + 5/(1024 j^3) - 21/(32768 j^4) + ...)/sqrt(pi j)
    a = (1.0, -1.0 / 8, 1.0 / 128, 5.0 / 1024, -21.0 / 32768)
    tail = math.fsum(
        coeff * hurwitz_tail(n + 1.5 + m, cap + 1) for m, coeff in enumerate(a)
    ) / math.sqrt(math.pi)
    return (-1.0) ** n * (head + tail)


# ---------------------------------------------------------------------------
# the moment chain


def rho(n: int) -> float:
    """Auxiliary moments: derivatives at 0 of the recentred moment generator."""
    if n < 0:
        raise ValueError(f"rho requires n >= 0, got {n}")
    b = laurent_b_recursive(n + 1)
    main = math.factorial(n) * (-1.0) ** (n + 1) * b / 2.0 ** (n + 1)
    shift = 2.0 * (-LOG2) ** (n + 2) / ((n + 2) * (n + 1))
    return 24.0 / math.pi**2 * (main + shift)


def mu_tilde(n: int) -> float:
    """Log-moments shifted by log 2: inversion of rho_n = 2 mu~_n + n mu~_{n-1}."""
    if n < 0:
        raise ValueError(f"mu_tilde requires n >= 0, got {n}")
    terms = [
        (-2.0) ** (-j) * rho(n - j) / math.factorial(n - j) for j in range(n + 1)
    ]
    return math.factorial(n) / 2.0 * math.fsum(terms)


def mu(n: int) -> float:
    """Logarithmic moments of the limit law, via the shifted-moment route."""
    if n < 0:
        raise ValueError(f"mu requires n >= 0, got {n}")
    terms = [
        math.comb(n, k) * LOG2 ** (n - k) * mu_tilde(k) for k in range(n + 1)
    ]
    return math.fsum(terms)


def mu_double_sum(n: int) -> float:
    """Same moments by the explicit double sum over rho; independent route."""
    if n < 0:
        raise ValueError(f"mu_double_sum requires n >= 0, got {n}")
    terms = []
    for k in range(n + 1):
        for j in range(k + 1):
            terms.append(
                LOG2 ** (n - k)
                / math.factorial(n - k)
                * (-1.0) ** j
                / (2.0**j * math.factorial(k - j))
                * rho(k - j)
            )
    return math.factorial(n) / 2.0 * math.fsum(terms)


def sigma_and_skewness() -> tuple[float, float]:
    """Standard deviation and skewness of the log-denominator limit law."""
    m1, m2, m3 = mu(1), mu(2), mu(3)
    sigma = math.sqrt(m2 - m1 * m1)
    gamma = (m3 - 3.0 * m1 * m2 + 2.0 * m1**3) / sigma**3
    return sigma, gamma


def meiss_sander_constants() -> tuple[float, float]:
    """Mean and spread in the base-10, doubled-interval normalization."""
    m1, m2 = mu(1), mu(2)
    log10 = math.log(10.0)
    return (m1 - 0.5 * LOG2) / log10, math.sqrt(m2 - m1 * m1) / log10


# ---------------------------------------------------------------------------
# aggregate table


@dataclass(frozen=True)
class MomentTable:
    """All closed-form constants up to a given order, built once and immutable."""

    max_n: int
    zeta: dict[int, float] = field(repr=False)
    c: dict[int, float] = field(repr=False)
    b: dict[int, float] = field(repr=False)
    rho: dict[int, float]
    mu_tilde: dict[int, float] = field(repr=False)
    mu: dict[int, float]
    sigma: float
    gamma: float
    mu1_ms: float
    sigma_ms: float

    def as_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "zeta": {str(k): v for k, v in self.zeta.items()},
            "c": {str(k): v for k, v in self.c.items()},
            "b": {str(k): v for k, v in self.b.items()},
            "rho": {str(k): v for k, v in self.rho.items()},
            "mu_tilde": {str(k): v for k, v in self.mu_tilde.items()},
            "mu": {str(k): v for k, v in self.mu.items()},
            "sigma": self.sigma,
            "gamma": self.gamma,
            "mu1_ms": self.mu1_ms,
            "sigma_ms": self.sigma_ms,
        }


def build_moment_table(max_n: int = _MAX_VALIDATED_ORDER) -> MomentTable:
    """Assemble the full constant table for orders 0..max_n.

    Orders beyond 8 are allowed but the recursion loses roughly a bit of
    precision per order, so they are not covered by the 1e-12 dual-path
    guarantee.
    """
    if max_n < 0:
        raise ValueError(f"max_n must be >= 0, got {max_n}")
    k = max_n
    sigma, gamma = sigma_and_skewness()
    mu1_ms, sigma_ms = meiss_sander_constants()
    return MomentTable(
        max_n=k,
        zeta={j: zeta_value(j) for j in range(2, k + 2)},
        c={j: c_coeff(j) for j in range(-1, k + 1)},
        b={j: laurent_b_recursive(j) for j in range(-1, k + 1)},
        rho={j: rho(j) for j in range(k + 1)},
        mu_tilde={j: mu_tilde(j) for j in range(k + 1)},
        mu={j: mu(j) for j in range(k + 1)},
        sigma=sigma,
        gamma=gamma,
        mu1_ms=mu1_ms,
        sigma_ms=sigma_ms,
    )

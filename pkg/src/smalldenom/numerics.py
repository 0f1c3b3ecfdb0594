"""Shared numerical machinery: series tails and Richardson differentiation.

The slowly convergent series in this package all reduce to polynomial-decay
tails of the form sum_{j>J} j^{-p}; those are finished off analytically with
Euler-Maclaurin instead of brute summation.  The exponential tail integrals
back the quadrature routines in `limit_law`.
"""

from __future__ import annotations

import math


def hurwitz_tail(p: float, a: int) -> float:
    """sum_{j>=a} j^{-p} for p > 1, by Euler-Maclaurin about j = a.

    Correction terms use Bernoulli numbers B2=1/6, B4=-1/30, B6=1/42; with
    a >~ 50 the truncation error is below a^{-p-7}, far past double precision
    for the a ~ 1e4..1e5 used here.
    """
    if p <= 1:
        raise ValueError(f"tail diverges for p <= 1, got p={p}")
    x = float(a)
    head = x ** (1.0 - p) / (p - 1.0) + 0.5 * x ** (-p)
    b2 = p * x ** (-p - 1.0) / 12.0
    b4 = -p * (p + 1.0) * (p + 2.0) * x ** (-p - 3.0) / 720.0
    b6 = p * (p + 1.0) * (p + 2.0) * (p + 3.0) * (p + 4.0) * x ** (-p - 5.0) / 30240.0
    return head + b2 + b4 + b6


def exp_poly_tail(n: int, rate: float, lower: float) -> float:
    """integral_{lower}^{inf} u^n e^{-rate*u} du for rate > 0, n >= 0.

    Integration by parts: I_n = lower^n e^{-rate*lower}/rate + (n/rate) I_{n-1}.
    """
    if rate <= 0:
        raise ValueError(f"rate must be positive, got {rate}")
    e = math.exp(-rate * lower)
    acc = e / rate
    for k in range(1, n + 1):
        acc = (lower ** k) * e / rate + k * acc / rate
    return acc


def richardson_derivative(f, x: float, order: int, base_step: float, levels: int = 2) -> float:
    """order-th derivative of f at x by central differences plus Richardson.

    The central stencils have even-power error expansions, so each Richardson
    level with step halving removes one h^2 term.  `levels` extrapolation
    levels need `levels`+1 stencil evaluations.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    if order == 0:
        return f(x)

    def stencil(h: float) -> float:
        if order == 1:
            return (f(x + h) - f(x - h)) / (2.0 * h)
        if order == 2:
            return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h)
        if order == 3:
            return (f(x + 2 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2 * h)) / (2.0 * h ** 3)
        if order == 4:
            return (f(x + 2 * h) - 4.0 * f(x + h) + 6.0 * f(x)
                    - 4.0 * f(x - h) + f(x - 2 * h)) / (h ** 4)
        raise ValueError(f"stencils implemented for order <= 4, got {order}")

    estimates = [stencil(base_step / 2 ** i) for i in range(levels + 1)]
    # Richardson triangle: error at level m behaves like h^(2(m+1))
    for m in range(1, levels + 1):
        factor = 4.0 ** m
        estimates = [
            (factor * estimates[i + 1] - estimates[i]) / (factor - 1.0)
            for i in range(len(estimates) - 1)
        ]
    return estimates[0]


def least_squares_line(xs, ys) -> tuple[float, float, float]:
    """OLS fit y = slope*x + intercept; returns (slope, intercept, slope_stderr)."""
    n = len(xs)
    if n != len(ys) or n < 2:
        raise ValueError("need at least two (x, y) pairs")
    mean_x = math.fsum(xs) / n
    mean_y = math.fsum(ys) / n
    sxx = math.fsum((x - mean_x) ** 2 for x in xs)
    if sxx == 0.0:
        raise ValueError("degenerate regression: all x identical")
    sxy = math.fsum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    slope = sxy / sxx
    intercept = mean_y - slope * mean_x
    if n > 2:
        rss = math.fsum((y - intercept - slope * x) ** 2 for x, y in zip(xs, ys))
        stderr = math.sqrt(rss / (n - 2) / sxx)
    else:
        stderr = 0.0
    return slope, intercept, stderr

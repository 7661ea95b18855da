"""Hypergeometric machinery: 2F1, 3F2, Appell F1, Lauricella FD(3).

Series evaluation uses term-ratio recurrences with a three-strikes stop
rule; integral evaluation goes through the one-dimensional Euler-type
representation

    G(c) / (G(a) G(c-a)) * int_0^1 u^(a-1) (1-u)^(c-a-1) prod (1-x_i u)^(-b_i) du,

valid for c > a > 0, with algebraic endpoint singularities absorbed by
the quadrature layer. Gamma ratios are computed in the log domain only.
All arguments are real; the reduction identities collapse a unit
Lauricella argument into an Appell value and an Appell value with
opposite arguments into a 3F2 value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.special import gammaln, gammasgn

from .errors import DomainError, UsageError
from .quadrature import _adaptive

__all__ = [
    "HypSeriesParams",
    "LauricellaArgs",
    "pochhammer",
    "gauss_2f1",
    "gauss_summation",
    "hyp_3f2",
    "appell_f1",
    "lauricella_fd3",
    "reduce_fd3_unit_arg",
    "reduce_f1_to_3f2",
]

# Series stop policy: a term counts as negligible when |term| < rtol*|partial|;
# summation stops after three negligible terms in a row or fails at the cap.
DEFAULT_RTOL = 1e-13
_CONSECUTIVE = 3
_MAX_TERMS = 10 ** 6

# quadrature tolerances for the integral representations
_IRT_RTOL = 1e-12
_IRT_ATOL = 1e-15


def _is_nonpositive_integer(v: float) -> bool:
    return v <= 0 and float(v).is_integer()


def _check_lower(params: Sequence[float], where: str) -> None:
    for b in params:
        if _is_nonpositive_integer(b):
            raise DomainError(f"{where}: lower parameter {b} is a nonpositive integer")


@dataclass(frozen=True)
class HypSeriesParams:
    """Parameters of a pFq series: upper a_1..a_p, lower b_1..b_q, argument x."""

    upper: tuple[float, ...]
    lower: tuple[float, ...]
    argument: float

    def __post_init__(self):
        _check_lower(self.lower, "pFq")
        x = self.argument
        if abs(x) < 1:
            return
        if x == 1.0 and len(self.upper) == 2 and len(self.lower) == 1:
            a, b = self.upper
            if self.lower[0] > a + b:
                return
        raise DomainError(f"series argument {x} outside the convergence domain")


@dataclass(frozen=True)
class LauricellaArgs:
    """Arguments of F1 (n=2) or FD(3) (n=3) in the integral representation."""

    a: float
    b: tuple[float, ...]
    c: float
    x: tuple[float, ...]

    def __post_init__(self):
        if len(self.b) != len(self.x) or len(self.b) not in (2, 3):
            raise UsageError("b and x must both have length 2 or 3")
        if not self.c > self.a > 0:
            raise DomainError(f"integral representation needs c > a > 0, got a={self.a}, c={self.c}")
        for bi, xi in zip(self.b, self.x):
            if xi > 1:
                raise DomainError(f"argument {xi} > 1 is outside the real domain")
            if xi == 1.0 and not self.c > self.a + bi:
                raise DomainError(f"unit argument needs c > a + b_i, got c={self.c}, a+b_i={self.a + bi}")

    @property
    def n(self) -> int:
        return len(self.b)


def pochhammer(lam, n: int):
    """Rising factorial lam*(lam+1)*...*(lam+n-1); 1 when n = 0.

    Exact for int/Fraction input, float otherwise; huge n may overflow
    to inf for float input, which is accepted.
    """
    if n < 0 or n != int(n):
        raise UsageError(f"pochhammer order must be a nonnegative integer, got {n}")
    result = lam ** 0  # 1 in the arithmetic of lam's type
    for k in range(int(n)):
        result = result * (lam + k)
    return result


def _sum_with_ratio(ratio, rtol: float) -> float:
    """Sum 1 + t1 + t2 + ... where t_{k+1} = t_k * ratio(k)."""
    partial = 1.0
    term = 1.0
    quiet = 0
    for k in range(_MAX_TERMS):
        term *= ratio(k)
        partial += term
        if abs(term) < rtol * abs(partial):
            quiet += 1
            if quiet >= _CONSECUTIVE:
                return partial
        else:
            quiet = 0
    raise DomainError(f"series did not converge within {_MAX_TERMS} terms")


def gauss_2f1(a: float, b: float, c: float, x: float, rtol: float = DEFAULT_RTOL) -> float:
    """2F1(a, b; c; x) for |x| < 1, or x = 1 under the condition c > a + b.

    Direct series summation; the x = 1 value is the closed Gamma-ratio
    evaluation because the series converges too slowly there.
    """
    _check_lower((c,), "2F1")
    if x == 0.0:
        return 1.0
    if x == 1.0:
        if c > a + b:
            return gauss_summation(a, b, c)
        raise DomainError(f"2F1 diverges at x=1 unless c > a + b (c={c}, a+b={a + b})")
    if abs(x) >= 1:
        raise DomainError(f"2F1 series needs |x| < 1, got x={x}")
    return _sum_with_ratio(lambda k: (a + k) * (b + k) / ((c + k) * (1.0 + k)) * x, rtol)


def gauss_summation(a: float, b: float, c: float) -> float:
    """2F1(a, b; c; 1) = G(c) G(c-a-b) / (G(c-a) G(c-b)), log-gamma computed."""
    if not c > a + b:
        raise DomainError(f"Gauss summation needs c > a + b, got c={c}, a+b={a + b}")
    args = (c, c - a - b, c - a, c - b)
    for v in args:
        if _is_nonpositive_integer(v):
            raise DomainError(f"gamma argument {v} is a nonpositive integer")
    logs = gammaln(args)
    sign = float(np.prod(gammasgn(args)))  # each +-1; poles excluded above
    return sign * math.exp(logs[0] + logs[1] - logs[2] - logs[3])


def hyp_3f2(a1: float, a2: float, a3: float, b1: float, b2: float, x: float,
            rtol: float = DEFAULT_RTOL) -> float:
    """3F2(a1, a2, a3; b1, b2; x) by series, |x| < 1."""
    _check_lower((b1, b2), "3F2")
    if x == 0.0:
        return 1.0
    if abs(x) >= 1:
        raise DomainError(f"3F2 series needs |x| < 1, got x={x}")
    return _sum_with_ratio(
        lambda k: (a1 + k) * (a2 + k) * (a3 + k) / ((b1 + k) * (b2 + k) * (1.0 + k)) * x,
        rtol,
    )


def _beta_prefactor(a: float, c: float) -> float:
    # G(c) / (G(a) G(c-a)) with c > a > 0: all arguments positive
    return math.exp(gammaln(c) - gammaln(a) - gammaln(c - a))


def _irt_integral(a: float, c: float, factors: Sequence[tuple[float, float]],
                  rtol: float, unit_b: float = 0.0) -> float:
    """Euler-type integral for F1/FD values.

    prefactor(a, c) * int_0^1 u^(a-1) (1-u)^(beta-1) prod (1-x_i u)^(-b_i) du
    with beta = c - a - unit_b; ``factors`` lists (b_i, x_i) pairs with
    x_i < 1, and unit arguments are folded into ``unit_b`` by the caller.

    The interval is split at 1/2 and on each half the distance from the
    endpoint is substituted by a power of t carrying the endpoint factor
    analytically, so the adaptive stage sees a bounded smooth integrand
    and endpoint powers arbitrarily close to -1 cost no accuracy.
    """
    alpha1 = a              # exponent of u, plus one
    beta1 = c - a - unit_b  # exponent of (1-u), plus one
    comp = [(bi, xi, 1.0 - xi) for bi, xi in factors if bi != 0.0 and xi != 0.0]

    s_lo = max(1.0, 3.0 / alpha1)
    s_hi = max(1.0, 3.0 / beta1)

    def g_left(t):
        t = np.asarray(t, dtype=float)
        u = 0.5 * t ** s_lo
        val = s_lo * 0.5 ** alpha1 * t ** (s_lo * alpha1 - 1.0)
        val = val * (1.0 - u) ** (beta1 - 1.0)
        for bi, xi, _ in comp:
            val = val * (1.0 - xi * u) ** (-bi)
        return val

    def g_right(t):
        t = np.asarray(t, dtype=float)
        v = 0.5 * t ** s_hi  # v = 1 - u
        val = s_hi * 0.5 ** beta1 * t ** (s_hi * beta1 - 1.0)
        val = val * (1.0 - v) ** (alpha1 - 1.0)
        for bi, xi, ci in comp:
            val = val * (ci + xi * v) ** (-bi)  # 1 - x_i u without cancellation
        return val

    v1, _ = _adaptive(g_left, 0.0, 1.0, rtol, 0.5 * _IRT_ATOL, 4096)
    v2, _ = _adaptive(g_right, 0.0, 1.0, rtol, 0.5 * _IRT_ATOL, 4096)
    return _beta_prefactor(a, c) * (v1 + v2)


def _f1_series(a: float, b1: float, b2: float, c: float, x1: float, x2: float,
               rtol: float) -> float:
    """Double series for F1, |x1| < 1 and |x2| < 1.

    Summed row by row in the first index; each row is a 2F1-type inner
    series, and rows stop under the same three-strikes policy.
    """
    total = 0.0
    row_lead = 1.0  # (a)_m (b1)_m x1^m / ((c)_m m!)
    quiet_rows = 0
    for m in range(_MAX_TERMS):
        # inner sum over n with ratio ((a+m+n)(b2+n))/((c+m+n)(n+1)) * x2
        term = row_lead
        row = term
        quiet = 0
        for n in range(_MAX_TERMS):
            term *= (a + m + n) * (b2 + n) / ((c + m + n) * (1.0 + n)) * x2
            row += term
            if abs(term) < rtol * max(abs(row), 1e-300):
                quiet += 1
                if quiet >= _CONSECUTIVE:
                    break
            else:
                quiet = 0
        else:
            raise DomainError(f"F1 inner series did not converge within {_MAX_TERMS} terms")
        total += row
        if abs(row) < rtol * max(abs(total), 1e-300):
            quiet_rows += 1
            if quiet_rows >= _CONSECUTIVE:
                return total
        else:
            quiet_rows = 0
        row_lead *= (a + m) * (b1 + m) / ((c + m) * (1.0 + m)) * x1
    raise DomainError(f"F1 outer series did not converge within {_MAX_TERMS} rows")


def appell_f1(a: float, b1: float, b2: float, c: float, x1: float, x2: float,
              method: str = "auto", rtol: float = DEFAULT_RTOL) -> float:
    """Appell F1(a; b1, b2; c; x1, x2).

    method "integral" uses the one-dimensional representation (needs
    c > a > 0 and both arguments < 1); "series" uses the double sum
    (needs |x1|, |x2| < 1); "auto" prefers the integral when valid.
    """
    if method not in ("auto", "integral", "series"):
        raise UsageError(f"unknown method {method!r}")
    integral_ok = c > a > 0 and x1 < 1 and x2 < 1
    series_ok = abs(x1) < 1 and abs(x2) < 1
    if method == "auto":
        method = "integral" if integral_ok else "series"
    if method == "integral":
        if not c > a > 0:
            raise DomainError(f"F1 integral path needs c > a > 0, got a={a}, c={c}")
        if not (x1 < 1 and x2 < 1):
            raise DomainError(f"F1 integrand singular: arguments ({x1}, {x2}) must be < 1")
        return _irt_integral(a, c, [(b1, x1), (b2, x2)], rtol=min(rtol, _IRT_RTOL))
    if not series_ok:
        raise DomainError(f"F1 series needs |x1|, |x2| < 1, got ({x1}, {x2})")
    _check_lower((c,), "F1")
    return _f1_series(a, b1, b2, c, x1, x2, rtol)


def _fd3_series(a: float, b: Sequence[float], c: float, x: Sequence[float],
                rtol: float) -> float:
    """Triple series for FD(3), summed by total-degree shells.

    Shell s contributes (a)_s/(c)_s times the degree-s coefficient of the
    product of the three single-variable factor series (b_i)_k x_i^k / k!.
    """
    cols = [[1.0], [1.0], [1.0]]
    ratio_sc = 1.0  # (a)_s / (c)_s
    total = 0.0
    quiet = 0
    conv23 = np.array([1.0])
    for s in range(100000):
        if s > 0:
            ratio_sc *= (a + s - 1) / (c + s - 1)
            for col, bi, xi in zip(cols, b, x):
                col.append(col[-1] * (bi + s - 1) * xi / s)
            conv23 = np.convolve(np.asarray(cols[1]), np.asarray(cols[2]))
        # degree-s coefficient of the triple factor product
        shell_coeff = float(np.dot(np.asarray(cols[0]), conv23[s::-1]))
        shell = ratio_sc * shell_coeff
        total += shell
        if abs(shell) < rtol * max(abs(total), 1e-300):
            quiet += 1
            if quiet >= _CONSECUTIVE:
                return total
        else:
            quiet = 0
    raise DomainError("FD3 series did not converge")


def lauricella_fd3(a: float, b: Sequence[float], c: float, x: Sequence[float],
                   method: str = "auto", rtol: float = DEFAULT_RTOL) -> float:
    """Lauricella FD(3)(a; b1, b2, b3; c; x1, x2, x3).

    The integral path accepts x_i = 1 when c > a + (sum of the unit-slot
    b_i), folding those factors into the (1-u) endpoint power; the series
    path needs all |x_i| < 1.
    """
    b = tuple(float(v) for v in b)
    x = tuple(float(v) for v in x)
    if len(b) != 3 or len(x) != 3:
        raise UsageError("FD3 takes exactly three b parameters and three arguments")
    if method not in ("auto", "integral", "series"):
        raise UsageError(f"unknown method {method!r}")

    series_ok = all(abs(xi) < 1 for xi in x)
    if method == "auto":
        method = "integral" if (c > a > 0 and all(xi <= 1 for xi in x)) else "series"

    if method == "integral":
        if not c > a > 0:
            raise DomainError(f"FD3 integral path needs c > a > 0, got a={a}, c={c}")
        unit_b = 0.0
        factors = []
        for bi, xi in zip(b, x):
            if xi > 1:
                raise DomainError(f"FD3 argument {xi} > 1 is outside the real domain")
            if xi == 1.0:
                unit_b += bi
            else:
                factors.append((bi, xi))
        if unit_b and not c > a + unit_b:
            raise DomainError(
                f"unit argument needs c > a + b_i at the unit slots (c={c}, a+b={a + unit_b})"
            )
        return _irt_integral(a, c, factors, rtol=min(rtol, _IRT_RTOL), unit_b=unit_b)

    if not series_ok:
        raise DomainError(f"FD3 series needs all |x_i| < 1, got {x}")
    _check_lower((c,), "FD3")
    return _fd3_series(a, b, c, x, rtol)


def reduce_fd3_unit_arg(a: float, b1: float, b2: float, b3: float, c: float,
                        x: float, y: float, rtol: float = DEFAULT_RTOL) -> float:
    """FD(3)(a; b1, b2, b3; c; x, y, 1) collapsed to an Appell F1 value.

    Returns G(c) G(c-a-b3) / (G(c-a) G(c-b3)) * F1(a; b1, b2; c-b3; x, y);
    the F1 factor is summed as a double series when both arguments allow
    it, so the result is an independent route from the direct integral.
    """
    if not c > a + b3:
        raise DomainError(f"reduction needs c > a + b3, got c={c}, a+b3={a + b3}")
    if not c > a > 0:
        raise DomainError(f"reduction needs c > a > 0, got a={a}, c={c}")
    method = "series" if (abs(x) < 1 and abs(y) < 1) else "integral"
    f1 = appell_f1(a, b1, b2, c - b3, x, y, method=method, rtol=rtol)
    if b3 == 0.0:
        return f1
    log = gammaln(c) + gammaln(c - a - b3) - gammaln(c - a) - gammaln(c - b3)
    return math.exp(log) * f1


def reduce_f1_to_3f2(a: float, b: float, c: float, x: float,
                     rtol: float = DEFAULT_RTOL) -> float:
    """F1(a; b, b; c; x, -x) collapsed to a single 3F2 value.

    Returns 3F2((a+1)/2, a/2, b; (c+1)/2, c/2; x^2).
    """
    if not abs(x) < 1:
        raise DomainError(f"reduction needs |x| < 1, got x={x}")
    return hyp_3f2((a + 1.0) / 2.0, a / 2.0, b, (c + 1.0) / 2.0, c / 2.0, x * x, rtol=rtol)

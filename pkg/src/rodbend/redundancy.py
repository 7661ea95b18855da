"""Redundant-reaction solvers for two statically indeterminate rods.

Roller problem: a heavy cantilever propped by a roller at the free tip;
the redundant unknown is the roller reaction X [N], fixed by requiring
zero tip displacement. Built-in problem: a heavy rod clamped at both
ends carrying half its load per side; the redundant unknown is the end
moment X [N m], closed-form in the tip integral of the clamped
configuration.

Each problem is solved three ways: the classical small-deflection
formula, a truncated reaction series obtained by exact-rational series
reversion, and a direct evaluation of the consistency condition (root
finding for the roller, the closed expression for the built-in rod).
The solutions carry convergence traces so the series behavior can be
tabulated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .elastica import BuiltInCombined, RodProperties, UniformLoad, feasibility_bound
from .errors import BracketError, InfeasibleLoadError, UsageError
from .quadrature import integrate_deflection
from .series_tools import PowerSeries, compose, hyp3f2_taylor, lagrange_revert
from .special_functions import gauss_2f1, hyp_3f2

__all__ = [
    "RedundancySolution",
    "ConsistencyEquation",
    "roller_consistency",
    "solve_roller",
    "roller_reaction_series",
    "builtin_reaction_series",
    "builtin_tip_integral",
    "solve_builtin",
    "max_bending_stress_report",
    "stabilized_from",
]

# X-side 3F2 parameter pairs for the roller consistency equation.
# "expansion" pairs the reaction side with the load-side parameters; the
# reaction series and its published convergence behavior belong to this
# kernel. "displacement" uses the tip-shear closed-form parameters, which
# makes the equation the exact zero-displacement closure.
_KERNELS = {
    "expansion": (7.0 / 6.0, 5.0 / 3.0),
    "displacement": (1.25, 1.75),
}
_KERNEL_FRACTIONS = {
    "expansion": (Fraction(7, 6), Fraction(5, 3)),
    "displacement": (Fraction(5, 4), Fraction(7, 4)),
}


@dataclass(frozen=True)
class ConsistencyEquation:
    """Scaled form f(Y) = Z of a consistency condition.

    Y = X L^2/(2 EJ) is the scaled unknown; f is odd, strictly
    increasing on (-1, 1) and unbounded as Y -> 1, so the equation has
    exactly one root for any admissible Z >= 0.
    """

    kernel: str
    rod: RodProperties
    q: float

    def lhs(self, Y: float, rtol: float = 1e-13) -> float:
        p1, p2 = _KERNELS[self.kernel]
        return Y * hyp_3f2(0.5, 1.0, 1.5, p1, p2, Y * Y, rtol=rtol)

    def target(self, rtol: float = 1e-13) -> float:
        L, EJ = self.rod.L, self.rod.EJ
        w = L ** 3 * self.q / EJ
        return (3.0 / 16.0) * w * hyp_3f2(0.5, 1.0, 1.5, 7.0 / 6.0, 5.0 / 3.0, w * w / 36.0, rtol=rtol)


@dataclass(frozen=True)
class RedundancySolution:
    """Redundant unknown with how it was obtained and how it converged."""

    problem: str  # "roller" | "builtin"
    method: str  # "linearized" | "series(n)" | "root_find" | "closed(...)"
    X: float
    units: str
    residual: float | None
    deviation_pct: float
    trace: tuple[tuple[int, float], ...] = field(default_factory=tuple)

    def json_obj(self):
        return {
            "problem": self.problem,
            "method": self.method,
            "X": self.X,
            "units": self.units,
            "residual": self.residual,
            "trace": [{"n": n, "X_n": x} for n, x in self.trace],
            "deviation_pct": self.deviation_pct,
        }


def _check_kernel(kernel: str) -> None:
    if kernel not in _KERNELS:
        raise UsageError(f"kernel must be one of {sorted(_KERNELS)}, got {kernel!r}")


def _check_roller_load(rod: RodProperties, q: float) -> None:
    if q < 0:
        raise UsageError("q must be nonnegative (loads act downward)")
    if q * rod.L ** 3 >= 6.0 * rod.EJ:
        raise InfeasibleLoadError(
            f"q = {q:.6g} violates {feasibility_bound(UniformLoad(q), rod)}"
        )


def _check_builtin_load(rod: RodProperties, q: float) -> None:
    if q < 0:
        raise UsageError("q must be nonnegative (loads act downward)")
    if q * rod.L ** 3 >= 12.0 * rod.EJ:
        raise InfeasibleLoadError(
            f"q = {q:.6g} violates {feasibility_bound(BuiltInCombined(q), rod)}"
        )


def roller_consistency(rod: RodProperties, q: float, X: float,
                       kernel: str = "expansion", rtol: float = 1e-13) -> float:
    """Residual 3Lq*F_load - 8X*F_reaction of the roller condition.

    Positive residual means the reaction X is too small. The "expansion"
    kernel evaluates the reaction factor with the load-side parameter
    pair (7/6, 5/3); "displacement" uses the tip-shear pair (5/4, 7/4),
    which makes the zero of the residual agree with the quadrature
    zero-displacement closure exactly.
    """
    _check_kernel(kernel)
    _check_roller_load(rod, q)
    L, EJ = rod.L, rod.EJ
    if abs(X) * L ** 2 >= 2.0 * EJ:
        raise InfeasibleLoadError(
            f"|X| = {abs(X):.6g} violates |X| < 2*EJ/L^2 = {2.0 * EJ / L ** 2:.6g} N"
        )
    p1, p2 = _KERNELS[kernel]
    f_load = hyp_3f2(0.5, 1.0, 1.5, 7.0 / 6.0, 5.0 / 3.0,
                     L ** 6 * q ** 2 / (36.0 * EJ ** 2), rtol=rtol)
    f_reaction = hyp_3f2(0.5, 1.0, 1.5, p1, p2,
                         L ** 4 * X ** 2 / (4.0 * EJ ** 2), rtol=rtol)
    return 3.0 * L * q * f_load - 8.0 * X * f_reaction


@lru_cache(maxsize=32)
def _roller_series_cached(order: int, kernel: str) -> PowerSeries:
    p1, p2 = _KERNEL_FRACTIONS[kernel]
    f = hyp3f2_taylor((Fraction(1, 2), Fraction(1), Fraction(3, 2), p1, p2), order)
    z_raw = hyp3f2_taylor((Fraction(1, 2), Fraction(1), Fraction(3, 2),
                           Fraction(7, 6), Fraction(5, 3)), order)
    # Z(w) = (3/16) w * F(w^2/36) = (9/8) * z_raw(w/6)
    z = PowerSeries(
        tuple(Fraction(9, 8) * c * Fraction(1, 6) ** k
              for k, c in enumerate(z_raw.coefficients)),
        z_raw.order, "odd",
    )
    y_of_w = compose(lagrange_revert(f), z)
    return PowerSeries(tuple(2 * c for c in y_of_w.coefficients), y_of_w.order, "odd")


def roller_reaction_series(order: int = 19, kernel: str = "expansion") -> PowerSeries:
    """Reaction expansion in the scaled load w = L^3 q / EJ.

    Returns the odd series with X = (EJ/L^2) * series(w); the
    coefficient of w^(2k+1) is the exact rational a_k, a_0 = 3/8.
    Built by reverting the scaled consistency equation and composing
    with the load-side series.
    """
    if order < 1:
        raise UsageError("order must be at least 1")
    _check_kernel(kernel)
    return _roller_series_cached(order, kernel)


@lru_cache(maxsize=8)
def builtin_reaction_series(order: int = 19) -> PowerSeries:
    """End-moment expansion in w = L^3 q / EJ for the built-in rod.

    Returns the odd series with X = (EJ/L) * series(w); the coefficient
    of w^(2k+1) is the exact rational b_k, b_0 = 1/12. Composes the
    closed map 2 phi/(1 + phi^2) with the tip-integral series phi(w).
    """
    if order < 1:
        raise UsageError("order must be at least 1")
    # phi(w) = (w/24) 2F1(1/2, 2/3; 5/3; w^2/36) = (1/4) u(w/6)
    u = hyp3f2_taylor((Fraction(1, 2), Fraction(2, 3), Fraction(1),
                       Fraction(1), Fraction(5, 3)), order)
    phi = PowerSeries(
        tuple(Fraction(1, 4) * c * Fraction(1, 6) ** k
              for k, c in enumerate(u.coefficients)),
        u.order, "odd",
    )
    # 2 t / (1 + t^2) = 2 sum (-1)^m t^(2m+1)
    outer = PowerSeries(
        tuple(Fraction(0) if k % 2 == 0 else Fraction(2 * (-1) ** ((k - 1) // 2))
              for k in range(order + 1)),
        order, "odd",
    )
    return compose(outer, phi)


def _series_trace(series: PowerSeries, w: float, scale: float, n_terms: int):
    """Partial sums (n, scale * sum_{k<=n} c_{2k+1} w^(2k+1))."""
    trace = []
    total = 0.0
    wk = w
    for k in range(n_terms + 1):
        total += float(series.coefficient(2 * k + 1)) * wk
        trace.append((k, scale * total))
        wk *= w * w
    return trace


def _find_roller_root(rod: RodProperties, q: float, kernel: str, rtol: float) -> float:
    if q == 0.0:
        return 0.0
    L, EJ = rod.L, rod.EJ
    y_cap = 2.0 * EJ / L ** 2 * 0.999
    lo, hi = 0.0, min(1.1 * 3.0 * q * L / 8.0, y_cap)
    r_lo = roller_consistency(rod, q, lo, kernel=kernel)
    r_hi = roller_consistency(rod, q, hi, kernel=kernel)
    if not (r_lo > 0.0 >= r_hi):
        raise BracketError(
            f"no sign change on (0, {hi:.6g}); the load is too close to critical "
            f"for the reaction bracket"
        )
    # bisection to a coarse width, then a secant polish on the same bracket
    while hi - lo > 1e-6 * max(hi, 1.0):
        mid = 0.5 * (lo + hi)
        r_mid = roller_consistency(rod, q, mid, kernel=kernel)
        if r_mid > 0.0:
            lo, r_lo = mid, r_mid
        else:
            hi, r_hi = mid, r_mid
    x0, x1 = lo, hi
    f0, f1 = r_lo, r_hi
    for _ in range(60):
        if f1 == f0:
            break
        x2 = x1 - f1 * (x1 - x0) / (f1 - f0)
        x2 = min(max(x2, lo), hi)
        if abs(x2 - x1) <= rtol * abs(x2):
            return x2
        x0, f0 = x1, f1
        x1, f1 = x2, roller_consistency(rod, q, x2, kernel=kernel)
    return x1


def solve_roller(rod: RodProperties, q: float, method: str, n_terms: int = 7,
                 kernel: str = "expansion", rtol: float = 1e-12) -> RedundancySolution:
    """Roller reaction by 'linearized', 'series' (n_terms) or 'root_find'."""
    _check_kernel(kernel)
    _check_roller_load(rod, q)
    L, EJ = rod.L, rod.EJ
    linearized = 3.0 * q * L / 8.0

    if method == "linearized":
        X, trace, label = linearized, (), "linearized"
    elif method == "series":
        if n_terms < 0:
            raise UsageError("n_terms must be nonnegative")
        series = roller_reaction_series(2 * n_terms + 1, kernel=kernel)
        trace = tuple(_series_trace(series, L ** 3 * q / EJ, EJ / L ** 2, n_terms))
        X, label = trace[-1][1], f"series({n_terms})"
    elif method == "root_find":
        X, trace, label = _find_roller_root(rod, q, kernel, rtol), (), "root_find"
    else:
        raise UsageError(f"method must be linearized, series or root_find, got {method!r}")

    residual = roller_consistency(rod, q, X, kernel=kernel)
    deviation = 0.0 if X == 0.0 else (linearized - X) / X * 100.0
    return RedundancySolution(problem="roller", method=label, X=X, units="N",
                              residual=residual, deviation_pct=deviation, trace=trace)


def builtin_tip_integral(rod: RodProperties, q: float, mode: str = "quadrature",
                         rtol: float = 1e-13) -> float:
    """Tip integral of the clamped configuration, positive for q > 0.

    mode "quadrature" integrates the exact integrand; "hyp_approx" uses
    the closed 2F1 approximation, which is reliable only well below the
    critical load (leading order in q).
    """
    _check_builtin_load(rod, q)
    if q == 0.0:
        return 0.0
    L, EJ = rod.L, rod.EJ
    if mode == "quadrature":
        return integrate_deflection(BuiltInCombined(q), rod, 0.0, rtol=rtol)
    if mode == "hyp_approx":
        arg = L ** 6 * q ** 2 / (36.0 * EJ ** 2)
        return (L ** 4 * q / (24.0 * EJ)) * gauss_2f1(0.5, 2.0 / 3.0, 5.0 / 3.0, arg, rtol=rtol)
    raise UsageError(f"mode must be 'quadrature' or 'hyp_approx', got {mode!r}")


def solve_builtin(rod: RodProperties, q: float, method: str, n_terms: int = 11,
                  integral_mode: str = "quadrature",
                  rtol: float = 1e-13) -> RedundancySolution:
    """Built-in end moment by 'linearized', 'series' (n_terms) or 'closed'.

    'closed' evaluates X = 2 EJ I / (L^2 + I^2) with the tip integral I
    from ``integral_mode``; the series follows the 2F1-approximation
    route, so its limit is the closed value with mode "hyp_approx".
    """
    _check_builtin_load(rod, q)
    L, EJ = rod.L, rod.EJ
    linearized = q * L ** 2 / 12.0

    if method == "linearized":
        X, trace, label = linearized, (), "linearized"
    elif method == "series":
        if n_terms < 0:
            raise UsageError("n_terms must be nonnegative")
        series = builtin_reaction_series(2 * n_terms + 1)
        trace = tuple(_series_trace(series, L ** 3 * q / EJ, EJ / L, n_terms))
        X, label = trace[-1][1], f"series({n_terms})"
    elif method == "closed":
        i_val = builtin_tip_integral(rod, q, mode=integral_mode, rtol=rtol)
        X = 2.0 * EJ * i_val / (L ** 2 + i_val ** 2)
        trace, label = (), f"closed({integral_mode})"
    else:
        raise UsageError(f"method must be linearized, series or closed, got {method!r}")

    deviation = 0.0 if X == 0.0 else (linearized - X) / X * 100.0
    return RedundancySolution(problem="builtin", method=label, X=X, units="N m",
                              residual=None, deviation_pct=deviation, trace=trace)


def stabilized_from(trace, tol: float = 1e-4) -> int | None:
    """Least n with all successive relative changes below tol from n on.

    The change at step m is |X_m - X_{m-1}| / |X_m|; returns None when
    even the last step still moves more than tol.
    """
    trace = list(trace)
    if len(trace) < 2:
        return None
    stable_from = None
    for m in range(1, len(trace)):
        prev, curr = trace[m - 1][1], trace[m][1]
        if curr == 0.0:
            change = math.inf if prev != 0.0 else 0.0
        else:
            change = abs(curr - prev) / abs(curr)
        if change < tol:
            if stable_from is None:
                stable_from = trace[m][0]
        else:
            stable_from = None
    return stable_from


def max_bending_stress_report(problem: str, solution: RedundancySolution,
                              rod: RodProperties, q: float) -> dict:
    """Highest bending moment of the solved configuration vs the linearized one.

    Roller: the moment peaks at x = X/q with value X^2/(2q); the report
    carries the peak for both reactions and the stress change in percent
    of either baseline. Built-in rod: the end sections carry the largest
    moment; end and midspan values are reported for both routes.
    """
    L = rod.L
    X = solution.X
    if problem == "roller":
        x_lin = 3.0 * q * L / 8.0
        if q == 0.0:
            return {"problem": "roller", "M_max_linearized_Nm": 0.0, "M_max_nonlinear_Nm": 0.0,
                    "x_peak_linearized_m": 0.0, "x_peak_nonlinear_m": 0.0,
                    "stress_drop_pct_of_linearized": 0.0, "stress_drop_pct_of_nonlinear": 0.0}
        m_lin = x_lin ** 2 / (2.0 * q)
        m_nl = X ** 2 / (2.0 * q)
        return {
            "problem": "roller",
            "M_max_linearized_Nm": m_lin,
            "M_max_nonlinear_Nm": m_nl,
            "x_peak_linearized_m": x_lin / q,
            "x_peak_nonlinear_m": X / q,
            "stress_drop_pct_of_linearized": (m_lin - m_nl) / m_lin * 100.0,
            "stress_drop_pct_of_nonlinear": (m_lin - m_nl) / m_nl * 100.0,
        }
    if problem == "builtin":
        x_lin = q * L ** 2 / 12.0
        mid_lin = x_lin - q * L ** 2 / 8.0
        mid_nl = X - q * L ** 2 / 8.0
        m_lin = max(abs(x_lin), abs(mid_lin))
        m_nl = max(abs(X), abs(mid_nl))
        report = {
            "problem": "builtin",
            "M_end_linearized_Nm": x_lin,
            "M_end_nonlinear_Nm": X,
            "M_midspan_linearized_Nm": mid_lin,
            "M_midspan_nonlinear_Nm": mid_nl,
            "M_max_linearized_Nm": m_lin,
            "M_max_nonlinear_Nm": m_nl,
        }
        if m_lin > 0.0 and m_nl > 0.0:
            report["stress_change_pct_of_linearized"] = (m_nl - m_lin) / m_lin * 100.0
            report["stress_change_pct_of_nonlinear"] = (m_nl - m_lin) / m_nl * 100.0
        else:
            report["stress_change_pct_of_linearized"] = 0.0
            report["stress_change_pct_of_nonlinear"] = 0.0
        return report
    raise UsageError(f"problem must be 'roller' or 'builtin', got {problem!r}")

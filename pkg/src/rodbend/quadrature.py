"""Adaptive one-dimensional quadrature with endpoint-singularity support.

A 7-point Gauss rule nested in a 15-point Kronrod rule drives adaptive
interval bisection; the difference between the two rules is the panel
error estimate. Integrable algebraic endpoint singularities are absorbed
by a power substitution before any panel is evaluated, so the adaptive
stage only ever sees a smooth integrand.

Also hosts the exact rod-deflection integral, which every closed-form
result in the library is checked against.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import InfeasibleLoadError, NearCriticalLoadError, UsageError

__all__ = ["IntegrandSpec", "integrate", "integrate_deflection"]

# 15-point Kronrod nodes on [-1, 1] (nonnegative half; the rule is symmetric).
# Even indices of the half array form the embedded 7-point Gauss subset.
_XK = np.array([
    0.000000000000000000000000000000000,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329,
])
_WK = np.array([
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970,
])
_WG = np.array([
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082,
])

# All 15 abscissae, mirrored once so panel evaluation is a single array call.
# The center lands at index 7, so the Gauss subset is the odd indices.
_NODES = np.concatenate([-_XK[:0:-1], _XK])
_KWEIGHTS = np.concatenate([_WK[:0:-1], _WK])
_GWEIGHTS = np.zeros(15)
_GWEIGHTS[1::2] = np.concatenate([_WG[:0:-1], _WG])


@dataclass(frozen=True)
class IntegrandSpec:
    """One definite integral with tolerances and singularity hints.

    ``lo_exponent``/``hi_exponent`` declare that the integrand behaves like
    (x - lo)**p resp. (hi - x)**p at the endpoint. Hints must be > -1
    (integrable); None means the integrand is regular there.
    """

    f: Callable[[np.ndarray], np.ndarray]
    lo: float
    hi: float
    lo_exponent: float | None = None
    hi_exponent: float | None = None
    rtol: float = 1e-10
    atol: float = 1e-14
    max_subdivisions: int = 4096

    def __post_init__(self):
        if not self.lo < self.hi:
            raise UsageError(f"empty or reversed interval [{self.lo}, {self.hi}]")
        if not self.rtol > 0:
            raise UsageError("rtol must be positive")
        for name, p in (("lo_exponent", self.lo_exponent), ("hi_exponent", self.hi_exponent)):
            if p is not None and not p > -1:
                raise UsageError(f"{name}={p} is not integrable (need > -1)")


def _panel(f, lo, hi):
    """Gauss-Kronrod panel: returns (K15 value, error estimate)."""
    half = 0.5 * (hi - lo)
    mid = 0.5 * (lo + hi)
    fx = np.asarray(f(mid + half * _NODES), dtype=float)
    if not np.all(np.isfinite(fx)):
        raise UsageError(f"integrand not finite inside [{lo}, {hi}]")
    k15 = half * float(_KWEIGHTS @ fx)
    g7 = half * float(_GWEIGHTS @ fx)
    return k15, abs(k15 - g7)


def _adaptive(f, lo, hi, rtol, atol, max_subdivisions):
    """Bisect the worst panel until the error bound is met."""
    value, err = _panel(f, lo, hi)
    # max-heap on panel error; counter breaks ties deterministically
    heap = [(-err, 0, lo, hi, value, err)]
    total, total_err = value, err
    count = 1
    while total_err > max(atol, rtol * abs(total)):
        if count >= max_subdivisions:
            raise UsageError(
                f"quadrature did not converge within {max_subdivisions} subdivisions "
                f"(error {total_err:.3e}); integrand may have a non-integrable singularity"
            )
        _, _, a, b, v, e = heapq.heappop(heap)
        m = 0.5 * (a + b)
        v1, e1 = _panel(f, a, m)
        v2, e2 = _panel(f, m, b)
        total += v1 + v2 - v
        total_err += e1 + e2 - e
        count += 2
        heapq.heappush(heap, (-e1, count, a, m, v1, e1))
        heapq.heappush(heap, (-e2, count + 1, m, b, v2, e2))
    return total, total_err


_EPS = float(np.finfo(float).eps)


def _absorb_lo(f, lo, hi, p):
    """Map [lo, hi] to t in [0, 1] so that (x-lo)**p becomes ~t**2.

    Offsets below one ulp of the endpoint cannot be represented in x,
    so evaluation is clamped there; the affected tail mass is returned
    as an error floor instead of being silently trusted.
    """
    gamma = max(1.0, 3.0 / (1.0 + p))
    width = hi - lo
    d_min = _EPS * max(abs(lo), width)

    def g(t):
        t = np.asarray(t, dtype=float)
        d = np.maximum(width * t ** gamma, d_min)
        return f(lo + d) * width * gamma * t ** (gamma - 1.0)

    t_clamp = (d_min / width) ** (1.0 / gamma)
    floor = abs(float(np.asarray(g(np.array([t_clamp])))[0])) * t_clamp / 3.0
    return g, floor


def _absorb_hi(f, lo, hi, p):
    gamma = max(1.0, 3.0 / (1.0 + p))
    width = hi - lo
    d_min = _EPS * max(abs(hi), width)

    def g(t):
        t = np.asarray(t, dtype=float)
        d = np.maximum(width * t ** gamma, d_min)
        return f(hi - d) * width * gamma * t ** (gamma - 1.0)

    t_clamp = (d_min / width) ** (1.0 / gamma)
    floor = abs(float(np.asarray(g(np.array([t_clamp])))[0])) * t_clamp / 3.0
    return g, floor


def integrate(spec: IntegrandSpec) -> tuple[float, float]:
    """Evaluate the integral described by ``spec``.

    Returns (value, error_estimate). The estimate is the summed
    Gauss/Kronrod discrepancy plus, for declared endpoint
    singularities, the representability floor from the substitution
    layer; it is conservative on smooth pieces.
    """
    pieces = []
    f, lo, hi = spec.f, spec.lo, spec.hi
    if spec.lo_exponent is not None and spec.hi_exponent is not None:
        mid = 0.5 * (lo + hi)
        g1, fl1 = _absorb_lo(f, lo, mid, spec.lo_exponent)
        g2, fl2 = _absorb_hi(f, mid, hi, spec.hi_exponent)
        pieces = [(g1, 0.0, 1.0, fl1), (g2, 0.0, 1.0, fl2)]
    elif spec.lo_exponent is not None:
        g1, fl1 = _absorb_lo(f, lo, hi, spec.lo_exponent)
        pieces = [(g1, 0.0, 1.0, fl1)]
    elif spec.hi_exponent is not None:
        g1, fl1 = _absorb_hi(f, lo, hi, spec.hi_exponent)
        pieces = [(g1, 0.0, 1.0, fl1)]
    else:
        pieces = [(f, lo, hi, 0.0)]

    total, total_err = 0.0, 0.0
    for g, a, b, floor in pieces:
        # below the floor the rule error is dominated by rounding of the
        # endpoint offset, so tightening further cannot help
        atol_each = max(spec.atol / len(pieces), 2.0 * floor)
        v, e = _adaptive(g, a, b, spec.rtol, atol_each, spec.max_subdivisions)
        total += v
        total_err += e + floor
    return total, total_err


# fraction of EJ by which |H| must clear the curvature bound
_CRITICAL_MARGIN = 1e-6


def integrate_deflection(load, rod, x: float, rtol: float = 1e-10, atol: float = 1e-14) -> float:
    """Deflection y(x) of the rod tip side, by direct quadrature.

    Integrates H(xi)/sqrt(EJ^2 - H^2(xi)) over [x, L] with the exact
    (nonlinear-curvature) kinematics; downward deflections are positive.
    Raises InfeasibleLoadError when |H| reaches EJ on the interval and
    NearCriticalLoadError when the relative margin is below 1e-6, where
    the integrand is numerically intractable.
    """
    from . import elastica  # deferred: elastica depends on this module

    L = rod.L
    if not 0.0 <= x <= L:
        raise UsageError(f"position x={x} outside the rod [0, {L}]")
    if x == L:
        return 0.0

    EJ = rod.EJ
    grid = np.linspace(x, L, 513)
    habs = np.abs(elastica.cumulative_moment(load, grid, rod=rod))
    margin = float((EJ - habs.max()) / EJ)
    if margin <= 0.0:
        raise InfeasibleLoadError(
            f"load violates the curvature bound: max |H| = {habs.max():.6g} >= EJ = {EJ:.6g}"
        )
    if margin < _CRITICAL_MARGIN:
        raise NearCriticalLoadError(
            f"load within {margin:.3e} of the curvature bound (safety margin {_CRITICAL_MARGIN:g})"
        )

    def integrand(xi):
        h = elastica.cumulative_moment(load, xi, rod=rod)
        return h / np.sqrt((EJ - h) * (EJ + h))

    value, _ = integrate(IntegrandSpec(f=integrand, lo=x, hi=L, rtol=rtol, atol=atol))
    return -value if value != 0.0 else 0.0

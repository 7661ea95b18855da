"""Rod and load model with exact (nonlinear-curvature) deflections.

Reference frame: x runs from the free tip (x = 0) toward the wall
(x = L), y is positive downward. A load is feasible only while the
running moment integral H(x) stays below the flexural stiffness in
magnitude; within that bound the exact deflection is

    y(x) = -int_x^L H(xi) / sqrt(EJ^2 - H^2(xi)) dxi,

evaluated either by adaptive quadrature or, for the tip, by 3F2
hypergeometric closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Union

import numpy as np

from .errors import InfeasibleLoadError, UsageError
from .quadrature import integrate_deflection
from .special_functions import hyp_3f2

__all__ = [
    "RodProperties",
    "UniformLoad",
    "TipShear",
    "TipMoment",
    "BuiltInCombined",
    "LoadCase",
    "DeflectionProfile",
    "bending_moment",
    "cumulative_moment",
    "feasibility_check",
    "feasibility_bound",
    "tip_deflection_uniform",
    "tip_deflection_shear",
    "tip_deflection_moment",
    "linearized_deflection",
    "linearized_tip_deflection",
    "first_example_profile",
    "deflection_profile",
]


@dataclass(frozen=True)
class RodProperties:
    """Uniform rod: length L [m], Young modulus E [N/m^2], second moment J [m^4]."""

    L: float
    E: float
    J: float

    def __post_init__(self):
        for name in ("L", "E", "J"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise UsageError(f"{name} must be finite and positive, got {v}")

    @property
    def EJ(self) -> float:
        """Flexural stiffness [N m^2]."""
        return self.E * self.J

    @classmethod
    def from_stiffness(cls, L: float, EJ: float) -> "RodProperties":
        """Build a rod from L and the stiffness product directly (J = 1)."""
        return cls(L=L, E=EJ, J=1.0)


def _check_magnitude(value: float, name: str) -> None:
    if not math.isfinite(value):
        raise UsageError(f"{name} must be finite, got {value}")


@dataclass(frozen=True)
class UniformLoad:
    """Distributed load q [N/m], positive downward."""

    q: float

    def __post_init__(self):
        _check_magnitude(self.q, "q")


@dataclass(frozen=True)
class TipShear:
    """Concentrated tip force P [N], positive downward."""

    P: float

    def __post_init__(self):
        _check_magnitude(self.P, "P")


@dataclass(frozen=True)
class TipMoment:
    """Concentrated tip couple M0 [N m]."""

    M0: float

    def __post_init__(self):
        _check_magnitude(self.M0, "M0")


@dataclass(frozen=True)
class BuiltInCombined:
    """Distributed load q with half of it equilibrated at the far support.

    Bending moment -q(Lx - x^2)/2: the configuration of a doubly clamped
    rod before its redundant end moment is applied.
    """

    q: float

    def __post_init__(self):
        _check_magnitude(self.q, "q")


LoadCase = Union[UniformLoad, TipShear, TipMoment, BuiltInCombined]


def _as_array(x):
    arr = np.asarray(x, dtype=float)
    return arr, arr.ndim == 0


def bending_moment(load: LoadCase, x, rod: RodProperties):
    """Bending moment M(x) [N m]; accepts scalar or array positions."""
    xa, scalar = _as_array(x)
    L = rod.L
    if isinstance(load, UniformLoad):
        m = -load.q * xa ** 2 / 2.0
    elif isinstance(load, TipShear):
        m = -load.P * xa
    elif isinstance(load, TipMoment):
        m = load.M0 * np.ones_like(xa)
    elif isinstance(load, BuiltInCombined):
        m = -load.q * (L * xa - xa ** 2) / 2.0
    else:
        raise UsageError(f"unknown load case {load!r}")
    return float(m) if scalar else m


def cumulative_moment(load: LoadCase, x, rod: RodProperties):
    """Running moment integral H(x) [N m^2], integrating M from x to L."""
    xa, scalar = _as_array(x)
    L = rod.L
    if isinstance(load, UniformLoad):
        h = -load.q * (L ** 3 - xa ** 3) / 6.0
    elif isinstance(load, TipShear):
        h = -load.P * (L ** 2 - xa ** 2) / 2.0
    elif isinstance(load, TipMoment):
        h = load.M0 * (L - xa)
    elif isinstance(load, BuiltInCombined):
        h = -load.q * (L - xa) ** 2 * (L + 2.0 * xa) / 12.0
    else:
        raise UsageError(f"unknown load case {load!r}")
    return float(h) if scalar else h


def feasibility_check(load: LoadCase, rod: RodProperties) -> float:
    """Max over [0, L] of |H(x)|/EJ; values >= 1 mean the load is infeasible.

    |H| is monotone decreasing toward the wall for every supported load
    shape, so the maximum sits at the free tip.
    """
    return abs(cumulative_moment(load, 0.0, rod)) / rod.EJ


def feasibility_bound(load: LoadCase, rod: RodProperties) -> str:
    """Human-readable feasibility bound for the given load shape."""
    L, EJ = rod.L, rod.EJ
    if isinstance(load, UniformLoad):
        return f"q < 6*EJ/L^3 = {6.0 * EJ / L ** 3:.6g} N/m"
    if isinstance(load, TipShear):
        return f"|P| < 2*EJ/L^2 = {2.0 * EJ / L ** 2:.6g} N"
    if isinstance(load, TipMoment):
        return f"|M0| < EJ/L = {EJ / L:.6g} N m"
    if isinstance(load, BuiltInCombined):
        return f"q < 12*EJ/L^3 = {12.0 * EJ / L ** 3:.6g} N/m"
    raise UsageError(f"unknown load case {load!r}")


def _require_feasible(load: LoadCase, rod: RodProperties) -> None:
    ratio = feasibility_check(load, rod)
    if ratio >= 1.0:
        raise InfeasibleLoadError(
            f"|H|/EJ reaches {ratio:.6g} >= 1; need {feasibility_bound(load, rod)}"
        )


def tip_deflection_uniform(rod: RodProperties, q: float, rtol: float = 1e-13) -> float:
    """Exact tip deflection under a uniform load, by closed form."""
    _require_feasible(UniformLoad(q), rod)
    L, EJ = rod.L, rod.EJ
    arg = L ** 6 * q ** 2 / (36.0 * EJ ** 2)
    return (L ** 4 * q / (8.0 * EJ)) * hyp_3f2(0.5, 1.0, 1.5, 7.0 / 6.0, 5.0 / 3.0, arg, rtol=rtol)


def tip_deflection_shear(rod: RodProperties, X: float, rtol: float = 1e-13) -> float:
    """Exact tip deflection under a tip force of magnitude X acting upward.

    Equals -integrate_deflection(TipShear(X), rod, 0): positive X lifts
    the tip, so the returned value is negative (upward).
    """
    _require_feasible(TipShear(X), rod)
    L, EJ = rod.L, rod.EJ
    arg = L ** 4 * X ** 2 / (4.0 * EJ ** 2)
    return -(L ** 3 * X / (3.0 * EJ)) * hyp_3f2(0.5, 1.0, 1.5, 1.25, 1.75, arg, rtol=rtol)


def tip_deflection_moment(rod: RodProperties, X: float) -> float:
    """Exact tip deflection under a constant tip couple X, elementary closed form."""
    L, EJ = rod.L, rod.EJ
    if abs(X) * L >= EJ:
        raise InfeasibleLoadError(
            f"|M0|*L = {abs(X) * L:.6g} >= EJ = {EJ:.6g}; need {feasibility_bound(TipMoment(X), rod)}"
        )
    if X == 0.0:
        return 0.0
    if abs(X) * L ** 2 / EJ < 1e-6:
        # two-term expansion; the closed form loses digits to cancellation here
        return -X * L ** 2 / (2.0 * EJ) * (1.0 + X ** 2 * L ** 2 / (4.0 * EJ ** 2))
    return (math.sqrt(EJ ** 2 - X ** 2 * L ** 2) - EJ) / X


def linearized_deflection(load: LoadCase, rod: RodProperties, x):
    """Small-deflection profile y_lin(x) = -(1/EJ) int_x^L H, per load shape."""
    xa, scalar = _as_array(x)
    L, EJ = rod.L, rod.EJ
    if isinstance(load, UniformLoad):
        y = load.q * (3.0 * L ** 4 - 4.0 * L ** 3 * xa + xa ** 4) / (24.0 * EJ)
    elif isinstance(load, TipShear):
        y = load.P * (2.0 * L ** 3 - 3.0 * L ** 2 * xa + xa ** 3) / (6.0 * EJ)
    elif isinstance(load, TipMoment):
        y = -load.M0 * (L - xa) ** 2 / (2.0 * EJ)
    elif isinstance(load, BuiltInCombined):
        y = load.q * (L - xa) ** 3 * (L + xa) / (24.0 * EJ)
    else:
        raise UsageError(f"unknown load case {load!r}")
    return float(y) if scalar else y


def linearized_tip_deflection(load: LoadCase, rod: RodProperties) -> float:
    """Leading-order tip deflection: qL^4/8EJ, PL^3/3EJ, -M0 L^2/2EJ, qL^4/24EJ."""
    return linearized_deflection(load, rod, 0.0)


class FirstExampleResult(NamedTuple):
    eta_exact: float
    eta_approx: float


def first_example_profile(rod: RodProperties, P: float, xi: float) -> FirstExampleResult:
    """Dimensionless tip-shear deflection eta(xi) = y(xi L)/L, both routes.

    Returns the exact value by quadrature and the first-order
    approximation (mu/3)(2 - 3 xi + xi^3), mu = P L^2/(2 EJ); their gap
    is O(mu^2).
    """
    if not 0.0 <= xi <= 1.0:
        raise UsageError(f"xi must lie in [0, 1], got {xi}")
    load = TipShear(P)
    _require_feasible(load, rod)
    mu = P * rod.L ** 2 / (2.0 * rod.EJ)
    eta_exact = integrate_deflection(load, rod, xi * rod.L) / rod.L
    eta_approx = (mu / 3.0) * (2.0 - 3.0 * xi + xi ** 3)
    return FirstExampleResult(eta_exact, eta_approx)


_PROFILE_METHODS = ("quadrature", "closed-form", "linearized")


@dataclass(frozen=True)
class DeflectionProfile:
    """Sampled deflection curve with the method that produced it."""

    samples: tuple[tuple[float, float], ...]
    method: str

    def __post_init__(self):
        if self.method not in _PROFILE_METHODS:
            raise UsageError(f"method must be one of {_PROFILE_METHODS}, got {self.method!r}")
        xs = [s[0] for s in self.samples]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise UsageError("sample positions must be strictly increasing")
        if self.samples and abs(self.samples[-1][1]) > 1e-9:
            raise UsageError(f"wall deflection must vanish, got y(L) = {self.samples[-1][1]}")

    def csv_rows(self):
        yield ("x_m", "y_m", "method")
        for x, y in self.samples:
            yield (format(x, ".17g"), format(y, ".17g"), self.method)

    def json_obj(self):
        return {
            "method": self.method,
            "samples": [{"x_m": x, "y_m": y} for x, y in self.samples],
        }


def deflection_profile(load: LoadCase, rod: RodProperties, method: str = "quadrature",
                       n_points: int = 201, rtol: float = 1e-10) -> DeflectionProfile:
    """Sample the deflection curve on a uniform grid (default 201 points)."""
    if n_points < 2:
        raise UsageError("need at least 2 grid points")
    xs = np.linspace(0.0, rod.L, n_points)
    if method == "quadrature":
        ys = [integrate_deflection(load, rod, float(x), rtol=rtol) for x in xs]
    elif method == "linearized":
        ys = [float(v) for v in linearized_deflection(load, rod, xs)]
    else:
        raise UsageError(f"profiles support methods 'quadrature' and 'linearized', got {method!r}")
    return DeflectionProfile(samples=tuple((float(x), float(y)) for x, y in zip(xs, ys)),
                             method=method)

"""Truncated power series over exact rationals, with Lagrange reversion.

Coefficients stay `Fraction` through every operation and only become
floats at evaluation time, so reversion results can be compared for
exact equality. Series carry a parity tag: odd series (only odd powers)
revert to odd series, which is what the reaction expansions rely on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import UsageError

__all__ = ["PowerSeries", "identity_series", "compose", "lagrange_revert", "hyp3f2_taylor"]


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients indexed by power, valid through ``order`` inclusive."""

    coefficients: tuple[Fraction, ...]
    order: int
    parity: str = "general"  # "odd" | "general"

    def __post_init__(self):
        if self.parity not in ("odd", "general"):
            raise UsageError(f"parity must be 'odd' or 'general', got {self.parity!r}")
        if self.order < len(self.coefficients) - 1:
            raise UsageError("truncation order below the highest stored power")
        if self.parity == "odd" and any(c != 0 for c in self.coefficients[0::2]):
            raise UsageError("odd series has a nonzero even coefficient")
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))

    @classmethod
    def from_coefficients(cls, coeffs: Sequence, order: int | None = None,
                          parity: str = "general") -> "PowerSeries":
        coeffs = tuple(Fraction(c) for c in coeffs)
        if order is None:
            order = len(coeffs) - 1
        return cls(coefficients=coeffs[: order + 1], order=order, parity=parity)

    def coefficient(self, n: int) -> Fraction:
        if n > self.order:
            raise UsageError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coefficients[n] if n < len(self.coefficients) else Fraction(0)

    def truncated(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise UsageError(f"cannot extend truncation order {self.order} to {order}")
        return PowerSeries(self.coefficients[: order + 1], order, self.parity)

    def evaluate(self, x: float, n_terms: int | None = None) -> float:
        """Horner evaluation in float; ``n_terms`` caps the powers used."""
        coeffs = self.coefficients
        if n_terms is not None:
            coeffs = coeffs[:n_terms]
        total = 0.0
        for c in reversed(coeffs):
            total = total * x + float(c)
        return total

    def json_obj(self):
        """Coefficients as exact numerator/denominator pairs."""
        return {
            "order": self.order,
            "parity": self.parity,
            "coefficients": [
                {"power": k, "numerator": c.numerator, "denominator": c.denominator}
                for k, c in enumerate(self.coefficients)
            ],
        }


def identity_series(order: int, parity: str = "odd") -> PowerSeries:
    coeffs = [Fraction(0)] * (order + 1)
    if order >= 1:
        coeffs[1] = Fraction(1)
    return PowerSeries(tuple(coeffs), order, parity)


def _mul(a: list[Fraction], b: list[Fraction], order: int) -> list[Fraction]:
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a):
        if ai == 0 or i > order:
            continue
        top = min(len(b) - 1, order - i)
        for j in range(top + 1):
            if b[j] != 0:
                out[i + j] += ai * b[j]
    return out


def compose(outer: PowerSeries, inner: PowerSeries) -> PowerSeries:
    """outer(inner(x)) truncated to the common order; inner(0) must be 0."""
    if inner.coefficient(0) != 0:
        raise UsageError("inner series must have zero constant term")
    order = min(outer.order, inner.order)
    inner_c = list(inner.coefficients[: order + 1])
    # Horner over the outer coefficients, highest power first
    acc = [Fraction(0)] * (order + 1)
    for c in reversed(outer.coefficients[: order + 1]):
        acc = _mul(acc, inner_c, order)
        acc[0] += c
    parity = "odd" if outer.parity == "odd" and inner.parity == "odd" else "general"
    if parity == "odd":
        acc = [c if k % 2 == 1 else Fraction(0) for k, c in enumerate(acc)]
    return PowerSeries(tuple(acc), order, parity)


def lagrange_revert(f: PowerSeries) -> PowerSeries:
    """Series g with f(g(x)) = x through the truncation order.

    Coefficients are extracted order by order from the composition
    identity; odd input yields odd output.
    """
    if f.coefficient(0) != 0:
        raise UsageError("reversion needs f(0) = 0")
    if f.order < 1 or f.coefficient(1) == 0:
        raise UsageError("reversion needs a nonzero linear coefficient")
    order = f.order
    f1 = f.coefficient(1)
    g = [Fraction(0)] * (order + 1)
    g[1] = 1 / f1
    step = 2 if f.parity == "odd" else 1
    for n in range(1 + step, order + 1, step):
        g[n] = Fraction(0)
        comp = compose(f.truncated(n), PowerSeries(tuple(g[: n + 1]), n, "general"))
        g[n] = -comp.coefficient(n) / f1
    return PowerSeries(tuple(g), order, f.parity)


def hyp3f2_taylor(params: Sequence, order: int) -> PowerSeries:
    """Odd series f(Y) = sum_k t_k Y^(2k+1), t_k the k-th 3F2 series term.

    ``params`` is (a1, a2, a3, b1, b2); exact rationals are preserved.
    f(Y) = Y * 3F2(a1, a2, a3; b1, b2; Y^2) truncated at ``order``.
    """
    if order < 1:
        raise UsageError("order must be at least 1")
    a1, a2, a3, b1, b2 = (Fraction(p) for p in params)
    coeffs = [Fraction(0)] * (order + 1)
    term = Fraction(1)
    coeffs[1] = term
    k = 0
    while 2 * (k + 1) + 1 <= order:
        term *= (a1 + k) * (a2 + k) * (a3 + k)
        term /= (b1 + k) * (b2 + k) * (1 + k)
        k += 1
        coeffs[2 * k + 1] = term
    return PowerSeries(tuple(coeffs), order, "odd")

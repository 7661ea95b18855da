"""Exception hierarchy shared across the library.

Three families matter to callers: bad arguments (usage), loads that the
rod cannot carry (infeasible), and special-function parameter domains.
The CLI maps them to exit codes 1, 2 and 3 respectively.
"""


class RodBendError(Exception):
    """Base class for all library errors."""


class UsageError(RodBendError, ValueError):
    """Malformed or inconsistent arguments."""


class InfeasibleLoadError(RodBendError):
    """Load violates the curvature bound |H(x)| < EJ somewhere on the rod."""


class NearCriticalLoadError(InfeasibleLoadError):
    """Load is nominally feasible but too close to the curvature bound.

    Raised when min (EJ - |H|)/EJ drops below a safety margin; the
    deflection integrand is then numerically intractable.
    """


class BracketError(RodBendError):
    """Root bracketing failed; usually signals a load near critical."""


class DomainError(RodBendError, ValueError):
    """Special-function parameters outside the supported domain."""

"""Tour of the hypergeometric layer.

Evaluates the Gauss and generalized series, the two-variable and
three-variable functions, and cross-checks the reduction identities that
tie them together. Every identity is evaluated on two independent code
paths (power series vs Euler-type integral) so the printed gaps are a
real accuracy statement, not a tautology.
"""

import math

from rodbend import (
    appell_f1,
    gauss_2f1,
    gauss_summation,
    hyp_3f2,
    lauricella_fd3,
    pochhammer,
    reduce_f1_to_3f2,
    reduce_fd3_unit_arg,
)


def main():
    print("=== elementary checks ===")
    print(f"(3)_4 = 3*4*5*6             = {pochhammer(3.0, 4):.1f}")
    print(f"2F1(1,1;2;x) = -ln(1-x)/x at x=0.5: "
          f"{gauss_2f1(1.0, 1.0, 2.0, 0.5):.15f} vs {-math.log(0.5) / 0.5:.15f}")
    print(f"2F1(1/2,1/2;3/2;x^2) = asin(x)/x at x=0.6: "
          f"{gauss_2f1(0.5, 0.5, 1.5, 0.36):.15f} vs {math.asin(0.6) / 0.6:.15f}")

    print("\n=== summation at the unit argument ===")
    # closed form from the log-gamma route vs the direct series limit
    val = gauss_summation(0.5, 0.5, 2.0)
    print(f"2F1(1/2,1/2;2;1) = 4/pi: {val:.15f} vs {4.0 / math.pi:.15f}")

    print("\n=== two variables: Appell F1 ===")
    a, b1, b2, c = 1.5, 0.5, 0.75, 2.5
    x1, x2 = 0.4, -0.3
    by_series = appell_f1(a, b1, b2, c, x1, x2, method="series")
    by_integral = appell_f1(a, b1, b2, c, x1, x2, method="integral")
    print(f"F1({a};{b1},{b2};{c};{x1},{x2})")
    print(f"  double series : {by_series:.15f}")
    print(f"  1-d integral  : {by_integral:.15f}")
    print(f"  rel gap       : {abs(by_series - by_integral) / abs(by_series):.2e}")

    print("\n=== reduction identities ===")
    # F1(a; b, b; a+1; x, -x) collapses to a single Gauss series in x^2
    a, b, x = 2.2, 0.6, 0.55
    lhs = appell_f1(a, b, b, a + 1.0, x, -x, method="integral")
    rhs = gauss_2f1(0.5 * a, b, 0.5 * a + 1.0, x * x)
    print(f"F1(a;b,b;a+1;x,-x) vs 2F1(a/2,b;a/2+1;x^2): gap {abs(lhs - rhs):.2e}")

    # F1(a; b, b; c; x, -x) equals a 3F2 of argument x^2
    a, b, c, x = 2.0, 2.0 / 3.0, 8.0 / 3.0, 0.3
    lhs = reduce_f1_to_3f2(a, b, c, x)
    rhs = hyp_3f2(1.5, 1.0, 2.0 / 3.0, 11.0 / 6.0, 4.0 / 3.0, 0.09)
    print(f"F1 -> 3F2 reduction at (2, 2/3, 8/3, 0.3):    gap {abs(lhs - rhs):.2e}")

    print("\n=== three variables with one argument at 1 ===")
    # the third argument at 1 drops FD3 to a two-variable function with
    # a shifted parameter; both sides below use different code paths
    a, bs, c = 2.0, (0.5, 0.5, 2.0 / 3.0), 3.0
    z = 1000.0 / 1200.0
    direct = lauricella_fd3(a, bs, c, (z, -z, 1.0))
    reduced = reduce_fd3_unit_arg(a, bs[0], bs[1], bs[2], c, z, -z)
    print(f"FD3(2; 1/2,1/2,2/3; 3; z,-z,1) at z={z:.6f}")
    print(f"  unit-argument integral : {direct:.15f}")
    print(f"  reduction formula      : {reduced:.15f}")
    print(f"  rel gap                : {abs(direct - reduced) / abs(direct):.2e}")


if __name__ == "__main__":
    main()

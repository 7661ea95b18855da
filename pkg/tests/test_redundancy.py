"""Redundant-reaction solvers: series, root finding, closed forms, reports."""

from fractions import Fraction as F

import pytest

from rodbend.elastica import RodProperties, tip_deflection_shear, tip_deflection_uniform
from rodbend.errors import BracketError, InfeasibleLoadError, UsageError
from rodbend.redundancy import (
    ConsistencyEquation,
    builtin_reaction_series,
    builtin_tip_integral,
    max_bending_stress_report,
    roller_consistency,
    roller_reaction_series,
    solve_builtin,
    solve_roller,
    stabilized_from,
)

ROD = RodProperties.from_stiffness(1.0, 200.0)
Q = 1000.0

# reference roots of the scaled consistency equation at L=1, q=1000, EJ=200,
# found independently by high-precision bisection on the hypergeometric form
ROOT_EXPANSION = 347.6368432063616888
ROOT_DISPLACEMENT = 356.2970653152939935


# -------------------------------------------------------- consistency equation

def test_lhs_is_odd():
    eq = ConsistencyEquation("expansion", ROD, Q)
    for y in (0.1, 0.45, 0.9):
        assert eq.lhs(-y) == -eq.lhs(y)


def test_lhs_strictly_increasing_and_unbounded_toward_one():
    eq = ConsistencyEquation("expansion", ROD, Q)
    ys = [0.0, 0.2, 0.4, 0.6, 0.8, 0.9, 0.99, 0.999]
    vals = [eq.lhs(y, rtol=1e-10) for y in ys]
    assert all(b > a for a, b in zip(vals, vals[1:]))
    # divergent tail: the last sample has left Y itself far behind
    assert vals[-1] > 6.0


def test_target_value_for_reference_rod():
    eq = ConsistencyEquation("expansion", ROD, Q)
    assert eq.target() == pytest.approx(1.44568474701092, rel=1e-12)


def test_root_satisfies_scaled_equation():
    eq = ConsistencyEquation("expansion", ROD, Q)
    x_root = solve_roller(ROD, Q, method="root_find").X
    y_root = x_root * ROD.L ** 2 / (2.0 * ROD.EJ)
    assert eq.lhs(y_root) == pytest.approx(eq.target(), rel=1e-11)


# ------------------------------------------------------------- roller solver

def test_roller_linearized_reaction():
    sol = solve_roller(ROD, Q, method="linearized")
    assert sol.X == 375.0
    assert sol.units == "N"
    assert sol.method == "linearized"
    assert sol.deviation_pct == 0.0
    assert sol.trace == ()


def test_roller_root_expansion_kernel():
    sol = solve_roller(ROD, Q, method="root_find")
    assert sol.X == pytest.approx(ROOT_EXPANSION, rel=1e-9)
    assert sol.deviation_pct == pytest.approx(7.8711901, abs=1e-5)
    assert abs(sol.residual) < 1e-8


def test_roller_root_displacement_kernel():
    sol = solve_roller(ROD, Q, method="root_find", kernel="displacement")
    assert sol.X == pytest.approx(ROOT_DISPLACEMENT, rel=1e-9)
    assert sol.deviation_pct == pytest.approx(5.2492531, abs=1e-5)


def test_displacement_kernel_closes_tip_displacement():
    # at the displacement-kernel root the uniform-load sag is cancelled
    # exactly by the lift of the reaction treated as a tip shear
    x_root = solve_roller(ROD, Q, method="root_find", kernel="displacement", rtol=1e-14).X
    sag = tip_deflection_uniform(ROD, Q)
    lift = tip_deflection_shear(ROD, x_root)
    assert abs(sag + lift) < 1e-9 * abs(sag)


def test_expansion_kernel_does_not_close_tip_displacement():
    x_root = solve_roller(ROD, Q, method="root_find", kernel="expansion").X
    sag = tip_deflection_uniform(ROD, Q)
    lift = tip_deflection_shear(ROD, x_root)
    assert abs(sag + lift) > 1e-3 * abs(sag)


def test_roller_series_reference_values():
    sol = solve_roller(ROD, Q, method="series", n_terms=7)
    assert sol.method == "series(7)"
    assert sol.trace[0][1] == 375.0
    assert sol.X == pytest.approx(347.65011089582157, rel=1e-12)


def test_roller_series_approaches_root_from_trace():
    sol = solve_roller(ROD, Q, method="series", n_terms=20)
    assert sol.X == pytest.approx(347.63685999503605, rel=1e-12)
    assert abs(sol.X - ROOT_EXPANSION) / ROOT_EXPANSION < 1e-6


def test_roller_methods_agree_at_moderate_loads():
    for q in (100.0, 200.0, 300.0, 360.0):
        x_series = solve_roller(ROD, q, method="series", n_terms=7).X
        x_root = solve_roller(ROD, q, method="root_find").X
        assert abs(x_series - x_root) / x_root < 1e-6


def test_roller_roots_at_half_and_quarter_load():
    assert solve_roller(ROD, 500.0, method="root_find").X == pytest.approx(
        184.15835346516192, rel=1e-10)
    assert solve_roller(ROD, 250.0, method="root_find").X == pytest.approx(
        93.33297773108619, rel=1e-10)


def test_roller_zero_load():
    sol = solve_roller(ROD, 0.0, method="root_find")
    assert sol.X == 0.0
    assert sol.deviation_pct == 0.0


def test_roller_deviation_sign_is_positive():
    # the linearized formula overestimates the reaction
    for method in ("root_find", "series"):
        assert solve_roller(ROD, Q, method=method).deviation_pct > 0.0


# ------------------------------------------------------------ exact coefficients

def test_roller_series_coefficients_exact():
    s = roller_reaction_series(order=9)
    assert s.coefficient(1) == F(3, 8)
    assert s.coefficient(3) == F(-153, 143360)
    assert s.coefficient(5) == F(-47277, 267177164800)
    assert s.coefficient(7) == F(-4596133617, 200130658356428800)
    assert s.coefficient(9) == F(-109561857375393, 372979505365709225984000)


def test_builtin_series_coefficients_exact():
    s = builtin_reaction_series(order=7)
    assert s.coefficient(1) == F(1, 12)
    assert s.coefficient(3) == F(11, 34560)
    assert s.coefficient(5) == F(77, 19906560)
    assert s.coefficient(7) == F(39877, 630639820800)


def test_kernel_changes_cubic_coefficient_but_not_linear():
    disp = roller_reaction_series(order=3, kernel="displacement")
    assert disp.coefficient(1) == F(3, 8)
    assert disp.coefficient(3) != F(-153, 143360)


# ------------------------------------------------------------- built-in solver

def test_builtin_linearized_end_moment():
    sol = solve_builtin(ROD, Q, method="linearized")
    assert sol.X == pytest.approx(1000.0 / 12.0, rel=1e-15)
    assert sol.units == "N m"
    assert sol.residual is None


def test_builtin_series_partial_sums():
    sol = solve_builtin(ROD, Q, method="series", n_terms=4)
    assert sol.trace[0][1] == pytest.approx(83.33333333333333, rel=1e-14)
    assert sol.trace[1][1] == pytest.approx(91.29050925925925, rel=1e-12)
    assert sol.X == pytest.approx(95.16013089444073, rel=1e-12)


def test_builtin_series_converged_values():
    assert solve_builtin(ROD, Q, method="series", n_terms=11).X == pytest.approx(
        95.6815720722438, rel=1e-12)
    assert solve_builtin(ROD, Q, method="series", n_terms=20).X == pytest.approx(
        95.69534887410185, rel=1e-12)


def test_builtin_tip_integral_both_modes():
    assert builtin_tip_integral(ROD, Q, mode="quadrature") == pytest.approx(
        0.22072840604112143, rel=1e-9)
    assert builtin_tip_integral(ROD, Q, mode="hyp_approx") == pytest.approx(
        0.2547671086182601, rel=1e-12)
    assert builtin_tip_integral(ROD, 0.0) == 0.0


def test_builtin_closed_both_modes():
    quad = solve_builtin(ROD, Q, method="closed", integral_mode="quadrature")
    approx = solve_builtin(ROD, Q, method="closed", integral_mode="hyp_approx")
    assert quad.method == "closed(quadrature)"
    assert quad.X == pytest.approx(84.18956038383605, rel=1e-9)
    assert approx.X == pytest.approx(95.69559819137936, rel=1e-12)


def test_builtin_series_limit_is_the_approx_closure():
    # the series route analytically continues the 2F1 approximation, so
    # its limit must sit on closed(hyp_approx), not on the exact integral
    x_series = solve_builtin(ROD, Q, method="series", n_terms=11).X
    x_approx = solve_builtin(ROD, Q, method="closed", integral_mode="hyp_approx").X
    x_quad = solve_builtin(ROD, Q, method="closed", integral_mode="quadrature").X
    assert abs(x_series - x_approx) / x_approx < 0.01
    assert abs(x_quad - x_approx) / x_approx > 0.10


def test_builtin_closed_at_half_and_quarter_load():
    assert solve_builtin(ROD, 500.0, method="closed").X == pytest.approx(
        41.7709205952723, rel=1e-9)
    assert solve_builtin(ROD, 250.0, method="closed").X == pytest.approx(
        20.846279287674978, rel=1e-9)


def test_builtin_deviation_sign_is_negative():
    # nonlinear end moments exceed the linearized value, either route
    assert solve_builtin(ROD, Q, method="closed").deviation_pct < 0.0
    assert solve_builtin(ROD, Q, method="series", n_terms=11).deviation_pct < 0.0


def test_builtin_zero_load():
    sol = solve_builtin(ROD, 0.0, method="closed")
    assert sol.X == 0.0
    assert sol.deviation_pct == 0.0


# --------------------------------------------------------------- stabilization

def test_roller_trace_stabilizes_at_six():
    trace = solve_roller(ROD, Q, method="series", n_terms=20).trace
    assert stabilized_from(trace) == 6


def test_builtin_trace_stabilizes_at_eleven():
    trace = solve_builtin(ROD, Q, method="series", n_terms=20).trace
    assert stabilized_from(trace) == 11


def test_stabilized_from_edge_cases():
    assert stabilized_from([]) is None
    assert stabilized_from([(0, 1.0)]) is None
    assert stabilized_from([(0, 1.0), (1, 2.0), (2, 3.0)]) is None
    assert stabilized_from([(0, 1.0), (1, 1.0 + 1e-6)]) == 1
    # a late kick resets the stabilization point
    assert stabilized_from([(0, 1.0), (1, 1.0), (2, 2.0), (3, 2.0)]) == 3


def test_stabilized_from_respects_tolerance():
    trace = [(0, 1.0), (1, 1.001), (2, 1.0010001)]
    assert stabilized_from(trace, tol=1e-4) == 2
    assert stabilized_from(trace, tol=1e-2) == 1


# ------------------------------------------------------ invariance and scaling

def test_scaled_root_invariant_under_rod_rescaling():
    # the dimensionless root Y = X L^2 / (2 EJ) depends on w = L^3 q / EJ only
    s1 = solve_roller(ROD, 1000.0, method="root_find")
    s2 = solve_roller(RodProperties.from_stiffness(2.0, 400.0), 250.0, method="root_find")
    y1 = s1.X * 1.0 ** 2 / (2.0 * 200.0)
    y2 = s2.X * 2.0 ** 2 / (2.0 * 400.0)
    assert abs(y1 - y2) <= 1e-10 * abs(y1)


def test_stiffness_dependence_of_roller_root():
    x200 = solve_roller(ROD, Q, method="root_find").X
    x400 = solve_roller(RodProperties.from_stiffness(1.0, 400.0), Q, method="root_find").X
    assert x400 == pytest.approx(368.31670693032385, rel=1e-10)
    assert abs(x400 - x200) / x200 > 1e-3


def test_rigid_limit_recovers_linearized_reaction():
    x_rigid = solve_roller(RodProperties.from_stiffness(1.0, 1e9), Q,
                           method="root_find").X
    assert abs(x_rigid - 375.0) / 375.0 < 1e-6


def test_relative_defect_scales_quadratically_in_load():
    # (X_lin - X) / X ~ w^2, so halving q shrinks the defect 4x
    for solver, kwargs in ((solve_roller, {"method": "root_find"}),
                           (solve_builtin, {"method": "closed",
                                            "integral_mode": "hyp_approx"})):
        defects = []
        for q in (400.0, 200.0):
            x = solver(ROD, q, **kwargs).X
            lin = solver(ROD, q, method="linearized").X
            defects.append(abs(x - lin) / lin)
        ratio = defects[0] / defects[1]
        assert 3.7 < ratio < 4.3


# ----------------------------------------------------------------- validation

def test_negative_load_rejected():
    with pytest.raises(UsageError):
        solve_roller(ROD, -1.0, method="linearized")
    with pytest.raises(UsageError):
        solve_builtin(ROD, -1.0, method="linearized")


def test_infeasible_loads_rejected():
    with pytest.raises(InfeasibleLoadError):
        solve_roller(ROD, 1200.0, method="root_find")
    with pytest.raises(InfeasibleLoadError):
        solve_builtin(ROD, 2400.0, method="closed")


def test_near_critical_roller_load_fails_to_bracket():
    with pytest.raises(BracketError):
        solve_roller(ROD, 1199.0, method="root_find")


def test_unknown_method_and_kernel_rejected():
    with pytest.raises(UsageError):
        solve_roller(ROD, Q, method="newton")
    with pytest.raises(UsageError):
        solve_roller(ROD, Q, method="root_find", kernel="fourier")
    with pytest.raises(UsageError):
        solve_builtin(ROD, Q, method="root_find")
    with pytest.raises(UsageError):
        builtin_tip_integral(ROD, Q, mode="series")


def test_consistency_residual_rejects_infeasible_reaction():
    with pytest.raises(InfeasibleLoadError):
        roller_consistency(ROD, Q, 400.0)


def test_series_order_validation():
    with pytest.raises(UsageError):
        roller_reaction_series(order=0)
    with pytest.raises(UsageError):
        builtin_reaction_series(order=0)
    with pytest.raises(UsageError):
        solve_roller(ROD, Q, method="series", n_terms=-1)


# -------------------------------------------------------------------- reports

def test_roller_stress_report():
    sol = solve_roller(ROD, Q, method="root_find")
    rep = max_bending_stress_report("roller", sol, ROD, Q)
    assert rep["M_max_linearized_Nm"] == 70.3125
    assert rep["M_max_nonlinear_Nm"] == pytest.approx(60.425687377244245, rel=1e-9)
    assert rep["x_peak_linearized_m"] == 0.375
    assert rep["x_peak_nonlinear_m"] == pytest.approx(0.34763684320636, rel=1e-9)
    assert rep["stress_drop_pct_of_linearized"] == pytest.approx(14.0612446, abs=1e-5)
    assert rep["stress_drop_pct_of_nonlinear"] == pytest.approx(16.3619365, abs=1e-5)


def test_builtin_stress_report():
    sol = solve_builtin(ROD, Q, method="closed", integral_mode="quadrature")
    rep = max_bending_stress_report("builtin", sol, ROD, Q)
    assert rep["M_end_linearized_Nm"] == pytest.approx(83.33333333333333, rel=1e-14)
    assert rep["M_end_nonlinear_Nm"] == pytest.approx(84.18956038383605, rel=1e-9)
    assert rep["M_midspan_linearized_Nm"] == pytest.approx(-41.66666666666667, rel=1e-14)
    # the end section stays the critical one
    assert rep["M_max_nonlinear_Nm"] == rep["M_end_nonlinear_Nm"]
    assert rep["stress_change_pct_of_linearized"] == pytest.approx(1.0274725, abs=1e-5)


def test_roller_stress_report_zero_load():
    sol = solve_roller(ROD, 0.0, method="linearized")
    rep = max_bending_stress_report("roller", sol, ROD, 0.0)
    assert rep["M_max_linearized_Nm"] == 0.0
    assert rep["stress_drop_pct_of_nonlinear"] == 0.0


def test_stress_report_rejects_unknown_problem():
    sol = solve_roller(ROD, Q, method="linearized")
    with pytest.raises(UsageError):
        max_bending_stress_report("arch", sol, ROD, Q)


def test_solution_json_schema():
    sol = solve_roller(ROD, Q, method="series", n_terms=2)
    obj = sol.json_obj()
    assert obj["problem"] == "roller"
    assert obj["method"] == "series(2)"
    assert obj["units"] == "N"
    assert obj["trace"] == [{"n": 0, "X_n": sol.trace[0][1]},
                            {"n": 1, "X_n": sol.trace[1][1]},
                            {"n": 2, "X_n": sol.trace[2][1]}]
    assert isinstance(obj["deviation_pct"], float)

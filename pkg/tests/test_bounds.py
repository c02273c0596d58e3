import math

import pytest
from scipy.integrate import quad

import qfzeta as qz
from qfzeta import DomainError, ZetaZero


class TestWeightConstant:
    def test_value_and_ceiling(self):
        constant = qz.weight_constant_check()
        # zeta(3)/pi^(5/2) * sqrt(2 * 143/32 * 4 pi/5) from the verified
        # closed forms
        recomputed = (
            qz.zeta_real(3.0)
            / math.pi**2.5
            * math.sqrt(2.0 * (143.0 / 32.0) * (4.0 * math.pi / 5.0))
        )
        assert abs(constant - recomputed) < 1e-9
        assert constant <= qz.WEIGHT_CEILING

    def test_two_quadrature_tolerances(self):
        loose = qz.weight_constant_check(quad_tol=1e-8)
        tight = qz.weight_constant_check(quad_tol=1e-10)
        assert abs(loose - tight) < 1e-8

    def test_translation_invariance(self):
        at_zero = qz.weight_constant_check(beta0=0.0)
        at_beta = qz.weight_constant_check()
        assert abs(at_zero - at_beta) < 1e-8

    def test_closed_forms_directly(self):
        i1, _ = quad(
            lambda t: (4 + t * t) * (9 + 4 * t * t) * (0.25 + t * t) * t / (1 + t * t) ** 5,
            0.0,
            math.inf,
        )
        assert abs(i1 - 143.0 / 32.0) <= 1e-6 * (143.0 / 32.0)
        beta = qz.zeta_zero(1).beta0
        i2 = sum(
            quad(lambda t: 1.0 / (25.0 / 16.0 + (t - beta) ** 2), lo, hi)[0]
            for lo, hi in ((-math.inf, beta), (beta, math.inf))
        )
        assert abs(i2 - 4.0 * math.pi / 5.0) <= 1e-6 * (4.0 * math.pi / 5.0)


class TestK0Pipeline:
    def test_reference_example(self, q0):
        report = qz.k0_lower_bound(q0, 1, 1000.0)
        assert abs(report.f1_abs - 0.422182) <= 1e-5
        assert abs(report.f2_bound - 0.236529) <= 1e-5
        assert report.margin >= 0.185653 - 2e-5
        assert report.valid
        assert report.k0_lower > 4e-4

    def test_internal_identity(self, q0, circle):
        for form in (q0, circle):
            report = qz.k0_lower_bound(form, 1, 1000.0)
            if report.valid:
                assert report.k0_lower == report.prefactor * report.gamma_ratio * report.margin
            else:
                assert report.k0_lower == 0.0
            assert report.z0 == complex(0.25, report.zero.beta0)
            assert report.margin == report.f1_abs - report.f2_bound

    def test_cutoff_monotonicity(self, q0):
        small = qz.k0_lower_bound(q0, 1, 1000.0)
        large = qz.k0_lower_bound(q0, 1, 2000.0)
        assert small.valid and large.valid
        assert abs(large.f1_abs - small.f1_abs) < 1e-4  # F1 is stable in Z
        assert large.k0_lower >= small.k0_lower - 1e-12

    def test_prefactor_conjugation_invariant(self, q0):
        report = qz.k0_lower_bound(q0, 1, 500.0)
        z0 = report.z0
        conj = z0.conjugate()
        direct = abs((z0 - 1.0) * (2.0 * z0 - 1.0) / (z0 + 2.0) ** 7)
        mirrored = abs((conj - 1.0) * (2.0 * conj - 1.0) / (conj + 2.0) ** 7)
        assert direct == mirrored

    def test_zero_precision_stability(self, q0):
        tabulated = qz.k0_lower_bound(q0, 1, 1000.0)
        gamma = qz.zeta_zero(1).gamma
        refined = qz.refine_zero(gamma - 0.05, gamma + 0.05, tol=1e-9)
        substituted = qz.k0_from_zero(q0, ZetaZero(index=1, gamma=refined), 1000.0)
        assert abs(substituted.k0_lower - tabulated.k0_lower) <= 1e-8

    def test_auto_selection(self, q0, circle):
        for form in (q0, circle):
            report = qz.k0_lower_bound_auto(form, 1000.0)
            assert report.valid
        assert qz.k0_lower_bound_auto(q0, 1000.0).zero.index == 1

    def test_serialisation(self, q0):
        report = qz.k0_lower_bound(q0, 1, 1000.0)
        text = report.as_text()
        assert "k0_lower" in text and "margin" in text and "valid" in text
        row = report.csv_row()
        assert len(row.split(",")) == len(qz.BoundReport.CSV_HEADER.split(","))

    def test_domain(self, q0):
        with pytest.raises(DomainError):
            qz.k0_lower_bound(q0, 1, -3.0)
        with pytest.raises(DomainError):
            qz.k0_lower_bound(q0, 99, 1000.0)


class TestFiniteY:
    def test_trivially_true_at_one(self, q0):
        # Right side is 4e-4 - 3.62 < 0 at Y = 1
        assert qz.finite_y_check(q0, 1.0, 0.0)

    def test_near_crossover(self, q0):
        # Around Y = 1500 the right side crosses zero, so the inequality
        # stops being vacuous; the measured integral clears it easily.
        rhs = qz.FINITE_Y_THRESHOLD - qz.FINITE_Y_CORRECTION * 1500.0**-1.25
        assert abs(rhs) < 2e-5
        integral = qz.mean_abs_r(q0, 1500.0)
        assert qz.finite_y_check(q0, 1500.0, integral)

    def test_holds_at_ten_thousand(self, q0):
        integral = qz.mean_abs_r(q0, 1e4)
        assert qz.finite_y_check(q0, 1e4, integral)

    def test_rejects_other_forms(self, circle):
        with pytest.raises(DomainError):
            qz.finite_y_check(circle, 1e4, 1.0)

    def test_reference_form_detection(self, q0, circle):
        assert qz.is_reference_form(q0)
        assert qz.is_reference_form(qz.parse_form("1,sqrt(2),sqrt(3)"))
        assert not qz.is_reference_form(circle)


class TestVerifyReference:
    def test_all_pass_at_default_cutoff(self):
        checks = qz.verify_reference()
        assert len(checks) == 5
        assert all(c.passed for c in checks)

    def test_fails_at_tiny_cutoff(self):
        checks = qz.verify_reference(10.0)
        assert not all(c.passed for c in checks)

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import solve_ivp

from fsshear import hypoelastic as hypo
from fsshear.hyperelastic import analytic_shear_oracle, hlih, ogden_a, ogden_b
from fsshear.hypoelastic import (
    HYPO_A,
    HYPO_B,
    HYPO_GN,
    HYPO_GS,
    HYPO_LOG,
    HYPO_ZJ,
    HypoProblem,
    RateKind,
    SpinKind,
    count_sign_changes,
    g12,
    g_pair,
    incremental_integrate,
    initial_stress_solution,
    integrate_lfss,
    k_factor,
    lfss_ode_rhs,
    parse_rate,
    r12,
    rfss_solution,
    theta_angle,
)
from fsshear.shear_kinematics import ShearMode
from fsshear.verification import incremental_error_ratio, rk4_error_ratio

LFSS, RFSS, SS = ShearMode.LFSS, ShearMode.RFSS, ShearMode.SIMPLE_SHEAR
SPINS = list(SpinKind)
CORO = [HYPO_ZJ, HYPO_GN, HYPO_GS, HYPO_LOG]


def reference_lfss(spin_k, alpha_max, sigma0=(0.0, 0.0), mu=1.0):
    """Adaptive high-accuracy solution of the reduced system."""

    def rhs(a, y):
        k = spin_k(a)
        return [2 * k * y[1] - 2 * mu * math.tanh(2 * a), -2 * k * y[0] + 2 * mu]

    sol = solve_ivp(rhs, (0, alpha_max), list(sigma0), rtol=1e-12, atol=1e-13)
    return sol.y[:, -1]


K_EXACT = {
    SpinKind.ZJ: lambda a: 1.0,
    SpinKind.GN: lambda a: 1 / math.cosh(2 * a),
    SpinKind.GS: lambda a: 0.0,
    SpinKind.LOG: lambda a: 1.0 if a == 0 else math.tanh(2 * a) / (2 * a),
}


class TestSpinCoefficients:
    def test_green_naghdi(self):
        assert g12(SpinKind.GN, 0.5) == pytest.approx(-0.46212, abs=5e-6)

    @pytest.mark.parametrize("alpha", [0.0, 0.3, 2.0])
    def test_zaremba_jaumann(self, alpha):
        assert g12(SpinKind.ZJ, alpha) == 0.0

    def test_logarithmic(self):
        # equals 1/(2 alpha) - coth(2 alpha)
        assert g12(SpinKind.LOG, 0.5) == pytest.approx(1 - 1 / math.tanh(1), rel=1e-14)
        assert g12(SpinKind.LOG, 0.5) == pytest.approx(-0.31304, abs=5e-6)

    def test_gurtin_spear(self):
        assert g12(SpinKind.GS, 0.5) == pytest.approx(-1 / math.tanh(1), rel=1e-14)

    @pytest.mark.parametrize("spin", [SpinKind.GS, SpinKind.LOG])
    def test_singular_at_zero(self, spin):
        with pytest.raises(ValueError):
            g12(spin, 0.0)

    def test_r_values(self):
        l1, l2 = math.exp(0.5), math.exp(-0.5)
        assert r12(SpinKind.GN, 3.0, 1.5) == 0.0
        assert r12(SpinKind.ZJ, l1, l2) == pytest.approx(math.tanh(0.5), rel=1e-14)
        assert r12(SpinKind.LOG, l1, l2) == pytest.approx(1 - 1 / math.sinh(1), rel=1e-13)
        assert r12(SpinKind.LOG, l1, l2) == pytest.approx(0.149082, abs=5e-7)

    @pytest.mark.parametrize("spin", [SpinKind.GS, SpinKind.LOG])
    def test_r_singular(self, spin):
        with pytest.raises(ValueError):
            r12(spin, 1.2, 1.2)

    @pytest.mark.parametrize("spin", SPINS)
    @settings(max_examples=50, deadline=None)
    @given(alpha=st.floats(0.01, 3))
    def test_g_r_relation_on_shear_path(self, spin, alpha):
        l1, l2 = math.exp(alpha), math.exp(-alpha)
        diff = r12(spin, l1, l2) - g12(spin, alpha)
        assert diff == pytest.approx((l1 - l2) / (l1 + l2), abs=1e-12)
        assert g_pair(spin, l1, l2) == pytest.approx(g12(spin, alpha), abs=1e-12)

    @pytest.mark.parametrize("spin", SPINS)
    @pytest.mark.parametrize("alpha", np.linspace(0.05, 3.0, 12))
    def test_k_definition(self, spin, alpha):
        assert k_factor(spin, alpha) == pytest.approx(1 + g12(spin, alpha) * math.tanh(2 * alpha), abs=1e-12)

    @pytest.mark.parametrize("spin", SPINS)
    @pytest.mark.parametrize("alpha", [0.0, 0.5, 1.7])
    def test_k_closed_forms(self, spin, alpha):
        assert k_factor(spin, alpha) == pytest.approx(K_EXACT[spin](alpha), abs=1e-14)

    def test_k_values(self):
        assert k_factor(SpinKind.GN, 0.5) == pytest.approx(0.64805, abs=5e-6)
        assert k_factor(SpinKind.GN, 0.5) == pytest.approx(1 - math.tanh(0.5) * math.tanh(1), rel=1e-14)
        assert k_factor(SpinKind.GS, 0.0) == 0.0
        assert k_factor(SpinKind.LOG, 0.0) == 1.0

    def test_k_vectorised(self):
        a = np.array([0.0, 0.5, 1.0])
        np.testing.assert_allclose(k_factor(SpinKind.LOG, a), [K_EXACT[SpinKind.LOG](x) for x in a], rtol=1e-15)


class TestOdeRhs:
    @pytest.mark.parametrize("spin", SPINS)
    def test_at_rest(self, spin):
        assert lfss_ode_rhs(spin, 0.0, 0.0, 0.0, 1.5) == (0.0, 3.0)

    @settings(max_examples=30, deadline=None)
    @given(s11=st.floats(-5, 5), s12=st.floats(-5, 5))
    def test_gurtin_spear_decouples(self, s11, s12):
        d11, d12 = lfss_ode_rhs(SpinKind.GS, 0.5, s11, s12, 1.0)
        assert d11 == pytest.approx(-2 * math.tanh(1), rel=1e-15)
        assert d12 == 2.0

    def test_zaremba_jaumann_value(self):
        d11, d12 = lfss_ode_rhs(SpinKind.ZJ, 0.5, 0.0, 1.0, 1.0)
        assert d11 == pytest.approx(0.47681, abs=5e-6)
        assert d12 == 2.0


class TestRotationAngle:
    def test_zaremba_jaumann(self):
        assert theta_angle(SpinKind.ZJ, 0.7) == 0.7

    @pytest.mark.parametrize("alpha", [0.0, 0.4, 3.0])
    def test_gurtin_spear(self, alpha):
        assert theta_angle(SpinKind.GS, alpha) == 0.0

    def test_green_naghdi(self):
        assert theta_angle(SpinKind.GN, 0.5) == pytest.approx(0.4328847, abs=5e-8)

    @pytest.mark.parametrize("spin", SPINS)
    @pytest.mark.parametrize("alpha", [0.3, 1.0, 2.5])
    def test_integral_of_k(self, spin, alpha):
        # trapezoid on a fine grid as an independent oracle
        x = np.linspace(0, alpha, 20001)
        ref = np.trapezoid([K_EXACT[spin](v) for v in x], x)
        assert theta_angle(spin, alpha) == pytest.approx(ref, abs=1e-8)

    def test_logarithmic_exceeds_quarter_turn(self):
        assert theta_angle(SpinKind.LOG, 6.0) > math.pi / 2


class TestInitialStress:
    def test_no_rotation(self):
        s0 = np.array([[0.2, -0.5], [-0.5, -0.2]])
        np.testing.assert_allclose(initial_stress_solution(SpinKind.GS, s0, 2.0), s0, atol=1e-15)

    def test_quarter_rotation(self):
        mu = 1.0
        s0 = np.array([[0.0, -mu / 2], [-mu / 2, 0.0]])
        out = initial_stress_solution(SpinKind.ZJ, s0, math.pi / 4)
        np.testing.assert_allclose(out, [[-mu / 2, 0], [0, mu / 2]], atol=1e-15)

    @pytest.mark.parametrize("spin", SPINS)
    def test_homogeneous_solution(self, spin):
        p, s = 0.3, -0.7
        s0 = np.array([[p, s], [s, -p]])
        ref = reference_lfss(K_EXACT[spin], 1.2, (p, s), mu=0.0)
        out = initial_stress_solution(spin, s0, 1.2)
        np.testing.assert_allclose([out[0, 0], out[0, 1]], ref, atol=1e-9)
        assert out[1, 1] == pytest.approx(-out[0, 0], abs=1e-15)

    def test_rejects_non_deviatoric(self):
        with pytest.raises(ValueError):
            initial_stress_solution(SpinKind.ZJ, np.eye(2), 0.5)


class TestIntegrateLfss:
    def test_gurtin_spear_anchor(self):
        tr = integrate_lfss(HypoProblem(HYPO_GS, alpha_max=0.5, steps=2000))
        assert tr.sigma[-1, 0, 1] == pytest.approx(1.0, abs=1e-8)
        assert tr.sigma[-1, 0, 0] == pytest.approx(-0.43378, abs=5e-6)
        assert tr.sigma[-1, 0, 0] == pytest.approx(-math.log(math.cosh(1)), abs=1e-8)

    def test_logarithmic_is_hencky(self):
        tr = integrate_lfss(HypoProblem(HYPO_LOG, alpha_max=1.5, steps=5000))
        ref = analytic_shear_oracle(hlih("hencky"), LFSS, 1.5)
        np.testing.assert_allclose(tr.sigma[-1], ref.sigma, atol=1e-5 * 3)
        np.testing.assert_allclose(tr.sigma_bar[-1], ref.sigma_bar, atol=1e-5 * 3)

    @pytest.mark.parametrize("rate", CORO, ids=lambda r: r.name)
    def test_matches_adaptive_reference(self, rate):
        tr = integrate_lfss(HypoProblem(rate, mu=1.3, alpha_max=2.0, steps=4000))
        ref = reference_lfss(K_EXACT[rate.spin], 2.0, mu=1.3)
        np.testing.assert_allclose([tr.sigma[-1, 0, 0], tr.sigma[-1, 0, 1]], ref, atol=1e-9)

    def test_trajectory_shape(self):
        tr = integrate_lfss(HypoProblem(HYPO_ZJ, alpha_max=1.0, steps=10))
        assert tr.alpha.shape == (11,)
        assert tr.sigma.shape == tr.sigma_bar.shape == (11, 2, 2)
        assert np.all(np.diff(tr.alpha) > 0)
        np.testing.assert_array_equal(tr.sigma[0], 0)

    def test_first_sample_carries_initial_stress(self):
        s0 = np.array([[0.1, 0.4], [0.4, -0.1]])
        tr = integrate_lfss(HypoProblem(HYPO_GN, sigma0=s0, alpha_max=1.0, steps=10))
        np.testing.assert_allclose(tr.sigma[0], s0, atol=1e-15)

    @pytest.mark.parametrize("rate", CORO, ids=lambda r: r.name)
    def test_superposition(self, rate):
        s0 = np.array([[0.2, -0.5], [-0.5, -0.2]])
        zero = integrate_lfss(HypoProblem(rate, alpha_max=1.5, steps=600))
        full = integrate_lfss(HypoProblem(rate, sigma0=s0, alpha_max=1.5, steps=600))
        homog = np.array([initial_stress_solution(rate.spin, s0, a) for a in zero.alpha])
        np.testing.assert_allclose(full.sigma, zero.sigma + homog, atol=1e-9)

    @pytest.mark.parametrize("rate", CORO, ids=lambda r: r.name)
    def test_initial_stress_matches_adaptive_reference(self, rate):
        s0 = np.array([[0.2, -0.5], [-0.5, -0.2]])
        tr = integrate_lfss(HypoProblem(rate, sigma0=s0, alpha_max=2.0, steps=4000))
        ref = reference_lfss(K_EXACT[rate.spin], 2.0, (0.2, -0.5))
        np.testing.assert_allclose([tr.sigma[-1, 0, 0], tr.sigma[-1, 0, 1]], ref, atol=1e-8)

    def test_fourth_order(self):
        assert rk4_error_ratio() == pytest.approx(16, abs=3)

    def test_rejects_bad_problems(self):
        with pytest.raises(ValueError):
            integrate_lfss(HypoProblem(HYPO_A))
        with pytest.raises(ValueError):
            integrate_lfss(HypoProblem(HYPO_ZJ, mode=RFSS))
        with pytest.raises(ValueError):
            integrate_lfss(HypoProblem(HYPO_ZJ, sigma0=np.eye(2)))
        with pytest.raises(ValueError):
            HypoProblem(HYPO_ZJ, steps=0)


class TestRfssSolution:
    def test_lagrangian(self):
        p = rfss_solution(1.0, 0.75)
        np.testing.assert_allclose(p.sigma_bar, [[0, 1.5], [1.5, 0]], atol=1e-15)

    def test_eulerian_matches_hencky(self):
        p = rfss_solution(1.0, 0.5)
        assert p.sigma[0, 1] == pytest.approx(0.64805, abs=5e-6)
        assert p.sigma[0, 0] == pytest.approx(0.76159, abs=5e-6)
        ref = analytic_shear_oracle(hlih("hencky"), RFSS, 0.5)
        np.testing.assert_allclose(p.sigma, ref.sigma, atol=1e-14)

    def test_zero(self):
        p = rfss_solution(2.0, 0.0)
        np.testing.assert_array_equal(p.sigma, 0)
        np.testing.assert_array_equal(p.sigma_bar, 0)


class TestIncremental:
    @pytest.mark.parametrize("rate", CORO, ids=lambda r: r.name)
    def test_rfss_collapse(self, rate):
        tr = incremental_integrate(rate, RFSS, 1.0, 0.0, None, 1.5, 2000)
        ref = rfss_solution(1.0, 1.5)
        np.testing.assert_allclose(tr.sigma_bar[-1], ref.sigma_bar, atol=1e-5)
        np.testing.assert_allclose(tr.sigma[-1], ref.sigma, atol=1e-5)

    @pytest.mark.parametrize("rate", CORO, ids=lambda r: r.name)
    def test_agrees_with_reduced_system(self, rate):
        a = integrate_lfss(HypoProblem(rate, alpha_max=1.5, steps=3000)).sigma[-1]
        b = incremental_integrate(rate, LFSS, 1.0, 0.0, None, 1.5, 3000).sigma[-1]
        np.testing.assert_allclose(a, b, atol=2e-6)

    @pytest.mark.parametrize("rate, model", [(HYPO_A, ogden_a()), (HYPO_B, ogden_b())], ids=["A", "B"])
    @pytest.mark.parametrize("mode", [LFSS, RFSS])
    def test_oldroyd_equals_ogden(self, rate, model, mode):
        tr = incremental_integrate(rate, mode, 1.0, 0.0, None, 1.0, 2000)
        ref = analytic_shear_oracle(model, mode, 1.0)
        np.testing.assert_allclose(tr.sigma[-1], ref.sigma, rtol=0, atol=1e-5 * np.max(np.abs(ref.sigma)))

    def test_oldroyd_with_volume_stiffness_on_isochoric_path(self):
        # tr d = 0, so lambda has no effect
        a = incremental_integrate(HYPO_A, LFSS, 1.0, 0.0, None, 1.0, 200).sigma
        b = incremental_integrate(HYPO_A, LFSS, 1.0, 5.0, None, 1.0, 200).sigma
        np.testing.assert_allclose(a, b, atol=1e-12)

    def test_simple_shear_zaremba_jaumann_oscillates(self):
        tr = incremental_integrate(HYPO_ZJ, SS, 1.0, 0.0, None, 10.0, 4000)
        assert count_sign_changes(tr.component("12")) >= 1
        # closed-form ZJ simple shear: sigma12 = mu sin(gamma)
        np.testing.assert_allclose(tr.component("12"), np.sin(tr.alpha), atol=1e-5)

    def test_simple_shear_green_naghdi_monotone_shear(self):
        tr = incremental_integrate(HYPO_GN, SS, 1.0, 0.0, None, 10.0, 4000)
        assert count_sign_changes(tr.component("12")) == 0

    def test_second_order(self):
        assert incremental_error_ratio() == pytest.approx(4, abs=0.5)

    def test_accepts_general_initial_stress(self):
        s0 = np.array([[1.0, 0.2], [0.2, 0.5]])
        tr = incremental_integrate(HYPO_GN, LFSS, 1.0, 0.0, s0, 0.5, 50)
        np.testing.assert_allclose(tr.sigma[0], s0)

    def test_rejects_bad_steps(self):
        with pytest.raises(ValueError):
            incremental_integrate(HYPO_ZJ, LFSS, 1.0, 0.0, None, 1.0, 0)


class TestMutation:
    """A sign error in the Green-Naghdi coefficient must be detectable."""

    def test_negated_coefficient_is_caught(self, monkeypatch):
        original = hypo.g12
        monkeypatch.setattr(hypo, "g12", lambda spin, a: -original(spin, a) if spin is SpinKind.GN else original(spin, a))
        reduced = integrate_lfss(HypoProblem(HYPO_GN, alpha_max=1.5, steps=3000)).sigma[-1]
        oracle = incremental_integrate(HYPO_GN, LFSS, 1.0, 0.0, None, 1.5, 3000).sigma[-1]
        assert np.max(np.abs(reduced - oracle)) > 1e-2
        # RFSS results do not depend on the spin coefficient
        rf = incremental_integrate(HYPO_GN, RFSS, 1.0, 0.0, None, 1.5, 2000)
        np.testing.assert_allclose(rf.sigma_bar[-1], rfss_solution(1.0, 1.5).sigma_bar, atol=1e-5)

    def test_oracle_spin_override_is_caught(self):
        bad = incremental_integrate(
            HYPO_GN, LFSS, 1.0, 0.0, None, 1.5, 2000, spin_coefficient=lambda l1, l2: (l1 - l2) / (l1 + l2)
        ).sigma[-1]
        good = integrate_lfss(HypoProblem(HYPO_GN, alpha_max=1.5, steps=2000)).sigma[-1]
        assert np.max(np.abs(bad - good)) > 1e-2


@pytest.fixture(scope="module")
def long_runs():
    return {r.name: integrate_lfss(HypoProblem(r, alpha_max=6.0, steps=20_000)) for r in CORO}


class TestSignatures:
    def test_zaremba_jaumann_shear_stress_is_non_monotone(self, long_runs):
        s12 = long_runs["hypo-zj"].component("12")
        turns = np.count_nonzero(np.diff(np.sign(np.diff(s12))))
        assert turns >= 3

    @pytest.mark.parametrize("name", ["hypo-gn", "hypo-gs", "hypo-log"])
    def test_no_sign_change(self, long_runs, name):
        assert count_sign_changes(long_runs[name].component("12")) == 0

    def test_logarithmic_with_initial_stress(self):
        s0 = np.array([[0.0, -0.5], [-0.5, 0.0]])
        tr = integrate_lfss(HypoProblem(HYPO_LOG, sigma0=s0, alpha_max=6.0, steps=20_000))
        assert count_sign_changes(tr.component("11")) >= 1

    def test_sign_counter(self):
        assert count_sign_changes(np.array([0.0, 1.0, -1.0, 0.0, -2.0, 3.0])) == 2


class TestRegistry:
    @pytest.mark.parametrize("name", ["hypo-zj", "hypo-gn", "hypo-gs", "hypo-log", "hypo-a", "hypo-b"])
    def test_round_trip(self, name):
        assert parse_rate(name).name == name

    def test_unknown(self):
        with pytest.raises(ValueError):
            parse_rate("hypo-x")

    def test_rate_validation(self):
        with pytest.raises(ValueError):
            RateKind("corotational")
        with pytest.raises(ValueError):
            RateKind("upper", SpinKind.ZJ)

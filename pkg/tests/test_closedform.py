import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from boostbell import closedform as cf
from boostbell import states
from boostbell.inequalities import MeasurementSettings, collins, correlation, cross_correlation, mermin, svetlichny
from boostbell.spinops import azimuthal_direction, boost_state, polar_direction

GHZ = states.make("ghz")
W = states.make("w")
W_BAR = states.make("w_bar")
TAU = states.make("tau")
THETA_STAR = cf.W_OPTIMAL_POLAR_ANGLE


def boosted_triple(state, omega, settings_):
    boosted = boost_state(state, omega)
    return (
        svetlichny(boosted, settings_),
        mermin(boosted, settings_),
        collins(boosted, settings_),
    )


def test_lab_frame_formulas():
    assert cf.ghz_correlation(math.pi / 4, math.pi / 4, math.pi / 4) == pytest.approx(
        -math.sqrt(2) / 2, abs=1e-15
    )
    assert cf.w_correlation(0, 0, 0) == pytest.approx(-1.0, abs=1e-15)
    for phis in np.random.default_rng(0).uniform(0, 2 * math.pi, (20, 3)):
        assert cf.ghz_bar_correlation(*phis) == pytest.approx(-cf.ghz_correlation(*phis), abs=0)
        assert cf.w_bar_correlation(*phis) == pytest.approx(-cf.w_correlation(*phis), abs=0)


def test_boosted_ghz_correlation_against_oracle(rng):
    worst = 0.0
    for omega in np.linspace(0, math.pi, 100):
        phis = rng.uniform(0, 2 * math.pi, 3)
        oracle = correlation(boost_state(GHZ, omega), *[azimuthal_direction(p) for p in phis])
        worst = max(worst, abs(oracle - cf.boosted_ghz_correlation(omega, *phis)))
    assert worst < 1e-12


def test_boosted_ghz_correlation_rest_frame_reduction(rng):
    for _ in range(10):
        phis = rng.uniform(0, 2 * math.pi, 3)
        assert cf.boosted_ghz_correlation(0.0, *phis) == pytest.approx(
            cf.ghz_correlation(*phis), abs=1e-15
        )


def test_boosted_ghz_correlation_uncorrected_variant_differs(rng):
    # the two forms agree only where sin^2 cos vanishes; at omega = pi/3 and
    # the optimal angles the gap is (1/2) sin^2 cos * 3 cos(pi/4) = 9 sqrt(2)/32
    omega, phi = math.pi / 3, math.pi / 4
    gap = abs(
        cf.boosted_ghz_correlation_uncorrected(omega, phi, phi, phi)
        - cf.boosted_ghz_correlation(omega, phi, phi, phi)
    )
    assert gap == pytest.approx(9 * math.sqrt(2) / 32, abs=1e-12)
    oracle = correlation(boost_state(GHZ, omega), *[azimuthal_direction(phi)] * 3)
    assert abs(oracle - cf.boosted_ghz_correlation(omega, phi, phi, phi)) < 1e-13
    assert abs(oracle - cf.boosted_ghz_correlation_uncorrected(omega, phi, phi, phi)) > 0.1


def test_boosted_ghz_inequalities_against_oracle():
    s = cf.ghz_optimal_settings()
    worst = 0.0
    for omega in np.linspace(0, math.pi, 100):
        sv, m, mp = boosted_triple(GHZ, omega, s)
        triple = cf.boosted_ghz_inequalities(omega)
        worst = max(worst, abs(sv - triple.sv), abs(m - triple.m), abs(mp - triple.m_prime))
    assert worst < 1e-12


def test_boosted_ghz_inequalities_landmarks():
    assert cf.boosted_ghz_inequalities(0.0).sv == pytest.approx(cf.GHZ_SVETLICHNY_MAX, abs=1e-15)
    assert cf.boosted_ghz_inequalities(math.pi / 2).sv == pytest.approx(0.0, abs=1e-15)
    # cos^6 - sin^6 of the half angle at omega = pi/3 is 27/64 - 1/64
    triple = cf.boosted_ghz_inequalities(math.pi / 3)
    assert triple.m == pytest.approx(2 * math.sqrt(2) * 26 / 64, abs=1e-15)
    assert triple.sv == pytest.approx(2 * triple.m, abs=1e-15)


def test_ghz_ultrarelativistic_mermin():
    assert cf.ghz_ultrarelativistic_mermin(1.0) == pytest.approx(2 * math.sqrt(2), abs=1e-15)
    assert cf.ghz_ultrarelativistic_mermin(2.0) == pytest.approx(13 / (8 * math.sqrt(2)), abs=1e-15)
    assert cf.ghz_ultrarelativistic_mermin(1e6) < 3e-6
    with pytest.raises(ValueError):
        cf.ghz_ultrarelativistic_mermin(0.5)


def test_ghz_ultrarelativistic_consistency_chain():
    # the limit formula equals the boosted closed form at sin(omega) = v0
    for gamma in np.linspace(1.0, 50.0, 40):
        omega = math.asin(math.sqrt(1 - 1 / gamma**2))
        assert cf.ghz_ultrarelativistic_mermin(gamma) == pytest.approx(
            cf.boosted_ghz_inequalities(omega).m, abs=1e-9
        )


def test_czachor_ghz_inequalities_endpoints():
    triple = cf.czachor_ghz_inequalities(0.0, 0.0)
    assert triple.sv == pytest.approx(cf.GHZ_SVETLICHNY_MAX, abs=1e-12)
    assert triple.m == pytest.approx(2 * math.sqrt(2), abs=1e-12)
    # falloff toward 4/gamma^3 for sv once the rotation angle saturates
    beta = 1 - 1e-9
    for gamma in (2.0, 5.0, 10.0):
        omega = math.asin(math.sqrt(1 - 1 / gamma**2))
        sv = cf.czachor_ghz_inequalities(beta, omega).sv
        assert sv == pytest.approx(4 / gamma**3, rel=1e-3)
    with pytest.raises(ValueError):
        cf.czachor_ghz_inequalities(1.0, 0.0)


def test_czachor_ghz_inequalities_moderate_boost():
    # beta = 0.6, gamma = 2 rotation angle; value sits between the
    # ultrarelativistic floor and the lab ceiling
    from boostbell.spinops import BoostContext, wigner_angle

    omega = wigner_angle(BoostContext(0.6, 2.0))
    m = cf.czachor_ghz_inequalities(0.6, omega).m
    expected = 2 * math.cos(omega) * (math.cos(omega) ** 2 + 3 * (1 - 0.36)) / math.sqrt(1.64) ** 3
    assert m == pytest.approx(expected, abs=1e-15)
    assert 4 / 2.0**3 < m < 2 * math.sqrt(2)


def test_w_coefficients_rest_frame():
    c = cf.w_measurement_coefficients(0.0)
    assert_allclose([c.a, c.b, c.c, c.d], [-1 / 3, 0.0, -2 / 3, 0.0], atol=1e-15)
    u = cf.w_measurement_coefficients_uncorrected(0.0)
    assert_allclose([u.a, u.b, u.c, u.d], [-1 / 3, 0.0, -2 / 3, 0.0], atol=1e-15)


def test_w_coefficients_right_angle():
    c = cf.w_measurement_coefficients(math.pi / 2)
    assert_allclose([c.a, c.b, c.c, c.d], [0.0, -1.0, 0.0, 2 / 3], atol=1e-15)


def test_w_coefficient_sets_agree_only_at_degenerate_angles():
    omega = math.pi / 3
    c, u = cf.w_measurement_coefficients(omega), cf.w_measurement_coefficients_uncorrected(omega)
    sin_o, cos_o = math.sin(omega), math.cos(omega)
    assert abs(c.a - u.a) == pytest.approx(1.5 * sin_o**2 * cos_o, abs=1e-15)
    assert c.b == u.b and c.c == u.c
    # d differs by the square-versus-cube of the sine inside the bracket
    assert abs(c.d - u.d) == pytest.approx((2 / 3) * sin_o * (sin_o**2 - sin_o**3), abs=1e-15)
    assert abs(c.d - u.d) > 0.05


def test_uncorrected_w_coefficients_break_the_expectation_bound():
    # all-z settings give a +-1-valued observable, so |E| <= 1 always; the
    # uncorrected coefficient set predicts 57/48 there, which is impossible
    value = cf.boosted_w_correlation_uncorrected(math.pi / 3, 0.0, 0.0, 0.0)
    assert value == pytest.approx(57 / 48, abs=1e-12)
    oracle = correlation(boost_state(W, math.pi / 3), *[polar_direction(0.0)] * 3)
    assert oracle == pytest.approx(5 / 8, abs=1e-13)
    assert cf.boosted_w_correlation(math.pi / 3, 0.0, 0.0, 0.0) == pytest.approx(5 / 8, abs=1e-13)


def test_boosted_w_correlation_against_oracle(rng):
    worst = 0.0
    for omega in np.linspace(0, math.pi, 100):
        ths = rng.uniform(0, 2 * math.pi, 3)
        oracle = correlation(boost_state(W, omega), *[polar_direction(t) for t in ths])
        worst = max(worst, abs(oracle - cf.boosted_w_correlation(omega, *ths)))
    assert worst < 1e-12


def test_boosted_w_correlation_is_angle_shift(rng):
    # the spin rotation acts in the measurement plane, so boosting is the
    # same as shifting every polar angle by -omega
    for _ in range(40):
        omega = rng.uniform(0, math.pi)
        ths = rng.uniform(0, 2 * math.pi, 3)
        assert cf.boosted_w_correlation(omega, *ths) == pytest.approx(
            cf.w_correlation(*(ths - omega)), abs=1e-12
        )


def test_boosted_w_correlation_all_down():
    omega = 1.1
    c = cf.w_measurement_coefficients(omega)
    assert cf.boosted_w_correlation(omega, 0, 0, 0) == pytest.approx(c.a + c.c, abs=1e-15)


def test_boosted_w_inequalities_against_oracle():
    worst = 0.0
    for omega in np.linspace(0, math.pi, 15):
        for theta in np.linspace(0, math.pi, 7):
            s = MeasurementSettings.symmetric_polar(theta, math.pi - theta)
            sv, m, mp = boosted_triple(W, omega, s)
            triple = cf.boosted_w_inequalities(omega, theta)
            worst = max(worst, abs(sv - triple.sv), abs(m - triple.m), abs(mp - triple.m_prime))
    assert worst < 1e-12


def test_boosted_w_inequalities_landmarks():
    lab = cf.boosted_w_inequalities(0.0, THETA_STAR)
    assert lab.sv == pytest.approx(4.3546, abs=5e-4)
    assert lab.m == pytest.approx(lab.sv / 2, abs=1e-15)
    assert lab.m_prime == pytest.approx(lab.sv / 2, abs=1e-15)
    assert cf.boosted_w_inequalities(math.pi / 2, 0.7).sv == pytest.approx(0.0, abs=1e-15)


def test_boosted_w_inequalities_uncorrected_gap():
    # identical in the rest frame, order-one apart once boosted
    lab = cf.boosted_w_inequalities(0.0, THETA_STAR)
    printed = cf.boosted_w_inequalities_uncorrected(0.0, THETA_STAR)
    assert printed.m == pytest.approx(lab.m, abs=1e-12)
    boosted = cf.boosted_w_inequalities(1.0, THETA_STAR)
    printed = cf.boosted_w_inequalities_uncorrected(1.0, THETA_STAR)
    assert abs(printed.m - boosted.m) > 0.1


def test_w_ultrarelativistic_inequalities():
    lab = cf.w_ultrarelativistic_inequalities(1.0)
    assert lab.sv == pytest.approx(4.358, abs=1e-3)
    assert abs(lab.sv - 4.354) < 0.01
    assert lab.m == pytest.approx(lab.m_prime, abs=1e-12)  # correction term vanishes
    far = cf.w_ultrarelativistic_inequalities(1e9)
    assert far.sv < 1e-6
    assert far.m == pytest.approx(1.14 * 2.19, abs=1e-6)
    assert far.m_prime == pytest.approx(1.14 * 2.19, abs=1e-6)
    with pytest.raises(ValueError):
        cf.w_ultrarelativistic_inequalities(0.0)


def test_w_ultrarelativistic_tension():
    # the eight-term functional dies with energy while the four-term ones
    # stay past their classical bound: the two witnesses disagree
    gammas = np.array([2.0, 5.0, 20.0, 1e3])
    sv = [cf.w_ultrarelativistic_inequalities(g).sv for g in gammas]
    m = [cf.w_ultrarelativistic_inequalities(g).m for g in gammas]
    assert sv[-1] < 0.02 and all(np.diff(sv) < 0)
    assert m[-1] > 2.0


def test_w_wbar_cross_correlation_against_oracle(rng):
    for _ in range(40):
        ths = rng.uniform(0, 2 * math.pi, 3)
        dirs = [polar_direction(t) for t in ths]
        assert cross_correlation(W, W_BAR, *dirs) == pytest.approx(
            cf.w_wbar_cross_correlation(*ths), abs=1e-13
        )


def test_tau_correlation_against_oracle(rng):
    for _ in range(40):
        ths = rng.uniform(0, 2 * math.pi, 3)
        dirs = [polar_direction(t) for t in ths]
        assert correlation(TAU, *dirs) == pytest.approx(cf.tau_correlation(*ths), abs=1e-13)


def test_tau_gap_values():
    assert cf.tau_w_gap(0, 0, 0) == 0.0
    got = cf.tau_w_gap(THETA_STAR, THETA_STAR, THETA_STAR)
    assert got == pytest.approx(1 / math.sqrt(3), abs=1e-12)
    assert got == pytest.approx(0.57735, abs=5e-6)
    # the W correlation itself vanishes at the optimal angle, so the gap
    # there is also tau minus W evaluated directly
    assert cf.w_correlation(THETA_STAR, THETA_STAR, THETA_STAR) == pytest.approx(0.0, abs=1e-15)


def test_tau_gap_positive_near_optimum():
    for dt in np.linspace(-math.radians(5), math.radians(5), 21):
        t = THETA_STAR + dt
        assert cf.tau_w_gap(t, t, t) > 0.0


def test_tau_gap_is_tau_correlation():
    for ths in np.random.default_rng(3).uniform(0, 2 * math.pi, (20, 3)):
        assert cf.tau_w_gap(*ths) == cf.tau_correlation(*ths)


def test_ghz_optimal_settings_family():
    for n in (-2, -1, 0, 1, 3):
        s = cf.ghz_optimal_settings(n)
        assert svetlichny(GHZ, s) == pytest.approx(cf.GHZ_SVETLICHNY_MAX, abs=1e-12)
    base = cf.ghz_optimal_settings()
    assert_allclose(base.a, azimuthal_direction(math.pi / 4), atol=1e-15)
    assert_allclose(base.a_prime, azimuthal_direction(3 * math.pi / 4), atol=1e-15)


def test_w_optimal_settings():
    s = cf.w_optimal_settings()
    assert svetlichny(W, s) == pytest.approx(cf.W_SVETLICHNY_MAX, abs=1e-12)
    assert_allclose(s.a, polar_direction(THETA_STAR), atol=1e-15)
    assert_allclose(s.a_prime, polar_direction(math.pi - THETA_STAR), atol=1e-15)

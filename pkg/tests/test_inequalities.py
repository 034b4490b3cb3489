import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from conftest import random_settings, random_unit

from boostbell import states
from boostbell.inequalities import (
    SVETLICHNY_QUANTUM_MAX,
    CzachorModel,
    MeasurementSettings,
    collins,
    collins_signed,
    correlation,
    correlation_from_tensor,
    correlation_tensor,
    cross_correlation,
    mermin,
    mermin_signed,
    report,
    svetlichny,
    svetlichny_signed,
)
from boostbell.closedform import (
    GHZ_SVETLICHNY_MAX,
    W_SVETLICHNY_MAX,
    ghz_optimal_settings,
    w_optimal_settings,
)
from boostbell.qcore import basis_state
from boostbell.spinops import azimuthal_direction, boost_state, polar_direction

GHZ = states.make("ghz")
GHZ_BAR = states.make("ghz_bar")
W = states.make("w")
W_BAR = states.make("w_bar")


def test_ghz_correlation_depends_on_angle_sum(rng):
    for _ in range(10):
        phis = rng.uniform(0, 2 * math.pi, 3)
        got = correlation(GHZ, *[azimuthal_direction(p) for p in phis])
        assert got == pytest.approx(math.cos(phis.sum()), abs=1e-13)
    # the quoted sum 3 pi / 4 gives -sqrt(2)/2 regardless of the split
    for phis in ([math.pi / 4] * 3, [0.1, 0.3, 3 * math.pi / 4 - 0.4]):
        got = correlation(GHZ, *[azimuthal_direction(p) for p in phis])
        assert got == pytest.approx(-math.sqrt(2) / 2, abs=1e-13)


def test_ghz_bar_correlation_is_negated():
    phis = (0.2, 1.0, 2.2)
    dirs = [azimuthal_direction(p) for p in phis]
    assert correlation(GHZ_BAR, *dirs) == pytest.approx(-math.cos(sum(phis)), abs=1e-13)


def test_w_correlation_all_down():
    dirs = [polar_direction(0.0)] * 3
    assert correlation(W, *dirs) == pytest.approx(-1.0, abs=1e-14)


def test_w_bar_correlation_flips_sign(rng):
    # flipping all spins sends each polar observable theta -> pi - theta,
    # so the W-bar value is the negative of the W value, not the same value
    assert correlation(W_BAR, *[polar_direction(0.0)] * 3) == pytest.approx(1.0, abs=1e-14)
    for _ in range(10):
        ths = rng.uniform(0, 2 * math.pi, 3)
        dirs = [polar_direction(t) for t in ths]
        assert correlation(W_BAR, *dirs) == pytest.approx(-correlation(W, *dirs), abs=1e-13)


def test_correlation_rejects_two_qubit_state():
    with pytest.raises(ValueError):
        correlation(states.make("bell_b"), *[polar_direction(0.0)] * 3)


def test_cross_correlation_values():
    dirs0 = [polar_direction(0.0)] * 3
    assert cross_correlation(W, W_BAR, *dirs0) == pytest.approx(0.0, abs=1e-15)
    theta = math.radians(35.264)
    dirs = [polar_direction(theta)] * 3
    # sin(theta) = 1/sqrt(3) at the optimal angle: value is -1/sqrt(3)
    assert cross_correlation(W, W_BAR, *dirs) == pytest.approx(-0.57735, abs=1e-5)
    # self case reduces to the ordinary correlation
    assert cross_correlation(W, W, *dirs) == pytest.approx(correlation(W, *dirs), abs=1e-14)


def test_svetlichny_ghz_maximum():
    settings_ = MeasurementSettings.symmetric_azimuthal(math.pi / 4, 3 * math.pi / 4)
    assert svetlichny(GHZ, settings_) == pytest.approx(GHZ_SVETLICHNY_MAX, abs=1e-12)


def test_svetlichny_w_maximum():
    theta = math.radians(35.264)
    settings_ = MeasurementSettings.symmetric_polar(theta, math.pi - theta)
    assert svetlichny(W, settings_) == pytest.approx(4.354, abs=5e-3)
    assert svetlichny(W, w_optimal_settings()) == pytest.approx(W_SVETLICHNY_MAX, abs=1e-12)


def test_mermin_collins_at_optimal_settings():
    s = ghz_optimal_settings()
    assert mermin(GHZ, s) == pytest.approx(2 * math.sqrt(2), abs=1e-12)
    assert collins(GHZ, s) == pytest.approx(2 * math.sqrt(2), abs=1e-12)
    sw = w_optimal_settings()
    assert mermin(W, sw) == pytest.approx(2.177, abs=5e-3)
    assert collins(W, sw) == pytest.approx(mermin(W, sw), abs=1e-12)


def test_product_state_respects_classical_bound(rng):
    product = basis_state("+++")
    for _ in range(200):
        assert svetlichny(product, random_settings(rng)) <= 4.0 + 1e-9


def test_signed_sums_compose():
    # the eight-term signed sum is exactly the sum of the two four-term ones
    rng = np.random.default_rng(7)
    for state in (GHZ, W, boost_state(W, 1.1)):
        for _ in range(20):
            s = random_settings(rng)
            total = mermin_signed(state, s) + collins_signed(state, s)
            assert svetlichny_signed(state, s) == pytest.approx(total, abs=1e-12)


@settings(max_examples=40, deadline=None)
@given(angles=st.tuples(*(st.floats(0, 2 * math.pi) for _ in range(6))))
def test_triangle_bound_on_polar_settings(angles):
    s = MeasurementSettings.polar(angles[:3], angles[3:])
    sv = svetlichny(W, s)
    assert sv <= mermin(W, s) + collins(W, s) + 1e-12
    assert sv <= SVETLICHNY_QUANTUM_MAX + 1e-9


def test_quantum_bound_on_random_settings(rng):
    for state in (GHZ, W, boost_state(GHZ, 0.7)):
        for _ in range(60):
            assert svetlichny(state, random_settings(rng)) <= SVETLICHNY_QUANTUM_MAX + 1e-9


def test_czachor_model_zero_speed_matches_pauli(rng):
    model = CzachorModel(0.0, (0, 0, 1))
    for _ in range(25):
        dirs = [random_unit(rng) for _ in range(3)]
        for state in (GHZ, W):
            assert correlation(state, *dirs, model=model) == pytest.approx(
                correlation(state, *dirs), abs=1e-12
            )


def test_czachor_model_changes_values_at_speed(rng):
    model = CzachorModel(0.9, (0, 0, 1))
    s = w_optimal_settings()
    assert svetlichny(W, s, model) != pytest.approx(svetlichny(W, s), abs=1e-3)


def test_czachor_model_validation():
    with pytest.raises(ValueError):
        CzachorModel(1.0, (0, 0, 1))


def test_correlation_tensor_matches_direct_route(rng):
    for state in (W, boost_state(GHZ, 0.9)):
        tensor = correlation_tensor(state)
        for _ in range(20):
            dirs = [random_unit(rng) for _ in range(3)]
            fast = correlation_from_tensor(tensor, *dirs)
            assert fast == pytest.approx(correlation(state, *dirs), abs=1e-12)


def test_report_bundles_and_flags():
    rep = report(GHZ, ghz_optimal_settings())
    assert rep.sv == pytest.approx(GHZ_SVETLICHNY_MAX, abs=1e-12)
    assert rep.sv_violated and rep.m_violated and rep.m_prime_violated
    assert rep.as_dict()["sv_bound"] == 4.0

    # all settings equal to z: every correlation is -1, so |S_v| vanishes
    # and the four-term sums sit exactly on (never above) their bound
    flat = MeasurementSettings.symmetric_polar(0.0, 0.0)
    rep = report(W, flat)
    assert rep.sv == pytest.approx(0.0, abs=1e-14)
    assert rep.m == pytest.approx(2.0, abs=1e-14)
    assert rep.m <= 2.0 + 1e-12 and rep.m_violated == (rep.m > 2.0)
    assert not rep.sv_violated

    # boosted GHZ at a right-angle rotation: the violation dies entirely
    rep = report(boost_state(GHZ, math.pi / 2), ghz_optimal_settings())
    assert rep.sv == pytest.approx(0.0, abs=1e-12)


def test_report_half_relation_gate():
    report(GHZ, ghz_optimal_settings(), require_half_relation=True)
    skew = MeasurementSettings.symmetric_azimuthal(0.3, 1.9)
    with pytest.raises(AssertionError):
        report(GHZ, skew, require_half_relation=True)


def test_settings_validation():
    with pytest.raises(ValueError):
        MeasurementSettings(
            a=(1, 1, 0), a_prime=(1, 0, 0), b=(1, 0, 0), b_prime=(1, 0, 0), c=(1, 0, 0),
            c_prime=(1, 0, 0),
        )


def test_degenerate_settings_are_legal():
    s = MeasurementSettings.symmetric_azimuthal(0.5, 0.5)  # a == a'
    assert svetlichny(GHZ, s) >= 0.0

"""Closed-form correlation functions and inequality values.

Every function here is a pure formula.  The primary forms are validated
against the brute-force tensor-product evaluation in
:mod:`boostbell.inequalities` to machine precision; a few carry an
``_uncorrected`` companion, a transcription variant whose coefficients
fail that cross-check.  The uncorrected variants are kept on purpose so
the ``verify`` command can report the size of the disagreement instead
of silently hiding it; see the README for the full list.

Angle conventions: ``phi`` are azimuthal angles in the x-y plane (GHZ
family), ``theta`` are polar angles in the x-z plane (W family), and
``omega`` is the boost-induced spin rotation angle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .inequalities import MeasurementSettings

__all__ = [
    "GHZ_SVETLICHNY_MAX",
    "W_SVETLICHNY_MAX",
    "W_OPTIMAL_POLAR_ANGLE",
    "InequalityTriple",
    "WCoefficients",
    "ghz_correlation",
    "ghz_bar_correlation",
    "w_correlation",
    "w_bar_correlation",
    "boosted_ghz_correlation",
    "boosted_ghz_correlation_uncorrected",
    "boosted_ghz_inequalities",
    "ghz_ultrarelativistic_mermin",
    "czachor_ghz_inequalities",
    "w_measurement_coefficients",
    "w_measurement_coefficients_uncorrected",
    "boosted_w_correlation",
    "boosted_w_correlation_uncorrected",
    "boosted_w_inequalities",
    "boosted_w_inequalities_uncorrected",
    "w_ultrarelativistic_inequalities",
    "w_wbar_cross_correlation",
    "tau_correlation",
    "tau_w_gap",
    "ghz_optimal_settings",
    "w_optimal_settings",
]

GHZ_SVETLICHNY_MAX = 4.0 * math.sqrt(2.0)
# max over theta of |8 cos(theta) - 4 cos^3(theta)| = 16 sqrt(6) / 9 at cos^2 = 2/3
W_SVETLICHNY_MAX = 16.0 * math.sqrt(6.0) / 9.0
W_OPTIMAL_POLAR_ANGLE = math.atan(1.0 / math.sqrt(2.0))  # 35.264 degrees


class InequalityTriple(NamedTuple):
    sv: float
    m: float
    m_prime: float


# ---------------------------------------------------------------------------
# lab-frame correlations


def ghz_correlation(phi1: float, phi2: float, phi3: float) -> float:
    """GHZ correlation for azimuthal measurements: cos(phi1 + phi2 + phi3)."""
    return math.cos(phi1 + phi2 + phi3)


def ghz_bar_correlation(phi1: float, phi2: float, phi3: float) -> float:
    """GHZ-bar correlation, the exact negative of the GHZ one."""
    return -ghz_correlation(phi1, phi2, phi3)


def w_correlation(th1: float, th2: float, th3: float) -> float:
    """W correlation for polar measurements.

    -(2/3) cos(th1 + th2 + th3) - (1/3) cos th1 cos th2 cos th3.
    """
    return -(2.0 / 3.0) * math.cos(th1 + th2 + th3) - (1.0 / 3.0) * (
        math.cos(th1) * math.cos(th2) * math.cos(th3)
    )


def w_bar_correlation(th1: float, th2: float, th3: float) -> float:
    """W-bar correlation for polar measurements: the negative of the W one.

    Flipping all three spins maps W-bar to W and sends each polar
    observable sigma(theta) to sigma(pi - theta), which negates the W
    expression.  (A same-sign variant circulates; the tensor-product
    oracle rules it out, e.g. at theta = 0 the value is +1, not -1.)
    """
    return -w_correlation(th1, th2, th3)


# ---------------------------------------------------------------------------
# boosted GHZ family


def boosted_ghz_correlation(omega: float, phi1: float, phi2: float, phi3: float) -> float:
    """Correlation of the boosted GHZ state for azimuthal measurements.

    (c^6 - s^6) cos(Sum phi) - (1/4) sin^2(omega) cos(omega) T with
    s = sin(omega/2), c = cos(omega/2) and
    T = cos(phi1+phi2-phi3) + cos(phi1-phi2+phi3) + cos(-phi1+phi2+phi3).
    Matches the tensor-product oracle to machine precision.
    """
    s = math.sin(omega / 2.0)
    c = math.cos(omega / 2.0)
    mixed = (
        math.cos(phi1 + phi2 - phi3)
        + math.cos(phi1 - phi2 + phi3)
        + math.cos(-phi1 + phi2 + phi3)
    )
    return (c**6 - s**6) * math.cos(phi1 + phi2 + phi3) - 0.25 * math.sin(omega) ** 2 * math.cos(
        omega
    ) * mixed


def boosted_ghz_correlation_uncorrected(
    omega: float, phi1: float, phi2: float, phi3: float
) -> float:
    """Variant with a (3/4) mixed-term coefficient instead of (1/4).

    Disagrees with the oracle away from omega in {0, pi/2, pi}; kept for
    the discrepancy report.  The inequality values built from it are
    unaffected because the mixed terms cancel in those combinations.
    """
    s = math.sin(omega / 2.0)
    c = math.cos(omega / 2.0)
    mixed = (
        math.cos(phi1 + phi2 - phi3)
        + math.cos(phi1 - phi2 + phi3)
        + math.cos(-phi1 + phi2 + phi3)
    )
    return (c**6 - s**6) * math.cos(phi1 + phi2 + phi3) - 0.75 * math.sin(omega) ** 2 * math.cos(
        omega
    ) * mixed


def boosted_ghz_inequalities(omega: float) -> InequalityTriple:
    """Inequality values for the boosted GHZ state at the lab-optimal angles.

    |M| = |M'| = |S_v|/2 = |2 sqrt(2) (cos^6(omega/2) - sin^6(omega/2))|;
    the lab maximum 4 sqrt(2) at omega = 0 and zero at omega = pi/2.
    """
    s = math.sin(omega / 2.0)
    c = math.cos(omega / 2.0)
    m = abs(2.0 * math.sqrt(2.0) * (c**6 - s**6))
    return InequalityTriple(sv=2.0 * m, m=m, m_prime=m)


def ghz_ultrarelativistic_mermin(gamma: float) -> float:
    """beta -> 1 limit of |M| = |S_v|/2 for the boosted GHZ state.

    (1 + 3 gamma^2) / (sqrt(2) gamma^3), obtained from the boosted GHZ
    inequalities with sin(omega) = sqrt(1 - 1/gamma^2).  Equals
    2 sqrt(2) at gamma = 1 and decays to zero for fast particles.
    """
    if gamma < 1.0:
        raise ValueError(f"gamma must be >= 1, got {gamma!r}")
    return (1.0 + 3.0 * gamma**2) / (math.sqrt(2.0) * gamma**3)


def czachor_ghz_inequalities(beta: float, omega: float) -> InequalityTriple:
    """Inequality values for the relativistic spin observable, GHZ settings.

    |M| = |M'| = |S_v|/2
        = 2 |cos omega| (cos^2 omega + 3 (1 - beta^2)) / sqrt(2 - beta^2)^3.

    There is no independent brute-force oracle for this expression (the
    velocity composition behind it is not pinned down), so only its
    endpoints are checked: the lab values at beta = 0 and the 2/gamma^3
    falloff as beta -> 1.
    """
    if not 0.0 <= beta < 1.0:
        raise ValueError(f"beta must lie in [0, 1), got {beta!r}")
    m = (
        2.0
        * abs(math.cos(omega))
        * (math.cos(omega) ** 2 + 3.0 * (1.0 - beta**2))
        / math.sqrt(2.0 - beta**2) ** 3
    )
    return InequalityTriple(sv=2.0 * m, m=m, m_prime=m)


# ---------------------------------------------------------------------------
# boosted W family


@dataclass(frozen=True)
class WCoefficients:
    """Coefficients of the boosted W correlation, all functions of omega.

    The correlation is  a P + b S + c cos(Sum theta) + d M1  with
    P = prod cos(theta_i), S = prod sin(theta_i) and M1 the sum of the
    three single-sine products.  At omega = 0 they reduce to
    (-1/3, 0, -2/3, 0), the unboosted W correlation.
    """

    a: float
    b: float
    c: float
    d: float


def w_measurement_coefficients(omega: float) -> WCoefficients:
    """Oracle-exact coefficients of the boosted W correlation.

    a = -(1/3) cos omega
    b = sin omega (2 cos^2 omega - sin^2 omega)
    c = (7/3) sin^2 omega cos omega - (2/3) cos^3 omega
    d = sin omega ((2/3) sin^2 omega - (7/3) cos^2 omega)
    """
    sin_o = math.sin(omega)
    cos_o = math.cos(omega)
    return WCoefficients(
        a=-cos_o / 3.0,
        b=sin_o * (2.0 * cos_o**2 - sin_o**2),
        c=(7.0 / 3.0) * sin_o**2 * cos_o - (2.0 / 3.0) * cos_o**3,
        d=sin_o * ((2.0 / 3.0) * sin_o**2 - (7.0 / 3.0) * cos_o**2),
    )


def w_measurement_coefficients_uncorrected(omega: float) -> WCoefficients:
    """Transcription variant of the coefficients; fails the oracle check.

    Differs in a (extra +(3/2) sin^2 omega cos omega, which can push
    correlations of a +-1-valued observable above 1) and in d (a cubed
    sine where the oracle requires a square).  Agrees with the corrected
    set at omega in {0, pi/2}, which is why endpoint checks alone cannot
    catch it.
    """
    sin_o = math.sin(omega)
    cos_o = math.cos(omega)
    return WCoefficients(
        a=-(1.0 / 3.0) * cos_o**3 + (7.0 / 6.0) * sin_o**2 * cos_o,
        b=sin_o * (2.0 * cos_o**2 - sin_o**2),
        c=(7.0 / 3.0) * sin_o**2 * cos_o - (2.0 / 3.0) * cos_o**3,
        d=sin_o * ((2.0 / 3.0) * sin_o**3 - (7.0 / 3.0) * cos_o**2),
    )


def _w_correlation_from(coeff: WCoefficients, th1: float, th2: float, th3: float) -> float:
    c1, c2, c3 = math.cos(th1), math.cos(th2), math.cos(th3)
    s1, s2, s3 = math.sin(th1), math.sin(th2), math.sin(th3)
    single_sine = c1 * s2 * c3 + s1 * c2 * c3 + c1 * c2 * s3
    return (
        coeff.a * c1 * c2 * c3
        + coeff.b * s1 * s2 * s3
        + coeff.c * math.cos(th1 + th2 + th3)
        + coeff.d * single_sine
    )


def boosted_w_correlation(omega: float, th1: float, th2: float, th3: float) -> float:
    """Correlation of the boosted W state for polar measurements.

    Equivalent to the unboosted W correlation with every polar angle
    shifted by -omega (the spin rotation acts in the same x-z plane the
    measurement directions live in).
    """
    return _w_correlation_from(w_measurement_coefficients(omega), th1, th2, th3)


def boosted_w_correlation_uncorrected(omega: float, th1: float, th2: float, th3: float) -> float:
    """Boosted W correlation built from the uncorrected coefficient set."""
    return _w_correlation_from(w_measurement_coefficients_uncorrected(omega), th1, th2, th3)


def _w_inequalities_from(
    coeff: WCoefficients, theta: float, sine_power: int
) -> InequalityTriple:
    cos_t = math.cos(theta)
    sin_t = math.sin(theta)
    base = -2.0 * coeff.a * cos_t**3 + coeff.c * (math.cos(3.0 * theta) - 3.0 * cos_t)
    odd = 2.0 * coeff.b * sin_t**sine_power - 6.0 * coeff.d * cos_t**2 * sin_t
    m = abs(base + odd)
    m_prime = abs(base - odd)
    sv = abs(2.0 * base)
    return InequalityTriple(sv=sv, m=m, m_prime=m_prime)


def boosted_w_inequalities(omega: float, theta: float) -> InequalityTriple:
    """Inequality values for the boosted W state at symmetric settings.

    Settings are theta_i = theta and theta'_i = pi - theta.  With
    (a, b, c, d) the oracle-exact coefficients:

    M        = -2 a cos^3 t + 2 b sin^3 t - 6 d cos^2 t sin t + c (cos 3t - 3 cos t)
    M'       =  same with the signs of the b and d terms flipped
    |S_v|    = |M + M'| = |-4 a cos^3 t + 2 c cos 3t - 6 c cos t|
    """
    return _w_inequalities_from(w_measurement_coefficients(omega), theta, sine_power=3)


def boosted_w_inequalities_uncorrected(omega: float, theta: float) -> InequalityTriple:
    """Variant using the uncorrected coefficients and a squared sine term.

    The squared sine in the M/M' expressions is dimensionally out of step
    with the cubic products it sits next to; together with the
    uncorrected coefficient set this variant misses the oracle by O(1)
    away from omega = 0.  Reported, not used.
    """
    return _w_inequalities_from(
        w_measurement_coefficients_uncorrected(omega), theta, sine_power=2
    )


def w_ultrarelativistic_inequalities(gamma: float) -> InequalityTriple:
    """beta -> 1 inequality values for the boosted W state, decimal form.

    |S_v| = |19.594/gamma^3 - 15.236/gamma|
    |M|, |M'| = |9.797/gamma^3 - 7.620/gamma
                 +- 1.14 sqrt(1 - 1/gamma^2) (9/gamma^2 - 2.19)|

    The coefficients are fixed rounded decimals: at gamma = 1 the triple
    reproduces the lab values (4.358, 2.177, 2.177) to that rounding, and
    as gamma grows |S_v| dies off while |M| and |M'| approach
    1.14 * 2.19 ~ 2.50, the high-energy tension between the eight-term
    and four-term functionals.  The verify command reports how far these
    decimals drift from the oracle-backed asymptotics.
    """
    if gamma < 1.0:
        raise ValueError(f"gamma must be >= 1, got {gamma!r}")
    even = 9.797 / gamma**3 - 7.620 / gamma
    odd = 1.14 * math.sqrt(1.0 - 1.0 / gamma**2) * (9.0 / gamma**2 - 2.19)
    return InequalityTriple(
        sv=abs(19.594 / gamma**3 - 15.236 / gamma),
        m=abs(even + odd),
        m_prime=abs(even - odd),
    )


# ---------------------------------------------------------------------------
# W / W-bar mixing


def w_wbar_cross_correlation(th1: float, th2: float, th3: float) -> float:
    """Matrix element <W| O |W-bar> for polar measurements.

    -(2/3) sin(th1 + th2 + th3) + (1/3) sin th1 sin th2 sin th3.
    """
    return -(2.0 / 3.0) * math.sin(th1 + th2 + th3) + (1.0 / 3.0) * (
        math.sin(th1) * math.sin(th2) * math.sin(th3)
    )


def tau_correlation(th1: float, th2: float, th3: float) -> float:
    """Correlation of the tau state (W-bar - W)/sqrt(2) for polar measurements.

    The diagonal W and W-bar contributions cancel exactly (they are equal
    and opposite), leaving minus the W/W-bar cross term:
    (2/3) sin(th1 + th2 + th3) - (1/3) sin th1 sin th2 sin th3.
    Matches the tensor-product oracle to machine precision.
    """
    return -w_wbar_cross_correlation(th1, th2, th3)


def tau_w_gap(th1: float, th2: float, th3: float) -> float:
    """Excess of the tau correlation over the W/W-bar cross term.

    (2/3) sin(th1 + th2 + th3) - (1/3) sin th1 sin th2 sin th3, which is
    numerically identical to :func:`tau_correlation`.  At the optimal
    polar angle (35.264 degrees on all three particles) the W correlation
    itself vanishes, so this gap is also tau minus W there; its positive
    value +1/sqrt(3) signals the stronger correlations of the tau state.
    """
    return tau_correlation(th1, th2, th3)


# ---------------------------------------------------------------------------
# canonical optimal settings


def ghz_optimal_settings(n: int = 0) -> MeasurementSettings:
    """Azimuthal settings maximizing |S_v| for the GHZ state.

    Any angles with Sum phi_i = (n + 3/4) pi and Sum phi'_i = (n + 9/4) pi
    reach the maximum 4 sqrt(2); this helper returns the symmetric member
    of the family, phi_i = (n + 3/4) pi / 3 and phi'_i = (n + 9/4) pi / 3
    (for n = 0: pi/4 and 3 pi/4).
    """
    phi = (n + 0.75) * math.pi / 3.0
    phi_prime = (n + 2.25) * math.pi / 3.0
    return MeasurementSettings.symmetric_azimuthal(phi, phi_prime)


def w_optimal_settings() -> MeasurementSettings:
    """Polar settings maximizing |S_v| for the W state.

    theta_i = atan(1/sqrt(2)) = 35.264 degrees and theta'_i = pi - theta_i,
    where |S_v| reaches 16 sqrt(6)/9 = 4.3546.
    """
    theta = W_OPTIMAL_POLAR_ANGLE
    return MeasurementSettings.symmetric_polar(theta, math.pi - theta)

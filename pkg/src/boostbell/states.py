"""Named three-qubit states and their exact boosted decompositions.

The boosted GHZ state decomposes over {GHZ, GHZ-bar, W, W-bar} and the
boosted W state over {+++, ---, W, W-bar}; both coefficient sets are in
closed form in the half-angle of the spin rotation and reproduce the
per-qubit rotation of :func:`boostbell.spinops.boost_state` exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .qcore import SpinState, basis_index

__all__ = [
    "NamedState",
    "Regime",
    "make",
    "GhzBoostCoefficients",
    "WBoostCoefficients",
    "boosted_ghz",
    "boosted_w",
    "ghz_limit_state",
    "w_limit_state",
]

_W_LABELS = ("++-", "+-+", "-++")
_W_BAR_LABELS = ("--+", "-+-", "+--")


class NamedState(str, Enum):
    GHZ = "ghz"
    W = "w"
    GHZ_BAR = "ghz_bar"
    W_BAR = "w_bar"
    TAU = "tau"
    BELL_B = "bell_b"


class Regime(Enum):
    LOW_ENERGY = "low"
    HIGH_ENERGY = "high"


def _amplitudes(pairs, dim: int = 8) -> np.ndarray:
    amps = np.zeros(dim, dtype=complex)
    for label, value in pairs:
        amps[basis_index(label)] = value
    return amps


def _ghz_amplitudes() -> np.ndarray:
    return _amplitudes([("+++", 1 / math.sqrt(2)), ("---", 1 / math.sqrt(2))])


def _ghz_bar_amplitudes() -> np.ndarray:
    return _amplitudes([("---", 1 / math.sqrt(2)), ("+++", -1 / math.sqrt(2))])


def _w_amplitudes() -> np.ndarray:
    return _amplitudes([(lab, 1 / math.sqrt(3)) for lab in _W_LABELS])


def _w_bar_amplitudes() -> np.ndarray:
    return _amplitudes([(lab, 1 / math.sqrt(3)) for lab in _W_BAR_LABELS])


def make(name: NamedState | str) -> SpinState:
    """Construct one of the named states with its exact amplitudes."""
    name = NamedState(name)
    if name is NamedState.GHZ:
        amps = _ghz_amplitudes()
    elif name is NamedState.GHZ_BAR:
        amps = _ghz_bar_amplitudes()
    elif name is NamedState.W:
        amps = _w_amplitudes()
    elif name is NamedState.W_BAR:
        amps = _w_bar_amplitudes()
    elif name is NamedState.TAU:
        # (W-bar - W)/sqrt(2), the antisymmetric mix of the two W-type states
        amps = (_w_bar_amplitudes() - _w_amplitudes()) / math.sqrt(2)
    else:  # BELL_B, the two-qubit remainder of a spin measurement on W
        amps = np.zeros(4, dtype=complex)
        amps[basis_index("+-")] = 1 / math.sqrt(2)
        amps[basis_index("-+")] = 1 / math.sqrt(2)
    return SpinState(amps, atol=1e-15)


@dataclass(frozen=True)
class GhzBoostCoefficients:
    """Expansion of the boosted GHZ state over (GHZ, GHZ-bar, W, W-bar)."""

    c_ghz: float
    c_ghz_bar: float
    c_w: float
    c_w_bar: float

    def as_array(self) -> np.ndarray:
        return np.array([self.c_ghz, self.c_ghz_bar, self.c_w, self.c_w_bar])


@dataclass(frozen=True)
class WBoostCoefficients:
    """Expansion of the boosted W state over (+++, ---, W, W-bar)."""

    c_ppp: float
    c_mmm: float
    c_w: float
    c_w_bar: float

    def as_array(self) -> np.ndarray:
        return np.array([self.c_ppp, self.c_mmm, self.c_w, self.c_w_bar])


def boosted_ghz(omega: float) -> tuple[SpinState, GhzBoostCoefficients]:
    """Boosted GHZ state and its closed-form expansion coefficients.

    With s = sin(omega/2) and c = cos(omega/2) the coefficients are
    (c^3, s^3, sqrt(3/2) s c (s + c), sqrt(3/2) s c (s - c)); their squares
    sum to one through the identity c^6 + s^6 + 3 s^2 c^2 = 1.
    """
    s = math.sin(omega / 2.0)
    c = math.cos(omega / 2.0)
    coeff = GhzBoostCoefficients(
        c_ghz=c**3,
        c_ghz_bar=s**3,
        c_w=math.sqrt(1.5) * s * c * (s + c),
        c_w_bar=math.sqrt(1.5) * s * c * (s - c),
    )
    amps = (
        coeff.c_ghz * _ghz_amplitudes()
        + coeff.c_ghz_bar * _ghz_bar_amplitudes()
        + coeff.c_w * _w_amplitudes()
        + coeff.c_w_bar * _w_bar_amplitudes()
    )
    return SpinState(amps), coeff


def boosted_w(omega: float) -> tuple[SpinState, WBoostCoefficients]:
    """Boosted W state and its closed-form expansion coefficients.

    Coefficients (-sqrt(3) s c^2, sqrt(3) s^2 c, c^3 - 2 c s^2,
    2 s c^2 - s^3) on (+++, ---, W, W-bar); the squares sum to one via
    3 s^2 c^2 + (c^3 - 2 c s^2)^2 + (2 s c^2 - s^3)^2 = 1.
    """
    s = math.sin(omega / 2.0)
    c = math.cos(omega / 2.0)
    coeff = WBoostCoefficients(
        c_ppp=-math.sqrt(3.0) * s * c * c,
        c_mmm=math.sqrt(3.0) * s * s * c,
        c_w=c**3 - 2.0 * c * s * s,
        c_w_bar=2.0 * s * c * c - s**3,
    )
    amps = (
        _amplitudes([("+++", coeff.c_ppp), ("---", coeff.c_mmm)])
        + coeff.c_w * _w_amplitudes()
        + coeff.c_w_bar * _w_bar_amplitudes()
    )
    return SpinState(amps), coeff


def ghz_limit_state(regime: Regime) -> SpinState:
    """Boosted-GHZ limit for slow (gamma -> 1) or fast (gamma -> inf) particles.

    The low-energy limit is GHZ itself.  The high-energy limit is the
    rotation-angle -> pi/2 state (|---> + sqrt(3) |W>)/2, an equal-weight
    superposition of --- and the three single-down kets.
    """
    if regime is Regime.LOW_ENERGY:
        return make(NamedState.GHZ)
    amps = _amplitudes([("---", 0.5)]) + math.sqrt(3.0) / 2.0 * _w_amplitudes()
    return SpinState(amps, atol=1e-15)


def w_limit_state(regime: Regime) -> SpinState:
    """Boosted-W limit for slow or fast particles.

    Low energy gives W back; high energy gives
    (sqrt(3) |GHZ-bar> + (|W-bar> - |W>)/sqrt(2))/2.
    """
    if regime is Regime.LOW_ENERGY:
        return make(NamedState.W)
    amps = math.sqrt(3.0) / 2.0 * _ghz_bar_amplitudes() + 0.5 * (
        (_w_bar_amplitudes() - _w_amplitudes()) / math.sqrt(2.0)
    )
    return SpinState(amps, atol=1e-15)

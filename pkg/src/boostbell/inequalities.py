"""Numeric evaluation of the Svetlichny, Mermin and Collins functionals.

Everything in this module goes through the brute-force route: build the
8x8 tensor-product observable for each correlation and take its
expectation value in the given state.  The closed forms in
:mod:`boostbell.closedform` are validated against these values, never
the other way around.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .qcore import SpinState, expectation, tensor3
from .spinops import (
    azimuthal_direction,
    czachor_direction,
    pauli_along,
    polar_direction,
)

SVETLICHNY_BOUND = 4.0
MERMIN_BOUND = 2.0
COLLINS_BOUND = 2.0
SVETLICHNY_QUANTUM_MAX = 4.0 * math.sqrt(2.0)

__all__ = [
    "SVETLICHNY_BOUND",
    "MERMIN_BOUND",
    "COLLINS_BOUND",
    "SVETLICHNY_QUANTUM_MAX",
    "PauliModel",
    "CzachorModel",
    "PAULI",
    "MeasurementSettings",
    "correlation",
    "cross_correlation",
    "correlation_tensor",
    "correlation_from_tensor",
    "svetlichny",
    "mermin",
    "collins",
    "svetlichny_signed",
    "mermin_signed",
    "collins_signed",
    "InequalityReport",
    "report",
]


class PauliModel:
    """Ordinary spin projections n.sigma."""

    def effective_direction(self, direction) -> np.ndarray:
        return np.asarray(direction, dtype=float)

    def effective_directions(self, rows: np.ndarray) -> np.ndarray:
        return np.asarray(rows, dtype=float)

    def operator_along(self, direction) -> np.ndarray:
        return pauli_along(direction)

    def __repr__(self):
        return "PauliModel()"


class CzachorModel:
    """Relativistic spin observables for particles moving at a common speed.

    The same (speed, motion direction) pair applies to all three
    particles, matching the equal-momentum setup.  Speed zero reproduces
    the Pauli model exactly.
    """

    def __init__(self, particle_speed: float, motion=(0.0, 0.0, 1.0)):
        if not 0.0 <= particle_speed < 1.0:
            raise ValueError(f"particle_speed must lie in [0, 1), got {particle_speed!r}")
        motion = np.asarray(motion, dtype=float).reshape(3).copy()
        motion.setflags(write=False)
        self.particle_speed = float(particle_speed)
        self.motion = motion

    def effective_direction(self, direction) -> np.ndarray:
        return czachor_direction(direction, self.particle_speed, self.motion)

    def effective_directions(self, rows: np.ndarray) -> np.ndarray:
        rows = np.asarray(rows, dtype=float)
        along = rows @ self.motion
        parallel = along[:, None] * self.motion
        tilted = np.sqrt((1.0 - self.particle_speed) * (1.0 + self.particle_speed)) * (
            rows - parallel
        ) + parallel
        return tilted / np.sqrt(1.0 + self.particle_speed**2 * (along**2 - 1.0))[:, None]

    def operator_along(self, direction) -> np.ndarray:
        return pauli_along(self.effective_direction(direction))

    def __repr__(self):
        return f"CzachorModel(particle_speed={self.particle_speed!r}, motion={tuple(self.motion)!r})"


PAULI = PauliModel()


@dataclass(frozen=True)
class MeasurementSettings:
    """Six measurement directions, two per particle."""

    a: np.ndarray
    a_prime: np.ndarray
    b: np.ndarray
    b_prime: np.ndarray
    c: np.ndarray
    c_prime: np.ndarray

    def __post_init__(self):
        for name in ("a", "a_prime", "b", "b_prime", "c", "c_prime"):
            vec = np.asarray(getattr(self, name), dtype=float).reshape(3).copy()
            if abs(float(vec @ vec) - 1.0) > 1e-12:
                raise ValueError(f"setting {name} must be a unit vector")
            vec.setflags(write=False)
            object.__setattr__(self, name, vec)

    @classmethod
    def azimuthal(cls, phis: Sequence[float], phi_primes: Sequence[float]) -> "MeasurementSettings":
        """Settings from azimuthal angles (phi_1, phi_2, phi_3) and their primes."""
        p, q = list(phis), list(phi_primes)
        return cls(
            a=azimuthal_direction(p[0]),
            a_prime=azimuthal_direction(q[0]),
            b=azimuthal_direction(p[1]),
            b_prime=azimuthal_direction(q[1]),
            c=azimuthal_direction(p[2]),
            c_prime=azimuthal_direction(q[2]),
        )

    @classmethod
    def polar(cls, thetas: Sequence[float], theta_primes: Sequence[float]) -> "MeasurementSettings":
        """Settings from polar angles in the x-z plane."""
        t, u = list(thetas), list(theta_primes)
        return cls(
            a=polar_direction(t[0]),
            a_prime=polar_direction(u[0]),
            b=polar_direction(t[1]),
            b_prime=polar_direction(u[1]),
            c=polar_direction(t[2]),
            c_prime=polar_direction(u[2]),
        )

    @classmethod
    def symmetric_azimuthal(cls, phi: float, phi_prime: float) -> "MeasurementSettings":
        return cls.azimuthal([phi] * 3, [phi_prime] * 3)

    @classmethod
    def symmetric_polar(cls, theta: float, theta_prime: float) -> "MeasurementSettings":
        return cls.polar([theta] * 3, [theta_prime] * 3)

    def directions(self) -> tuple[np.ndarray, ...]:
        return (self.a, self.a_prime, self.b, self.b_prime, self.c, self.c_prime)


def correlation(state: SpinState, d1, d2, d3, model=PAULI) -> float:
    """Expectation of the product of one +-1 spin observable per particle."""
    if state.qubit_count != 3:
        raise ValueError("correlation expects a 3-qubit state")
    op = tensor3(
        model.operator_along(d1),
        model.operator_along(d2),
        model.operator_along(d3),
    )
    return expectation(state, op)


def cross_correlation(bra: SpinState, ket: SpinState, d1, d2, d3) -> float:
    """Real part of the matrix element <bra| O |ket> with Pauli observables."""
    if bra.qubit_count != 3 or ket.qubit_count != 3:
        raise ValueError("cross_correlation expects 3-qubit states")
    op = tensor3(pauli_along(d1), pauli_along(d2), pauli_along(d3))
    return float(np.vdot(bra.amplitudes, op @ ket.amplitudes).real)


def correlation_tensor(state: SpinState) -> np.ndarray:
    """3x3x3 tensor T[i,j,k] = <sigma_i sigma_j sigma_k> over axes (x, y, z).

    Correlations are trilinear in the three measurement directions, so
    this tensor evaluates them fast: see :func:`correlation_from_tensor`.
    Used by the optimizer; tests pin it against :func:`correlation`.
    """
    if state.qubit_count != 3:
        raise ValueError("correlation_tensor expects a 3-qubit state")
    from .spinops import PAULI_X, PAULI_Y, PAULI_Z

    paulis = (PAULI_X, PAULI_Y, PAULI_Z)
    psi = state.amplitudes
    out = np.empty((3, 3, 3))
    for i, si in enumerate(paulis):
        for j, sj in enumerate(paulis):
            for k, sk in enumerate(paulis):
                out[i, j, k] = np.vdot(psi, tensor3(si, sj, sk) @ psi).real
    return out


def correlation_from_tensor(tensor: np.ndarray, d1, d2, d3) -> float:
    """Correlation value from a precomputed tensor and three directions."""
    return float(np.einsum("ijk,i,j,k->", tensor, d1, d2, d3))


def _eight_terms(state, s: MeasurementSettings, model) -> dict[str, float]:
    def e(x, y, z):
        return correlation(state, x, y, z, model)

    return {
        "abc": e(s.a, s.b, s.c),
        "abC": e(s.a, s.b, s.c_prime),
        "aBc": e(s.a, s.b_prime, s.c),
        "Abc": e(s.a_prime, s.b, s.c),
        "ABC": e(s.a_prime, s.b_prime, s.c_prime),
        "ABc": e(s.a_prime, s.b_prime, s.c),
        "AbC": e(s.a_prime, s.b, s.c_prime),
        "aBC": e(s.a, s.b_prime, s.c_prime),
    }


def svetlichny_signed(state: SpinState, s: MeasurementSettings, model=PAULI) -> float:
    """Signed eight-term combination whose magnitude is bounded by 4 classically."""
    t = _eight_terms(state, s, model)
    return t["abc"] + t["abC"] + t["aBc"] + t["Abc"] - t["ABC"] - t["ABc"] - t["AbC"] - t["aBC"]


def mermin_signed(state: SpinState, s: MeasurementSettings, model=PAULI) -> float:
    t = _eight_terms(state, s, model)
    return t["abC"] + t["aBc"] + t["Abc"] - t["ABC"]


def collins_signed(state: SpinState, s: MeasurementSettings, model=PAULI) -> float:
    t = _eight_terms(state, s, model)
    return t["abc"] - t["ABc"] - t["AbC"] - t["aBC"]


def svetlichny(state: SpinState, s: MeasurementSettings, model=PAULI) -> float:
    """|S_v|: violation above 4 witnesses genuine tripartite non-locality."""
    return abs(svetlichny_signed(state, s, model))


def mermin(state: SpinState, s: MeasurementSettings, model=PAULI) -> float:
    """|M|: four-term functional with classical bound 2."""
    return abs(mermin_signed(state, s, model))


def collins(state: SpinState, s: MeasurementSettings, model=PAULI) -> float:
    """|M'|: the complementary four-term functional, classical bound 2."""
    return abs(collins_signed(state, s, model))


@dataclass(frozen=True)
class InequalityReport:
    """Values of the three functionals next to their classical bounds."""

    sv: float
    m: float
    m_prime: float
    sv_bound: float = SVETLICHNY_BOUND
    m_bound: float = MERMIN_BOUND
    m_prime_bound: float = COLLINS_BOUND

    @property
    def sv_violated(self) -> bool:
        return self.sv > self.sv_bound

    @property
    def m_violated(self) -> bool:
        return self.m > self.m_bound

    @property
    def m_prime_violated(self) -> bool:
        return self.m_prime > self.m_prime_bound

    def as_dict(self) -> dict:
        return {
            "sv": self.sv,
            "m": self.m,
            "m_prime": self.m_prime,
            "sv_bound": self.sv_bound,
            "m_bound": self.m_bound,
            "m_prime_bound": self.m_prime_bound,
            "sv_violated": self.sv_violated,
            "m_violated": self.m_violated,
            "m_prime_violated": self.m_prime_violated,
        }


def report(
    state: SpinState,
    s: MeasurementSettings,
    model=PAULI,
    require_half_relation: bool = False,
    atol: float = 1e-9,
) -> InequalityReport:
    """Evaluate all three functionals at one set of measurements.

    With ``require_half_relation=True`` the caller asserts that the
    settings maximize |S_v|, in which case |M| = |M'| = |S_v|/2 must hold
    and is checked within ``atol``.
    """
    rep = InequalityReport(
        sv=svetlichny(state, s, model),
        m=mermin(state, s, model),
        m_prime=collins(state, s, model),
    )
    if require_half_relation:
        half = rep.sv / 2.0
        if abs(rep.m - half) > atol or abs(rep.m_prime - half) > atol:
            raise AssertionError(
                f"|M|={rep.m!r} and |M'|={rep.m_prime!r} do not both equal |S_v|/2={half!r}"
            )
    return rep

"""Measurement operators and the Lorentz-boost machinery for spin triples.

The geometry is fixed throughout: the three particles share a common
momentum along +z in the lab frame, the observer frame is boosted along
x, and the spin rotation this induces is about the y axis.  Units use
c = 1, so speeds live in [0, 1).

Two observable models are supported.  ``pauli_along`` is the ordinary
spin projection n.sigma.  ``czachor_along`` is the relativistic spin
observable for a particle with sharp momentum, which contracts the
component of the measurement direction perpendicular to the particle
velocity by the particle's Lorentz factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .qcore import DEFAULT_ATOL, SpinState, apply

__all__ = [
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
    "IDENTITY_2",
    "azimuthal_direction",
    "polar_direction",
    "pauli_along",
    "czachor_direction",
    "czachor_along",
    "BoostContext",
    "wigner_angle",
    "wigner_rotation",
    "boost_state",
]

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
IDENTITY_2 = np.eye(2, dtype=complex)

_PAULI_VECTOR = np.stack([PAULI_X, PAULI_Y, PAULI_Z])


def azimuthal_direction(phi: float) -> np.ndarray:
    """Unit vector (cos phi, sin phi, 0) in the x-y plane."""
    return np.array([math.cos(phi), math.sin(phi), 0.0])


def polar_direction(theta: float) -> np.ndarray:
    """Unit vector (sin theta, 0, cos theta) in the x-z plane."""
    return np.array([math.sin(theta), 0.0, math.cos(theta)])


def _check_unit(vec, name: str, atol: float = DEFAULT_ATOL) -> np.ndarray:
    v = np.asarray(vec, dtype=float).reshape(-1)
    if v.size != 3:
        raise ValueError(f"{name} must be a 3-vector")
    if abs(float(v @ v) - 1.0) > atol:
        raise ValueError(f"{name} must be a unit vector, got |{name}|^2 = {float(v @ v)!r}")
    return v


def pauli_along(direction) -> np.ndarray:
    """Spin projection n.sigma along a unit direction.

    Hermitian and traceless with eigenvalues exactly +-1.
    """
    n = _check_unit(direction, "direction")
    return np.tensordot(n, _PAULI_VECTOR, axes=1)


def czachor_direction(direction, particle_speed: float, motion) -> np.ndarray:
    """Effective measurement direction of the relativistic spin observable.

    The component of ``direction`` perpendicular to the particle motion is
    scaled by sqrt(1 - v^2) and the result renormalized, so the observable
    stays a spin projection with eigenvalues +-1.
    """
    if not 0.0 <= particle_speed < 1.0:
        raise ValueError(f"particle_speed must lie in [0, 1), got {particle_speed!r}")
    a = _check_unit(direction, "direction")
    e = _check_unit(motion, "motion")
    parallel = (e @ a) * e
    perpendicular = a - parallel
    tilted = math.sqrt((1.0 - particle_speed) * (1.0 + particle_speed)) * perpendicular + parallel
    # |tilted| equals sqrt(1 + v^2 ((e.a)^2 - 1)), positive for v < 1
    return tilted / math.sqrt(1.0 + particle_speed**2 * ((e @ a) ** 2 - 1.0))


def czachor_along(direction, particle_speed: float, motion) -> np.ndarray:
    """Relativistic spin observable for a particle with sharp momentum.

    Reduces to ``pauli_along(direction)`` when the particle is at rest or
    when the measurement direction is perpendicular to the motion.
    """
    return pauli_along(czachor_direction(direction, particle_speed, motion))


@dataclass(frozen=True)
class BoostContext:
    """Boost speed and particle energy factor defining a moving-frame view.

    ``beta`` is the observer boost speed along x.  ``gamma_particle`` is
    the particles' lab-frame energy factor E/m, i.e. cosh of the particle
    rapidity.  Both together fix the spin rotation angle each particle
    picks up in the moving frame.
    """

    beta: float
    gamma_particle: float

    def __post_init__(self):
        if not 0.0 <= self.beta < 1.0:
            raise ValueError(f"beta must lie in [0, 1), got {self.beta!r}")
        if not self.gamma_particle >= 1.0:
            raise ValueError(f"gamma_particle must be >= 1, got {self.gamma_particle!r}")

    @property
    def alpha(self) -> float:
        """Boost rapidity: cosh(alpha) = 1/sqrt(1 - beta^2)."""
        return math.atanh(self.beta)

    @property
    def delta(self) -> float:
        """Particle rapidity: cosh(delta) = gamma_particle."""
        return math.acosh(self.gamma_particle)

    @property
    def particle_speed(self) -> float:
        """Lab-frame particle speed sqrt(1 - 1/gamma^2)."""
        g = self.gamma_particle
        return math.sqrt((g - 1.0) * (g + 1.0)) / g

    def moving_frame_velocity(self) -> tuple[float, np.ndarray]:
        """Particle speed and unit direction seen from the boosted frame.

        Velocity addition for a boost perpendicular to the lab motion:
        the lab speed v0 along z combines with the boost speed beta along
        -x into speed sqrt(beta^2 + v0^2 (1 - beta^2)).
        """
        v0 = self.particle_speed
        one_minus_b2 = (1.0 - self.beta) * (1.0 + self.beta)
        vec = np.array([-self.beta, 0.0, v0 * math.sqrt(one_minus_b2)])
        speed = float(np.linalg.norm(vec))
        if speed == 0.0:
            return 0.0, np.array([0.0, 0.0, 1.0])
        return speed, vec / speed


def wigner_angle(ctx: BoostContext) -> float:
    """Spin rotation angle a transverse boost induces on a moving particle.

    tan(Omega) = sinh(alpha) sinh(delta) / (cosh(alpha) + cosh(delta)),
    which vanishes when either the boost or the particle is at rest and
    approaches atan(sinh(delta)) as beta -> 1.  Always in [0, pi/2).
    """
    one_minus_b2 = (1.0 - ctx.beta) * (1.0 + ctx.beta)
    cosh_a = 1.0 / math.sqrt(one_minus_b2)
    sinh_a = ctx.beta * cosh_a
    g = ctx.gamma_particle
    cosh_d = g
    sinh_d = math.sqrt((g - 1.0) * (g + 1.0))
    return math.atan2(sinh_a * sinh_d, cosh_a + cosh_d)


def wigner_rotation(omega: float) -> np.ndarray:
    """Spinor rotation about y: cos(omega/2) I - i sin(omega/2) sigma_y."""
    return math.cos(omega / 2.0) * IDENTITY_2 - 1.0j * math.sin(omega / 2.0) * PAULI_Y


def boost_state(state: SpinState, boost) -> SpinState:
    """Spin state seen from the boosted frame.

    Applies the same y-axis spinor rotation to each of the three qubits
    (the particles share one momentum, hence one rotation angle).
    ``boost`` is either a :class:`BoostContext` or a rotation angle in
    radians given directly.
    """
    if state.qubit_count != 3:
        raise ValueError(f"boost_state expects a 3-qubit state, got {state.qubit_count} qubits")
    omega = wigner_angle(boost) if isinstance(boost, BoostContext) else float(boost)
    rot = wigner_rotation(omega)
    return apply([rot, rot, rot], state)

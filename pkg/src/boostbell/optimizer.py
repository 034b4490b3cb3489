"""Derivative-free maximization of inequality functionals over settings.

The search is deliberately simple and reproducible: a coarse scan (grid
in the two-angle symmetric modes, seeded random starts otherwise)
followed by compass search, i.e. coordinate-wise probing with step
halving.  Randomness comes from numpy's default PCG64 generator seeded
explicitly, so identical inputs give identical outputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .inequalities import PAULI, MeasurementSettings, correlation_tensor
from .qcore import SpinState

__all__ = [
    "AngleParameterization",
    "Functional",
    "OptimizationResult",
    "settings_from_angles",
    "maximize",
    "probe_simultaneous",
]

TWO_PI = 2.0 * math.pi
GRID_STEP = math.pi / 24.0
COMPASS_START_STEP = math.pi / 12.0
DEFAULT_ITERATION_CAP = 100_000


class AngleParameterization(Enum):
    """How a flat angle vector maps onto the six measurement directions."""

    PLANAR_AZIMUTH = "planar_azimuth"  # 6 angles, x-y plane
    PLANAR_POLAR = "planar_polar"  # 6 angles, x-z plane
    SYMMETRIC_AZIMUTH = "symmetric_azimuth"  # 2 angles (phi, phi'), shared by all particles
    SYMMETRIC_POLAR = "symmetric_polar"  # 2 angles (theta, theta')
    GENERAL = "general"  # 12 angles, (polar, azimuth) per direction

    @property
    def n_angles(self) -> int:
        return {
            AngleParameterization.PLANAR_AZIMUTH: 6,
            AngleParameterization.PLANAR_POLAR: 6,
            AngleParameterization.SYMMETRIC_AZIMUTH: 2,
            AngleParameterization.SYMMETRIC_POLAR: 2,
            AngleParameterization.GENERAL: 12,
        }[self]


class Functional(Enum):
    SVETLICHNY = "sv"
    MERMIN = "m"
    COLLINS = "mprime"


def _unit_from_polar_azimuth(theta: float, phi: float) -> np.ndarray:
    st = math.sin(theta)
    return np.array([st * math.cos(phi), st * math.sin(phi), math.cos(theta)])


def settings_from_angles(param: AngleParameterization, angles) -> MeasurementSettings:
    """Measurement settings for a flat angle vector.

    Planar and general vectors are ordered (a, b, c, a', b', c'); the
    general mode uses a (polar, azimuth) pair per direction.
    """
    ang = np.asarray(angles, dtype=float).reshape(-1)
    if ang.size != param.n_angles:
        raise ValueError(f"{param.name} expects {param.n_angles} angles, got {ang.size}")
    if param is AngleParameterization.SYMMETRIC_AZIMUTH:
        return MeasurementSettings.symmetric_azimuthal(ang[0], ang[1])
    if param is AngleParameterization.SYMMETRIC_POLAR:
        return MeasurementSettings.symmetric_polar(ang[0], ang[1])
    if param is AngleParameterization.PLANAR_AZIMUTH:
        return MeasurementSettings.azimuthal(ang[:3], ang[3:])
    if param is AngleParameterization.PLANAR_POLAR:
        return MeasurementSettings.polar(ang[:3], ang[3:])
    dirs = [_unit_from_polar_azimuth(ang[2 * i], ang[2 * i + 1]) for i in range(6)]
    return MeasurementSettings(
        a=dirs[0], b=dirs[1], c=dirs[2], a_prime=dirs[3], b_prime=dirs[4], c_prime=dirs[5]
    )


def _directions_from_angles(param: AngleParameterization, ang: np.ndarray) -> np.ndarray:
    """Six direction rows in the order (a, b, c, a', b', c')."""
    if param is AngleParameterization.SYMMETRIC_AZIMUTH:
        ang = np.array([ang[0]] * 3 + [ang[1]] * 3)
        param = AngleParameterization.PLANAR_AZIMUTH
    elif param is AngleParameterization.SYMMETRIC_POLAR:
        ang = np.array([ang[0]] * 3 + [ang[1]] * 3)
        param = AngleParameterization.PLANAR_POLAR
    if param is AngleParameterization.PLANAR_AZIMUTH:
        return np.stack([np.cos(ang), np.sin(ang), np.zeros_like(ang)], axis=1)
    if param is AngleParameterization.PLANAR_POLAR:
        return np.stack([np.sin(ang), np.zeros_like(ang), np.cos(ang)], axis=1)
    theta, phi = ang[0::2], ang[1::2]
    return np.stack(
        [np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)], axis=1
    )


class _Objective:
    """Fast signed-sum evaluation through the trilinear correlation tensor."""

    # term list per functional: (use a', use b', use c') -> sign
    _TERMS = {
        Functional.SVETLICHNY: {
            (0, 0, 0): 1, (0, 0, 1): 1, (0, 1, 0): 1, (1, 0, 0): 1,
            (1, 1, 1): -1, (1, 1, 0): -1, (1, 0, 1): -1, (0, 1, 1): -1,
        },
        Functional.MERMIN: {(0, 0, 1): 1, (0, 1, 0): 1, (1, 0, 0): 1, (1, 1, 1): -1},
        Functional.COLLINS: {(0, 0, 0): 1, (1, 1, 0): -1, (1, 0, 1): -1, (0, 1, 1): -1},
    }
    # row of the (a, b, c, a', b', c') direction stack feeding each tensor slot
    _ROWS = {
        func: np.array([[s + 3 * p for s, p in zip((0, 1, 2), primes)] for primes in terms])
        for func, terms in _TERMS.items()
    }
    _SIGNS = {func: np.array(list(terms.values()), dtype=float) for func, terms in _TERMS.items()}

    def __init__(self, functional: Functional, state: SpinState, model, param):
        self.functional = functional
        self.model = model
        self.param = param
        self.tensor = correlation_tensor(state)
        self.evaluations = 0

    def signed(self, directions: np.ndarray, functional: Functional) -> float:
        eff = self.model.effective_directions(directions)
        rows = self._ROWS[functional]
        values = np.einsum(
            "ijk,ti,tj,tk->t", self.tensor, eff[rows[:, 0]], eff[rows[:, 1]], eff[rows[:, 2]]
        )
        return float(values @ self._SIGNS[functional])

    def __call__(self, angles: np.ndarray) -> float:
        self.evaluations += 1
        dirs = _directions_from_angles(self.param, angles)
        return abs(self.signed(dirs, self.functional))


@dataclass
class OptimizationResult:
    """Best point found, with enough bookkeeping to reproduce the run."""

    best_value: float
    best_angles: np.ndarray
    best_settings: MeasurementSettings
    restarts_used: int
    iterations: int
    converged: bool


def _is_better(value, angles, best_value, best_angles) -> bool:
    if value > best_value:
        return True
    # exact ties go to the lexicographically smallest angle vector, so the
    # argmax is independent of restart evaluation order
    return value == best_value and best_angles is not None and tuple(angles) < tuple(best_angles)


def _compass(objective, start: np.ndarray, tol: float, iteration_cap: int):
    """Coordinate-wise pattern search with step halving."""
    x = np.mod(start, TWO_PI)
    fx = objective(x)
    step = COMPASS_START_STEP
    evals = 1
    while step > tol and evals < iteration_cap:
        improved = False
        for i in range(x.size):
            for delta in (step, -step):
                y = x.copy()
                y[i] = (y[i] + delta) % TWO_PI
                fy = objective(y)
                evals += 1
                if fy > fx:
                    x, fx = y, fy
                    improved = True
                if evals >= iteration_cap:
                    break
            if evals >= iteration_cap:
                break
        if not improved:
            step /= 2.0
    return x, fx, evals, step <= tol


def maximize(
    functional: Functional,
    state: SpinState,
    model=PAULI,
    param: AngleParameterization = AngleParameterization.GENERAL,
    restarts: int = 8,
    seed: int = 0,
    tol: float = 1e-9,
    iteration_cap: int = DEFAULT_ITERATION_CAP,
) -> OptimizationResult:
    """Maximize |functional| over measurement angles.

    Symmetric two-angle modes start from the best point of a pi/24 grid
    scan plus ``restarts - 1`` random starts; the other modes use
    ``restarts`` random starts.  Each start is refined by compass search
    until the step drops below ``tol`` or the per-start evaluation budget
    ``iteration_cap`` runs out.  Deterministic for a fixed seed; random
    start k is the k-th draw of the generator, so growing ``restarts``
    keeps earlier starts unchanged and the best value never decreases.
    """
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    objective = _Objective(functional, state, model, param)
    rng = np.random.default_rng(seed)

    starts: list[np.ndarray] = []
    n_random = restarts
    if param in (AngleParameterization.SYMMETRIC_AZIMUTH, AngleParameterization.SYMMETRIC_POLAR):
        grid = np.arange(0.0, TWO_PI, GRID_STEP)
        best_grid, best_grid_val = None, -math.inf
        for u in grid:
            for v in grid:
                point = np.array([u, v])
                val = objective(point)
                if _is_better(val, point, best_grid_val, best_grid):
                    best_grid, best_grid_val = point, val
        starts.append(best_grid)
        n_random = restarts - 1
    for _ in range(n_random):
        starts.append(rng.uniform(0.0, TWO_PI, param.n_angles))

    best_angles, best_value, best_converged = None, -math.inf, False
    total_iterations = 0
    for start in starts:
        x, fx, evals, converged = _compass(objective, start, tol, iteration_cap)
        total_iterations += evals
        if _is_better(fx, x, best_value, best_angles):
            best_angles, best_value, best_converged = x, fx, converged
    return OptimizationResult(
        best_value=best_value,
        best_angles=best_angles,
        best_settings=settings_from_angles(param, best_angles),
        restarts_used=len(starts),
        iterations=total_iterations,
        converged=best_converged,
    )


def probe_simultaneous(
    state: SpinState,
    model=PAULI,
    samples: int = 1000,
    seed: int = 0,
    refine_top: int = 32,
    refine_tol: float = 1e-4,
) -> float:
    """Largest simultaneous min(|M|, |M'|) found by random search.

    Draws ``samples`` random general settings, then compass-refines the
    ``refine_top`` best candidates on the min(|M|, |M'|) objective.  A
    statistical probe of the claim that no settings push both four-term
    functionals past |S_v|/2 at once, not a proof.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    param = AngleParameterization.GENERAL
    mermin_obj = _Objective(Functional.MERMIN, state, model, param)

    def both(angles: np.ndarray) -> float:
        dirs = _directions_from_angles(param, angles)
        m = abs(mermin_obj.signed(dirs, Functional.MERMIN))
        mp = abs(mermin_obj.signed(dirs, Functional.COLLINS))
        return min(m, mp)

    rng = np.random.default_rng(seed)
    draws = rng.uniform(0.0, TWO_PI, (samples, param.n_angles))
    scores = np.array([both(x) for x in draws])
    order = np.argsort(-scores, kind="stable")[: min(refine_top, samples)]
    best = float(scores[order[0]]) if order.size else 0.0
    for idx in order:
        _, fx, _, _ = _compass(both, draws[idx], refine_tol, 20_000)
        best = max(best, fx)
    return best

"""The W state under extreme boosts: two witnesses that disagree.

For fast particles the eight-term functional |S_v| of the boosted W
state dies off, while the four-term |M| and |M'| keep signalling
non-classical correlations.  The state itself explains who is right:
it approaches a mix of the flipped GHZ state and the tau state, whose
correlations are stronger than W's at the optimal angles.

Run with:  python demos/03_boosted_w_tension.py
"""

import math

import numpy as np

from boostbell import BoostContext, boost_state, closedform, fidelity, make, report, wigner_angle
from boostbell.states import Regime, w_limit_state

w = make("w")
settings = closedform.w_optimal_settings()
theta = closedform.W_OPTIMAL_POLAR_ANGLE

print("boost speed 0.99; lab-optimal settings kept fixed in the moving frame")
print(f"{'gamma':>9} {'omega':>8} {'|S_v|':>8} {'|M|':>8} {'|M_prime|':>9}")
for gamma in (1.0, 1.5, 2.0, 5.0, 50.0, 1e6):
    ctx = BoostContext(0.99, gamma)
    rep = report(boost_state(w, ctx), settings)
    print(f"{gamma:9.1f} {wigner_angle(ctx):8.4f} {rep.sv:8.4f} {rep.m:8.4f} {rep.m_prime:9.4f}")

print("\nsame sweep in the discrete rotation angle, closed forms")
for omega in np.linspace(0.0, math.pi / 2, 6):
    triple = closedform.boosted_w_inequalities(omega, theta)
    print(f"  omega = {omega:.3f}: S_v = {triple.sv:.4f}, M = {triple.m:.4f}, M' = {triple.m_prime:.4f}")

# Where the state actually goes
high = w_limit_state(Regime.HIGH_ENERGY)
final = boost_state(w, BoostContext(1 - 1e-12, 1e6))
print(f"\nextreme boost: fidelity to (sqrt(3) GHZ-bar + tau)/2 limit = {fidelity(final, high):.9f}")

# The tau state carries stronger correlations than W at the optimal
# angles, so growing tau content supports the four-term witnesses.
gap = closedform.tau_w_gap(theta, theta, theta)
print(f"tau-versus-W correlation gap at the optimal angle: +{gap:.5f} (> 0)")
print(f"(the W correlation itself vanishes there: "
      f"{closedform.w_correlation(theta, theta, theta):.2e})")

"""Tripartite Bell-type inequalities for Lorentz-boosted three-qubit states.

The package evaluates the Svetlichny, Mermin and Collins functionals for
the GHZ and W states as seen from a boosted frame, under both the Pauli
and the relativistic (momentum-sharp) spin observable, and cross-checks
every closed-form expression against a brute-force tensor-product
oracle.
"""

from .qcore import (
    SpinState,
    apply,
    basis_index,
    basis_state,
    equal_up_to_phase,
    expectation,
    fidelity,
    inner_product,
    tensor3,
)
from .spinops import (
    BoostContext,
    azimuthal_direction,
    boost_state,
    czachor_along,
    czachor_direction,
    pauli_along,
    polar_direction,
    wigner_angle,
    wigner_rotation,
)
from .states import (
    GhzBoostCoefficients,
    NamedState,
    Regime,
    WBoostCoefficients,
    boosted_ghz,
    boosted_w,
    ghz_limit_state,
    make,
    w_limit_state,
)
from .inequalities import (
    COLLINS_BOUND,
    MERMIN_BOUND,
    PAULI,
    SVETLICHNY_BOUND,
    SVETLICHNY_QUANTUM_MAX,
    CzachorModel,
    InequalityReport,
    MeasurementSettings,
    PauliModel,
    collins,
    correlation,
    cross_correlation,
    mermin,
    report,
    svetlichny,
)
from .optimizer import (
    AngleParameterization,
    Functional,
    OptimizationResult,
    maximize,
    probe_simultaneous,
)
from . import closedform

__version__ = "0.1.0"

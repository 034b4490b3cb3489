"""Dense complex linear algebra for small multi-qubit spin systems.

States are amplitude vectors over the 2**n computational basis.  Qubit 1
occupies the most significant bit position and the spin-up level ``+``
sorts before spin-down ``-``, so for three qubits the basis order is
``+++, ++-, +-+, +--, -++, -+-, --+, ---``.

Everything here is immutable and pure; values can be shared freely
between concurrent workers.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

DEFAULT_ATOL = 1e-12
HERMITIAN_ATOL = 1e-14
UNITARY_ATOL = 1e-14

__all__ = [
    "DEFAULT_ATOL",
    "SpinState",
    "basis_index",
    "basis_state",
    "tensor3",
    "expectation",
    "apply",
    "inner_product",
    "fidelity",
    "equal_up_to_phase",
    "is_hermitian",
    "is_unitary",
]


def _as_operator(op) -> np.ndarray:
    mat = np.asarray(op, dtype=complex)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"operator must be a square matrix, got shape {mat.shape}")
    return mat


def is_hermitian(op, atol: float = HERMITIAN_ATOL) -> bool:
    """True if ``op`` equals its conjugate transpose within ``atol``."""
    mat = _as_operator(op)
    return bool(np.max(np.abs(mat - mat.conj().T)) <= atol)


def is_unitary(op, atol: float = UNITARY_ATOL) -> bool:
    """True if ``op . op^dagger`` is the identity within ``atol``."""
    mat = _as_operator(op)
    eye = np.eye(mat.shape[0])
    return bool(np.max(np.abs(mat.conj().T @ mat - eye)) <= atol)


class SpinState:
    """Normalized pure state of ``qubit_count`` spin-1/2 particles.

    Parameters
    ----------
    amplitudes:
        Complex amplitudes over the computational basis.  The length must
        be a power of two and the vector must already have unit norm
        within ``atol`` (use :meth:`normalized` to rescale raw data).
    """

    __slots__ = ("amplitudes", "qubit_count")

    def __init__(self, amplitudes, atol: float = DEFAULT_ATOL):
        amps = np.array(amplitudes, dtype=complex).reshape(-1)
        if not np.all(np.isfinite(amps.view(float))):
            raise ValueError("state amplitudes must be finite")
        n = int(amps.size).bit_length() - 1
        if 2**n != amps.size or amps.size < 2:
            raise ValueError(f"amplitude count {amps.size} is not a power of two")
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > atol:
            raise ValueError(f"state norm {norm!r} deviates from 1 by more than {atol}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "qubit_count", n)

    def __setattr__(self, name, value):
        raise AttributeError("SpinState is immutable")

    def __repr__(self):
        return f"SpinState(qubits={self.qubit_count}, amplitudes={self.amplitudes!r})"

    @classmethod
    def normalized(cls, amplitudes) -> "SpinState":
        """Build a state from raw amplitudes, rescaling to unit norm."""
        amps = np.asarray(amplitudes, dtype=complex).reshape(-1)
        norm = np.linalg.norm(amps)
        if norm == 0:
            raise ValueError("cannot normalize the zero vector")
        return cls(amps / norm)

    @property
    def dim(self) -> int:
        return self.amplitudes.size


def basis_index(label: str) -> int:
    """Index of a product basis ket given as a string of ``+``/``-`` signs."""
    index = 0
    for ch in label:
        if ch not in "+-":
            raise ValueError(f"basis label may only contain '+' and '-', got {label!r}")
        index = 2 * index + (ch == "-")
    return index


def basis_state(label: str) -> SpinState:
    """Product basis ket, e.g. ``basis_state('++-')``."""
    amps = np.zeros(2 ** len(label), dtype=complex)
    amps[basis_index(label)] = 1.0
    return SpinState(amps)


def tensor3(a, b, c) -> np.ndarray:
    """Kronecker product of three single-qubit operators, qubit 1 most significant."""
    ops = [_as_operator(m) for m in (a, b, c)]
    for m in ops:
        if m.shape != (2, 2):
            raise ValueError(f"tensor3 expects 2x2 factors, got shape {m.shape}")
    return np.kron(np.kron(ops[0], ops[1]), ops[2])


def expectation(state: SpinState, op, atol: float = DEFAULT_ATOL) -> float:
    """Real expectation value ``<psi|op|psi>`` of a Hermitian operator.

    Raises if ``op`` is not Hermitian, if dimensions do not match, or if
    the raw value carries an imaginary part above ``atol`` (which would
    indicate a numerically broken operator).
    """
    mat = _as_operator(op)
    if mat.shape[0] != state.dim:
        raise ValueError(f"operator dim {mat.shape[0]} does not match state dim {state.dim}")
    if not is_hermitian(mat):
        raise ValueError("expectation requires a Hermitian operator")
    value = complex(np.vdot(state.amplitudes, mat @ state.amplitudes))
    if abs(value.imag) >= atol:
        raise ArithmeticError(f"expectation of Hermitian operator has imaginary part {value.imag!r}")
    return value.real


def _apply_factors(factors: Sequence[np.ndarray], state: SpinState) -> np.ndarray:
    psi = state.amplitudes.reshape((2,) * state.qubit_count)
    for axis, mat in enumerate(factors):
        psi = np.moveaxis(np.tensordot(mat, psi, axes=([1], [axis])), 0, axis)
    return psi.reshape(-1)


def apply(op, state: SpinState, atol: float = DEFAULT_ATOL) -> SpinState:
    """Apply an operator and return the resulting state.

    ``op`` is either a full 2**n x 2**n matrix or a sequence of n single
    qubit 2x2 matrices (one per qubit, qubit 1 first).  The result must
    come out normalized within ``atol``, so only norm-preserving
    (unitary) operators are accepted here.
    """
    if isinstance(op, np.ndarray) and op.ndim == 2:
        mat = _as_operator(op)
        if mat.shape[0] != state.dim:
            raise ValueError(f"operator dim {mat.shape[0]} does not match state dim {state.dim}")
        out = mat @ state.amplitudes
    else:
        factors = [_as_operator(m) for m in op]
        if len(factors) != state.qubit_count:
            raise ValueError(f"expected {state.qubit_count} per-qubit factors, got {len(factors)}")
        for m in factors:
            if m.shape != (2, 2):
                raise ValueError("per-qubit factors must be 2x2")
        out = _apply_factors(factors, state)
    return SpinState(out, atol=atol)


def inner_product(a: SpinState, b: SpinState) -> complex:
    """Inner product ``<a|b>`` with conjugation on ``a``."""
    if a.qubit_count != b.qubit_count:
        raise ValueError("inner product requires equal qubit counts")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def fidelity(a: SpinState, b: SpinState) -> float:
    """Overlap magnitude ``|<a|b>|``."""
    return abs(inner_product(a, b))


def equal_up_to_phase(a: SpinState, b: SpinState, atol: float = DEFAULT_ATOL) -> bool:
    """True if the states coincide up to a global phase."""
    return abs(fidelity(a, b) - 1.0) <= atol

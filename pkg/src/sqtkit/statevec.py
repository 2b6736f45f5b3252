"""Dense pure states of up to 12 qubits and the primitives built on them.

Bit ordering: qubit 0 is the most significant bit of the amplitude index, so
for n = 3 the amplitude at index 0b011 belongs to |011⟩ (qubit 0 in state 0,
qubits 1 and 2 in state 1). The receiver's qubit defaults to index n − 1.

Everything here is a pure function over immutable values; stored amplitude
arrays are marked read-only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    InvalidPermutation,
    NotNormalized,
    NotUnitary,
    TooManyQubits,
)

MAX_QUBITS = 12
NORM_TOL = 1e-9
UNITARY_TOL = 1e-12

IDENTITY2 = np.array([[1, 0], [0, 1]], dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
for _m in (IDENTITY2, PAULI_X, PAULI_Z):
    _m.flags.writeable = False


@dataclass(frozen=True, eq=False)
class StateVector:
    """Amplitude vector over 2**n basis states.

    Build through :func:`new_state`, which checks and renormalizes; the bare
    constructor only checks the shape and is meant for internal use on data
    that is already unit-norm.
    """

    n: int
    amps: np.ndarray

    def __post_init__(self):
        if not 1 <= self.n <= MAX_QUBITS:
            raise TooManyQubits(f"qubit count must be in 1..{MAX_QUBITS}, got {self.n}")
        amps = np.array(self.amps, dtype=complex).reshape(-1)
        if amps.size != 2**self.n:
            raise DimensionMismatch(
                f"expected {2 ** self.n} amplitudes for n={self.n}, got {amps.size}"
            )
        amps.flags.writeable = False
        object.__setattr__(self, "amps", amps)

    @property
    def dim(self) -> int:
        return 2**self.n

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def tensor_view(self) -> np.ndarray:
        """Read-only view shaped (2,)*n, one axis per qubit."""
        return self.amps.reshape((2,) * self.n)


def new_state(n: int, amps) -> StateVector:
    """Validate a raw amplitude vector and return it exactly renormalized.

    The norm must already be within 1e-9 of one; inputs further off are
    treated as genuinely unnormalized data and rejected.
    """
    sv = StateVector(n, amps)
    norm = sv.norm()
    if abs(norm - 1.0) > NORM_TOL:
        raise NotNormalized(f"state norm {norm} deviates from 1 by more than {NORM_TOL}")
    return StateVector(n, sv.amps / norm)


def basis_state(n: int, index: int) -> StateVector:
    """Computational basis ket whose bit pattern is `index` (qubit 0 = MSB)."""
    if not 0 <= index < 2**n:
        raise IndexOutOfRange(f"basis index {index} outside 0..{2 ** n - 1}")
    amps = np.zeros(2**n, dtype=complex)
    amps[index] = 1.0
    return StateVector(n, amps)


def check_qubit_index(n: int, q: int) -> None:
    if not 0 <= q < n:
        raise IndexOutOfRange(f"qubit {q} outside 0..{n - 1}")


def inner(x: StateVector, y: StateVector) -> complex:
    """⟨x|y⟩ with x conjugated."""
    if x.n != y.n:
        raise DimensionMismatch(f"qubit counts differ: {x.n} vs {y.n}")
    return complex(np.vdot(x.amps, y.amps))


def is_unitary(op: np.ndarray, tol: float = UNITARY_TOL) -> bool:
    op = np.asarray(op, dtype=complex)
    if op.shape != (2, 2):
        return False
    return bool(np.max(np.abs(op.conj().T @ op - IDENTITY2)) <= tol)


def apply_one_qubit(sv: StateVector, q: int, op: np.ndarray) -> StateVector:
    """Apply a unitary 2×2 operator to qubit q, leaving the others untouched."""
    check_qubit_index(sv.n, q)
    op = np.asarray(op, dtype=complex)
    if not is_unitary(op):
        raise NotUnitary("operator is not a unitary 2x2 matrix within 1e-12")
    psi = np.moveaxis(sv.tensor_view(), q, -1)
    out = psi @ op.T
    return StateVector(sv.n, np.moveaxis(out, -1, q).reshape(-1))


def permute_qubits(sv: StateVector, perm) -> StateVector:
    """Relabel qubits so that qubit i moves to position perm[i].

    Pure amplitude shuffling: composing with the inverse permutation restores
    the original array bit for bit.
    """
    perm = [int(p) for p in perm]
    if sorted(perm) != list(range(sv.n)):
        raise InvalidPermutation(f"{perm} is not a permutation of 0..{sv.n - 1}")
    # transpose places input axis axes[k] at output position k, so sending
    # qubit i to position perm[i] needs the inverse permutation as axes
    permuted = np.transpose(sv.tensor_view(), axes=np.argsort(perm))
    return StateVector(sv.n, np.ascontiguousarray(permuted).reshape(-1))


def move_to_last_perm(n: int, q: int) -> list[int]:
    """Permutation sending qubit q to position n − 1, keeping relative order."""
    check_qubit_index(n, q)
    return [n - 1 if i == q else (i - 1 if i > q else i) for i in range(n)]


def reduced_density_one(sv: StateVector, q: int) -> np.ndarray:
    """Single-qubit reduced density matrix: trace out every qubit except q.

    Returns a 2×2 Hermitian unit-trace complex matrix.
    """
    check_qubit_index(sv.n, q)
    m = np.moveaxis(sv.tensor_view(), q, 0).reshape(2, -1)
    rho = m @ m.conj().T
    return (rho + rho.conj().T) / 2.0


def tensor(x: StateVector, y: StateVector) -> StateVector:
    """Product state with x occupying the more-significant qubit positions."""
    if x.n + y.n > MAX_QUBITS:
        raise TooManyQubits(f"{x.n} + {y.n} qubits exceeds the {MAX_QUBITS}-qubit cap")
    return StateVector(x.n + y.n, np.kron(x.amps, y.amps))


def allclose_up_to_phase(x: StateVector, y: StateVector, tol: float = 1e-10) -> bool:
    """True when two unit states differ only by a global phase (within tol)."""
    if x.n != y.n:
        return False
    return bool(abs(abs(np.vdot(x.amps, y.amps)) - 1.0) <= tol)

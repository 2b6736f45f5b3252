"""Brute-force oracles shared by the test modules.

These deliberately avoid the package's vectorized code paths: the density
matrix is a double loop over basis states, and reconstruction reassembles a
Schmidt form from scratch, so each acts as an independent referee.
"""

import numpy as np

from sqtkit import StateVector, move_to_last_perm, permute_qubits


def brute_force_density(amps: np.ndarray, n: int, q: int) -> np.ndarray:
    """Single-qubit density matrix by explicit summation of outer products."""
    bit = n - 1 - q
    mask = 1 << bit
    rho = np.zeros((2, 2), dtype=complex)
    for i in range(2**n):
        for j in range(2**n):
            if (i & ~mask) == (j & ~mask):
                rho[(i >> bit) & 1, (j >> bit) & 1] += amps[i] * np.conj(amps[j])
    return rho


def brute_force_concurrence(sv: StateVector, bob: int) -> float:
    rho = brute_force_density(sv.amps, sv.n, bob)
    det = (rho[0, 0] * rho[1, 1] - rho[0, 1] * rho[1, 0]).real
    return float(2.0 * np.sqrt(max(det, 0.0)))


def reconstruct_form(form, n: int, bob: int) -> np.ndarray:
    """Reassemble coeff0·branch0⊗U|0⟩ + coeff1·branch1⊗U|1⟩ with the receiver
    moved back to its original position; returns the amplitude vector."""
    u = form.receiver_basis
    joined = form.coeff0 * np.kron(form.branch0.amps, u[:, 0]) + form.coeff1 * np.kron(
        form.branch1.amps, u[:, 1]
    )
    perm = move_to_last_perm(n, bob)
    return permute_qubits(StateVector(n, joined), np.argsort(perm)).amps


def reconstruct_split(split, n: int, bob: int) -> np.ndarray:
    """Reassemble A·branch0⊗|0⟩ + B·branch1⊗|1⟩ (computational receiver basis)."""
    dim = 2 ** (n - 1)
    b0 = split.branch0.amps if split.branch0 is not None else np.zeros(dim, dtype=complex)
    b1 = split.branch1.amps if split.branch1 is not None else np.zeros(dim, dtype=complex)
    joined = split.weight0 * np.kron(b0, [1, 0]) + split.weight1 * np.kron(b1, [0, 1])
    perm = move_to_last_perm(n, bob)
    return permute_qubits(StateVector(n, joined), np.argsort(perm)).amps

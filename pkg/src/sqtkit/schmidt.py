"""Receiver-vs-rest Schmidt analysis of a pure resource state.

Splitting an n-qubit resource by the receiver's qubit gives

    |E⟩ = A·|ψ0⟩|0⟩ + B·|ψ1⟩|1⟩,        K = ⟨ψ1|ψ0⟩,

with A, B ≥ 0 and |ψ0⟩, |ψ1⟩ normalized but in general not orthogonal. A
rotated receiver basis |0̄⟩ = U|0⟩, |1̄⟩ = U|1⟩ with

    U(z) = (1 + |z|²)^(−1/2) · [[1, −z*], [z, 1]]

recasts the same state as |E⟩ = Ā·|ψ̄0⟩|0̄⟩ + B̄·|ψ̄1⟩|1̄⟩ where the rotated
branches are Ā·|ψ̄0⟩ ∝ A|ψ0⟩ + Bz*|ψ1⟩ and B̄·|ψ̄1⟩ ∝ B|ψ1⟩ − Az|ψ0⟩.
Requiring ⟨ψ̄1|ψ̄0⟩ = 0 makes z a root of

    A·B·K·z² + (A² − B²)·z − A·B·K* = 0,

whose discriminant (A² − B²)² + 4A²B²|K|² is real and nonnegative, and
normalization fixes

    Ā = (1 + |z|²)^(−1/2) · [A² + B²|z|² + A·B·(Kz + K*z*)]^(1/2)

with the analogous B̄ carrying the opposite sign, so Ā² + B̄² = 1. This is a
rank-2 Schmidt decomposition: the bipartite concurrence between the
receiver's qubit and the rest is C = 2ĀB̄, and the maximal average fidelity
of teleporting one qubit over the resource is (2 + C)/3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import OutOfRange, WrongQubitCount
from .statevec import (
    PAULI_X,
    StateVector,
    check_qubit_index,
    inner,
    move_to_last_perm,
    permute_qubits,
    reduced_density_one,
)

# Branch weight below this counts as an absent branch; block overlap below it
# counts as already orthogonal (z = 0 then leaves a residual ≪ 1e-10).
DEGENERATE_TOL = 1e-12
OVERLAP_TOL = 1e-14


@dataclass(frozen=True, eq=False)
class BipartiteSplit:
    """Receiver-qubit split A·|branch0⟩|0⟩ + B·|branch1⟩|1⟩ of a resource.

    weight0 and weight1 are the nonnegative block norms; branches whose
    weight falls below 1e-12 are stored as None and the overlap defaults
    to 0. The block phases stay inside the branch vectors, which keeps the
    weights real.
    """

    weight0: float
    weight1: float
    branch0: StateVector | None
    branch1: StateVector | None
    overlap: complex


@dataclass(frozen=True, eq=False)
class SchmidtForm:
    """Orthogonal decomposition coeff0·|branch0⟩|0̄⟩ + coeff1·|branch1⟩|1̄⟩.

    coeff0 ≥ coeff1 ≥ 0, the branches are orthonormal, concurrence equals
    2·coeff0·coeff1, and receiver_basis is the 2×2 unitary whose columns are
    |0̄⟩ and |1̄⟩. Splits that need the branch order swapped are reachable
    only as the z → ∞ limit of the rotation family, so for them
    receiver_basis composes the z-rotation with a basis swap and z stays at
    the finite root (0 in the degenerate cases).
    """

    coeff0: float
    coeff1: float
    z: complex
    branch0: StateVector
    branch1: StateVector
    concurrence: float
    receiver_basis: np.ndarray


def split_by_receiver(sv: StateVector, bob: int) -> BipartiteSplit:
    """Split a resource by the receiver's qubit (moved internally to the
    least-significant position; branch vectors keep the remaining qubits in
    their original relative order)."""
    if sv.n < 2:
        raise WrongQubitCount(f"resource must have at least 2 qubits, got {sv.n}")
    check_qubit_index(sv.n, bob)
    moved = permute_qubits(sv, move_to_last_perm(sv.n, bob))
    blocks = moved.amps.reshape(-1, 2)
    w0 = float(np.linalg.norm(blocks[:, 0]))
    w1 = float(np.linalg.norm(blocks[:, 1]))
    branch0 = StateVector(sv.n - 1, blocks[:, 0] / w0) if w0 > DEGENERATE_TOL else None
    branch1 = StateVector(sv.n - 1, blocks[:, 1] / w1) if w1 > DEGENERATE_TOL else None
    if branch0 is not None and branch1 is not None:
        overlap = inner(branch1, branch0)
    else:
        overlap = 0j
    return BipartiteSplit(w0, w1, branch0, branch1, overlap)


def rotation_candidates(split: BipartiteSplit) -> tuple[complex, complex]:
    """Both admissible receiver-basis rotations for a split.

    Roots of A·B·K·z² + (A² − B²)·z − A·B·K* = 0, evaluated in the
    cancellation-free order: the larger-magnitude root from the quadratic
    formula, the other from the root product −K*/K. Degenerate splits
    (absent branch or K ≈ 0) return (0, 0).
    """
    k = split.overlap
    ab = split.weight0 * split.weight1
    if split.weight0 < DEGENERATE_TOL or split.weight1 < DEGENERATE_TOL or abs(k) < OVERLAP_TOL:
        return (0j, 0j)
    mid = split.weight0**2 - split.weight1**2
    disc = math.sqrt(mid * mid + 4.0 * ab * ab * abs(k) ** 2)
    q = -(mid + math.copysign(disc, mid)) / 2.0 if mid != 0.0 else -disc / 2.0
    z1 = q / (ab * k)
    z2 = -ab * k.conjugate() / q
    return (complex(z1), complex(z2))


def _coeff0_sq(split: BipartiteSplit, z: complex) -> float:
    """Ā² for a given rotation, via the closed normalization formula."""
    a2 = split.weight0**2
    b2 = split.weight1**2
    cross = 2.0 * (split.overlap * z).real
    return (a2 + b2 * abs(z) ** 2 + split.weight0 * split.weight1 * cross) / (1.0 + abs(z) ** 2)


def solve_rotation(split: BipartiteSplit) -> complex:
    """The rotation that orthogonalizes the branches, canonically chosen.

    Prefers the root whose coefficients come out ordered (Ā ≥ B̄); remaining
    ties go to nonnegative real part, then nonnegative imaginary part.
    """
    z1, z2 = rotation_candidates(split)
    if z1 == z2:
        return z1
    c1 = _coeff0_sq(split, z1)
    c2 = _coeff0_sq(split, z2)
    if abs(c1 - c2) > 1e-14:
        return z1 if c1 > c2 else z2
    return max((z1, z2), key=lambda z: (z.real >= 0.0, z.imag >= 0.0))


def rotation_matrix(z: complex) -> np.ndarray:
    """Receiver-basis unitary U(z); columns are |0̄⟩ = U|0⟩ and |1̄⟩ = U|1⟩."""
    c = 1.0 / math.sqrt(1.0 + abs(z) ** 2)
    return np.array([[c, -c * z.conjugate()], [c * z, c]], dtype=complex)


def _orthogonal_filler(present: StateVector) -> StateVector:
    """Some unit vector orthogonal to `present` (needs dim ≥ 2)."""
    amps = present.amps
    j = int(np.argmin(np.abs(amps)))
    v = -amps * np.conj(amps[j])
    v[j] += 1.0
    return StateVector(present.n, v / np.linalg.norm(v))


def schmidt_form(sv: StateVector, bob: int) -> SchmidtForm:
    """Orthogonal receiver-basis decomposition of a resource state.

    Reassembling coeff0·branch0⊗(U|0⟩) + coeff1·branch1⊗(U|1⟩), with the
    receiver back at its original position, reproduces the input state.
    """
    split = split_by_receiver(sv, bob)
    z = solve_rotation(split)
    u = rotation_matrix(z)
    if split.branch1 is None:
        c0, b0 = split.weight0, split.branch0
        c1, b1 = split.weight1, _orthogonal_filler(split.branch0)
    elif split.branch0 is None:
        c0, b0 = split.weight0, _orthogonal_filler(split.branch1)
        c1, b1 = split.weight1, split.branch1
    elif abs(split.overlap) < OVERLAP_TOL:
        c0, b0, c1, b1 = split.weight0, split.branch0, split.weight1, split.branch1
    else:
        scale = math.sqrt(1.0 + abs(z) ** 2)
        raw0 = split.weight0 * split.branch0.amps + split.weight1 * z.conjugate() * split.branch1.amps
        raw1 = split.weight1 * split.branch1.amps - split.weight0 * z * split.branch0.amps
        n0 = float(np.linalg.norm(raw0))
        n1 = float(np.linalg.norm(raw1))
        if n1 / scale < DEGENERATE_TOL:
            # Rotated basis exposes a product state; keep the exact filler
            # direction instead of a noise-dominated quotient.
            c0, b0 = n0 / scale, StateVector(sv.n - 1, raw0 / n0)
            c1, b1 = n1 / scale, _orthogonal_filler(b0)
        elif n0 / scale < DEGENERATE_TOL:
            c1, b1 = n1 / scale, StateVector(sv.n - 1, raw1 / n1)
            c0, b0 = n0 / scale, _orthogonal_filler(b1)
        else:
            c0, b0 = n0 / scale, StateVector(sv.n - 1, raw0 / n0)
            c1, b1 = n1 / scale, StateVector(sv.n - 1, raw1 / n1)
    if c1 > c0:
        c0, c1, b0, b1 = c1, c0, b1, b0
        u = u @ PAULI_X
    u = np.ascontiguousarray(u)
    u.flags.writeable = False
    return SchmidtForm(c0, c1, complex(z), b0, b1, 2.0 * c0 * c1, u)


def concurrence(sv: StateVector, bob: int) -> float:
    """Bipartite concurrence 2·Ā·B̄ between qubit `bob` and the rest."""
    return schmidt_form(sv, bob).concurrence


def concurrence_via_density(sv: StateVector, bob: int) -> float:
    """Concurrence from the receiver's reduced density matrix, 2·√det ρ.

    Independent of the rotation route; used to cross-check it.
    """
    rho = reduced_density_one(sv, bob)
    det = float((rho[0, 0] * rho[1, 1] - rho[0, 1] * rho[1, 0]).real)
    return 2.0 * math.sqrt(max(det, 0.0))


def maf(concurrence: float) -> float:
    """Maximal average teleportation fidelity (2 + C)/3 for concurrence C."""
    if not -1e-12 <= concurrence <= 1.0 + 1e-12:
        raise OutOfRange(f"concurrence must lie in [0, 1], got {concurrence}")
    return (2.0 + min(max(concurrence, 0.0), 1.0)) / 3.0

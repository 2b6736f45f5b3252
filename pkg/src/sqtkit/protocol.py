"""End-to-end simulation of teleporting one qubit over an n-qubit resource.

The sender measures the information qubit together with her n − 1 resource
qubits in a four-element orthonormal basis built from the resource's Schmidt
branches, sends the 2-bit outcome, and the receiver applies the matching
correction (U† first, then σz and/or σx). The closed-form outcome table and
the explicit projection simulation are implemented separately so each can be
checked against the other, and a seeded Monte Carlo estimator averages the
fidelity over Haar-random information qubits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotNormalized, OutOfRange
from .schmidt import SchmidtForm, schmidt_form
from .statevec import (
    PAULI_X,
    PAULI_Z,
    StateVector,
    apply_one_qubit,
    inner,
    move_to_last_perm,
    permute_qubits,
    tensor,
)

CORRECTION_LABELS = ("U†", "σzU†", "σxU†", "σxσzU†")


@dataclass(frozen=True)
class InfoQubit:
    """Single-qubit information state amp0·|0⟩ + amp1·|1⟩."""

    amp0: complex
    amp1: complex

    def __post_init__(self):
        amp0, amp1 = complex(self.amp0), complex(self.amp1)
        norm_sq = abs(amp0) ** 2 + abs(amp1) ** 2
        if abs(norm_sq - 1.0) > 1e-10:
            raise NotNormalized(f"|amp0|² + |amp1|² = {norm_sq} is not 1")
        norm = math.sqrt(norm_sq)
        object.__setattr__(self, "amp0", amp0 / norm)
        object.__setattr__(self, "amp1", amp1 / norm)

    def as_state(self) -> StateVector:
        return StateVector(1, np.array([self.amp0, self.amp1]))


@dataclass(frozen=True, eq=False)
class MeasurementBasis:
    """Four orthonormal sender states over (information qubit, n−1 resource qubits)."""

    states: tuple[StateVector, StateVector, StateVector, StateVector]


@dataclass(frozen=True, eq=False)
class OutcomeRecord:
    """One sender outcome: probability, the receiver's collapsed qubit, the
    correction to apply, and the fidelity it achieves."""

    outcome: int
    prob: float
    bob_state: StateVector
    correction: str
    fidelity: float


@dataclass(frozen=True, eq=False)
class TeleportResult:
    """Record of a single simulated teleportation run."""

    record: OutcomeRecord
    final_state: StateVector


@dataclass(frozen=True)
class McEstimate:
    """Monte Carlo mean with its standard error."""

    mean: float
    stderr: float
    samples: int


def measurement_basis(form: SchmidtForm) -> MeasurementBasis:
    """Sender measurement basis built from the Schmidt branches:
    Ψ(0,1) = (|0⟩|branch0⟩ ± |1⟩|branch1⟩)/√2 and
    Ψ(2,3) = (|0⟩|branch1⟩ ± |1⟩|branch0⟩)/√2."""
    b0 = form.branch0.amps
    b1 = form.branch1.amps
    s = math.sqrt(0.5)
    n = form.branch0.n + 1
    states = tuple(
        StateVector(n, s * np.concatenate([top, bottom]))
        for top, bottom in ((b0, b1), (b0, -b1), (b1, b0), (b1, -b0))
    )
    return MeasurementBasis(states)


def correction_matrix(outcome: int, receiver_basis: np.ndarray) -> np.ndarray:
    """Receiver correction for an outcome: U†, then σz for outcomes 1 and 3,
    then σx for outcomes 2 and 3."""
    if not 0 <= outcome <= 3:
        raise OutOfRange(f"outcome must be 0..3, got {outcome}")
    m = receiver_basis.conj().T
    if outcome in (1, 3):
        m = PAULI_Z @ m
    if outcome in (2, 3):
        m = PAULI_X @ m
    return m


def _fidelity_from(numerator: float, prob: float) -> float:
    # Outcomes of probability zero never occur; report fidelity 0 for them.
    if prob <= 1e-30:
        return 0.0
    return float(numerator**2 / (2.0 * prob))


def outcome_table(info: InfoQubit, form: SchmidtForm) -> list[OutcomeRecord]:
    """Closed-form table of the four outcomes.

    With weights (p, 1−p) = (|amp0|², |amp1|²) and coefficients (Ā, B̄):
    P(0) = P(1) = ½(p·Ā² + (1−p)·B̄²), P(2) = P(3) = ½((1−p)·Ā² + p·B̄²);
    the collapsed receiver states carry amplitudes (amp0·Ā, ±amp1·B̄) or
    (amp1·Ā, ±amp0·B̄) in the rotated basis, and after correction the
    fidelity is (p·Ā + (1−p)·B̄)²/(2P(0)) for outcomes 0, 1 and its mirror
    for 2, 3.
    """
    a, b = info.amp0, info.amp1
    pa, pb = abs(a) ** 2, abs(b) ** 2
    ca, cb = form.coeff0, form.coeff1
    u = form.receiver_basis
    p01 = 0.5 * (pa * ca**2 + pb * cb**2)
    p23 = 0.5 * (pb * ca**2 + pa * cb**2)
    f01 = _fidelity_from(pa * ca + pb * cb, p01)
    f23 = _fidelity_from(pb * ca + pa * cb, p23)
    rotated_coeffs = (
        (a * ca, b * cb, p01, f01),
        (a * ca, -b * cb, p01, f01),
        (b * ca, a * cb, p23, f23),
        (b * ca, -a * cb, p23, f23),
    )
    records = []
    for r, (top, bottom, prob, fid) in enumerate(rotated_coeffs):
        coeffs = np.array([top, bottom], dtype=complex)
        norm = np.linalg.norm(coeffs)
        if norm > 1e-15:
            bob = StateVector(1, u @ (coeffs / norm))
        else:
            bob = StateVector(1, u[:, 0].copy())
        records.append(OutcomeRecord(r, float(prob), bob, CORRECTION_LABELS[r], fid))
    return records


def _draw_outcome(probs: np.ndarray, rng: np.random.Generator) -> int:
    """Sample an index from unnormalized Born weights by cumulative inversion."""
    edges = np.cumsum(probs)
    r = int(np.searchsorted(edges, rng.uniform(0.0, edges[-1]), side="right"))
    return min(r, probs.size - 1)


def run_teleport(info: InfoQubit, resource: StateVector, bob: int, seed=0) -> TeleportResult:
    """Simulate one run: project the joint state onto a sampled measurement
    outcome, collapse the receiver's qubit, and apply the labeled correction.

    The outcome is drawn from the exact Born probabilities with a seeded
    generator, so identical arguments reproduce identical runs.
    """
    form = schmidt_form(resource, bob)
    basis = measurement_basis(form)
    joint = tensor(info.as_state(), resource)
    moved = permute_qubits(joint, move_to_last_perm(joint.n, bob + 1))
    blocks = moved.amps.reshape(-1, 2)
    proj = np.array([s.amps.conj() @ blocks for s in basis.states])
    probs = np.sum(np.abs(proj) ** 2, axis=1)
    rng = np.random.default_rng(seed)
    r = _draw_outcome(probs, rng)
    collapsed = StateVector(1, proj[r] / math.sqrt(probs[r]))
    final = apply_one_qubit(collapsed, 0, correction_matrix(r, form.receiver_basis))
    fidelity = float(abs(inner(info.as_state(), final)) ** 2)
    record = OutcomeRecord(r, float(probs[r]), collapsed, CORRECTION_LABELS[r], fidelity)
    return TeleportResult(record, final)


def haar_info_samples(count: int, rng=None) -> np.ndarray:
    """(count, 2) array of Haar-random qubit amplitude pairs.

    Two independent complex Gaussians per row, normalized; this is the same
    sampler :func:`haar_random_info` and :func:`average_fidelity_mc` use.
    """
    if count < 1:
        raise OutOfRange(f"count must be ≥ 1, got {count}")
    gen = np.random.default_rng(rng)
    raw = gen.standard_normal((count, 2)) + 1j * gen.standard_normal((count, 2))
    return raw / np.linalg.norm(raw, axis=1, keepdims=True)


def haar_random_info(rng=None) -> InfoQubit:
    """One Haar-random information qubit."""
    pair = haar_info_samples(1, rng)[0]
    return InfoQubit(complex(pair[0]), complex(pair[1]))


def average_fidelity_mc(resource: StateVector, bob: int, samples: int, seed=0) -> McEstimate:
    """Monte Carlo estimate of the average teleportation fidelity.

    Samples Haar-random information qubits and averages the already-summed
    outcome-weighted fidelity, which for weights (p, 1−p) = (|amp0|², |amp1|²)
    is Σ_r P(r)·F(r) = (p·Ā + (1−p)·B̄)² + ((1−p)·Ā + p·B̄)². Only the
    information state is sampled; the sum over outcomes is exact.
    """
    if samples < 1:
        raise OutOfRange(f"samples must be ≥ 1, got {samples}")
    form = schmidt_form(resource, bob)
    pairs = haar_info_samples(samples, seed)
    pa = np.abs(pairs[:, 0]) ** 2
    pb = 1.0 - pa
    ca, cb = form.coeff0, form.coeff1
    values = (pa * ca + pb * cb) ** 2 + (pb * ca + pa * cb) ** 2
    mean = float(values.mean())
    stderr = float(values.std(ddof=1) / math.sqrt(samples)) if samples > 1 else 0.0
    return McEstimate(mean, stderr, samples)

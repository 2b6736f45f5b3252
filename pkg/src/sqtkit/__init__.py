"""Schmidt-form analysis and protocol simulation of n-qubit teleportation
resources: receiver-vs-rest decomposition, concurrence, the (2+C)/3 maximal
average fidelity, perfect-teleportation conditions, named state families,
and a full measurement-and-correction simulation to cross-check it all.
"""

from .conditions import (
    AcinAltReport,
    PerfectVerdict,
    ZhaReport,
    check_3qubit,
    check_general,
    classify_acin_alt,
    classify_zha,
)
from .errors import (
    ConstraintViolated,
    DimensionMismatch,
    IndexOutOfRange,
    InvalidDocument,
    InvalidPermutation,
    NotNormalized,
    NotUnitary,
    OutOfRange,
    SqtError,
    TooManyQubits,
    WrongQubitCount,
)
from .families import (
    acin_alternative,
    acin_canonical,
    ghz,
    random_state,
    schmidt_branch_family,
    separable_branch_family,
    w_general,
    zha_counterexample,
)
from .protocol import (
    CORRECTION_LABELS,
    InfoQubit,
    McEstimate,
    MeasurementBasis,
    OutcomeRecord,
    TeleportResult,
    average_fidelity_mc,
    correction_matrix,
    haar_info_samples,
    haar_random_info,
    measurement_basis,
    outcome_table,
    run_teleport,
)
from .schmidt import (
    BipartiteSplit,
    SchmidtForm,
    concurrence,
    concurrence_via_density,
    maf,
    rotation_candidates,
    rotation_matrix,
    schmidt_form,
    solve_rotation,
    split_by_receiver,
)
from .statevec import (
    IDENTITY2,
    MAX_QUBITS,
    PAULI_X,
    PAULI_Z,
    StateVector,
    allclose_up_to_phase,
    apply_one_qubit,
    basis_state,
    inner,
    move_to_last_perm,
    new_state,
    permute_qubits,
    reduced_density_one,
    tensor,
)

__version__ = "0.1.0"

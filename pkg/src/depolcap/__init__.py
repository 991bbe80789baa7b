"""Classical mutual information of two-qubit signals sent through a
memoryless depolarising channel."""

from .channels import KrausChannel, apply, apply_n, depolarising, error_probability, kraus_map, pauli_channel
from .info import (
    MutualInformationReport,
    i2_max,
    mutual_information,
    one_shot_capacity,
    output_spectrum_closed_form,
    von_neumann_entropy,
)
from .linalg import SpectrumResult, hermitian_eigenvalues, partial_trace, tensor
from .optimize import locate_extrema, sample_random_ensembles, scan_theta, stationarity_residual
from .states import (
    BlochDecomposition,
    Ensemble,
    SignalState,
    bloch_decompose,
    density_matrix,
    entanglement_entropy,
    figure1_ensemble,
    schmidt_decompose,
    schmidt_state,
)

__version__ = "0.1.0"

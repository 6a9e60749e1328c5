"""Exact and brute-force dynamics of two dephasing qubit-oscillator pairs
coupled through their oscillators."""

__version__ = "0.1.0"

from .analytic import (
    BASIS,
    COHERENCE_LABELS,
    CoherencePhaseTerms,
    ModeAmplitudes,
    OverlapSpec,
    TransformedAmplitudes,
    density_matrix_series,
    dephasing_factor,
    displaced_amplitudes,
    mode_decoherence_exponent,
    phase_terms,
    purity_closed_form,
    qubit_density_matrix,
    squeezed_overlap,
)
from .chain import transformation_chain_check
from .errors import (
    ConfigError,
    CutoffTooSmall,
    DomainError,
    InvalidState,
    QodimerError,
    StabilityError,
    StepTooLarge,
    UnknownLabel,
)
from .evolve import lindblad_evolve, reduced_qubit_series
from .fock import (
    TruncatedSpace,
    build_hamiltonian,
    coherent_state,
    initial_state,
    partial_trace_modes,
    spectrum_gaps,
)
from .measures import concurrence, eof, purity
from .params import DerivedParams, ModelParams, Variant, derive, validate
from .timeseries import TimeSeries

__all__ = [
    "BASIS",
    "COHERENCE_LABELS",
    "CoherencePhaseTerms",
    "ConfigError",
    "CutoffTooSmall",
    "DerivedParams",
    "DomainError",
    "InvalidState",
    "ModeAmplitudes",
    "ModelParams",
    "OverlapSpec",
    "QodimerError",
    "StabilityError",
    "StepTooLarge",
    "TimeSeries",
    "TransformedAmplitudes",
    "TruncatedSpace",
    "UnknownLabel",
    "Variant",
    "build_hamiltonian",
    "coherent_state",
    "concurrence",
    "density_matrix_series",
    "dephasing_factor",
    "derive",
    "displaced_amplitudes",
    "eof",
    "initial_state",
    "lindblad_evolve",
    "mode_decoherence_exponent",
    "partial_trace_modes",
    "phase_terms",
    "purity",
    "purity_closed_form",
    "qubit_density_matrix",
    "reduced_qubit_series",
    "spectrum_gaps",
    "squeezed_overlap",
    "transformation_chain_check",
    "validate",
]

"""Entropic and geometric correlation measures for two-qubit Bell-diagonal states."""

__version__ = "0.1.0"

from discord_lab.states import (
    BellDiagonalState,
    InvalidStateError,
    bell_eigenvalues,
    bloch_components,
    eigenvalues_hermitian,
    kron,
    partial_trace,
    pauli,
    to_density_matrix,
    validate_density_matrix,
    von_neumann_entropy,
)
from discord_lab.entropic import (
    ConditionalEnsemble,
    EntropicReport,
    MeasurementDirection,
    classical_correlation_bd,
    classical_correlation_optimized,
    conditional_entropy,
    discord_bd,
    discord_general,
    induced_mutual_information,
    measure_branch,
    measured_conditional_entropy,
    mutual_information,
)
from discord_lab.geometric import (
    GeometricReport,
    geometric_classical_bd,
    geometric_discord_bd,
    geometric_discord_oracle,
    geometric_report,
    hs_distance_sq,
    nonselective_measurement,
)
from discord_lab.dominance import (
    CorrelationReport,
    DominanceClass,
    FamilyPoint,
    SampleSummary,
    classify,
    correlation_report,
    family_point,
    grid_fraction,
    inside_tetrahedron,
    monte_carlo_sample,
    monte_carlo_summary,
    sample_tetrahedron,
    sweep_family,
)

__all__ = [
    "BellDiagonalState",
    "ConditionalEnsemble",
    "CorrelationReport",
    "DominanceClass",
    "EntropicReport",
    "FamilyPoint",
    "GeometricReport",
    "InvalidStateError",
    "MeasurementDirection",
    "SampleSummary",
    "bell_eigenvalues",
    "bloch_components",
    "classical_correlation_bd",
    "classical_correlation_optimized",
    "classify",
    "conditional_entropy",
    "correlation_report",
    "discord_bd",
    "discord_general",
    "eigenvalues_hermitian",
    "family_point",
    "geometric_classical_bd",
    "geometric_discord_bd",
    "geometric_discord_oracle",
    "geometric_report",
    "grid_fraction",
    "hs_distance_sq",
    "induced_mutual_information",
    "inside_tetrahedron",
    "kron",
    "measure_branch",
    "measured_conditional_entropy",
    "monte_carlo_sample",
    "monte_carlo_summary",
    "mutual_information",
    "nonselective_measurement",
    "partial_trace",
    "pauli",
    "sample_tetrahedron",
    "sweep_family",
    "to_density_matrix",
    "validate_density_matrix",
    "von_neumann_entropy",
]

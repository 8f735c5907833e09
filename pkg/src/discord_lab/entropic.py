"""Entropic correlation measures: total, classical and quantum.

The general definitions work on any two-qubit density matrix via projective
measurements on subsystem A; the ``*_bd`` functions are the Bell-diagonal
closed forms.  All values are in bits.
"""
from dataclasses import dataclass

import numpy as np

from discord_lab import kernels
from discord_lab._optimize import ANGLE_TOL, MIN_PHI_GRID, MIN_THETA_GRID, minimize_over_directions
from discord_lab.states import (
    BellDiagonalState,
    as_bell_state,
    bloch_components,
    kron,
    partial_trace,
    pauli,
    validate_density_matrix,
    von_neumann_entropy,
)

_TWO_PI = 2.0 * np.pi
_P_FLOOR = 1e-14


@dataclass(frozen=True)
class MeasurementDirection:
    """Unit Bloch vector (theta, phi) defining a projective measurement axis."""

    theta: float
    phi: float

    def __post_init__(self):
        theta = float(self.theta)
        if not 0.0 <= theta <= np.pi:
            raise ValueError(f"theta must lie in [0, pi], got {theta}")
        phi = float(self.phi) % _TWO_PI
        if phi >= _TWO_PI:
            phi = 0.0
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi)

    def bloch_vector(self) -> np.ndarray:
        st = np.sin(self.theta)
        return np.array([st * np.cos(self.phi), st * np.sin(self.phi), np.cos(self.theta)])


@dataclass(frozen=True)
class ConditionalEnsemble:
    """Measurement outcome probabilities and conditioned states of B."""

    branches: tuple[tuple[float, np.ndarray], ...]


@dataclass(frozen=True)
class EntropicReport:
    """Total, classical and quantum correlation of one state, in bits."""

    mutual_info: float
    classical: float
    discord: float
    optimal_direction: MeasurementDirection | None = None


def mutual_information(rho: np.ndarray) -> float:
    """S(rho_A) + S(rho_B) - S(rho_AB): the total correlation in bits."""
    validate_density_matrix(rho, dim=4)
    return (
        von_neumann_entropy(partial_trace(rho, "A"))
        + von_neumann_entropy(partial_trace(rho, "B"))
        - von_neumann_entropy(rho)
    )


def conditional_entropy(rho: np.ndarray) -> float:
    """S(rho_AB) - S(rho_A); may be negative for entangled states."""
    validate_density_matrix(rho, dim=4)
    return von_neumann_entropy(rho) - von_neumann_entropy(partial_trace(rho, "A"))


def _projectors(d: MeasurementDirection) -> tuple[np.ndarray, np.ndarray]:
    n = d.bloch_vector()
    nsig = n[0] * pauli(1) + n[1] * pauli(2) + n[2] * pauli(3)
    eye = pauli(0)
    return 0.5 * (eye + nsig), 0.5 * (eye - nsig)


def measure_branch(rho: np.ndarray, d: MeasurementDirection) -> ConditionalEnsemble:
    """Projectively measure qubit A along d.

    Returns the two outcome branches (p_i, rho_B|i).  Branches with
    probability below 1e-14 are reported as (0, I/2) so they never affect
    a weighted sum.
    """
    validate_density_matrix(rho, dim=4)
    eye = pauli(0)
    branches = []
    for proj in _projectors(d):
        big = kron(proj, eye)
        unnorm = big @ rho @ big
        p = float(np.trace(unnorm).real)
        if p < _P_FLOOR:
            branches.append((0.0, eye / 2.0))
        else:
            branches.append((p, partial_trace(unnorm, "B") / p))
    return ConditionalEnsemble(branches=tuple(branches))


def measured_conditional_entropy(rho: np.ndarray, d: MeasurementDirection) -> float:
    """Outcome-weighted entropy of B after measuring A along d."""
    ens = measure_branch(rho, d)
    return sum(p * von_neumann_entropy(b) for p, b in ens.branches if p > 0.0)


def induced_mutual_information(rho: np.ndarray, d: MeasurementDirection) -> float:
    """S(rho_B) minus the measured conditional entropy for direction d."""
    return von_neumann_entropy(partial_trace(rho, "B")) - measured_conditional_entropy(
        rho, d
    )


def classical_correlation_optimized(
    rho: np.ndarray,
    n_theta: int = MIN_THETA_GRID,
    n_phi: int = MIN_PHI_GRID,
    angle_tol: float = ANGLE_TOL,
) -> tuple[float, MeasurementDirection]:
    """Maximize the measurement-induced mutual information over axes.

    Deterministic coarse grid plus pattern-search refinement; returns the
    maximum in bits and the maximizing direction (lexicographically
    smallest (theta, phi) among grid-level ties).
    """
    validate_density_matrix(rho, dim=4)
    a, b, t = bloch_components(rho)
    s_b = von_neumann_entropy(partial_trace(rho, "B"))

    def cond_entropy(dirs):
        return kernels.measured_entropy_grid(a, b, t, dirs)

    s_min, theta, phi = minimize_over_directions(
        cond_entropy, n_theta=n_theta, n_phi=n_phi, angle_tol=angle_tol
    )
    return s_b - s_min, MeasurementDirection(theta, phi)


def discord_general(
    rho: np.ndarray,
    n_theta: int = MIN_THETA_GRID,
    n_phi: int = MIN_PHI_GRID,
    angle_tol: float = ANGLE_TOL,
) -> EntropicReport:
    """Total correlation split into classical and quantum parts by optimization."""
    total = mutual_information(rho)
    classical, direction = classical_correlation_optimized(
        rho, n_theta=n_theta, n_phi=n_phi, angle_tol=angle_tol
    )
    return EntropicReport(
        mutual_info=total,
        classical=classical,
        discord=total - classical,
        optimal_direction=direction,
    )


def classical_correlation_bd(s: BellDiagonalState) -> float:
    """Closed-form classical correlation, ((1-c)log2(1-c) + (1+c)log2(1+c))/2
    with c the largest |c_i|."""
    s = as_bell_state(s)
    return float(kernels.bd_measures(s.as_array()[None, :])[0, 1])


def discord_bd(s: BellDiagonalState) -> float:
    """Closed-form quantum discord of a Bell-diagonal state."""
    s = as_bell_state(s)
    return float(kernels.bd_measures(s.as_array()[None, :])[0, 2])

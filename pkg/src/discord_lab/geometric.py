"""Geometric (Hilbert-Schmidt) correlation measures for Bell-diagonal states."""
from dataclasses import dataclass

import numpy as np

from discord_lab import kernels
from discord_lab._optimize import ANGLE_TOL, MIN_PHI_GRID, MIN_THETA_GRID, minimize_over_directions
from discord_lab.entropic import MeasurementDirection, _projectors
from discord_lab.states import as_bell_state, bloch_components, kron, pauli, to_density_matrix


@dataclass(frozen=True)
class GeometricReport:
    """Classical and quantum correlation in squared Hilbert-Schmidt units."""

    classical_g: float
    discord_g: float


def hs_distance_sq(a: np.ndarray, b: np.ndarray) -> float:
    """Squared Hilbert-Schmidt distance Tr[(a-b)^dag (a-b)]."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    d = a - b
    return float(np.sum(np.abs(d) ** 2))


def nonselective_measurement(rho: np.ndarray, d: MeasurementDirection) -> np.ndarray:
    """Dephase qubit A along d: sum_i (Pi_i (x) I) rho (Pi_i (x) I)."""
    rho = np.asarray(rho, dtype=complex)
    eye = pauli(0)
    out = np.zeros_like(rho)
    for proj in _projectors(d):
        big = kron(proj, eye)
        out += big @ rho @ big
    return out


def geometric_classical_bd(s) -> float:
    """Closed form c^2 / 4 with c the largest |c_i|; at most 1/4."""
    s = as_bell_state(s)
    return float(kernels.bd_measures(s.as_array()[None, :])[0, 3])


def geometric_discord_bd(s) -> float:
    """Closed form (c1^2 + c2^2 + c3^2 - c^2) / 4; nonnegative by construction."""
    s = as_bell_state(s)
    return float(kernels.bd_measures(s.as_array()[None, :])[0, 4])


def geometric_report(s) -> GeometricReport:
    s = as_bell_state(s)
    row = kernels.bd_measures(s.as_array()[None, :])[0]
    return GeometricReport(classical_g=float(row[3]), discord_g=float(row[4]))


def geometric_discord_oracle(
    s,
    n_theta: int = MIN_THETA_GRID,
    n_phi: int = MIN_PHI_GRID,
    angle_tol: float = ANGLE_TOL,
) -> float:
    """Minimal squared distance to the state's projectively dephased images.

    Independent check of :func:`geometric_discord_bd`: minimizes the
    distance to sum_i (Pi_i (x) I) rho (Pi_i (x) I) over measurement axes
    by grid search plus refinement, never consulting the closed form.
    """
    s = as_bell_state(s)
    a, _, t = bloch_components(to_density_matrix(s))

    def gap(dirs):
        return kernels.dephased_gap_grid(a, t, dirs)

    best, _, _ = minimize_over_directions(
        gap, n_theta=n_theta, n_phi=n_phi, angle_tol=angle_tol
    )
    return best

"""Deterministic optimization over one-qubit measurement directions.

Coarse theta x phi grid followed by a derivative-free pattern search that
halves its step until it drops below the angular tolerance.  Ties are
broken toward the lexicographically smallest (theta, phi), so results do
not depend on evaluation order.
"""
import numpy as np

MIN_THETA_GRID = 64
MIN_PHI_GRID = 128
ANGLE_TOL = 1e-6

_TWO_PI = 2.0 * np.pi


def angles_to_directions(tp: np.ndarray) -> np.ndarray:
    """Map (M, 2) angle rows (theta, phi) to (M, 3) unit Bloch vectors."""
    tp = np.atleast_2d(tp)
    st = np.sin(tp[:, 0])
    return np.stack(
        [st * np.cos(tp[:, 1]), st * np.sin(tp[:, 1]), np.cos(tp[:, 0])], axis=1
    )


def direction_grid(n_theta: int, n_phi: int) -> tuple[np.ndarray, np.ndarray]:
    """Theta-major grid over the sphere: angles (M, 2) and unit vectors (M, 3)."""
    thetas = np.linspace(0.0, np.pi, n_theta)
    phis = np.linspace(0.0, _TWO_PI, n_phi, endpoint=False)
    tt, pp = np.meshgrid(thetas, phis, indexing="ij")
    tp = np.stack([tt.ravel(), pp.ravel()], axis=1)
    return tp, angles_to_directions(tp)


def minimize_over_directions(
    objective,
    n_theta: int = MIN_THETA_GRID,
    n_phi: int = MIN_PHI_GRID,
    angle_tol: float = ANGLE_TOL,
    max_evals: int = 500_000,
) -> tuple[float, float, float]:
    """Minimize a smooth function of the measurement axis.

    objective maps an (M, 3) array of unit vectors to (M,) values.  Returns
    (minimum, theta, phi).  The coarse grid locates the basin; the pattern
    search contracts to the stated angular tolerance.
    """
    if n_theta < MIN_THETA_GRID or n_phi < MIN_PHI_GRID:
        raise ValueError(
            f"grid must be at least {MIN_THETA_GRID}x{MIN_PHI_GRID}, "
            f"got {n_theta}x{n_phi}"
        )
    tp, dirs = direction_grid(n_theta, n_phi)
    vals = np.asarray(objective(dirs), dtype=float)
    k = int(np.argmin(vals))  # first index = lexicographically smallest angles
    best = float(vals[k])
    theta, phi = float(tp[k, 0]), float(tp[k, 1])

    h = max(np.pi / (n_theta - 1), _TWO_PI / n_phi)
    evals = len(vals)
    offsets = [(dt, dp) for dt in (-1.0, 0.0, 1.0) for dp in (-1.0, 0.0, 1.0)]
    while h > angle_tol and evals < max_evals:
        cand = np.array([(theta + dt * h, phi + dp * h) for dt, dp in offsets])
        cand[:, 0] = np.clip(cand[:, 0], 0.0, np.pi)
        cvals = np.asarray(objective(angles_to_directions(cand)), dtype=float)
        evals += len(cvals)
        j = int(np.argmin(cvals))
        if cvals[j] < best:
            best = float(cvals[j])
            theta, phi = float(cand[j, 0]), float(cand[j, 1])
        else:
            h *= 0.5

    phi = phi % _TWO_PI
    if phi >= _TWO_PI:  # guard against rounding up to the open bound
        phi = 0.0
    return best, theta, phi

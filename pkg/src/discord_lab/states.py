"""Dense linear algebra for two-qubit systems and the Bell-diagonal state type.

Conventions: computational basis |00>, |01>, |10>, |11>, row-major matrices,
entropies in bits (log base 2), the convention 0*log2(0) = 0 throughout.
"""
from dataclasses import dataclass

import numpy as np

# Numerical slack: inputs often come from parametric formulas with rounding.
HERMITIAN_ATOL = 1e-12
TRACE_ATOL = 1e-12
EIGENVALUE_SLACK = 1e-10
STATE_ATOL = 1e-12


class InvalidStateError(ValueError):
    """Raised when a matrix or coefficient triple is not a physical state."""


_PAULI = (
    np.array([[1, 0], [0, 1]], dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

# The four spectral expressions in fixed order; index k names the inequality
# violated when the k-th one goes negative.
_EIG_LABELS = (
    "(1 - c1 - c2 - c3)/4",
    "(1 - c1 + c2 + c3)/4",
    "(1 + c1 - c2 + c3)/4",
    "(1 + c1 + c2 - c3)/4",
)


def pauli(i: int) -> np.ndarray:
    """Return the 2x2 identity (i=0) or Pauli x/y/z matrix (i=1/2/3).

    Parameters
    ----------
    i : int
        Index in {0, 1, 2, 3}.

    Returns
    -------
    numpy.ndarray
        Complex 2x2 matrix; Hermitian and unitary.
    """
    if i not in (0, 1, 2, 3):
        raise ValueError(f"pauli index must be 0..3, got {i!r}")
    return _PAULI[i].copy()


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker (tensor) product of two square matrices."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"kron expects square matrices, got shape {a.shape}")
    if b.ndim != 2 or b.shape[0] != b.shape[1]:
        raise ValueError(f"kron expects square matrices, got shape {b.shape}")
    return np.kron(a, b)


def partial_trace(rho: np.ndarray, keep: str) -> np.ndarray:
    """Reduced state of one qubit of a two-qubit density matrix.

    Parameters
    ----------
    rho : numpy.ndarray
        4x4 density matrix of the joint system.
    keep : str
        "A" returns the first qubit's reduced state (trace over B),
        "B" the second's (trace over A).

    Returns
    -------
    numpy.ndarray
        2x2 reduced density matrix; trace is preserved.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"partial_trace expects a 4x4 matrix, got {rho.shape}")
    r = rho.reshape(2, 2, 2, 2)
    if keep == "A":
        return np.einsum("abcb->ac", r)
    if keep == "B":
        return np.einsum("abad->bd", r)
    raise ValueError(f'keep must be "A" or "B", got {keep!r}')


def eigenvalues_hermitian(m: np.ndarray) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, sorted descending."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if np.max(np.abs(m - m.conj().T)) > 1e-10:
        raise ValueError("matrix is not Hermitian within 1e-10")
    return np.linalg.eigvalsh(m)[::-1]


def von_neumann_entropy(rho: np.ndarray) -> float:
    """Entropy -Tr(rho log2 rho) in bits.

    Eigenvalues in [-EIGENVALUE_SLACK, 0) are clamped to zero; anything more
    negative is an invariant violation and raises.
    """
    ev = eigenvalues_hermitian(rho)
    if ev[-1] < -EIGENVALUE_SLACK:
        raise InvalidStateError(
            f"eigenvalue {ev[-1]:.3e} below the positivity slack {-EIGENVALUE_SLACK:.0e}"
        )
    ev = np.clip(ev, 0.0, None)
    pos = ev[ev > 0.0]
    return float(-np.sum(pos * np.log2(pos)))


def validate_density_matrix(rho: np.ndarray, dim: int | None = None) -> None:
    """Check Hermiticity, unit trace and positivity; raise InvalidStateError."""
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise InvalidStateError(f"density matrix must be square, got shape {rho.shape}")
    if dim is not None and rho.shape[0] != dim:
        raise InvalidStateError(f"expected dimension {dim}, got {rho.shape[0]}")
    herm_dev = np.max(np.abs(rho - rho.conj().T))
    if herm_dev > HERMITIAN_ATOL:
        raise InvalidStateError(f"not Hermitian: max |M - M^dag| = {herm_dev:.3e}")
    tr = np.trace(rho)
    if abs(tr - 1.0) > TRACE_ATOL:
        raise InvalidStateError(f"trace {tr:.15g} differs from 1")
    ev_min = float(np.linalg.eigvalsh(rho)[0])
    if ev_min < -EIGENVALUE_SLACK:
        raise InvalidStateError(f"negative eigenvalue {ev_min:.3e}")


@dataclass(frozen=True)
class BellDiagonalState:
    """Two-qubit state diagonal in the Bell basis.

    Fully described by the three correlation coefficients (c1, c2, c3);
    physical states fill the tetrahedron whose four spectral expressions
    (see :func:`bell_eigenvalues`) are all nonnegative.  Construction
    validates the triple and raises :class:`InvalidStateError` naming the
    violated inequality.
    """

    c1: float
    c2: float
    c3: float

    def __post_init__(self):
        object.__setattr__(self, "c1", float(self.c1))
        object.__setattr__(self, "c2", float(self.c2))
        object.__setattr__(self, "c3", float(self.c3))
        lam = bell_eigenvalues((self.c1, self.c2, self.c3))
        for k, v in enumerate(lam):
            if v < -STATE_ATOL or v > 1.0 + STATE_ATOL:
                raise InvalidStateError(
                    f"not a physical Bell-diagonal state: "
                    f"{_EIG_LABELS[k]} = {v:.12g} is outside [0, 1]"
                )

    def as_array(self) -> np.ndarray:
        return np.array([self.c1, self.c2, self.c3])


def as_bell_state(s) -> BellDiagonalState:
    """Coerce a BellDiagonalState or coefficient triple, validating it."""
    if isinstance(s, BellDiagonalState):
        return s
    c1, c2, c3 = s
    return BellDiagonalState(c1, c2, c3)


def bell_eigenvalues(s) -> np.ndarray:
    """Spectrum of a Bell-diagonal state in fixed order.

    Returns the four values (1 -+ c1 -+ c2 -+ c3)/4 with sign patterns
    (---), (-++), (+-+), (++-), in this order.  Accepts a
    :class:`BellDiagonalState` or a raw (c1, c2, c3) triple so it can be
    used by validation itself; validity is judged by the caller.
    """
    if isinstance(s, BellDiagonalState):
        c1, c2, c3 = s.c1, s.c2, s.c3
    else:
        c1, c2, c3 = (float(v) for v in s)
    return 0.25 * np.array(
        [
            1.0 - c1 - c2 - c3,
            1.0 - c1 + c2 + c3,
            1.0 + c1 - c2 + c3,
            1.0 + c1 + c2 - c3,
        ]
    )


def to_density_matrix(s) -> np.ndarray:
    """4x4 density matrix (I (x) I + sum_i c_i sigma_i (x) sigma_i) / 4."""
    s = as_bell_state(s)
    rho = np.kron(_PAULI[0], _PAULI[0]).astype(complex)
    for c, sigma in zip((s.c1, s.c2, s.c3), _PAULI[1:]):
        rho += c * np.kron(sigma, sigma)
    return rho / 4.0


_KRON_PAULI = None


def _kron_pauli_basis():
    global _KRON_PAULI
    if _KRON_PAULI is None:
        _KRON_PAULI = [
            [np.kron(_PAULI[i], _PAULI[j]) for j in range(4)] for i in range(4)
        ]
    return _KRON_PAULI


def bloch_components(rho: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Pauli decomposition of a two-qubit state.

    Returns (a, b, T) with a_i = Tr[rho (sigma_i (x) I)],
    b_j = Tr[rho (I (x) sigma_j)] and T_ij = Tr[rho (sigma_i (x) sigma_j)];
    all real for Hermitian input.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got {rho.shape}")
    basis = _kron_pauli_basis()
    a = np.array([np.trace(rho @ basis[i][0]).real for i in (1, 2, 3)])
    b = np.array([np.trace(rho @ basis[0][j]).real for j in (1, 2, 3)])
    t = np.array(
        [[np.trace(rho @ basis[i][j]).real for j in (1, 2, 3)] for i in (1, 2, 3)]
    )
    return a, b, t

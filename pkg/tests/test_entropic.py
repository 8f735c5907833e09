import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import bell_triples, directions
from discord_lab import kernels
from discord_lab.entropic import (
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
from discord_lab.states import (
    InvalidStateError,
    kron,
    to_density_matrix,
    validate_density_matrix,
)

I2 = np.eye(2)
I4 = np.eye(4)

# frozen oracle values (binary-entropy/spectrum arithmetic, see test_states)
I_HALF = 0.18872187554086706        # 2 - S for the (0.5, 0, 0) state
C_HALF = 0.18872187554086717        # ((1-c)log2(1-c) + (1+c)log2(1+c))/2 at c=0.5
S_MEAS_HALF_X = 0.8112781244591328  # branch entropy at c=0.5 along x
C_THIRD = 0.08170416594551042       # closed form at c=1/3

X_AXIS = MeasurementDirection(np.pi / 2, 0.0)
Z_AXIS = MeasurementDirection(0.0, 0.0)


def _product_state():
    rho_a = np.diag([0.7, 0.3]).astype(complex)
    rho_b = np.array([[0.6, 0.2], [0.2, 0.4]], dtype=complex)
    return kron(rho_a, rho_b)


def test_direction_validation():
    d = MeasurementDirection(0.3, 7.0)
    assert 0.0 <= d.phi < 2 * np.pi
    assert abs(np.linalg.norm(d.bloch_vector()) - 1.0) < 1e-12
    with pytest.raises(ValueError):
        MeasurementDirection(-0.1, 0.0)


def test_mutual_information_examples():
    assert mutual_information(_product_state()) == pytest.approx(0.0, abs=1e-12)
    assert mutual_information(to_density_matrix((1, 1, -1))) == pytest.approx(2.0, abs=1e-12)
    assert mutual_information(to_density_matrix((0.5, 0, 0))) == pytest.approx(
        I_HALF, abs=1e-12
    )
    with pytest.raises(InvalidStateError):
        mutual_information(np.diag([1.5, -0.5, 0, 0]).astype(complex))


def test_conditional_entropy_examples():
    assert conditional_entropy(I4 / 4) == pytest.approx(1.0, abs=1e-12)
    assert conditional_entropy(to_density_matrix((1, 1, -1))) == pytest.approx(
        -1.0, abs=1e-12
    )
    pure = np.zeros((2, 2), dtype=complex)
    pure[0, 0] = 1.0
    assert conditional_entropy(kron(I2 / 2, pure)) == pytest.approx(0.0, abs=1e-12)


def test_conditional_entropy_rewrites_mutual_information(rand_triples):
    # S(rho_B) - S(B|A) must reproduce the mutual information
    for c in rand_triples(25, seed=8):
        rho = to_density_matrix(c)
        assert mutual_information(rho) == pytest.approx(
            1.0 - conditional_entropy(rho), abs=1e-10
        )


def test_measure_branch_probabilities_are_half(rand_triples):
    rng = np.random.default_rng(9)
    for c in rand_triples(20, seed=10):
        d = MeasurementDirection(rng.uniform(0, np.pi), rng.uniform(0, 2 * np.pi))
        ens = measure_branch(to_density_matrix(c), d)
        for p, branch in ens.branches:
            assert p == pytest.approx(0.5, abs=1e-12)
            validate_density_matrix(branch, dim=2)
        assert sum(p for p, _ in ens.branches) == pytest.approx(1.0, abs=1e-12)


def test_measure_branch_bell_state_z():
    ens = measure_branch(to_density_matrix((1, 1, -1)), Z_AXIS)
    (p0, b0), (p1, b1) = ens.branches
    np.testing.assert_allclose(b0, [[0, 0], [0, 1]], atol=1e-12)
    np.testing.assert_allclose(b1, [[1, 0], [0, 0]], atol=1e-12)


def test_measure_branch_maximally_mixed():
    ens = measure_branch(I4 / 4, MeasurementDirection(1.0, 2.0))
    for _, branch in ens.branches:
        np.testing.assert_allclose(branch, I2 / 2, atol=1e-12)


def test_measured_conditional_entropy_examples():
    assert measured_conditional_entropy(I4 / 4, X_AXIS) == pytest.approx(1.0, abs=1e-12)
    rho = to_density_matrix((1, 1, -1))
    for theta in np.linspace(0, np.pi, 7):
        for phi in np.linspace(0, 2 * np.pi, 9, endpoint=False):
            d = MeasurementDirection(theta, phi)
            assert measured_conditional_entropy(rho, d) == pytest.approx(0.0, abs=1e-10)
    rho = to_density_matrix((0.5, 0, 0))
    assert measured_conditional_entropy(rho, X_AXIS) == pytest.approx(
        S_MEAS_HALF_X, abs=1e-12
    )


def test_induced_mutual_information_examples():
    assert induced_mutual_information(I4 / 4, X_AXIS) == pytest.approx(0.0, abs=1e-12)
    rho = to_density_matrix((0.5, 0, 0))
    assert induced_mutual_information(rho, X_AXIS) == pytest.approx(I_HALF, abs=1e-12)
    assert induced_mutual_information(rho, Z_AXIS) == pytest.approx(0.0, abs=1e-12)


@settings(max_examples=60, deadline=None)
@given(bell_triples(), directions())
def test_induced_never_exceeds_mutual_information(c, angles):
    rho = to_density_matrix(c)
    d = MeasurementDirection(*angles)
    assert induced_mutual_information(rho, d) <= mutual_information(rho) + 1e-9


def test_optimized_classical_correlation_examples():
    value, d = classical_correlation_optimized(I4 / 4)
    assert value == pytest.approx(0.0, abs=1e-12)
    assert (d.theta, d.phi) == (0.0, 0.0)  # lexicographic tie-break

    value, d = classical_correlation_optimized(to_density_matrix((0.5, 0, 0)))
    assert value == pytest.approx(C_HALF, abs=1e-9)
    # optimal axis is +-x
    assert abs(abs(d.bloch_vector()[0]) - 1.0) < 1e-5

    value, _ = classical_correlation_optimized(to_density_matrix((1 / 3, -1 / 3, -1 / 3)))
    assert value == pytest.approx(C_THIRD, abs=1e-9)


def test_optimized_rejects_too_coarse_grid():
    with pytest.raises(ValueError):
        classical_correlation_optimized(I4 / 4, n_theta=32, n_phi=64)


def test_discord_general_examples():
    report = discord_general(_product_state())
    assert report.mutual_info == pytest.approx(0.0, abs=1e-9)
    assert report.classical == pytest.approx(0.0, abs=1e-9)
    assert report.discord == pytest.approx(0.0, abs=1e-9)

    report = discord_general(to_density_matrix((1, 1, -1)))
    assert report.mutual_info == pytest.approx(2.0, abs=1e-9)
    assert report.classical == pytest.approx(1.0, abs=1e-9)
    assert report.discord == pytest.approx(1.0, abs=1e-9)

    report = discord_general(to_density_matrix((0.5, 0, 0)))
    assert report.discord == pytest.approx(0.0, abs=1e-9)
    assert report.optimal_direction is not None


def test_closed_form_examples():
    assert classical_correlation_bd((0, 0, 0)) == 0.0
    assert classical_correlation_bd((1, 1, -1)) == pytest.approx(1.0, abs=1e-12)
    assert classical_correlation_bd((1 / 3, -1 / 3, -1 / 3)) == pytest.approx(
        C_THIRD, abs=1e-14
    )
    assert discord_bd((0, 0, 0)) == 0.0
    assert discord_bd((1, 1, -1)) == pytest.approx(1.0, abs=1e-12)
    assert discord_bd((1 / 3, -1 / 3, -1 / 3)) == pytest.approx(1 / 3, abs=1e-12)
    with pytest.raises(InvalidStateError):
        discord_bd((0.9, 0.9, 0.9))


def test_single_component_states_are_classical():
    for c in np.linspace(-1, 1, 41):
        assert abs(discord_bd((c, 0, 0))) <= 1e-10


def test_decomposition_identity(rand_triples):
    for c in rand_triples(1000, seed=14):
        total = mutual_information(to_density_matrix(c))
        assert abs(classical_correlation_bd(c) + discord_bd(c) - total) < 1e-10


def test_closed_form_matches_optimization(rand_triples):
    for c in rand_triples(200, seed=15):
        closed = classical_correlation_bd(c)
        optimized, _ = classical_correlation_optimized(to_density_matrix(c))
        assert abs(closed - optimized) <= 1e-4


def test_nonnegativity(rand_triples):
    rows = kernels.bd_measures(rand_triples(2000, seed=16))
    assert np.all(rows[:, 1] >= 0.0)
    assert np.all(rows[:, 2] >= -1e-12)


def test_permutation_symmetry_is_bit_exact(rand_triples):
    c = rand_triples(500, seed=17)
    base = kernels.bd_measures(c)
    for perm in itertools.permutations(range(3)):
        assert np.array_equal(kernels.bd_measures(c[:, perm]), base)


def test_double_sign_flip_symmetry(rand_triples):
    c = rand_triples(500, seed=18)
    base = kernels.bd_measures(c)
    for i, j in ((0, 1), (0, 2), (1, 2)):
        flipped = c.copy()
        flipped[:, [i, j]] *= -1.0
        assert np.max(np.abs(kernels.bd_measures(flipped) - base)) <= 1e-12

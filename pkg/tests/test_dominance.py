import numpy as np
import pytest

from discord_lab import kernels
from discord_lab.dominance import (
    DominanceClass,
    _chunk_states,
    classify,
    correlation_report,
    entropic_dominant_points,
    family_point,
    geometric_dominant_points,
    grid_fraction,
    inside_tetrahedron,
    monte_carlo_sample,
    monte_carlo_summary,
    sample_tetrahedron,
    sweep_family,
)
from discord_lab.entropic import classical_correlation_optimized
from discord_lab.geometric import geometric_classical_bd, geometric_discord_oracle
from discord_lab.states import BellDiagonalState, InvalidStateError, to_density_matrix

DELTA_E_THIRD = 0.2516291673878228  # frozen: discord minus classical at c1=1/3


def test_classify_examples():
    assert classify((0, 0, 0)) is DominanceClass.NEITHER
    assert classify((1 / 3, -1 / 3, -1 / 3)) is DominanceClass.BOTH
    assert classify((0.9, 0, 0)) is DominanceClass.NEITHER
    with pytest.raises(InvalidStateError):
        classify((1, 1, 1))


def test_correlation_report_fields():
    rep = correlation_report((1, 1, -1))
    assert rep.mutual_info == pytest.approx(2.0, abs=1e-12)
    assert rep.delta_e == pytest.approx(0.0, abs=1e-12)
    assert rep.delta_g == pytest.approx(0.25, abs=1e-12)
    assert rep.dominance is DominanceClass.GEOMETRIC_ONLY


def test_classify_agrees_with_optimization_route(rand_triples):
    # closed-form classes vs classes recomputed through the optimizers,
    # skipping tie-ambiguous states
    for c in rand_triples(100, seed=31):
        rows = kernels.bd_measures(c[None, :])[0]
        delta_e, delta_g = rows[2] - rows[1], rows[4] - rows[3]
        if abs(delta_e) < 1e-4 or abs(delta_g) < 1e-4:
            continue
        rho = to_density_matrix(c)
        c_opt, _ = classical_correlation_optimized(rho)
        e_opt = rows[0] - 2.0 * c_opt > 0.0  # I - C > C
        g_opt = geometric_discord_oracle(c) - geometric_classical_bd(c) > 0.0
        assert classify(c) is classify_from_flags(e_opt, g_opt)


def classify_from_flags(e, g):
    if e:
        return DominanceClass.BOTH if g else DominanceClass.ENTROPIC_ONLY
    return DominanceClass.GEOMETRIC_ONLY if g else DominanceClass.NEITHER


def test_sample_tetrahedron_single():
    rng = np.random.default_rng(32)
    for _ in range(50):
        s = sample_tetrahedron(rng)
        assert isinstance(s, BellDiagonalState)  # construction validated it


def test_sampler_statistics():
    n = 1_000_000
    states, proposals = _chunk_states(seed=33, index=0, quota=n)
    assert inside_tetrahedron(states).all()
    # centroid of the tetrahedron is the origin
    sigma = states.std(axis=0)
    assert np.all(np.abs(states.mean(axis=0)) < 3.0 * sigma / np.sqrt(n))
    # volume ratio of tetrahedron to cube is 1/3
    assert abs(n / proposals - 1.0 / 3.0) < 0.01


def test_monte_carlo_count_identities():
    s = monte_carlo_summary(5000, seed=34)
    assert s.neither + s.entropic_only + s.geometric_only + s.both == s.n
    assert s.entropic_dominant == s.entropic_only + s.both
    assert s.geometric_dominant == s.geometric_only + s.both
    assert sum(s.fractions()[k.value] for k in DominanceClass) == pytest.approx(1.0)


def test_monte_carlo_deterministic_across_workers(monkeypatch):
    base = monte_carlo_summary(50_000, seed=35, workers=1)
    assert monte_carlo_summary(50_000, seed=35, workers=4) == base
    monkeypatch.setenv("DISCORD_LAB_THREADS", "3")
    assert monte_carlo_summary(50_000, seed=35) == base
    monkeypatch.setenv("DISCORD_LAB_THREADS", "1")
    assert monte_carlo_summary(50_000, seed=35) == base


def test_monte_carlo_sample_matches_summary():
    summary, states, measures = monte_carlo_sample(2000, seed=36)
    assert states.shape == (2000, 3)
    assert measures.shape == (2000, 5)
    assert inside_tetrahedron(states).all()
    e = measures[:, 2] > measures[:, 1]
    g = measures[:, 4] > measures[:, 3]
    assert int(np.sum(e & g)) == summary.both


def test_seed_consistency_of_fractions():
    n = 100_000
    f1 = monte_carlo_summary(n, seed=1).fractions()
    f2 = monte_carlo_summary(n, seed=2).fractions()
    for key in ("Neither", "EntropicOnly", "GeometricOnly", "Both"):
        p = 0.5 * (f1[key] + f2[key])
        assert abs(f1[key] - f2[key]) < 5.0 * np.sqrt(p * (1.0 - p) / n)


def test_grid_fraction_validation():
    with pytest.raises(ValueError):
        grid_fraction(entropic_dominant_points, 100)
    with pytest.raises(ValueError):
        grid_fraction(entropic_dominant_points, 99)


def test_grid_fraction_always_true():
    assert grid_fraction(lambda c: np.ones(len(c), dtype=bool), 101) == 1.0


def test_grid_fraction_sanity():
    frac = grid_fraction(geometric_dominant_points, 101)
    assert 0.18 < frac < 0.23


def test_family_point_examples():
    p = family_point(3, 1 / 3)
    assert p.delta_e == pytest.approx(DELTA_E_THIRD, abs=1e-12)
    assert p.delta_g == pytest.approx(1 / 36, abs=1e-15)

    p = family_point(1, 0.0)
    assert p.state.c1 == pytest.approx(0.01 * 3 - 0.25, abs=1e-15)
    assert p.state.c2 == pytest.approx(-0.25, abs=1e-15)
    assert p.state.c3 == pytest.approx(0.45, abs=1e-15)


@pytest.mark.parametrize(
    "family, t",
    [(1, -0.1), (1, 7.0), (2, 2 * np.pi + 0.1), (3, 0.0), (3, 0.34), (4, 0.1)],
)
def test_family_point_domain_errors(family, t):
    with pytest.raises(ValueError):
        family_point(family, t)


def test_sweep_family_sign_patterns():
    pts = sweep_family(1, 629)
    assert len(pts) == 629
    assert all(p.delta_e > 0 and p.delta_g < 0 for p in pts)

    pts = sweep_family(2, 629)
    assert all(p.delta_e < 0 and p.delta_g > 0 for p in pts)

    pts = sweep_family(3, 100)
    assert all(p.delta_e > 0 and p.delta_g > 0 for p in pts)
    assert pts[-1].t == pytest.approx(1 / 3, abs=0)
    deltas = np.array([p.delta_e for p in pts])
    assert np.all(np.diff(deltas) > 0)  # monotone along the ray


def test_sweep_family_smoke_and_errors():
    pts = sweep_family(2, 2)
    assert len(pts) == 2
    assert pts[0].t == 0.0 and pts[1].t == pytest.approx(2 * np.pi)
    with pytest.raises(ValueError):
        sweep_family(1, 1)
    with pytest.raises(ValueError):
        sweep_family(9, 10)


def test_sweep_ordering():
    pts = sweep_family(1, 50)
    ts = [p.t for p in pts]
    assert ts == sorted(ts)


def test_face_centers_locally_maximize_entropic_gap():
    # the four face centers are reported as the points of maximal
    # entropic dominance; check local maximality against nearby valid states
    rng = np.random.default_rng(37)
    for center in ([1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]):
        c0 = np.array(center) / 3.0
        rows = kernels.bd_measures(c0[None, :])[0]
        gap0 = rows[2] - rows[1]
        probes = c0 + rng.normal(scale=0.01, size=(400, 3))
        probes = probes[inside_tetrahedron(probes)]
        assert len(probes) > 0
        rows = kernels.bd_measures(probes)
        assert np.all(rows[:, 2] - rows[:, 1] <= gap0 + 1e-12)

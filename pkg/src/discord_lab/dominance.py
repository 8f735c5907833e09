"""Dominance of quantum over classical correlations across the state tetrahedron.

Monte Carlo sampling, per-state classification, a deterministic grid-census
oracle for the sampled fractions, and the three one-parameter example
families.  Classification uses the closed forms only and strict
inequalities: a tie never counts as dominance.
"""
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

import numpy as np

from discord_lab import kernels
from discord_lab.states import BellDiagonalState, as_bell_state

DEFAULT_SEED = 42
DEFAULT_CHUNK = 16384
_BLOCK = 1024  # proposals drawn per rejection round inside one chunk

THREADS_ENV = "DISCORD_LAB_THREADS"


class DominanceClass(Enum):
    NEITHER = "Neither"
    ENTROPIC_ONLY = "EntropicOnly"
    GEOMETRIC_ONLY = "GeometricOnly"
    BOTH = "Both"


@dataclass(frozen=True)
class CorrelationReport:
    """The five closed-form measures of one state plus its dominance class."""

    state: BellDiagonalState
    mutual_info: float
    classical_e: float
    discord_e: float
    classical_g: float
    discord_g: float
    dominance: DominanceClass

    @property
    def delta_e(self) -> float:
        return self.discord_e - self.classical_e

    @property
    def delta_g(self) -> float:
        return self.discord_g - self.classical_g


@dataclass(frozen=True)
class SampleSummary:
    """Tallies of one Monte Carlo run; fully determined by (n, seed, chunk_size)."""

    n: int
    seed: int
    chunk_size: int
    proposals: int
    neither: int
    entropic_only: int
    geometric_only: int
    both: int

    @property
    def entropic_dominant(self) -> int:
        return self.entropic_only + self.both

    @property
    def geometric_dominant(self) -> int:
        return self.geometric_only + self.both

    def counts(self) -> dict[str, int]:
        return {
            DominanceClass.NEITHER.value: self.neither,
            DominanceClass.ENTROPIC_ONLY.value: self.entropic_only,
            DominanceClass.GEOMETRIC_ONLY.value: self.geometric_only,
            DominanceClass.BOTH.value: self.both,
            "entropic_dominant": self.entropic_dominant,
            "geometric_dominant": self.geometric_dominant,
        }

    def fractions(self) -> dict[str, float]:
        return {k: v / self.n for k, v in self.counts().items()}


@dataclass(frozen=True)
class FamilyPoint:
    """One sweep sample: parameter value, state, and the two dominance gaps."""

    t: float
    state: BellDiagonalState
    delta_e: float
    delta_g: float


def _class_masks(measures: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    delta_e = measures[:, 2] - measures[:, 1]
    delta_g = measures[:, 4] - measures[:, 3]
    return delta_e > 0.0, delta_g > 0.0


def classify(s) -> DominanceClass:
    """Dominance class of one state from the closed forms (strict inequalities)."""
    s = as_bell_state(s)
    e, g = _class_masks(kernels.bd_measures(s.as_array()[None, :]))
    if e[0]:
        return DominanceClass.BOTH if g[0] else DominanceClass.ENTROPIC_ONLY
    return DominanceClass.GEOMETRIC_ONLY if g[0] else DominanceClass.NEITHER


def correlation_report(s) -> CorrelationReport:
    s = as_bell_state(s)
    row = kernels.bd_measures(s.as_array()[None, :])[0]
    return CorrelationReport(
        state=s,
        mutual_info=float(row[0]),
        classical_e=float(row[1]),
        discord_e=float(row[2]),
        classical_g=float(row[3]),
        discord_g=float(row[4]),
        dominance=classify(s),
    )


def entropic_dominant_points(c: np.ndarray) -> np.ndarray:
    """Boolean mask: quantum beats classical entropically at each row of c."""
    e, _ = _class_masks(kernels.bd_measures(c))
    return e


def geometric_dominant_points(c: np.ndarray) -> np.ndarray:
    """Boolean mask: quantum beats classical geometrically at each row of c."""
    _, g = _class_masks(kernels.bd_measures(c))
    return g


def inside_tetrahedron(c: np.ndarray) -> np.ndarray:
    """Mask of coefficient rows whose four spectral expressions are nonnegative."""
    c = np.atleast_2d(c)
    c1, c2, c3 = c[:, 0], c[:, 1], c[:, 2]
    return (
        (1.0 - c1 - c2 - c3 >= 0.0)
        & (1.0 - c1 + c2 + c3 >= 0.0)
        & (1.0 + c1 - c2 + c3 >= 0.0)
        & (1.0 + c1 + c2 - c3 >= 0.0)
    )


def sample_tetrahedron(rng: np.random.Generator) -> BellDiagonalState:
    """One state drawn uniformly from the tetrahedron by rejection from the cube."""
    while True:
        c = rng.random(3) * 2.0 - 1.0
        if inside_tetrahedron(c[None, :])[0]:
            return BellDiagonalState(c[0], c[1], c[2])


def _chunk_rng(seed: int, index: int) -> np.random.Generator:
    # Philox keyed on (seed, chunk index): splittable, machine-independent.
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(index,))
    return np.random.Generator(np.random.Philox(ss))


def _chunk_states(seed: int, index: int, quota: int) -> tuple[np.ndarray, int]:
    """Rejection-sample `quota` states from the chunk's own stream.

    Returns the states and the exact number of proposals consumed, so the
    result is independent of block size bookkeeping elsewhere.
    """
    rng = _chunk_rng(seed, index)
    out = np.empty((quota, 3))
    filled = 0
    proposals = 0
    while filled < quota:
        block = rng.random((_BLOCK, 3)) * 2.0 - 1.0
        idx = np.nonzero(inside_tetrahedron(block))[0]
        take = min(len(idx), quota - filled)
        if take:
            out[filled : filled + take] = block[idx[:take]]
            filled += take
        if filled < quota:
            proposals += _BLOCK
        else:
            proposals += int(idx[take - 1]) + 1
    return out, proposals


def _resolve_workers(workers: int | None) -> int:
    if workers is None:
        env = os.environ.get(THREADS_ENV)
        if env is not None:
            workers = int(env)
        else:
            workers = min(os.cpu_count() or 1, 8)
    return max(1, workers)


def _monte_carlo(n, seed, chunk_size, workers, collect):
    if n < 1:
        raise ValueError(f"sample count must be >= 1, got {n}")
    if chunk_size < 1:
        raise ValueError(f"chunk size must be >= 1, got {chunk_size}")
    n_chunks = math.ceil(n / chunk_size)
    quotas = [chunk_size] * (n_chunks - 1) + [n - chunk_size * (n_chunks - 1)]

    def work(index):
        states, proposals = _chunk_states(seed, index, quotas[index])
        measures = kernels.bd_measures(states)
        e, g = _class_masks(measures)
        counts = np.array(
            [
                int(np.sum(~e & ~g)),
                int(np.sum(e & ~g)),
                int(np.sum(~e & g)),
                int(np.sum(e & g)),
            ],
            dtype=np.int64,
        )
        return counts, proposals, (states, measures) if collect else None

    n_workers = _resolve_workers(workers)
    if n_workers > 1 and n_chunks > 1:
        with ThreadPoolExecutor(max_workers=n_workers) as pool:
            results = list(pool.map(work, range(n_chunks)))
    else:
        results = [work(i) for i in range(n_chunks)]

    totals = np.sum([r[0] for r in results], axis=0)
    proposals = int(sum(r[1] for r in results))
    summary = SampleSummary(
        n=n,
        seed=seed,
        chunk_size=chunk_size,
        proposals=proposals,
        neither=int(totals[0]),
        entropic_only=int(totals[1]),
        geometric_only=int(totals[2]),
        both=int(totals[3]),
    )
    if not collect:
        return summary, None, None
    states = np.concatenate([r[2][0] for r in results], axis=0)
    measures = np.concatenate([r[2][1] for r in results], axis=0)
    return summary, states, measures


def monte_carlo_summary(
    n: int,
    seed: int = DEFAULT_SEED,
    chunk_size: int = DEFAULT_CHUNK,
    workers: int | None = None,
) -> SampleSummary:
    """Classify n uniformly sampled states; deterministic for fixed (n, seed,
    chunk_size) regardless of worker count."""
    summary, _, _ = _monte_carlo(n, seed, chunk_size, workers, collect=False)
    return summary


def monte_carlo_sample(
    n: int,
    seed: int = DEFAULT_SEED,
    chunk_size: int = DEFAULT_CHUNK,
    workers: int | None = None,
) -> tuple[SampleSummary, np.ndarray, np.ndarray]:
    """Like monte_carlo_summary but also returns the states (n, 3) and their
    closed-form measures (n, 5), in sampling order."""
    summary, states, measures = _monte_carlo(n, seed, chunk_size, workers, collect=True)
    return summary, states, measures


def grid_fraction(predicate, resolution: int) -> float:
    """Fraction of tetrahedron grid points satisfying a vectorized predicate.

    The grid is the cube [-1, 1]^3 sampled `resolution` times per axis
    (odd, >= 101, so the origin is included), restricted to the tetrahedron.
    """
    if resolution < 101:
        raise ValueError(f"resolution must be >= 101, got {resolution}")
    if resolution % 2 == 0:
        raise ValueError(f"resolution must be odd, got {resolution}")
    axis = np.linspace(-1.0, 1.0, resolution)
    g2, g3 = np.meshgrid(axis, axis, indexing="ij")
    plane = np.stack([g2.ravel(), g3.ravel()], axis=1)
    inside_total = 0
    hits = 0
    for c1 in axis:
        pts = np.column_stack([np.full(len(plane), c1), plane])
        valid = pts[inside_tetrahedron(pts)]
        inside_total += len(valid)
        if len(valid):
            hits += int(np.sum(predicate(valid)))
    return hits / inside_total


_FAMILY_RANGE = {1: (0.0, 2.0 * np.pi), 2: (0.0, 2.0 * np.pi), 3: (0.0, 1.0 / 3.0)}


def _family_coeffs(family: int, t: float) -> tuple[float, float, float]:
    if family == 1:
        amp = 0.01 * (2.0 + np.cos(4.0 * t))
        return amp * np.cos(t) - 0.25, amp * np.sin(t) - 0.25, 0.01 * np.sin(4.0 * t) + 0.45
    if family == 2:
        amp = 0.015 * (2.0 + np.cos(4.0 * t))
        return amp * np.cos(t) - 0.75, amp * np.sin(t) - 0.6, 0.015 * np.sin(4.0 * t) - 0.6
    if family == 3:
        return t, -t, -t
    raise ValueError(f"family must be 1, 2 or 3, got {family}")


def family_point(family: int, t: float) -> FamilyPoint:
    """Evaluate one member of an example family at parameter t.

    Families 1 and 2 take an angle in [0, 2*pi]; family 3 takes
    c1 in (0, 1/3].  Out-of-range parameters and unphysical results raise.
    """
    lo, hi = _FAMILY_RANGE.get(family, (None, None))
    if lo is None:
        raise ValueError(f"family must be 1, 2 or 3, got {family}")
    open_low = family == 3
    if (t <= lo if open_low else t < lo) or t > hi:
        bound = "(" if open_low else "["
        raise ValueError(f"parameter {t} outside {bound}{lo}, {hi}] for family {family}")
    state = BellDiagonalState(*_family_coeffs(family, t))
    row = kernels.bd_measures(state.as_array()[None, :])[0]
    return FamilyPoint(
        t=float(t),
        state=state,
        delta_e=float(row[2] - row[1]),
        delta_g=float(row[4] - row[3]),
    )


def sweep_family(family: int, steps: int) -> list[FamilyPoint]:
    """Uniformly sweep a family's parameter range with `steps` points.

    Families 1 and 2 include both endpoints of [0, 2*pi]; family 3 starts at
    the first positive grid point of its open-at-zero range, i/steps * 1/3.
    """
    if steps < 2:
        raise ValueError(f"steps must be >= 2, got {steps}")
    if family in (1, 2):
        ts = np.linspace(0.0, 2.0 * np.pi, steps)
    elif family == 3:
        ts = np.arange(1, steps + 1) / steps * (1.0 / 3.0)
    else:
        raise ValueError(f"family must be 1, 2 or 3, got {family}")
    return [family_point(family, float(t)) for t in ts]

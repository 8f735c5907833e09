"""Pure-numpy reference implementations of the hot numeric kernels.

These are the fallback used when the compiled extension is unavailable;
the compiled module mirrors the exact operation order so the two backends
agree to floating-point noise.

Closed forms are evaluated on component-sorted inputs so that states
related by a coordinate permutation produce bit-identical results.
"""
import numpy as np

BACKEND_NAME = "python"

_P_FLOOR = 1e-14  # measurement branches below this probability contribute 0


def _xlog2(x):
    out = np.zeros_like(x)
    m = x > 0.0
    out[m] = x[m] * np.log2(x[m])
    return out


def measured_entropy_grid(a, b, t, dirs):
    """Weighted post-measurement entropy of qubit B for each direction.

    a, b: (3,) Bloch vectors of the two marginals; t: (3, 3) correlation
    matrix; dirs: (N, 3) unit measurement axes on A.  Returns (N,) bits.
    """
    dirs = np.asarray(dirs, dtype=float)
    an = dirs @ a
    tn = dirs @ t  # row i holds (t^T n_i)^T
    out = np.zeros(len(dirs))
    for sgn in (1.0, -1.0):
        w = 1.0 + sgn * an  # twice the branch probability
        p = 0.5 * w
        live = p > _P_FLOOR
        m = np.zeros_like(tn)
        m[live] = (b[None, :] + sgn * tn[live]) / w[live, None]
        r = np.minimum(np.sqrt(np.sum(m * m, axis=1)), 1.0)
        s = 1.0 - 0.5 * (_xlog2(1.0 - r) + _xlog2(1.0 + r))
        out[live] += (p * s)[live]
    return out


def dephased_gap_grid(a, t, dirs):
    """Squared Hilbert-Schmidt change under projective dephasing along each axis.

    Equals ((|a|^2 - (a.n)^2) + (|t|_F^2 - |t^T n|^2)) / 4 per direction;
    the marginal of the unmeasured side is untouched and drops out.
    """
    dirs = np.asarray(dirs, dtype=float)
    an = dirs @ a
    tn = dirs @ t
    base = float(a @ a) + float(np.sum(t * t))
    return 0.25 * (base - an * an - np.sum(tn * tn, axis=1))


def bd_measures(c):
    """Closed-form correlation measures for a batch of Bell-diagonal states.

    c: (N, 3) coefficient triples.  Returns (N, 5) columns
    [mutual_info, classical_e, discord_e, classical_g, discord_g].
    """
    c = np.atleast_2d(np.asarray(c, dtype=float))
    p = np.sort(c, axis=1)          # canonical order: permutation-invariant
    q = np.sort(np.abs(c), axis=1)
    cmax = q[:, 2]
    cls_e = 0.5 * (_xlog2(1.0 - cmax) + _xlog2(1.0 + cmax))
    a1 = 1.0 - p[:, 0] - p[:, 1] - p[:, 2]
    a2 = 1.0 - p[:, 0] + p[:, 1] + p[:, 2]
    a3 = 1.0 + p[:, 0] - p[:, 1] + p[:, 2]
    a4 = 1.0 + p[:, 0] + p[:, 1] - p[:, 2]
    mutual = 0.25 * (_xlog2(a1) + _xlog2(a2) + _xlog2(a3) + _xlog2(a4))
    cls_g = 0.25 * cmax * cmax
    disc_g = 0.25 * (q[:, 0] * q[:, 0] + q[:, 1] * q[:, 1])
    return np.stack([mutual, cls_e, mutual - cls_e, cls_g, disc_g], axis=1)

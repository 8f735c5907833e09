"""Backend selection for the numeric kernels.

Prefers the compiled extension; falls back to the pure-numpy module when
the extension is missing.  Set DISCORD_LAB_BACKEND=python to force the
fallback (used by the benchmark and for debugging).
"""
import os

from discord_lab import _kernels_py

if os.environ.get("DISCORD_LAB_BACKEND", "").lower() in {"python", "py", "fallback"}:
    _impl = _kernels_py
else:
    try:
        from discord_lab import _kernels_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND: str = _impl.BACKEND_NAME

measured_entropy_grid = _impl.measured_entropy_grid
dephased_gap_grid = _impl.dephased_gap_grid
bd_measures = _impl.bd_measures

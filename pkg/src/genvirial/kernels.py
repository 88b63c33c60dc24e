"""Backend selection for the hot Numerov loop.

The compiled extension ``genvirial._kernels`` is used when importable;
otherwise, or when the environment variable ``GENVIRIAL_PURE_PYTHON`` is
set, the pure-Python implementation is used.  :func:`use_backend` switches
at runtime (for benchmarks and tests).
"""
import os

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # pragma: no cover - depends on the build
    _compiled = None

_BACKENDS = {"python": _kernels_py}
if _compiled is not None:
    _BACKENDS["compiled"] = _compiled

BACKEND = "python" if (_compiled is None or os.environ.get("GENVIRIAL_PURE_PYTHON")) else "compiled"
numerov_sweep = _BACKENDS[BACKEND].numerov_sweep


def available_backends():
    return sorted(_BACKENDS)


def use_backend(name: str) -> None:
    """Route subsequent sweeps through ``name`` ('compiled' or 'python')."""
    global BACKEND, numerov_sweep
    if name not in _BACKENDS:
        raise ValueError(f"backend {name!r} not available; have {available_backends()}")
    BACKEND = name
    numerov_sweep = _BACKENDS[name].numerov_sweep

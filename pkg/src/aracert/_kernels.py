"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``ARACERT_PURE_PYTHON=1`` to force the fallback. Inputs wider than 64
bits always take the Python path.
"""

import os

from . import _pykernels

try:
    if os.environ.get("ARACERT_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"
BACKENDS = ("python", "cython") if _ckernels is not None else ("python",)


def _impl(backend, width):
    if backend in (None, "auto"):
        return _ckernels if _ckernels is not None and width <= 64 else _pykernels
    if backend == "python":
        return _pykernels
    if backend == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not built")
        if width > 64:
            raise ValueError("compiled kernels handle at most 64 bits")
        return _ckernels
    raise ValueError(f"unknown backend {backend!r}")


def minimal_transversals(facets, n_vertices, backend=None):
    return _impl(backend, n_vertices).minimal_transversals(list(facets))


def max_admissible(gens, n_vertices, budget, backend=None):
    width = max(n_vertices, len(gens))
    return _impl(backend, width).max_admissible(list(gens), budget)


admissible_symbols = _pykernels.admissible_symbols

"""Kernel backend selection.

The compiled extension ``raylab._kernels`` (Cython) is used when present;
otherwise the pure Python module ``raylab._kernels_py`` with the identical
contract.  Set RAYLAB_PURE=1 to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py


def _load():
    if os.environ.get("RAYLAB_PURE") == "1":
        return _kernels_py
    try:
        from . import _kernels  # type: ignore[attr-defined]

        return _kernels
    except ImportError:
        return _kernels_py


_impl = _load()

BACKEND = _impl.BACKEND
cancel_adjacent = _impl.cancel_adjacent
prepare_rank_context = _impl.prepare_rank_context
sort_slots = _impl.sort_slots
count_cross_pairs = _impl.count_cross_pairs
count_self_pairs = _impl.count_self_pairs
exchange_pass = _impl.exchange_pass


def backend_name() -> str:
    return BACKEND


def load_backend(name: str):
    """Return a specific backend module ('pure' or 'cython'); for benchmarks."""
    if name == "pure":
        return _kernels_py
    if name == "cython":
        from . import _kernels  # type: ignore[attr-defined]

        return _kernels
    raise ValueError(f"unknown backend {name!r}")

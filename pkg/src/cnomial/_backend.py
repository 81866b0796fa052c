"""Kernel backend selection.

The compiled extension (``cnomial._kernels``) is preferred when it imported
successfully; otherwise the pure-Python twin is used.  Selection happens
once at import.  Set ``CNOMIAL_BACKEND=python`` to force the fallback (for
debugging or benchmarking), or use :func:`select` to swap backends
temporarily, e.g. when benchmarking one against the other.
"""
from __future__ import annotations

import os
from contextlib import contextmanager

from . import _kernels_py

_BACKENDS = {"python": _kernels_py}

if os.environ.get("CNOMIAL_BACKEND", "").lower() != "python":
    try:
        from . import _kernels

        _BACKENDS["compiled"] = _kernels
    except ImportError:
        pass

_ACTIVE = "compiled" if "compiled" in _BACKENDS else "python"


def available() -> tuple[str, ...]:
    """Names of importable backends ('compiled' first when present)."""
    return tuple(sorted(_BACKENDS))  # "compiled" sorts before "python"


def active_name() -> str:
    return _ACTIVE


def active():
    """The kernel module currently in use."""
    return _BACKENDS[_ACTIVE]


@contextmanager
def select(name: str):
    """Temporarily activate the named backend (not thread-safe; test/bench use)."""
    global _ACTIVE
    if name not in _BACKENDS:
        raise ValueError(f"backend {name!r} not available; have {available()}")
    previous = _ACTIVE
    _ACTIVE = name
    try:
        yield _BACKENDS[name]
    finally:
        _ACTIVE = previous

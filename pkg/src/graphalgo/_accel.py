"""Backend switch for the compiled kernels.

Numba is used when importable unless ``GRAPHALGO_DISABLE_NUMBA`` is set to a
truthy value; the pure numpy/Python kernels are then used instead. Tests and
the benchmark flip the backend at runtime with :func:`use_backend`.
"""

from __future__ import annotations

import contextlib
import os

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False

ENV_FLAG = "GRAPHALGO_DISABLE_NUMBA"


def _env_disabled() -> bool:
    return os.environ.get(ENV_FLAG, "").strip().lower() not in ("", "0", "false", "no")


_backend = "numba" if HAVE_NUMBA and not _env_disabled() else "python"


def njit(*args, **kwargs):
    """``numba.njit`` when available, identity decorator otherwise."""
    if HAVE_NUMBA:
        return numba.njit(*args, **kwargs)
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]
    return lambda f: f


def backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    global _backend
    if name not in ("numba", "python"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba is not installed")
    _backend = name


@contextlib.contextmanager
def use_backend(name: str):
    prev = _backend
    set_backend(name)
    try:
        yield
    finally:
        set_backend(prev)


def set_threads(k: int | None) -> None:
    if k and HAVE_NUMBA:
        numba.set_num_threads(min(int(k), numba.config.NUMBA_NUM_THREADS))

"""Selects the game-value kernel implementation.

Two interchangeable kernels exist: a jitted one (numba) and a pure-Python
twin. The environment variable DOMGAMES_BACKEND picks one:

    DOMGAMES_BACKEND=numba    require the jitted kernel, fail if missing
    DOMGAMES_BACKEND=python   force the pure-Python kernel
    unset / auto              jitted if numba imports, else pure Python

Both kernels share one signature and are bit-for-bit agreeing (tested); the
fallback is simply slower.
"""

from __future__ import annotations

import os

ENV_VAR = "DOMGAMES_BACKEND"

_cache: dict[str, object] = {}


def _resolve() -> tuple[str, object]:
    want = os.environ.get(ENV_VAR, "auto").strip().lower()
    if want not in ("auto", "numba", "python"):
        raise ValueError(f"{ENV_VAR} must be 'numba', 'python', or 'auto'")
    if want == "python":
        from . import _minimax_py
        return "python", _minimax_py.search
    try:
        from . import _minimax_numba
        return "numba", _minimax_numba.search
    except ImportError:
        if want == "numba":
            raise
        from . import _minimax_py
        return "python", _minimax_py.search


def backend_name() -> str:
    if "resolved" not in _cache:
        _cache["resolved"] = _resolve()
    return _cache["resolved"][0]


def search_fn():
    if "resolved" not in _cache:
        _cache["resolved"] = _resolve()
    return _cache["resolved"][1]


def reset() -> None:
    """Forget the resolved backend (tests flip the env var)."""
    _cache.clear()

"""Kernel backend selection.

Two interchangeable implementations of the numerical hot loops exist:

* ``reference`` - pure NumPy, always available.
* ``_fastkern`` - Cython extension compiled at install time.

Selection happens once at import, controlled by the ENTROPART_BACKEND
environment variable: "auto" (default; compiled if importable), "python",
or "compiled" (error if the extension is missing).
"""
from __future__ import annotations

import os

from . import reference

_REQUIRED = ("becke_weights_kernel", "eval_primitives", "quad_form",
             "quad_form_block")

_active = None


def _load(choice: str):
    if choice == "python":
        return reference
    if choice == "compiled":
        from . import _fastkern  # raises ImportError if not built
        return _fastkern
    if choice == "auto":
        try:
            from . import _fastkern
            return _fastkern
        except ImportError:
            return reference
    raise ValueError(
        f"ENTROPART_BACKEND={choice!r} not recognized; "
        "use 'auto', 'python', or 'compiled'")


def get_backend():
    """Return the active kernel module (selected on first call)."""
    global _active
    if _active is None:
        choice = os.environ.get("ENTROPART_BACKEND", "auto").strip().lower()
        mod = _load(choice)
        for name in _REQUIRED:
            if not hasattr(mod, name):
                raise AttributeError(
                    f"backend {mod.__name__} is missing kernel {name!r}")
        _active = mod
    return _active


def active_backend_name() -> str:
    return get_backend().NAME


def set_backend(choice: str):
    """Force a backend (mainly for tests and benchmarks)."""
    global _active
    _active = _load(choice)
    return _active

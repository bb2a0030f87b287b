"""Selects the token-move kernel: compiled if importable, else pure Python.

Set ``SUPERTOKEN_PURE=1`` to force the pure-Python kernel.
"""
from __future__ import annotations

import os

try:
    from . import _ckernel
except ImportError:  # extension not built
    _ckernel = None

HAVE_COMPILED = _ckernel is not None
DEFAULT = "python" if os.environ.get("SUPERTOKEN_PURE") == "1" or not HAVE_COMPILED else "compiled"


def available() -> list[str]:
    return ["compiled", "python"] if HAVE_COMPILED else ["python"]


def resolve(name: str | None) -> str:
    name = name or DEFAULT
    if name not in ("compiled", "python"):
        raise ValueError(f"unknown kernel {name!r}")
    if name == "compiled" and not HAVE_COMPILED:
        raise RuntimeError("compiled kernel requested but the extension is not built")
    return name

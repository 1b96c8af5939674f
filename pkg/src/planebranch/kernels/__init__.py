"""Kernel backends for the hot boolean-table scans.

Two interchangeable implementations exist: a compiled C extension
(``_cbits``, built from Cython) and a pure-Python bitset module (``pure``).
The compiled one is preferred when importable; set ``PLANEBRANCH_PURE=1``
to force the fallback.  Both expose the same module-level functions and an
opaque ``Table`` type; tables must not be mixed across backends.
"""

import os

from . import pure

try:
    from . import _cbits
except ImportError:
    _cbits = None

if os.environ.get("PLANEBRANCH_PURE"):
    active = pure
else:
    active = _cbits if _cbits is not None else pure


def backends():
    """All importable backends, compiled one first."""
    return [k for k in (_cbits, pure) if k is not None]


def get(name):
    for k in backends():
        if k.NAME == name:
            return k
    raise KeyError(f"no kernel backend named {name!r}")

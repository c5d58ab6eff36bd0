"""Selects the bitset-kernel backend at import time.

Prefers the compiled extension; falls back to the NumPy implementation when
the extension is missing or ``CYCLOMAT_PURE`` is set to a non-empty value.
Both backends expose identical functions (see ``cyclomat._core_py``).
"""

from __future__ import annotations

import os

if os.environ.get("CYCLOMAT_PURE"):
    from . import _core_py as _impl
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _core_py as _impl

BACKEND_NAME: str = _impl.BACKEND_NAME

independence_table = _impl.independence_table
dependence_table = _impl.dependence_table
rank_table = _impl.rank_table
circuit_masks = _impl.circuit_masks
maximal_true_sets = _impl.maximal_true_sets
exchange_violation = _impl.exchange_violation

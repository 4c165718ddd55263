"""Kernel backend selection: compiled extension if available, else pure Python.

Both backends expose the same functions with bit-identical results; the
compiled one only exists for speed.  Set KEMPELAB_FORCE_PURE=1 to ignore
the extension (used by the cross-backend agreement tests and benchmarks).
"""

from __future__ import annotations

import os

if os.environ.get("KEMPELAB_FORCE_PURE") == "1":
    from kempelab import _purecore as _impl
else:
    try:
        from kempelab import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        from kempelab import _purecore as _impl

BACKEND = _impl.BACKEND

exclusion_codes = _impl.exclusion_codes
adjacency_from_codes = _impl.adjacency_from_codes
check_instance = _impl.check_instance
count_cliques = _impl.count_cliques
count_quadruples = _impl.count_quadruples
find_quadruple = _impl.find_quadruple
max_clique_size = _impl.max_clique_size
clique_decision = _impl.clique_decision
has_clique = _impl.has_clique


def backend_name() -> str:
    return BACKEND

"""Kernel backend selection.

Imports the compiled extension when available, otherwise the pure-Python
fallback. Set GROWTREE_PURE_PYTHON=1 to force the fallback (used by the
backend-equivalence tests and the kernel benchmark).
"""
import os

if os.environ.get("GROWTREE_PURE_PYTHON") == "1":
    from . import _pykernels as _backend
else:
    try:
        from . import _ckernels as _backend  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernels as _backend

BACKEND = "compiled" if _backend.__name__.endswith("_ckernels") else "python"

all_pairs_bfs = _backend.all_pairs_bfs
hitting_walk = _backend.hitting_walk
hitting_trials = _backend.hitting_trials
mix64 = _backend.mix64
u64_next = _backend.u64_next
stream_seed = _backend.stream_seed

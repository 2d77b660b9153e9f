"""Kernel backend selection.

The hot inner loops (window scans, shift correlation, bit-vector
accumulation, pseudorandom fills) exist twice: jit-compiled in
``numba_impl`` and vectorized in ``numpy_impl``.  Both produce
bit-identical results.

Selection is controlled by the SYNDET_BACKEND environment variable:

* unset or ``auto`` -- use numba when it imports and compiles, else numpy;
* ``numpy``         -- force the pure-numpy path;
* ``numba``         -- require the jit path (raises if unavailable).
"""

import os

_requested = os.environ.get("SYNDET_BACKEND", "auto").strip().lower()
if _requested not in ("auto", "numba", "numpy"):
    raise ValueError(
        f"SYNDET_BACKEND must be 'auto', 'numba' or 'numpy', got {_requested!r}"
    )

if _requested == "numpy":
    from . import numpy_impl as _impl

    BACKEND = "numpy"
else:
    try:
        from . import numba_impl as _impl

        _impl.warmup()
        BACKEND = "numba"
    except Exception:
        if _requested == "numba":
            raise
        from . import numpy_impl as _impl

        BACKEND = "numpy"

window_best_count = _impl.window_best_count
best_shift = _impl.best_shift
or_shifted = _impl.or_shifted
max_false_run = _impl.max_false_run
first_true_run = _impl.first_true_run
longest_true_run = _impl.longest_true_run
low_gap_window = _impl.low_gap_window
bernoulli_fill = _impl.bernoulli_fill

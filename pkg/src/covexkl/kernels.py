"""Kernel backend selection.

Prefers the compiled extension covexkl._speedups; falls back to the
pure-Python twin.  Set COVEX_KL_PURE=1 to force the fallback (used by
the kernel-parity tests and the benchmark).
"""

import os

if os.environ.get("COVEX_KL_PURE"):
    from . import _purekernels as _impl

    BACKEND = "pure"
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _purekernels as _impl

        BACKEND = "pure"

inv_count = _impl.inv_count
length = _impl.length
apply_right = _impl.apply_right
apply_left = _impl.apply_left
is_right_descent = _impl.is_right_descent
is_left_descent = _impl.is_left_descent
first_left_descent = _impl.first_left_descent
bruhat_leq_a = _impl.bruhat_leq_a
bruhat_leq_lift = _impl.bruhat_leq_lift

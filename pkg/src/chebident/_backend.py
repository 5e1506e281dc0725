"""Kernel backend selection.

By default the compiled kernels are used when the extension built,
falling back to the pure-Python module otherwise.  The environment
variable CHEBIDENT_KERNELS overrides the choice:

    auto     compiled if available, else pure Python (default)
    c        require the compiled kernels (ImportError if missing)
    python   force the pure-Python kernels

Both implementations are behaviorally identical; tests compare them
directly.
"""

from __future__ import annotations

import os

_choice = os.environ.get("CHEBIDENT_KERNELS", "auto").strip().lower()

if _choice in ("auto", "", "c", "compiled"):
    try:
        from chebident import _kernels_c as _impl

        KERNEL_BACKEND = "c"
    except ImportError:
        if _choice in ("c", "compiled"):
            raise
        from chebident import _kernels_py as _impl

        KERNEL_BACKEND = "python"
elif _choice in ("python", "py", "pure"):
    from chebident import _kernels_py as _impl

    KERNEL_BACKEND = "python"
else:
    raise ValueError(
        f"CHEBIDENT_KERNELS={_choice!r}: expected 'auto', 'c' or 'python'"
    )

add_terms = _impl.add_terms
sub_terms = _impl.sub_terms
scale_terms = _impl.scale_terms
mul_terms = _impl.mul_terms
iadd_scaled_shifted = _impl.iadd_scaled_shifted
prune_zeros = _impl.prune_zeros
cauchy_mul = _impl.cauchy_mul


def kernel_backend() -> str:
    """Which kernel implementation is active: 'c' or 'python'."""
    return KERNEL_BACKEND

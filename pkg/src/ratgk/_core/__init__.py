"""Kernel selection: compiled extension when available, pure Python otherwise.

Set RATGK_PURE=1 to force the pure kernels (useful for benchmarking and for
checking that both implementations agree).
"""

import os

from . import pure

if os.environ.get("RATGK_PURE") == "1":
    _impl = pure
    IMPLEMENTATION = "pure"
else:
    try:
        from . import _speed as _impl
        IMPLEMENTATION = "compiled"
    except ImportError:
        _impl = pure
        IMPLEMENTATION = "pure"

mat_closure = _impl.mat_closure
perm_closure = _impl.perm_closure
mat_class_partition = _impl.mat_class_partition
mat_element_orders = _impl.mat_element_orders

KERNEL_NAMES = ("mat_closure", "perm_closure", "mat_class_partition",
                "mat_element_orders")


def compiled_module():
    """The compiled kernel module, or None if it was never built."""
    try:
        from . import _speed
        return _speed
    except ImportError:
        return None

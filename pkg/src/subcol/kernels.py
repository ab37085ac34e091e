"""Picks the compiled reachability kernels when available.

Set ``SUBCOL_PURE_PYTHON=1`` to force the pure-Python implementation.
"""

import os

if os.environ.get("SUBCOL_PURE_PYTHON", "") not in ("", "0"):
    from . import _pykernels as impl
else:
    try:
        from . import _ckernels as impl
    except ImportError:  # extension not built
        from . import _pykernels as impl

IMPLEMENTATION = impl.IMPLEMENTATION
greach = impl.greach
subreach = impl.subreach
gcol_value = impl.gcol_value
semiweak_value = impl.semiweak_value
greach_all = impl.greach_all
subreach_all = impl.subreach_all

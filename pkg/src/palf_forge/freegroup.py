"""Free group word kernels with a compiled fast path.

The Cython module ``_freegroup_cy`` is used when it has been built; otherwise
the pure-Python ``_freegroup_py`` is loaded. Set ``PALF_FORGE_PURE=1`` to force
the fallback.
"""

import os

if os.environ.get("PALF_FORGE_PURE"):
    from . import _freegroup_py as _impl
else:
    try:
        from . import _freegroup_cy as _impl
    except ImportError:  # extension not built
        from . import _freegroup_py as _impl

BACKEND = "cython" if _impl.__name__.endswith("_cy") else "python"

reduce_word = _impl.reduce_word
invert = _impl.invert
apply = _impl.apply
compose = _impl.compose
total_length = _impl.total_length


def identity(rank):
    return tuple((g,) for g in range(1, rank + 1))


"""Hot loops of metabolizer enumeration.

The compiled extension is used when it was built; otherwise the pure-Python
implementation is selected. Set ``KNOTORDER_PURE_PYTHON=1`` to force the
fallback.
"""

import os

from . import _pykernels

try:
    if os.environ.get("KNOTORDER_PURE_PYTHON"):
        raise ImportError("compiled kernels disabled by environment")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels

BACKEND = "cython" if _ckernels is not None else "python"


def get_backend(name=None):
    if name is None:
        name = BACKEND
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} is not available") from None


def isotropic_vectors(p, d, backend=None):
    return get_backend(backend).isotropic_vectors(p, d)


def search_rows(p, d, candidates, backend=None):
    return get_backend(backend).search_rows(p, d, candidates)

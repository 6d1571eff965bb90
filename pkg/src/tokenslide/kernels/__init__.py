"""Backend selection for the hot graph kernels.

Every kernel operates on a CSR adjacency (``indptr``, ``indices`` int64
arrays).  Two interchangeable implementations exist:

* ``numba_backend`` -- ``@njit``-compiled loops, the default.
* ``numpy_backend`` -- vectorised / plain numpy, used as a fallback.

The environment variable ``TOKENSLIDE_BACKEND`` picks one explicitly:
``numba``, ``numpy`` or ``auto`` (default: numba when importable).
"""

import os

_choice = os.environ.get("TOKENSLIDE_BACKEND", "auto").lower()
if _choice not in ("auto", "numba", "numpy"):
    raise RuntimeError(
        f"TOKENSLIDE_BACKEND must be 'auto', 'numba' or 'numpy', got {_choice!r}"
    )

if _choice == "numpy":
    from . import numpy_backend as _impl

    BACKEND = "numpy"
else:
    try:
        from . import numba_backend as _impl

        BACKEND = "numba"
    except ImportError:
        if _choice == "numba":
            raise
        from . import numpy_backend as _impl

        BACKEND = "numpy"

bfs_distances = _impl.bfs_distances
eccentricities = _impl.eccentricities
any_eccentricity_exceeds = _impl.any_eccentricity_exceeds
girth = _impl.girth
has_short_cycle = _impl.has_short_cycle
component_labels = _impl.component_labels

__all__ = [
    "BACKEND",
    "bfs_distances",
    "eccentricities",
    "any_eccentricity_exceeds",
    "girth",
    "has_short_cycle",
    "component_labels",
]

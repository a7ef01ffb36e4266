"""Hot loops: numba-compiled when available, pure numpy otherwise.

Both backends expose the same functions with the same results.  The backend
is chosen once at import; ``VARLAT_DISABLE_NUMBA=1`` forces numpy.
"""
from ..config import DISABLE_NUMBA
from . import _numpy

BACKEND = "numpy"
_impl = _numpy

if not DISABLE_NUMBA:
    try:
        from . import _numba

        _impl = _numba
        BACKEND = "numba"
    except ImportError:  # numba missing or broken
        pass

# element-kind codes shared by both backends
DISTRIBUTIVE, CODISTRIBUTIVE, STANDARD, COSTANDARD, MODULAR, UPPER_MODULAR, LOWER_MODULAR = range(7)

first_nonassociative = _impl.first_nonassociative
identity_counterexample = _impl.identity_counterexample
zero_counterexample = _impl.zero_counterexample
components = _impl.components
join_meet_tables = _impl.join_meet_tables
element_violation = _impl.element_violation
neutral_violation = _impl.neutral_violation


def backends():
    """Map of available backend name -> module, for benchmarks and cross-checks."""
    out = {"numpy": _numpy}
    try:
        from . import _numba

        out["numba"] = _numba
    except ImportError:
        pass
    return out

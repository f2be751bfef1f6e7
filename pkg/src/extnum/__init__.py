"""Exact arithmetic of external numbers and flexible matrices.

An external number ``a + A`` is a real ``a`` blurred by a neutrix ``A``, a
convex additive group of error terms such as the infinitesimals ``o`` or the
limited numbers ``L``.  Reals here are exact rational functions of a fixed
positive infinitesimal ``eps``, so every inclusion and equality between
external numbers is decided exactly.

>>> from extnum import parse_matrix, det
>>> str(det(parse_matrix("[[1+o,0,0],[0,1,1+eps],[0,1,1]]")))
'o'
"""

from .determinant import *  # noqa: F401,F403
from .determinant import __all__ as _det_all
from .errors import *  # noqa: F401,F403
from .external import *  # noqa: F401,F403
from .external import __all__ as _ext_all
from .harness import *  # noqa: F401,F403
from .harness import __all__ as _harness_all
from .inverse import *  # noqa: F401,F403
from .inverse import __all__ as _inv_all
from .matrix import *  # noqa: F401,F403
from .matrix import __all__ as _mat_all
from .neutrix import *  # noqa: F401,F403
from .neutrix import __all__ as _neut_all
from .nsreal import *  # noqa: F401,F403
from .nsreal import __all__ as _ns_all
from .parse import *  # noqa: F401,F403
from .parse import __all__ as _parse_all
from .rank import *  # noqa: F401,F403
from .rank import __all__ as _rank_all
from .relation import Relation, RelationReport, relate

__version__ = "0.1.0"

_errors = [
    "ExtNumError", "DomainError", "ResourceError", "NotZeroless", "ShapeMismatch", "NotSquare", "SizeCap",
    "ConditionUnmet", "NotReduced", "NotTriangular", "BadTolerance", "HypothesisFailed", "UnknownSuite",
    "ParseError", "TheoremViolation",
]

__all__ = sorted(
    set(_ns_all + _neut_all + _ext_all + _mat_all + _det_all + _inv_all + _rank_all + _harness_all + _parse_all + _errors)
    | {"Relation", "RelationReport", "relate"}
)

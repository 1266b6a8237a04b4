"""Exact-arithmetic orbit method for nilpotent Lie superalgebras.

From raw structure constants: reduced forms, coadjoint-orbit data, Vergne
polarizations, polarizing systems with consistent Clifford modules, the
kappa invariant, orbit-equality decisions, and the Stone-von Neumann
classification for Heisenberg-Clifford algebras -- every algebraic relation
verified exactly over the rationals.
"""

__version__ = "0.1.0"

from .scalar import Q, qstr  # noqa: F401
from .superalg import (  # noqa: F401
    LieSuperalgebra,
    Subspace,
    bracket,
    bracket_span,
    build_algebra,
    center,
    ideal_closure,
    lower_central_series,
    quotient,
    subalgebra_closure,
)

"""Exact counts of lines on projective hypersurfaces, two independent ways.

The number of lines on a degree-k hypersurface in CP^(N-1) that meet
prescribed linear subspaces is an integer, and this package computes it
as one, with no floating point in sight.  Two engines answer every
query:

  * a residue engine that extracts one coefficient of an explicit
    polynomial in two formal weights (`gw_n_point_residue`), and
  * a Schubert engine that multiplies classes in the cohomology of the
    Grassmannian G(2, N) by the Pieri rule (`gw_n_point_schubert`).

The engines share nothing past basic polynomial arithmetic, so their
agreement is a strong correctness check; `invariants.compute` runs both
and compares, and for two-point queries also verifies the mirror
decomposition of the invariant into asymmetric pairings.  The classical
sanity anchors: 2875 lines on the quintic threefold, 27 on the cubic
surface.

The `gwlines` console script (or `python -m gwlines`) exposes single
queries, batch sweeps, and a self-test suite.
"""

from .bipoly import BiPoly, Z1, Z2, ZERO_DEGREE
from .invariants import (
    InvalidQueryError,
    InvariantQuery,
    InvariantReport,
    MirrorCheck,
    QueryError,
    compute,
    dimension_check,
    dimension_valid_insertions,
    sweep,
)
from .residue import (
    ResidueMode,
    double_residue,
    euler_poly,
    gw_n_point_residue,
    gw_two_point_localized,
    projective_bundle_integral,
    w_poly,
    w_two_point,
)
from .schubert import (
    Partition2,
    SchubertClass,
    gw_n_point_schubert,
    integrate_g2n,
    pieri_multiply,
    schur_expand,
    schur_poly,
)

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "Z1",
    "Z2",
    "ZERO_DEGREE",
    "ResidueMode",
    "euler_poly",
    "w_poly",
    "double_residue",
    "w_two_point",
    "gw_two_point_localized",
    "gw_n_point_residue",
    "projective_bundle_integral",
    "Partition2",
    "SchubertClass",
    "schur_expand",
    "schur_poly",
    "pieri_multiply",
    "integrate_g2n",
    "gw_n_point_schubert",
    "InvariantQuery",
    "InvariantReport",
    "MirrorCheck",
    "QueryError",
    "InvalidQueryError",
    "dimension_check",
    "dimension_valid_insertions",
    "compute",
    "sweep",
    "__version__",
]

"""Exact logarithmic-bundle computations for hypersurface arrangements."""

from .arrangement import Arrangement, ArrangementError, HyperplaneArrangement
from .exactpoly import HomogeneousPoly
from .linalg import RationalMatrix
from .logres import (
    GradedMatrix,
    SplittingType,
    chern,
    cohomology,
    cohomology_table,
    monad,
    presentation,
    splitting_on_line,
    stability_certificate,
)
from .torelli import (
    NeedsAlgebraicRoots,
    QuadricPair,
    dual_pencil_equal,
    iso_witness_oracle,
    on_common_rnc,
    pencil_singular_points,
    quadric_pair_iso_conditions,
    recover_components,
    rnc_fit,
    unstable_dim,
)

__version__ = "0.1.0"

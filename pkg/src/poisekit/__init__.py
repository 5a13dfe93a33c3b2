"""Exact-arithmetic poisedness and n-independence of planar point sets."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    DegenerateConfiguration,
    DuplicatePoints,
    EmptySet,
    Inconsistent,
    InvalidParams,
    NoFundamental,
    NotSolvable,
    OutOfScope,
    ParseError,
    PoisekitError,
    TheoremViolation,
    ZeroDenominator,
)
from .polyspace import Monomial, Point, PointSet, Poly2, collocation_matrix, d_gap, dim_pi, monomials  # noqa: E402
from .independence import (  # noqa: E402
    extract_essential_core,
    fundamental_polynomial,
    interpolate,
    is_essentially_dependent,
    is_independent,
    is_poised,
    is_solvable,
)
from .curves import CurveWitness, check_intersection_characterization, min_containing_degree  # noqa: E402
from .scale import ScaleParams, ScaleVerdict, Witness, classify, max_applicable_size, verify_witness  # noqa: E402

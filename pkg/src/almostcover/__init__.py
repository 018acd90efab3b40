"""Exact Groebner-basis machinery and minimum almost-covers by hyperplanes.

The package computes, in exact arithmetic over the rationals or GF(p):
reduced deglex bases of vanishing ideals of finite point sets, standard
monomials and indicator expansions, the counting and certificate lower
bounds on almost-cover numbers, and exact minimum almost covers via
branch-and-bound over affinely closed traces.
"""

from .bounds import (
    BoundReport,
    ball_size,
    certificate_lower_bound,
    check_binomial_inequalities,
    cor_bounds,
    counting_lower_bound,
    cube_counting_lower_bound,
)
from .cover import (
    ACNumbers,
    AffineMap,
    CoverSolution,
    TraceFamily,
    ac_numbers,
    hyperplane_trace_family,
    min_almost_cover,
    orbit_reduce,
    trace_family,
    verify_cover,
)
from .errors import InvariantError, ParseError
from .families import (
    FamilySpec,
    generate,
    sharp_cover_vnk,
    symmetry_generators,
    szw_sharp_polynomial,
)
from .fields import GF, QQ, Field, GFElement
from .linalg import (
    AffineSubspace,
    Hyperplane,
    PointSet,
    affine_span,
    hyperplane_containing_avoiding,
    rref,
)
from .pointfile import load_pointset, parse_pointset, write_pointset
from .polyring import DEGLEX, LEX, Polynomial, TermOrder, reduce_poly
from .vanishing import (
    GroebnerData,
    IndicatorExpansion,
    buchberger_moller,
    indicator_expansion,
    normal_form,
    separating_degree,
    standard_monomials,
)

__version__ = "0.1.0"

__all__ = [
    "ACNumbers",
    "AffineMap",
    "AffineSubspace",
    "BoundReport",
    "CoverSolution",
    "DEGLEX",
    "Field",
    "FamilySpec",
    "GF",
    "GFElement",
    "GroebnerData",
    "Hyperplane",
    "IndicatorExpansion",
    "InvariantError",
    "LEX",
    "ParseError",
    "PointSet",
    "Polynomial",
    "QQ",
    "TermOrder",
    "TraceFamily",
    "ac_numbers",
    "affine_span",
    "ball_size",
    "buchberger_moller",
    "certificate_lower_bound",
    "check_binomial_inequalities",
    "cor_bounds",
    "counting_lower_bound",
    "cube_counting_lower_bound",
    "generate",
    "hyperplane_containing_avoiding",
    "hyperplane_trace_family",
    "indicator_expansion",
    "load_pointset",
    "min_almost_cover",
    "normal_form",
    "orbit_reduce",
    "parse_pointset",
    "reduce_poly",
    "rref",
    "separating_degree",
    "sharp_cover_vnk",
    "standard_monomials",
    "symmetry_generators",
    "szw_sharp_polynomial",
    "trace_family",
    "verify_cover",
    "write_pointset",
]

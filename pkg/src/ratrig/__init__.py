"""Exact rational trigonometry for general symmetric bilinear forms in three
dimensions, over the rationals and over prime fields."""

from .affine_trig import VectorTriangle, analyze_triangle, archimedes, quadrea, spread
from .exactfield import QQ, FieldArray, FieldElement, FieldSpec
from .linalg3 import Mat3, Vec3
from .metric import (
    BilinearForm,
    b_cross,
    b_dot,
    induced_form,
    quadrance,
    reciprocal_basis,
    scalar_quadruple,
    scalar_triple,
    vector_quadruple,
    vector_triple,
)
from .projective_trig import (
    ProjectivePoint,
    Tripod,
    analyze_tripod,
    b_normal,
    dual_tripod,
    pp_new,
    proj_quadrance,
    pythagoras_spread_solutions,
)

__version__ = "0.1.0"

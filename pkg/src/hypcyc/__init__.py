"""Hyperbolic polygons inscribed in a circle or a horocycle, from their side lengths."""

from .defects import (
    AngleData,
    IsoscelesFan,
    Jacobian,
    angles,
    defect,
    defect_lower_bound_horocyclic,
    isosceles_fan,
    jacobian,
    min_defect_bc3,
    monotone_path,
)
from .embedding import Embedding, emit, embed, embed_cyclic, embed_horocyclic
from .errors import DomainError, NotRealizableError, RadiusDivergesError
from .params import (
    CanonicalForm,
    Kind,
    PolygonClass,
    b0,
    b0_closed_n3,
    b0_closed_n4,
    canonicalize,
    classify,
    congruent,
    h0,
    is_cyclic_realizable,
)
from .solver import (
    RadiusResult,
    quad_diagonal,
    radius,
    radius_closed_quad,
    radius_closed_tri,
    radius_regular,
)
from .trig import apex_angle, apex_angle_dJ, base_angle, model_distance, sector_defect

__version__ = "0.1.0"

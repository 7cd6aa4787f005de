"""Exact arithmetic for elliptic curves over K(t), K = Q or Q(sqrt d).

Covers the group law on rational points, Mumford pairs for degree-3
semi-reduced divisors, height pairings on Mordell-Weil lattices and
intersection counts for affine plane curves.
"""

from __future__ import annotations

from .curve import O, MWPoint, WCurve, add, add_all, negate, on_curve, scalar_mul
from .lattice import (
    DivisorData,
    FiberConfig,
    MWVector,
    SplitType,
    height,
    intersection_from_pairing,
    lattice_pairing,
    pairing_from_geometry,
    splitting_type,
    trisection_height,
)
from .mumford import MumfordPair, SemiReducedDivisor, class_point, mumford_from_points, trisection_construct, validate_mumford
from .planecurves import (
    INDETERMINATE,
    ProjCurve,
    even_contact,
    fiber_gcd_degree,
    homogeneous_resultant_profile,
    intersection_point_count,
    smoothness_check,
)
from .polyring import RFunc, UPoly, XPoly, resultant_x, squarefree_decomposition, xpoly_divrem, xpoly_gcd
from .scalars import QQ, QuadField, QuadScalar

__all__ = [
    "INDETERMINATE", "O", "QQ",
    "DivisorData", "FiberConfig", "MWPoint", "MWVector", "MumfordPair", "ProjCurve", "QuadField",
    "QuadScalar", "RFunc", "SemiReducedDivisor", "SplitType", "UPoly", "WCurve", "XPoly",
    "add", "add_all", "class_point", "even_contact", "fiber_gcd_degree", "height",
    "homogeneous_resultant_profile", "intersection_from_pairing", "intersection_point_count",
    "lattice_pairing", "mumford_from_points", "negate", "on_curve", "pairing_from_geometry",
    "resultant_x", "scalar_mul", "smoothness_check", "splitting_type", "squarefree_decomposition",
    "trisection_construct", "trisection_height", "validate_mumford", "xpoly_divrem", "xpoly_gcd",
]

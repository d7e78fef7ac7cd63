"""Exact Heronian friezes, Plücker friezes and Heronian minor relations."""

from __future__ import annotations

from .geometry import InputError, Point, Polygon, load_polygon, random_polygon, squared_distance, signed_area4
from .heronian import (
    HeronianDiamond,
    HeronianFrieze,
    build_polygonal_frieze,
    extract_diamond,
    is_heronian_diamond,
    load_frieze,
    verify_frieze,
)
from .grassmannian import (
    CoordinateMatrix,
    PluckerRelation,
    coordinate_matrix,
    evaluate_relation,
    generate_plucker_relations,
    minor,
)
from .relations import (
    HeronianMinorRelation,
    MinorStatus,
    brute_force_relations,
    classify,
    enumerate_relations,
    minor_status,
    to_s_relation,
    verify_s_relation,
)
from .grids import (
    build_minor_frieze,
    build_s_subfrieze,
    check_diamond_determinants,
    check_s_diamonds,
    extract_plucker_diamond,
    plucker_frieze,
)

__version__ = "0.1.0"

"""hullcraft: Hermitian hulls of Reed-Solomon-type codes over GF(q^2) and the
entanglement-assisted quantum codes they produce."""

from .eaqec import EaqecParams, css_dual, css_primary, defect, enumerate_for_length_distance, is_mds_eaqec
from .exactla import GfMatrix, nullspace, rank, rowspace_meet, rref
from .field import FieldTower, build_tower, tower_for_q
from .hullctl import reduce_hull, standard_form
from .lincode import (
    LinearCode,
    euclidean_dual,
    hermitian_dual,
    hermitian_hull,
    hull_dim,
    is_mds,
    min_distance,
    puncture,
    scale,
    shorten,
)
from .rsfam import FamilySpec, build_family, subgroup_candidate
from .twistrs import TwistSpec, twisted_code, twisted_hull_candidate

__version__ = "0.1.0"

__all__ = [
    "EaqecParams", "FamilySpec", "FieldTower", "GfMatrix", "LinearCode", "TwistSpec",
    "build_family", "build_tower", "css_dual", "css_primary", "defect",
    "enumerate_for_length_distance", "euclidean_dual", "hermitian_dual", "hermitian_hull",
    "hull_dim", "is_mds", "is_mds_eaqec", "min_distance", "nullspace", "puncture", "rank",
    "reduce_hull", "rowspace_meet", "rref", "scale", "shorten", "standard_form",
    "subgroup_candidate", "tower_for_q", "twisted_code", "twisted_hull_candidate",
]

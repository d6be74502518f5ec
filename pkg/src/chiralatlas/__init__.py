"""Classification of chiral polytopes by their rotation group."""

__version__ = "0.1.0"

from .errors import AtlasError, CapacityError, InputError, InvariantError, ParseError
from .perm import Permutation, PermGroup, build_group, compose, element_order, inverse
from .analysis import (centralizer, conjugacy_classes, cyclic_normalizer, involutions,
                       subgroup_intersection)
from .cplus import (AlphaTuple, PolytopeRecord, SchlafliType, SigmaTuple, alpha_from_sigma,
                    check_intersection_property_plus, check_linear_diagram,
                    extends_to_automorphism, is_chiral, mirror, schlafli_type,
                    sigma_from_alpha)
from .blt import SearchConfig, SearchStats, classify, deduplicate, extend_tuple
from .hhl import classify_hhl
from .groups import GroupSpec, parse_group

__all__ = [
    "AtlasError", "CapacityError", "InputError", "InvariantError", "ParseError",
    "Permutation", "PermGroup", "build_group", "compose", "element_order", "inverse",
    "centralizer", "conjugacy_classes", "cyclic_normalizer", "involutions",
    "subgroup_intersection",
    "AlphaTuple", "PolytopeRecord", "SchlafliType", "SigmaTuple", "alpha_from_sigma",
    "check_intersection_property_plus", "check_linear_diagram", "extends_to_automorphism",
    "is_chiral", "mirror", "schlafli_type", "sigma_from_alpha",
    "SearchConfig", "SearchStats", "classify", "deduplicate", "extend_tuple",
    "classify_hhl", "GroupSpec", "parse_group",
]

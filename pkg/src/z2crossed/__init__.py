"""Exact braided Z2-crossed tensor categories from discriminant forms."""

from .abgroup import CosetMod2, Element, FinAbGroup
from .category import (
    CoherenceReport,
    CrossedCategory,
    Defect,
    Point,
    make_category,
)
from .cocycle import CocycleData, CocycleReport, build
from .discform import DiscriminantForm, JordanParseError, parse_jordan
from .equivariant import (
    ModularData,
    ModularReport,
    eq_dim,
    eq_dual,
    eq_fusion,
    eq_twist,
    modular_data,
    s_matrix,
    simple_objects,
    t_matrix,
    verify_modular,
    verlinde,
)
from .lattice import (
    GramParseError,
    Lattice,
    build_cocycle_from_lattice,
    parse_gram,
    verify_milgram,
)
from .scalars import Cyclotomic, integer, root_of_unity, sqrt_int

__version__ = "0.1.0"

__all__ = [
    "CocycleData",
    "CocycleReport",
    "CoherenceReport",
    "CosetMod2",
    "CrossedCategory",
    "Cyclotomic",
    "Defect",
    "DiscriminantForm",
    "Element",
    "FinAbGroup",
    "GramParseError",
    "JordanParseError",
    "Lattice",
    "ModularData",
    "ModularReport",
    "Point",
    "build",
    "build_cocycle_from_lattice",
    "eq_dim",
    "eq_dual",
    "eq_fusion",
    "eq_twist",
    "integer",
    "make_category",
    "modular_data",
    "parse_gram",
    "parse_jordan",
    "root_of_unity",
    "s_matrix",
    "simple_objects",
    "sqrt_int",
    "t_matrix",
    "verify_milgram",
    "verify_modular",
    "verlinde",
]

"""Color Lie superalgebras over Q(q): enveloping algebras, cocycle twists and homology."""

__version__ = "0.1.0"

from .errors import ColorLieError, ParseError, SchemaError, UnsupportedError
from .scalars import Scalar, UnitMonomial
from .grading import Bicharacter, Cocycle, GroupElement, GroupSpec, gamma_from_cocycle, split_bicharacter
from .liealg import ColorLieAlgebra, builtin_algebra, twist_lie, verify_color_axioms
from .uea import AlgebraPresentation, UEAElement, normalize, pbw_consistency_check
from .gmod import GradedModule, kernel_image, top_exterior_rep, twist_module, verify_module
from .homology import ce_complex, ext_dims, ext_twist_compare, grade_of_trivial, minimal_resolution

__all__ = [
    "AlgebraPresentation", "Bicharacter", "Cocycle", "ColorLieAlgebra", "ColorLieError", "GradedModule",
    "GroupElement", "GroupSpec", "ParseError", "Scalar", "SchemaError", "UEAElement", "UnitMonomial",
    "UnsupportedError", "builtin_algebra", "ce_complex", "ext_dims", "ext_twist_compare",
    "gamma_from_cocycle", "grade_of_trivial", "kernel_image", "minimal_resolution", "normalize",
    "pbw_consistency_check", "split_bicharacter", "top_exterior_rep", "twist_lie", "twist_module",
    "verify_color_axioms", "verify_module",
]

"""Exact-arithmetic library and verification CLI for the ternary
"quaternion" (nonion) algebra, its alternating triple bracket and
structure-constant tables, the cubic determinant norm, the associated
root system, and the n-generator ternary Clifford algebra.

Everything is recomputed from first principles in the exact field
Q(j, sqrt2, sqrt3) and diffed against transcribed reference tables;
no floating point enters any verification path.
"""

from ._version import __version__
from .field import FieldElem, J, J2, ONE, SQRT2, SQRT3, SQRT6, ZERO, j_pow, rational
from .matrix import Mat3, NotInSpanError, SingularGramError, decompose_in_basis, hs_inner
from .bases import (
    NonionBasis,
    PhaseTwist,
    TU3Basis,
    cyclic_relabel,
    nonion_basis,
    pair_phase_matrix,
    phase_twist,
    tu3_basis,
)
from .bracket import (
    FixtureParseError,
    FixtureRowCountError,
    NotCentralError,
    StructureRow,
    TableDiff,
    binary_reduction_check,
    diff_table,
    s3_bracket,
    structure_table,
)
from .poly import MPoly, NonionPoly
from .cubic import (
    TermCensus,
    UnknownVariantError,
    assemble_qhat,
    det_poly,
    term_census,
    triple_product_components,
    variant_poly,
)
from .roots import (
    NotProportionalError,
    cartan_check,
    extract_alpha_root,
    extract_beta_root,
    gellmann_decompose,
    root_inner,
    su3_structure_constants,
    z3_rotate,
)
from .clifford import (
    CliffElement,
    LengthMismatchError,
    degree_census,
    dimension,
    grade,
    normal_order_product,
    s3_symmetric_sum,
    weighted_identity_check,
)
from .fixtures import surface_poly_fixture

__all__ = [
    "__version__",
    "FieldElem", "J", "J2", "ONE", "SQRT2", "SQRT3", "SQRT6", "ZERO", "j_pow", "rational",
    "Mat3", "NotInSpanError", "SingularGramError", "decompose_in_basis", "hs_inner",
    "NonionBasis", "TU3Basis", "PhaseTwist", "nonion_basis", "tu3_basis",
    "cyclic_relabel", "pair_phase_matrix", "phase_twist",
    "StructureRow", "TableDiff", "NotCentralError", "FixtureParseError",
    "FixtureRowCountError", "s3_bracket", "binary_reduction_check",
    "structure_table", "diff_table",
    "MPoly", "NonionPoly", "TermCensus", "UnknownVariantError", "assemble_qhat",
    "det_poly", "variant_poly", "triple_product_components", "term_census",
    "NotProportionalError", "cartan_check", "extract_alpha_root", "extract_beta_root",
    "root_inner", "z3_rotate", "gellmann_decompose", "su3_structure_constants",
    "CliffElement", "LengthMismatchError", "normal_order_product", "s3_symmetric_sum",
    "weighted_identity_check", "dimension", "degree_census", "grade",
    "surface_poly_fixture",
]

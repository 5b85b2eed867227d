"""Generalized Fiedler pencils with repetition for rational matrices."""
from .blocks import (MatrixAssignment, PolynomialMatrix, assignment_product,
                     corner_block, elementary, fiedler, fiedler_product)
from .pencils import (BlockPencil, GfprParams, HypothesisWarning, QuasiIdentity,
                      Realization, StructuredPencil, StructureSearchError,
                      build_block_symmetric, build_fiedler_pencil, build_gfpr,
                      build_skew_symmetric, build_t_even, build_t_odd,
                      quasi_identity_search, structure_holds)

__version__ = "0.1.0"

"""Exact nilpotency analysis for finite-dimensional Leibniz algebras.

Structure-constant algebras over Q or GF(p), canonical subspace arithmetic,
the four nilpotency series with the strong-index bound made executable, a
right-normed term rewriter with an evaluation oracle, and a CLI.
"""

__version__ = "0.1.0"

from .algebra import (
    AlgebraDef,
    IdealHandle,
    algebra_from_constants,
    bracket,
    es_of,
    full_ideal,
    ideal_closure,
    is_right_leibniz,
    squares_ideal,
    subspace_product,
    verify_left_leibniz,
    verify_right_leibniz,
)
from .fields import GF, QQ, PrimeField, RationalField
from .linalg import (
    Subspace,
    Vector,
    basis_vector,
    contains,
    full_subspace,
    is_subspace_of,
    span,
    subspace_intersect,
    subspace_sum,
    vector,
    zero_subspace,
    zero_vector,
)
from .series import (
    ChainVerificationError,
    NilpotencyProfile,
    SeriesKind,
    SeriesTable,
    bk_chain,
    compute_series,
    es_nil_index,
    general_powers,
    index_bound,
    left_powers,
    left_translates,
    nilpotency_profile,
    right_powers,
    right_translates,
    strong_filtration,
    verify_paper_inclusions,
)
from .terms import (
    Leaf,
    LinComb,
    Node,
    RightWord,
    evaluate,
    measures,
    normalize,
    parse,
    psom_expand,
)

"""Exact toolkit for proper polyhedral cones: duality, extreme rays,
Lyapunov rank and direct-sum decomposition, with checks of the
classification of permutation invariant cones."""

from .catalog import ab_cone, direct_sum, orthant, qpn, random_simplicial
from .cone import Cone, DDResult, double_description, from_document, to_document
from .decompose import Decomposition, OrthantForm, decompose, is_irreducible, recognize_orthant_form
from .errors import (
    ConeError,
    DocumentError,
    InvalidAB,
    NonConvergence,
    NotPermutationInvariant,
    NotPointed,
    NotProper,
    ZeroCone,
)
from .lyapunov import complementary_pairs, is_lyapunov_like, ll_basis, lyapunov_rank
from .symmetry import OnesAxis, Perm, contains_ones_axis, is_permutation_invariant, orbit_cone

__version__ = "0.1.0"

__all__ = [
    "ab_cone", "direct_sum", "orthant", "qpn", "random_simplicial",
    "Cone", "DDResult", "double_description", "from_document", "to_document",
    "Decomposition", "OrthantForm", "decompose", "is_irreducible", "recognize_orthant_form",
    "ConeError", "DocumentError", "InvalidAB", "NonConvergence", "NotPermutationInvariant",
    "NotPointed", "NotProper", "ZeroCone",
    "complementary_pairs", "is_lyapunov_like", "ll_basis", "lyapunov_rank",
    "OnesAxis", "Perm", "contains_ones_axis", "is_permutation_invariant", "orbit_cone",
]

"""Exact adjoint-invariant counts for semisimple Lie algebras.

Closed forms for ``dim (adj(g) x V_mu x V_nu)^g`` and its symmetric and
antisymmetric refinements, together with independent Racah-Speiser and
character-theoretic oracles.
"""

from .characters import (
    VirtualCharacter,
    WeightMultiplicityMap,
    alt2_char,
    char_double,
    char_product,
    character,
    decompose_character,
    freudenthal_weights,
    invariant_dim_in,
    sym2_char,
    weyl_dim,
)
from .root_system import AlgebraSpec, Root, RootSystem, SimpleType, Weight, add_root, build, pairing, parse_algebra
from .tensor import (
    Decomposition,
    adjoint_multiplicity_in_product,
    adjoint_tensor,
    invariant_dim_adj,
    tensor_general,
)
from .theorems import (
    FSIndicator,
    Lemma22Case,
    PairingCase,
    SplitResult,
    InvariantCase,
    classify_pairing,
    enumerate_table1,
    frobenius_schur,
    fs_oracle,
    invariant_dim_closed,
    kw_question,
    split_closed,
    split_oracle,
    invariant_dim_with_case,
    weakly_orthogonal,
)
from .weyl import DominantResult, opposition, orbit, reflect, to_dominant_shifted

__version__ = "0.1.0"

__all__ = [
    "add_root",
    "adjoint_multiplicity_in_product",
    "adjoint_tensor",
    "AlgebraSpec",
    "alt2_char",
    "build",
    "char_double",
    "char_product",
    "character",
    "classify_pairing",
    "decompose_character",
    "Decomposition",
    "DominantResult",
    "enumerate_table1",
    "freudenthal_weights",
    "frobenius_schur",
    "fs_oracle",
    "FSIndicator",
    "invariant_dim_adj",
    "invariant_dim_closed",
    "invariant_dim_in",
    "kw_question",
    "Lemma22Case",
    "opposition",
    "orbit",
    "pairing",
    "PairingCase",
    "parse_algebra",
    "reflect",
    "Root",
    "RootSystem",
    "SimpleType",
    "split_closed",
    "split_oracle",
    "SplitResult",
    "sym2_char",
    "tensor_general",
    "invariant_dim_with_case",
    "InvariantCase",
    "to_dominant_shifted",
    "VirtualCharacter",
    "weakly_orthogonal",
    "Weight",
    "WeightMultiplicityMap",
    "weyl_dim",
]

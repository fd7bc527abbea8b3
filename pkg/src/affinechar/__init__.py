"""Exact q-series expansions of affine A_r characters via permutation weights.

The library computes truncated characters of integrable highest weight
modules of the affine algebras A_r^(1) in exact integer arithmetic, by
enumerating the finitely many dominant orbit records at each depth, and
cross-validates the result against shell-organized theta sums and, for the
level-1 vacuum module, a closed eta-quotient form.
"""

from .characters import (
    CharacterSeries,
    anomaly_exponent,
    character_at_point,
    normalized_character,
    signed_dimension_series,
)
from .lattice import (
    MAX_RANK,
    HorizontalWeight,
    RootShell,
    fundamental_dominant,
    inner_product,
    norm,
    root_shell,
    shell_size,
    simple_root,
    weyl_vector,
)
from .orbits import (
    AffineDominant,
    PermutationWeight,
    PermutationWeightSet,
    ShiftedOrbitSpec,
    depth_of,
    enumerate_compositions,
    enumerate_fundamental,
    enumerate_orbit,
    enumerate_translations,
    is_permutation_weight,
    make_shifted_spec,
    signature,
    signature_index,
)
from .qseries import QSeries, basic_character_series, euler_product, lattice_theta
from .schur import (
    alternant,
    homogeneous_values,
    schur_value,
    weyl_dimension,
    weyl_dimension_determinant,
)
from .theta import ShellPolynomial, guaranteed_order, oracle_character, shell_polynomial

__version__ = "0.1.0"

__all__ = [
    "MAX_RANK",
    "AffineDominant",
    "CharacterSeries",
    "HorizontalWeight",
    "PermutationWeight",
    "PermutationWeightSet",
    "QSeries",
    "RootShell",
    "ShellPolynomial",
    "ShiftedOrbitSpec",
    "alternant",
    "anomaly_exponent",
    "basic_character_series",
    "character_at_point",
    "depth_of",
    "enumerate_compositions",
    "enumerate_fundamental",
    "enumerate_orbit",
    "enumerate_translations",
    "euler_product",
    "fundamental_dominant",
    "guaranteed_order",
    "homogeneous_values",
    "inner_product",
    "is_permutation_weight",
    "lattice_theta",
    "make_shifted_spec",
    "norm",
    "normalized_character",
    "oracle_character",
    "root_shell",
    "schur_value",
    "shell_polynomial",
    "shell_size",
    "signature",
    "signature_index",
    "signed_dimension_series",
    "simple_root",
    "weyl_dimension",
    "weyl_dimension_determinant",
    "weyl_vector",
]

"""Exact Gieseker semistability and lexicographic Harder-Narasimhan
filtrations for torus diagonalized rho-sheaves."""

from .ghn import (
    LexFiltration,
    classical_hn_oracle,
    ghn_filtration,
    leading_term_weights,
    refine_blocks,
    unweighted_chain,
)
from .invariant import NuValue, compare_nu, ell_functionals, filtration_from_cochar, is_semistable, nu
from .optimizer import brute_force_max, leading_cochar, slope_canonical
from .polyq import Ordering, RationalPoly, poly_cmp, reduced_hp, slope
from .rootdata import (
    GroupDatum,
    Representation,
    builtin_datum,
    character_group_basis,
    chi_inner,
    gram_matrix,
    levi_center_basis,
    parabolic_type,
    pi_Z,
    primitive_scale,
)
from .sheafmodel import (
    CombinatorialRhoSheaf,
    Summand,
    VarietyDescriptor,
    c_values,
    degree,
    is_central,
    psi_functional,
    sheaf_from_json,
    validate,
)

__version__ = "0.1.0"

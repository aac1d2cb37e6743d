"""Exact construction and verification of higher-order Hankel operators."""

from .algebra import LaurentPoly, binom, factorial, poly_derive, poly_mul, z
from .forms import adjointness_report, conj_symbol, form_K, form_Ktilde, residue_pair, transvect
from .hankel import (
    apply_B,
    b_as_tensor,
    build_Ls,
    build_Ms,
    build_Ns,
    build_Ds,
    coeffs_a,
    matrix_window,
    pascal_lower,
    pascal_lower_inv,
    pascal_upper,
    pascal_upper_inv,
    solve_for_a,
)
from .identities import equivariance_expansion_A, equivariance_expansion_B, identity_A, identity_B
from .parser import parse_symbol
from .sections import HALF, HalfWeight, Section, Sl2, act_sl2, lie_half, proj_minus, proj_plus
from .symtensor import SymTensor, build_recursion, build_v, compute_Cs, project_Ps, section_sigma, sym_act
from .tensor_rep import TensorElt, apply_tensor, lowest_weight, oj_tensor, tensor_act

__version__ = "0.1.0"

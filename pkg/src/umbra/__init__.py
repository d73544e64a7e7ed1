"""Exact umbral calculus on symmetric functions.

Everything is exact: coefficients are ``fractions.Fraction`` and symmetric
functions are stored in the monomial basis, keyed by descending partitions.
"""
from .errors import DomainError, ResourceError, UmbraError
from .config import check_degree, degree_cap, set_degree_cap
from .symfunc import SymFunc, expand_in_vars, m, project_pi
from .bases import antipode, e, forgotten, from_basis, h, omega, pow_, schur, skew_schur, to_basis
from .polys import UniPoly
from .series import FPSeries
from .species import QuasiSpecies, delta_pair, divided_powers, linear_sequence, named_species
from .genera import QuasiGenus, e_genus, full_sequence, h_genus, plethysm, species_genus
from .operators import (
    ShiftInvOp, ShiftedPoly, d_lambda, epsilon, expansion, shift_eval, shift_formal,
    sym_derivative, taylor,
)
from .hopf import OperatorMap, TensorElem, TransferOp, adjoint, coproduct, counit, transfer_between
from .expr import ParseError, eval_text, parse, unparse

__all__ = [
    "DomainError", "ResourceError", "UmbraError",
    "check_degree", "degree_cap", "set_degree_cap",
    "SymFunc", "expand_in_vars", "m", "project_pi",
    "antipode", "e", "forgotten", "from_basis", "h", "omega", "pow_", "schur", "skew_schur", "to_basis",
    "UniPoly", "FPSeries",
    "QuasiSpecies", "delta_pair", "divided_powers", "linear_sequence", "named_species",
    "QuasiGenus", "e_genus", "full_sequence", "h_genus", "plethysm", "species_genus",
    "ShiftInvOp", "ShiftedPoly", "d_lambda", "epsilon", "expansion", "shift_eval", "shift_formal",
    "sym_derivative", "taylor",
    "OperatorMap", "TensorElem", "TransferOp", "adjoint", "coproduct", "counit", "transfer_between",
    "ParseError", "eval_text", "parse", "unparse",
]

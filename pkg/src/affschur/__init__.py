"""Exact computations in the rational affine Schur algebra S(n, r)."""

from .element import Element, bracket_element, compositions, generator_element, identity, idempotent
from .formula import evaluate_word, mult_bracket, mult_generator, mult_left_unit, transpose_tau, word_product
from .lattice import AffineMatrix, diag, unit_matrix
from .pbw import PBWMonomial, general_product, normal_form, pbw_evaluate, triangular_check
from .relations import fi, fi_closed_form, verify_presentation

__version__ = "0.1.0"

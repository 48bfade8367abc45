"""Mutually unbiased collective bases and maximally entangled two-qudit states."""
from .collective import (
    bell_states,
    classify_pairs,
    entanglement_report,
    mucb_state,
    projection_check,
    reduced_density,
)
from .gaussian_cv import GaussianState, log_negativity, regularized_mucb_state
from .prime_field import FieldElement, half, inv, is_prime
from .qudit_mub import COMPUTATIONAL, full_mub_set, mub_basis, mub_state, verify_unbiased

__version__ = "0.1.0"

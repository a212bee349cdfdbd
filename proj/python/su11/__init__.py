"""Matrix elements, characters, orthogonality and tensor products for the
holomorphic discrete series of SU(1,1)."""

from fractions import Fraction

from ._core import (
    BoundaryConjugacyClass,
    DeterminantViolation,
    Error,
    GroupElement,
    InvalidDamping,
    InvalidLabel,
    InvalidParams,
    SingularAngle,
    UnsupportedClass,
    abel_character_sum,
    abel_character_sum_limit,
    abel_trace,
    abel_trace_limit,
    character,
    character_cartan,
    character_compact,
    character_product,
    decompose,
    gauss_jacobi,
    gr_7391,
    haar_density,
    homomorphism_defect,
    jacobi_p,
    matrix_element,
    matrix_element_cartan,
    monte_carlo_haar_check,
    multiplicity,
    normalize_label,
    orthogonality_integral,
    run_suite,
    suite_names,
    trace_partial_sum,
    truncated_operator,
    unitarity_defect,
    verify_expansion_identity,
)
from ._core import _formal_dimension


def formal_dimension(eta):
    """d_eta = 2 / (2 eta - 1) as an exact fraction."""
    num, den = _formal_dimension(eta)
    return Fraction(num, den)


__all__ = [name for name in dir() if not name.startswith("_")]

"""Exact binomial arrays, binomial transforms and convolution identities.

All arithmetic is exact over :class:`fractions.Fraction`.
"""
from .array import (
    WINDOW_AUDIT,
    BinomialArray,
    DiffTable,
    Window,
    border_profile,
    diff_table,
    entry,
    linear_combination,
    make_array,
    pascal_basis,
    reverse_involution,
    shift_origin,
    taylor_at_minus_one,
    trapezoid_interchange,
    window,
)
from .core import (
    InitialSequence,
    Scalar,
    binomial,
    catalan,
    format_scalar,
    parse_scalar,
    parse_scalar_list,
    term,
)
from .errors import (
    BinArrayError,
    DimensionError,
    InvariantError,
    NotApplicable,
    RangeError,
    UnsupportedError,
)
from .hockey import RuleId, rule_sum, rule_terms
from .sl2 import RepVector, b_f, b_f_inverse, f_action, invariant_form, pairing_check, primed_form, s_involution
from .transform import (
    cauchy_product,
    dwyer_frankel_check,
    forward_transform,
    inverse_transform,
    transform,
    vandermonde_expand,
)
from .verify import IdentityReport, check_identity, run_suite

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

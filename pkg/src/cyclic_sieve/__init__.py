"""Cyclic codes over finite fields, exact cyclic sieving checks and LFSRs."""

from ._kernels import BACKEND
from .codes import (
    CyclicCode,
    Word,
    code_from_generator,
    code_from_parity_check,
    codeword_matrix,
    enumerate_codewords,
    fixed_point_profile,
    is_free_on_nonzero,
    orbit_decomposition,
    rotate,
    word_of_poly,
)
from .csp import (
    CspReport,
    ScanRow,
    check_all_cyclic_codes,
    check_csp,
    check_csp_many,
    orbit_polynomial,
    ordering_independence,
    scan_characterization,
    single_orbit_criterion,
)
from .gf import AlphabetOrder, FieldSpec, default_order, field_from_q, make_field
from .lfsr import Lfsr, equivalence_suite
from .polyring import (
    EnumerationCapError,
    Poly,
    enumerate_monic_irreducibles,
    factor_xn_minus_1,
    format_poly,
    gcd,
    is_irreducible,
    is_primitive,
    monic_divisors_xn,
    order_of_x,
    parse_poly,
    quotient_xn,
)
from .wordstats import IntPoly, orbit_stat_poly, q_int, reduce_mod, stat, stat_gen_poly

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CyclicCode", "Word", "code_from_generator", "code_from_parity_check",
    "codeword_matrix", "enumerate_codewords", "fixed_point_profile", "is_free_on_nonzero",
    "orbit_decomposition", "rotate", "word_of_poly", "CspReport", "ScanRow",
    "check_all_cyclic_codes", "check_csp", "check_csp_many", "orbit_polynomial",
    "ordering_independence", "scan_characterization", "single_orbit_criterion",
    "AlphabetOrder", "FieldSpec", "default_order", "field_from_q", "make_field", "Lfsr",
    "equivalence_suite", "EnumerationCapError", "Poly", "enumerate_monic_irreducibles",
    "factor_xn_minus_1", "format_poly", "gcd", "is_irreducible", "is_primitive",
    "monic_divisors_xn", "order_of_x", "parse_poly", "quotient_xn", "IntPoly",
    "orbit_stat_poly", "q_int", "reduce_mod", "stat", "stat_gen_poly",
]

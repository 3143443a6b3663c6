"""Exact arithmetic for skew PBW extensions and skew quantum polynomial rings.

>>> from skewpbw import load_catalog, parse_polynomial, format_polynomial, multiply
>>> doc = load_catalog("dqsq")
>>> p = doc.ring
>>> format_polynomial(p, multiply(p, parse_polynomial("d1", p), parse_polynomial("x1^2", p)))
'q^2*x1^2*d1 + (q+1)*x1'
"""
from .catalog import catalog_names, load_catalog
from .coeffs import (
    CoeffBackend,
    LaurentPoly,
    LaurentRing,
    MonomialMap,
    PrimeField,
    RationalField,
    Zp,
    apply_delta,
    apply_sigma,
)
from .document import RingDocument, dump_document, load_document, parse_document
from .errors import *  # noqa: F401,F403
from .errors import __all__ as _errors_all
from .expr import format_polynomial, parse_coefficient, parse_polynomial
from .lattice import integer_kernel, smith_normal_form
from .localization import (
    Localization,
    QuantumLaurentRing,
    build_quantum_laurent,
    classify_over_ore,
    classify_quantum,
    laurent_commutation,
    localize_coefficients,
)
from .morphisms import (
    Classification,
    Endomorphism,
    alev_chamarie_linear_check,
    apply_endomorphism,
    classify_filtered,
    classify_quasi_commutative,
    compose,
    general_hypothesis,
    invert_diagonal,
    validate_endomorphism,
)
from .quasi import (
    associated_graded,
    closed_form_coefficient,
    from_iterated_skew,
    to_iterated_skew,
    unit_class_of_product,
)
from .ratfunc import FractionField, RatFunc
from .ring import (
    Presentation,
    SkewPoly,
    ValidationReport,
    degree,
    leading_term,
    multiply,
    smallest_term,
    validate_presentation,
)
from .units import independent_in_R_star_mod_N, n_lattice, unit_class, unit_log

__version__ = "0.1.0"

__all__ = [
    "catalog_names", "load_catalog",
    "CoeffBackend", "LaurentPoly", "LaurentRing", "MonomialMap", "PrimeField", "RationalField", "Zp",
    "apply_delta", "apply_sigma", "FractionField", "RatFunc",
    "RingDocument", "dump_document", "load_document", "parse_document",
    "format_polynomial", "parse_coefficient", "parse_polynomial",
    "integer_kernel", "smith_normal_form",
    "Localization", "QuantumLaurentRing", "build_quantum_laurent", "classify_over_ore",
    "classify_quantum", "laurent_commutation", "localize_coefficients",
    "Classification", "Endomorphism", "alev_chamarie_linear_check", "apply_endomorphism",
    "classify_filtered", "classify_quasi_commutative", "compose", "general_hypothesis",
    "invert_diagonal", "validate_endomorphism",
    "associated_graded", "closed_form_coefficient", "from_iterated_skew", "to_iterated_skew",
    "unit_class_of_product",
    "Presentation", "SkewPoly", "ValidationReport", "degree", "leading_term", "multiply",
    "smallest_term", "validate_presentation",
    "independent_in_R_star_mod_N", "n_lattice", "unit_class", "unit_log",
] + list(_errors_all)

"""Exact arithmetic for D'Arcais polynomials and non-root certification.

The package computes the polynomial family generated by
exp(X * sum g(k) q**k / k) for integer-valued arithmetic functions g,
factors the integer-scaled members over prime fields, analyzes prime
splitting in the fields generated by shifted roots of unity and shifted
quadratic irrationals, and combines the two into reproducible
certificates that specific algebraic integers are not roots.
"""

__version__ = "0.1.0"

from .arith import (
    ArithmeticFunction,
    euler_phi,
    f_g,
    inertia_degree_cyclotomic,
    is_prime,
    legendre_symbol,
    mobius,
    sigma,
)
from .certify import (
    Certificate,
    CertifyConfig,
    GridResult,
    Scope,
    ZmijaReport,
    certify,
    certify_all_n,
    certify_exact,
    certify_generic,
    certify_han_bound,
    certify_theorem_gaussian_sigma,
    certify_theorem_not_ramified,
    certify_theorem_translated,
    certify_zmija_cyclotomic,
    check_zmija_conditions,
    scan_grid,
    verify_certificate,
)
from .errors import DarcaisError, DomainError, NotInvertibleError, TableExhaustedError
from .numfield import (
    CyclotomicShift,
    QuadraticShift,
    SplittingReport,
    dedekind_kummer_split,
    index_of,
    index_via_determinant,
    min_poly_cyclotomic_shift,
    min_poly_quadratic_shift,
    parse_candidate,
    ramifies,
)
from .polymod import (
    Factorization,
    ModPoly,
    a_poly_mod,
    cyclotomic,
    factor,
    is_irreducible,
    reduce_mod,
)
from .polynomial import IntPoly, RatPoly, format_poly
from .series import (
    a_poly,
    a_poly_oracle,
    evaluate_at_cyclotomic,
    evaluate_at_quadratic,
    h_poly,
    hurwitz_check,
    p_poly,
    series_oracle,
    tau,
    tau_list,
)

__all__ = [
    "ArithmeticFunction",
    "Certificate",
    "CertifyConfig",
    "CyclotomicShift",
    "DarcaisError",
    "DomainError",
    "Factorization",
    "GridResult",
    "IntPoly",
    "ModPoly",
    "NotInvertibleError",
    "QuadraticShift",
    "RatPoly",
    "Scope",
    "SplittingReport",
    "TableExhaustedError",
    "ZmijaReport",
    "a_poly",
    "a_poly_mod",
    "a_poly_oracle",
    "certify",
    "certify_all_n",
    "certify_exact",
    "certify_generic",
    "certify_han_bound",
    "certify_theorem_gaussian_sigma",
    "certify_theorem_not_ramified",
    "certify_theorem_translated",
    "certify_zmija_cyclotomic",
    "check_zmija_conditions",
    "cyclotomic",
    "dedekind_kummer_split",
    "euler_phi",
    "evaluate_at_cyclotomic",
    "evaluate_at_quadratic",
    "f_g",
    "factor",
    "format_poly",
    "h_poly",
    "hurwitz_check",
    "index_of",
    "index_via_determinant",
    "inertia_degree_cyclotomic",
    "is_irreducible",
    "is_prime",
    "legendre_symbol",
    "min_poly_cyclotomic_shift",
    "min_poly_quadratic_shift",
    "mobius",
    "p_poly",
    "parse_candidate",
    "ramifies",
    "reduce_mod",
    "scan_grid",
    "series_oracle",
    "sigma",
    "tau",
    "tau_list",
    "verify_certificate",
]

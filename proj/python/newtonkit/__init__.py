"""Exact root-datum, Kottwitz-set, slope and Hecke-valuation computations.

Rationals are returned as fractions.Fraction; inputs may be Fraction, int or
"p/q" strings. Node indices are 0-based.
"""

from ._newtonkit import (
    DomainError,
    RootDatum,
    SlopeProfile,
    build_datum,
    check_uniqueness,
    degrees,
    dominant_representative,
    enumerate_bgmu,
    epsilon_prime,
    galois_average,
    hasse_number,
    highest_root,
    is_dominant,
    is_in_bgmu,
    lambda_g_valuation,
    m_epsilon_valuation,
    max_degree_bound,
    maximal_elements,
    minuscule_coweights,
    modified_degrees,
    n_g_constant,
    newton_leq,
    next_to_max_profile,
    product,
    profile_from_newton,
    run_cli,
    special_roots,
)

__all__ = [
    "DomainError",
    "RootDatum",
    "SlopeProfile",
    "build_datum",
    "check_uniqueness",
    "degrees",
    "dominant_representative",
    "enumerate_bgmu",
    "epsilon_prime",
    "galois_average",
    "hasse_number",
    "highest_root",
    "is_dominant",
    "is_in_bgmu",
    "lambda_g_valuation",
    "m_epsilon_valuation",
    "max_degree_bound",
    "maximal_elements",
    "minuscule_coweights",
    "modified_degrees",
    "n_g_constant",
    "newton_leq",
    "next_to_max_profile",
    "product",
    "profile_from_newton",
    "run_cli",
    "special_roots",
]

"""Finite linear-algebra models of archimedean cohomology.

Thin convenience layer over the compiled ``_arinfinity`` extension: window
truncations of the cutoff complex, operator relation suites, archimedean
local factors, regularized-determinant identities, Birkhoff factorization
flows, and the truncated spectral triple.
"""

from _arinfinity import (
    alternating_factor,
    birkhoff_suite,
    builtin_names,
    check_relations,
    dimension_probe,
    dims,
    dirac_multiplicity,
    hurwitz_zeta,
    local_factor,
    log_gamma,
    regdet_check,
    regdet_check_alternating,
    validate_spec,
    zeta_dirac,
)

__all__ = [
    "alternating_factor",
    "birkhoff_suite",
    "builtin_names",
    "check_relations",
    "dimension_probe",
    "dims",
    "dirac_multiplicity",
    "hurwitz_zeta",
    "local_factor",
    "log_gamma",
    "regdet_check",
    "regdet_check_alternating",
    "validate_spec",
    "zeta_dirac",
]

DEFAULT_WINDOW = (-6, 6, 12)

"""qzeta: exact q-series identity verification and q -> 1- limit evaluation.

The symbolic layer (series, arith, genfuncs, verify) works entirely in
arbitrary-precision integers; the numeric layer (limits) runs on MPFR.
"""

from .arith import (
    BRUTE_FORCE_CAP,
    DivisorSumTable,
    pentagonal_series,
    sigma5,
    t12_bruteforce,
    triangular,
    triangular_representations,
)
from .genfuncs import (
    SERIES,
    eta12_odd_coeff,
    eta12_odd_gf,
    phi12,
    phi_product,
    psi8,
    psi12,
    psi_product,
    psi_theta,
    sigma5_odd_gf,
    zeta4_lambert_sum,
    zeta6_lambert_sum,
    zeta6_lambert_sum_pf,
)
from .limits import (
    LimitPoint,
    LimitTrace,
    dyadic_schedule,
    eval_psi2_limit,
    eval_psi12_limit,
    eval_s6_minus_phi12_limit,
    odd_zeta6_partial,
    odd_zeta6_target,
    pi_value,
)
from .series import QSeries, geom_pow, product_form
from .verify import (
    IdentityId,
    Mismatch,
    VerificationReport,
    compare_series,
    first_mismatch_between,
    run_identity,
    verify_binomial_collapse,
    verify_gauss_psi,
    verify_partial_fraction_polynomial,
    verify_phi12_reconstruction,
    verify_t12_sigma5,
    verify_zeta4,
    verify_zeta6,
)

__version__ = "0.1.0"

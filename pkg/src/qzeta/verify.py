"""Coefficientwise verification of the identity family, with first-mismatch reporting.

Each verifier builds both sides of one identity by independent routes and
scans for the lowest exponent where they differ. A report never claims
more than the truncation order it was asked for. Two exact algebraic side
checks from the proof chain (a degree-5 polynomial identity and a falling-
factorial collapse) are verified here as well since they pin down the
integer constants everything else uses.
"""

import time
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .arith import BRUTE_FORCE_CAP, DivisorSumTable, t12_bruteforce
from .genfuncs import (
    PARTIAL_FRACTION_CONSTANTS,
    ZETA6_NUMERATOR,
    phi12,
    psi8,
    psi12,
    psi_product,
    psi_theta,
    zeta4_lambert_sum,
    zeta6_lambert_sum,
)
from .arith import pentagonal_series
from .series import QSeries


class IdentityId(str, Enum):
    ZETA4 = "zeta4"
    ZETA6 = "zeta6"
    PHI12_RECONSTRUCTION = "phi12-reconstruction"
    GAUSS_PSI = "gauss-psi"
    T12_SIGMA5 = "t12-sigma5"
    PARTIAL_FRACTION = "partial-fraction"
    BINOMIAL_COLLAPSE = "binomial-collapse"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Mismatch:
    exponent: int
    lhs: int
    rhs: int


@dataclass(frozen=True)
class VerificationReport:
    identity: IdentityId
    order: int
    status: str
    first_mismatch: Optional[Mismatch]
    elapsed: float

    def __post_init__(self):
        if (self.status == "verified") != (self.first_mismatch is None):
            raise ValueError("status and first_mismatch disagree")

    @property
    def verified(self) -> bool:
        return self.status == "verified"


def first_mismatch_between(lhs: QSeries, rhs: QSeries, order=None) -> Optional[Mismatch]:
    """Lowest exponent <= order where the two series disagree, or None.

    The lowest exponent is the useful one: a truncation-cutoff bug shows
    up there first.
    """
    if order is None:
        order = min(lhs.order, rhs.order)
    if order > min(lhs.order, rhs.order):
        raise ValueError(
            f"cannot compare through {order}: sides known to {lhs.order} and {rhs.order}"
        )
    for i in range(order + 1):
        if lhs.coeffs[i] != rhs.coeffs[i]:
            return Mismatch(i, lhs.coeffs[i], rhs.coeffs[i])
    return None


def _report(identity, order, mismatch, started) -> VerificationReport:
    return VerificationReport(
        identity=identity,
        order=order,
        status="verified" if mismatch is None else "mismatch",
        first_mismatch=mismatch,
        elapsed=time.perf_counter() - started,
    )


def compare_series(identity: IdentityId, lhs: QSeries, rhs: QSeries, order=None) -> VerificationReport:
    """Report on two prebuilt sides of an identity.

    This is the comparison step every series verifier ends with, exposed
    so callers holding their own (possibly perturbed) sides get the same
    report shape.
    """
    started = time.perf_counter()
    if order is None:
        order = min(lhs.order, rhs.order)
    return _report(identity, order, first_mismatch_between(lhs, rhs, order), started)


def zeta4_sides(order: int):
    """Both sides of the zeta(4)-type identity: Lambert sum vs psi^8."""
    return zeta4_lambert_sum(order), psi8(order)


def zeta6_sides(order: int):
    """Both sides of the zeta(6)-type identity: sum minus phi^12 vs 256 q psi^12."""
    lhs = zeta6_lambert_sum(order) - phi12(order)
    if order == 0:
        rhs = QSeries.zero(0)
    else:
        rhs = 256 * psi12(order - 1).shift(1)
    return lhs, rhs


def gauss_sides(order: int):
    """psi by theta sum vs psi by product."""
    return psi_theta(order), psi_product(order)


def verify_zeta4(order: int = 200) -> VerificationReport:
    """Lambert sum over odd moduli with quadratic numerator equals psi^8."""
    started = time.perf_counter()
    lhs, rhs = zeta4_sides(order)
    return _report(IdentityId.ZETA4, order, first_mismatch_between(lhs, rhs), started)


def verify_zeta6(order: int = 200) -> VerificationReport:
    """Lambert sum minus phi^12 equals 256 q psi^12."""
    started = time.perf_counter()
    lhs, rhs = zeta6_sides(order)
    return _report(IdentityId.ZETA6, order, first_mismatch_between(lhs, rhs), started)


def verify_phi12_reconstruction(order: int = 100) -> VerificationReport:
    """phi^12 recovered as (zeta(6)-sum - 256 q psi^12) matches both direct routes.

    The reconstruction is compared against the Euler product's twelfth
    power, and that in turn against the pentagonal theta series' twelfth
    power. The reported mismatch, if any, is the lowest exponent across
    both comparisons.
    """
    started = time.perf_counter()
    if order == 0:
        correction = QSeries.zero(0)
    else:
        correction = 256 * psi12(order - 1).shift(1)
    reconstructed = zeta6_lambert_sum(order) - correction
    from_product = phi12(order)
    from_pentagonal = pentagonal_series(order) ** 12
    mismatches = [
        m
        for m in (
            first_mismatch_between(reconstructed, from_product),
            first_mismatch_between(from_product, from_pentagonal),
        )
        if m is not None
    ]
    worst = min(mismatches, key=lambda m: m.exponent) if mismatches else None
    return _report(IdentityId.PHI12_RECONSTRUCTION, order, worst, started)


def verify_gauss_psi(order: int = 500) -> VerificationReport:
    """Triangular theta sum equals the even/odd product form."""
    started = time.perf_counter()
    lhs, rhs = gauss_sides(order)
    return _report(IdentityId.GAUSS_PSI, order, first_mismatch_between(lhs, rhs), started)


def verify_t12_sigma5(n_max: int = 100) -> VerificationReport:
    """256 t12(n) == sigma5(2n+3) - a(2n+3) for all 0 <= n <= n_max.

    t12 comes from psi^12 and, for n within the brute-force cap, is also
    cross-checked against the tuple-enumeration oracle. Divisibility of
    sigma5(2n+3) - a(2n+3) by 256 is asserted explicitly rather than
    floor-divided away: a failure there means the a(2n+3) indexing is off.
    The mismatch exponent is the failing n.
    """
    started = time.perf_counter()
    table = DivisorSumTable.build(2 * n_max + 3)
    psi12_series = psi12(n_max)
    phi12_series = phi12(n_max + 1)
    mismatch = None
    for n in range(n_max + 1):
        t = psi12_series.coeff(n)
        rhs = table[2 * n + 3] - phi12_series.coeff(n + 1)
        if rhs % 256 != 0 or 256 * t != rhs:
            mismatch = Mismatch(n, 256 * t, rhs)
            break
        if n <= BRUTE_FORCE_CAP and t12_bruteforce(n) != t:
            mismatch = Mismatch(n, t12_bruteforce(n), t)
            break
    return _report(IdentityId.T12_SIGMA5, n_max, mismatch, started)


def verify_partial_fraction_polynomial() -> VerificationReport:
    """(1+x)P(x) == 3840 - 9600(1-x) + 8160(1-x)^2 - 2640(1-x)^3 + 242(1-x)^4 - (1-x)^5.

    Exact degree-5 polynomial identity over the integers; it is what makes
    the two zeta(6)-sum routes the same function. Both sides are expanded
    as coefficient vectors, reusing the series arithmetic at order 5
    (degree-5 polynomials are exact there). The mismatch exponent is the
    coefficient index.
    """
    started = time.perf_counter()
    degree = 5
    one_plus_x = QSeries.from_terms({0: 1, 1: 1}, degree)
    quartic = QSeries(list(ZETA6_NUMERATOR) + [0], degree)
    lhs = one_plus_x * quartic
    one_minus_x = QSeries.from_terms({0: 1, 1: -1}, degree)
    rhs = QSeries.zero(degree)
    for j, c in enumerate(PARTIAL_FRACTION_CONSTANTS):
        rhs = rhs + c * one_minus_x**j
    return _report(
        IdentityId.PARTIAL_FRACTION, degree, first_mismatch_between(lhs, rhs), started
    )


# Multipliers of the falling factorials (j+1)...(j+r) for r = 5 down to 1,
# then the constant -1; together they collapse to (2j+1)^5.
_COLLAPSE_WEIGHTS = (32, -400, 1360, -1320, 242)


def binomial_collapse_lhs(j: int) -> int:
    total = -1
    for r, w in zip(range(5, 0, -1), _COLLAPSE_WEIGHTS):
        product = 1
        for i in range(1, r + 1):
            product *= j + i
        total += w * product
    return total


def verify_binomial_collapse(j_max: int = 1000) -> VerificationReport:
    """Weighted falling factorials minus 1 equal (2j+1)^5 for 0 <= j <= j_max.

    Exact integer evaluation on both sides; the mismatch exponent is the
    failing j.
    """
    started = time.perf_counter()
    mismatch = None
    for j in range(j_max + 1):
        lhs = binomial_collapse_lhs(j)
        rhs = (2 * j + 1) ** 5
        if lhs != rhs:
            mismatch = Mismatch(j, lhs, rhs)
            break
    return _report(IdentityId.BINOMIAL_COLLAPSE, j_max, mismatch, started)


# Runner and default size for each identity, in the deterministic order
# report-all uses. The size knob means truncation order for the series
# identities, n_max / j_max for the indexed ones, and nothing for the
# pure polynomial check.
IDENTITY_RUNNERS = {
    IdentityId.ZETA4: (verify_zeta4, 200),
    IdentityId.ZETA6: (verify_zeta6, 200),
    IdentityId.PHI12_RECONSTRUCTION: (verify_phi12_reconstruction, 100),
    IdentityId.GAUSS_PSI: (verify_gauss_psi, 500),
    IdentityId.T12_SIGMA5: (verify_t12_sigma5, 100),
    IdentityId.PARTIAL_FRACTION: (verify_partial_fraction_polynomial, None),
    IdentityId.BINOMIAL_COLLAPSE: (verify_binomial_collapse, 1000),
}


def run_identity(identity: IdentityId, size: Optional[int] = None) -> VerificationReport:
    """Run one identity's verifier at the given size (or its default)."""
    runner, default_size = IDENTITY_RUNNERS[identity]
    if default_size is None:
        return runner()
    return runner(default_size if size is None else size)

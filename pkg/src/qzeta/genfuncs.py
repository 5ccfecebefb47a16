"""Constructors for the named generating functions of the identity family.

psi is Gauss's triangular-number theta series, phi Euler's product
prod(1 - q^n). The two Lambert-type sums are the left-hand sides of the
zeta(4)- and zeta(6)-style identities: termwise expansions over odd
moduli 2k+1 with small palindromic numerator polynomials. Each function
that the identities need in two ways is built here by both routes so the
verifier can compare them coefficient by coefficient.
"""

from .arith import DivisorSumTable, triangular
from .series import QSeries, geom_pow, product_form

# Numerator polynomials of the Lambert terms, in x = q^{2k+1}.
ZETA4_NUMERATOR = (1, 4, 1)
ZETA6_NUMERATOR = (1, 236, 1446, 236, 1)

# (1 + x) * ZETA6_NUMERATOR, precomputed; the palindrome is a free sanity check.
ZETA6_NUMERATOR_1PX = (1, 237, 1682, 1682, 237, 1)

# Coefficients of the partial-fraction expansion of the zeta(6)-sum term:
# (1+x)P(x)/(1-x)^6 = 3840/(1-x)^6 - 9600/(1-x)^5 + 8160/(1-x)^4
#                     - 2640/(1-x)^3 + 242/(1-x)^2 - 1/(1-x),
# listed for denominator powers 6 down to 1.
PARTIAL_FRACTION_CONSTANTS = (3840, -9600, 8160, -2640, 242, -1)


def psi_theta(order: int) -> QSeries:
    """psi(q) = sum_{n>=0} q^{T_n} with T_n = n(n+1)/2 (theta-sum route)."""
    coeffs = [0] * (order + 1)
    n = 0
    while triangular(n) <= order:
        coeffs[triangular(n)] = 1
        n += 1
    return QSeries(coeffs, order)


def psi_product(order: int) -> QSeries:
    """psi(q) = prod (1-q^{2n}) / (1-q^{2n-1}) (Gauss's product route)."""
    return product_form([(2, 2, -1, 1), (1, 2, -1, -1)], order)


def phi_product(order: int) -> QSeries:
    """phi(q) = prod (1-q^n), Euler's function."""
    return product_form([(1, 1, -1, 1)], order)


def psi8(order: int) -> QSeries:
    """psi^8; coefficient n counts ordered sums of 8 triangular numbers."""
    return psi_product(order) ** 8


def psi12(order: int) -> QSeries:
    """psi^12; coefficient n is t12(n), ordered sums of 12 triangular numbers."""
    return psi_product(order) ** 12


def phi12(order: int) -> QSeries:
    """phi^12 = prod (1-q^n)^12."""
    return phi_product(order) ** 12


def eta12_odd_gf(order: int) -> QSeries:
    """The series sum_m a(2m+1) q^m of odd-indexed twelfth-power eta coefficients.

    With the eta power written in a doubled variable its expansion is
    q * phi^12(q^2), so a(2m+1) is exactly the coefficient of q^m in
    phi^12. The series is therefore phi^12 itself under the re-indexing;
    it is exposed under this name so consumers state which object they
    mean.
    """
    return phi12(order)


def eta12_odd_coeff(m: int) -> int:
    """a(2m+1): the m-th coefficient of phi^12.

    Single accessor for the odd-indexed coefficients so every consumer
    shares one index convention; a(1) = 1, a(3) = -12, a(5) = 54, ...
    For bulk access build eta12_odd_gf(order) once instead.
    """
    if m < 0:
        raise ValueError(f"coefficient index must be non-negative, got {m}")
    return phi12(m).coeff(m)


def zeta4_lambert_sum(order: int) -> QSeries:
    """sum_k q^{2k} (1 + 4x + x^2) / (1-x)^4 with x = q^{2k+1}.

    Term k contributes nothing below q^{2k}, so summing while 2k <= order
    is exact, not an approximation; likewise the inner expansion stops at
    the truncation order.
    """
    total = QSeries.zero(order)
    k = 0
    while 2 * k <= order:
        m = 2 * k + 1
        inner = order - 2 * k
        numer = QSeries.from_terms(
            {i * m: c for i, c in enumerate(ZETA4_NUMERATOR)}, inner
        )
        total = total + (numer * geom_pow(m, 4, inner)).shift(2 * k)
        k += 1
    return total


def zeta6_lambert_sum(order: int) -> QSeries:
    """sum_k q^k (1 + x) P(x) / (1-x)^6 with x = q^{2k+1}, P palindromic quartic.

    Term k starts at q^k, so k runs while k <= order.
    """
    total = QSeries.zero(order)
    for k in range(order + 1):
        m = 2 * k + 1
        inner = order - k
        numer = QSeries.from_terms(
            {i * m: c for i, c in enumerate(ZETA6_NUMERATOR_1PX)}, inner
        )
        total = total + (numer * geom_pow(m, 6, inner)).shift(k)
    return total


def zeta6_lambert_sum_pf(order: int) -> QSeries:
    """The zeta(6)-sum via its partial-fraction expansion.

    Independent route to zeta6_lambert_sum: each term is a signed integer
    combination of (1-q^{2k+1})^{-r} for r = 6..1 instead of a numerator
    polynomial over a single sixth power.
    """
    total = QSeries.zero(order)
    for k in range(order + 1):
        m = 2 * k + 1
        inner = order - k
        acc = QSeries.zero(inner)
        for c, r in zip(PARTIAL_FRACTION_CONSTANTS, range(6, 0, -1)):
            acc = acc + c * geom_pow(m, r, inner)
        total = total + acc.shift(k)
    return total


def sigma5_odd_gf(order: int) -> QSeries:
    """sum_n sigma5(2n+1) q^n straight from the divisor-sum table.

    Third, fully independent route to the zeta(6)-sum.
    """
    table = DivisorSumTable.build(2 * order + 1)
    return QSeries([table[2 * n + 1] for n in range(order + 1)], order)


# One constructor per public series name; the CLI resolves names here.
SERIES = {
    "psi": psi_product,
    "phi": phi_product,
    "psi8": psi8,
    "psi12": psi12,
    "phi12": phi12,
    "zeta4-sum": zeta4_lambert_sum,
    "zeta6-sum": zeta6_lambert_sum,
    "zeta6-sum-pf": zeta6_lambert_sum_pf,
    "sigma5-odd": sigma5_odd_gf,
    "eta12-odd": eta12_odd_gf,
}

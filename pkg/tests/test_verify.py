import pytest
from hypothesis import given, settings, strategies as st

from qzeta import (
    IdentityId,
    Mismatch,
    QSeries,
    VerificationReport,
    compare_series,
    first_mismatch_between,
    run_identity,
    sigma5,
    t12_bruteforce,
    verify_binomial_collapse,
    verify_gauss_psi,
    verify_partial_fraction_polynomial,
    verify_phi12_reconstruction,
    verify_t12_sigma5,
    verify_zeta4,
    verify_zeta6,
)
from qzeta.genfuncs import eta12_odd_coeff
from qzeta.verify import binomial_collapse_lhs, gauss_sides, zeta4_sides, zeta6_sides


def bump(series, exponent, delta):
    coeffs = list(series.coeffs)
    coeffs[exponent] += delta
    return QSeries(coeffs, series.order)


def test_verify_zeta4_small_orders():
    assert verify_zeta4(0).verified
    report = verify_zeta4(60)
    assert report.verified and report.order == 60


def test_verify_zeta6_small_orders():
    assert verify_zeta6(0).verified
    assert verify_zeta6(60).verified


def test_zeta6_q1_spot_check():
    # coefficient of q^1: sigma5(3) - a(3) = 244 - (-12) = 256 * t12(0)
    assert sigma5(3) - eta12_odd_coeff(1) == 256 == 256 * t12_bruteforce(0)


def test_verify_phi12_reconstruction_small():
    assert verify_phi12_reconstruction(0).verified
    assert verify_phi12_reconstruction(40).verified


def test_verify_gauss_small():
    assert verify_gauss_psi(0).verified
    assert verify_gauss_psi(100).verified


def test_verify_t12_sigma5_small():
    report = verify_t12_sigma5(30)
    assert report.verified and report.order == 30


def test_t12_sigma5_spot_values():
    # n = 0, 1, 3 worked out from the components
    assert (sigma5(3) - eta12_odd_coeff(1)) // 256 == 1
    assert (sigma5(5) - eta12_odd_coeff(2)) // 256 == 12
    assert (sigma5(9) - eta12_odd_coeff(4)) // 256 == 232


def test_partial_fraction_polynomial():
    report = verify_partial_fraction_polynomial()
    assert report.verified
    # spot evaluations of both sides at x = 1 and x = 0
    quartic_at_1 = 1 + 236 + 1446 + 236 + 1
    assert 2 * quartic_at_1 == 3840
    assert 3840 - 9600 + 8160 - 2640 + 242 - 1 == 1


def test_binomial_collapse_values():
    assert binomial_collapse_lhs(0) == 1
    assert binomial_collapse_lhs(1) == 3**5
    assert binomial_collapse_lhs(1000) == 2001**5
    assert verify_binomial_collapse(100).verified


def test_report_invariant_enforced():
    with pytest.raises(ValueError):
        VerificationReport(
            identity=IdentityId.ZETA4,
            order=5,
            status="verified",
            first_mismatch=Mismatch(1, 2, 3),
            elapsed=0.0,
        )


def test_reports_carry_requested_order_and_time():
    report = verify_gauss_psi(37)
    assert report.order == 37
    assert report.elapsed >= 0
    assert report.identity is IdentityId.GAUSS_PSI


def test_run_identity_uses_defaults_and_sizes():
    assert run_identity(IdentityId.PARTIAL_FRACTION).verified
    report = run_identity(IdentityId.GAUSS_PSI, 50)
    assert report.order == 50


def test_first_mismatch_reports_lowest_exponent():
    a = QSeries([1, 2, 3, 4], 3)
    b = QSeries([1, 2, 5, 9], 3)
    m = first_mismatch_between(a, b)
    assert m == Mismatch(2, 3, 5)
    assert first_mismatch_between(a, a) is None
    with pytest.raises(ValueError):
        first_mismatch_between(a, b, 4)


def test_tampered_side_flips_report():
    lhs, rhs = gauss_sides(120)
    report = compare_series(IdentityId.GAUSS_PSI, lhs, bump(rhs, 119, 1))
    assert report.status == "mismatch"
    assert report.first_mismatch.exponent == 119


@settings(max_examples=40, deadline=None)
@given(
    exponent=st.integers(min_value=0, max_value=80),
    delta=st.sampled_from([-1, 1]),
    side=st.sampled_from(["lhs", "rhs"]),
)
def test_any_single_coefficient_fault_is_located(exponent, delta, side):
    lhs, rhs = zeta4_sides(80)
    if side == "lhs":
        lhs = bump(lhs, exponent, delta)
    else:
        rhs = bump(rhs, exponent, delta)
    report = compare_series(IdentityId.ZETA4, lhs, rhs)
    assert report.status == "mismatch"
    assert report.first_mismatch.exponent == exponent


def test_zeta6_sides_structure():
    lhs, rhs = zeta6_sides(10)
    assert lhs.coeff(0) == 0 and rhs.coeff(0) == 0
    assert lhs.coeff(1) == 256 and rhs.coeff(1) == 256

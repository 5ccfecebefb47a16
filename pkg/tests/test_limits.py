import gmpy2
import pytest
from gmpy2 import mpfr

from qzeta import (
    dyadic_schedule,
    eval_psi2_limit,
    odd_zeta6_partial,
    odd_zeta6_target,
    pi_value,
)
from qzeta.limits import (
    damped_psi2_at,
    damped_psi12_at,
    damped_zeta6_terms_at,
)


def rel_diff(a, b, bits=320):
    with gmpy2.context(precision=bits):
        return abs(mpfr(a) - mpfr(b)) / abs(mpfr(b))


def test_dyadic_schedule():
    schedule = dyadic_schedule(4, 6)
    assert schedule == [1 - 2.0**-4, 1 - 2.0**-5, 1 - 2.0**-6]
    with pytest.raises(ValueError):
        dyadic_schedule(5, 4)
    with pytest.raises(ValueError):
        dyadic_schedule(0, 4)


def test_schedule_validation():
    with pytest.raises(ValueError):
        eval_psi2_limit([], 128)
    with pytest.raises(ValueError):
        eval_psi2_limit([0.5, 0.5], 128)
    with pytest.raises(ValueError):
        eval_psi2_limit([0.9, 0.5], 128)


def test_domain_errors():
    for bad in (-0.1, 1.0, 1.5):
        with pytest.raises(ValueError):
            damped_psi2_at(bad)
        with pytest.raises(ValueError):
            damped_psi12_at(bad)
        with pytest.raises(ValueError):
            damped_zeta6_terms_at(bad)


def test_precision_floor():
    with pytest.raises(ValueError):
        damped_psi2_at(0.5, 32)


def test_value_at_zero_is_empty_product():
    trace = eval_psi2_limit([0.0, 0.5], 128)
    assert trace.entries[0].value == 1
    with gmpy2.context(precision=200):
        expected = abs(1 - gmpy2.const_pi() / 2)
        assert abs(trace.entries[0].abs_error - expected) < mpfr(2) ** -120


def test_psi2_trace_converges(limit_suite):
    trace = limit_suite.psi2
    assert trace.converged
    assert trace.final_rel_error < 5e-3
    assert str(trace.target).startswith("1.5707963267948966")
    assert trace.precision_bits == limit_suite.precision


def test_psi12_trace_converges(limit_suite):
    trace = limit_suite.psi12
    assert trace.converged
    assert str(trace.target).startswith("15.02")


def test_zeta6_trace_converges(limit_suite):
    trace = limit_suite.zeta6
    assert trace.converged
    # target is 4 pi^6 = 3840 * sum of odd reciprocal sixth powers
    with gmpy2.context(precision=320):
        assert rel_diff(trace.target, 3840 * odd_zeta6_target(300)) < 1e-70


def test_relative_errors_strictly_decreasing_from_k6(limit_suite):
    for trace in (limit_suite.psi2, limit_suite.psi12, limit_suite.zeta6):
        rels = [e.rel_error for e in trace.entries]
        tail = rels[2:]  # schedule starts at k=4, so index 2 is k=6
        assert all(a > b for a, b in zip(tail, tail[1:])), trace.target_name


def test_phi12_decay_track(limit_suite):
    decay = limit_suite.decay
    values = [e.value for e in decay.entries]
    assert all(a > b for a, b in zip(values, values[1:]))
    # k = 10 is index 6 on the 4..12 schedule
    assert values[6] < 1e-20
    assert decay.converged


def test_pointwise_identity_on_schedule(limit_suite):
    # (1-q)^6 (sum - phi^12) == 256 q (1-q)^6 psi^12 pointwise in the disk
    for main, psi12_entry in zip(limit_suite.zeta6.entries, limit_suite.psi12.entries):
        with gmpy2.context(precision=limit_suite.precision + 64):
            residual = abs(main.value - 256 * main.q * psi12_entry.value)
        assert residual < 1e-20, str(main.q)


def test_sixth_power_relation():
    for q in (0.25, 0.5, 1 - 2.0**-6):
        v2 = damped_psi2_at(q, 192)
        v12 = damped_psi12_at(q, 192)
        with gmpy2.context(precision=256):
            assert abs(v12 - v2**6) / abs(v12) < mpfr(2) ** -176


def test_precision_stability_40_digits():
    q = 1 - 2.0**-10
    low = damped_psi2_at(q, 128)
    high = damped_psi2_at(q, 256)
    assert rel_diff(low, high) < mpfr(10) ** -40


def test_doubling_precision_keeps_reported_digits():
    q = 1 - 2.0**-8
    base = damped_psi12_at(q, 256)
    doubled = damped_psi12_at(q, 512)
    assert rel_diff(base, doubled) < mpfr(10) ** -70


def test_odd_zeta6_partial_first_term():
    assert odd_zeta6_partial(0, 128) == 1
    with pytest.raises(ValueError):
        odd_zeta6_partial(-1)


def test_odd_zeta6_partial_converges():
    target = odd_zeta6_target(256)
    assert str(target).startswith("1.00144707")
    with gmpy2.context(precision=320):
        assert abs(odd_zeta6_partial(100, 256) - target) < 1e-11
        assert abs(odd_zeta6_partial(10_000, 256) - target) < 1e-21


def test_pi_value_precision():
    assert str(pi_value(256)).startswith("3.14159265358979323846264338327950288419716939937510")

"""High-precision numeric demonstration of the q -> 1- limits.

The damped products (1-q) psi^2, (1-q)^6 psi^12 and the damped difference
(1-q)^6 (zeta(6)-sum - phi^12) are evaluated along a schedule of q values
approaching 1, against the analytic targets pi/2, pi^6/64 and 4 pi^6. All
arithmetic runs on MPFR (via gmpy2) with round-to-nearest at the requested
mantissa size plus guard bits, so returned values are trustworthy to the
requested precision. Infinite products and sums are truncated once the
next factor (resp. term) is within 2^-(precision+8) of its limit.

Convergence is demonstrated raw, without sequence acceleration.
"""

from dataclasses import dataclass

import gmpy2
from gmpy2 import mpfr

DEFAULT_PRECISION_BITS = 256
DEFAULT_REL_TOL = 5e-3
PHI12_DECAY_TOL = 1e-20

# Extra mantissa bits for internal arithmetic. Rounding noise accumulated
# over ~10^6 operations stays below the requested precision this way.
GUARD_BITS = 24


def _context(precision_bits: int):
    if precision_bits < 64:
        raise ValueError(f"precision must be at least 64 bits, got {precision_bits}")
    return gmpy2.context(precision=precision_bits + GUARD_BITS)


def pi_value(precision_bits: int = DEFAULT_PRECISION_BITS) -> mpfr:
    """pi at the working precision; every analytic target derives from this."""
    with _context(precision_bits):
        return gmpy2.const_pi()


def _check_q(q):
    if not 0 <= q < 1:
        raise ValueError(f"q must lie in [0, 1), got {q}")


def _tiny(precision_bits):
    return mpfr(2) ** -(precision_bits + 8)


def _theta_ratio(q: mpfr, eps: mpfr) -> mpfr:
    """prod (1-q^{2n}) / (1-q^{2n-1}), factors taken until q^m < eps."""
    numerator = mpfr(1)
    denominator = mpfr(1)
    power = mpfr(1)
    m = 1
    while True:
        power = power * q
        if power < eps:
            break
        if m % 2:
            denominator *= 1 - power
        else:
            numerator *= 1 - power
        m += 1
    return numerator / denominator


def _euler_product(q: mpfr, eps: mpfr) -> mpfr:
    """prod (1-q^n), factors taken until q^n < eps."""
    product = mpfr(1)
    power = mpfr(1)
    while True:
        power = power * q
        if power < eps:
            break
        product *= 1 - power
    return product


def _lambert_sum(q: mpfr, eps: mpfr) -> mpfr:
    """The zeta(6)-type sum evaluated termwise at a fixed q in [0, 1).

    Terms are positive and strictly decreasing in k, so summation stops
    once a term falls below eps.
    """
    total = mpfr(0)
    q2 = q * q
    qk = mpfr(1)  # q^k
    u = q  # q^{2k+1}
    while True:
        u2 = u * u
        numerator = qk * (1 + u) * (u2 * u2 + 236 * u2 * u + 1446 * u2 + 236 * u + 1)
        term = numerator / (1 - u) ** 6
        if term < eps:
            break
        total += term
        qk *= q
        u *= q2
    return total


def damped_psi2_at(q, precision_bits: int = DEFAULT_PRECISION_BITS) -> mpfr:
    """(1-q) * psi^2(q), the square of the q-Gamma-style normalized product."""
    _check_q(q)
    with _context(precision_bits):
        qq = mpfr(q)
        return (1 - qq) * _theta_ratio(qq, _tiny(precision_bits)) ** 2


def damped_psi12_at(q, precision_bits: int = DEFAULT_PRECISION_BITS) -> mpfr:
    """(1-q)^6 * psi^12(q)."""
    _check_q(q)
    with _context(precision_bits):
        qq = mpfr(q)
        return (1 - qq) ** 6 * _theta_ratio(qq, _tiny(precision_bits)) ** 12


def damped_zeta6_terms_at(q, precision_bits: int = DEFAULT_PRECISION_BITS):
    """((1-q)^6 (sum - phi^12), (1-q)^6 phi^12) at one q value.

    The second component is the vanishing track: it must decay to 0 as
    q -> 1-, which is exactly why the sum alone carries the limit.
    """
    _check_q(q)
    with _context(precision_bits):
        qq = mpfr(q)
        eps = _tiny(precision_bits)
        damping = (1 - qq) ** 6
        phi12_value = _euler_product(qq, eps) ** 12
        main = damping * (_lambert_sum(qq, eps) - phi12_value)
        return main, damping * phi12_value


@dataclass(frozen=True)
class LimitPoint:
    q: mpfr
    value: mpfr
    abs_error: mpfr
    rel_error: mpfr


@dataclass(frozen=True)
class LimitTrace:
    target_name: str
    target: mpfr
    precision_bits: int
    entries: tuple
    converged: bool

    @property
    def final_rel_error(self) -> mpfr:
        return self.entries[-1].rel_error


def dyadic_schedule(k_min: int = 4, k_max: int = 12):
    """q_k = 1 - 2^-k for k_min..k_max; exact in binary floating point."""
    if not 1 <= k_min <= k_max:
        raise ValueError(f"need 1 <= k_min <= k_max, got {k_min}..{k_max}")
    return [1 - 2.0**-k for k in range(k_min, k_max + 1)]


def _validate_schedule(schedule):
    if not schedule:
        raise ValueError("empty evaluation schedule")
    previous = None
    for q in schedule:
        _check_q(q)
        if previous is not None and not q > previous:
            raise ValueError("schedule must increase strictly toward 1")
        previous = q


def _converged(rel_errors, rel_tol) -> bool:
    # strictly decreasing over the last three points and below tolerance
    tail = rel_errors[-3:]
    decreasing = all(a > b for a, b in zip(tail, tail[1:]))
    return decreasing and rel_errors[-1] < rel_tol


def _trace(name, target, schedule, values, precision_bits, rel_tol) -> LimitTrace:
    # error arithmetic must run at working precision too; gmpy2 rounds
    # every operation to the active context regardless of operand size
    with _context(precision_bits):
        entries = []
        for q, value in zip(schedule, values):
            abs_error = abs(value - target)
            rel_error = abs_error / abs(target) if target != 0 else abs_error
            entries.append(LimitPoint(mpfr(q), value, abs_error, rel_error))
        return LimitTrace(
            target_name=name,
            target=target,
            precision_bits=precision_bits,
            entries=tuple(entries),
            converged=_converged([e.rel_error for e in entries], rel_tol),
        )


def eval_psi2_limit(
    schedule,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    rel_tol: float = DEFAULT_REL_TOL,
) -> LimitTrace:
    """Trace (1-q) psi^2(q) along the schedule; the limit is pi/2."""
    _validate_schedule(schedule)
    values = [damped_psi2_at(q, precision_bits) for q in schedule]
    with _context(precision_bits):
        target = gmpy2.const_pi() / 2
    return _trace("psi2", target, schedule, values, precision_bits, rel_tol)


def eval_psi12_limit(
    schedule,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    rel_tol: float = DEFAULT_REL_TOL,
) -> LimitTrace:
    """Trace (1-q)^6 psi^12(q) along the schedule; the limit is pi^6/64."""
    _validate_schedule(schedule)
    values = [damped_psi12_at(q, precision_bits) for q in schedule]
    with _context(precision_bits):
        target = gmpy2.const_pi() ** 6 / 64
    return _trace("psi12", target, schedule, values, precision_bits, rel_tol)


def eval_s6_minus_phi12_limit(
    schedule,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    rel_tol: float = DEFAULT_REL_TOL,
):
    """Trace (1-q)^6 (zeta(6)-sum - phi^12) along the schedule; the limit is 4 pi^6.

    Returns the main trace and the vanishing track (1-q)^6 phi^12 as a
    second trace against target 0 (its rel_error column holds the absolute
    value, tolerance PHI12_DECAY_TOL).
    """
    _validate_schedule(schedule)
    pairs = [damped_zeta6_terms_at(q, precision_bits) for q in schedule]
    with _context(precision_bits):
        target = 4 * gmpy2.const_pi() ** 6
    main = _trace(
        "zeta6-sum",
        target,
        schedule,
        [p[0] for p in pairs],
        precision_bits,
        rel_tol,
    )
    decay = _trace(
        "phi12-damped",
        mpfr(0),
        schedule,
        [p[1] for p in pairs],
        precision_bits,
        PHI12_DECAY_TOL,
    )
    return main, decay


def odd_zeta6_partial(terms: int, precision_bits: int = DEFAULT_PRECISION_BITS) -> mpfr:
    """Partial sum over k = 0..terms of (2k+1)^-6; the full sum is pi^6/960.

    The denominators are exact integers, each reciprocal rounded once.
    """
    if terms < 0:
        raise ValueError(f"terms must be non-negative, got {terms}")
    with _context(precision_bits):
        total = mpfr(0)
        for k in range(terms + 1):
            total += 1 / mpfr((2 * k + 1) ** 6)
        return total


def odd_zeta6_target(precision_bits: int = DEFAULT_PRECISION_BITS) -> mpfr:
    """pi^6/960, the closed form of the odd sixth-power reciprocal sum."""
    with _context(precision_bits):
        return gmpy2.const_pi() ** 6 / 960

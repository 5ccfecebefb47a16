import time
from types import SimpleNamespace

import pytest

from qzeta import (
    dyadic_schedule,
    eval_psi2_limit,
    eval_psi12_limit,
    eval_s6_minus_phi12_limit,
)

LIMIT_PRECISION = 256


@pytest.fixture(scope="session")
def limit_suite():
    """All three limit traces on the default schedule, computed once.

    The numeric traces are the slow part of the suite (a few seconds);
    every test that looks at them shares this evaluation, and the wall
    time is kept so the acceptance budget can be checked.
    """
    schedule = dyadic_schedule(4, 12)
    started = time.perf_counter()
    psi2 = eval_psi2_limit(schedule, LIMIT_PRECISION)
    psi12 = eval_psi12_limit(schedule, LIMIT_PRECISION)
    zeta6, decay = eval_s6_minus_phi12_limit(schedule, LIMIT_PRECISION)
    elapsed = time.perf_counter() - started
    return SimpleNamespace(
        schedule=schedule,
        precision=LIMIT_PRECISION,
        psi2=psi2,
        psi12=psi12,
        zeta6=zeta6,
        decay=decay,
        elapsed=elapsed,
    )

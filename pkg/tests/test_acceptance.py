"""Acceptance battery: one test per criterion, each printing its report line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the PASS/FAIL line
for every criterion, or ``hypschwarz check`` for the same battery from the
command line.
"""

from hypschwarz import acceptance


def _run(criterion):
    result = criterion()
    print(result.line())
    assert result.passed, result.detail
    return result


def test_criterion_1_supnorm_bound_table():
    _run(acceptance.criterion_1)


def test_criterion_2_l2_bound_closed_form():
    _run(acceptance.criterion_2)


def test_criterion_3_l1_chebyshev_center():
    _run(acceptance.criterion_3)


def test_criterion_4_stationarity_and_minimization():
    _run(acceptance.criterion_4)


def test_criterion_5_extremal_data_attains_bound():
    _run(acceptance.criterion_5)


def test_criterion_6_gradient_constant():
    _run(acceptance.criterion_6)


def test_criterion_7_random_bound_sampling():
    _run(acceptance.criterion_7)


def test_criterion_8_monotonicity_and_range():
    _run(acceptance.criterion_8)


def test_criterion_9_l2_corollary_report():
    _run(acceptance.criterion_9)

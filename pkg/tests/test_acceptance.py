"""Acceptance gate: every criterion as a separate test, one pass/fail line each.

The criteria are exact symbolic equalities (zero tolerance); the only
numeric entries are the certified rational tail bounds of criterion 10,
pinned below 10^-12.
"""

import pytest

from qzeta.verify import CRITERIA, run_suite


@pytest.mark.parametrize(
    "fn", [c[3] for c in CRITERIA], ids=[f"{c[0]:02d}-{c[2]}-{c[3].__name__}" for c in CRITERIA]
)
def test_criterion(fn):
    fn()


def test_suite_runner_all_green():
    results = run_suite("zeta")
    assert results and all(r.passed for r in results)
    names = {r.number for r in results}
    assert names == {1, 2, 3, 4, 5}

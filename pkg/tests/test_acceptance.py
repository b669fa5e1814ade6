"""The ten reproduction criteria. Each test prints one PASS/FAIL line (run with -s
to see them, or `cyclic-sieve verify-paper`)."""

import pytest

from cyclic_sieve import verify


@pytest.mark.parametrize("number", sorted(verify.CHECKS))
def test_criterion(number):
    res = verify.run_check(number)
    print(res.line())
    assert res.passed, res.detail


def test_all_criteria_registered():
    assert sorted(verify.CHECKS) == list(range(1, 11))
    assert {c.section for c in verify.CHECKS.values()} == {"3", "4"}

"""
Acceptance gate: every pinned-tolerance criterion from the validation
module, one test per criterion. Each test prints a single pass/fail line
with the measured value and its tolerance (visible with pytest -s or on
failure).
"""

import pytest

from warptunnel.validation import ALL_CHECKS


@pytest.mark.parametrize("check", ALL_CHECKS, ids=lambda c: c.__name__)
def test_acceptance(check):
    result = check()
    status = "PASS" if result.passed else "FAIL"
    print(f"{status} {result.name}: measured={result.measured:.6e} "
          f"tolerance={result.tolerance:.6e} ({result.detail})")
    assert result.passed, (
        f"{result.name}: measured={result.measured!r} exceeded "
        f"tolerance={result.tolerance!r} — {result.detail}")

"""Acceptance gate: every numbered criterion at its stated tolerance.

Each test runs one criterion from the validation suite and prints a
PASS/FAIL line with the measured numbers (run pytest with -s to watch).
The same functions back the `uvpackets validate` CLI command.
"""

import pytest

from uvpackets import suite


@pytest.mark.parametrize("criterion", suite.CRITERIA,
                         ids=[f"criterion_{i}" for i in range(1, 12)])
def test_criterion(criterion):
    res = criterion()
    flag = "PASS" if res.passed else "FAIL"
    print(f"\nACCEPTANCE {res.index:2d} [{flag}] {res.name}: {res.detail}")
    assert res.passed, f"criterion {res.index} ({res.name}): {res.detail}"


def test_erratum_report_complete():
    """The erratum report must document the closed-form discrepancies."""
    findings = suite.erratum_findings(include_slow=False)
    assert any("coefficient A(n)" in line for line in findings)
    assert any("(Delta u)^2" in line for line in findings)
    assert any("(Delta p_u)^2" in line for line in findings)
    for line in findings:
        assert line.count("|") == 3, f"malformed finding line: {line}"

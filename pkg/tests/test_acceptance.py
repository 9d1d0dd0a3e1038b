"""Acceptance criteria, one test each.  Every test prints a PASS/FAIL line
(also when output capture is on); run this file directly for a plain report:

    python3 tests/test_acceptance.py
"""
import sys

import pytest

from starhess.verify import (CheckResult, check_appell, check_dual_moments, check_factorisation,
                             check_genetic, check_golden, check_orthogonality, check_oscillation,
                             check_production, check_recurrence, check_total_positivity, check_zeros)

# (label, check, runtime budget in seconds or None)
CRITERIA = [
    ("1 factorisation and entry formula", check_factorisation, 10),
    ("2 production matrix equals path counts", check_production, 60),
    ("3 component recurrences", check_recurrence, 30),
    ("4 dual moments and fold-symmetric zero pattern", check_dual_moments, None),
    ("5 Catalan and Fuss-Catalan counts", check_golden, None),
    ("6 nested sums equal modified path counts", check_genetic, None),
    ("7 total positivity, symbolic and rational", check_total_positivity, 60),
    ("8 certified simple positive interlacing zeros", check_zeros, 60),
    ("9 oscillation matrices", check_oscillation, None),
    ("10 Appell closed forms, property and moments", check_appell, None),
    ("11 orthogonality reports", check_orthogonality, None),
]


def _verdict(label: str, res: CheckResult, budget) -> tuple[bool, str]:
    ok = res.passed
    note = res.detail
    if ok and budget is not None and res.seconds > budget:
        ok, note = False, f"{note}; took {res.seconds:.1f}s, budget {budget}s"
    return ok, f"[{'PASS' if ok else 'FAIL'}] criterion {label}: {note} ({res.seconds:.2f}s)"


@pytest.mark.parametrize("label, check, budget", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(label, check, budget, capsys):
    ok, line = _verdict(label, check(), budget)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    failures = 0
    for label, check, budget in CRITERIA:
        ok, line = _verdict(label, check(), budget)
        print(line, flush=True)
        failures += not ok
    sys.exit(1 if failures else 0)

"""Release gate: every shipped claim, checked end to end.

Each criterion prints one pass/fail line so the full battery reads as a
checklist in the verbose test output.
"""

import pytest

from surgeon import _acceptance

CASES = list(_acceptance.CRITERIA)
IDS = ["criterion_%02d" % num for num, _, _ in CASES]


@pytest.mark.parametrize("num,label,func", CASES, ids=IDS)
def test_criterion(num, label, func):
    ok, detail = func()
    verdict = "PASS" if ok else "FAIL"
    print("criterion %d (%s): %s  %s" % (num, label, verdict, detail))
    assert ok, "criterion %d (%s): %s" % (num, label, detail)


def test_run_all_reports_every_criterion():
    results = _acceptance.run_all()
    assert [num for num, _, _, _ in results] == list(range(1, 12))
    for _, _, _, detail in results:
        assert detail

"""One test per acceptance criterion; each prints a PASS/FAIL line.

Run directly (``python tests/test_acceptance.py``) for the plain table.
"""
import pytest

from combquot.acceptance import CHECKS, run_check

RESULTS = {}


@pytest.mark.parametrize("number", sorted(CHECKS))
def test_criterion(number):
    res = run_check(number)
    RESULTS[number] = res
    print(res.line())
    for d in res.details:
        print("       " + d)
    assert res.passed, "\n".join(res.details)


if __name__ == "__main__":
    import sys
    results = [run_check(i) for i in sorted(CHECKS)]
    for r in results:
        print(r.line())
    sys.exit(0 if all(r.passed for r in results) else 1)

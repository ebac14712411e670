"""Acceptance gate: every built-in criterion must pass exactly.

Run with `pytest tests/test_acceptance.py -v -s` to see one line per
criterion; the same list backs the `triprod selftest` CLI subcommand.
"""

import pytest

from triprod.selftest import CRITERIA, run_one


@pytest.mark.parametrize(
    "cid,name", [(cid, name) for cid, name, _ in CRITERIA], ids=lambda v: str(v)
)
def test_criterion(cid, name):
    result = run_one(cid)
    status = "PASS" if result.ok else "FAIL"
    print(f"{status} criterion {result.id}: {result.name} — {result.detail}")
    assert result.ok, f"criterion {cid} ({name}): {result.detail}"

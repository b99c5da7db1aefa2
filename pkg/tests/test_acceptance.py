"""The acceptance suite: one test per criterion, each printing a PASS/FAIL line."""

import pytest

from heisquartic import acceptance


@pytest.mark.parametrize("entry", acceptance.CRITERIA, ids=[c[1] for c in acceptance.CRITERIA])
def test_criterion(entry, capsys):
    result = acceptance.run_criterion(entry, seed=0)
    failed = [c for c in result.checks if not c.passed]
    with capsys.disabled():
        status = "PASS" if result.passed else "FAIL"
        print(f"\n[acceptance] {status} {result.number:2d}. {result.title} ({result.seconds:.1f}s)")
    assert result.error is None, result.error
    assert not failed, "; ".join(f"{c.name}: expected {c.expected!r}, got {c.actual!r}" for c in failed)
    assert result.checks

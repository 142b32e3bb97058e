"""One line per acceptance item; run with ``pytest -s`` or see the captured output."""

import pytest

from topokit.acceptance import CHECKS, run_check
from topokit.config import AcceptanceConfig


@pytest.mark.parametrize("check", CHECKS, ids=[f"{c.number:02d}-{c.name}" for c in CHECKS])
def test_acceptance_item(check, capsys):
    outcome, dt = run_check(check, AcceptanceConfig())
    with capsys.disabled():
        print(f"\n[{'PASS' if outcome.ok else 'FAIL'}] {check.number:2d} {check.name}: {outcome.detail} ({dt:.1f}s)")
    assert outcome.ok, outcome.detail

"""The acceptance gate: every claim in the registry, replayed at its exact
expected values, one pass/fail line printed per criterion.

T3-GF3 is the one budget-guarded criterion: this suite runs it under a large
budget; if the active backend's static estimate still exceeds it, the test
skips with the harness-provided reason rather than faking a pass.
"""

import os

import pytest

from ringlab.verify import CLAIMS, run_claim

ACCEPTANCE_BUDGET = float(os.environ.get("RINGLAB_TEST_BUDGET", "900"))
CLAIM_IDS = [c.id for c in CLAIMS]


def test_claim_registry_is_complete():
    assert CLAIM_IDS == [
        "EX31-IDEALS", "EX31-OUTLIERS", "EX31-NAMED", "TERNION-ORBITS",
        "T3-ORBITS", "T3-INVARIANT", "T3-GF3", "COMM-FINITE", "CHARP2",
        "ASYMMETRY", "SEMISIMPLE", "PRODUCT-LAWS", "LOCAL-LINE",
        "PROPERTY-SUITES", "FOUR-RINGS",
    ]


@pytest.mark.parametrize("claim_id", CLAIM_IDS)
def test_acceptance(claim_id):
    result = run_claim(claim_id, budget_seconds=ACCEPTANCE_BUDGET)
    line = f"{result.claim}: {result.status.upper()} ({result.seconds:.2f}s)"
    if result.status != "skipped":
        line += f" -> {result.computed}"
    print(line)
    if result.status == "skipped":
        assert claim_id == "T3-GF3", f"only T3-GF3 may skip, got {result.reason}"
        pytest.skip(result.reason)
    assert result.status == "pass", (
        f"{claim_id}: expected [{result.expected}] but computed "
        f"[{result.computed}] {result.reason}")

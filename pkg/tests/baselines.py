"""Regression baselines produced by the engine itself (not oracles).

Run as a script to refreeze after an intentional change:

    python3 tests/baselines.py
"""

import json
from pathlib import Path

FIXTURES = Path(__file__).parent / "fixtures"
AUDIT_BASELINE = FIXTURES / "audit_baseline.json"


def audit_summary(reports):
    return [
        {"tag": r.claim, "status": r.status.value, "instances": r.instances_checked, "nonvacuous": r.nonvacuous_instances}
        for r in reports
    ]


def freeze_audit_baseline():
    from ringlab.audit import default_inventory, run_all

    reports, _ = run_all(default_inventory())
    AUDIT_BASELINE.write_text(json.dumps(audit_summary(reports), indent=1) + "\n")


if __name__ == "__main__":
    freeze_audit_baseline()

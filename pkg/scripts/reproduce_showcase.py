#!/usr/bin/env python3
"""Run the four bundled showcase instances and print a comparison table.

Each instance violates a hypothesis of its closed form (weights below 2,
or an orientation that breaks the family definition), so the naive
prediction provably disagrees with the exact engine at t = 2.
"""

from __future__ import annotations

import sys

from edgereg.verify import run_reference_examples


def main() -> int:
    report = run_reference_examples(field="Q")
    header = f"{'instance':<30} {'family':<14} {'engine':>6} {'naive':>6}  status"
    print(header)
    print("-" * len(header))
    for r in report.records:
        status = "ok" if r.ok else (r.skipped or "FAIL")
        print(
            f"{r.name:<30} {r.family:<14} {r.engine_value!s:>6} "
            f"{r.formula_value!s:>6}  {status}"
        )
        for v in r.violations:
            print(f"{'':<30}   violated: {v}")
    print()
    print(f"exit code: {report.exit_code()}")
    return report.exit_code()


if __name__ == "__main__":
    sys.exit(main())

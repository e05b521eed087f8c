"""Recompute every bundled reference table and show the audit verdicts.

Clean rows are counted; rows whose recorded values cannot belong to the
printed curve are listed with the field that disagrees and both values.
"""

from __future__ import annotations

from scrollcurves import audit_fixture, fixture_names, format_exponents


def main() -> None:
    total_rows = 0
    total_flagged = 0
    for name in fixture_names():
        report = audit_fixture(name)
        total_rows += report.total
        total_flagged += len(report.flagged)
        print(f"{name}: {report.matched}/{report.total} matched")
        for record in report.flagged:
            curve = format_exponents(record.row.exponents)
            print(f"  {curve}: field {record.field!r}, "
                  f"recorded {record.fixture_value}, computed {record.computed_value}")
    print()
    print(f"{total_rows} rows audited, {total_flagged} flagged")


if __name__ == "__main__":
    main()

"""Run every identity check in both modes and list where the printed forms diverge."""

from zetaaudit.audit import AuditConfig, run_all

report = run_all(AuditConfig(mode="both"))
print("summary:", report.summary)
print("\nliteral-mode findings (the audited counterparts all pass):")
for c in report.checks:
    if c.mode == "literal" and c.status != "PASS":
        ratio, tag = c.ratio_diagnostic or (float("nan"), "none")
        print(f"  {c.id:<15} {c.status:<22} ratio {ratio:<22.15g} factor {tag:<20} [{c.location}]")
print("\naudited failures:", [c.id for c in report.failures("audited")])

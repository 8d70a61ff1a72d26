import re


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion."""
    rows = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", getattr(rep, "nodeid", ""))
            if not m or rep.when != "call" and outcome != "error":
                continue
            props = dict(rep.user_properties)
            rows[int(m.group(1))] = (outcome == "passed", m.group(2).replace("_", " "),
                                     props.get("checks"), props.get("failures") or [])
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(rows):
        ok, name, checks, fails = rows[k]
        line = f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {name}"
        if checks is not None:
            line += f"  ({checks - len(fails)}/{checks} checks)"
        terminalreporter.write_line(line)
        for f in fails[:6]:
            terminalreporter.write_line(f"    failed: {f}")

import os

from hypothesis import settings

settings.register_profile("dev", deadline=None, max_examples=100)
settings.register_profile("ci", deadline=None, max_examples=500)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py" in rep.nodeid and rep.when == "call":
                lines.append(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {rep.nodeid.split('::', 1)[1]}")
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda l: l.split()[1]):
            terminalreporter.write_line(line)

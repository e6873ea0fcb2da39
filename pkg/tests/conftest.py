"""Shared strategies and the acceptance summary hook."""

from hypothesis import settings, strategies as st

from spinordict.exact_linalg import GaussRational

settings.register_profile("exact", max_examples=40, deadline=None)
settings.load_profile("exact")

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
gauss = st.builds(GaussRational, rationals, rationals)

# Filled by tests/test_acceptance.py and echoed in the terminal summary.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(set(ACCEPTANCE_LINES), key=lambda s: int(s.split()[2].rstrip(":"))):
        terminalreporter.write_line(line)

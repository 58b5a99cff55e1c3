from fractions import Fraction

from hypothesis import strategies as st

from hetstir.ring import LamPoly, XPoly

ACCEPTANCE_LINES: list[str] = []

small_rats = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6))
lampolys = st.lists(small_rats, max_size=9).map(LamPoly)
xpolys = st.lists(st.lists(small_rats, max_size=4).map(LamPoly), max_size=9).map(XPoly)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

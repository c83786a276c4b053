from fractions import Fraction

from hypothesis import settings, strategies as st

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

small_rationals = st.builds(
    Fraction, st.integers(-30, 30), st.integers(1, 7)
)


def vectors(min_size=1, max_size=7, elements=small_rationals):
    return st.lists(elements, min_size=min_size, max_size=max_size)

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

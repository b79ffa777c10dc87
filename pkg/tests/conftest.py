import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

# criterion number -> (passed, detail), filled by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def criterion():
    """Record the outcome of one acceptance criterion, failing or not."""
    state = {}

    def start(number: int, title: str):
        state["n"], state["title"] = number, title
        ACCEPTANCE[number] = (False, f"{title}: did not finish")

    def done(detail: str = ""):
        ACCEPTANCE[state["n"]] = (True, f"{state['title']}" + (f" ({detail})" if detail else ""))

    def fail(detail: str):
        ACCEPTANCE[state["n"]] = (False, f"{state['title']}: {detail}")
        pytest.fail(detail)

    start.done, start.fail = done, fail
    return start


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {n:>2}. {text}")

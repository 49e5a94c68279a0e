import os
import random

import pytest

# one line per acceptance criterion, printed after the run
CRITERIA: dict[str, tuple[bool, str]] = {}

SEED = int(os.environ.get("SEMINORMAL_SEED", "20240229"))


def record(label: str, ok: bool, detail: str = "") -> bool:
    CRITERIA[label] = (ok, detail)
    print(f"{'PASS' if ok else 'FAIL'} criterion {label}: {detail}")
    return ok


@pytest.fixture
def rng():
    return random.Random(SEED)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(CRITERIA, key=lambda s: (int("".join(c for c in s if c.isdigit())), s)):
        ok, detail = CRITERIA[label]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {label}: {detail}")

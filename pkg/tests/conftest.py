import sys
import time
from contextlib import contextmanager
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE: dict[str, tuple[bool, str]] = {}


class Criterion:
    def __init__(self, label: str, budget: float):
        self.label = label
        self.budget = budget
        self.notes: list[str] = []

    def note(self, text: str) -> None:
        self.notes.append(text)


@pytest.fixture
def criterion(request):
    """Time a block against its budget and record a pass/fail line for the summary."""

    @contextmanager
    def run(label: str, budget: float):
        crit = Criterion(label, budget)
        start = time.perf_counter()
        ok = False
        try:
            yield crit
            elapsed = time.perf_counter() - start
            crit.note(f"{elapsed:.3f}s of {budget:g}s")
            assert elapsed < budget, f"{label} took {elapsed:.3f}s, budget {budget}s"
            ok = True
        finally:
            _ACCEPTANCE[label] = (ok, "; ".join(crit.notes))
            print(f"[{'PASS' if ok else 'FAIL'}] {label}: {'; '.join(crit.notes)}")

    return run


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[0][2:])):
        ok, detail = _ACCEPTANCE[label]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  ({detail})")

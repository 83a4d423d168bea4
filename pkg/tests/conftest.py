import json
from pathlib import Path

import numpy as np
import pytest

FIXTURES = Path(__file__).parent / "fixtures"


def load_matrix(name: str) -> np.ndarray:
    rows = (FIXTURES / name).read_text().split()
    return np.array([[int(ch) for ch in row] for row in rows], dtype=np.uint8)


def all_instances(k_max: int):
    for K in range(3, k_max + 1):
        for D in range(1, K - 1):
            yield K, D


@pytest.fixture(scope="session")
def example1_matrix() -> np.ndarray:
    return load_matrix("air_12x8.txt")


@pytest.fixture(scope="session")
def example4_matrix() -> np.ndarray:
    return load_matrix("air_33x21.txt")


@pytest.fixture(scope="session")
def reference_tables() -> dict:
    return json.loads((FIXTURES / "reference_tables.json").read_text())


ACCEPTANCE_LINES: list[str] = []


def report_criterion(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title}" + (f" ({detail})" if detail else "")
    print(line)
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)

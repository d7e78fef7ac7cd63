from __future__ import annotations

import json
import sys
from pathlib import Path

import pytest

from heronfrieze import Polygon, random_polygon

UNIT_SQUARE = Polygon.from_coords([(0, 0), (1, 0), (1, 1), (0, 1)])


@pytest.fixture
def unit_square() -> Polygon:
    return UNIT_SQUARE


@pytest.fixture
def write_json(tmp_path: Path):
    def _write(name: str, data) -> Path:
        path = tmp_path / name
        path.write_text(json.dumps(data) if not isinstance(data, str) else data)
        return path
    return _write


@pytest.fixture
def hexagon() -> Polygon:
    return random_polygon(6, seed=11)


@pytest.fixture
def octagon() -> Polygon:
    return random_polygon(8, seed=12)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

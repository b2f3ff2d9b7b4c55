import sys
from pathlib import Path

import pytest

from fmnumber import SurfaceConfig

sys.path.insert(0, str(Path(__file__).parent))

CONFIGS = Path(__file__).resolve().parent.parent / "demos" / "configs"

ACCEPTANCE_LINES = []


@pytest.fixture
def config_path():
    return lambda name: CONFIGS / name


@pytest.fixture
def example_i():
    return SurfaceConfig.load(CONFIGS / "example_i.json")


@pytest.fixture
def example_ii():
    return SurfaceConfig.load(CONFIGS / "example_ii.json")


@pytest.fixture
def companion():
    return SurfaceConfig.load(CONFIGS / "companion.json")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep

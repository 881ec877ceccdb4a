import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("syzlab", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("syzlab")


def pytest_addoption(parser):
    parser.addoption("--deep", action="store_true", default=False, help="run long computations")


def deep_enabled(config) -> bool:
    return config.getoption("--deep") or os.environ.get("SYZLAB_DEEP", "") not in ("", "0")


def pytest_collection_modifyitems(config, items):
    if deep_enabled(config):
        return
    skip = pytest.mark.skip(reason="long run; use --deep or SYZLAB_DEEP=1")
    for item in items:
        if "deep" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def deep(request) -> bool:
    return deep_enabled(request.config)


CRITERIA: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in sorted(CRITERIA, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)

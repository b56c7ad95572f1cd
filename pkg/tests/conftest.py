import pytest

from s6quartics import pipeline

CRITERIA = {}


@pytest.fixture(scope="session")
def world():
    return pipeline.World()


@pytest.fixture(scope="session")
def ctx(world):
    return world.ctx


@pytest.fixture
def criterion():
    def record(n, ok, text):
        CRITERIA[n] = (ok, text)
        print("criterion %2d: %s  %s" % (n, "PASS" if ok else "FAIL", text))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        ok, text = CRITERIA[n]
        terminalreporter.write_line("criterion %2d: %s  %s" % (n, "PASS" if ok else "FAIL", text))

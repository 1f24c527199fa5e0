import pytest

from magicpath.enumerator import enumerate_canonical
from magicpath.records import analyze, order4_group_table
from magicpath.square import Square

DURER = (16, 3, 2, 13, 5, 10, 11, 8, 9, 6, 7, 12, 4, 15, 14, 1)
DURER_CANONICAL = (1, 12, 8, 13, 14, 7, 11, 2, 15, 6, 10, 3, 4, 9, 5, 16)
LO_SHU = (8, 1, 6, 3, 5, 7, 4, 9, 2)
LO_SHU_CANONICAL = (2, 7, 6, 9, 5, 1, 4, 3, 8)


@pytest.fixture(scope="session")
def durer():
    return Square(4, DURER)


@pytest.fixture(scope="session")
def lo_shu():
    return Square(3, LO_SHU)


@pytest.fixture(scope="session")
def catalog3():
    return enumerate_canonical(3)


@pytest.fixture(scope="session")
def catalog4():
    return enumerate_canonical(4)


@pytest.fixture(scope="session")
def group_table(catalog4):
    return order4_group_table()


@pytest.fixture(scope="session")
def records4(catalog4):
    return analyze(catalog4.squares)


@pytest.fixture(scope="session")
def records3(catalog3):
    return analyze(catalog3.squares)


# --- acceptance summary -----------------------------------------------------

_ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        _ACCEPTANCE[number] = (title, "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, verdict = _ACCEPTANCE[number]
        terminalreporter.write_line(f"[{verdict}] {number:2d}. {title}")

import pytest

from coincidence.catalog import bundled_catalog, default_catalog


@pytest.fixture(scope="session")
def cat():
    return default_catalog()


@pytest.fixture(scope="session")
def toda():
    return bundled_catalog("toda_16_6.catalog")


@pytest.fixture(scope="session")
def small():
    return bundled_catalog("small_cases.catalog")


@pytest.fixture(scope="session")
def g166(toda):
    return toda.group((16, 6))


@pytest.fixture(scope="session")
def pairs166(g166):
    elements = list(g166.enumerate())
    return [(a, b) for a in elements for b in elements]


# One PASS/FAIL line per acceptance criterion, printed after the run.
_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        _CRITERIA[number] = (title, "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, status = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")

import pytest

from mvlogic.kernel import builtin_logics


@pytest.fixture(scope="session")
def logics():
    return builtin_logics()


@pytest.fixture
def m3v(logics):
    return logics["M3V"]


@pytest.fixture
def ccsl3(logics):
    return logics["cCSL3"]


@pytest.fixture
def toolbox(logics):
    return logics["toolbox"]


_CRITERIA = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_criterion_" in report.nodeid:
        name = report.nodeid.split("::")[-1][len("test_criterion_"):]
        _CRITERIA[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA):
        number, _, label = name.partition("_")
        status = "PASS" if _CRITERIA[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {int(number):2d}  {label.replace('_', ' ')}")

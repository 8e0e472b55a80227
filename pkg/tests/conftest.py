import pytest

_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "acceptance(num, name): a top-level acceptance criterion; its outcome "
        "is echoed as one PASS/FAIL line in the terminal summary",
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    key = (int(mark.args[0]), mark.args[1])
    if rep.when == "call":
        _RESULTS[key] = rep.passed
    elif rep.failed or rep.skipped:
        _RESULTS[key] = False


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _RESULTS:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for (num, name), ok in sorted(_RESULTS.items()):
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {num} ({name}): {verdict}")

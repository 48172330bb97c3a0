import pytest

_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        notes = "; ".join(f"{k}={v}" for k, v in item.user_properties)
        _criteria.append((marker.args[0], marker.args[1], rep.outcome, notes))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number, title, outcome, notes in sorted(_criteria, key=lambda c: c[0]):
        status = "PASS" if outcome == "passed" else "FAIL"
        line = f"criterion {number:2d}: {status}  {title}"
        if notes:
            line += f"  [{notes}]"
        terminalreporter.write_line(line)

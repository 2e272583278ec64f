import pytest

_ACCEPTANCE: dict[int, tuple[str, str, float]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    n = marker.args[0]
    if rep.when == "setup":
        # fixture time counts toward the criterion
        _ACCEPTANCE[n] = (item.name, rep.outcome, rep.duration)
    elif rep.when == "call":
        _ACCEPTANCE[n] = (item.name, rep.outcome, _ACCEPTANCE[n][2] + rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        name, outcome, duration = _ACCEPTANCE[n]
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {name}  ({duration:.2f}s)")

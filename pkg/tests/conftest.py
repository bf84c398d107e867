from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

_CRITERIA = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        lines = [ln for ln in (report.capstdout or "").splitlines() if ln.startswith("criterion ")]
        _CRITERIA[name] = (report.outcome, lines[-1] if lines else name)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA, key=lambda s: int(s.split("_")[2])):
        outcome, line = _CRITERIA[name]
        if outcome == "passed":
            terminalreporter.write_line(line)
        else:
            terminalreporter.write_line(f"{name}: {outcome.upper()}" if line == name else line)

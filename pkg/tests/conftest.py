import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")
_results: dict[int, tuple[str, bool]] = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    num, name = int(m.group(1)), m.group(2).replace("_", " ")
    failed = report.failed or (report.when == "call" and report.skipped)
    prev = _results.get(num, (name, True))
    _results[num] = (name, prev[1] and not failed)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_results):
        name, ok = _results[num]
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {name}")

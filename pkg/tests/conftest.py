"""Acceptance summary: one PASS/FAIL line per criterion at the end of the run."""

from collections import defaultdict

_criteria: dict[int, str] = {}
_nodes: dict[str, int] = {}
_failed: dict[int, list[str]] = defaultdict(list)
_seen: dict[int, int] = defaultdict(int)


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            number, title = mark.args
            _criteria[number] = title
            _nodes[item.nodeid] = number


def pytest_runtest_logreport(report):
    number = _nodes.get(report.nodeid)
    if number is None:
        return
    if report.when == "call":
        _seen[number] += 1
    if report.failed:
        _failed[number].append(report.nodeid.split("::")[-1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_criteria):
        if _failed[number]:
            verdict = "FAIL"
        elif _seen[number]:
            verdict = "PASS"
        else:
            verdict = "NOT RUN"
        line = f"criterion {number}: {verdict}  {_criteria[number]}"
        if _failed[number]:
            line += f"  (failed: {', '.join(_failed[number])})"
        tr.write_line(line)

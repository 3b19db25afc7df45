import sys
from collections import defaultdict
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_criteria: dict[int, list[bool]] = defaultdict(list)
_titles: dict[int, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n = mark.args[0]
    if len(mark.args) > 1:
        _titles[n] = mark.args[1]
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _criteria[n].append(rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        status = "PASS" if all(_criteria[n]) else "FAIL"
        title = _titles.get(n, "")
        terminalreporter.write_line(f"criterion {n}: {status}  {title}  ({len(_criteria[n])} checks)")

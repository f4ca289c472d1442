import re
from collections import defaultdict

CRITERIA = {
    1: "counts",
    2: "construction equivalence",
    3: "independence",
    4: "domination",
    5: "chromatic",
    6: "orientations",
    7: "Tutte identity",
    8: "matchings",
    9: "spanning trees",
    10: "trees through an edge of K_q",
    11: "integrality",
    12: "determinism",
}

_PATTERN = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_")
_outcomes: dict[int, list[bool]] = defaultdict(list)


def pytest_runtest_logreport(report):
    match = _PATTERN.search(report.nodeid)
    if not match:
        return
    if report.when == "call" or report.outcome != "passed":
        _outcomes[int(match.group(1))].append(report.outcome == "passed")


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number, title in CRITERIA.items():
        results = _outcomes.get(number)
        if results is None:
            status = "NOT RUN"
        else:
            status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2} {title:<30} {status}")

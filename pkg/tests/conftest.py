from __future__ import annotations

from collections import defaultdict
from fractions import Fraction

import pytest

from hilbertsos.pointideal import PointSet

CRITERIA = {
    1: "exact identity suite",
    2: "robinson pipeline",
    3: "seven-point pipeline",
    4: "eight-point copacetic reproduction",
    5: "sigma enclosure",
    6: "numeric perturbation targets",
    7: "newton obstruction",
    8: "lattice interpolation basis",
    9: "zero catalogs",
    10: "diagonal multiplier feasibility",
    11: "region K against audits",
    12: "M_t boundary",
}

_outcomes: dict[int, list[tuple[str, str]]] = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _outcomes[marker.args[0]].append((item.name, rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        results = _outcomes.get(n)
        if not results:
            continue
        failed = [name for name, o in results if o != "passed"]
        status = "PASS" if not failed else "FAIL"
        line = f"criterion {n:2d} [{status}] {CRITERIA[n]} ({len(results) - len(failed)}/{len(results)})"
        if failed:
            line += "  failing: " + ", ".join(failed)
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def robinson_points():
    return PointSet.affine([(a, b) for a in (-1, 0, 1) for b in (-1, 0, 1) if (a, b) != (0, 0)])


@pytest.fixture(scope="session")
def seven_points():
    return PointSet.projective([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1),
                                (1, 1, -1), (1, -1, 1), (1, -1, -1)])


@pytest.fixture(scope="session")
def eight_points():
    return PointSet.affine([(-1, 0), (-1, -1), (0, 1), (0, -1), (1, 0), (2, 2), (2, -2), (1, -3)])


@pytest.fixture(scope="session")
def ninth_point():
    return (Fraction(2516, 1297), Fraction(4991, 2594))

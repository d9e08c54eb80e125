import random
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from bialg.liealg import StructureConstants

settings.register_profile("default", deadline=None)
settings.load_profile("default")

PAIRS = ((0, 1), (0, 2), (1, 2))

CRITERIA = {
    1: "nullspace dimensions (exact, < 1 s)",
    2: "appendix quadratic conditions (200 samples, < 5 s)",
    3: "catalog verification (exact, < 30 s)",
    4: "class counts (78, 44, 10)",
    5: "sl(2,R) worked example (< 60 s)",
    6: "classifier robustness and decomposition properties (< 30 s)",
    7: "cobracket equivalences on 100 valid and 100 invalid pairs",
}

_outcomes = {}


def tensor_from_values(values) -> StructureConstants:
    """Antisymmetric tensor from the 9 independent entries in column order."""
    c = [[[Fraction(0)] * 3 for _ in range(3)] for _ in range(3)]
    it = iter(values)
    for i, j in PAIRS:
        for k in range(3):
            v = Fraction(next(it))
            c[i][j][k] = v
            c[j][i][k] = -v
    return StructureConstants(c)


def random_tensor(rnd: random.Random, lo=-2, hi=2) -> StructureConstants:
    return tensor_from_values([rnd.randint(lo, hi) for _ in range(9)])


small_rationals = st.fractions(min_value=-3, max_value=3, max_denominator=3)
tensors = st.lists(st.integers(-2, 2), min_size=9, max_size=9).map(tensor_from_values)


@pytest.fixture
def rnd():
    return random.Random(20020101)


def pytest_runtest_logreport(report):
    marker = getattr(report, "acceptance", None)
    if marker is None:
        return
    if report.when == "call" or report.outcome != "passed":
        prev = _outcomes.get(marker, True)
        _outcomes[marker] = prev and report.outcome == "passed"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    m = item.get_closest_marker("acceptance")
    if m is not None:
        report.acceptance = m.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        if n not in _outcomes:
            continue
        status = "PASS" if _outcomes[n] else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {status}  {CRITERIA[n]}")

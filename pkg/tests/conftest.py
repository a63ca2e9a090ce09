import pytest
from hypothesis import strategies as st

from forbidden_detour.diagram import Endpoint, GaussDiagram, Role

TREFOIL = "O1+O2+U1+U2+"


@st.composite
def diagrams(draw, min_chords=0, max_chords=7):
    """Diagrams drawn directly from a slot permutation, independent of
    ``random_diagram``."""
    c = draw(st.integers(min_chords, max_chords))
    slots = draw(st.permutations(range(2 * c)))
    labels = draw(st.permutations(range(1, c + 1)))
    eps = [None] * (2 * c)
    signs = {}
    for k, label in enumerate(labels):
        p, q = slots[2 * k], slots[2 * k + 1]
        if draw(st.booleans()):
            p, q = q, p
        eps[p] = Endpoint(label, Role.TAIL)
        eps[q] = Endpoint(label, Role.HEAD)
        signs[label] = draw(st.sampled_from([1, -1]))
    return GaussDiagram(tuple(eps), signs)


_acceptance: list[tuple[str, str, str]] = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        doc = getattr(report, "criterion", "")
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome, doc))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    # attach the criterion text (first docstring line) to the report
    outcome = yield
    doc = (getattr(item, "function", None).__doc__ or "").strip().splitlines()
    outcome.get_result().criterion = doc[0] if doc else ""


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, doc in _acceptance:
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}: {doc}")

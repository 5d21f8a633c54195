import pytest
from hypothesis import settings, strategies as st

from momangle.complex import Complex

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def complexes(draw, min_vertices=1, max_vertices=6):
    m = draw(st.integers(min_vertices, max_vertices))
    V = list(range(1, m + 1))
    gens = draw(st.lists(st.sets(st.sampled_from(V), min_size=1, max_size=m), min_size=0, max_size=2 * m))
    if not gens and draw(st.booleans()):
        return Complex.void(V)
    return Complex(gens or [[]], V)


@pytest.fixture
def example1():
    from momangle.corpus import example1

    return example1()


@pytest.fixture(scope="session")
def moore():
    from momangle.corpus import moore_mod3

    return moore_mod3()


@pytest.fixture(scope="session")
def l0():
    from momangle.corpus import l_zero

    return l_zero()


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" in nodeid and rep.when == "call":
                n = int(nodeid.split("test_criterion_")[1].split("_")[0])
                rows.append((n, outcome, nodeid.split("::")[-1]))
    if rows:
        terminalreporter.section("acceptance criteria")
        for n, outcome, name in sorted(rows):
            terminalreporter.write_line(f"criterion {n}: {'PASS' if outcome == 'passed' else 'FAIL'}  ({name})")

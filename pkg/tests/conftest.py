import hypothesis.strategies as st
import pytest
from hypothesis import settings

from residua import minimalize

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")

# the ideal of the worked two-variable example, in its printed generator order
EXAMPLE = [(8, 0), (6, 2), (2, 3), (1, 5), (0, 6)]


@pytest.fixture
def example():
    return list(EXAMPLE)


@pytest.fixture
def example_ideal():
    return minimalize(EXAMPLE, 2)


@st.composite
def m_primary_gens(draw, n=None, max_exp=8, max_gens=6):
    """Generator tuples with a pure power of each variable."""
    if n is None:
        n = draw(st.sampled_from([2, 3]))
    gens = [tuple(draw(st.integers(1, max_exp)) if j == i else 0 for j in range(n))
            for i in range(n)]
    extra = draw(st.lists(st.tuples(*[st.integers(0, max_exp)] * n)
                          .filter(any), max_size=max_gens - n))
    return draw(st.permutations(gens + extra))


@st.composite
def point_sets(draw, n=None, max_exp=8, max_size=6):
    if n is None:
        n = draw(st.sampled_from([2, 3]))
    return draw(st.lists(st.tuples(*[st.integers(0, max_exp)] * n), min_size=1,
                         max_size=max_size))


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS):
        terminalreporter.write_line(line)

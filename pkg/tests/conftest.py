from itertools import combinations

from hypothesis import settings, strategies as st

from hyperres.core import KFamily

settings.register_profile("default", deadline=None, max_examples=150)
settings.load_profile("default")


@st.composite
def families(draw, ks=(2, 3), max_n=7, max_edges=10):
    k = draw(st.sampled_from(ks))
    n = draw(st.integers(min_value=k, max_value=max_n))
    universe = list(combinations(range(1, n + 1), k))
    edges = draw(st.lists(st.sampled_from(universe), unique=True, max_size=max_edges))
    return KFamily.from_sets(k, n, edges)


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(module.RESULTS, key=lambda l: int(l.split("criterion ")[1].split(":")[0])):
        terminalreporter.write_line(line)

import pytest
from hypothesis import strategies as st

from hermspec.graph import EdgeKind, MixedGraph, parse_mixed_graph

D1_TEXT = "v 4\n0 -- 1\n0 -- 3\n1 -- 3\n1 -> 2\n2 -> 3\n"
# u1..u4 are 0..3
D2_TEXT = "v 4\n3 -> 0\n0 -> 2\n2 -> 3\n0 -- 1\n1 -- 2\n1 -- 3\n"


@pytest.fixture
def d1() -> MixedGraph:
    return parse_mixed_graph(D1_TEXT)


@pytest.fixture
def d2() -> MixedGraph:
    return parse_mixed_graph(D2_TEXT)


@st.composite
def mixed_graphs(draw, min_n: int = 0, max_n: int = 7, connected: bool = False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected and n > 1:
        # a random spanning tree keeps the graph connected
        tree = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
        chosen = sorted(set(chosen) | set(tree))
    kinds = draw(st.lists(st.sampled_from(list(EdgeKind)), min_size=len(chosen), max_size=len(chosen)))
    return MixedGraph.build(n, [(u, v, k) for (u, v), k in zip(chosen, kinds)])


def ring(n: int, kinds=None) -> MixedGraph:
    """C_n on 0..n-1; kinds[j] is read along the traversal j -> j+1."""
    kinds = kinds or [EdgeKind.UNDIRECTED] * n
    return MixedGraph.build(n, [(j, (j + 1) % n, k) for j, k in enumerate(kinds)])


# one line per acceptance criterion, repeated in the terminal summary
ACCEPTANCE: dict[str, str] = {}


def record_criterion(key: str, ok: bool, detail: str) -> None:
    line = f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE[key] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE, key=lambda k: (len(k), k)):
            terminalreporter.write_line(ACCEPTANCE[key])

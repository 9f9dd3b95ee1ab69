from itertools import combinations, product

import pytest
from hypothesis import settings, strategies as st

from linchrom.graph import Graph

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


@st.composite
def colored_graphs(draw, min_n=1, max_n=6, max_colors=4):
    g = draw(graphs(min_n, max_n))
    k = draw(st.integers(1, max_colors))
    colors = draw(st.lists(st.integers(0, k - 1), min_size=g.n, max_size=g.n))
    return g, colors


# -- independent oracles (deliberately naive, share no code with the package) --


def naive_connected(g: Graph, verts) -> bool:
    verts = set(verts)
    if not verts:
        return False
    start = next(iter(verts))
    seen = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        for u in verts:
            if u not in seen and g.has_edge(u, v):
                seen.add(u)
                todo.append(u)
    return seen == verts


def naive_has_center(colors, verts) -> bool:
    cols = [colors[v] for v in verts]
    return any(cols.count(c) == 1 for c in cols)


def naive_paths(g: Graph):
    """Every simple path as a vertex tuple (both directions)."""

    def walk(path):
        yield tuple(path)
        for u in range(g.n):
            if u not in path and g.has_edge(path[-1], u):
                yield from walk(path + [u])

    for v in range(g.n):
        yield from walk([v])


def naive_is_linear(g: Graph, colors) -> bool:
    return all(naive_has_center(colors, p) for p in naive_paths(g))


def naive_is_centered(g: Graph, colors) -> bool:
    for r in range(1, g.n + 1):
        for s in combinations(range(g.n), r):
            if naive_connected(g, s) and not naive_has_center(colors, s):
                return False
    return True


def naive_chromatic(g: Graph, ok) -> int:
    for k in range(0, g.n + 1):
        for colors in product(range(k), repeat=g.n):
            if ok(g, colors):
                return k
    raise AssertionError("unreachable")


@pytest.fixture
def emit_line(capsys):
    """Print a line that survives pytest's output capture."""

    def _emit(text: str) -> None:
        with capsys.disabled():
            print(text)

    return _emit

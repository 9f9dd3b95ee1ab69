"""Explicit colorings for graph families whose chromatic numbers are known
in closed form.  Each constructor returns a :class:`ClassColoring` whose
``claimed_size`` is the formula value."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import (
    Graph,
    GraphError,
    caterpillar_spine,
    complete_binary_tree,
    complete_multipartite,
    corook_graph,
    grid_graph,
    is_star_forest,
    iter_bits,
    path_graph,
)
from .verify import (
    Coloring,
    EliminationForest,
    certified_centered,
    find_centerless_connected_set,
    is_centered,
    is_linear,
)

LINEAR = "linear"
CENTERED = "centered"
ORACLE_LIMIT = 16


@dataclass(frozen=True)
class ClassColoring:
    graph: Graph
    coloring: Coloring
    kind: str
    claimed_size: int
    class_tag: str
    forest: EliminationForest | None = None

    def verify(self, oracle_limit: int = ORACLE_LIMIT) -> bool:
        """Check the coloring with the verifier for its kind.

        Small graphs go through exhaustive search; larger centered colorings
        with a forest are checked against the certificate.
        """
        g, c = self.graph, self.coloring
        if c.palette_size != self.claimed_size:
            return False
        if self.kind == LINEAR:
            return is_linear(g, c)
        if g.n <= oracle_limit:
            return find_centerless_connected_set(g, c) is None
        if self.forest is not None:
            return certified_centered(g, self.forest, c)
        return is_centered(g, c)


def path_size(n: int) -> int:
    return n.bit_length()


def _bisect(lo: int, hi: int, top: int, colors: list[int]) -> None:
    if lo > hi:
        return
    mid = (lo + hi + 1) // 2
    colors[mid] = top
    _bisect(lo, mid - 1, top - 1, colors)
    _bisect(mid + 1, hi, top - 1, colors)


def path_colors(n: int) -> list[int]:
    """Middle vertex gets the top color; both halves reuse the lower colors."""
    colors = [0] * n
    _bisect(0, n - 1, path_size(n) - 1, colors)
    return colors


def color_path(n: int) -> ClassColoring:
    g = path_graph(n)
    return ClassColoring(g, Coloring(tuple(path_colors(n))), CENTERED, path_size(n), "path")


def color_star_forest(g: Graph) -> ClassColoring:
    if not is_star_forest(g):
        raise GraphError("graph is not a star forest")
    colors = [0] * g.n
    for v in range(g.n):
        # leaves of stars with >= 2 leaves, and the higher endpoint of a K2
        if g.degree(v) == 1:
            (u,) = iter_bits(g.adj[v])
            if g.degree(u) > 1 or u < v:
                colors[v] = 1
    c = Coloring(tuple(colors))
    return ClassColoring(g, c, CENTERED, 2 if g.num_edges else 1, "star-forest")


def color_binary_tree(k: int) -> ClassColoring:
    g = complete_binary_tree(k)
    colors = tuple((v + 1).bit_length() - 1 for v in range(g.n))
    parent = (-1,) + tuple((v - 1) // 2 for v in range(1, g.n))
    return ClassColoring(g, Coloring(colors), CENTERED, k, "binary-tree", EliminationForest(parent))


def color_caterpillar(g: Graph) -> ClassColoring:
    """Spine colored as a path, all leaves share one extra color."""
    spine = caterpillar_spine(g)
    if spine is None:
        raise GraphError("graph is not a caterpillar")
    pc = path_colors(len(spine))
    k = path_size(len(spine))
    colors = [k] * g.n
    for v, c in zip(spine, pc):
        colors[v] = c
    legs = g.n > len(spine)
    return ClassColoring(g, Coloring(tuple(colors)), CENTERED, k + (1 if legs else 0), "caterpillar")


def multipartite_size(parts: Sequence[int]) -> int:
    return sum(parts) - max(parts) + 1


def _multipartite_colors(parts: Sequence[int]) -> list[int]:
    big = max(range(len(parts)), key=lambda i: (parts[i], -i))
    colors = []
    nxt = 1
    for i, size in enumerate(parts):
        for _ in range(size):
            if i == big:
                colors.append(0)
            else:
                colors.append(nxt)
                nxt += 1
    return colors


def color_complete_multipartite(parts: Sequence[int]) -> ClassColoring:
    """First largest part monochromatic, every other vertex its own color."""
    g = complete_multipartite(parts)
    c = Coloring(tuple(_multipartite_colors(parts)))
    return ClassColoring(g, c, CENTERED, multipartite_size(parts), "complete-multipartite")


def corook_size(n: int, m: int) -> int:
    n, m = max(n, m), min(n, m)
    if m >= 2 and n >= 3:
        return n * m - n + 1
    return m


def color_corook(n: int, m: int) -> ClassColoring:
    """Restriction of the multipartite coloring whose parts are the longer lines.

    A centered coloring stays centered on subgraphs, and the co-rook graph
    is a subgraph of the complete multipartite graph on those parts.
    """
    g = corook_graph(n, m)
    size = corook_size(n, m)
    if min(n, m) == 1:
        colors = [0] * (n * m)
    elif n == m == 2:
        # two disjoint edges: (0,0)-(1,1) and (0,1)-(1,0)
        colors = [0, 0, 1, 1]
    elif n >= m:
        # parts are the m columns, each with n vertices; column 0 monochromatic
        colors = [0] * (n * m)
        nxt = 1
        for i in range(n):
            for j in range(1, m):
                colors[i * m + j] = nxt
                nxt += 1
    else:
        # parts are the n rows, each with m vertices; row 0 monochromatic
        colors = [0] * (n * m)
        nxt = 1
        for i in range(1, n):
            for j in range(m):
                colors[i * m + j] = nxt
                nxt += 1
    return ClassColoring(g, Coloring(tuple(colors)), CENTERED, size, "corook")


# -- grids ----------------------------------------------------------------


def _grid_palette(h: int, w: int, memo: dict) -> int:
    if h <= 0 or w <= 0:
        return 0
    key = (h, w)
    if key not in memo:
        r, c = (h - 1) // 2, (w - 1) // 2
        sub = max(
            _grid_palette(r, c, memo),
            _grid_palette(r, w - c - 1, memo),
            _grid_palette(h - r - 1, c, memo),
            _grid_palette(h - r - 1, w - c - 1, memo),
        )
        memo[key] = h + w - 1 + sub
    return memo[key]


def grid_palette_size(k: int) -> int:
    """Number of colors used by :func:`color_grid` (computed without coloring)."""
    return _grid_palette(k, k, {})


def color_grid(k: int) -> ClassColoring:
    """Recursive separator coloring of the k x k grid.

    The middle row plus middle column of each rectangle (lower index when
    the side is even) get fresh colors from the top of the rectangle's
    palette; the four remaining rectangles share the colors below.  The
    recursion doubles as an elimination forest: each separator is a chain
    and the sub-rectangles hang below its last vertex.
    """
    if k < 1:
        raise GraphError("grid side must be positive")
    g = grid_graph(k)
    colors = [0] * (k * k)
    parent = [-1] * (k * k)
    memo: dict = {}

    def rec(r0: int, c0: int, h: int, w: int, par: int) -> None:
        if h <= 0 or w <= 0:
            return
        top = _grid_palette(h, w, memo)
        r, c = (h - 1) // 2, (w - 1) // 2
        sep = [(r0 + r) * k + (c0 + j) for j in range(w)]
        sep += [(r0 + i) * k + (c0 + c) for i in range(h) if i != r]
        prev = par
        for idx, v in enumerate(sep):
            colors[v] = top - 1 - idx
            parent[v] = prev
            prev = v
        rec(r0, c0, r, c, prev)
        rec(r0, c0 + c + 1, r, w - c - 1, prev)
        rec(r0 + r + 1, c0, h - r - 1, c, prev)
        rec(r0 + r + 1, c0 + c + 1, h - r - 1, w - c - 1, prev)

    rec(0, 0, k, k, -1)
    forest = EliminationForest(tuple(parent))
    size = grid_palette_size(k)
    return ClassColoring(g, Coloring(tuple(colors)), CENTERED, size, "grid", forest)

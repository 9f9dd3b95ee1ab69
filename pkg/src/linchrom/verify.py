"""Checking colorings: proper, linear (every path has a center) and centered
(every connected subgraph has a center), plus elimination-forest certificates.

Whether a path or connected subgraph has a center depends only on its vertex
set, so all searches work on vertex-set bitmasks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .graph import Graph, GraphFormatError, VertexSet, component_masks, iter_bits

IMPROPER_EDGE = "improper-edge"
CENTERLESS_PATH = "centerless-path"
CENTERLESS_SET = "centerless-connected-set"


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if any(c < 0 for c in self.colors):
            raise ValueError("colors must be nonnegative integers")

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    @property
    def palette_size(self) -> int:
        return len(set(self.colors))

    def class_masks(self) -> list[int]:
        """Bitmask of each color class, indexed by color id."""
        masks = [0] * (max(self.colors, default=-1) + 1)
        for v, c in enumerate(self.colors):
            masks[c] |= 1 << v
        return [m for m in masks if m]

    def normalized(self) -> "Coloring":
        """Rename colors to 0, 1, ... in order of first appearance."""
        ren: dict[int, int] = {}
        return Coloring(tuple(ren.setdefault(c, len(ren)) for c in self.colors))

    def restrict(self, vertices: Sequence[int]) -> "Coloring":
        return Coloring(tuple(self.colors[v] for v in vertices))

    def to_json(self) -> str:
        return json.dumps(list(self.colors))

    def to_text(self) -> str:
        return "".join(f"{v}:{c}\n" for v, c in enumerate(self.colors))

    @classmethod
    def parse(cls, text: str) -> "Coloring":
        """Read either a JSON array of ints or ``v:color`` lines."""
        s = text.strip()
        if s.startswith("["):
            try:
                data = json.loads(s)
            except json.JSONDecodeError as exc:
                raise GraphFormatError(f"bad coloring JSON: {exc}") from None
            if not all(isinstance(x, int) for x in data):
                raise GraphFormatError("coloring JSON must be an array of integers")
            return cls(tuple(data))
        entries = {}
        for ln in s.splitlines():
            ln = ln.strip()
            if not ln:
                continue
            try:
                v, c = ln.split(":")
                entries[int(v)] = int(c)
            except ValueError:
                raise GraphFormatError(f"bad coloring line {ln!r}") from None
        if sorted(entries) != list(range(len(entries))):
            raise GraphFormatError("coloring must list every vertex 0..n-1 exactly once")
        return cls(tuple(entries[v] for v in range(len(entries))))


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.witness)

    @property
    def vertex_set(self) -> VertexSet:
        return VertexSet.of(self.witness)


@dataclass(frozen=True)
class EliminationForest:
    """``parent[v]`` is the parent of ``v``, or -1 for a root."""

    parent: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parent", tuple(self.parent))

    def is_acyclic(self) -> bool:
        n = len(self.parent)
        if any(not -1 <= p < n for p in self.parent):
            return False
        state = [0] * n
        for v in range(n):
            path = []
            u = v
            while u != -1 and state[u] == 0:
                state[u] = 1
                path.append(u)
                u = self.parent[u]
            if u != -1 and state[u] == 1:
                return False
            for w in path:
                state[w] = 2
        return True

    def ancestor_masks(self) -> list[int]:
        """Mask of proper ancestors of each vertex (forest must be acyclic)."""
        n = len(self.parent)
        anc: list[int | None] = [None] * n

        def get(v: int) -> int:
            start = v
            stack = []
            while anc[v] is None:
                p = self.parent[v]
                if p == -1:
                    anc[v] = 0
                    break
                stack.append(v)
                v = p
            while stack:
                w = stack.pop()
                anc[w] = anc[self.parent[w]] | (1 << self.parent[w])
            return anc[start]

        return [get(v) for v in range(n)]

    @property
    def depth(self) -> int:
        """Number of vertices on the longest root-to-leaf path."""
        if not self.parent:
            return 0
        return max(a.bit_count() for a in self.ancestor_masks()) + 1

    def depth_coloring(self) -> Coloring:
        """Color each vertex by its distance to its root."""
        return Coloring(tuple(a.bit_count() for a in self.ancestor_masks()))

    def to_json(self) -> list[int]:
        return list(self.parent)


# -- proper -------------------------------------------------------------


def _check_sizes(g: Graph, c: Coloring) -> None:
    if len(c) != g.n:
        raise ValueError(f"coloring has {len(c)} entries for a graph of order {g.n}")


def find_improper_edge(g: Graph, c: Coloring) -> Violation | None:
    _check_sizes(g, c)
    for u, v in g.edges():
        if c[u] == c[v]:
            return Violation(IMPROPER_EDGE, (u, v))
    return None


def is_proper(g: Graph, c: Coloring) -> bool:
    return find_improper_edge(g, c) is None


# -- linear -------------------------------------------------------------


def has_center(mask: int, classes: Sequence[int]) -> bool:
    """True iff some color class meets ``mask`` in exactly one vertex."""
    for cm in classes:
        x = mask & cm
        if x and not x & (x - 1):
            return True
    return False


def path_levels(g: Graph, within: int | None = None) -> Iterator[dict[tuple[int, int], tuple[int, ...]]]:
    """Simple paths grouped by order, one per (vertex set, end vertex) state.

    Paths grow from start vertices in ascending order, neighbors ascending;
    the first path reaching a state is kept.
    """
    allowed = g.full if within is None else within
    adj = g.adj
    level = {(1 << v, v): (v,) for v in iter_bits(allowed)}
    while level:
        yield level
        nxt: dict[tuple[int, int], tuple[int, ...]] = {}
        for (mask, end), path in level.items():
            for u in iter_bits(adj[end] & allowed & ~mask):
                key = (mask | 1 << u, u)
                if key not in nxt:
                    nxt[key] = path + (u,)
        level = nxt


def traceable_sets(g: Graph, within: int | None = None) -> list[int]:
    """Every vertex set carrying a Hamiltonian path of its induced subgraph."""
    allowed = g.full if within is None else within
    adj = g.adj
    seen_states: set[tuple[int, int]] = set()
    found: set[int] = set()
    stack = [(1 << v, v) for v in iter_bits(allowed)]
    seen_states.update(stack)
    while stack:
        mask, end = stack.pop()
        found.add(mask)
        for u in iter_bits(adj[end] & allowed & ~mask):
            st = (mask | 1 << u, u)
            if st not in seen_states:
                seen_states.add(st)
                stack.append(st)
    return sorted(found, key=lambda m: (m.bit_count(), m))


def find_centerless_path(g: Graph, c: Coloring) -> Violation | None:
    """A shortest path whose vertex set has no uniquely colored vertex."""
    _check_sizes(g, c)
    classes = c.class_masks()
    checked: set[int] = set()
    for level in path_levels(g):
        for (mask, _), path in level.items():
            if mask in checked:
                continue
            checked.add(mask)
            if not has_center(mask, classes):
                return Violation(CENTERLESS_PATH, path)
    return None


def is_linear(g: Graph, c: Coloring) -> bool:
    return find_centerless_path(g, c) is None


def find_centerless_path_naive(g: Graph, c: Coloring) -> tuple[int, ...] | None:
    """Reference oracle: walk every simple path as a sequence, no dedup."""
    _check_sizes(g, c)

    def bad(path: list[int]) -> bool:
        counts: dict[int, int] = {}
        for v in path:
            counts[c[v]] = counts.get(c[v], 0) + 1
        return 1 not in counts.values()

    def walk(path: list[int]) -> tuple[int, ...] | None:
        if bad(path):
            return tuple(path)
        for u in g.neighbors(path[-1]):
            if u not in path:
                path.append(u)
                r = walk(path)
                path.pop()
                if r is not None:
                    return r
        return None

    for v in range(g.n):
        r = walk([v])
        if r is not None:
            return r
    return None


# -- centered -----------------------------------------------------------


def connected_set_levels(g: Graph) -> Iterator[list[int]]:
    """Connected vertex sets grouped by size, each listed once."""
    adj = g.adj
    level = [1 << v for v in range(g.n)]
    while level:
        yield level
        nxt: dict[int, None] = {}
        for mask in level:
            nb = 0
            for v in iter_bits(mask):
                nb |= adj[v]
            for u in iter_bits(nb & ~mask):
                nxt.setdefault(mask | 1 << u)
        level = list(nxt)


def find_centerless_connected_set(g: Graph, c: Coloring) -> Violation | None:
    """A smallest connected vertex set with no uniquely colored vertex."""
    _check_sizes(g, c)
    classes = c.class_masks()
    for level in connected_set_levels(g):
        for mask in level:
            if not has_center(mask, classes):
                return Violation(CENTERLESS_SET, tuple(iter_bits(mask)))
    return None


def _first_center(mask: int, classes: Sequence[int]) -> int:
    for cm in classes:
        x = mask & cm
        if x and not x & (x - 1):
            return x.bit_length() - 1
    return -1


def is_centered(g: Graph, c: Coloring) -> bool:
    """Polynomial check: a connected set is fine iff it has a center ``u`` and
    every component of the set minus ``u`` is fine (sets through ``u`` keep
    ``u`` as a center)."""
    _check_sizes(g, c)
    classes = c.class_masks()
    stack = component_masks(g)
    while stack:
        mask = stack.pop()
        u = _first_center(mask, classes)
        if u < 0:
            return False
        rest = mask & ~(1 << u)
        if rest:
            stack.extend(component_masks(g, rest))
    return True


# -- elimination forests ------------------------------------------------


def verify_elimination_forest(g: Graph, f: EliminationForest) -> bool:
    if len(f.parent) != g.n or not f.is_acyclic():
        return False
    anc = f.ancestor_masks()
    return all(anc[u] >> v & 1 or anc[v] >> u & 1 for u, v in g.edges())


def certified_centered(g: Graph, f: EliminationForest, c: Coloring) -> bool:
    """Forest is valid and colors are distinct along every root-to-leaf path.

    Sufficient for centeredness: the shallowest vertex of a connected set is
    an ancestor of all its other vertices, so its color is unique there.
    """
    _check_sizes(g, c)
    if not verify_elimination_forest(g, f):
        return False
    for v, a in enumerate(f.ancestor_masks()):
        if any(c[u] == c[v] for u in iter_bits(a)):
            return False
    return True

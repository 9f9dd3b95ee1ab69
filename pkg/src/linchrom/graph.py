"""Small simple graphs stored as bit rows.

A :class:`Graph` keeps one integer per vertex whose bit ``v`` is set iff
the edge ``uv`` exists.  Exact solvers and graph6 input accept at most 64
vertices; larger graphs exist only for constructors and certificate
checks.  Vertex subsets are plain ints internally; :class:`VertexSet`
wraps one for the public API.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Iterable, Iterator, Sequence

# Solvers and graph6 input are capped at one machine word of vertices; the
# graph type itself also holds the larger grids used for certificate checks.
MAX_VERTICES = 64
MAX_ORDER = 4096


class GraphError(ValueError):
    """Invalid graph data or an unsupported graph size."""


class GraphFormatError(GraphError):
    """Malformed graph6 or edge-list text."""


class SizeLimitError(GraphError):
    """Graph larger than an operation supports."""


def check_order(g: "Graph", limit: int = MAX_VERTICES) -> None:
    if g.n > limit:
        raise SizeLimitError(f"graph order {g.n} exceeds the {limit}-vertex limit")


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class VertexSet:
    bits: int

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.bits >> v & 1)

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "VertexSet":
        return cls(mask_of(vertices))

    def to_list(self) -> list[int]:
        return list(iter_bits(self.bits))


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int] | None = None):
        if not 0 <= n <= MAX_ORDER:
            raise SizeLimitError(f"graph order must be in 0..{MAX_ORDER}, got {n}")
        if adj is None:
            adj = (0,) * n
        adj = tuple(adj)
        if len(adj) != n:
            raise GraphError("need exactly one adjacency row per vertex")
        full = (1 << n) - 1
        for u, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"row {u} has bits beyond vertex {n - 1}")
            if row >> u & 1:
                raise GraphError(f"loop at vertex {u}")
            for v in iter_bits(row):
                if not adj[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adj = adj
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_ORDER:
            raise SizeLimitError(f"graph order must be in 0..{MAX_ORDER}, got {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    # -- basic queries -------------------------------------------------

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    # -- derived graphs ------------------------------------------------

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of the vertices")
        rows = [0] * self.n
        for u in range(self.n):
            row = 0
            for v in iter_bits(self.adj[u]):
                row |= 1 << perm[v]
            rows[perm[u]] = row
        return Graph(self.n, rows)

    def complement(self) -> "Graph":
        full = self.full
        return Graph(self.n, [full & ~row & ~(1 << u) for u, row in enumerate(self.adj)])

    def add_vertex(self, neighborhood: int) -> "Graph":
        """Append vertex ``n`` adjacent to the vertices in ``neighborhood``."""
        n = self.n
        rows = [row | ((neighborhood >> u & 1) << n) for u, row in enumerate(self.adj)]
        rows.append(neighborhood)
        return Graph(n + 1, rows)

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise GraphError(f"no edge {u}-{v}")
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, rows)

    def remove_vertex(self, v: int) -> "Graph":
        return induced(self, VertexSet(self.full & ~(1 << v)))

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        rows = list(self.adj) + [row << shift for row in other.adj]
        return Graph(self.n + other.n, rows)


# -- named constructors ------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("a path needs at least one vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least three vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << u) for u in range(n)])


def star(n_leaves: int) -> Graph:
    """K_{1,n_leaves}; the center is vertex 0."""
    return Graph.from_edges(n_leaves + 1, [(0, i) for i in range(1, n_leaves + 1)])


def claw() -> Graph:
    return star(3)


def net() -> Graph:
    """Triangle 0-1-2 with pendant vertex i+3 attached to vertex i."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])


def p3_plus_p1() -> Graph:
    return Graph.from_edges(4, [(0, 1), (1, 2)])


def paw() -> Graph:
    return p3_plus_p1().complement()


def complete_binary_tree(k: int) -> Graph:
    """B_k in heap order: the children of ``i`` are ``2i+1`` and ``2i+2``."""
    if k < 1:
        raise GraphError("a complete binary tree needs at least one level")
    n = (1 << k) - 1
    return Graph.from_edges(n, [((i - 1) // 2, i) for i in range(1, n)])


def grid_graph(k: int) -> Graph:
    """The k x k grid; vertex (i, j) has index i*k + j."""
    if k < 1:
        raise GraphError("grid side must be positive")
    edges = []
    for i in range(k):
        for j in range(k):
            v = i * k + j
            if j + 1 < k:
                edges.append((v, v + 1))
            if i + 1 < k:
                edges.append((v, v + k))
    return Graph.from_edges(k * k, edges)


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """Parts occupy consecutive index ranges in the given order."""
    if any(p < 1 for p in parts):
        raise GraphError("every part needs at least one vertex")
    n = sum(parts)
    full = (1 << n) - 1
    rows = []
    start = 0
    for size in parts:
        part = ((1 << size) - 1) << start
        rows.extend([full & ~part] * size)
        start += size
    return Graph(n, rows)


def corook_graph(n: int, m: int) -> Graph:
    """Complement of the n x m rook's graph; (row i, column j) has index i*m + j."""
    if n < 1 or m < 1:
        raise GraphError("co-rook graph needs positive dimensions")
    edges = []
    for a in range(n * m):
        for b in range(a + 1, n * m):
            if a // m != b // m and a % m != b % m:
                edges.append((a, b))
    return Graph.from_edges(n * m, edges)


def caterpillar(leg_counts: Sequence[int]) -> Graph:
    """Spine ``0..s-1`` first, then the leaves of spine vertex 0, 1, ... in order."""
    if len(leg_counts) < 1:
        raise GraphError("a caterpillar needs a nonempty spine")
    if any(c < 0 for c in leg_counts):
        raise GraphError("leg counts must be nonnegative")
    s = len(leg_counts)
    edges = [(i, i + 1) for i in range(s - 1)]
    nxt = s
    for i, c in enumerate(leg_counts):
        for _ in range(c):
            edges.append((i, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


# -- serialization -----------------------------------------------------


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(63 + n)]
    else:
        out = ["~", chr(63 + (n >> 12 & 63)), chr(63 + (n >> 6 & 63)), chr(63 + (n & 63))]
    bits = [g.adj[i] >> j & 1 for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(63 + val))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    if any(not 0 <= x <= 63 for x in data):
        raise GraphFormatError(f"invalid graph6 character in {s!r}")
    if data[0] == 63:
        if len(data) >= 2 and data[1] == 63:
            raise GraphFormatError("graph6 orders above 258047 are not supported")
        if len(data) < 4:
            raise GraphFormatError("truncated graph6 size header")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n > MAX_VERTICES:
        raise SizeLimitError(f"graph6 order {n} exceeds the {MAX_VERTICES}-vertex cap")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphFormatError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    bits = []
    for x in body:
        bits.extend((x >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise GraphFormatError("graph6 padding bits must be zero")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, rows)


def to_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphFormatError("edge list is empty")
    try:
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            u, v = ln.split()
            edges.append((int(u), int(v)))
    except ValueError as exc:
        raise GraphFormatError(f"malformed edge list: {exc}") from None
    return Graph.from_edges(n, edges)


# -- connectivity ------------------------------------------------------


def component_of(g: Graph, v: int, within: int) -> int:
    """Bitmask of the component of ``v`` in the subgraph induced by ``within``."""
    adj = g.adj
    seen = 1 << v
    frontier = seen
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= adj[u]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    rest = g.full if within is None else within
    comps = []
    while rest:
        low = rest & -rest
        comp = component_of(g, low.bit_length() - 1, rest)
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected_mask(g: Graph, mask: int) -> bool:
    if not mask:
        return True
    low = mask & -mask
    return component_of(g, low.bit_length() - 1, mask) == mask


def is_connected(g: Graph) -> bool:
    return is_connected_mask(g, g.full)


def connected_components(g: Graph) -> list[VertexSet]:
    return [VertexSet(m) for m in component_masks(g)]


def induced(g: Graph, vs: VertexSet | int) -> Graph:
    """Induced subgraph, relabeled by ascending original index."""
    mask = vs.bits if isinstance(vs, VertexSet) else vs
    if mask & ~g.full:
        raise GraphError("vertex set is not a subset of the graph")
    verts = list(iter_bits(mask))
    pos = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        row = 0
        for u in iter_bits(g.adj[v] & mask):
            row |= 1 << pos[u]
        rows.append(row)
    return Graph(len(verts), rows)


# -- trees -------------------------------------------------------------


def is_forest(g: Graph) -> bool:
    return g.num_edges == g.n - len(component_masks(g))


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.num_edges == g.n - 1 and is_connected(g)


def is_star_forest(g: Graph) -> bool:
    """Every component is a star (K1, K2 and K_{1,t} included)."""
    if not is_forest(g):
        return False
    for u, v in g.edges():
        if g.degree(u) > 1 and g.degree(v) > 1:
            return False
    return True


def caterpillar_spine(g: Graph) -> list[int] | None:
    """Spine of a caterpillar in path order, or None if ``g`` is not one.

    The spine is what remains after deleting all leaves; when that is empty
    (K1, K2) it is the lowest-index vertex.
    """
    if not is_tree(g):
        return None
    inner = [v for v in range(g.n) if g.degree(v) > 1]
    if not inner:
        return [0]
    mask = mask_of(inner)
    ends = [v for v in inner if (g.adj[v] & mask).bit_count() <= 1]
    if any((g.adj[v] & mask).bit_count() > 2 for v in inner):
        return None
    start = min(ends)
    order = [start]
    prev = -1
    cur = start
    while True:
        nxt = [u for u in iter_bits(g.adj[cur] & mask) if u != prev]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
        order.append(cur)
    return order if len(order) == len(inner) else None


def is_caterpillar(g: Graph) -> bool:
    return caterpillar_spine(g) is not None


# -- subgraph containment ----------------------------------------------


def _pattern_order(p: Graph) -> list[int]:
    """Most-constrained-first order: each vertex has many earlier neighbors."""
    remaining = set(range(p.n))
    order: list[int] = []
    placed = 0
    while remaining:
        best = max(remaining, key=lambda v: ((p.adj[v] & placed).bit_count(), p.degree(v), -v))
        order.append(best)
        placed |= 1 << best
        remaining.discard(best)
    return order


def find_subgraph(host: Graph, pattern: Graph) -> tuple[int, ...] | None:
    """An injective map pattern -> host sending edges to edges, or None.

    The relation is plain (not induced) subgraph containment.  Returns the
    embedding as a tuple indexed by pattern vertex.
    """
    if pattern.n > host.n or pattern.num_edges > host.num_edges:
        return None
    if pattern.n == 0:
        return ()
    hdeg = sorted(host.degrees(), reverse=True)
    pdeg = sorted(pattern.degrees(), reverse=True)
    if any(a > b for a, b in zip(pdeg, hdeg)):
        return None
    max_deg = max(pdeg)
    at_least = [0] * (max_deg + 1)
    for v in range(host.n):
        d = host.degree(v)
        for t in range(min(d, max_deg) + 1):
            at_least[t] |= 1 << v
    order = _pattern_order(pattern)
    index = {v: i for i, v in enumerate(order)}
    back = [[u for u in iter_bits(pattern.adj[v]) if index[u] < index[v]] for v in order]
    need = [at_least[pattern.degree(v)] for v in order]
    image = [0] * pattern.n
    hadj = host.adj
    k = pattern.n

    def extend(i: int, used: int) -> bool:
        if i == k:
            return True
        cand = need[i] & ~used
        for u in back[i]:
            cand &= hadj[image[u]]
            if not cand:
                return False
        v = order[i]
        while cand:
            low = cand & -cand
            cand ^= low
            image[v] = low.bit_length() - 1
            if extend(i + 1, used | low):
                return True
        return False

    if extend(0, 0):
        return tuple(image)
    return None


def contains_subgraph(host: Graph, pattern: Graph) -> bool:
    return find_subgraph(host, pattern) is not None


def contains_subgraph_bruteforce(host: Graph, pattern: Graph) -> bool:
    """Reference implementation: try every injective map."""
    pe = pattern.edges()
    for image in permutations(range(host.n), pattern.n):
        if all(host.has_edge(image[u], image[v]) for u, v in pe):
            return True
    return False


def contains_induced(host: Graph, pattern: Graph) -> bool:
    """Induced containment by scanning every vertex subset of pattern size."""
    from itertools import combinations

    code = canonical_form(pattern)
    m = pattern.num_edges
    for combo in combinations(range(host.n), pattern.n):
        mask = mask_of(combo)
        if sum((host.adj[v] & mask).bit_count() for v in combo) != 2 * m:
            continue
        if canonical_form(induced(host, mask)) == code:
            return True
    return False


# -- canonical labeling ------------------------------------------------


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition (label-invariant order)."""
    while True:
        masks = [mask_of(c) for c in cells]
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                sig = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                changed = True
                out.extend(groups[s] for s in sorted(groups))
        cells = out
        if not changed:
            return cells


def _code(adj: Sequence[int], order: Sequence[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def _orbit_roots(n: int, gens: list[tuple[int, ...]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def canonical_labeling(g: Graph) -> tuple[list[int], list[tuple[int, ...]]]:
    """Return ``(order, automorphisms)``.

    ``order[i]`` is the vertex placed at canonical position ``i``.  The
    automorphisms are genuine automorphisms of ``g`` discovered during the
    search (they generate a subgroup of Aut(g), not necessarily all of it).
    Individualization-refinement with orbit and twin pruning.
    """
    n = g.n
    adj = g.adj
    if n == 0:
        return [], []
    degs = {}
    for v in range(n):
        degs.setdefault(adj[v].bit_count(), []).append(v)
    start = [degs[d] for d in sorted(degs)]
    best_code = -1
    best_order: list[int] = []
    autos: list[tuple[int, ...]] = []

    def search(cells: list[list[int]], fixed: list[int]) -> None:
        nonlocal best_code, best_order
        cells = _refine(adj, cells)
        if len(cells) == n:
            order = [c[0] for c in cells]
            code = _code(adj, order)
            if code > best_code:
                best_code, best_order = code, order
            elif code == best_code:
                perm = [0] * n
                for a, b in zip(best_order, order):
                    perm[a] = b
                autos.append(tuple(perm))
            return
        idx = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: (len(cells[i]), i))
        cell = cells[idx]
        tried: list[int] = []
        for v in cell:
            if tried:
                nv = adj[v]
                if any((adj[u] & ~(1 << v)) == (nv & ~(1 << u)) for u in tried):
                    continue
                stab = [a for a in autos if all(a[x] == x for x in fixed)]
                if stab:
                    roots = _orbit_roots(n, stab)
                    if any(roots[u] == roots[v] for u in tried):
                        continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1:], fixed + [v])

    search(start, [])
    return best_order, autos


def canonical_code(g: Graph) -> int:
    order, _ = canonical_labeling(g)
    return _code(g.adj, order)


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-complete byte code: order (one byte) + canonical adjacency bits."""
    order, _ = canonical_labeling(g)
    nbits = g.n * (g.n - 1) // 2
    return bytes([g.n]) + _code(g.adj, order).to_bytes((nbits + 7) // 8, "big")


def canonical_graph(g: Graph) -> Graph:
    order, _ = canonical_labeling(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)


def is_isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and a.num_edges == b.num_edges and canonical_form(a) == canonical_form(b)


# -- enumeration -------------------------------------------------------


def _apply(perm: Sequence[int], mask: int) -> int:
    out = 0
    for v in iter_bits(mask):
        out |= 1 << perm[v]
    return out


def extensions(g: Graph, connected_only: bool) -> Iterator[Graph]:
    """One-vertex extensions of ``g``, one per orbit of neighborhoods under
    the automorphisms found while canonizing ``g``."""
    n = g.n
    _, autos = canonical_labeling(g)
    gens = list({a for a in autos})
    seen = bytearray(1 << n)
    for s in range(1 << n):
        if seen[s]:
            continue
        seen[s] = 1
        stack = [s]
        while stack:
            t = stack.pop()
            for a in gens:
                u = _apply(a, t)
                if not seen[u]:
                    seen[u] = 1
                    stack.append(u)
        if connected_only and n > 0 and s == 0:
            continue
        yield g.add_vertex(s)


def next_level(graphs: Iterable[Graph], connected_only: bool) -> list[Graph]:
    """All isomorphism classes of one-vertex extensions, as canonical graphs."""
    found: dict[bytes, Graph] = {}
    for g in graphs:
        for child in extensions(g, connected_only):
            order, _ = canonical_labeling(child)
            nbits = child.n * (child.n - 1) // 2
            code = bytes([child.n]) + _code(child.adj, order).to_bytes((nbits + 7) // 8, "big")
            if code not in found:
                perm = [0] * child.n
                for i, v in enumerate(order):
                    perm[v] = i
                found[code] = child.relabel(perm)
    return [found[c] for c in sorted(found)]


_LEVEL_CACHE: dict[tuple[int, bool], list[Graph]] = {}


def graphs_of_order(n: int, connected_only: bool = False) -> list[Graph]:
    """Canonical representatives of all (connected) graphs of order exactly n."""
    if n < 1:
        raise GraphError("order must be positive")
    key = (n, connected_only)
    if key not in _LEVEL_CACHE:
        if n == 1:
            _LEVEL_CACHE[key] = [Graph(1)]
        else:
            _LEVEL_CACHE[key] = next_level(graphs_of_order(n - 1, connected_only), connected_only)
    return _LEVEL_CACHE[key]


def enumerate_graphs(n_max: int, connected_only: bool = False) -> Iterator[Graph]:
    """One representative per isomorphism class, orders 1..n_max ascending.

    Connected graphs of order n are exactly the connected extensions of
    connected graphs of order n-1 (delete a non-cut vertex).
    """
    for n in range(1, n_max + 1):
        yield from graphs_of_order(n, connected_only)


def enumerate_trees(n_max: int) -> Iterator[Graph]:
    level = [Graph(1)]
    for n in range(1, n_max + 1):
        if n > 1:
            found: dict[bytes, Graph] = {}
            for t in level:
                for v in range(t.n):
                    child = t.add_vertex(1 << v)
                    code = canonical_form(child)
                    if code not in found:
                        found[code] = canonical_graph(child)
            level = [found[c] for c in sorted(found)]
        yield from level


def enumerate_caterpillars(n_max: int) -> Iterator[Graph]:
    return (t for t in enumerate_trees(n_max) if is_caterpillar(t))


def filter_graphs(graphs: Iterable[Graph], pred: Callable[[Graph], bool]) -> Iterator[Graph]:
    return (g for g in graphs if pred(g))

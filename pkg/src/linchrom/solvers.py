"""Exact centered chromatic number (treedepth) and linear chromatic number."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .graph import Graph, check_order, component_masks, induced, iter_bits
from .verify import (
    Coloring,
    EliminationForest,
    certified_centered,
    is_linear,
    traceable_sets,
)

# Above this order the treedepth memo stops growing (bounded memory).
MEMO_ORDER_LIMIT = 30
MEMO_MAX_ENTRIES = 1 << 22


@dataclass
class ChromaticResult:
    value: int
    witness: Coloring
    certificate: EliminationForest | None = None
    lower_bound_trace: str = ""
    stats: dict = field(default_factory=dict)


# -- lower bounds -------------------------------------------------------


def clique_number(g: Graph) -> int:
    """Maximum clique by branch and bound on bitsets."""
    adj = g.adj
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            if size > best:
                best = size
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            expand(size + 1, cand & adj[v])

    expand(0, g.full)
    return best


def longest_path_order(g: Graph) -> int:
    """Number of vertices of a longest simple path (exhaustive search)."""
    if g.n == 0:
        return 0
    adj = g.adj
    best = 1
    seen: set[tuple[int, int]] = set()
    stack = [(1 << v, v) for v in range(g.n)]
    seen.update(stack)
    while stack:
        mask, end = stack.pop()
        size = mask.bit_count()
        if size > best:
            best = size
            if best == g.n:
                return best
        for u in iter_bits(adj[end] & ~mask):
            st = (mask | 1 << u, u)
            if st not in seen:
                seen.add(st)
                stack.append(st)
    return best


def path_bound(order: int) -> int:
    """ceil(log2(order + 1)): colors needed on a path with ``order`` vertices."""
    return order.bit_length()


def lower_bound(g: Graph) -> int:
    return _lower_bound(g)[0]


def _lower_bound(g: Graph) -> tuple[int, str]:
    if g.n == 0:
        return 0, "empty"
    w = clique_number(g)
    p = path_bound(longest_path_order(g))
    trace = f"clique={w} path={p}"
    return max(w, p), trace


# -- treedepth ----------------------------------------------------------


class _Treedepth:
    def __init__(self, g: Graph):
        self.g = g
        self.memo: dict[int, tuple[int, int]] = {}
        self.memo_cap = MEMO_MAX_ENTRIES if g.n > MEMO_ORDER_LIMIT else None

    def conn(self, mask: int) -> int:
        """Treedepth of the connected induced subgraph on ``mask``."""
        return self.best(mask)[0]

    def best(self, mask: int) -> tuple[int, int]:
        """(treedepth, lowest-index optimal root) of a connected set."""
        if not mask & (mask - 1):
            return 1, mask.bit_length() - 1
        hit = self.memo.get(mask)
        if hit is not None:
            return hit
        g = self.g
        best = mask.bit_count() + 1
        root = -1
        for v in iter_bits(mask):
            worst = 0
            for comp in component_masks(g, mask & ~(1 << v)):
                d = self.conn(comp)
                if d > worst:
                    worst = d
                    if worst + 1 >= best:
                        break
            if worst + 1 < best:
                best, root = worst + 1, v
                if best == 2:
                    break
        if self.memo_cap is None or len(self.memo) < self.memo_cap:
            self.memo[mask] = (best, root)
        return best, root

    def forest(self) -> EliminationForest:
        parent = [-1] * self.g.n
        stack = [(comp, -1) for comp in component_masks(self.g)]
        while stack:
            mask, par = stack.pop()
            r = self.best(mask)[1]
            parent[r] = par
            for comp in component_masks(self.g, mask & ~(1 << r)):
                stack.append((comp, r))
        return EliminationForest(tuple(parent))


def treedepth(g: Graph) -> tuple[int, EliminationForest]:
    check_order(g)
    solver = _Treedepth(g)
    value = max((solver.conn(c) for c in component_masks(g)), default=0)
    return value, solver.forest()


def centered_chromatic(g: Graph) -> ChromaticResult:
    """Exact treedepth with its elimination forest and depth coloring."""
    value, forest = treedepth(g)
    witness = forest.depth_coloring()
    assert forest.depth == value and certified_centered(g, forest, witness)
    return ChromaticResult(value, witness, forest, "exact")


# -- linear chromatic number --------------------------------------------


def search_order(g: Graph) -> list[int]:
    """Descending degree, ties by index."""
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


class _LinearSearch:
    """Restricted-growth search over colorings of one connected graph.

    Vertices are relabeled so that position ``i`` in the search order is
    vertex ``i``.  A traceable set is checked once its highest vertex gets a
    color; sets with an uncolored vertex are never used for pruning.
    """

    def __init__(self, g: Graph):
        order = search_order(g)
        perm = [0] * g.n
        for i, v in enumerate(order):
            perm[v] = i
        self.order = order
        self.g = g.relabel(perm)
        n = g.n
        buckets: list[list[int]] = [[] for _ in range(n)]
        for mask in traceable_sets(self.g):
            if mask.bit_count() >= 3:
                buckets[mask.bit_length() - 1].append(mask)
        self.buckets = buckets
        self.nodes = 0

    def run(self, k: int) -> Coloring | None:
        g = self.g
        n = g.n
        adj = g.adj
        buckets = self.buckets
        classes = [0] * k
        colors = [0] * n

        def dfs(i: int, used: int) -> bool:
            if i == n:
                return True
            self.nodes += 1
            bit = 1 << i
            back = adj[i] & (bit - 1)
            bucket = buckets[i]
            top = used + 1 if used < k else k
            for col in range(top):
                if classes[col] & back:
                    continue
                classes[col] |= bit
                ok = True
                for mask in bucket:
                    for cm in classes:
                        x = mask & cm
                        if x and not x & (x - 1):
                            break
                    else:
                        ok = False
                        break
                if ok:
                    colors[i] = col
                    if dfs(i + 1, used + 1 if col == used else used):
                        return True
                classes[col] &= ~bit
            return False

        if not dfs(0, 0):
            return None
        out = [0] * n
        for i, v in enumerate(self.order):
            out[v] = colors[i]
        return Coloring(tuple(out))


def _combine(g: Graph, comps: list[int], parts: list[Coloring]) -> Coloring:
    colors = [0] * g.n
    for mask, col in zip(comps, parts):
        for v, c in zip(iter_bits(mask), col.normalized().colors):
            colors[v] = c
    return Coloring(tuple(colors))


def decide_linear_at_most(g: Graph, k: int) -> Coloring | None:
    """A linear coloring with at most ``k`` colors, or None if none exists."""
    check_order(g)
    if g.n == 0:
        return Coloring(())
    if k < 1:
        return None
    comps = component_masks(g)
    parts = []
    for mask in comps:
        h = induced(g, mask)
        if h.n <= k:
            parts.append(Coloring(tuple(range(h.n))))
            continue
        if lower_bound(h) > k:
            return None
        col = _LinearSearch(h).run(k)
        if col is None:
            return None
        parts.append(col)
    out = _combine(g, comps, parts)
    assert is_linear(g, out) and out.palette_size <= k
    return out


def _linear_connected(h: Graph) -> ChromaticResult:
    lb, trace = _lower_bound(h)
    cen = centered_chromatic(h)
    if lb >= cen.value:
        return ChromaticResult(cen.value, cen.witness, None, trace + " (tight)")
    search = _LinearSearch(h)
    for k in range(lb, cen.value):
        col = search.run(k)
        if col is not None:
            return ChromaticResult(k, col.normalized(), None, trace, {"nodes": search.nodes})
    return ChromaticResult(cen.value, cen.witness, None, trace + " (treedepth)", {"nodes": search.nodes})


def linear_chromatic(g: Graph) -> ChromaticResult:
    """Exact linear chromatic number with a witness coloring.

    Each component is solved separately: every path lives in one component
    and colors can be reused across components.  Treedepth is an upper bound
    (centered colorings are linear), so only values below it are searched.
    """
    check_order(g)
    if g.n == 0:
        return ChromaticResult(0, Coloring(()), None, "empty")
    comps = component_masks(g)
    results = [_linear_connected(induced(g, m)) for m in comps]
    value = max(r.value for r in results)
    witness = _combine(g, comps, [r.witness for r in results])
    traces = "; ".join(r.lower_bound_trace for r in results)
    assert witness.palette_size == value and is_linear(g, witness)
    nodes = sum(r.stats.get("nodes", 0) for r in results)
    return ChromaticResult(value, witness, None, traces, {"nodes": nodes, "components": len(comps)})


def chromatic_pair(g: Graph) -> tuple[int, int]:
    """(linear, centered) chromatic numbers."""
    return linear_chromatic(g).value, centered_chromatic(g).value


def result_json(g: Graph, lin: ChromaticResult | None, cen: ChromaticResult | None, millis: float) -> dict:
    return {
        "order": g.n,
        "edges": [list(e) for e in g.edges()],
        "chi_lin": lin.value if lin else None,
        "chi_cen": cen.value if cen else None,
        "witness_lin": list(lin.witness.colors) if lin else None,
        "witness_cen": list(cen.witness.colors) if cen else None,
        "forest": cen.certificate.to_json() if cen and cen.certificate else None,
        "millis": round(millis, 3),
    }


def compute(g: Graph, lin: bool = True, cen: bool = True) -> dict:
    t0 = time.perf_counter()
    rl = linear_chromatic(g) if lin else None
    rc = centered_chromatic(g) if cen else None
    return result_json(g, rl, rc, (time.perf_counter() - t0) * 1000)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)

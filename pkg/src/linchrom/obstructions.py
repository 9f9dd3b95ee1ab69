"""Subgraph-minimal obstructions to linear chromatic number at most k."""

from __future__ import annotations

import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable

from .graph import (
    Graph,
    GraphError,
    canonical_form,
    canonical_graph,
    complete_graph,
    component_masks,
    cycle_graph,
    find_subgraph,
    from_graph6,
    induced,
    is_connected,
    next_level,
    path_graph,
    to_graph6,
)
from .solvers import decide_linear_at_most, linear_chromatic

log = logging.getLogger(__name__)


@dataclass
class ObstructionSet:
    k: int
    members: dict[bytes, Graph] = field(default_factory=dict)
    n_max_searched: int = 0
    complete: bool = True
    level_stats: list[dict] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, g: Graph) -> bool:
        return canonical_form(g) in self.members

    def graphs(self) -> list[Graph]:
        """Members ordered by (order, size, canonical code)."""
        return [self.members[c] for c in sorted(self.members, key=lambda c: (self.members[c].n, self.members[c].num_edges, c))]

    def codes(self) -> set[bytes]:
        return set(self.members)

    def add(self, g: Graph) -> bytes:
        code = canonical_form(g)
        self.members.setdefault(code, canonical_graph(g))
        return code

    def contained_in(self, host: Graph) -> Graph | None:
        """First member (smallest first) that is a subgraph of ``host``."""
        for m in self.graphs():
            if m.n <= host.n and find_subgraph(host, m) is not None:
                return m
        return None

    # -- persistence ------------------------------------------------------

    def sidecar(self) -> dict:
        return {
            "k": self.k,
            "n_max_searched": self.n_max_searched,
            "complete": self.complete,
            "count": len(self.members),
            "members": [{"g6": to_graph6(m), "order": m.n, "size": m.num_edges} for m in self.graphs()],
        }

    def save(self, path: str | Path) -> None:
        path = Path(path)
        path.write_text("".join(to_graph6(m) + "\n" for m in self.graphs()))
        sidecar_path(path).write_text(json.dumps(self.sidecar(), indent=2) + "\n")

    @classmethod
    def load(cls, path: str | Path, k: int | None = None) -> "ObstructionSet":
        path = Path(path)
        meta = {}
        if sidecar_path(path).exists():
            meta = json.loads(sidecar_path(path).read_text())
        kk = meta.get("k", k)
        if kk is None:
            raise GraphError("obstruction database has no sidecar; pass k explicitly")
        if k is not None and kk != k:
            raise GraphError(f"database is for k={kk}, not k={k}")
        obs = cls(kk, n_max_searched=meta.get("n_max_searched", 0), complete=meta.get("complete", False))
        for ln in path.read_text().splitlines():
            if ln.strip():
                obs.add(from_graph6(ln))
        return obs


def sidecar_path(path: Path) -> Path:
    return path.with_name(path.name + ".json")


def is_obstruction(g: Graph, k: int) -> bool:
    """χlin(g) > k while every one-edge deletion has χlin <= k.

    One-edge deletions suffice for connected ``g``: every proper subgraph
    lies inside some ``g - e`` or only drops isolated vertices.
    """
    if not is_connected(g):
        raise GraphError("obstruction test expects a connected graph")
    if decide_linear_at_most(g, k) is not None:
        return False
    return all(decide_linear_at_most(g.remove_edge(u, v), k) is not None for u, v in g.edges())


def minimize(g: Graph, k: int) -> Graph:
    """Delete edges while χlin stays above k, then keep one bad component."""
    assert decide_linear_at_most(g, k) is None
    changed = True
    while changed:
        changed = False
        for u, v in g.edges():
            h = g.remove_edge(u, v)
            if decide_linear_at_most(h, k) is None:
                g = h
                changed = True
                break
    for comp in component_masks(g):
        h = induced(g, comp)
        if decide_linear_at_most(h, k) is None:
            return h
    raise AssertionError("no component keeps the chromatic number above k")


def _decide_flag(args: tuple[Graph, int]) -> bool:
    g, k = args
    return decide_linear_at_most(g, k) is not None


def _decide_many(graphs: list[Graph], k: int, workers: int) -> list[bool]:
    if workers > 1 and len(graphs) > 64:
        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(_decide_flag, [(g, k) for g in graphs], chunksize=32))
    return [_decide_flag((g, k)) for g in graphs]


def enumerate_obstructions(
    k: int,
    n_max: int,
    seeds: ObstructionSet | None = None,
    budget_seconds: float | None = None,
    workers: int = 1,
    checkpoint: Callable[[ObstructionSet], None] | None = None,
) -> ObstructionSet:
    """All connected subgraph-minimal graphs with χlin > k up to order n_max.

    Level n holds the connected graphs of order n containing no member found
    so far.  Every connected graph has a non-cut vertex, so level n is
    generated from the level n-1 graphs that passed (χlin <= k).  Failing
    graphs are edge-minimized and inserted one at a time, re-screening
    against members inserted earlier in the same level.

    When the time budget runs out the result carries ``complete=False`` and
    ``n_max_searched`` is the last fully processed order.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    start = time.perf_counter()
    obs = ObstructionSet(k)
    if seeds is not None:
        for m in seeds.graphs():
            if not is_obstruction(m, k):
                raise GraphError(f"seed {to_graph6(m)} is not an obstruction for k={k}")
            obs.add(m)
    level = [Graph(1)]
    obs.n_max_searched = 1
    for n in range(2, n_max + 1):
        t0 = time.perf_counter()
        candidates = next_level(level, connected_only=True)
        candidates.sort(key=lambda g: g.num_edges)
        screened = [g for g in candidates if obs.contained_in(g) is None]
        flags = _decide_many(screened, k, workers)
        level = [g for g, ok in zip(screened, flags) if ok]
        found = 0
        for g, ok in zip(screened, flags):
            if ok or obs.contained_in(g) is not None:
                continue
            m = minimize(g, k)
            assert m.n == n and is_connected(m)
            obs.add(m)
            found += 1
        stats = {
            "order": n,
            "candidates": len(candidates),
            "screened": len(screened),
            "passed": len(level),
            "new_members": found,
            "seconds": round(time.perf_counter() - t0, 3),
        }
        obs.level_stats.append(stats)
        log.info("k=%d order %d: %s", k, n, stats)
        obs.n_max_searched = n
        if checkpoint is not None:
            checkpoint(obs)
        if not level:
            # nothing left to extend: every larger connected graph contains a member
            obs.n_max_searched = n_max
            break
        if budget_seconds is not None and time.perf_counter() - start > budget_seconds and n < n_max:
            obs.complete = False
            break
    return obs


def mine_stream(k: int, graphs: Iterable[Graph], obs: ObstructionSet | None = None) -> ObstructionSet:
    """Obstruction mining over an arbitrary graph stream (e.g. graph6 shards).

    Graphs are processed by ascending (order, size).  Minimization also drops
    vertices, so members are subgraph-minimal even if the stream is sparse.
    """
    obs = obs or ObstructionSet(k)
    for g in sorted(graphs, key=lambda g: (g.n, g.num_edges)):
        if not is_connected(g) or obs.contained_in(g) is not None:
            continue
        if decide_linear_at_most(g, k) is None:
            obs.add(minimize(g, k))
        obs.n_max_searched = max(obs.n_max_searched, g.n)
    return obs


def check_characterization(k: int, obs: ObstructionSet, stream: Iterable[Graph]) -> dict:
    """Compare χlin <= k against "contains no member" on every graph of the stream."""
    checked = 0
    discrepancies = []
    for g in stream:
        if g.n > obs.n_max_searched:
            continue
        checked += 1
        colorable = decide_linear_at_most(g, k) is not None
        free = obs.contained_in(g) is None
        if colorable != free:
            discrepancies.append({"g6": to_graph6(g), "colorable": colorable, "obstruction_free": free})
    return {"k": k, "members": len(obs), "checked": checked, "discrepancies": discrepancies}


# -- appendix shapes --------------------------------------------------------


def _lettered(letters: str, edges: str) -> tuple[Graph, dict[str, int]]:
    idx = {ch: i for i, ch in enumerate(letters)}
    pairs = [(idx[e[0]], idx[e[1]]) for e in edges.split()]
    return Graph.from_edges(len(letters), pairs), idx


# Fully determined small obstructions: (letters, edges, paths that must exist).
APPENDIX_SHAPES = {
    # triangle cde, pendant path c-b-a, leaves f on d and g on e
    "F2": ("abcdefg", "cd de ce ab bc df eg", ["fdeg", "fdcb", "abce", "fdecba"]),
    # spider with legs of 1, 2 and 4 edges at e
    "F5": ("abcdefgh", "ab bc cd de ef fg eh", ["abcdefg", "hefg", "hedc", "abc", "efg", "abcdeh"]),
    # triangle efg, e-c, c-a, c-d, a-b
    "F7": ("abcdefg", "ef fg eg ec ca cd ab", ["feca", "fecd", "bacd", "bacefg"]),
}


def appendix_shape(name: str) -> tuple[Graph, dict[str, int]]:
    letters, edges, _ = APPENDIX_SHAPES[name]
    return _lettered(letters, edges)


def is_path_in(g: Graph, idx: dict[str, int], word: str) -> bool:
    verts = [idx[ch] for ch in word]
    return len(set(verts)) == len(verts) and all(g.has_edge(a, b) for a, b in zip(verts, verts[1:]))


def cross_check_appendix(obs: ObstructionSet) -> dict:
    """χlin and membership of the explicitly described obstruction shapes."""
    report = {}
    named = {name: appendix_shape(name) for name in APPENDIX_SHAPES}
    plain = {"K4": complete_graph(4), "C5": cycle_graph(5), "C6": cycle_graph(6), "C7": cycle_graph(7), "P8": path_graph(8)}
    for name, (g, idx) in named.items():
        words = APPENDIX_SHAPES[name][2]
        report[name] = {
            "g6": to_graph6(g),
            "chi_lin": linear_chromatic(g).value,
            "paths_valid": all(is_path_in(g, idx, w) for w in words),
            "member": g in obs,
            "searched": g.n <= obs.n_max_searched,
        }
    for name, g in plain.items():
        report[name] = {
            "g6": to_graph6(g),
            "chi_lin": linear_chromatic(g).value,
            "paths_valid": True,
            "member": g in obs,
            "searched": g.n <= obs.n_max_searched,
        }
    known = {canonical_form(g): name for name, g in plain.items()}
    known.update({canonical_form(g): name for name, (g, _) in named.items()})
    report["unmatched_members"] = [to_graph6(m) for m in obs.graphs() if canonical_form(m) not in known]
    return report

"""Claim checking over graph streams: ratio bounds between the two chromatic
numbers, classes on which linear colorings are automatically centered, and
the minor non-monotonicity example."""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

from .graph import (
    Graph,
    GraphError,
    SizeLimitError,
    claw,
    contains_induced,
    enumerate_caterpillars,
    enumerate_graphs,
    enumerate_trees,
    is_connected,
    iter_bits,
    mask_of,
    net,
    to_graph6,
)
from .solvers import centered_chromatic, decide_linear_at_most, linear_chromatic
from .verify import Coloring, connected_set_levels, is_centered, is_linear, traceable_sets

# Claim ids shared with the acceptance suite.
CONJECTURE = "C10-conjecture"
TREES = "C11-trees"
CATERPILLARS = "C11-caterpillars"
CLASSES = "C12-classes"
MINOR_EXAMPLE = "C13-minor-example"

TREE_BOUND = Fraction(37, 10)
PARTITION_LIMIT = 8


@dataclass
class ScanReport:
    claim: str
    graphs_scanned: int = 0
    max_ratio: Fraction | None = None
    max_ratio_witness: str | None = None
    violations: list[tuple[str, str]] = field(default_factory=list)
    equality_witnesses: list[str] = field(default_factory=list)
    seconds: float = 0.0
    slowest_ms: float = 0.0
    seeds: dict = field(default_factory=dict)
    extra: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def note_ratio(self, ratio: Fraction, g6: str) -> None:
        if self.max_ratio is None or ratio > self.max_ratio:
            self.max_ratio = ratio
            self.max_ratio_witness = g6

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "ok": self.ok,
            "graphs_scanned": self.graphs_scanned,
            "max_ratio": str(self.max_ratio) if self.max_ratio is not None else None,
            "max_ratio_witness": self.max_ratio_witness,
            "violations": [{"claim": c, "g6": g} for c, g in self.violations],
            "equality_witnesses": self.equality_witnesses,
            "timing": {"seconds": round(self.seconds, 3), "slowest_ms": round(self.slowest_ms, 3)},
            "seeds": self.seeds,
            **self.extra,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


# -- streams ------------------------------------------------------------


def random_graphs(count: int, n_max: int, seed: int, p: float = 0.5, n_min: int = 1) -> Iterator[Graph]:
    """Seeded G(n, p) graphs with n uniform in [n_min, n_max]."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must be in [0, 1]")
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        yield Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def _pair(g: Graph) -> tuple[int, int, float]:
    t0 = time.perf_counter()
    lin = linear_chromatic(g).value
    cen = centered_chromatic(g).value
    return lin, cen, (time.perf_counter() - t0) * 1000


def _pairs(graphs: list[Graph], workers: int) -> Iterable[tuple[int, int, float]]:
    if workers > 1 and len(graphs) > 32:
        with ProcessPoolExecutor(workers) as pool:
            yield from pool.map(_pair, graphs, chunksize=16)
    else:
        yield from map(_pair, graphs)


def _ratio_scan(
    claim: str,
    stream: Iterable[Graph],
    ok: Callable[[int, int], bool],
    equality: Callable[[int, int], bool] | None = None,
    workers: int = 1,
) -> ScanReport:
    report = ScanReport(claim)
    t0 = time.perf_counter()
    graphs = [g for g in stream if g.num_edges or g.n]
    for g, (lin, cen, ms) in zip(graphs, _pairs(graphs, workers)):
        report.graphs_scanned += 1
        report.slowest_ms = max(report.slowest_ms, ms)
        g6 = to_graph6(g)
        report.note_ratio(Fraction(cen, lin), g6)
        if not ok(lin, cen):
            report.violations.append((claim, g6))
        if equality is not None and equality(lin, cen):
            report.equality_witnesses.append(g6)
    report.seconds = time.perf_counter() - t0
    return report


def conjecture_scan(stream: Iterable[Graph], workers: int = 1) -> ScanReport:
    """χcen <= 2 χlin on every graph of the stream."""
    return _ratio_scan(CONJECTURE, stream, lambda lin, cen: cen <= 2 * lin, workers=workers)


def tree_ratio_scan(n_max: int, workers: int = 1) -> ScanReport:
    """χcen <= 3.7 χlin (compared as 37/10) on all trees up to n_max."""
    return _ratio_scan(TREES, enumerate_trees(n_max), lambda lin, cen: cen <= TREE_BOUND * lin, workers=workers)


def caterpillar_scan(n_max: int, workers: int = 1) -> ScanReport:
    """χcen <= χlin + 1 on all caterpillars, recording equality cases."""
    return _ratio_scan(
        CATERPILLARS,
        enumerate_caterpillars(n_max),
        lambda lin, cen: cen <= lin + 1,
        lambda lin, cen: cen == lin + 1,
        workers=workers,
    )


# -- class recognizers ----------------------------------------------------


def is_p3p1_free(g: Graph) -> bool:
    """No four vertices inducing a two-edge path plus an isolated vertex."""
    adj = g.adj
    for combo in combinations(range(g.n), 4):
        m = mask_of(combo)
        degs = sorted((adj[v] & m).bit_count() for v in combo)
        if degs == [0, 1, 1, 2]:
            return False
    return True


def is_claw_net_free(g: Graph) -> bool:
    return not contains_induced(g, claw()) and not contains_induced(g, net())


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in iter_bits(g.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return False
    return True


def is_cobipartite(g: Graph) -> bool:
    """Vertex set is a union of two cliques."""
    return is_bipartite(g.complement())


def is_traceable_hereditary(g: Graph) -> bool:
    """Every connected induced subgraph has a Hamiltonian path."""
    if g.n > 10:
        raise SizeLimitError("traceable-hereditary check is limited to 10 vertices")
    traceable = set(traceable_sets(g))
    return all(m in traceable for level in connected_set_levels(g) for m in level)


CLASS_RECOGNIZERS: dict[str, Callable[[Graph], bool]] = {
    "p3p1-free": is_p3p1_free,
    "claw-net-free": is_claw_net_free,
    "cobipartite": lambda g: is_connected(g) and is_cobipartite(g),
    "traceable-hereditary": is_traceable_hereditary,
}


# -- linear versus centered -----------------------------------------------


def linear_partitions(g: Graph) -> Iterator[Coloring]:
    """Every linear coloring up to renaming (restricted-growth strings).

    A prefix is abandoned as soon as a fully colored path has no center.
    """
    n = g.n
    buckets: list[list[int]] = [[] for _ in range(n)]
    for mask in traceable_sets(g):
        if mask.bit_count() >= 2:
            buckets[mask.bit_length() - 1].append(mask)
    colors = [0] * n
    classes: list[int] = []

    def fine(i: int) -> bool:
        for mask in buckets[i]:
            for cm in classes:
                x = mask & cm
                if x and not x & (x - 1):
                    break
            else:
                return False
        return True

    def rec(i: int) -> Iterator[Coloring]:
        if i == n:
            yield Coloring(tuple(colors))
            return
        bit = 1 << i
        for col in range(len(classes) + 1):
            if col == len(classes):
                classes.append(0)
            classes[col] |= bit
            colors[i] = col
            if fine(i):
                yield from rec(i + 1)
            classes[col] &= ~bit
            if not classes[col]:
                classes.pop()

    yield from rec(0)


def find_linear_not_centered(g: Graph) -> Coloring | None:
    if g.n > PARTITION_LIMIT:
        raise SizeLimitError(f"set-partition scan is limited to {PARTITION_LIMIT} vertices")
    for c in linear_partitions(g):
        if not is_centered(g, c):
            return c
    return None


def linear_implies_centered_scan(g: Graph) -> bool:
    """True iff every linear coloring of ``g`` is centered."""
    return find_linear_not_centered(g) is None


def classes_scan(n_max: int = 6, classes: Sequence[str] | None = None) -> ScanReport:
    """Linear ⇒ centered over every graph of the named classes up to n_max."""
    names = list(classes or CLASS_RECOGNIZERS)
    for name in names:
        if name not in CLASS_RECOGNIZERS:
            raise GraphError(f"unknown class {name!r}")
    report = ScanReport(CLASSES)
    counts = {name: 0 for name in names}
    t0 = time.perf_counter()
    for g in enumerate_graphs(n_max):
        tags = [name for name in names if CLASS_RECOGNIZERS[name](g)]
        if not tags:
            continue
        t1 = time.perf_counter()
        bad = find_linear_not_centered(g)
        report.slowest_ms = max(report.slowest_ms, (time.perf_counter() - t1) * 1000)
        report.graphs_scanned += 1
        for name in tags:
            counts[name] += 1
            if bad is not None:
                report.violations.append((f"{CLASSES}:{name}", to_graph6(g)))
    report.seconds = time.perf_counter() - t0
    report.extra["class_counts"] = counts
    return report


# -- minor non-monotonicity example ---------------------------------------


class ReconstructionError(GraphError):
    pass


# Reconstructed pair: every sequence listed below must be a path (or cycle).
# H: hexagon abcdef with chord ac, triangle acj, pendants g (on f), h (on d),
# i (on b).  G: the same with ac subdivided by k.
MINOR_H_EDGES = "ab bc cd de ef fa fg dh ac cj aj bi"
MINOR_G_EDGES = "ab bc cd de ef fa fg dh ak kc cj aj bi"
MINOR_PSI = {"a": 1, "b": 0, "c": 2, "d": 3, "e": 0, "f": 3, "g": 1, "h": 2, "i": 3, "j": 0, "k": 0}

MINOR_G_PATHS = ("gfedh", "gfa", "cdh", "gfedcjabi")
MINOR_H_PATHS = (
    "bcdefg", "bafedh", "bcdh", "bafg", "gfacdh", "fedcbi", "ibaj", "ibcj",
    "jcdefabi", "ibcd", "jcde", "jcdefg", "dcjafg",
)
MINOR_H_CYCLES = ("abcdef", "acj")


def parse_named_edges(spec: str | Iterable[Sequence[str]]) -> list[tuple[str, str]]:
    """``"ab bc"`` or ``[["a", "b"], ...]`` to a list of name pairs."""
    if isinstance(spec, str):
        tokens = spec.split()
        if any(len(t) != 2 for t in tokens):
            raise ReconstructionError("compact edge strings need one-letter vertex names")
        return [(t[0], t[1]) for t in tokens]
    out = []
    for e in spec:
        if len(e) != 2:
            raise ReconstructionError(f"bad edge {e!r}")
        out.append((str(e[0]), str(e[1])))
    return out


class NamedGraph:
    def __init__(self, edges: list[tuple[str, str]]):
        names = sorted({x for e in edges for x in e})
        self.names = names
        self.index = {x: i for i, x in enumerate(names)}
        self.pairs = {frozenset(e) for e in edges}
        if any(len(p) != 2 for p in self.pairs):
            raise ReconstructionError("loop in edge list")
        self.graph = Graph.from_edges(len(names), [(self.index[a], self.index[b]) for a, b in edges])

    def has(self, a: str, b: str) -> bool:
        return frozenset((a, b)) in self.pairs

    def is_path(self, word: Sequence[str]) -> bool:
        return (
            len(set(word)) == len(word)
            and all(x in self.index for x in word)
            and all(self.has(a, b) for a, b in zip(word, word[1:]))
        )

    def is_cycle(self, word: Sequence[str]) -> bool:
        return len(word) >= 3 and self.is_path(word) and self.has(word[-1], word[0])


def contract(edges: set[frozenset], keep: str, gone: str) -> set[frozenset]:
    out = set()
    for e in edges:
        e2 = frozenset(keep if x == gone else x for x in e)
        if len(e2) == 2:
            out.add(e2)
    return out


def minor_example_check(
    g_edges: str | Iterable[Sequence[str]] = MINOR_G_EDGES,
    h_edges: str | Iterable[Sequence[str]] = MINOR_H_EDGES,
    psi: dict[str, int] | None = None,
) -> dict:
    """Validate the reconstruction, then solve both graphs exactly.

    Raises :class:`ReconstructionError` if a named sequence is not a path
    (or cycle) or H is not G with the edge kc contracted.
    """
    G = NamedGraph(parse_named_edges(g_edges))
    H = NamedGraph(parse_named_edges(h_edges))
    bad = [w for w in MINOR_G_PATHS if not G.is_path(w)]
    bad += [w for w in MINOR_H_PATHS if not H.is_path(w)]
    bad += [w for w in MINOR_H_CYCLES if not H.is_cycle(w)]
    if bad:
        raise ReconstructionError(f"named sequences are not paths/cycles: {', '.join(bad)}")
    if not G.has("k", "c"):
        raise ReconstructionError("G has no edge kc")
    if contract(G.pairs, "c", "k") != H.pairs:
        raise ReconstructionError("H is not G with the edge kc contracted")
    t0 = time.perf_counter()
    lin_g = linear_chromatic(G.graph)
    lin_h = linear_chromatic(H.graph)
    report = {
        "claim": MINOR_EXAMPLE,
        "sequences_valid": True,
        "contraction_valid": True,
        "chi_lin_G": lin_g.value,
        "chi_lin_H": lin_h.value,
        "H_has_4_coloring": decide_linear_at_most(H.graph, 4) is not None,
        "witness_G": {x: lin_g.witness[G.index[x]] for x in G.names},
        "seconds": round(time.perf_counter() - t0, 3),
    }
    psi = MINOR_PSI if psi is None else psi
    if set(psi) == set(G.names):
        c = Coloring(tuple(psi[x] for x in G.names))
        report["psi_linear"] = is_linear(G.graph, c)
        report["psi_palette"] = c.palette_size
    report["ok"] = lin_g.value == 4 and lin_h.value >= 5
    return report


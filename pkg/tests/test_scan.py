from fractions import Fraction

import pytest
from hypothesis import given

from linchrom.graph import (
    Graph,
    SizeLimitError,
    canonical_form,
    from_graph6,
    caterpillar,
    claw,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    enumerate_graphs,
    net,
    path_graph,
    to_graph6,
)
from linchrom.scan import (
    MINOR_G_EDGES,
    MINOR_H_EDGES,
    ReconstructionError,
    ScanReport,
    caterpillar_scan,
    classes_scan,
    conjecture_scan,
    find_linear_not_centered,
    is_claw_net_free,
    is_cobipartite,
    is_p3p1_free,
    is_traceable_hereditary,
    linear_implies_centered_scan,
    linear_partitions,
    minor_example_check,
    random_graphs,
    tree_ratio_scan,
)
from linchrom.verify import is_centered

from conftest import graphs, naive_is_linear

COROOK_HOST = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)])


def test_recognizers():
    assert is_claw_net_free(cycle_graph(6))
    assert not is_claw_net_free(claw()) and not is_claw_net_free(net())
    assert not is_p3p1_free(path_graph(5))
    assert is_p3p1_free(path_graph(3)) and is_p3p1_free(complete_multipartite([2, 2]))
    assert not is_cobipartite(cycle_graph(5))
    assert is_cobipartite(cycle_graph(4)) and is_cobipartite(complete_graph(5))
    assert is_traceable_hereditary(path_graph(5))
    assert not is_traceable_hereditary(claw())


def test_linear_implies_centered_examples():
    assert linear_implies_centered_scan(complete_graph(5))
    assert linear_implies_centered_scan(path_graph(6))
    c = find_linear_not_centered(COROOK_HOST)
    assert c is not None and not is_centered(COROOK_HOST, c)
    with pytest.raises(SizeLimitError):
        linear_implies_centered_scan(path_graph(9))


@given(graphs(max_n=5))
def test_linear_partitions_are_exactly_the_linear_ones(g):
    from itertools import product

    got = {c.colors for c in linear_partitions(g)}
    expected = set()
    for colors in product(range(g.n), repeat=g.n):
        # keep restricted-growth strings only
        if all(colors[i] <= max(colors[:i], default=-1) + 1 for i in range(g.n)) and naive_is_linear(g, colors):
            expected.add(colors)
    assert got == expected


def test_classes_scan_small():
    rep = classes_scan(5)
    assert rep.ok and rep.graphs_scanned > 0
    assert set(rep.extra["class_counts"]) == {"p3p1-free", "claw-net-free", "cobipartite", "traceable-hereditary"}


def test_conjecture_scan_paths_ratio_one():
    rep = conjecture_scan([path_graph(n) for n in range(1, 16)])
    assert rep.ok and rep.max_ratio == 1


def test_conjecture_scan_caterpillar_ratio():
    g = caterpillar([0, 0, 1, 1, 0, 0])
    rep = conjecture_scan([g])
    assert rep.max_ratio == Fraction(4, 3) and rep.max_ratio_witness == to_graph6(g)


def test_conjecture_scan_small_connected():
    rep = conjecture_scan(enumerate_graphs(5, connected_only=True))
    assert rep.ok and rep.graphs_scanned == 1 + 1 + 2 + 6 + 21


def test_tree_and_caterpillar_scans():
    t = tree_ratio_scan(9)
    assert t.ok and t.max_ratio <= Fraction(37, 10)
    c = caterpillar_scan(9)
    assert c.ok and c.equality_witnesses
    eq = {canonical_form(from_graph6(w)) for w in c.equality_witnesses}
    assert canonical_form(caterpillar([0, 0, 1, 1, 0, 0])) in eq


def test_random_graphs_deterministic():
    a = [to_graph6(g) for g in random_graphs(20, 8, seed=5)]
    b = [to_graph6(g) for g in random_graphs(20, 8, seed=5)]
    assert a == b
    with pytest.raises(ValueError):
        list(random_graphs(1, 3, seed=0, p=1.5))


def test_report_json():
    rep = ScanReport("x", violations=[("x", "A_")])
    d = rep.to_dict()
    assert d["ok"] is False and d["violations"] == [{"claim": "x", "g6": "A_"}]


def test_minor_example_default_reconstruction():
    rep = minor_example_check()
    assert rep["ok"] and rep["chi_lin_G"] == 4 and rep["chi_lin_H"] >= 5
    assert rep["psi_linear"] and rep["psi_palette"] == 4
    assert not rep["H_has_4_coloring"]


def test_minor_example_rejects_broken_reconstruction():
    broken = MINOR_G_EDGES.replace(" fg", "")
    with pytest.raises(ReconstructionError):
        minor_example_check(broken, MINOR_H_EDGES)
    with pytest.raises(ReconstructionError):
        minor_example_check(MINOR_G_EDGES, MINOR_H_EDGES.replace(" bi", " bj"))


def test_parallel_scan_matches_serial():
    stream = list(enumerate_graphs(5, connected_only=True))
    a = conjecture_scan(stream, workers=1).to_dict()
    b = conjecture_scan(stream, workers=2).to_dict()
    for d in (a, b):
        d.pop("timing")
    assert a == b

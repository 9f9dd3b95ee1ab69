import json
import subprocess
import sys

import pytest

from linchrom.cli import main, parse_graphs
from linchrom.graph import corook_graph, from_graph6, path_graph, to_edge_list, to_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def corook_files(tmp_path):
    g = tmp_path / "g.txt"
    g.write_text("6\n0 1\n1 2\n2 3\n3 0\n0 4\n2 5\n")
    c = tmp_path / "c.json"
    c.write_text("[1, 2, 3, 2, 3, 1]")
    return str(g), str(c)


def test_gen_named(capsys):
    code, out, _ = run(capsys, "gen", "corook", "3", "3")
    assert code == 0 and from_graph6(out.strip()) == corook_graph(3, 3)


def test_gen_all_json(capsys):
    code, out, _ = run(capsys, "gen", "all", "--n", "4", "--connected", "--json")
    assert code == 0 and len(json.loads(out)) == 1 + 1 + 2 + 6


def test_gen_edges_parse_back(capsys):
    code, out, _ = run(capsys, "gen", "path", "5", "--format", "edges")
    assert parse_graphs(out) == [path_graph(5)]


def test_compute_p8(capsys, tmp_path):
    f = tmp_path / "p8.txt"
    f.write_text(to_edge_list(path_graph(8)))
    code, out, _ = run(capsys, "compute", "--lin", "--cen", "--json", str(f))
    res = json.loads(out)
    assert code == 0 and res["chi_lin"] == 4 and res["chi_cen"] == 4


def test_compute_graph6_stream(capsys, tmp_path):
    f = tmp_path / "g.g6"
    f.write_text("C~\nDhc\n")
    code, out, _ = run(capsys, "compute", "--lin", "--json", str(f))
    vals = [json.loads(ln)["chi_lin"] for ln in out.splitlines()]
    assert code == 0 and vals == [4, 4]


def test_verify_corook_linear_accepts(capsys, corook_files):
    g, c = corook_files
    code, out, _ = run(capsys, "verify", "--coloring", c, "--kind", "linear", "--json", g)
    assert code == 0 and json.loads(out)["accepted"]


def test_verify_corook_centered_rejects(capsys, corook_files):
    g, c = corook_files
    code, out, _ = run(capsys, "verify", "--coloring", c, "--kind", "centered", "--json", g)
    res = json.loads(out)
    assert code == 1 and not res["accepted"]
    assert res["witness"]["vertices"] == [0, 1, 2, 3, 4, 5]


def test_verify_with_forest(capsys, tmp_path):
    g = tmp_path / "p3.txt"
    g.write_text("3\n0 1\n1 2\n")
    c = tmp_path / "c.json"
    c.write_text("[1, 0, 1]")
    f = tmp_path / "f.json"
    f.write_text("[1, -1, 1]")
    code, out, _ = run(capsys, "verify", "--coloring", str(c), "--kind", "centered", "--forest", str(f), "--json", str(g))
    assert code == 0 and json.loads(out)["certificate"]


def test_color_grid(capsys):
    code, out, _ = run(capsys, "color", "grid", "5", "--json")
    res = json.loads(out)
    assert code == 0 and res["verified"] and res["palette"] <= 20 and res["forest"]


def test_obstructions_and_characterize(capsys, tmp_path):
    db = str(tmp_path / "o.g6")
    code, out, _ = run(capsys, "obstructions", "--k", "2", "--nmax", "6", "--db", db, "--json", "--threads", "1")
    assert code == 0 and json.loads(out)["count"] == 2
    code, out, _ = run(capsys, "obstructions", "--k", "2", "--nmax", "6", "--db", db, "--json", "--threads", "1")
    assert code == 0 and json.loads(out)["count"] == 2
    code, out, _ = run(capsys, "characterize", "--db", db, "--json")
    assert code == 0 and json.loads(out)["discrepancies"] == []


def test_scan_caterpillars_exit_zero(capsys, tmp_path):
    rep = tmp_path / "r.json"
    code, out, _ = run(capsys, "scan", "caterpillars", "--nmax", "9", "--json", "--report", str(rep), "--threads", "1")
    assert code == 0 and json.loads(out)["ok"]
    assert json.loads(rep.read_text())["claim"] == "C11-caterpillars"


def test_scan_conjecture_random(capsys):
    code, out, _ = run(capsys, "scan", "conjecture", "--nmax", "4", "--random", "5", "--seed", "3", "--json", "--threads", "1")
    res = json.loads(out)
    assert code == 0 and res["graphs_scanned"] == 1 + 1 + 2 + 6 + 5 and res["seeds"]["seed"] == 3


def test_prop3(capsys, tmp_path):
    code, out, _ = run(capsys, "prop3", "--json")
    assert code == 0 and json.loads(out)["chi_lin_H"] >= 5
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"G": [["a", "b"]], "H": [["a", "b"]]}))
    code, out, _ = run(capsys, "prop3", "--edges", str(bad), "--json")
    assert code == 2 and "rejected" in json.loads(out)


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "compute", str(tmp_path / "missing"))[0] == 2
    assert run(capsys, "gen", "corook", "3")[0] == 2
    bad = tmp_path / "bad.g6"
    bad.write_text("C~~\n")
    assert run(capsys, "compute", str(bad))[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2


def test_threads_env(monkeypatch, capsys):
    monkeypatch.setenv("LINCHROM_THREADS", "zero")
    assert run(capsys, "gen", "path", "3")[0] == 2


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "linchrom", "gen", "path", "4"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip() == to_graph6(path_graph(4))

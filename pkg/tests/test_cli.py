import json
import subprocess
import sys

import pytest

from dpcore import format_gr, parse_td, validate
from dpcore.cli import main
from dpcore.generators import complete_graph, cycle_graph, path_graph
from dpcore.graph import parse_gr


@pytest.fixture
def graph_file(tmp_path):
    def write(G, name="g.gr"):
        path = tmp_path / name
        path.write_text(format_gr(G))
        return str(path)
    return write


def test_yes_no_exit_codes(graph_file, capsys):
    k4 = graph_file(complete_graph(4))
    assert main(["--graph", k4, "--preset", "3col"]) == 1
    assert capsys.readouterr().out.strip() == "NO"
    assert main(["--graph", k4, "--preset", "arb=2"]) == 0
    assert capsys.readouterr().out.strip() == "YES"


def test_vertex_witness_lines(graph_file, capsys):
    assert main(["--graph", graph_file(cycle_graph(4)), "--preset", "two-trees", "--witness"]) == 0
    lines = capsys.readouterr().out.split("\n")
    assert lines[0] == "YES"
    body = [l.split() for l in lines[1:] if l]
    assert [int(f[1]) for f in body] == [1, 2, 3, 4] and all(f[0] == "v" for f in body)


def test_json_output(graph_file, capsys):
    code = main(["--graph", graph_file(complete_graph(4)), "--problem", "edgepart(forest,forest)",
                 "--witness", "--json", "--stats"])
    out = json.loads(capsys.readouterr().out)
    assert code == 0 and out["answer"] == "yes"
    assert len(out["witness"]["edges"]) == 6
    assert all(len(e) == 3 and e[2] in (1, 2) for e in out["witness"]["edges"])
    assert set(out["stats"]) == {"nodes", "width", "max_states", "total_states", "elapsed_ms"}


def test_oracle_agrees(graph_file, capsys):
    assert main(["--graph", graph_file(path_graph(3)), "--problem",
                 "graphpart(1; edgeless,edgeless)", "--oracle"]) == 1
    assert "oracle agrees" in capsys.readouterr().out


def test_emit_and_reuse_td(graph_file, tmp_path, capsys):
    gpath = graph_file(cycle_graph(6))
    td = tmp_path / "out.td"
    assert main(["--graph", gpath, "--preset", "vc=3", "--emit-td", str(td)]) == 0
    G = parse_gr(open(gpath).read())
    assert validate(G, parse_td(td.read_text(), G)) == []
    assert main(["--graph", gpath, "--td", str(td), "--preset", "vc=2"]) == 1


def test_bench_csv(graph_file, capsys):
    assert main(["--graph", graph_file(path_graph(20)), "--preset", "3col", "--bench",
                 "--parallel", "2"]) == 0
    header, row = capsys.readouterr().out.strip().split("\n")
    assert header.startswith("graph,problem,nodes,width")
    assert row.endswith(",yes")


@pytest.mark.parametrize("args", [
    ["--problem", "vertpart(tree)"],
    ["--preset", "arb=1"],
])
def test_bad_problem_is_error(graph_file, capsys, args):
    assert main(["--graph", graph_file(path_graph(3))] + args) == 2
    assert "error" in capsys.readouterr().err


def test_bad_graph_and_td(tmp_path, graph_file, capsys):
    bad = tmp_path / "bad.gr"
    bad.write_text("p tw 2 1\n1 5\n")
    assert main(["--graph", str(bad), "--preset", "3col"]) == 2
    td = tmp_path / "bad.td"
    td.write_text("s td 1 1 3\nb 1 1\n")
    assert main(["--graph", graph_file(path_graph(3)), "--td", str(td), "--preset", "3col"]) == 2
    assert main(["--graph", str(tmp_path / "missing.gr"), "--preset", "3col"]) == 2


def test_module_entry_point(graph_file):
    proc = subprocess.run([sys.executable, "-m", "dpcore", "--graph", graph_file(complete_graph(3)),
                           "--preset", "3col"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "YES"


def test_oracle_mismatch_exit_code(graph_file, capsys, monkeypatch):
    import dpcore.cli as cli
    monkeypatch.setattr(cli, "oracle_decide", lambda expr, G: False)
    assert main(["--graph", graph_file(complete_graph(3)), "--preset", "3col", "--oracle"]) == 3
    assert "MISMATCH" in capsys.readouterr().out

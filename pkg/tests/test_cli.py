import subprocess
import sys
from importlib import resources

import pytest

from singlink import graphfile
from singlink.acceptance import run_cli
from singlink.brieskorn import seifert_graph, triple

DATA = resources.files("singlink").joinpath("data")


def fixture(name):
    return str(DATA.joinpath(name))


def lines(out):
    return out.splitlines()


def test_todd():
    assert run_cli(["todd", "--order", "2"]) == (0, "T2\t1/12*c1^2+1/12*c2\n")
    code, out = run_cli(["todd", "--order", "2", "--eval", "c1=0,c2=9"])
    assert code == 0 and "Td\t3/4" in lines(out)
    code, out = run_cli(["todd", "--order", "3"])
    assert out == "T3\t1/24*c1*c2\n"
    assert run_cli(["todd", "--order", "0"])[0] == 1
    assert run_cli(["todd", "--order", "9"])[0] == 1
    assert run_cli(["todd", "--order", "9", "--max-grade", "9"])[0] == 0
    assert run_cli(["todd"])[0] == 1


def test_graph_check_e8():
    code, out = run_cli(["graph-check", fixture("e8.graph")])
    assert code == 0
    assert lines(out) == [
        "r\t8", "edges\t7", "det\t1", "negative_definite\ttrue", "numerically_gorenstein\ttrue",
        "K\t0,0,0,0,0,0,0,0", "K2\t0", "chi_top\t9",
    ]


def test_graph_check_single_vertex():
    code, out = run_cli(["check", fixture("single-minus3.graph")])
    assert code == 0
    assert "numerically_gorenstein\tfalse" in lines(out)
    assert "K\t-1/3" in lines(out)
    assert [line.split("\t")[0] for line in lines(out)] == [
        "r", "edges", "det", "negative_definite", "numerically_gorenstein", "K", "K2", "chi_top"]


def test_graph_check_singular():
    code, out = run_cli(["graph-check", fixture("path2.graph")])
    assert code == 2
    assert "error\tsingular-intersection-form" in lines(out)
    assert not any(line.startswith(("det\t", "K\t", "K2\t")) for line in lines(out))


def test_graph_check_parse_errors(tmp_path):
    bad = tmp_path / "loop.graph"
    bad.write_text("vertex 0 -2 0\nedge 0 0\n")
    assert run_cli(["graph-check", str(bad)])[0] == 1
    assert run_cli(["graph-check", str(tmp_path / "nope.graph")])[0] == 1


def test_brieskorn():
    code, out = run_cli(["brieskorn", "2", "3", "5"])
    assert code == 0
    assert lines(out) == ["mu\t8", "pg\t0", "sigma\t-8", "chi\t9", "ehat\t9", "e_r\t9", "e_c\t9",
                          "rochlin\t8", "casson\t-1"]
    code, out = run_cli(["brieskorn", "2", "2", "2"])
    assert code == 0 and lines(out)[-1] == "casson\tn/a"
    assert run_cli(["brieskorn", "1", "3", "5"])[0] == 1
    assert run_cli(["brieskorn", "2", "3", "x"])[0] == 1


def test_brieskorn_emit_graph(tmp_path):
    path = tmp_path / "g.graph"
    assert run_cli(["brieskorn", "7", "2", "3", "--emit-graph", str(path)])[0] == 0
    text = path.read_text()
    assert text == graphfile.emit(seifert_graph(triple(2, 3, 7)))
    assert graphfile.emit(graphfile.parse(text)) == text
    assert run_cli(["brieskorn", "2", "3", "4", "--emit-graph", str(tmp_path / "h.graph")])[0] == 2


def test_ehat():
    assert run_cli(["ehat", "--mu", "8"]) == (0, "ehat\t9\ne_r\t9\ne_c\t9\n")
    assert lines(run_cli(["ehat", "--mu", "8", "--offset", "-9"])[1])[0] == "ehat\t0"
    assert run_cli(["ehat", "--mu", "20"]) == (0, "ehat\t21\ne_r\t21\ne_c\t9\n")
    assert run_cli(["ehat"])[0] == 1
    assert run_cli(["ehat", "--mu", "-3"])[0] == 1


def test_enumerate_genera():
    code, out = run_cli(["enumerate", "genera", fixture("single-minus3.graph"), "--gmax", "7"])
    assert code == 0
    assert "solutions\t1,4,7" in lines(out) and "period\t3" in lines(out)
    code, out = run_cli(["enumerate", "genera", fixture("a2.graph"), "--gmax", "3"])
    assert "solutions\t0:0,0:3,1:1,2:2,3:0,3:3" in lines(out)
    assert run_cli(["enumerate", "genera", fixture("path2.graph"), "--gmax", "3"])[0] == 2
    assert run_cli(["enumerate", "genera", fixture("a2.graph")])[0] == 1


def test_enumerate_weights():
    code, out = run_cli(["enumerate", "weights", fixture("path2.graph"), "--wmin", "-3"])
    assert code == 0 and "fraction\t8/9" in lines(out)
    assert run_cli(["enumerate", "weights", fixture("e8.graph"), "--wmin", "-8"])[0] == 2
    assert run_cli(["enumerate", "weights", fixture("e8.graph"), "--wmin", "-8", "--seed", "1"])[0] == 1
    assert run_cli(["enumerate", "weights", fixture("e8.graph"), "--wmin", "3"])[0] == 1
    code, out = run_cli(["enumerate", "weights", fixture("e8.graph"), "--wmin", "-8",
                         "--samples", "200", "--seed", "5"])
    assert code == 0 and "seed\t5" in lines(out) and "mode\tsampled" in lines(out)
    assert run_cli(["enumerate"])[0] == 1


@pytest.mark.parametrize("argv", [
    ["brieskorn", "2", "3", "11"],
    ["todd", "--order", "5"],
    ["enumerate", "weights", "E8", "--wmin", "-9", "--samples", "300", "--seed", "42"],
])
def test_subprocess_output_is_byte_identical(argv):
    argv = [fixture("e8.graph") if a == "E8" else a for a in argv]
    runs = [subprocess.run([sys.executable, "-m", "singlink", *argv], capture_output=True, check=True).stdout
            for _ in range(2)]
    assert runs[0] == runs[1] and runs[0]

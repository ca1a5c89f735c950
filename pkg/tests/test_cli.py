import subprocess
import sys

import pytest

from piwords.cli import main
from piwords.graphs import all_labeled_graphs, format_graph, parse_graph
from piwords.representation import decode
from piwords.words import WordPair, parse_word

ALTERNATION = "c e r s u\nc e\nc r\nc s\nc u\ne s\ne u\nr u\ns u\n"
RESCUES = "c e r s u\nc e\nc s\nc u\ne u\ns u\n"
PATH_BADC = "a b c d\na b\na d\nc d\n"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def gfile(tmp_path):
    def make(text, name="g.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return make


def test_decode(capsys):
    code, out, _ = run(capsys, "decode", "rescues", "secures")
    assert code == 0
    assert out == "# vertices: c e r s u\nc-e\nc-s\nc-u\ne-u\ns-u\n"
    code, out, _ = run(capsys, "decode", "ab", "ab")
    assert out.splitlines()[1:] == ["a-b"]


def test_decode_dot_and_graph_format(capsys):
    code, out, _ = run(capsys, "decode", "acbdecef", "cdaebecf", "--format", "dot")
    assert code == 0 and out.startswith("graph {") and out.count("--") == 10
    code, out, _ = run(capsys, "decode", "rescues", "secures", "--format", "graph")
    assert out == RESCUES


def test_decode_errors(capsys):
    code, _, err = run(capsys, "decode", "ab", "ac")
    assert code == 2 and "only in w: b" in err
    with pytest.raises(SystemExit):
        main(["decode", "ab"])
    with pytest.raises(SystemExit):
        main(["decode", "ab", "ab", "--bogus"])


def test_tokens(capsys):
    code, out, _ = run(capsys, "decode", "10 2 1", "1 2 10", "--tokens")
    assert code == 0 and out.startswith("# vertices: 1 2 10\n")


def test_represent(capsys, gfile):
    code, out, _ = run(capsys, "represent", gfile(PATH_BADC), "--method", "naive")
    assert code == 0 and out == "bdacadbcacbd\nbdcaadcbacdb\n"
    code, out, _ = run(capsys, "represent", gfile(PATH_BADC))
    w, v = out.split()
    assert len(w) == len(v) == 8
    code, out, _ = run(capsys, "represent", gfile("a b c\na b\na c\nb c\n"))
    assert out == "abc\nabc\n"
    code, out, _ = run(capsys, "represent", gfile(PATH_BADC), "--exact")
    assert code == 0 and len(out.split()[0]) == 8


def test_represent_bad_input(capsys, gfile):
    code, _, err = run(capsys, "represent", gfile("a b\na c\n"))
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "represent", "/nonexistent/graph.txt")
    assert code == 2


def test_verify(capsys, gfile):
    code, out, _ = run(capsys, "verify", gfile(RESCUES), "rescues", "secures")
    assert code == 0 and out == "OK\n"
    code, out, _ = run(capsys, "verify", gfile(ALTERNATION), "rescues", "secures")
    assert code == 1
    assert out.splitlines()[0] == "FAIL"
    assert "missing edge e-s: eses vs sees" in out
    code, out, _ = run(capsys, "verify", gfile("a b\na b\n"), "ab", "ba")
    assert code == 1 and "a-b" in out
    code, out, _ = run(capsys, "verify", gfile("a b c\n"), "ab", "ba")
    assert code == 1 and "differs" in out


def test_ops(capsys):
    assert run(capsys, "ops", "join", "adbc", "bacd", "eghf", "hgef")[1] == "adbceghf\nbacdhgef\n"
    assert run(capsys, "ops", "union", "adbc", "bacd", "eghf", "hgef")[1] == "adbceghf\nhgefbacd\n"
    assert run(capsys, "ops", "add-isolated", "adbc", "bacd", "e")[1] == "adbce\nebacd\n"
    assert run(capsys, "ops", "add-universal", "adbc", "bacd", "x")[1] == "adbcx\nbacdx\n"
    code, _, err = run(capsys, "ops", "join", "abbc", "abc", "x", "x")
    assert code == 2 and "'b'" in err
    code, _, err = run(capsys, "ops", "join", "ab", "ab")
    assert code == 2


def test_classes(capsys):
    assert run(capsys, "classes", "permutation", "456123")[1] == "123456\n321654\n"
    assert run(capsys, "classes", "cograph", "(u a b)")[1] == "ab\nba\n"
    code, out, _ = run(capsys, "classes", "cycle", "5", "--show-graph", "--format", "graph")
    lines = out.splitlines()
    g = decode((parse_word(lines[0]), parse_word(lines[1])))
    assert parse_graph("\n".join(lines[2:])) == g and len(g.edges) == 5
    code, out, _ = run(capsys, "classes", "cycle", "12", "--tokens")
    assert code == 0 and " 10 " in out.splitlines()[0]
    assert run(capsys, "classes", "12rep", "1122")[1] == "2211\n1122\n"
    assert run(capsys, "classes", "cycle", "four")[0] == 2
    assert run(capsys, "classes", "cycle", "4")[0] == 2


def test_oracle(capsys, gfile):
    c5 = gfile("1 2 3 4 5\n1 2\n2 3\n3 4\n4 5\n1 5\n")
    code, out, _ = run(capsys, "oracle", c5, "--k", "1")
    assert code == 1 and out.startswith("no witness, search complete")
    code, out, _ = run(capsys, "oracle", c5, "--k-max", "2")
    assert code == 0 and out.startswith("k=2")
    assert "w: " in out and "graph:" in out
    code, out, _ = run(capsys, "oracle", gfile("a b c d\na b\n"), "--k-max", "1")
    assert code == 0 and out.startswith("k=1")
    code, out, _ = run(capsys, "oracle", c5, "--k", "1", "--budget", "5")
    assert code == 1 and "incomplete" in out


def test_round_trip_over_small_graphs(capsys, gfile):
    for i, g in enumerate(all_labeled_graphs("abcd")):
        path = gfile(format_graph(g), f"g{i}.txt")
        for method in ("naive", "colored"):
            code, out, _ = run(capsys, "represent", path, "--method", method)
            w, v = out.splitlines()
            assert code == 0
            assert run(capsys, "verify", path, w, v)[0] == 0
            assert WordPair.parse(w, v).format() == (w, v)


def test_module_entry_point(gfile):
    proc = subprocess.run(
        [sys.executable, "-m", "piwords", "decode", "rescues", "secures"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and "c-e" in proc.stdout

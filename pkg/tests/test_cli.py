import json

import pytest

from spantree.cli import run
from spantree.corpus import disconnected_corpus, standard_corpus, write_corpus
from spantree.generators import complete, path
from spantree.io import parse_edge_list, parse_graph6, write_edge_list, write_graph6


@pytest.fixture
def files(tmp_path):
    def put(name, g):
        p = tmp_path / name
        p.write_text(write_graph6(g) + "\n" if name.endswith(".g6") else write_edge_list(g))
        return str(p)

    return put


def test_gen_graph6(capsys):
    assert run(["gen", "complete", "5", "--format", "graph6"]) == 0
    assert parse_graph6(capsys.readouterr().out) == complete(5)


def test_gen_edges_default(capsys):
    assert run(["gen", "path", "3"]) == 0
    assert capsys.readouterr().out == "3 2\n0 1\n1 2\n"


def test_count(files, capsys):
    assert run(["count", "--file", files("k5.g6", complete(5))]) == 0
    assert capsys.readouterr().out == "125\n"


def test_bounds_json(files, capsys):
    args = ["bounds", "--g1", files("k3.edges", complete(3)), "--g2", files("k2.edges", complete(2)), "--json"]
    assert run(args) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["tau"] == "75" and out["equality_upper"] is True and out["equality_lower"] is False


def test_bounds_text_deterministic(files, capsys):
    args = ["bounds", "--g1", files("p3.edges", path(3)), "--g2", files("p3b.g6", path(3))]
    run(args)
    first = capsys.readouterr().out
    run(args)
    assert capsys.readouterr().out == first
    assert "tau 192\n" in first


def test_spectrum(files, capsys):
    assert run(["spectrum", "--file", files("k3.g6", complete(3))]) == 0
    assert capsys.readouterr().out == "0.000000000000\n3.000000000000\n3.000000000000\n"


def test_product_and_tree_and_random(files, capsys):
    assert run(["product", "--g1", files("a.g6", complete(2)), "--g2", files("b.g6", complete(2))]) == 0
    assert parse_edge_list(capsys.readouterr().out).m == 4
    assert run(["tree", "--prufer", "0,0"]) == 0
    assert parse_edge_list(capsys.readouterr().out).edges == ((0, 1), (0, 2), (0, 3))
    assert run(["tree", "--prufer", ""]) == 0
    assert capsys.readouterr().out == "2 1\n0 1\n"
    run(["random", "8", "0.5", "--seed", "42"])
    a = capsys.readouterr().out
    run(["random", "8", "0.5", "--seed", "42"])
    assert capsys.readouterr().out == a


def test_rook_and_oracle(files, capsys):
    assert run(["rook", "3", "3"]) == 0
    assert capsys.readouterr().out == "11664\n"
    assert run(["oracle", "--file", files("k4.g6", complete(4))]) == 0
    assert capsys.readouterr().out == "16\n"
    assert run(["oracle", "--file", files("k7.g6", complete(7))]) == 1


@pytest.mark.parametrize(
    "text, code",
    [("3 1\n0 3\n", 3), ("3 2\n0 1\n", 3)],
)
def test_parse_errors_exit_nonzero(tmp_path, capsys, text, code):
    p = tmp_path / "bad.edges"
    p.write_text(text)
    assert run(["count", "--file", str(p)]) == code
    err = capsys.readouterr().err
    assert err.startswith("parse error: line") and err.count("\n") == 1


def test_domain_and_io_errors(capsys):
    assert run(["gen", "cycle", "2"]) == 4
    assert run(["count", "--file", "/nonexistent.g6"]) == 6
    assert run(["random", "4", "2.0"]) == 4


def test_bad_subcommand():
    with pytest.raises(SystemExit) as e:
        run(["frobnicate"])
    assert e.value.code != 0


def test_verify(tmp_path, capsys):
    graphs = dict(list(standard_corpus().items())[::4])
    graphs.update(disconnected_corpus())
    write_corpus(tmp_path, graphs)
    assert run(["verify", "--corpus", str(tmp_path)]) == 0
    assert capsys.readouterr().out.startswith("ok:")


def test_verify_reports_failure(tmp_path, capsys, monkeypatch):
    import spantree.bounds as b

    write_corpus(tmp_path, {"K3": complete(3), "K2": complete(2)})
    monkeypatch.setattr(b, "equality_upper", lambda g1, g2: False)
    assert run(["verify", "--corpus", str(tmp_path)]) == 1
    assert capsys.readouterr().out.startswith("FAIL bounds (K2.g6, K2.g6)")

import json

import pytest

from kvcover.cli import main
from kvcover.instances import parse_graph

G1_TEXT = "p wvc 3 3\n0 1 2.0\n1 2 1.0\n2 2 0.5\n"


@pytest.fixture
def g1_file(tmp_path):
    path = tmp_path / "g1.wvc"
    path.write_text(G1_TEXT)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_max_text(capsys, g1_file):
    code, out, _ = run(capsys, "solve", "max-kvc", "--input", g1_file, "--k", "1", "--epsilon", "1.0")
    assert code == 0
    assert out.splitlines()[:2] == ["value 3.0", "set 1"]


def test_solve_json_with_oracle(capsys, g1_file):
    code, out, _ = run(
        capsys, "solve", "max-kvc", "--input", g1_file, "--k", "2", "--epsilon", "0.5", "--oracle", "--json"
    )
    rec = json.loads(out)
    assert code == 0 and rec["value"] == 3.5 and rec["oracle_value"] == 3.5 and rec["ratio"] == 1.0


def test_solve_min_records_trials(capsys, g1_file):
    code, out, _ = run(
        capsys, "solve", "min-kvc", "--input", g1_file, "--k", "1", "--epsilon", "0.5", "--json", "--seed", "3"
    )
    rec = json.loads(out)
    assert code == 0 and rec["seed"] == 3 and rec["trials"] >= 1 and 1.5 <= rec["value"] <= 2.25


def test_solve_min_coloring(capsys, g1_file, tmp_path):
    colors = tmp_path / "c.txt"
    colors.write_text("1 2 1\n")
    args = ["solve", "min-kvc", "--input", g1_file, "--k", "2", "--epsilon", "0.5", "--coloring", str(colors)]
    code, out, _ = run(capsys, *args)
    assert code == 0 and "set 0 1" in out
    colors.write_text("1 1 1\n")
    code, _, err = run(capsys, *args)
    assert code == 3 and "infeasible" in err


def test_exit_code_validation(capsys, g1_file, tmp_path):
    assert run(capsys, "solve", "max-kvc", "--input", g1_file, "--k", "5", "--epsilon", "1")[0] == 2
    assert run(capsys, "solve", "max-kvc", "--input", g1_file, "--k", "1", "--epsilon", "0")[0] == 2
    bad = tmp_path / "bad.wvc"
    bad.write_text("p wvc 2 1\n0 9 1.0\n")
    code, _, err = run(capsys, "oracle", "max", "--input", str(bad), "--k", "1")
    assert code == 2 and "line 2" in err


def test_exit_code_internal(capsys, monkeypatch, g1_file):
    import kvcover.cli as cli

    def boom(*a, **kw):
        raise AssertionError("broken contract")

    monkeypatch.setattr(cli, "greedy_max", boom)
    code, _, err = run(capsys, "solve", "max-kvc", "--input", g1_file, "--k", "1", "--method", "greedy")
    assert code == 4 and "internal" in err


def test_oracle_commands(capsys, g1_file, tmp_path):
    code, out, _ = run(capsys, "oracle", "min", "--input", g1_file, "--k", "1", "--json")
    assert code == 0 and json.loads(out)["witness"] == [2]
    colors = tmp_path / "c.txt"
    colors.write_text("1 2 1\n")
    code, out, _ = run(
        capsys, "oracle", "multicolored-min", "--input", g1_file, "--k", "2", "--coloring", str(colors), "--json"
    )
    assert code == 0 and json.loads(out)["value"] == 3.0


def test_gen_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.wvc", tmp_path / "b.wvc"
    for path in (a, b):
        assert run(capsys, "gen", "--n", "9", "--p", "0.5", "--seed", "7", "--output", str(path))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    code, out, _ = run(capsys, "gen", "--n", "5", "--p", "1", "--unweighted")
    assert parse_graph(out).num_edges == 10


def test_kernelize(capsys, g1_file):
    code, out, _ = run(capsys, "kernelize", "--input", g1_file, "--k", "1", "--epsilon", "1.0")
    assert code == 0
    assert "c map 0 1" in out and "c map 1 0" in out
    H = parse_graph(out)
    assert H.n == 2 and H.weight(0) == 1.0
    code, out, _ = run(capsys, "kernelize", "--input", g1_file, "--k", "1", "--epsilon", "1.0", "--json")
    meta = json.loads(out)
    assert meta["id_map"] == [1, 0] and meta["committed"] == []
    code, _, _ = run(capsys, "kernelize", "--mode", "unweighted", "--input", g1_file, "--k", "1", "--epsilon", "1")
    assert code == 2


def test_export_2sat(capsys, g1_file):
    code, out, _ = run(capsys, "export-2sat", "--input", g1_file, "--k", "2")
    assert code == 0 and out.splitlines()[0] == "p wcnf-cc 3 3 2"
    code, out, _ = run(capsys, "export-2sat", "--input", g1_file, "--k", "1", "--epsilon", "1.0")
    assert out.splitlines()[0] == "p wcnf-cc 2 2 1"


def test_bench(capsys, g1_file):
    code, out, err = run(
        capsys, "bench", "--input", g1_file, "--random", "2", "--n", "7", "--k", "1,2", "--epsilon", "0.5"
    )
    lines = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert "summary" in lines[-1]
    assert all("cell" in rec for rec in lines[:-1])
    assert "worst ratio" in err
    again = run(capsys, "bench", "--input", g1_file, "--random", "2", "--n", "7", "--k", "1,2", "--epsilon", "0.5")
    strip = lambda text: [{k: v for k, v in json.loads(l).items() if k != "wall_time"} for l in text.splitlines()[:-1]]
    assert strip(again[1]) == strip(out)


def test_bench_empty_and_too_large(capsys):
    code, out, _ = run(capsys, "bench")
    assert code == 0 and json.loads(out) == {"summary": {}}
    code, _, err = run(capsys, "bench", "--random", "1", "--n", "25", "--k", "2", "--oracle", "on")
    assert code == 2 and "oracle" in err

import io
import json
from pathlib import Path

import jsonschema
import pytest

from linearcut.cli import main
from linearcut.generators import FIG1_TEXT
from linearcut.io import parse_cut, parse_instance

SCHEMA = json.loads((Path(__file__).parent.parent / "docs" / "stats_schema.json").read_text())


@pytest.fixture
def fig1_path(tmp_path):
    p = tmp_path / "fig1.lin"
    p.write_text(FIG1_TEXT)
    return p


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_fig1_is_byte_exact(capsys):
    code, out, _ = run(capsys, "gen", "fig1")
    assert code == 0 and out == FIG1_TEXT


def test_solve_from_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, "solve", "-", "--budget", 4, stdin=FIG1_TEXT, monkeypatch=monkeypatch)
    assert code == 0 and len(parse_cut(out)) == 4
    code, out, _ = run(capsys, "solve", "-", "--budget", 3, stdin=FIG1_TEXT, monkeypatch=monkeypatch)
    assert code == 2 and out.strip() == "NO"


def test_solution_verifies(capsys, fig1_path, tmp_path):
    code, out, _ = run(capsys, "solve", fig1_path, "--budget", 4)
    cut = tmp_path / "cut.txt"
    cut.write_text(out)
    assert run(capsys, "verify", fig1_path, cut)[0] == 0


def test_verify_defg_and_abc(capsys, fig1_path, tmp_path):
    good = tmp_path / "defg.txt"
    good.write_text("# d e f g\n3\n4\n5\n6\n")
    bad = tmp_path / "abc.txt"
    bad.write_text("0\n1\n2\n")
    assert run(capsys, "verify", fig1_path, good)[0] == 0
    assert run(capsys, "verify", fig1_path, bad)[0] == 2


def test_missing_budget_is_usage_error(capsys, fig1_path):
    code, _, err = run(capsys, "solve", fig1_path)
    assert code == 1 and "budget" in err


def test_parse_error_reports_line(capsys, tmp_path):
    p = tmp_path / "bad.lin"
    p.write_text("kind linear\nvertices 2\nterminalset 1 7\n")
    code, _, err = run(capsys, "solve", p, "--budget", 1)
    assert code == 1 and "line 3" in err


def test_stats_json_matches_schema(capsys, fig1_path, tmp_path):
    from linearcut import solve_linear_cut
    from linearcut.generators import fig1_instance
    stats = tmp_path / "stats.json"
    assert run(capsys, "solve", fig1_path, "--budget", 4, "--stats-json", stats)[0] == 0
    report = json.loads(stats.read_text())
    jsonschema.validate(report, SCHEMA)
    assert report["stats"] == solve_linear_cut(fig1_instance(4)).stats.as_dict()
    assert report["cut_size"] == 4 and report["outcome"] == sorted(report["outcome"])


def test_audit_mode(capsys, fig1_path, tmp_path):
    stats = tmp_path / "s.json"
    run(capsys, "solve", fig1_path, "--budget", 4, "--audit-oracle", "--stats-json", stats)
    s = json.loads(stats.read_text())["stats"]
    assert s["audit_checks"] == s["freeze_events"] > 0 and s["audit_violations"] == 0


def test_greedy_and_oracle(capsys, fig1_path):
    code, out, _ = run(capsys, "greedy", fig1_path)
    assert code == 0 and len(parse_cut(out)) == 5
    code, out, _ = run(capsys, "oracle", fig1_path, "--budget", 4)
    assert code == 0 and parse_cut(out) == {3, 4, 5, 6}
    assert run(capsys, "oracle", fig1_path, "--budget", 3)[0] == 2


def test_oracle_refusal_is_an_error(capsys, tmp_path, monkeypatch):
    code, text, _ = run(capsys, "gen", "random", "--vertices", 30, "--edges", 60, "--seed", 1)
    p = tmp_path / "big.lin"
    p.write_text(text)
    code, _, err = run(capsys, "oracle", p, "--budget", 5)
    assert code == 1 and "exceed" in err


def test_approx_multiway(capsys, fig1_path, tmp_path):
    code, out, _ = run(capsys, "approx-multiway", fig1_path, "--budget", 6)
    assert code == 0
    mw = tmp_path / "fig1.mw"
    mw.write_text(FIG1_TEXT.replace("kind linear", "kind multiway"))
    cut = tmp_path / "cut.txt"
    cut.write_text(out)
    assert run(capsys, "verify", mw, cut)[0] == 0
    assert run(capsys, "approx-multiway", fig1_path, "--budget", 2)[0] == 2
    code, out, _ = run(capsys, "approx-multiway", fig1_path, "--budget", 2, "--retry-doubling")
    assert code == 0 and "budget 4" in out


def test_reduce_multicut_to_lattice(capsys, tmp_path):
    src = tmp_path / "mc.txt"
    src.write_text("kind multicut\nvertices 3\nedge 0 1\nedge 1 2\npair 0 2\npair 2 0\n")
    out = tmp_path / "lat.txt"
    assert run(capsys, "reduce", src, "--to", "lattice", "--budget", 1, "-o", out)[0] == 0
    lat = parse_instance(out.read_text())
    assert lat.kind == "lattice" and lat.budget == 1
    assert lat.vertices == 3 + 2 * 2 * (1 + 2)
    assert len(lat.labels) == 4
    # lattice side needs one cut (0->1 or 1->2); oracle agrees
    assert run(capsys, "oracle", out, "--budget", 0, "--max-edges", 64)[0] == 2
    assert run(capsys, "oracle", out, "--budget", 1, "--max-edges", 64)[0] == 0


def test_reduce_chain_lattice_back_to_linear(capsys, fig1_path, tmp_path):
    lat = tmp_path / "lat.txt"
    assert run(capsys, "reduce", fig1_path, "--to", "lattice", "-o", lat)[0] == 0
    code, out, _ = run(capsys, "solve", lat, "--budget", 4)
    assert code == 0 and len(parse_cut(out)) == 4
    lin = tmp_path / "lin.txt"
    assert run(capsys, "reduce", lat, "--to", "linear", "-o", lin)[0] == 0
    assert parse_instance(lin.read_text()).terminal_sets == [(0,), (1,), (2,)]


def test_hardness_gadget(capsys, tmp_path):
    src = tmp_path / "tri.txt"
    src.write_text("kind undirected3\nvertices 3\nedge 0 1\nedge 1 2\nedge 0 2\n"
                   "terminalset 1 0\nterminalset 2 1\nterminalset 3 2\n")
    code, out, _ = run(capsys, "gen", "hardness-gadget", src)
    gadget = parse_instance(out)
    assert gadget.kind == "linear" and len(gadget.edges) == 15 and gadget.vertices == 9
    g = tmp_path / "g.lin"
    g.write_text(out)
    assert run(capsys, "solve", g, "--budget", 3)[0] == 0
    assert run(capsys, "solve", g, "--budget", 2)[0] == 2
    assert run(capsys, "oracle", src, "--budget", 3)[0] == 0


def test_gen_random_reproducible(capsys):
    args = ("gen", "random", "--vertices", 9, "--edges", 20, "--terminal-sets", 3, "--seed", 5)
    first = run(capsys, *args)[1]
    assert first == run(capsys, *args)[1]
    assert parse_instance(first).kind == "linear"


def test_bench_csv(capsys):
    code, out, _ = run(capsys, "bench", "--max-p", 3, "--sizes", "20", "--seeds", 2)
    lines = out.strip().splitlines()
    assert code == 0 and lines[0].startswith("vertices,edges")
    assert len(lines) == 1 + 2 * 4


def test_unknown_subcommand(capsys):
    assert run(capsys, "frobnicate")[0] == 1


def test_oracle_without_budget_reports_minimum(capsys, fig1_path):
    code, out, _ = run(capsys, "oracle", fig1_path)
    assert code == 0 and out.startswith("# oracle size 4")

import json
import subprocess
import sys

import pytest

from bei_lab.cli import main
from bei_lab.corpus import NON_CLOSED_6
from bei_lab.graph import complete_graph, cycle_graph, format_graph_text, path_graph
from bei_lab.report import FIELDS


@pytest.fixture
def graph_file(tmp_path):
    def write(g, name="g.txt"):
        path = tmp_path / name
        path.write_text(format_graph_text(g))
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_invariants_json_for_non_closed_example(capsys, graph_file):
    code, out, _ = run(capsys, "invariants", graph_file(NON_CLOSED_6), "--json")
    assert code == 0
    report = json.loads(out)
    assert list(report) == list(FIELDS)
    assert report["v"] == 2 and report["closed"] is False
    assert report["im_initial"] is None
    assert set(report["achieving_prime"]) == {"S", "components"}


def test_invariants_complete_graph(capsys, graph_file):
    code, out, _ = run(capsys, "invariants", graph_file(complete_graph(5)), "--json")
    report = json.loads(out)
    assert code == 0 and report["v"] == 0 and report["v_init"] == 1


def test_invariants_text_has_triple(capsys, graph_file):
    code, out, _ = run(capsys, "invariants", graph_file(path_graph(4)))
    assert code == 0
    assert out.splitlines()[-1].split() == ["triple", "(2,", "3,", "3)"]


def test_vnumber_cycle7(capsys, graph_file):
    code, out, _ = run(capsys, "vnumber", graph_file(cycle_graph(7)))
    assert code == 0 and out.splitlines()[0] == "v 5"


def test_vnumber_modes_agree(capsys, graph_file):
    path = graph_file(cycle_graph(5))
    outs = {mode: run(capsys, "vnumber", path, "--mode", mode) for mode in ("algebraic", "combinatorial", "both")}
    assert {code for code, _, _ in outs.values()} == {0}
    assert {out.splitlines()[0] for _, out, _ in outs.values()} == {"v 3"}


def test_gamma_c_command(capsys, graph_file):
    code, out, _ = run(capsys, "gamma-c", graph_file(cycle_graph(6)))
    lines = out.splitlines()
    assert code == 0 and lines[0] == "gamma_c 4" and lines[2] == "lf_max 2"


def test_parse_error_exit_code_and_line(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 2\n1 2\n2 9\n")
    code, _, err = run(capsys, "invariants", str(bad))
    assert code == 2 and "line 3" in err


def test_missing_file_is_an_input_error(capsys, tmp_path):
    code, _, err = run(capsys, "invariants", str(tmp_path / "absent.txt"))
    assert code == 2 and "cannot read" in err


def test_unsupported_size_exit_code(capsys, graph_file):
    code, _, err = run(capsys, "vnumber", graph_file(path_graph(22)))
    assert code == 3 and "capped" in err


def test_verify_single_check(capsys):
    code, out, _ = run(capsys, "verify", "--check", "colon-formula", "--n", "4")
    assert code == 0 and out.startswith("PASS colon-formula")


def test_verify_unknown_check(capsys):
    code, _, err = run(capsys, "verify", "--check", "nope")
    assert code == 2 and "unknown check" in err


def test_table5_json(capsys):
    code, out, _ = run(capsys, "table5", "--json")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 21
    assert rows[0]["v"] == 0 and rows[0]["v_init"] == 1
    assert rows[1]["v"] == 3 and rows[1]["v_init"] == 3


def test_output_is_deterministic(graph_file):
    path = graph_file(NON_CLOSED_6)
    cmd = [sys.executable, "-m", "bei_lab.cli", "invariants", path, "--json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first

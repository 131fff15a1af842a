import json
import subprocess
import sys

import pytest

from toricsplit.cli import char_visible, main, run
from toricsplit.families import load_catalogue
from toricsplit.formats import InputError, format_graph, format_matrix, parse_graph, parse_matrix
from toricsplit.graphs import BipartiteGraph
from toricsplit.report import Report

EX28 = load_catalogue()["examples"]["ex2_8"]["matrix"]


@pytest.fixture
def mfile(tmp_path):
    def write(rows, name="a.matrix"):
        p = tmp_path / name
        p.write_text(format_matrix(rows))
        return str(p)

    return write


def json_run(argv):
    report, code = run(argv + ["--format", "json"])
    return json.loads(report.to_json()), code


# ---------------------------------------------------------------- formats


def test_parse_matrix_with_comments():
    text = "# twisted cubic\nmatrix 2 4\n\n3 2 1 0\n  # inline comment line\n0 1 2 3\n"
    assert parse_matrix(text) == [[3, 2, 1, 0], [0, 1, 2, 3]]


def test_parse_matrix_big_integers():
    big = 10**40
    assert parse_matrix(f"matrix 1 2\n{big} -1\n") == [[big, -1]]


@pytest.mark.parametrize(
    "text,line,col",
    [
        ("", 1, 1),
        ("matrx 1 2\n1 2\n", 1, 1),
        ("matrix 1 2 3\n1 2\n", 1, 12),
        ("matrix 1 x\n1 2\n", 1, 10),
        ("matrix 2 2\n1 2\n", 3, 1),
        ("matrix 1 2\n1 2 3\n", 2, 5),
        ("matrix 1 2\n1\n", 2, 2),
        ("matrix 1 2\n1 2.5\n", 2, 3),
        ("matrix 1 2\n1 2\n3 4\n", 3, 1),
    ],
)
def test_parse_matrix_errors(text, line, col):
    with pytest.raises(InputError) as exc:
        parse_matrix(text, "f")
    assert (exc.value.line, exc.value.col) == (line, col)
    assert str(exc.value).startswith(f"f:{line}:{col}: ")


def test_parse_graph():
    G = parse_graph("bipartite 2 2\n1 1\n1 2\n2 1\n2 2\n")
    assert G == BipartiteGraph.complete(2, 2)
    assert parse_graph(format_graph(G)) == G


@pytest.mark.parametrize(
    "text,line,col",
    [
        ("bipartite 2 2\n1 3\n", 2, 3),
        ("bipartite 2 2\n0 1\n", 2, 1),
        ("bipartite 2 2\n1 1\n1 1\n", 3, 1),
        ("bipartite 2 2\n1 1 1\n", 2, 5),
    ],
)
def test_parse_graph_errors(text, line, col):
    with pytest.raises(InputError) as exc:
        parse_graph(text)
    assert (exc.value.line, exc.value.col) == (line, col)


def test_disconnected_graph_is_input_error():
    with pytest.raises(InputError):
        parse_graph("bipartite 2 2\n1 1\n2 2\n")


# ---------------------------------------------------------------- reports


def test_report_round_trip_and_text():
    r = Report("demo")
    r["computed"]["mu"] = 3
    r["computed"]["empty"] = []
    r["computed"]["nested"] = {"a": [1, 2], "b": {}}
    r.note("hello")
    again = Report.from_json(r.to_json())
    assert again.to_json() == r.to_json()
    text = r.to_text()
    assert "mu: 3" in text and "empty: []" in text and "b: {}" in text


def test_char_visible():
    assert char_visible("0", "any") and char_visible("any", "0")
    assert char_visible("0", "0") and not char_visible("3", "0")
    assert char_visible("3", "p") and char_visible("p!=3", "p") and not char_visible("0", "p")


# ---------------------------------------------------------------- commands


def test_kernel_identity_is_empty(mfile):
    doc, code = json_run(["kernel", mfile([[1, 0, 0], [0, 1, 0], [0, 0, 1]])])
    assert code == 0 and doc["status"] == "ok"
    assert doc["computed"]["integer_kernel_basis"] == []
    assert doc["computed"]["height"] == 0


def test_matrix_commands(mfile):
    path = mfile([[3, 2, 1, 0], [0, 1, 2, 3]])
    for cmd in ("kernel", "circuits", "graver", "markov", "gamma", "delta", "bar-bounds", "split"):
        doc, code = json_run([cmd, path])
        assert code == 0, (cmd, doc["notes"])
        assert doc["command"] == cmd
    doc, _ = json_run(["markov", path])
    assert doc["computed"]["mu"] == 3


def test_input_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.matrix"
    bad.write_text("matrix 2 2\n1 2\n3 x\n")
    assert main(["kernel", str(bad)]) == 2
    err = capsys.readouterr().err
    assert ":3:3:" in err
    doc, code = json_run(["kernel", str(bad)])
    assert code == 2 and doc["error"]["line"] == 3 and doc["error"]["column"] == 3


def test_missing_file_and_unpointed(tmp_path, mfile):
    assert run(["kernel", str(tmp_path / "none.matrix")])[1] == 2
    assert run(["markov", mfile([[1, -1, 0]])])[1] == 2


def test_budget_exhaustion(mfile):
    doc, code = json_run(["graver", mfile([[1, 1, 1, 1], [0, 2, 3, 5]]), "--budget", "1"])
    assert code == 3 and doc["status"] == "budget_exhausted"
    assert any("budget" in n for n in doc["notes"])


def test_split_catalogued_example(mfile):
    doc, code = json_run(["split", mfile(EX28, "ex2_8.matrix"), "--budget", "1000000"])
    assert code == 0
    text = json.dumps(doc)
    assert '"r": 2' in text


def test_graph_commands(tmp_path):
    p = tmp_path / "k33.graph"
    p.write_text(format_graph(BipartiteGraph.complete(3, 3)))
    doc, code = json_run(["graph-gens", str(p)])
    assert code == 0 and len(doc["computed"]["generators"]) == 9
    doc, code = json_run(["kmn-split", "3", "3"])
    assert code == 0 and doc["computed"]["counts"] == [3, 3, 3]


@pytest.mark.parametrize(
    "argv",
    [
        ["family", "symmetric-curve", "2", "3"],
        ["family", "lawrence", "2", "3"],
        ["family", "cyclic", "2"],
        ["family", "catalogue", "ex4_4"],
    ],
)
def test_family(argv):
    doc, code = json_run(argv)
    assert code == 0, doc["notes"]
    assert doc["comparisons"]


def test_family_bad_params():
    assert run(["family", "symmetric-curve", "3"])[1] == 2
    assert run(["family", "catalogue", "nope"])[1] == 2


def test_json_is_deterministic_and_round_trips(mfile, tmp_path):
    path = mfile([[2, 1, 2, 0], [3, 0, 2, 5]])
    outs = []
    for k in range(2):
        out = tmp_path / f"r{k}.json"
        assert main(["split", path, "--format", "json", "--out", str(out)]) == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]
    assert outs[0].endswith(b"\n")
    rep = Report.from_json(outs[0].decode())
    assert rep.to_json().encode() == outs[0]


def _leaves(node):
    if isinstance(node, dict):
        for v in node.values():
            yield from _leaves(v)
    elif isinstance(node, list):
        for v in node:
            yield from _leaves(v)
    elif isinstance(node, int) and not isinstance(node, bool):
        yield node


def test_text_and_json_carry_the_same_numbers(mfile):
    path = mfile([[2, 1, 2, 0], [3, 0, 2, 5]])
    report, _ = run(["bar-bounds", path])
    text = report.to_text()
    for x in _leaves(report.doc):
        assert str(x) in text


def test_verify_paper_budget_one():
    report, code = run(["verify-paper", "--budget", "1"])
    assert code == 3 and report["status"] == "budget_exhausted"
    assert report["notes"]


def test_verify_paper_perturbed_catalogue(tmp_path):
    cat = load_catalogue()
    cat = json.loads(json.dumps(cat))
    for v in cat["examples"]["ex4_5"]["values"]:
        if v["quantity"] == "delta01":
            v["value"] += 1
    p = tmp_path / "cat.json"
    p.write_text(json.dumps(cat))
    report, code = run(["verify-paper", "--catalogue", str(p)])
    assert code == 1
    assert any("delta01: computed 2, catalogue 4" in n for n in report["notes"])


def test_verify_paper_bad_catalogue(tmp_path):
    p = tmp_path / "cat.json"
    p.write_text("{not json")
    assert run(["verify-paper", "--catalogue", str(p)])[1] == 2


def test_module_entry_point(mfile):
    path = mfile([[1, 0], [0, 1]])
    proc = subprocess.run([sys.executable, "-m", "toricsplit", "kernel", path, "--format", "json"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["command"] == "kernel"

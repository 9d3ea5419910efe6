import io
import json
from pathlib import Path
from typing import Any, Dict, List

import pytest

from flowpart import Falsified, SignedGraph, chorded_circuit, flow_star
from flowpart.cli import EXIT_FALSIFIED, EXIT_LIMIT, EXIT_OK, EXIT_USAGE, main, run
from flowpart.report import input_digest

S3_TEXT = "0 1 +\n0 2 +\n0 3 +\n1 2 -\n2 3 -\n3 1 -\n"


@pytest.fixture()
def s3_file(tmp_path: Path) -> Path:
    """Write S3 into a file."""
    path = tmp_path / "s3.txt"
    path.write_text(S3_TEXT)
    return path


def _payload(argv: List[str]) -> Dict[str, Any]:
    status, output = run(argv)
    assert status == EXIT_OK
    return json.loads(output)["payload"]


def test_gen_writes_a_graph() -> None:
    status, output = run(["gen", "flow-star", "3"])
    assert status == EXIT_OK
    assert output == S3_TEXT
    assert SignedGraph.parse(output) == flow_star(3)
    status, output = run(["gen", "chorded-8-3"])
    assert status == EXIT_OK
    assert SignedGraph.parse(output) == chorded_circuit(8, 3)


def test_envelope(s3_file: Path) -> None:
    status, output = run(["flows", str(s3_file)])
    assert status == EXIT_OK
    result = json.loads(output)
    assert result["command"] == "flows"
    assert result["input_digest"] == input_digest(S3_TEXT)
    assert result["payload"]["count"] == 3
    first = result["payload"]["flows"][0]
    assert first == {"negative_edge": 3, "positive_edges": [0, 1]}
    assert result["limits"]["max_flows"] == 10**6
    assert isinstance(result["wall_time_ms"], int)


def test_reads_stdin(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr("sys.stdin", io.StringIO(S3_TEXT))
    assert _payload(["balance"]) == {"balanced": False, "weakly_balanced": False}


def test_clustering_commands(s3_file: Path) -> None:
    solved = _payload(["solve", str(s3_file)])
    assert solved["value"] == "2/1"
    assert solved["lp_value"] == "3/2"
    brute = _payload(["solve", "--brute-force", str(s3_file)])
    assert brute["partition"]["labels"] == [0, 0, 0, 1]
    assert _payload(["lp", str(s3_file)])["value"] == "3/2"
    partitionable = _payload(["partitionable", str(s3_file)])
    assert partitionable["partitionable"] is False
    assert partitionable["witness"]["0"] == "1/2"


def test_weighted_input(tmp_path: Path) -> None:
    path = tmp_path / "weighted.txt"
    path.write_text("0 1 + 1/2\n1 2 + 1\n0 2 - 3\n")
    assert _payload(["solve", str(path)])["value"] == "1/2"


def test_clutter_commands(s3_file: Path) -> None:
    assert _payload(["ideal", str(s3_file)])["ideal"] is False
    bases = ["ideal", "--family", "circulant", "4", "2", "--method", "bases"]
    assert _payload(bases)["ideal"] is True
    assert _payload(["mni", "--family", "fano"]) == {"mni": True}
    report = _payload(["lehman", "--family", "circulant", "8", "3"])
    assert (report["n"], report["c"], report["b"], report["excess"]) == (8, 3, 3, 2)
    assert report["pass"] is True
    blocker = _payload(["blocker", "--family", "circulant", "5", "2"])["blocker"]
    assert len(blocker["members"]) == 5


def test_clutter_file(tmp_path: Path) -> None:
    path = tmp_path / "hole.txt"
    path.write_text("ground: 0 1 2 3 4\n0 1\n1 2\n2 3\n3 4\n0 4\n")
    assert _payload(["mni", "--clutter", str(path)]) == {"mni": True}


def test_graph_commands(s3_file: Path) -> None:
    assert _payload(["weakly-mni", str(s3_file)])["verdict"] is True
    paths = _payload(["terminal-paths", str(s3_file)])
    assert paths["clutter"]["members"] == [[0, 1], [0, 2], [1, 2]]
    detected = _payload(["detect", "star", str(s3_file)])
    assert sorted(detected) == ["found", "witness"]
    assert detected["found"] is True
    assert detected["witness"]["k"] == 3
    split = _payload(["detect", "split-k5", str(s3_file)])
    assert split == {"found": False, "witness": None}
    assert _payload(["fatcore", str(s3_file)])["branch"] == "all-negatives-zero"


@pytest.mark.parametrize("family", ["star", "circuit", "split-k5"])
def test_detect_payload_keys(tmp_path: Path, c5: SignedGraph, family: str) -> None:
    path = tmp_path / "c5.txt"
    path.write_text(c5.dumps())
    detected = _payload(["detect", family, str(path)])
    assert sorted(detected) == ["found", "witness"]
    if family != "star":
        assert detected["found"] is (family == "circuit")


def test_minor(s3_file: Path) -> None:
    status, output = run(["minor", str(s3_file), "--ops", "d5,c0"])
    assert status == EXIT_OK
    assert SignedGraph.parse(output).edge_ids == (1, 2, 3, 4)


def test_check_and_experiment() -> None:
    counts = _payload(["check", "series-parallel", "--count", "5"])["counts"]
    assert sum(counts.values()) == 5
    experiment = _payload(["experiment", "planar", "--seed", "4", "--count", "3"])
    assert experiment["seed"] == 4


def test_pretty(s3_file: Path) -> None:
    status, output = run(["lp", str(s3_file), "--pretty"])
    assert status == EXIT_OK
    assert "value: 3/2" in output.splitlines()
    assert run(["lp", str(s3_file), "--format", "pretty"]) == (status, output)
    _, as_json = run(["lp", str(s3_file), "--format", "json"])
    assert json.loads(as_json)["payload"]["value"] == "3/2"


@pytest.mark.parametrize(
    "argv",
    [
        ["gen", "nope"],
        ["gen", "flow-star", "x"],
        ["gen", "flow-star", "2"],
        ["flows", "/nonexistent/graph.txt"],
        ["minor", "--ops", "x1", "/nonexistent/graph.txt"],
        ["ideal", "--family", "nope"],
    ],
)
def test_usage_errors(argv: List[str]) -> None:
    assert run(argv)[0] == EXIT_USAGE


def test_parse_errors(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    path = tmp_path / "bad.txt"
    path.write_text("0 1 x\n")
    assert run(["flows", str(path)]) == (EXIT_USAGE, "")
    assert capsys.readouterr().err.startswith("flowpart: ")


def test_weight_parse_errors(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    path = tmp_path / "zero.txt"
    path.write_text("0 1 + 1/0\n1 2 +\n0 2 -\n")
    assert run(["solve", str(path)]) == (EXIT_USAGE, "")
    assert "line 1: invalid weight" in capsys.readouterr().err


def test_limit_exceeded(capsys: pytest.CaptureFixture) -> None:
    status, output = run(
        ["ideal", "--family", "circulant", "8", "3", "--max-ground", "4"]
    )
    assert (status, output) == (EXIT_LIMIT, "")
    assert "max_vertex_ground" in capsys.readouterr().err


def test_falsified(
    s3_file: Path, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture
) -> None:
    def contradiction(*args: object, **kwargs: object) -> None:
        raise Falsified("contradiction", {"graph": S3_TEXT})

    monkeypatch.setattr("flowpart.cli.fat_core_pipeline", contradiction)
    assert run(["fatcore", str(s3_file)]) == (EXIT_FALSIFIED, "")
    err = capsys.readouterr().err.splitlines()
    assert err[0] == "flowpart: contradiction"
    assert json.loads(err[1]) == {"graph": S3_TEXT}


def test_main(capsys: pytest.CaptureFixture) -> None:
    assert main(["gen", "flow-circuit", "3"]) == EXIT_OK
    assert capsys.readouterr().out.count("\n") == 6

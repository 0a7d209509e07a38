import csv
import io
import json
import subprocess
import sys

import pytest

from spantruss import miner
from spantruss.cli import main

FIXTURE = "# triangle at t=0,1 then a lone edge\n0 1 0\n1 2 0\n0 2 0\n0 1 1\n2 1 1\n0 2 1\n1 0 2\n"


@pytest.fixture
def dataset(tmp_path):
    p = tmp_path / "tri.snap"
    p.write_text(FIXTURE)
    return str(p)


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def lines(text):
    return [json.loads(x) for x in text.splitlines()]


class TestMine:
    def test_streaming(self, dataset):
        code, out = run(["mine", "--input", dataset, "--format", "snap", "--algo", "streaming"])
        assert code == 0
        assert lines(out) == [
            {"k": 2, "t_start": 0, "t_end": 2, "num_edges": 1},
            {"k": 3, "t_start": 0, "t_end": 1, "num_edges": 3},
        ]

    def test_min_k(self, dataset):
        code, out = run(["mine", "--input", dataset, "--format", "snap", "--min-k", "3"])
        assert code == 0
        assert [r["k"] for r in lines(out)] == [3]

    def test_emit_edges(self, dataset):
        _, out = run(["mine", "--input", dataset, "--format", "snap", "--emit-edges", "--paranoid"])
        assert lines(out)[1]["edges"] == [[0, 1], [0, 2], [1, 2]]

    def test_labels_in_output(self, tmp_path):
        p = tmp_path / "x.csv"
        p.write_text("u,v,timestamp\nann,bob,0\nbob,cat,0\ncat,ann,0\n")
        _, out = run(["mine", "--input", str(p), "--format", "csv", "--emit-edges"])
        assert lines(out) == [
            {"k": 3, "t_start": 0, "t_end": 0, "num_edges": 3,
             "edges": [["ann", "bob"], ["ann", "cat"], ["bob", "cat"]]}
        ]

    def test_deterministic(self, dataset):
        argv = ["mine", "--input", dataset, "--format", "snap", "--emit-edges"]
        assert run(argv)[1] == run(argv)[1]

    def test_empty_dataset(self, tmp_path, capsys):
        p = tmp_path / "empty.snap"
        p.write_text("# nothing\n")
        code, out = run(["mine", "--input", str(p), "--format", "snap"])
        assert code == 1 and out == ""
        assert "empty graph" in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        assert run(["mine", "--input", str(tmp_path / "nope"), "--format", "snap"])[0] == 1

    def test_parse_error(self, tmp_path, capsys):
        p = tmp_path / "bad.snap"
        p.write_text("1 2 3\n3 x 5\n")
        assert run(["mine", "--input", str(p), "--format", "snap"])[0] == 1
        assert "line 2" in capsys.readouterr().err

    @pytest.mark.parametrize("argv", [
        ["mine", "--format", "snap"],
        ["mine", "--input", "x", "--algo", "quantum"],
        ["mine", "--input", "x", "--window-seconds", "0"],
        ["bench", "--input", "x", "--algos", "baseline,nope"],
        ["frobnicate"],
    ])
    def test_usage_errors(self, argv):
        with pytest.raises(SystemExit) as ei:
            main(argv, out=io.StringIO())
        assert ei.value.code == 2

    def test_tgraph_input(self, dataset, tmp_path):
        from spantruss.ingest import IngestConfig, load_dataset, save_graph

        g = load_dataset(dataset, IngestConfig(format="snap"))
        p = tmp_path / "g.json"
        with open(p, "w") as fh:
            save_graph(g, fh)
        assert run(["mine", "--input", str(p), "--format", "tgraph"])[1] == \
            run(["mine", "--input", dataset, "--format", "snap"])[1]


class TestBench:
    def test_three_strategies(self, dataset):
        code, out = run(["bench", "--input", dataset, "--format", "snap"])
        assert code == 0
        reports = lines(out)
        assert [r["algorithm"] for r in reports] == ["baseline", "streaming", "heuristic"]
        assert {r["result_count"] for r in reports} == {2}
        assert all(r["wall_time_seconds"] >= 0 for r in reports)
        assert reports[0]["skip_count"] is None and reports[2]["skip_count"] >= 0
        assert reports[0]["dataset"] == "tri.snap"

    def test_single(self, dataset):
        code, out = run(["bench", "--input", dataset, "--format", "snap", "--algos", "naive"])
        assert code == 0 and len(lines(out)) == 1

    def test_csv_output(self, dataset):
        code, out = run(["bench", "--input", dataset, "--format", "snap", "--output", "csv",
                         "--algos", "naive,heuristic", "--dataset-name", "tri"])
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == 0 and [r["algorithm"] for r in rows] == ["naive", "heuristic"]
        assert rows[0]["dataset"] == "tri" and rows[0]["result_count"] == "2"

    def test_mismatch_exit_3(self, dataset, monkeypatch, capsys):
        def corrupted(g, stats=None):
            return miner.mine_streaming(g, stats=stats)[1:]

        monkeypatch.setitem(miner.MINERS, "streaming", corrupted)
        code, out = run(["bench", "--input", dataset, "--format", "snap"])
        assert code == 3
        assert len(lines(out)) == 3
        assert "different" in capsys.readouterr().err


class TestDecompose:
    def test_triangle_interval(self, dataset):
        code, out = run(["decompose", "--input", dataset, "--format", "snap", "--t-start", "0", "--t-end", "1"])
        rec = lines(out)[0]
        assert code == 0 and rec["innermost"] == 3
        assert [e["trussness"] for e in rec["edges"]] == [3, 3, 3]

    def test_long_interval(self, dataset):
        _, out = run(["decompose", "--input", dataset, "--format", "snap", "--t-start", "0", "--t-end", "2"])
        assert lines(out)[0]["edges"] == [{"u": 0, "v": 1, "trussness": 2}]

    def test_inactive_timestamp(self, tmp_path, capsys):
        p = tmp_path / "gap.snap"
        p.write_text("0 1 0\n0 1 2\n")
        code, out = run(["decompose", "--input", str(p), "--format", "snap", "--t-start", "0", "--t-end", "2"])
        assert code == 0 and lines(out)[0]["edges"] == [] and lines(out)[0]["innermost"] is None
        assert "notice" in capsys.readouterr().err

    def test_out_of_domain(self, dataset):
        code, _ = run(["decompose", "--input", dataset, "--format", "snap", "--t-start", "1", "--t-end", "9"])
        assert code == 1


def test_module_entry_point(dataset):
    proc = subprocess.run(
        [sys.executable, "-m", "spantruss", "mine", "--input", dataset, "--format", "snap", "--min-k", "3"],
        capture_output=True, text=True, check=True,
    )
    assert lines(proc.stdout) == [{"k": 3, "t_start": 0, "t_end": 1, "num_edges": 3}]

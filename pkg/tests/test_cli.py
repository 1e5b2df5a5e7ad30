import json
import subprocess
import sys

from rainbowtrees.cli import main


def run_cli(argv, capsys=None):
    """Invoke the CLI in-process; argparse usage errors surface as SystemExit."""
    try:
        return main(argv)
    except SystemExit as exc:
        return exc.code


def test_end_to_end_pipeline(tmp_path, capsys):
    col = tmp_path / "c.json"
    forest = tmp_path / "f.json"
    trace = tmp_path / "t.jsonl"
    assert run_cli(["gen", "--m", "5", "--scheme", "round-robin", "-o", str(col)]) == 0
    assert run_cli(["build", "-i", str(col), "-o", str(forest), "--trace", str(trace)]) == 0
    assert run_cli(["verify", "-i", str(col), "-f", str(forest), "-t", str(trace)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["verdict"] == "pass"
    assert report["tree_count"] == 2


def test_verify_without_trace(tmp_path, capsys):
    col = tmp_path / "c.json"
    forest = tmp_path / "f.json"
    assert run_cli(["gen", "--m", "7", "-o", str(col)]) == 0
    assert run_cli(["build", "-i", str(col), "-o", str(forest)]) == 0
    assert run_cli(["verify", "-i", str(col), "-f", str(forest)]) == 0
    assert json.loads(capsys.readouterr().out)["trace_bounds"] is None


def test_gen_m_zero_is_usage_error():
    assert run_cli(["gen", "--m", "0"]) == 2


def test_gen_rejects_unknown_scheme():
    assert run_cli(["gen", "--m", "3", "--scheme", "fancy"]) == 2


def test_missing_input_file_is_input_error(tmp_path):
    assert run_cli(["build", "-i", str(tmp_path / "nope.json"), "-o", str(tmp_path / "f.json")]) == 2


def test_malformed_coloring_is_input_error(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{broken")
    assert run_cli(["build", "-i", str(bad), "-o", str(tmp_path / "f.json")]) == 2
    improper = tmp_path / "improper.json"
    improper.write_text(json.dumps({"n": 5, "edges": []}))
    assert run_cli(["build", "-i", str(improper), "-o", str(tmp_path / "f.json")]) == 2


def test_verify_corrupted_forest_exits_one(tmp_path, capsys):
    col = tmp_path / "c.json"
    forest = tmp_path / "f.json"
    run_cli(["gen", "--m", "5", "-o", str(col)])
    run_cli(["build", "-i", str(col), "-o", str(forest)])
    doc = json.loads(forest.read_text())
    del doc["trees"][0]["edges"][0]  # deleted edge
    forest.write_text(json.dumps(doc))
    assert run_cli(["verify", "-i", str(col), "-f", str(forest)]) == 1
    assert json.loads(capsys.readouterr().out)["verdict"] == "fail"


def test_determinism_identical_bytes(tmp_path):
    paths = []
    for tag in ("one", "two"):
        col = tmp_path / f"c-{tag}.json"
        forest = tmp_path / f"f-{tag}.json"
        trace = tmp_path / f"t-{tag}.jsonl"
        assert run_cli(["gen", "--m", "9", "--permute-seed", "17", "-o", str(col)]) == 0
        assert (
            run_cli(
                [
                    "build",
                    "-i",
                    str(col),
                    "-o",
                    str(forest),
                    "--policy",
                    "random",
                    "--seed",
                    "23",
                    "--trace",
                    str(trace),
                ]
            )
            == 0
        )
        paths.append((col.read_bytes(), forest.read_bytes(), trace.read_bytes()))
    assert paths[0] == paths[1]


def test_policies_accepted(tmp_path):
    col = tmp_path / "c.json"
    run_cli(["gen", "--m", "6", "-o", str(col)])
    for policy in ("min", "max"):
        assert run_cli(["build", "-i", str(col), "-o", str(tmp_path / f"{policy}.json"), "--policy", policy]) == 0
    assert (
        run_cli(
            ["build", "-i", str(col), "-o", str(tmp_path / "r.json"), "--policy", "random", "--seed", "3"]
        )
        == 0
    )


def test_oracle_subcommand(tmp_path, capsys):
    col = tmp_path / "c.json"
    run_cli(["gen", "--m", "2", "-o", str(col)])
    assert run_cli(["oracle", "-i", str(col)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out == {"count": 4, "max_disjoint": 1}


def test_oracle_cap_exceeded(tmp_path):
    col = tmp_path / "c.json"
    run_cli(["gen", "--m", "5", "-o", str(col)])
    assert run_cli(["oracle", "-i", str(col)]) == 2  # n = 10 exceeds the packing cap
    assert run_cli(["oracle", "-i", str(col), "--cap", "4"]) == 2


def test_bench_csv(tmp_path):
    out = tmp_path / "bench.csv"
    assert run_cli(["bench", "--m-from", "1", "--m-to", "6", "--reps", "2", "--csv", str(out)]) == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "m,omega,trees_built,build_micros,verify_pass,min_candidate_slack"
    assert len(lines) == 7
    row5 = lines[5].split(",")
    assert row5[0] == "5" and row5[1] == "2" and row5[2] == "2" and row5[4] == "true"
    assert row5[5] != ""
    row1 = lines[1].split(",")
    assert row1[1] == "1" and row1[5] == ""


def test_bench_bad_range():
    assert run_cli(["bench", "--m-from", "5", "--m-to", "3"]) == 2


def test_internal_invariant_exits_three_and_dumps_trace(tmp_path, monkeypatch, capsys):
    import rainbowtrees.cli as cli_mod
    from rainbowtrees import ConstructionTrace
    from rainbowtrees.errors import EmptyCandidateSet

    col = tmp_path / "c.json"
    run_cli(["gen", "--m", "5", "-o", str(col)])

    def boom(coloring, policy, trace_on):
        exc = EmptyCandidateSet("synthetic failure")
        exc.trace = ConstructionTrace(m=coloring.m)
        raise exc

    monkeypatch.setattr(cli_mod, "build_forest", boom)
    trace_path = tmp_path / "dump.jsonl"
    code = run_cli(
        ["build", "-i", str(col), "-o", str(tmp_path / "f.json"), "--trace", str(trace_path)]
    )
    assert code == 3
    err = capsys.readouterr().err
    assert "internal invariant violated" in err
    assert str(trace_path) in err
    assert trace_path.exists()


def test_python_dash_m_entry(tmp_path):
    col = tmp_path / "c.json"
    proc = subprocess.run(
        [sys.executable, "-m", "rainbowtrees", "gen", "--m", "3", "-o", str(col)],
        capture_output=True,
    )
    assert proc.returncode == 0
    assert json.loads(col.read_text())["n"] == 6

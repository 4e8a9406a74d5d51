import json

import pytest

from multisubset import make_ring, robinson_count, sum_acyclic_digraphs
from multisubset.cli import main
from multisubset.jsonio import load_json, weight_system_from_dict


def run_cli(*argv):
    return main(list(argv))


def gen_family(tmp_path, n, seed=0, ring="modp"):
    path = tmp_path / f"fam_{n}_{seed}_{ring}.json"
    assert run_cli("gen", "--kind", "family", "--n", str(n), "--seed", str(seed),
                   "--ring", ring, "--output", str(path)) == 0
    return path


def test_gen_then_transform_all_algorithms_agree(tmp_path):
    fam = gen_family(tmp_path, 7)
    outputs = []
    for algo in ["naive", "columns", "rows-columns", "cover"]:
        out = tmp_path / f"g_{algo}.json"
        assert run_cli("mst", "--input", str(fam), "--algo", algo,
                       "--output", str(out)) == 0
        outputs.append(out.read_bytes())
    assert len(set(outputs)) == 1  # byte-identical across algorithms


def test_mst_stdout(tmp_path, capsys):
    fam = gen_family(tmp_path, 3)
    assert run_cli("mst", "--input", str(fam)) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["n"] == 3
    assert len(payload["values"]) == 8


def test_count_ops_sidecar(tmp_path):
    fam = gen_family(tmp_path, 5)
    out = tmp_path / "g.json"
    assert run_cli("mst", "--input", str(fam), "--algo", "naive",
                   "--count-ops", "--output", str(out)) == 0
    sidecar = load_json(str(out) + ".counts.json")
    assert set(sidecar) == {"adds", "muls", "pair_iterations"}
    assert sidecar["pair_iterations"] == 3**5
    assert sidecar["adds"] > 0 and sidecar["muls"] > 0


def test_count_ops_requires_output(tmp_path):
    fam = gen_family(tmp_path, 3)
    assert run_cli("mst", "--input", str(fam), "--count-ops") == 2


def test_missing_and_malformed_input(tmp_path):
    assert run_cli("mst", "--input", str(tmp_path / "nope.json")) == 3
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run_cli("mst", "--input", str(bad)) == 3


def test_wrong_shape_is_validation_error(tmp_path):
    fam = tmp_path / "fam.json"
    fam.write_text(json.dumps({"n": 2, "functions": [["1", "2", "3", "4"]]}))
    assert run_cli("mst", "--input", str(fam)) == 2


def test_unknown_choice_exits_via_argparse(tmp_path):
    fam = gen_family(tmp_path, 3)
    with pytest.raises(SystemExit) as exc:
        run_cli("mst", "--input", str(fam), "--algo", "bogus")
    assert exc.value.code == 2


def test_f64_ring_roundtrip(tmp_path, capsys):
    fam = gen_family(tmp_path, 4, ring="f64")
    assert run_cli("mst", "--input", str(fam), "--ring", "f64") == 0
    payload = json.loads(capsys.readouterr().out)
    assert all(isinstance(v, float) for v in payload["values"])


def test_custom_prime(tmp_path, capsys):
    fam = gen_family(tmp_path, 3)
    assert run_cli("mst", "--input", str(fam), "--p", "97") == 0
    payload = json.loads(capsys.readouterr().out)
    assert all(0 <= int(v) < 97 for v in payload["values"])


def test_p_flag_rejected_for_f64(tmp_path):
    fam = gen_family(tmp_path, 3, ring="f64")
    assert run_cli("mst", "--input", str(fam), "--ring", "f64", "--p", "97") == 2


def test_dag_sum_matches_library(tmp_path, capsys):
    weights = tmp_path / "w.json"
    assert run_cli("gen", "--kind", "weights", "--n", "4", "--seed", "9",
                   "--output", str(weights)) == 0
    table = tmp_path / "a.json"
    assert run_cli("dag-sum", "--weights", str(weights), "--algo", "columns",
                   "--output", str(table)) == 0
    printed = capsys.readouterr().out.strip()
    ring = make_ring("modp")
    wsys = weight_system_from_dict(ring, load_json(str(weights)))
    expected = sum_acyclic_digraphs(wsys, "naive")
    assert int(printed) == expected.total
    stored = load_json(str(table))
    assert [int(v) for v in stored["values"]] == expected.a


def test_dag_count(capsys):
    assert run_cli("dag-count", "--n", "5") == 0
    assert capsys.readouterr().out.strip() == str(robinson_count(5)) == "29281"


def test_cover_command(tmp_path):
    out = tmp_path / "cover.json"
    assert run_cli("cover", "--v", "4", "--k", "3", "--s", "2",
                   "--output", str(out)) == 0
    design = load_json(str(out))
    assert design["v"] == 4 and len(design["blocks"]) == 3
    assert run_cli("cover", "--v", "3", "--k", "5", "--s", "1") == 2


def test_optimize_paper_mode_is_line(tmp_path):
    out = tmp_path / "report.json"
    assert run_cli("optimize", "--target", "columns", "--mode", "paper",
                   "--output", str(out)) == 0
    report = load_json(str(out))
    assert report["mode"] == "line"
    assert abs(report["base"] - 2.994) < 1e-3
    assert abs(report["parameters"]["sigma"] - 0.3642045) < 1e-4


def test_optimize_rows_columns_cli(tmp_path):
    out = tmp_path / "rc.json"
    assert run_cli("optimize", "--target", "rows-columns", "--output", str(out)) == 0
    report = load_json(str(out))
    assert abs(report["parameters"]["tau"] - 0.59777) < 1e-3
    assert abs(report["base"] - 2.985) < 1e-3


def test_optimize_with_custom_omega_table(tmp_path):
    table = tmp_path / "omega.json"
    table.write_text(json.dumps({"anchors": [[0, 2.0], [1, 2.38], [1.8, 3.1]]}))
    out = tmp_path / "report.json"
    assert run_cli("optimize", "--target", "columns", "--mode", "table",
                   "--omega-table", str(table), "--output", str(out)) == 0
    assert load_json(str(out))["mode"] == "table"
    # a table whose product term dominates everywhere is a clean input error
    degenerate = tmp_path / "degenerate.json"
    degenerate.write_text(json.dumps({"anchors": [[0, 2.0], [2, 4.0]]}))
    assert run_cli("optimize", "--target", "columns", "--mode", "table",
                   "--omega-table", str(degenerate)) == 2


def test_bench_csv(tmp_path):
    out = tmp_path / "bench.csv"
    assert run_cli("bench", "--min-n", "2", "--max-n", "4",
                   "--algos", "naive,cover", "--seeds", "2",
                   "--threads", "2", "--output", str(out)) == 0
    lines = out.read_text().strip().split("\n")
    assert lines[0].startswith("algo,n,seed,sigma,tau,backend,ring,")
    assert len(lines) == 1 + 2 * 3 * 2
    for line in lines[1:]:
        fields = line.split(",")
        assert fields[9] == fields[10] or fields[0] == "cover"  # measured == predicted


def test_gen_deterministic(tmp_path):
    a = gen_family(tmp_path, 4, seed=5)
    b_path = tmp_path / "again.json"
    assert run_cli("gen", "--kind", "family", "--n", "4", "--seed", "5",
                   "--output", str(b_path)) == 0
    assert a.read_bytes() == b_path.read_bytes()

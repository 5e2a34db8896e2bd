import json
import subprocess
import sys

import pytest

from mfk.cli import JobSpec, build_parser, main, run


def _run_cli(args, cwd=None):
    return subprocess.run([sys.executable, "-m", "mfk.cli", *args],
                          capture_output=True, text=True, cwd=cwd)


@pytest.fixture()
def dela3_matrix_file(tmp_path):
    path = tmp_path / "delA3.json"
    path.write_text(json.dumps({
        "rows": 3, "cols": 5,
        "entries": [["1", "0", "0", "1", "1"],
                    ["0", "1", "0", "-1", "0"],
                    ["0", "0", "1", "0", "-1"]]}))
    return str(path)


def test_polytope_subcommand(dela3_matrix_file, capsys):
    status = main(["polytope", "--matrix", dela3_matrix_file])
    assert status == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["f_vector"][:4] == [8, 18, 17, 7]


def test_matroid_subcommand_bases_file(tmp_path, capsys):
    path = tmp_path / "m.json"
    path.write_text(json.dumps(
        {"n": 3, "bases": [[1, 2], [1, 3], [2, 3]]}))
    assert main(["matroid", "--bases", str(path)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"n": 3, "bases": [[1, 2], [1, 3], [2, 3]]}


def test_graph_subcommand(tmp_path, capsys):
    path = tmp_path / "g.json"
    path.write_text(json.dumps(
        {"vertices": 3, "edges": [[1, 2], [1, 3], [2, 3]]}))
    assert main(["matroid", "--graph", str(path)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["bases"] == [[1, 2], [1, 3], [2, 3]]


def test_bergman_subcommand_rays(capsys):
    assert main(["bergman", "--uniform", "2", "4"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["rays"] == [[0, 0, 0, 1], [0, 0, 1, 0],
                               [0, 1, 0, 0], [1, 0, 0, 0]]


def test_bergman_grid_flag(capsys):
    assert main(["bergman", "--uniform", "2", "4", "--grid", "2"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["support_grid_radius"] == 2
    assert payload["support_grid_agrees"] is True


def test_degenerate_subcommand(capsys):
    assert main(["degenerate", "--uniform", "2", "4", "--u", "1,0,0,0"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["loop_free"] is False
    assert payload["matroid_u"]["bases"] == [[2, 3], [2, 4], [3, 4]]


def test_compare_fans_subcommand(capsys):
    assert main(["compare-fans", "--corpus", "delA3"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["refines_ab"] is True
    assert payload["refines_ba"] is False
    assert payload["equal"] is False
    assert payload["witness"]


def test_nested_subcommand_building_file(tmp_path, capsys):
    flats = [[1], [2], [3], [4], [5], [1, 2, 4], [1, 3, 5], [1, 2, 3, 4, 5]]
    path = tmp_path / "building.json"
    path.write_text(json.dumps(flats))
    assert main(["nested", "--corpus", "delA3",
                 "--building", str(path)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["rays"]) == 7


def test_nested_invalid_building_errors(tmp_path, capsys):
    path = tmp_path / "building.json"
    path.write_text(json.dumps([[1], [2], [3], [4], [5], [1, 3, 5],
                                [1, 2, 3, 4, 5]]))
    status = main(["nested", "--corpus", "delA3", "--building", str(path)])
    assert status == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["error"] == "InvalidBuildingSet"


def test_circuits_subcommand(capsys):
    assert main(["circuits", "--uniform", "2", "5"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["generators"]) == 10


def test_circuits_without_realization_errors(tmp_path, capsys):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"n": 3, "bases": [[1, 2], [1, 3], [2, 3]]}))
    status = main(["circuits", "--bases", str(path)])
    assert status == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["error"] == "MfkError"


def test_amoeba_subcommand_deterministic(tmp_path):
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    for out in (out1, out2):
        assert main(["amoeba", "--corpus", "u23", "--t", "1000",
                     "--count", "40", "--seed", "11",
                     "--output", str(out)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    payload = json.loads(out1.read_text())
    assert payload["count"] == 40
    assert payload["max_deviation"] < 0.15


def test_corpus_list(capsys):
    assert main(["corpus", "list"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert "delA3" in payload["corpus"]


def test_unknown_corpus_errors(capsys):
    assert main(["matroid", "--corpus", "nope"]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["error"] == "UnknownName"


def test_usage_error_exit_two():
    result = _run_cli(["polytope"])
    assert result.returncode == 2


def test_conflicting_inputs_exit_two():
    result = _run_cli(["matroid", "--uniform", "2", "4", "--corpus", "u24"])
    assert result.returncode == 2


def test_missing_command_exit_two():
    result = _run_cli([])
    assert result.returncode == 2


def test_output_file_atomic_write(tmp_path, dela3_matrix_file):
    out = tmp_path / "artifact.json"
    assert main(["facets", "--matrix", dela3_matrix_file,
                 "--output", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert len(payload["facets"]) == 7
    assert not list(tmp_path.glob("*.tmp"))


def test_jobspec_run_directly():
    job = JobSpec(computation="matroid", source_kind="uniform",
                  source_value=(2, 4))
    status, artifact = run(job)
    assert status == 0
    assert artifact["n"] == 4


def test_parser_knows_all_subcommands():
    parser = build_parser()
    text = parser.format_help()
    for name in ["matroid", "lattice", "polytope", "facets", "degenerate",
                 "bergman", "nested", "compare-fans", "circuits", "amoeba",
                 "corpus"]:
        assert name in text


def test_lattice_subcommand(capsys):
    assert main(["lattice", "--corpus", "u24"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["mu_top"] == 3
    assert payload["betti_proper_part"] == [3]

import json

from almostcover.cli import main

CUBE2_FILE = "field rational\ndim 2\npoint 0 0\npoint 0 1\npoint 1 0\npoint 1 1\n"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gb_family(capsys):
    code, out, _ = run(capsys, "gb", "--family", "vnk:2:1", "--no-timings")
    assert code == 0
    assert "x1*x2" in out and "x1^2 - x1" in out and "x2^2 - x2" in out
    assert "1, x2, x1" in out


def test_gb_json_structure(capsys):
    code, out, _ = run(capsys, "gb", "--family", "cube:1", "--json", "--no-timings")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["command"] == "gb"
    assert doc["results"]["basis"] == ["x1^2 - x1"]
    assert doc["results"]["standard_monomials"] == ["1", "x1"]
    assert "timings" not in doc


def test_gb_from_file(tmp_path, capsys):
    path = tmp_path / "pts.txt"
    path.write_text("field rational\ndim 2\npoint 0 0\npoint 1 2\npoint 2 1\n")
    code, out, _ = run(capsys, "gb", str(path), "--json", "--no-timings")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["results"]["standard_monomials"]) == 3


def test_json_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "solve", "--family", "cube:3", "--point", "0", "--json", "--no-timings")
    _, second, _ = run(capsys, "solve", "--family", "cube:3", "--point", "0", "--json", "--no-timings")
    assert first == second


def test_bound_count(capsys):
    code, out, _ = run(
        capsys, "bound", "--family", "jnq:2:3", "--method", "count", "--json", "--no-timings"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["count"]["value"] == "2"


def test_bound_cube_method(capsys):
    code, out, _ = run(
        capsys, "bound", "--family", "cube:4", "--method", "cube", "--json", "--no-timings"
    )
    assert code == 0
    assert json.loads(out)["results"]["cube_count"]["value"] == "4"


def test_bound_cert_with_point(capsys):
    code, out, _ = run(
        capsys,
        "bound", "--family", "cube:2", "--method", "cert", "--point", "0",
        "--json", "--no-timings",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["certificate"]["value"] == "2"
    assert doc["results"]["certificate"]["certificate_point"] == ["0", "0"]


def test_bound_all_reports_chain(capsys):
    code, out, _ = run(
        capsys, "bound", "--family", "cube:3", "--method", "all", "--json", "--no-timings"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["ordering_chain"]["holds"] is True
    assert "cor_e" in doc["results"]


def test_bound_cube_rejects_non_01(capsys):
    code, _, err = run(capsys, "bound", "--family", "jnq:2:3", "--method", "cube")
    assert code == 2
    assert "0-1" in err


def test_solve_single_point(capsys):
    code, out, _ = run(
        capsys, "solve", "--family", "cube:3", "--point", "0", "--json", "--no-timings"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["size"] == "3"
    assert doc["results"]["optimal"] is True
    assert len(doc["results"]["hyperplanes"]) == 3


def test_solve_all_ag(capsys):
    code, out, _ = run(
        capsys, "solve", "--family", "ag:2:3", "--all", "--json", "--no-timings"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["ac_max"] == "4" and doc["results"]["ac_min"] == "4"


def test_solve_all_perm_with_symmetry(capsys):
    code, out, _ = run(
        capsys,
        "solve", "--family", "perm:3", "--all", "--symmetry", "--json", "--no-timings",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["ac_max"] == "3"
    assert doc["results"]["transitive"] is True
    assert len(doc["results"]["covers"]) == 1


def test_solve_file_input(tmp_path, capsys):
    path = tmp_path / "cube2.txt"
    path.write_text(CUBE2_FILE)
    code, out, _ = run(capsys, "solve", str(path), "--point", "0", "--json", "--no-timings")
    assert code == 0
    assert json.loads(out)["results"]["size"] == "2"


def test_parse_error_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("field rational\ndim 2\npoint 1\n")
    code, _, err = run(capsys, "gb", str(path))
    assert code == 2
    assert "line 3" in err


def test_missing_input_exit_code(capsys):
    code, _, err = run(capsys, "gb")
    assert code == 2


def test_bad_family_exit_code(capsys):
    code, _, err = run(capsys, "gb", "--family", "vnk:2:9")
    assert code == 2


def test_both_inputs_rejected(tmp_path, capsys):
    path = tmp_path / "pts.txt"
    path.write_text(CUBE2_FILE)
    code, _, err = run(capsys, "gb", str(path), "--family", "cube:2")
    assert code == 2


def test_unknown_suite_exit_code(capsys):
    code, _, err = run(capsys, "verify", "nonsuite")
    assert code == 2
    assert "unknown suite" in err


def test_verify_suite_passes(capsys):
    code, out, _ = run(capsys, "verify", "binomial", "--max-n", "10", "--no-timings")
    assert code == 0
    assert "PASS" in out and "FAIL" not in out


def test_verify_json(capsys):
    code, out, _ = run(
        capsys, "verify", "szw", "--max-n", "3", "--json", "--no-timings"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["failed"] == 0
    assert all(c["passed"] for c in doc["results"]["checks"])


def test_usage_error_exit_code(capsys):
    assert main(["frobnicate"]) == 2
    capsys.readouterr()


# seven planar points whose minimum cover (3) needs actual branching, so a
# one-node budget forces the greedy fallback
BRANCHY_FILE = (
    "field rational\ndim 2\n"
    "point -2 0\npoint -1 2\npoint -1 -2\npoint -2 2\n"
    "point -1 1\npoint 1 -2\npoint 0 -2\n"
)


def test_budget_exhaustion_warns_but_exits_zero(tmp_path, capsys):
    path = tmp_path / "branchy.txt"
    path.write_text(BRANCHY_FILE)
    code, out, _ = run(
        capsys, "solve", str(path), "--point", "2", "--budget", "1",
        "--json", "--no-timings",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["optimal"] is False
    assert "warning" in doc
    # unlimited budget settles the exact value below the greedy answer
    code, out, _ = run(
        capsys, "solve", str(path), "--point", "2", "--budget", "0",
        "--json", "--no-timings",
    )
    doc_exact = json.loads(out)
    assert doc_exact["results"]["optimal"] is True
    assert int(doc_exact["results"]["size"]) < int(doc["results"]["size"])


def test_thread_env_does_not_change_output(monkeypatch, capsys):
    _, baseline, _ = run(capsys, "solve", "--family", "ag:2:2", "--all", "--json", "--no-timings")
    monkeypatch.setenv("ALMOSTCOVER_THREADS", "4")
    _, threaded, _ = run(capsys, "solve", "--family", "ag:2:2", "--all", "--json", "--no-timings")
    assert threaded == baseline

import json

from superroot.cli import main


def _capture(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_validate_text_and_exit(capsys):
    code, out = _capture(capsys, ["validate", "--type", "A(0,1)"])
    assert code == 0
    assert "admissible:     True" in out


def test_validate_matrix_json(capsys):
    raw = json.dumps({"matrix": [[2, -1], [-1, 2]], "parity": [1, 0]})
    code, out = _capture(capsys, ["validate", "--matrix-json", raw])
    assert code == 1  # odd sl2-type row with an odd entry is inadmissible


def test_missing_type_is_usage_error(capsys):
    code = main(["pi-check", "--roots", "[[1,0]]"])
    assert code == 2


def test_pi_check_violation_exit_one(capsys):
    code, out = _capture(capsys, ["pi-check", "--type", "A(0,1)", "--roots", "[[1,0],[1,1]]"])
    assert code == 1
    assert "difference violation" in out


def test_real_roots_json_round_trip(capsys):
    code, out = _capture(
        capsys, ["real-roots", "--type", "A(0,1)", "--height", "4", "--format", "json"]
    )
    assert code == 0
    payload = json.loads(out)
    roots = [tuple(e["root"]) for e in payload["roots"]]
    assert roots == sorted(roots)
    assert set(roots) == {(1, 0), (0, 1), (1, 1), (-1, 0), (0, -1), (-1, -1)}
    flags = {tuple(e["root"]): (e["parity"], e["isotropic"]) for e in payload["roots"]}
    assert flags[(1, 0)] == (1, True)
    assert flags[(0, 1)] == (0, False)
    assert payload["complete_up_to"] == "inf"
    assert payload["version"]


def test_real_roots_rejects_decomposable(capsys):
    raw = json.dumps({"matrix": [[2, 0], [0, 2]], "parity": [0, 0]})
    code = main(["real-roots", "--matrix-json", raw, "--height", "3"])
    assert code == 2


def test_closure_inconclusive_exit_three(capsys):
    # a seed whose closure keeps growing under a tight height bound
    code = main([
        "closure", "--type", "B(1,1)^(1)",
        "--roots", json.dumps([[0, 0, 1], [1, 2, 1]]),
        "--height", "8",
    ])
    assert code == 3


def test_closure_stabilized(capsys):
    code, out = _capture(capsys, [
        "closure", "--type", "A(0,1)", "--roots", "[[1,0],[0,1]]", "--format", "json",
    ])
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "stabilized"
    assert len(payload["roots"]) == 6
    # emitted root sets re-parse to an equal set
    code2, out2 = _capture(capsys, [
        "closure", "--type", "A(0,1)", "--roots", json.dumps(payload["roots"]),
        "--format", "json",
    ])
    assert code2 == 0
    assert json.loads(out2)["roots"] == payload["roots"]


def test_admits_pi_none(capsys):
    roots = json.dumps([[0, 1, 0], [0, -1, 0], [1, 3, 2], [-1, -3, -2]])
    code, out = _capture(capsys, [
        "admits-pi", "--type", "B(1,1)^(1)", "--roots", roots, "--height", "40",
    ])
    assert code == 0
    assert "none" in out


def test_string_output(capsys):
    code, out = _capture(capsys, [
        "string", "--type", "B(1,1)^(1)", "--alpha", "[0,0,1]", "--beta", "[1,2,1]",
    ])
    assert code == 0
    assert "[imaginary]" in out and "[real]" in out


def test_string_sweep_small(capsys):
    code, out = _capture(capsys, [
        "string-sweep", "--type", "B(1,1)", "--height", "6",
    ])
    assert code == 0
    assert "all string laws hold" in out


def test_verify_main_theorem(capsys):
    code, out = _capture(capsys, [
        "verify", "main-theorem", "--type", "B(0,1)", "--sigma", "[[1]]",
    ])
    assert code == 0
    assert "True" in out


def test_verify_bracket_criteria(capsys):
    code, out = _capture(capsys, [
        "verify", "bracket-criteria", "--type", "A(0,1)", "--sigma", "[[1,0],[0,1]]",
    ])
    assert code == 0


def test_replay_examples_exit(capsys):
    code, out = _capture(capsys, ["replay-examples"])
    assert code == 0
    assert out.count("[PASS]") == 3


def test_verify_dynkin(capsys):
    code, out = _capture(capsys, [
        "verify-dynkin", "--type", "A(0,1)", "--sigma", "[[1,0],[0,1]]",
    ])
    assert code == 0


def test_roots_from_file(tmp_path, capsys):
    path = tmp_path / "sigma.json"
    path.write_text(json.dumps([[1, 0], [0, 1]]))
    code, out = _capture(capsys, ["pi-check", "--type", "A(0,1)", "--roots", str(path)])
    assert code == 0

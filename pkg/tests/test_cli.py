import json
from pathlib import Path

from affinechar.cli import main
from golden import CHI_VACUUM_A4

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_permweights_zero_orbit(capsys):
    code, out, _ = run(
        capsys,
        "permweights", "--rank", "4", "--level", "0",
        "--labels", "0,0,0,0", "--max-depth", "8",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "(0,0,0,0)_0"
    assert lines[1] == "(1,0,0,1)_1"
    payload = json.loads(out[out.index("["):])
    assert len(payload) == 32


def test_permweights_vacuum_orbit_both_methods(capsys):
    outputs = []
    for method in ("translation", "lemma"):
        code, out, _ = run(
            capsys,
            "permweights", "--rank", "4", "--level", "1",
            "--labels", "0,0,0,0", "--max-depth", "8", "--method", method,
        )
        assert code == 0
        outputs.append(out)
    assert outputs[0] == outputs[1]
    payload = json.loads(outputs[0][outputs[0].index("["):])
    assert len(payload) == 23
    with open(DATA / "permweights_A4_vacuum_M8.json") as fh:
        assert payload == json.load(fh)


def test_permweights_depth_zero(capsys):
    code, out, _ = run(
        capsys,
        "permweights", "--rank", "2", "--level", "1",
        "--labels", "0,0", "--max-depth", "0",
    )
    assert code == 0
    assert out.splitlines()[0] == "(0,0)_0"


def test_permweights_csv(capsys, tmp_path):
    target = tmp_path / "records.csv"
    code, out, _ = run(
        capsys,
        "permweights", "--rank", "4", "--level", "0", "--labels", "0,0,0,0",
        "--max-depth", "2", "--format", "csv", "--out", str(target),
    )
    assert code == 0
    rows = target.read_text().splitlines()
    assert rows[0] == "n1,n2,n3,n4,depth,sign"
    assert rows[1] == "0,0,0,0,0,1"
    assert rows[2] == "1,0,0,1,1,-1"


def test_invalid_weight_exits_2(capsys):
    code, _, err = run(
        capsys,
        "permweights", "--rank", "4", "--level", "0",
        "--labels", "1,0,0,0", "--max-depth", "2",
    )
    assert code == 2
    assert "error:" in err


def test_bad_label_count_exits_2(capsys):
    code, _, err = run(
        capsys,
        "character", "--rank", "4", "--level", "1",
        "--labels", "0,0", "--max-depth", "2",
    )
    assert code == 2
    assert "error:" in err


def test_character_golden(capsys):
    code, out, _ = run(
        capsys,
        "character", "--rank", "4", "--level", "1",
        "--labels", "0,0,0,0", "--max-depth", "7",
    )
    assert code == 0
    data = json.loads(out)
    assert [int(c) for c in data["chi"]["coeffs"]] == list(CHI_VACUUM_A4)
    assert data["anomaly"] == "-1"


def test_character_truncate_validation(capsys):
    code, _, err = run(
        capsys,
        "character", "--rank", "4", "--level", "1",
        "--labels", "0,0,0,0", "--max-depth", "2", "--truncate", "5",
    )
    assert code == 2
    assert "error:" in err


def test_character_csv(capsys):
    code, out, _ = run(
        capsys,
        "character", "--rank", "2", "--level", "1",
        "--labels", "0,0", "--max-depth", "2", "--format", "csv",
    )
    assert code == 0
    assert out.splitlines()[:3] == ["order,value", "0,1", "1,8"]


def test_theta_command(capsys):
    code, out, _ = run(capsys, "theta", "--rank", "4", "--truncate", "8")
    assert code == 0
    data = json.loads(out)
    assert data["coeffs"] == ["1", "20", "30", "60", "60", "120", "40", "180", "150"]


def test_oracle_command(capsys):
    code, out, _ = run(
        capsys,
        "oracle", "--rank", "4", "--level", "1",
        "--labels", "0,0,0,0", "--shells", "2", "--truncate", "10",
    )
    assert code == 0
    data = json.loads(out)
    assert data["guaranteed_order"] == 7
    assert [int(c) for c in data["chi"]["coeffs"]] == list(CHI_VACUUM_A4)
    assert len(data["tpolynomials"]) == 3


def test_compare_pass(capsys):
    code, out, _ = run(
        capsys,
        "compare", "--rank", "4", "--level", "1", "--labels", "0,0,0,0",
        "--max-depth", "8", "--shells", "2",
        "--golden", str(DATA / "chi_A4_vacuum_M7.json"),
    )
    assert code == 0
    assert "RESULT: PASS" in out
    assert out.count(",PASS") == 9


def test_compare_smaller_rank(capsys):
    code, out, _ = run(
        capsys,
        "compare", "--rank", "2", "--level", "1", "--labels", "0,0",
        "--max-depth", "5", "--shells", "2",
    )
    assert code == 0
    assert "RESULT: PASS" in out


def test_compare_corrupted_golden_fails(capsys, tmp_path):
    with open(DATA / "chi_A4_vacuum_M7.json") as fh:
        golden = json.load(fh)
    golden["coeffs"][3] = "501"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(golden))
    code, out, _ = run(
        capsys,
        "compare", "--rank", "4", "--level", "1", "--labels", "0,0,0,0",
        "--max-depth", "7", "--shells", "2", "--golden", str(bad),
    )
    assert code == 1
    assert "RESULT: FAIL (first differing order 3)" in out


def test_output_determinism(capsys):
    argv = [
        "character", "--rank", "3", "--level", "1",
        "--labels", "0,0,0", "--max-depth", "5",
    ]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_format_env_default(capsys, monkeypatch):
    monkeypatch.setenv("AFFINECHAR_FORMAT", "csv")
    code, out, _ = run(capsys, "theta", "--rank", "2", "--truncate", "3")
    assert code == 0
    assert out.splitlines()[0] == "order,value"

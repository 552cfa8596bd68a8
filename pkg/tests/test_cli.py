import json

import pytest

from framedvoa.cli import EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_PASS, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_fusion_ising_text(capsys):
    code, out = run(capsys, "fusion", "--ring", "ising")
    assert code == EXIT_PASS
    assert "h12 x h12 = h0" in out
    assert "h12 x h116 = h116" in out
    assert "h116 x h116 = h0 + h12" in out


def test_fusion_vb_json(capsys):
    code, out = run(capsys, "fusion", "--ring", "vb", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_PASS
    assert data["isomorphism_to_ising"]["passed"] and data["verlinde"]["passed"]


def test_fusion_hamming_simple_currents(capsys):
    code, out = run(capsys, "fusion", "--ring", "hamming", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_PASS
    assert len(data["labels"]) == 32
    assert all(w is not None for w in data["simple_currents"].values())


def test_chars_json(capsys):
    code, out = run(capsys, "chars", "--order", "50", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_PASS
    assert data["checks"]["4372 = 1 + 4371"]
    b1 = data["baby"]["b1"]
    # leading exponent -47/48 + 3/2 = 25/48, stored over the series denominator
    assert b1["terms"][0] == [25 * b1["denom"] // 48, "4371"]
    assert all(r["status"] == "pass" for r in data["s_transform"])


def test_chars_inconclusive_exit(capsys):
    code, _ = run(capsys, "chars", "--order", "3", "--tau", "0.3i", "--series", "ising")
    assert code == EXIT_INCONCLUSIVE


def test_codes_export(capsys):
    code, out = run(capsys, "codes", "--export", "h8", "--format", "json")
    assert code == EXIT_PASS
    assert json.loads(out)["dim"] == 4


def test_codes_stats(capsys):
    code, out = run(capsys, "codes", "--format", "json")
    data = json.loads(out)
    assert data["s_natural"]["dim"] == 7 and data["d_natural"]["dim"] == 41
    assert data["d_flat0"]["dim"] == 40 and data["h8"]["weight_enumerator"] == {"0": 1, "4": 14, "8": 1}


def test_hypothesis_builtin(capsys):
    code, out = run(capsys, "hypothesis", "--pair", "baby", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_PASS
    assert data["condition1"]["passed"] and data["hypothesis3"]["passed"]


def test_hypothesis_file_pair_uncoverable(capsys, tmp_path):
    d = tmp_path / "d.txt"
    s = tmp_path / "s.txt"
    d.write_text("00000000\n")
    s.write_text("11111111\n")
    code, out = run(capsys, "hypothesis", "--pair", f"file:{d},file:{s}", "--format", "json")
    assert code == EXIT_FAIL
    assert json.loads(out)["condition1"]["uncovered"] == ["11111111"]


def test_fock(capsys):
    code, out = run(capsys, "fock", "--max-weight", "4", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_PASS
    assert data["NS"]["checks"]["failed"] == []


@pytest.mark.parametrize(
    "argv",
    [
        ["fusion", "--ring", "nope"],
        ["chars", "--tau=-1i"],
        ["hypothesis", "--pair", "file:/nonexistent,file:/nonexistent"],
        ["codes", "--export", "missing"],
        ["chars", "--tol", "0"],
    ],
)
def test_usage_errors(capsys, argv):
    assert main(argv) == EXIT_USAGE


def test_argparse_errors_exit_3():
    with pytest.raises(SystemExit) as e:
        main(["no-such-command"])
    assert e.value.code == EXIT_USAGE


@pytest.mark.slow
def test_verify_all_deterministic(capsys):
    code1, out1 = run(capsys, "verify-all", "--format", "json")
    code2, out2 = run(capsys, "verify-all", "--format", "json")
    assert code1 == code2 == EXIT_PASS
    assert out1 == out2
    assert json.loads(out1)["status"] == "pass"

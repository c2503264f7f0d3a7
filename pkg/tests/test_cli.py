import io
import json
import subprocess
import sys

import pytest

from crsym.cli import main


def run(argv):
    buf = io.StringIO()
    old = sys.stdout
    sys.stdout = buf
    try:
        # commands write to the default stream captured here
        from crsym import cli

        args = cli.build_parser().parse_args(argv)
        code = args.func(args, out=buf)
    finally:
        sys.stdout = old
    return code, buf.getvalue()


def test_analyze_json_schema():
    code, text = run(["analyze", "|z1|^2 + |z2|^4"])
    assert code == 0
    rec = json.loads(text)
    assert rec["schema"] == "cr-symmetry-report/1"
    assert rec["total_dim"] == 9 and rec["special_family"]["kind"] == "HermitianSum"
    emb = rec["embedding"]
    assert emb["maps_into"] and emb["f_related"] and emb["source_tangent"] and emb["ambient_tangent"]


def test_analyze_markdown_golden():
    code, text = run(["analyze", "Re(z1*conj(z2)^2)", "--format", "md"])
    assert code == 0
    assert "dim aut = **10**" in text
    assert "TubeCross(2)" in text


def test_analyze_invalid_model_exit_2():
    assert main(["analyze", "z1*conj(z2)"]) == 2
    assert main(["analyze", "z3 + 1"]) == 2


def test_analyze_unknown_at_bound_exit_3():
    code, text = run(["analyze", "|z1|^2 + |z2|^4", "--bound", "1"])
    assert code == 3
    assert json.loads(text)["nondegeneracy"] == "UnknownAtBound"


def test_analyze_degenerate():
    # a model missing z2 has infinite multitype and is rejected as invalid
    assert main(["analyze", "|z1|^2"]) == 2
    code, text = run(["analyze", "|z1|^2*|z2|^2"])
    rec = json.loads(text)
    assert code == 0 and rec["nondegeneracy"] == "Degenerate" and rec["total_dim"] is None


def test_census():
    code, text = run(["census"])
    rec = json.loads(text)
    assert code == 0 and rec["ok"] and rec["eight_absent"]
    assert rec["observed_dims"] == [2, 3, 4, 5, 6, 7, 9, 10]


def test_census_mismatch_exit_1(tmp_path):
    path = tmp_path / "zoo.json"
    path.write_text(json.dumps([{"name": "bad", "model": "|z1|^2 + |z2|^4", "expected_total_dim": 8}]))
    assert main(["census", "--zoo", str(path)]) == 1


def test_census_bad_zoo_exit_2(tmp_path):
    path = tmp_path / "zoo.json"
    path.write_text("[]")
    assert main(["census", "--zoo", str(path)]) == 2
    path.write_text("{not json")
    assert main(["census", "--zoo", str(path)]) == 2
    assert main(["census", "--zoo", str(tmp_path / "missing.json")]) == 2


def test_oracle():
    code, text = run(["oracle", "Re(z1*conj(z2)^2)"])
    rec = json.loads(text)
    assert code == 0 and rec["agree"] and rec["graded_dim"] == rec["bruteforce_dim"] == 10
    code, text = run(["oracle", "Re(z1*conj(z2)^2)", "--bound", "1"])
    rec = json.loads(text)
    assert code == 0 and rec["warnings"] and rec["warnings"][0].startswith("UnknownCoverage")


def test_sweep_small_deterministic():
    a = run(["sweep", "--count", "5", "--seed", "7"])
    b = run(["sweep", "--count", "5", "--seed", "7"])
    assert a == b and a[0] == 0
    assert sum(json.loads(a[1])["histogram"].values()) == 5


def test_sweep_validation():
    assert main(["sweep", "--count", "-1"]) == 2
    assert main(["sweep", "--coefficients", "x"]) == 2


def test_zoo_listing():
    code, text = run(["zoo", "--format", "md"])
    assert code == 0 and "tube_cross_l2" in text


def test_bad_arguments():
    assert main(["analyze"]) == 2
    assert main(["frobnicate"]) == 2


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "crsym.cli", "analyze", "|z1|^4 + |z2|^4"], capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)["total_dim"] == 5


def test_output_is_deterministic():
    assert run(["analyze", "Re(z1*conj(z1)^3) + Re(z2)^3"]) == run(["analyze", "Re(z1*conj(z1)^3) + Re(z2)^3"])
